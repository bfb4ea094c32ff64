'''
Brute-force singular point scan over small prime fields

Every point of P^3(F_q) is visited in normalized form (first nonzero coordinate 1) and
the partials of the surface are evaluated on it with numpy, one leading-coordinate
stratum at a time. Nothing here touches the Groebner engine, so agreement with
:func:`tricusp.singular.find_singular_points` is an independent check.
'''
import logging
from dataclasses import dataclass, field

import numpy as np
from sympy import isprime

from tricusp.field import PrimeField
from tricusp.poly import Poly
from tricusp.families import SurfaceInstance
from tricusp.singular import SingularScheme, find_singular_points
from tricusp.errors import FieldTooLarge, NotASurface


logger = logging.getLogger(__name__)

MAX_ORACLE_PRIME = 257
DEFAULT_ORACLE_PRIME = 101


@dataclass
class ScanResult:
    q: int
    points: list[tuple[int, int, int, int]]
    evaluations: int
    scanned: int
    equations: list[str] = field(default_factory=list)

    def __len__(self):
        return len(self.points)

    def recheck(self, phi: Poly) -> bool:
        '''Re-evaluate the partials at every reported point with exact arithmetic.'''
        F = PrimeField(self.q)
        grads = [g.change_field(F) for g in phi.gradient()]
        return all(g.evaluate(pt, F).is_zero() for pt in self.points for g in grads)


class _Evaluator:
    '''Vectorized evaluation of a list of forms over F_q.'''

    def __init__(self, polys: list[Poly], q: int):
        self.q = q
        self.polys = []
        maxdeg = 0
        for f in polys:
            exps = np.array(f.monomials(), dtype=np.int64).reshape(-1, 4)
            coeffs = np.array([f.coefficient(m) for m in f.monomials()], dtype=np.int64)
            self.polys.append((exps, coeffs))
            if len(exps):
                maxdeg = max(maxdeg, int(exps.max()))

        # powers[a, e] = a^e mod q
        base = np.arange(q, dtype=np.int64)
        self.powers = np.ones((q, maxdeg + 1), dtype=np.int64)
        for e in range(1, maxdeg + 1):
            self.powers[:, e] = self.powers[:, e - 1] * base % q

    def vanishing(self, pts: np.ndarray) -> np.ndarray:
        '''Boolean mask of the rows of ``pts`` where every form vanishes.'''
        q = self.q
        mask = np.ones(len(pts), dtype=bool)
        for exps, coeffs in self.polys:
            total = np.zeros(len(pts), dtype=np.int64)
            for m, c in zip(exps, coeffs):
                term = np.full(len(pts), c, dtype=np.int64)
                for i, e in enumerate(m):
                    if e:
                        term = term * self.powers[pts[:, i], e] % q
                total = (total + term) % q
            mask &= total == 0
            if not mask.any():
                break
        return mask


def _strata(q: int):
    '''Normalized points of P^3(F_q), in blocks of at most q^2 rows, lexicographic.'''
    grid = np.arange(q, dtype=np.int64)
    a, b = np.meshgrid(grid, grid, indexing='ij')
    a, b = a.ravel(), b.ravel()
    n = len(a)

    for x1 in range(q):
        yield np.column_stack([np.ones(n, np.int64), np.full(n, x1, np.int64), a, b])
    yield np.column_stack([np.zeros(n, np.int64), np.ones(n, np.int64), a, b])
    yield np.column_stack([np.zeros(q, np.int64), np.zeros(q, np.int64),
                           np.ones(q, np.int64), grid])
    yield np.array([[0, 0, 0, 1]], dtype=np.int64)


def _check_prime(q: int):
    if q > MAX_ORACLE_PRIME:
        raise FieldTooLarge(f'oracle prime {q} exceeds {MAX_ORACLE_PRIME}')
    if q <= 3 or not isprime(q):
        raise ValueError(f'oracle needs a prime greater than 3, got {q}')


def scan_projective(phi: Poly, q: int = DEFAULT_ORACLE_PRIME) -> ScanResult:
    '''
    All F_q-rational points where the four partials of ``phi`` vanish (together with
    ``phi`` itself when ``q`` divides the degree). Coefficients must be F_q values or
    rationals whose denominators are prime to ``q``.
    '''
    _check_prime(q)
    if phi.ring.nvars != 4 or not phi.is_homogeneous():
        raise NotASurface('expected a homogeneous polynomial in x0..x3')

    f = phi.change_field(PrimeField(q))
    forms = [g for g in f.gradient() if not g.is_zero()]
    if f.degree() % q == 0:
        forms.append(f)

    evaluator = _Evaluator(forms, q)
    points, scanned = [], 0
    for block in _strata(q):
        scanned += len(block)
        hits = block[evaluator.vanishing(block)]
        points.extend(tuple(int(x) for x in row) for row in hits)

    logger.debug(f'scanned {scanned} points of P3(F_{q}), {len(points)} singular')
    return ScanResult(
        q=q,
        points=points,
        evaluations=scanned * len(forms),
        scanned=scanned,
        equations=[g.format() for g in forms],
    )


def compare(scan: ScanResult, scheme: SingularScheme) -> dict:
    '''Rational points of the solver output against the scan.'''
    rational = sorted(tuple(int(c) for c in pt) for pt in scheme.rational_points())
    found = sorted(scan.points)
    return {
        'q': scan.q,
        'scanned': scan.scanned,
        'oracle_points': len(found),
        'rational_points': len(rational),
        'geometric_points': scheme.geometric_count,
        'agree': found == rational and len(found) <= scheme.geometric_count,
    }


def cross_check(instance: SurfaceInstance, q: int = DEFAULT_ORACLE_PRIME) -> bool:
    '''
    True iff the scan over F_q finds exactly the rational points of the solver output.
    The instance is expected to be drawn over F_q; the stored singular scheme is reused
    when it lives there.
    '''
    scan = scan_projective(instance.phi, q)
    F = PrimeField(q)
    scheme = instance.scheme
    if scheme is None or instance.field != F:
        scheme = find_singular_points(instance.phi.change_field(F), seed=instance.seed)

    result = compare(scan, scheme)
    if not result['agree']:
        logger.warning(
            f'{instance.family_tag} seed {instance.seed}: oracle found '
            f'{result["oracle_points"]} points, solver {result["rational_points"]} rational'
        )
    return result['agree']

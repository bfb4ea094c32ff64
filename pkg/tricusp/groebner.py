'''
Gröbner bases and zero-dimensional solving

The engine is a plain Buchberger loop: Gebauer-Möller pair elimination, sugar-degree
pair selection, and a minimalize/interreduce pass at the end. On top of a
zero-dimensional basis, :class:`QuotientAlgebra` provides standard monomials and
multiplication matrices over ``GF(p)``, from which eliminants (characteristic
polynomials of linear forms) and the points of the scheme with their local lengths
are read off.
'''
import math
import random
import logging
from dataclasses import dataclass
from collections.abc import Sequence

from sympy.polys.domains import ZZ, GF
from sympy.polys import galoistools as gt
from sympy.polys.matrices import DomainMatrix

from tricusp.field import Field, FieldElement, PrimeField, residue_field
from tricusp.poly import Poly, PolyRing, MonomialOrder, reduce
from tricusp.errors import FieldMismatch, NotZeroDimensional, DegenerateCoordinates


logger = logging.getLogger(__name__)

INFINITE = math.inf
MAX_RETRIES = 8


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))

def _lcm(a, b) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))

def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))

def _shift(f: Poly, exps) -> Poly:
    return Poly._raw(
        f.ring, {tuple(a + b for a, b in zip(m, exps)): c for m, c in f._terms.items()}
    )

def _dense(coeffs) -> tuple[int, ...]:
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class Ideal:
    generators: tuple[Poly, ...]

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        if not gens:
            raise ValueError('an ideal needs at least one nonzero generator')

        ring = gens[0].ring
        for g in gens[1:]:
            if g.ring.field != ring.field or g.ring.names != ring.names:
                raise FieldMismatch(f'generators from {ring} and {g.ring}')
        object.__setattr__(self, 'generators', gens)

    @classmethod
    def of(cls, *generators: Poly) -> 'Ideal':
        return cls(tuple(generators))

    @property
    def ring(self) -> PolyRing:
        return self.generators[0].ring

    def __add__(self, other):
        extra = other.generators if isinstance(other, Ideal) else tuple(other)
        return Ideal(self.generators + extra)

    def __str__(self):
        return '(' + ', '.join(g.format() for g in self.generators) + ')'


@dataclass(frozen=True)
class GroebnerBasis:
    '''
    Reduced Gröbner basis: monic, interreduced, sorted by increasing leading monomial.
    '''
    basis: tuple[Poly, ...]
    order: MonomialOrder
    source: Ideal

    @property
    def ring(self) -> PolyRing:
        return self.basis[0].ring

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    @property
    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.LM for g in self.basis]

    def normal_form(self, f: Poly) -> Poly:
        return normal_form(f, self)

    def __contains__(self, f: Poly) -> bool:
        return ideal_membership(f, self)

    def is_groebner(self) -> bool:
        '''Buchberger's criterion: every S-polynomial reduces to zero.'''
        basis = list(self.basis)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                _, r = reduce(spoly(basis[i], basis[j]), basis)
                if not r.is_zero():
                    return False
        return True

    def is_zero_dimensional(self) -> bool:
        if self.is_unit():
            return True
        lms = self.leading_monomials
        for i in range(self.ring.nvars):
            pure = any(
                m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i) for m in lms
            )
            if not pure:
                return False
        return True

    def standard_monomials(self) -> list[tuple[int, ...]] | None:
        '''
        Monomials outside the leading-term ideal, increasing in the basis order, or
        ``None`` when there are infinitely many.
        '''
        if self.is_unit():
            return []
        if not self.is_zero_dimensional():
            return None

        n = self.ring.nvars
        lms = self.leading_monomials
        one = (0,) * n
        seen = {one}
        stack = [one]
        standard = []
        while stack:
            m = stack.pop()
            if any(_divides(lm, m) for lm in lms):
                continue
            standard.append(m)
            for i in range(n):
                nm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if nm not in seen:
                    seen.add(nm)
                    stack.append(nm)

        return sorted(standard, key=self.ring.order.key)


def spoly(f: Poly, g: Poly, lcm=None) -> Poly:
    '''S-polynomial of monic ``f`` and ``g``.'''
    lmf, lmg = f.LM, g.LM
    lcm = _lcm(lmf, lmg) if lcm is None else lcm
    s1 = _shift(f, tuple(a - b for a, b in zip(lcm, lmf)))
    s2 = _shift(g, tuple(a - b for a, b in zip(lcm, lmg)))
    return s1 - s2

def minimalize(G: Sequence[Poly]) -> list[Poly]:
    if not G:
        return []
    key = G[0].ring.order.key
    minimal = []
    for f in sorted(G, key=lambda h: key(h.LM)):
        if all(not _divides(g.LM, f.LM) for g in minimal):
            minimal.append(f)
    return minimal

def interreduce(G: Sequence[Poly]) -> list[Poly]:
    reduced = []
    for i, g in enumerate(G):
        _, r = reduce(g, list(G[:i]) + list(G[i + 1:]))
        reduced.append(r.monic())
    return reduced


def buchberger(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    '''
    Reduced Gröbner basis of ``ideal`` for ``order`` (default: the ring's order).

    Pairs are pruned with the Gebauer-Möller criteria as new elements arrive and the
    pair of lowest sugar degree (ties broken by the lcm, then the indices) is reduced
    next, so the result is deterministic for fixed input.
    '''
    ring = ideal.ring if order is None else ideal.ring.with_order(order)
    key = ring.order.key
    gens = [g.with_ring(ring) for g in ideal.generators]

    G: list[Poly] = []
    lms: list[tuple[int, ...]] = []
    sugar: list[int] = []
    pairs: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}

    def update(f: Poly, s: int):
        lmf = f.LM
        n = len(G)

        for (i, j), (_, L) in list(pairs.items()):
            if _divides(lmf, L) and L != _lcm(lms[i], lmf) and L != _lcm(lms[j], lmf):
                del pairs[(i, j)]

        groups: dict[tuple[int, ...], list[int]] = {}
        for i, lm in enumerate(lms):
            groups.setdefault(_lcm(lm, lmf), []).append(i)

        minimal = []
        for L in sorted(groups, key=key):
            if all(not _divides(M, L) for M in minimal):
                minimal.append(L)

        for L in minimal:
            members = groups[L]
            if any(_coprime(lms[i], lmf) for i in members):
                continue
            i = min(members)
            pair_sugar = max(sugar[i] + sum(L) - sum(lms[i]), s + sum(L) - sum(lmf))
            pairs[(i, n)] = (pair_sugar, L)

        G.append(f)
        lms.append(lmf)
        sugar.append(s)

    unit = False
    for g in gens:
        if g.is_constant():
            unit = True
            break
        update(g.monic(), g.degree())

    while pairs and not unit:
        ij = min(pairs, key=lambda p: (pairs[p][0], key(pairs[p][1]), p))
        s, L = pairs.pop(ij)
        _, r = reduce(spoly(G[ij[0]], G[ij[1]], L), G)
        if r.is_zero():
            continue
        if r.is_constant():
            unit = True
            break
        update(r.monic(), s)

    if unit:
        basis = [ring.one]
    else:
        basis = sorted(interreduce(minimalize(G)), key=lambda g: key(g.LM))

    logger.debug(f'basis of {len(basis)} elements from {len(gens)} generators')
    return GroebnerBasis(tuple(basis), ring.order, ideal)


def normal_form(f: Poly, G: GroebnerBasis) -> Poly:
    if f.ring.field != G.ring.field or f.ring.names != G.ring.names:
        raise FieldMismatch(f'{f.ring} and {G.ring}')
    _, r = reduce(f.with_ring(G.ring), list(G.basis))
    return r

def ideal_membership(f: Poly, G: GroebnerBasis) -> bool:
    return normal_form(f, G).is_zero()

def quotient_dimension(G: GroebnerBasis) -> int | float:
    '''Vector-space dimension of the quotient ring, ``INFINITE`` if not finite.'''
    standard = G.standard_monomials()
    return INFINITE if standard is None else len(standard)


class QuotientAlgebra:
    '''
    Finite-dimensional quotient ``k[x]/I`` over a prime field, with the standard
    monomials of ``G`` as basis.
    '''
    def __init__(self, G: GroebnerBasis):
        standard = G.standard_monomials()
        if standard is None:
            raise NotZeroDimensional(f'quotient by {G.source} is infinite-dimensional')
        if not isinstance(G.ring.field, PrimeField):
            raise FieldMismatch(f'quotient algebras need a prime field, got {G.ring.field}')

        self.G = G
        self.ring = G.ring
        self.p = G.ring.field.p
        self.domain = GF(self.p)
        self.basis = standard
        self.index = {m: i for i, m in enumerate(standard)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self, f: Poly) -> list[int]:
        v = [0] * self.dim
        for m, c in normal_form(f, self.G)._terms.items():
            v[self.index[m]] = c
        return v

    def _domain_matrix(self, rows: list[list[int]], ncols: int) -> DomainMatrix:
        K = self.domain
        return DomainMatrix([[K(c) for c in row] for row in rows], (len(rows), ncols), K)

    def matrix(self, u: Poly) -> DomainMatrix:
        '''Matrix of multiplication by ``u``; column j is the image of basis element j.'''
        columns = [self.vector(_shift(u, b)) for b in self.basis]
        rows = [[col[i] for col in columns] for i in range(self.dim)]
        return self._domain_matrix(rows, self.dim)

    def charpoly(self, u: Poly) -> tuple[int, ...]:
        '''Characteristic polynomial of multiplication by ``u``, highest degree first.'''
        if self.dim == 0:
            return (1,)
        return _dense(int(c) % self.p for c in self.matrix(u).charpoly())

    def power_vectors(self, u: Poly, k: int) -> list[list[int]]:
        vectors = []
        power = self.ring.one
        for _ in range(k):
            vectors.append(self.vector(power))
            power = normal_form(power * u, self.G)
        return vectors

    def solve_in_powers(self, u: Poly, targets: Sequence[Poly]) -> list[list[int]] | None:
        '''
        Express each target as a polynomial in ``u`` of degree < dim (coefficients lowest
        degree first), or ``None`` if the powers of ``u`` don't span the quotient.
        '''
        k = self.dim
        powers = self.power_vectors(u, k)
        values = [self.vector(t) for t in targets]
        rows = [[v[r] for v in powers] + [t[r] for t in values] for r in range(k)]

        reduced, pivots = self._domain_matrix(rows, k + len(targets)).rref()
        if tuple(pivots) != tuple(range(k)):
            return None

        entries = reduced.to_Matrix().tolist()
        return [[int(entries[r][k + i]) % self.p for r in range(k)]
                for i in range(len(targets))]


@dataclass(frozen=True)
class Eliminant:
    '''
    Characteristic polynomial of a linear form acting on a zero-dimensional quotient:
    its roots are the values of the form at the points, each repeated by the local
    length.
    '''
    coeffs: tuple[int, ...]
    field: PrimeField
    direction: Poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def factor(self) -> list[tuple[tuple[int, ...], int]]:
        '''Monic irreducible factors with multiplicities, in a canonical order.'''
        _, factors = gt.gf_factor(list(self.coeffs), self.field.p, ZZ)
        return [(_dense(f), int(e)) for f, e in factors]

    def as_poly(self, name: str = 't') -> Poly:
        ring = PolyRing(self.field, (name,))
        deg = self.degree
        return Poly(ring, {(deg - i,): c for i, c in enumerate(self.coeffs)})

    def __str__(self):
        return self.as_poly().format()


@dataclass(frozen=True)
class PointWithMultiplicity:
    '''
    Geometric point of a zero-dimensional scheme with coordinates in ``field`` (raw
    values), the smallest extension of the base field containing them.
    '''
    field: Field
    coordinates: tuple
    multiplicity: int

    @property
    def coords(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coordinates)

    @property
    def degree(self) -> int:
        return self.field.degree

    def is_rational(self) -> bool:
        return self.field.degree == 1

    def sort_key(self):
        modulus = getattr(self.field, 'modulus', ())
        if isinstance(self.field, PrimeField):
            flat = tuple((c,) for c in self.coordinates)
        else:
            flat = tuple(self.field.coefficients(c) for c in self.coordinates)
        return (self.degree, modulus, flat)


def _univariate(coeffs, u: Poly, G: GroebnerBasis | None = None) -> Poly:
    # Horner, reducing along the way when a basis is given
    result = u.ring.zero
    for c in coeffs:
        result = result * u + u.ring.constant(c)
        if G is not None:
            result = normal_form(result, G)
    return result

def _power_nf(f: Poly, n: int, G: GroebnerBasis) -> Poly:
    result = G.ring.one
    while n:
        if n & 1:
            result = normal_form(result * f, G)
        f = normal_form(f * f, G)
        n >>= 1
    return result

def _multiplicity(chi, g, p: int) -> int:
    count = 0
    chi = list(chi)
    while True:
        q, r = gt.gf_div(chi, list(g), p, ZZ)
        if r:
            return count
        count += 1
        chi = q

def random_linear_form(ring: PolyRing, rng: random.Random) -> Poly:
    K = ring.field
    terms = {}
    for i in range(ring.nvars):
        c = K.random(rng)
        while K.is_zero(c):
            c = K.random(rng)
        terms[tuple(int(j == i) for j in range(ring.nvars))] = c
    return Poly(ring, terms)


def _basis_of(ideal: 'Ideal | GroebnerBasis') -> GroebnerBasis:
    return ideal if isinstance(ideal, GroebnerBasis) else buchberger(ideal)

def radical(ideal: 'Ideal | GroebnerBasis') -> GroebnerBasis:
    '''
    Radical of a zero-dimensional ideal over a prime field: adjoin, for every variable,
    the squarefree part of its eliminant evaluated at that variable.
    '''
    G = _basis_of(ideal)
    if G.is_unit():
        return G

    A = QuotientAlgebra(G)
    p = A.p
    extra = []
    for x in G.ring.gens:
        chi = A.charpoly(x)
        extra.append(_univariate(_dense(gt.gf_sqf_part(list(chi), p, ZZ)), x))
    return buchberger(Ideal(G.basis + tuple(extra)))


def eliminate_to_univariate(
    ideal: 'Ideal | GroebnerBasis',
    direction: Poly | None = None,
    seed=0,
    max_retries: int = MAX_RETRIES,
) -> Eliminant:
    '''
    Eliminant of ``ideal`` along ``direction``. Without a direction, random linear forms
    are drawn from ``seed`` until one separates the points (squarefree eliminant on the
    radical), at most ``max_retries`` times.
    '''
    G = _basis_of(ideal)
    A = QuotientAlgebra(G)
    field = G.ring.field

    if direction is not None:
        return Eliminant(A.charpoly(direction.with_ring(G.ring)), field, direction)

    R = QuotientAlgebra(radical(G))
    rng = random.Random(seed)
    for attempt in range(max_retries):
        u = random_linear_form(G.ring, rng)
        if gt.gf_sqf_p(list(R.charpoly(u)), A.p, ZZ):
            return Eliminant(A.charpoly(u), field, u)
        logger.debug(f'linear form {u} does not separate points (attempt {attempt + 1})')

    raise DegenerateCoordinates(f'no separating linear form after {max_retries} draws')


def _orbit_points(
    J: GroebnerBasis,
    u: Poly,
    g: tuple[int, ...],
    multiplicity: int,
    generators: Sequence[Poly],
) -> list[PointWithMultiplicity]:
    '''
    The Frobenius orbit of points of the radical ``J`` on which ``u`` is a root of the
    irreducible ``g``; ``u`` generates the residue field there.
    '''
    p = J.ring.field.p
    k = len(g) - 1
    O = buchberger(Ideal(J.basis + (_univariate(g, u, J),)))
    A = QuotientAlgebra(O)
    if A.dim != k:
        raise DegenerateCoordinates(f'orbit of degree {k} has quotient dimension {A.dim}')

    solution = A.solve_in_powers(u, O.ring.gens)
    if solution is None:
        raise DegenerateCoordinates(f'linear form does not generate the orbit field')

    L = residue_field(p, g)
    if k == 1:
        base = tuple(h[0] for h in solution)
        conjugates = [base]
    else:
        base = tuple(L.from_coefficients(h) for h in solution)
        conjugates = [tuple(L.frobenius(c, j) for c in base) for j in range(k)]

    points = []
    for coords in conjugates:
        for f in generators:
            if not L.is_zero(f._eval(coords, L)):
                raise DegenerateCoordinates(f'extracted point does not satisfy {f}')
        points.append(PointWithMultiplicity(L, coords, multiplicity))
    return points


def solve_points(
    ideal: 'Ideal | GroebnerBasis',
    seed=0,
    max_retries: int = MAX_RETRIES,
) -> list[PointWithMultiplicity]:
    '''
    All geometric points of a zero-dimensional ideal over a prime field, each over its
    residue field and with its local length; the lengths add up to the quotient
    dimension.

    A random linear form ``u`` is drawn and its eliminant on the radical is factored.
    Each simple irreducible factor is an orbit of points separated by ``u``: the
    coordinates are polynomials in ``u`` there, and the exponent of the factor in the
    eliminant of the ideal itself is the local length. Factors that repeat on the
    radical belong to points ``u`` fails to separate; they are cut out and retried with
    a fresh form, up to ``max_retries`` nested draws.
    '''
    G = _basis_of(ideal)
    source = G.source.generators
    A = QuotientAlgebra(G)
    if A.dim == 0:
        return []

    p = A.p
    rng = random.Random(seed)
    points: list[PointWithMultiplicity] = []
    work = [(radical(G), G, 0)]
    while work:
        J, I, draws = work.pop()
        AJ, AI = QuotientAlgebra(J), QuotientAlgebra(I)
        u = random_linear_form(G.ring, rng)
        chi_J = AJ.charpoly(u)
        chi_I = AI.charpoly(u)

        _, factors = gt.gf_factor(list(chi_J), p, ZZ)
        for g, e in factors:
            g = _dense(g)
            if e == 1:
                m = _multiplicity(chi_I, g, p)
                points.extend(_orbit_points(J, u, g, m, source))
                continue

            if draws + 1 >= max_retries:
                raise DegenerateCoordinates(
                    f'points still collide after {max_retries} linear forms'
                )
            logger.debug(f'{e} points share a value of {u}, splitting them off')
            J_next = buchberger(Ideal(J.basis + (_univariate(g, u, J),)))
            cut = _power_nf(_univariate(g, u, I), AI.dim, I)
            I_next = buchberger(Ideal(I.basis + (cut,))) if cut else I
            work.append((J_next, I_next, draws + 1))

    total = sum(pt.multiplicity for pt in points)
    if total != A.dim:
        raise DegenerateCoordinates(f'local lengths add up to {total}, expected {A.dim}')

    return sorted(points, key=PointWithMultiplicity.sort_key)

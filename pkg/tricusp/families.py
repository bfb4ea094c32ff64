'''
Surface families with minimal three-divisible sets of cusps

Each constructor draws the generic ingredients of its family from a seeded generator,
assembles the surface equation together with the contact polynomials that certify
three-divisibility, and screens the result: the singular locus is computed and the
instance is accepted only if it has exactly the predicted cusps on the predicted
loci. Rejected draws are retried with derived seeds, at most ``max_reseeds`` times.

Certificate names: ``s1``, ``s2`` are the contact cubics, ``s`` the contact quadric;
the second sextic family uses planes ``l1``, ``l2``, quadric ``g`` and quartic ``f``.
'''
import random
import logging
from fractions import Fraction
from dataclasses import dataclass, field

from tricusp.field import Field, PrimeField
from tricusp.poly import Poly, PolyRing, projective_ring, exact_div, localize, DEFAULT_PRIME
from tricusp.singular import (
    SingularScheme,
    SingularPoint,
    check_surface,
    find_singular_points,
    A2,
)
from tricusp.errors import (
    DegenerateInstance,
    ConstructionFailed,
    DegenerateCoordinates,
    PositiveDimensionalSingularLocus,
)


logger = logging.getLogger(__name__)

MAX_RESEEDS = 16

FAMILY_DEGREES = {
    'cubic3': 3,
    'quartic6': 4,
    'quintic2a': 5,
    'quintic_case3': 5,
    'sexticA': 6,
    'sexticB': 6,
}

FAMILY_TAGS = tuple(FAMILY_DEGREES)

MINIMAL_TABLE = {3: 3, 4: 6, 5: 12, 6: 18}

TABLE_SOURCES = {
    3: 'the cubic x1*x2*x3 - x0^3 with three cusps',
    4: 'quartic cut by two contact cubics, with a residual quadric',
    5: 'quintics of subcase 2a and case 3, with a residual plane',
    6: 'lower bound for sextics, attained by the families sexticA and sexticB',
}

LINE_CUSP_WEIGHTS = (Fraction(1, 3), Fraction(1, 2), Fraction(1, 2))


def minimal_table() -> dict[int, int]:
    return dict(MINIMAL_TABLE)


@dataclass(frozen=True)
class LocusExpectation:
    '''
    Points where all ``equations`` vanish and ``off`` (if given) does not. ``count`` is
    the expected number of cusps there; ``None`` marks a locus that is only reported.
    '''
    name: str
    equations: tuple[Poly, ...]
    count: int | None
    off: Poly | None = None

    def contains(self, point: SingularPoint) -> bool:
        L = point.field
        coords = point.projective()
        if any(not L.is_zero(eq._eval(coords, L)) for eq in self.equations):
            return False
        return self.off is None or not L.is_zero(self.off._eval(coords, L))

    def observed(self, points) -> int:
        return sum(self.contains(pt) for pt in points)

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'equations': [eq.format() for eq in self.equations],
            'off': None if self.off is None else self.off.format(),
            'count': self.count,
        }


@dataclass(frozen=True)
class PredictedCensus:
    cusps: int
    loci: tuple[LocusExpectation, ...]
    source: str

    def __post_init__(self):
        asserted = [locus.count for locus in self.loci if locus.count is not None]
        if asserted and sum(asserted) != self.cusps:
            raise ValueError(f'locus counts {asserted} do not add up to {self.cusps}')


@dataclass(frozen=True)
class SurfaceInstance:
    phi: Poly
    family_tag: str
    certificate: dict[str, Poly]
    seed: int
    predicted: PredictedCensus
    residual: Poly | None = None
    components: dict[str, Poly] = field(default_factory=dict)
    parameters: dict[str, str] = field(default_factory=dict)
    attempts: int = 1
    rejections: tuple[str, ...] = ()
    scheme: SingularScheme | None = field(default=None, compare=False, repr=False)

    @property
    def degree(self) -> int:
        return self.phi.degree()

    @property
    def field(self) -> Field:
        return self.phi.field


@dataclass
class _Draft:
    phi: Poly
    certificate: dict[str, Poly]
    predicted: PredictedCensus
    residual: Poly | None = None
    components: dict[str, Poly] = field(default_factory=dict)
    parameters: dict[str, str] = field(default_factory=dict)
    tag: str | None = None


def _screen(draft: _Draft, seed) -> tuple[str | None, SingularScheme | None]:
    '''Reason for rejecting ``draft``, or ``None`` with the verified singular scheme.'''
    phi = draft.phi
    for name, factor in {**draft.certificate, **draft.components}.items():
        if 0 < factor.degree() < phi.degree() and exact_div(phi, factor)[1]:
            return f'{name} divides the equation', None

    try:
        scheme = find_singular_points(phi, seed=seed)
    except PositiveDimensionalSingularLocus as exc:
        return f'positive-dimensional singular locus (chart {exc.chart})', None
    except DegenerateCoordinates as exc:
        return f'degenerate coordinates ({exc})', None

    n = draft.predicted.cusps
    if scheme.geometric_count != n:
        return f'wrong count: {scheme.geometric_count} singular points, expected {n}', scheme

    bad = [pt.classification for pt in scheme.points if pt.classification != A2]
    if bad:
        return f'non-A2 point ({bad[0]})', scheme

    for locus in draft.predicted.loci:
        if locus.count is None:
            continue
        seen = locus.observed(scheme.points)
        if seen != locus.count:
            return f'{seen} cusps on {locus.name}, expected {locus.count}', scheme

    return None, scheme


def _construct(
    tag: str,
    build,
    seed,
    field: Field | None,
    verify: bool,
    max_reseeds: int,
    failure=DegenerateInstance,
    **params,
) -> SurfaceInstance:
    ring = projective_ring(field or PrimeField(DEFAULT_PRIME))

    rejections = []
    for attempt in range(max_reseeds):
        rng = random.Random(seed if attempt == 0 else f'{seed}/{attempt}')
        draft = build(ring, rng, attempt=attempt, max_reseeds=max_reseeds, **params)

        scheme = None
        if verify:
            reason, scheme = _screen(draft, seed)
            if reason is not None:
                logger.info(f'{tag} seed {seed} attempt {attempt + 1} rejected: {reason}')
                rejections.append(reason)
                continue

        return SurfaceInstance(
            phi=draft.phi,
            family_tag=draft.tag or tag,
            certificate=draft.certificate,
            seed=seed,
            predicted=draft.predicted,
            residual=draft.residual,
            components=draft.components,
            parameters=draft.parameters,
            attempts=attempt + 1,
            rejections=tuple(rejections),
            scheme=scheme,
        )

    raise failure(
        f'{tag}: no instance passed verification for seed {seed} within {max_reseeds} '
        f'attempts (last: {rejections[-1]})'
    )


# -- cubic --------------------------------------------------------------------------
def _build_cubic(ring: PolyRing, rng, **_) -> _Draft:
    x0, x1, x2, x3 = ring.gens
    points = LocusExpectation(
        'coordinate points [0:1:0:0], [0:0:1:0], [0:0:0:1]',
        (x0, x1 * x2, x1 * x3, x2 * x3),
        3,
    )
    return _Draft(
        phi=x1 * x2 * x3 - x0**3,
        certificate={},
        predicted=PredictedCensus(3, (points,), TABLE_SOURCES[3]),
    )

def cubic_three_cusps(field: Field | None = None, verify: bool = True) -> SurfaceInstance:
    return _construct('cubic3', _build_cubic, 0, field, verify, 1)


# -- quintics -----------------------------------------------------------------------
def _quintic_draws(ring: PolyRing, rng):
    l  = ring.random_homogeneous(1, rng)
    q1 = ring.random_homogeneous(2, rng)
    q2 = ring.random_homogeneous(2, rng)
    return l, q1, q2

def _plane_quotient(r: Poly, plane: Poly) -> Poly:
    phi, ok = exact_div(r, plane)
    if not ok:
        raise DegenerateInstance(f'{plane} does not divide the contact product')
    return phi

def _predicted_2a(ring: PolyRing, s, s1, s2) -> PredictedCensus:
    x0 = ring.gen(0)
    return PredictedCensus(12, (
        LocusExpectation('s = s1 = s2 = 0, x0 != 0', (s, s1, s2), 12, off=x0),
        LocusExpectation('plane x0 = 0', (x0,), 0),
    ), TABLE_SOURCES[5])

def _predicted_case3(ring: PolyRing, s, s1, s2, q1, q2) -> PredictedCensus:
    x0, x1 = ring.gen(0), ring.gen(1)
    return PredictedCensus(12, (
        LocusExpectation('s = s1 = s2 = 0, x0 != 0', (s, s1, s2), 8, off=x0),
        LocusExpectation('line x0 = x1 = 0, q1*q2 = 0', (x0, x1, q1 * q2), 4),
    ), TABLE_SOURCES[5])

def _build_quintic_2a(ring: PolyRing, rng, **_) -> _Draft:
    x0, x1, x2, x3 = ring.gens
    l, q1, q2 = _quintic_draws(ring, rng)

    s  = x1 * x2 + x0 * l
    s1 = x1**3 + x0 * q1
    s2 = x2**3 + x0 * q2
    return _Draft(
        phi=_plane_quotient(s1 * s2 - s**3, x0),
        certificate={'s1': s1, 's2': s2, 's': s},
        predicted=_predicted_2a(ring, s, s1, s2),
        residual=x0,
        components={'l': l, 'q1': q1, 'q2': q2},
    )

def _build_quintic_case3(ring: PolyRing, rng, **_) -> _Draft:
    x0, x1, x2, x3 = ring.gens
    l, q1, q2 = _quintic_draws(ring, rng)

    s  = x1**2 + x0 * l
    s1 = x1**3 + x0 * q1
    s2 = x1**3 + x0 * q2
    phi = (x1**3 * (q1 + q2) + x0 * q1 * q2 - 3 * x1**4 * l
           - 3 * x0 * x1**2 * l**2 - x0**2 * l**3)
    if s1 * s2 - s**3 != x0 * phi:
        raise DegenerateInstance('case 3 equation does not match its contact product')

    return _Draft(
        phi=phi,
        certificate={'s1': s1, 's2': s2, 's': s},
        predicted=_predicted_case3(ring, s, s1, s2, q1, q2),
        residual=x0,
        components={'l': l, 'q1': q1, 'q2': q2},
    )

def _build_quintic_degeneration(ring: PolyRing, rng, t=0, **_) -> _Draft:
    x0, x1, x2, x3 = ring.gens
    l, q1, q2 = _quintic_draws(ring, rng)

    t = ring.field.coerce(t)
    m = x1 + ring.constant(t) * x2
    s  = x1 * m + x0 * l
    s1 = x1**3 + x0 * q1
    s2 = m**3 + x0 * q2

    merged = ring.field.is_zero(t)
    if merged:
        predicted = _predicted_case3(ring, s, s1, s2, q1, q2)
    else:
        predicted = _predicted_2a(ring, s, s1, s2)

    return _Draft(
        phi=_plane_quotient(s1 * s2 - s**3, x0),
        certificate={'s1': s1, 's2': s2, 's': s},
        predicted=predicted,
        residual=x0,
        components={'l': l, 'q1': q1, 'q2': q2},
        # the tag names the limit family; this names the call that reproduces the instance
        parameters={'constructor': 'quintic_degeneration', 't': ring.field.format(t)},
        tag='quintic_case3' if merged else 'quintic2a',
    )

def quintic_2a(
    seed,
    field: Field | None = None,
    verify: bool = True,
    max_reseeds: int = MAX_RESEEDS,
) -> SurfaceInstance:
    '''
    Subcase 2a quintic: ``s = x1*x2 + x0*l``, ``s1 = x1^3 + x0*q1``,
    ``s2 = x2^3 + x0*q2`` and ``phi = (s1*s2 - s^3) / x0``. Twelve cusps, none on
    ``x0 = 0``.
    '''
    return _construct('quintic2a', _build_quintic_2a, seed, field, verify, max_reseeds)

def quintic_case3(
    seed,
    field: Field | None = None,
    verify: bool = True,
    max_reseeds: int = MAX_RESEEDS,
) -> SurfaceInstance:
    '''
    Case 3 quintic ``x1^3 (q1 + q2) + x0 q1 q2 - 3 x1^4 l - 3 x0 x1^2 l^2 - x0^2 l^3``:
    eight cusps off ``x0 = 0`` where ``s = s1 = s2 = 0`` and four on the line
    ``x0 = x1 = 0`` where ``q1*q2`` vanishes.
    '''
    return _construct('quintic_case3', _build_quintic_case3, seed, field, verify, max_reseeds)

def quintic_degeneration(
    seed,
    t=0,
    field: Field | None = None,
    verify: bool = True,
    max_reseeds: int = MAX_RESEEDS,
) -> SurfaceInstance:
    '''
    Subcase 2a quintic whose two lines ``x0 = x1 = 0`` and ``x0 = x1 + t*x2 = 0`` merge
    at ``t = 0``, where it coincides with :func:`quintic_case3` for the same seed.
    '''
    return _construct(
        'quintic_degeneration', _build_quintic_degeneration, seed, field, verify,
        max_reseeds, t=t,
    )


# -- sextics ------------------------------------------------------------------------
def _build_sextic_a(ring: PolyRing, rng, **_) -> _Draft:
    s1 = ring.random_homogeneous(3, rng)
    s2 = ring.random_homogeneous(3, rng)
    s  = ring.random_homogeneous(2, rng)
    return _Draft(
        phi=s1 * s2 - s**3,
        certificate={'s1': s1, 's2': s2, 's': s},
        predicted=PredictedCensus(18, (
            LocusExpectation('s = s1 = s2 = 0', (s, s1, s2), 18),
        ), TABLE_SOURCES[6]),
        residual=ring.one,
    )

def _build_sextic_b(ring: PolyRing, rng, **_) -> _Draft:
    l1 = ring.random_homogeneous(1, rng)
    l2 = ring.random_homogeneous(1, rng)
    g  = ring.random_homogeneous(2, rng)
    f  = ring.random_homogeneous(4, rng)
    return _Draft(
        phi=l1 * l2 * f - g**3,
        certificate={'l1': l1, 'l2': l2, 'g': g, 'f': f},
        predicted=PredictedCensus(18, (
            LocusExpectation('l1 = l2 = g = 0', (l1, l2, g), 2),
            LocusExpectation('l1 = f = g = 0', (l1, f, g), 8),
            LocusExpectation('l2 = f = g = 0', (l2, f, g), 8),
        ), TABLE_SOURCES[6]),
    )

def sextic_A(
    seed,
    field: Field | None = None,
    verify: bool = True,
    max_reseeds: int = MAX_RESEEDS,
) -> SurfaceInstance:
    '''Generic ``s1*s2 - s^3``: eighteen cusps at ``s = s1 = s2 = 0``.'''
    return _construct('sexticA', _build_sextic_a, seed, field, verify, max_reseeds)

def sextic_B(
    seed,
    field: Field | None = None,
    verify: bool = True,
    max_reseeds: int = MAX_RESEEDS,
) -> SurfaceInstance:
    '''Generic ``l1*l2*f - g^3``: eighteen cusps split 2 + 8 + 8.'''
    return _construct('sexticB', _build_sextic_b, seed, field, verify, max_reseeds)


# -- quartic ------------------------------------------------------------------------
def _build_quartic(ring: PolyRing, rng, **_) -> _Draft:
    a   = ring.random_homogeneous(1, rng)
    b   = ring.random_homogeneous(1, rng)
    m1  = ring.random_homogeneous(1, rng)
    m2  = ring.random_homogeneous(1, rng)
    rho = ring.random_homogeneous(2, rng)

    s  = a * b
    s1 = a**3 + rho * m1
    s2 = b**3 + rho * m2
    phi, ok = exact_div(s1 * s2 - s**3, rho)
    if not ok:
        raise DegenerateInstance('residual quadric does not divide the contact product')

    # phi = a^3*m2 + m1*s2 is locally u*v + a^3 wherever a = m1 = s2 = 0, and symmetrically
    return _Draft(
        phi=phi,
        certificate={'s1': s1, 's2': s2, 's': s},
        predicted=PredictedCensus(6, (
            LocusExpectation('s = s1 = s2 = 0', (s, s1, s2), None),
            LocusExpectation('a = m1 = s2 = 0', (a, m1, s2), 3),
            LocusExpectation('b = m2 = s1 = 0', (b, m2, s1), 3),
        ), TABLE_SOURCES[4]),
        residual=rho,
        components={'a': a, 'b': b, 'm1': m1, 'm2': m2, 'rho': rho},
    )

def quartic_six_cusps(
    seed,
    field: Field | None = None,
    verify: bool = True,
    max_reseeds: int = MAX_RESEEDS,
) -> SurfaceInstance:
    '''
    Quartic cut out by the contact cubics ``s1 = a^3 + rho*m1`` and ``s2 = b^3 + rho*m2``
    with contact quadric ``s = a*b``, so that
    ``phi = (s1*s2 - s^3) / rho = a^3*m2 + b^3*m1 + rho*m1*m2``. The six cusps lie three
    each on the lines ``a = m1 = 0`` and ``b = m2 = 0``. Exhausting the reseed budget
    raises ``ConstructionFailed``.
    '''
    return _construct(
        'quartic6', _build_quartic, seed, field, verify, max_reseeds,
        failure=ConstructionFailed,
    )


CONSTRUCTORS = {
    'cubic3': lambda seed, field=None, **kw: cubic_three_cusps(field, kw.get('verify', True)),
    'quartic6': quartic_six_cusps,
    'quintic2a': quintic_2a,
    'quintic_case3': quintic_case3,
    'sexticA': sextic_A,
    'sexticB': sextic_B,
}

def construct(
    tag: str,
    seed=0,
    field: Field | None = None,
    verify: bool = True,
    max_reseeds: int = MAX_RESEEDS,
) -> SurfaceInstance:
    if tag not in CONSTRUCTORS:
        raise ValueError(f'unknown family "{tag}", expected one of {", ".join(FAMILY_TAGS)}')
    if tag == 'cubic3':
        return cubic_three_cusps(field, verify)
    return CONSTRUCTORS[tag](seed, field=field, verify=verify, max_reseeds=max_reseeds)


def line_cusp_local_equation(instance: SurfaceInstance, point: SingularPoint) -> Poly:
    '''
    Local equation of a case 3 quintic at a cusp on the line ``x0 = x1 = 0``, in the
    coordinates ``(x1, x0, y)`` where ``y`` is the linear part of whichever of ``q1``,
    ``q2`` vanishes at the point. Those are the coordinates in which the weights
    ``(1/3, 1/2, 1/2)`` apply.
    '''
    L = point.field
    coords = point.projective()
    if not (L.is_zero(coords[0]) and L.is_zero(coords[1])):
        raise ValueError('point does not lie on the line x0 = x1 = 0')

    q1, q2 = instance.components['q1'], instance.components['q2']
    if L.is_zero(q1._eval(coords, L)):
        q = q1
    elif L.is_zero(q2._eval(coords, L)):
        q = q2
    else:
        raise ValueError('neither q1 nor q2 vanishes at the point')

    f = localize(instance.phi, point.chart, point.coords)
    ql = localize(q, point.chart, point.coords)

    n = f.ring.nvars
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    alpha, beta, gamma = (ql.coefficient(e) for e in unit)
    if L.is_zero(gamma):
        raise ValueError('vanishing quadric is tangent to the line at the point')

    target = PolyRing(L, ('x1', 'x0', 'y'))
    X1, X0, Y = target.gens
    C = target.constant
    v = (Y - C(alpha) * X0 - C(beta) * X1) * C(L.inv(gamma))
    return f.compose([X0, X1, v])


def surface_from_equation(
    phi: Poly,
    certificate: dict[str, Poly] | None = None,
    seed=0,
) -> SurfaceInstance:
    '''
    Wrap a user-supplied surface, optionally with a contact certificate (``s1``, ``s2``,
    ``s``) or a second-family sextic certificate (``l1``, ``l2``, ``g``, ``f``). The
    expected cusp count is the minimal count for the degree.
    '''
    check_surface(phi)
    certificate = dict(certificate or {})
    n = MINIMAL_TABLE.get(phi.degree(), 0)

    loci = ()
    if {'l1', 'l2', 'g', 'f'} <= certificate.keys() and n == 18:
        l1, l2, g, f = (certificate[k] for k in ('l1', 'l2', 'g', 'f'))
        loci = (
            LocusExpectation('l1 = l2 = g = 0', (l1, l2, g), 2),
            LocusExpectation('l1 = f = g = 0', (l1, f, g), 8),
            LocusExpectation('l2 = f = g = 0', (l2, f, g), 8),
        )
    elif {'s1', 's2', 's'} <= certificate.keys() and n:
        contact = (certificate['s'], certificate['s1'], certificate['s2'])
        loci = (LocusExpectation('s = s1 = s2 = 0', contact, n),)

    return SurfaceInstance(
        phi=phi,
        family_tag='custom',
        certificate=certificate,
        seed=seed,
        predicted=PredictedCensus(n, loci, 'user-supplied surface'),
    )

'''
Singular loci of projective surfaces

Projective space is cut into the cells ``U_c = {x_0 = ... = x_{c-1} = 0, x_c = 1}``.
Each cell is checked for finiteness with its cell-constrained Jacobian ideal; nonempty
cells are then solved in the full chart ``{x_c = 1}`` so that every point carries its
Tjurina number (the local length of the Jacobian scheme), and only the points lying in
the cell are kept. Every singular point is therefore reported exactly once.
'''
import logging
from fractions import Fraction
from collections import Counter
from dataclasses import dataclass
from collections.abc import Sequence

from tricusp.field import Field, FieldElement, PrimeField
from tricusp.poly import Poly
from tricusp.groebner import (
    INFINITE,
    Ideal,
    PointWithMultiplicity,
    buchberger,
    solve_points,
    quotient_dimension,
)
from tricusp.errors import PositiveDimensionalSingularLocus, NotSingular, NotASurface


logger = logging.getLogger(__name__)

A1 = 'A1'
A2 = 'A2'
NON_ADE = 'non-ADE'


@dataclass(frozen=True)
class SingularPoint:
    '''
    Singular point in cell ``chart``. ``coordinates`` are raw values of ``field`` for the
    chart variables (all projective variables except ``x_chart``, in order).
    '''
    chart: int
    field: Field
    coordinates: tuple
    tjurina: int
    hessian_corank: int
    classification: str

    @property
    def coords(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coordinates)

    @property
    def degree(self) -> int:
        return self.field.degree

    def is_rational(self) -> bool:
        return self.field.degree == 1

    def projective(self) -> tuple:
        '''Raw projective coordinates, normalized so the first nonzero one is 1.'''
        coords = list(self.coordinates)
        coords.insert(self.chart, self.field.one)
        return tuple(coords)

    def sort_key(self):
        modulus = getattr(self.field, 'modulus', ())
        if isinstance(self.field, PrimeField):
            flat = tuple((c,) for c in self.coordinates)
        else:
            flat = tuple(self.field.coefficients(c) for c in self.coordinates)
        return (self.chart, self.degree, modulus, flat)

    def to_dict(self) -> dict:
        if isinstance(self.field, PrimeField):
            coords = list(self.projective())
            modulus = None
        else:
            coords = [list(self.field.coefficients(c)) for c in self.projective()]
            modulus = list(self.field.modulus)

        return {
            'chart': self.chart,
            'degree': self.degree,
            'modulus': modulus,
            'projective': coords,
            'tjurina': self.tjurina,
            'hessian_corank': self.hessian_corank,
            'classification': self.classification,
        }


@dataclass
class SingularScheme:
    phi: Poly
    charts: dict[int, Ideal]
    chart_lengths: dict[int, int]
    points: list[SingularPoint]

    @property
    def total_length(self) -> int:
        return sum(pt.tjurina for pt in self.points)

    @property
    def geometric_count(self) -> int:
        return len(self.points)

    def census(self) -> Counter:
        return Counter(pt.classification for pt in self.points)

    def degree_breakdown(self) -> Counter:
        return Counter(pt.degree for pt in self.points)

    def rational_points(self) -> list[tuple[int, ...]]:
        return [pt.projective() for pt in self.points if pt.is_rational()]

    def all_cusps(self) -> bool:
        return all(pt.classification == A2 for pt in self.points)


def check_surface(phi: Poly):
    if phi.ring.nvars != 4 or not phi.is_homogeneous() or phi.degree() < 2:
        raise NotASurface('expected a homogeneous polynomial of degree >= 2 in x0..x3')


def jacobian_ideal_chart(phi: Poly, chart: int, cell: bool = True) -> Ideal:
    '''
    Jacobian ideal of the surface ``phi`` in the chart ``{x_chart = 1}``: the four
    dehomogenized partials, plus the dehomogenized ``phi`` when the characteristic
    divides the degree. With ``cell`` the coordinates before ``x_chart`` are set to
    zero, restricting the zero set to the cell ``U_chart``.
    '''
    check_surface(phi)
    gens = [g.dehomogenize(chart) for g in phi.gradient()]
    ring = phi.dehomogenize(chart).ring

    p = phi.field.characteristic
    if p and phi.degree() % p == 0:
        gens.append(phi.dehomogenize(chart))
    if cell:
        gens.extend(ring.gen(j) for j in range(chart))

    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        # every partial vanishes identically: the whole chart is singular
        raise PositiveDimensionalSingularLocus(chart)
    return Ideal(tuple(gens))

def tjurina_ideal(f: Poly) -> Ideal:
    '''``(f, ∂f/∂x_i)`` for an affine local equation ``f``.'''
    return Ideal((f, *f.gradient()))


def _rank(matrix: list[list], field: Field) -> int:
    rows = [list(r) for r in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(rank, len(rows)) if not field.is_zero(rows[r][col])), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        for r in range(rank + 1, len(rows)):
            if field.is_zero(rows[r][col]):
                continue
            factor = field.mul(rows[r][col], inv)
            rows[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _second_partials(f: Poly) -> list[list[Poly]]:
    first = f.gradient()
    return [[d.diff(j) for j in range(f.ring.nvars)] for d in first]

def hessian_corank(f: Poly, field: Field, coordinates: Sequence, second=None) -> int:
    second = second or _second_partials(f)
    H = [[h._eval(coordinates, field) for h in row] for row in second]
    return f.ring.nvars - _rank(H, field)


def local_invariants(f: Poly, point: PointWithMultiplicity, second=None) -> tuple[int, int]:
    '''
    ``(tjurina, hessian_corank)`` of the affine local equation ``f`` at ``point``, a
    point of the Jacobian scheme of ``f`` (as returned by :func:`solve_points` on
    :func:`tjurina_ideal` or on the chart ideal) whose multiplicity is the local length.
    '''
    L, coords = point.field, point.coordinates
    vanishing = [f, *f.gradient()]
    if point.multiplicity < 1 or any(not L.is_zero(g._eval(coords, L)) for g in vanishing):
        raise NotSingular(f'{f} is smooth at the given point')

    return point.multiplicity, hessian_corank(f, L, coords, second)


def classify(tjurina: int, corank: int) -> str:
    '''
    ``A1`` for tau = 1, ``A2`` for tau = 2 with corank 1, ``A<tau>`` for larger tau with
    corank 1, otherwise ``non-ADE``. Exact for isolated singularities in characteristic
    greater than 3.
    '''
    if tjurina == 1:
        return A1
    if corank == 1:
        return A2 if tjurina == 2 else f'A{tjurina}'
    return NON_ADE


def find_singular_points(phi: Poly, seed=0) -> SingularScheme:
    check_surface(phi)

    charts = {}
    for c in range(4):
        ideal = jacobian_ideal_chart(phi, c)
        dim = quotient_dimension(buchberger(ideal))
        if dim == INFINITE:
            raise PositiveDimensionalSingularLocus(c)
        charts[c] = (ideal, dim)

    points = []
    lengths = {}
    for c, (ideal, dim) in charts.items():
        lengths[c] = 0
        if dim == 0:
            continue

        f = phi.dehomogenize(c)
        second = _second_partials(f)
        for pt in solve_points(jacobian_ideal_chart(phi, c, cell=False), seed=seed):
            if any(not pt.field.is_zero(pt.coordinates[j]) for j in range(c)):
                continue
            tjurina, corank = local_invariants(f, pt, second)
            points.append(SingularPoint(
                chart=c,
                field=pt.field,
                coordinates=pt.coordinates,
                tjurina=tjurina,
                hessian_corank=corank,
                classification=classify(tjurina, corank),
            ))
            lengths[c] += tjurina

        logger.debug(f'cell {c}: {lengths[c]} total length')

    points.sort(key=SingularPoint.sort_key)
    return SingularScheme(
        phi=phi,
        charts={c: ideal for c, (ideal, _) in charts.items()},
        chart_lengths=lengths,
        points=points,
    )


def sqh_check(local_eq: Poly, weights: Sequence) -> bool:
    '''
    Weighted principal-part test: true iff the terms of lowest weighted degree of
    ``local_eq`` have an isolated critical point at the origin, i.e. their Jacobian
    ideal is zero-dimensional.
    '''
    weights = [Fraction(w) for w in weights]
    if len(weights) != local_eq.ring.nvars or any(w <= 0 for w in weights):
        raise ValueError(f'need {local_eq.ring.nvars} positive weights, got {weights}')
    if not local_eq.coefficient((0,) * local_eq.ring.nvars) == local_eq.field.zero:
        raise ValueError('local equation must vanish at the origin')
    if local_eq.is_zero():
        return False

    def wdeg(m):
        return sum(w * e for w, e in zip(weights, m))

    lowest = min(wdeg(m) for m in local_eq.as_dict())
    principal = Poly(
        local_eq.ring, {m: c for m, c in local_eq.as_dict().items() if wdeg(m) == lowest}
    )
    grads = [g for g in principal.gradient() if not g.is_zero()]
    if not grads:
        return False
    return buchberger(Ideal(tuple(grads))).is_zero_dimensional()


def change_coordinates(phi: Poly, matrix: Sequence[Sequence[int]]) -> Poly:
    '''Substitute ``x_i -> sum_j matrix[i][j] x_j``.'''
    ring = phi.ring
    K = ring.field
    images = [
        Poly(ring, {tuple(int(k == j) for k in range(ring.nvars)): K.coerce(a)
                    for j, a in enumerate(row)})
        for row in matrix
    ]
    return phi.compose(images)

import random

import pytest

from tricusp import families
from tricusp.field import PrimeField
from tricusp.poly import parse, projective_ring
from tricusp.singular import SingularPoint, A2, change_coordinates, find_singular_points
from tricusp.families import (
    FAMILY_TAGS,
    MINIMAL_TABLE,
    LocusExpectation,
    PredictedCensus,
    construct,
    minimal_table,
    cubic_three_cusps,
    quintic_2a,
    quintic_case3,
    quintic_degeneration,
    sextic_A,
    sextic_B,
    quartic_six_cusps,
    surface_from_equation,
    line_cusp_local_equation,
)
from tricusp.errors import ConstructionFailed, DegenerateInstance, NotASurface


def test_minimal_table():
    assert minimal_table() == {3: 3, 4: 6, 5: 12, 6: 18}

    table = minimal_table()
    table[3] = 0
    assert MINIMAL_TABLE[3] == 3

def test_cubic():
    instance = cubic_three_cusps()
    x0, x1, x2, x3 = instance.phi.ring.gens

    assert instance.phi == x1 * x2 * x3 - x0**3
    assert instance.family_tag == 'cubic3'
    assert instance.scheme.geometric_count == 3
    assert instance.attempts == 1

def test_quintic_identities():
    instance = quintic_2a(0, verify=False)
    s1, s2, s = (instance.certificate[k] for k in ('s1', 's2', 's'))
    x0 = instance.phi.ring.gen(0)

    assert instance.degree == 5
    assert x0 * instance.phi == s1 * s2 - s**3
    assert instance.residual == x0

def test_case3_formula():
    instance = quintic_case3(0, verify=False)
    l, q1, q2 = (instance.components[k] for k in ('l', 'q1', 'q2'))
    x0, x1, x2, x3 = instance.phi.ring.gens

    assert instance.phi == (
        x1**3 * (q1 + q2) + x0 * q1 * q2 - 3 * x1**4 * l
        - 3 * x0 * x1**2 * l**2 - x0**2 * l**3
    )
    assert [locus.count for locus in instance.predicted.loci] == [8, 4]

def test_degeneration_meets_case3():
    merged = quintic_degeneration(0, t=0, verify=False)
    assert merged.family_tag == 'quintic_case3'
    assert merged.phi == quintic_case3(0, verify=False).phi

    split = quintic_degeneration(0, t=3, verify=False)
    assert split.family_tag == 'quintic2a'
    assert split.parameters == {'constructor': 'quintic_degeneration', 't': '3'}
    assert split.phi != merged.phi

    # the recorded parameters rebuild the same surface
    rebuild = getattr(families, split.parameters['constructor'])
    rebuilt = rebuild(split.seed, t=int(split.parameters['t']), verify=False)
    assert rebuilt.phi == split.phi

def test_sextic_identities():
    a = sextic_A(0, verify=False)
    s1, s2, s = (a.certificate[k] for k in ('s1', 's2', 's'))
    assert a.phi == s1 * s2 - s**3
    assert a.residual.is_constant()

    b = sextic_B(0, verify=False)
    l1, l2, g, f = (b.certificate[k] for k in ('l1', 'l2', 'g', 'f'))
    assert b.phi == l1 * l2 * f - g**3
    assert [locus.count for locus in b.predicted.loci] == [2, 8, 8]

def test_quartic_ansatz():
    instance = quartic_six_cusps(0, verify=False)
    s1, s2, s = (instance.certificate[k] for k in ('s1', 's2', 's'))
    a, b, m1, m2, rho = (instance.components[k] for k in ('a', 'b', 'm1', 'm2', 'rho'))

    assert instance.degree == 4
    assert instance.phi * rho == s1 * s2 - s**3
    assert instance.phi == a**3 * m2 + b**3 * m1 + rho * m1 * m2
    assert [locus.count for locus in instance.predicted.loci] == [None, 3, 3]

def test_construction_is_deterministic():
    for tag in FAMILY_TAGS:
        assert construct(tag, 7, verify=False) == construct(tag, 7, verify=False)

    assert construct('sexticA', 1, verify=False) != construct('sexticA', 2, verify=False)

def test_construct_over_other_fields():
    F = PrimeField(101)
    instance = construct('quintic2a', 0, F, verify=False)
    assert instance.field == F

def test_construct_unknown_family():
    with pytest.raises(ValueError):
        construct('septic', 0)

def test_reseeding(monkeypatch):
    calls = []

    def reject_first(draft, seed):
        calls.append(draft.phi)
        return ('forced rejection', None) if len(calls) == 1 else (None, None)

    monkeypatch.setattr(families, '_screen', reject_first)
    instance = sextic_A(0)

    assert instance.attempts == 2
    assert instance.rejections == ('forced rejection',)
    assert instance.phi == calls[1]
    assert calls[0] != calls[1]

    # the second draw comes from the derived seed
    ring = projective_ring()
    rng = random.Random('0/1')
    s1, s2, s = (ring.random_homogeneous(d, rng) for d in (3, 3, 2))
    assert instance.phi == s1 * s2 - s**3

def test_reseed_budget(monkeypatch):
    monkeypatch.setattr(families, '_screen', lambda draft, seed: ('forced rejection', None))

    with pytest.raises(ConstructionFailed):
        quartic_six_cusps(0, max_reseeds=3)
    with pytest.raises(DegenerateInstance):
        quintic_2a(0, max_reseeds=2)

def test_predicted_census_must_add_up():
    x0 = projective_ring().gen(0)
    with pytest.raises(ValueError):
        PredictedCensus(3, (LocusExpectation('plane', (x0,), 2),), 'test')

def test_surface_from_equation():
    fermat = surface_from_equation(parse('x0^4 + x1^4 + x2^4 + x3^4'))
    assert fermat.family_tag == 'custom'
    assert fermat.predicted.cusps == 6
    assert fermat.predicted.loci == ()

    b = sextic_B(0, verify=False)
    custom = surface_from_equation(b.phi, b.certificate)
    assert [locus.count for locus in custom.predicted.loci] == [2, 8, 8]

    with pytest.raises(NotASurface):
        surface_from_equation(parse('x0^2 + x1'))

def test_line_cusp_local_equation_rejects_other_points():
    instance = quintic_case3(0, verify=False)
    F = instance.field
    off_line = SingularPoint(0, F, (0, 0, 0), 2, 1, A2)

    with pytest.raises(ValueError):
        line_cusp_local_equation(instance, off_line)


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(5))
@pytest.mark.parametrize('tag', ['quartic6', 'quintic2a', 'quintic_case3', 'sexticA', 'sexticB'])
def test_verified_families(tag, seed):
    instance = construct(tag, seed)
    scheme = instance.scheme
    n = MINIMAL_TABLE[instance.degree]

    assert scheme.geometric_count == n
    assert scheme.census() == {A2: n}
    assert scheme.total_length == 2 * n
    for locus in instance.predicted.loci:
        if locus.count is not None:
            assert locus.observed(scheme.points) == locus.count

@pytest.mark.slow
def test_quartic_and_sextic_lengths():
    assert quartic_six_cusps(0).scheme.total_length == 12
    assert sextic_A(0).scheme.total_length == 36

@pytest.mark.slow
@pytest.mark.parametrize('t', [0, 1, 5, 17, 42])
def test_degeneration_keeps_twelve_cusps(t):
    scheme = quintic_degeneration(0, t=t).scheme

    assert scheme.geometric_count == 12
    assert scheme.total_length == 24
    assert scheme.all_cusps()

@pytest.mark.slow
def test_census_survives_coordinate_change():
    instance = quintic_2a(0)
    generic = [[1, 0, 0, 0], [1, 1, 0, 0], [0, 3, 1, 0], [2, 0, 5, 1]]
    moved = find_singular_points(change_coordinates(instance.phi, generic))

    assert moved.census() == instance.scheme.census()
    assert moved.total_length == instance.scheme.total_length
    assert moved.degree_breakdown() == instance.scheme.degree_breakdown()

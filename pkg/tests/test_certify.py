import pytest
from hypothesis import given, settings, strategies as st

from tricusp.field import PrimeField
from tricusp.poly import parse
from tricusp.families import (
    cubic_three_cusps,
    quintic_2a,
    quintic_case3,
    sextic_A,
    sextic_B,
    SurfaceInstance,
    PredictedCensus,
    surface_from_equation,
)
from tricusp import certify
from tricusp.certify import (
    PASS,
    FAIL,
    CONTACT_CUBICS,
    SELF_CERTIFYING,
    UNCERTIFIED,
    VerificationReport,
    verify_family,
    certificate_for,
    cusp_incidence_check,
    contact_identity_check,
    sextic_b_identity_check,
)
from tricusp.errors import DegreeMismatch, DegenerateCoordinates


F = PrimeField(10007)
quintic = quintic_2a(0, verify=False)
units = st.integers(min_value=1, max_value=10006)


def contact(instance):
    return [instance.certificate[k] for k in ('s1', 's2', 's')]


def test_contact_identity_quintic():
    cert = contact_identity_check(quintic.phi, *contact(quintic))
    assert cert.kind == CONTACT_CUBICS
    assert cert.identity_ok
    assert cert.residual == quintic.phi.ring.gen(0)
    assert cert.residual_degree == 1
    assert not cert.identically_zero

def test_contact_identity_sextic():
    instance = sextic_A(0, verify=False)
    cert = contact_identity_check(instance.phi, *contact(instance))
    assert cert.identity_ok
    assert cert.residual.is_constant()
    assert cert.residual_degree == 0

def test_contact_identity_fails_for_other_surfaces():
    s1, s2, s = contact(quintic)
    other = quintic_2a(1, verify=False).phi
    assert not contact_identity_check(other, s1, s2, s).identity_ok

@given(units, units)
@settings(max_examples=25, deadline=None)
def test_contact_identity_scaling(lam, mu):
    # (lam*s, mu*s1, lam^3/mu*s2) has the same contact product
    s1, s2, s = contact(quintic)
    nu = F(lam)**3 / F(mu)
    cert = contact_identity_check(quintic.phi, s1 * F(mu), s2 * nu, s * F(lam))
    assert cert.identity_ok

def test_identically_zero_contact_product():
    instance = sextic_B(0, verify=False)
    l1, l2 = instance.certificate['l1'], instance.certificate['l2']

    cert = contact_identity_check(instance.phi, l1**2 * l2, l1 * l2**2, l1 * l2)
    assert cert.identically_zero
    assert not cert.identity_ok

def test_sextic_b_identity():
    instance = sextic_B(0, verify=False)
    cert = sextic_b_identity_check(instance.phi, *(
        instance.certificate[k] for k in ('l1', 'l2', 'g', 'f')
    ))
    assert cert.identity_ok
    assert cert.identically_zero

    l1, l2, g, f = (instance.certificate[k] for k in ('l1', 'l2', 'g', 'f'))
    assert not sextic_b_identity_check(instance.phi, l1, l2, g, f + l1**4).identity_ok

def test_degree_mismatch():
    s1, s2, s = contact(quintic)
    cubic = cubic_three_cusps(verify=False).phi

    with pytest.raises(DegreeMismatch):
        contact_identity_check(cubic, s1, s2, s)
    with pytest.raises(DegreeMismatch):
        contact_identity_check(quintic.phi, s1, s2, s1)
    with pytest.raises(DegreeMismatch):
        contact_identity_check(quintic.phi, s1, s2, s.ring.zero)

def test_certificate_for():
    assert certificate_for(cubic_three_cusps(verify=False)).kind == SELF_CERTIFYING

    # a scalar multiple of the cubic certifies itself too
    scaled = surface_from_equation(parse('3*x1*x2*x3 - 3*x0^3', field=F))
    assert certificate_for(scaled).identity_ok

    fermat = surface_from_equation(parse('x0^4 + x1^4 + x2^4 + x3^4', field=F))
    assert certificate_for(fermat).kind == UNCERTIFIED

    # a malformed certificate is reported, not raised
    s1, s2, s = contact(quintic)
    bad = surface_from_equation(quintic.phi, {'s1': s1, 's2': s2, 's': s1})
    assert not certificate_for(bad).identity_ok

def test_verify_cubic():
    result = verify_family(cubic_three_cusps(), fingerprint='abc')

    assert result.verdict == PASS
    assert result.passed
    assert result.cusp_count == 3
    assert result.failures == []
    assert result.certificate['kind'] == SELF_CERTIFYING
    assert result.census['classification'] == {'A2': 3}
    assert result.config_fingerprint == 'abc'

    incidence, counts = cusp_incidence_check(cubic_three_cusps(), cubic_three_cusps().scheme)
    assert incidence == [True] * 3
    assert list(counts.values()) == [3]

def test_verify_smooth_quartic_fails():
    fermat = surface_from_equation(parse('x0^4 + x1^4 + x2^4 + x3^4', field=F))
    result = verify_family(fermat)

    assert result.verdict == FAIL
    assert result.cusp_count == 0
    assert result.checks['count'] is False
    assert result.checks['identity'] is False
    assert result.failures

def test_verify_positive_dimensional_locus():
    result = verify_family(surface_from_equation(parse('x0*x1*x2*x3', field=F)))
    assert result.verdict == FAIL
    assert any('positive-dimensional' in failure for failure in result.failures)

def test_verify_records_non_surfaces():
    plane = SurfaceInstance(
        phi=parse('x0 + x1', field=F),
        family_tag='custom',
        certificate={},
        seed=0,
        predicted=PredictedCensus(0, (), 'test'),
    )
    result = verify_family(plane)

    assert result.verdict == FAIL
    assert result.checks['count'] is False
    assert any(failure.startswith('NotASurface') for failure in result.failures)

def test_verify_records_solver_breakdown(monkeypatch):
    def give_up(phi, seed=0):
        raise DegenerateCoordinates('no separating form')

    monkeypatch.setattr(certify, 'find_singular_points', give_up)
    result = verify_family(surface_from_equation(parse('x0^4 + x1^4 + x2^4 + x3^4', field=F)))

    assert result.verdict == FAIL
    assert result.failures[0] == 'DegenerateCoordinates: no separating form'

def test_report_dict_round_trip():
    result = verify_family(cubic_three_cusps())
    data = result.to_dict()

    assert data['verdict'] == PASS
    assert VerificationReport.from_dict(data) == result

def test_failed_report():
    result = VerificationReport.failed('quartic6', 3, 'GF(10007)', 4, 'gave up')
    assert result.verdict == FAIL
    assert result.expected_cusps == 6
    assert result.failures == ['gave up']


@pytest.mark.slow
def test_verify_case3_line_cusps():
    result = verify_family(quintic_case3(0))

    assert result.verdict == PASS
    assert result.cusp_count == 12
    assert {locus['name']: locus['observed'] for locus in result.loci} == {
        's = s1 = s2 = 0, x0 != 0': 8,
        'line x0 = x1 = 0, q1*q2 = 0': 4,
    }
    assert len(result.line_cusps) == 4
    assert all(c['sqh'] for c in result.line_cusps)

@pytest.mark.slow
def test_verify_sextic_b():
    result = verify_family(sextic_B(0))
    assert result.verdict == PASS
    assert result.certificate['kind'] == 'sextic_b'
    assert result.certificate['identically_zero']

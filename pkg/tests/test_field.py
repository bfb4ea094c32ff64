import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from tricusp.field import (
    QQ,
    PrimeField,
    ExtensionField,
    FieldElement,
    ext_embed,
    find_irreducible,
    residue_field,
)
from tricusp.errors import ZeroInverse, IncompatibleFields, CharacteristicMismatch


F = PrimeField(10007)
elements = st.integers(min_value=0, max_value=10006).map(F)
nonzero = st.integers(min_value=1, max_value=10006).map(F)


@given(elements, elements, elements)
def test_prime_field_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == 0

@given(nonzero)
def test_prime_field_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1

def test_prime_field_basics():
    F7 = PrimeField(7)
    assert F7(3) * F7(5) == 1
    assert F7(3).inverse() == 5
    assert F7(-1) == 6
    assert F7(Fraction(1, 2)) == 4
    assert str(F7) == 'GF(7)'

    with pytest.raises(ZeroInverse):
        F7(0).inverse()
    with pytest.raises(ZeroInverse):
        F7(7) / 7

def test_prime_field_rejects_small_or_composite():
    for p in (2, 3, 4, 15):
        with pytest.raises(ValueError):
            PrimeField(p)

def test_mixed_fields():
    with pytest.raises(IncompatibleFields):
        PrimeField(7)(1) + PrimeField(11)(1)

    with pytest.raises(CharacteristicMismatch):
        PrimeField(7).coerce(PrimeField(11)(3))

def test_rational_field():
    half = QQ(Fraction(1, 2))
    assert half + half == 1
    assert half.inverse() == 2
    with pytest.raises(ZeroInverse):
        QQ(0).inverse()

def test_find_irreducible():
    assert find_irreducible(7, 2) == (1, 0, 1)

    # seeded searches are reproducible
    assert find_irreducible(101, 3, seed=5) == find_irreducible(101, 3, seed=5)
    assert len(find_irreducible(101, 3, seed=5)) == 4

def test_extension_field_arithmetic():
    L = ExtensionField(7, (1, 0, 1))
    t = FieldElement(L, L.generator)

    assert L.degree == 2
    assert L.order == 49
    assert t * t == -1
    assert t * t.inverse() == 1
    assert (t + 1) * (t - 1) == -2

    # t^7 = -t since t^2 = -1
    assert L.frobenius(t.value) == (-t).value
    assert L.frobenius(t.value, 2) == t.value

def test_extension_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ExtensionField(7, (1, 0, 6))

def test_embedding():
    F7 = PrimeField(7)
    L = ExtensionField(7, (1, 0, 1))

    a = ext_embed(F7(3), L)
    assert a.field == L
    assert a * a == 2
    assert F7.coerce(a) == 3

    with pytest.raises(IncompatibleFields):
        F7.coerce(FieldElement(L, L.generator))

def test_residue_field():
    assert residue_field(7, (1, 3)) == PrimeField(7)
    assert residue_field(7, (1, 0, 1)) == ExtensionField(7, (1, 0, 1))

def test_field_elements_are_immutable():
    a = FieldElement(PrimeField(7), 3)
    with pytest.raises(AttributeError):
        a.value = 4

'''
Exact coefficient fields

Fields are lightweight descriptors operating on plain Python values, so polynomial
kernels never allocate wrapper objects per coefficient:

- :class:`RationalField`: values are ``fractions.Fraction`` (always normalized)
- :class:`PrimeField`: values are ints in ``[0, p)``
- :class:`ExtensionField`: values are coefficient tuples of ``F_p[t]/(m)``, highest
  degree first and stripped of leading zeros (``()`` is zero), the dense layout used by
  ``sympy.polys.galoistools``

:class:`FieldElement` pairs a descriptor with a value and is what the public API hands
out.
'''
import random
import itertools
from typing import Any, Iterator
from fractions import Fraction
from dataclasses import dataclass

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys import galoistools as gt

from tricusp.errors import ZeroInverse, IncompatibleFields, CharacteristicMismatch


def _dense(coeffs) -> tuple[int, ...]:
    return tuple(int(c) for c in coeffs)


class Field:
    characteristic: int = 0
    degree: int = 1

    zero: Any
    one: Any

    def __call__(self, value) -> 'FieldElement':
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                return self.convert(value.value, value.field)
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        raise TypeError(f'cannot coerce {value!r} into {self}')

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise ZeroInverse('zero denominator')
        return self.mul(self.from_int(num), self.inv(self.from_int(den)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_finite(self) -> bool:
        return self.characteristic > 0

    def signed(self, a):
        '''Representative used when printing with an explicit sign.'''
        return a


@dataclass(frozen=True)
class RationalField(Field):
    zero = Fraction(0)
    one = Fraction(1)

    def __str__(self):
        return 'QQ'

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, num: int, den: int) -> Fraction:
        if den == 0:
            raise ZeroInverse('zero denominator')
        return Fraction(num, den)

    def add(self, a, b):  return a + b
    def sub(self, a, b):  return a - b
    def neg(self, a):     return -a
    def mul(self, a, b):  return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroInverse('0 has no inverse in QQ')
        return 1 / a

    def random(self, rng: random.Random) -> Fraction:
        # small heights keep hand checks readable
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def convert(self, a, source: Field):
        if isinstance(source, RationalField):
            return a
        raise CharacteristicMismatch(f'cannot map {source} into QQ')

    def format(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    zero = 0
    one = 1

    def __post_init__(self):
        if self.p <= 3 or not isprime(self.p):
            raise ValueError(f'prime field modulus must be a prime > 3, got {self.p}')

    def __str__(self):
        return f'GF({self.p})'

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):  return (a + b) % self.p
    def sub(self, a, b):  return (a - b) % self.p
    def neg(self, a):     return -a % self.p
    def mul(self, a, b):  return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroInverse(f'0 has no inverse in {self}')
        return pow(a, -1, self.p)

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def convert(self, a, source: Field):
        if source == self:
            return a
        if isinstance(source, RationalField):
            return self.from_fraction(a.numerator, a.denominator)
        if source.characteristic != self.p:
            raise CharacteristicMismatch(f'cannot map {source} into {self}')
        if isinstance(source, ExtensionField) and len(a) <= 1:
            return a[0] if a else 0
        raise IncompatibleFields(f'{source.format(a)} does not lie in {self}')

    def signed(self, a):
        return a - self.p if a > self.p // 2 else a

    def format(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class ExtensionField(Field):
    '''
    ``F_p[t]/(modulus)`` for a monic irreducible ``modulus`` given highest degree first.
    '''
    p: int
    modulus: tuple[int, ...]

    zero = ()
    one = (1,)

    def __post_init__(self):
        if self.p <= 3 or not isprime(self.p):
            raise ValueError(f'extension base must be a prime > 3, got {self.p}')

        modulus = _dense(c % self.p for c in self.modulus)
        object.__setattr__(self, 'modulus', modulus)

        if len(modulus) < 2 or modulus[0] != 1:
            raise ValueError(f'modulus {modulus} must be monic of degree >= 1')
        if not gt.gf_irreducible_p(list(modulus), self.p, ZZ):
            raise ValueError(f'modulus {modulus} is reducible over GF({self.p})')

    def __str__(self):
        return f'GF({self.p}^{self.degree})[{_format_dense(self.modulus, self.p)}]'

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def generator(self) -> tuple[int, ...]:
        '''Residue class of ``t``.'''
        return _dense(gt.gf_rem([1, 0], list(self.modulus), self.p, ZZ))

    def from_int(self, n: int):
        n %= self.p
        return (n,) if n else ()

    def from_coefficients(self, coeffs) -> tuple[int, ...]:
        '''Element from a coefficient vector, lowest degree first.'''
        dense = [c % self.p for c in reversed(list(coeffs))]
        return _dense(gt.gf_rem(gt.gf_strip(dense), list(self.modulus), self.p, ZZ))

    def coefficients(self, a) -> tuple[int, ...]:
        '''Coefficient vector of ``a``, lowest degree first, padded to the degree.'''
        low = list(reversed(a))
        return tuple(low + [0] * (self.degree - len(low)))

    def add(self, a, b):
        return _dense(gt.gf_add(list(a), list(b), self.p, ZZ))

    def sub(self, a, b):
        return _dense(gt.gf_sub(list(a), list(b), self.p, ZZ))

    def neg(self, a):
        return _dense(gt.gf_neg(list(a), self.p, ZZ))

    def mul(self, a, b):
        if not a or not b:
            return ()
        prod = gt.gf_mul(list(a), list(b), self.p, ZZ)
        return _dense(gt.gf_rem(prod, list(self.modulus), self.p, ZZ))

    def inv(self, a):
        if not a:
            raise ZeroInverse(f'0 has no inverse in {self}')
        s, _, h = gt.gf_gcdex(list(a), list(self.modulus), self.p, ZZ)
        if _dense(h) != (1,):
            raise ZeroInverse(f'{self.format(a)} is not invertible in {self}')
        return _dense(s)

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        if not a:
            return () if n else (1,)
        return _dense(gt.gf_pow_mod(list(a), n, list(self.modulus), self.p, ZZ))

    def frobenius(self, a, j: int = 1):
        return self.pow(a, self.p ** j)

    def random(self, rng: random.Random):
        return self.from_coefficients(rng.randrange(self.p) for _ in range(self.degree))

    def elements(self) -> Iterator[tuple[int, ...]]:
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            yield _dense(gt.gf_strip(list(coeffs)))

    def convert(self, a, source: Field):
        if source == self:
            return a
        if isinstance(source, RationalField):
            return self.from_fraction(a.numerator, a.denominator)
        if source.characteristic != self.p:
            raise CharacteristicMismatch(f'cannot map {source} into {self}')
        if isinstance(source, PrimeField):
            return self.from_int(a)
        if len(a) <= 1:
            return a
        raise IncompatibleFields(f'{source.format(a)} does not lie in {self}')

    def format(self, a) -> str:
        return _format_dense(a, self.p)


def _format_dense(coeffs, p: int, var: str = 't') -> str:
    if not coeffs:
        return '0'

    parts = []
    deg = len(coeffs) - 1
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = deg - i
        mono = '' if e == 0 else (var if e == 1 else f'{var}^{e}')
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f'{c}*{mono}')
    return ' + '.join(parts)


class FieldElement:
    '''
    Immutable scalar living in a specific field.

    Arithmetic between elements of different fields raises ``IncompatibleFields``;
    Python ints and ``Fraction`` operands are coerced into the element's field.
    '''
    __slots__ = ('field', 'value')

    def __init__(self, field: Field, value):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, value):
        raise AttributeError('FieldElement is immutable')

    def __reduce__(self):
        return (FieldElement, (self.field, self.value))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise IncompatibleFields(f'{self.field} and {other.field}')
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, value) -> 'FieldElement':
        return FieldElement(self.field, value)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, n: int):
        return self._wrap(self.field.pow(self.value, n))

    def inverse(self) -> 'FieldElement':
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f'FieldElement({self.field}, {self.field.format(self.value)})'


QQ = RationalField()


def field_inverse(a: FieldElement) -> FieldElement:
    return a.inverse()

def ext_embed(a: FieldElement, target: ExtensionField) -> FieldElement:
    '''
    Embed a prime-field constant into an extension of the same characteristic.
    '''
    if a.field.characteristic != target.characteristic:
        raise CharacteristicMismatch(f'{a.field} does not embed into {target}')
    return FieldElement(target, target.convert(a.value, a.field))

def find_irreducible(p: int, k: int, seed: int | None = None) -> tuple[int, ...]:
    '''
    Monic irreducible polynomial of degree ``k`` over ``GF(p)``, highest degree first.

    Candidates are visited in lexicographic order of their lower coefficients. Without a
    seed the search starts at the smallest candidate, otherwise at a seeded offset and
    wraps around, so the result is reproducible for fixed ``(p, k, seed)``.
    '''
    if k < 1:
        raise ValueError('degree must be positive')

    total = p ** k
    start = 0 if seed is None else random.Random(seed).randrange(total)
    for i in range(total):
        index = (start + i) % total
        lower = []
        for _ in range(k):
            index, digit = divmod(index, p)
            lower.append(digit)
        candidate = (1, *reversed(lower))
        if gt.gf_irreducible_p(list(candidate), p, ZZ):
            return candidate

    raise AssertionError(f'no irreducible polynomial of degree {k} over GF({p})')

def residue_field(p: int, modulus) -> PrimeField | ExtensionField:
    '''
    ``F_p[t]/(modulus)`` for an irreducible ``modulus``, collapsing to ``GF(p)`` for
    linear moduli.
    '''
    modulus = _dense(modulus)
    if len(modulus) == 2:
        return PrimeField(p)
    return ExtensionField(p, modulus)

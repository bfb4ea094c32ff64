'''
Sparse multivariate polynomials

A :class:`Poly` is a mapping from exponent tuples to nonzero raw coefficients of its
ring's field. Rings fix the variable names and the active :class:`MonomialOrder`; the
projective ring uses ``x0..x3``, chart rings drop the dehomogenized variable, and
the affine parse ring uses ``x, y, z``.

Text form (both directions):

.. code-block:: text

    term  ::= [coef]['*'] monom | coef
    monom ::= var('^'int)?('*'var('^'int)?)*
    coef  ::= int | int'/'int

with whitespace ignored and a sign allowed in front of every term.
'''
import re
import heapq
import random
from fractions import Fraction
from dataclasses import dataclass
from collections.abc import Sequence

from tricusp.field import Field, FieldElement, PrimeField
from tricusp.errors import (
    FieldMismatch,
    IncompatibleFields,
    DivisionByZeroPoly,
    PolySyntaxError,
    UnknownVariable,
    PointNotInChart,
)


PROJECTIVE = ('x0', 'x1', 'x2', 'x3')
AFFINE     = ('x', 'y', 'z')

DEFAULT_PRIME = 10007


def _grevlex(exps) -> tuple[int, ...]:
    return (sum(exps), *(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    '''
    Monomial order. ``key`` maps an exponent tuple to an int tuple whose natural
    ordering is the monomial order (bigger key, bigger monomial).

    Parameters:
        kind:  one of ``grevlex``, ``grlex``, ``lex`` or ``block``
        split: for ``block``, the number of leading variables in the eliminated block;
               each block is compared by grevlex
    '''
    kind: str = 'grevlex'
    split: int = 0

    def __post_init__(self):
        if self.kind not in ('grevlex', 'grlex', 'lex', 'block'):
            raise ValueError(f'unknown monomial order "{self.kind}"')

    def key(self, exps) -> tuple[int, ...]:
        match self.kind:
            case 'grevlex':
                return _grevlex(exps)
            case 'grlex':
                return (sum(exps), *exps)
            case 'lex':
                return tuple(exps)
            case 'block':
                return _grevlex(exps[:self.split]) + _grevlex(exps[self.split:])

    def __str__(self):
        return f'block({self.split})' if self.kind == 'block' else self.kind


GREVLEX = MonomialOrder('grevlex')
GRLEX   = MonomialOrder('grlex')
LEX     = MonomialOrder('lex')

def block_order(split: int) -> MonomialOrder:
    return MonomialOrder('block', split)


def _compositions(total: int, n: int):
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, n - 1):
            yield (first, *rest)


@dataclass(frozen=True)
class PolyRing:
    field: Field
    names: tuple[str, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, 'names', tuple(self.names))

    def __str__(self):
        return f'{self.field}[{", ".join(self.names)}]'

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def zero(self) -> 'Poly':
        return Poly(self, {})

    @property
    def one(self) -> 'Poly':
        return self.constant(self.field.one)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f'unknown variable "{name}" for ring {self}') from None

    def gen(self, i: int) -> 'Poly':
        exps = tuple(int(j == i) for j in range(self.nvars))
        return Poly(self, {exps: self.field.one})

    def var(self, name: str) -> 'Poly':
        return self.gen(self.index(name))

    @property
    def gens(self) -> tuple['Poly', ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def constant(self, value) -> 'Poly':
        '''Constant polynomial from a raw value of the field.'''
        return Poly(self, {(0,) * self.nvars: value})

    def scalar(self, value) -> 'Poly':
        '''Constant polynomial from an int, Fraction or FieldElement.'''
        return self.constant(self.field.coerce(value))

    def monomial(self, exps, coeff=None) -> 'Poly':
        coeff = self.field.one if coeff is None else coeff
        return Poly(self, {tuple(exps): coeff})

    def with_order(self, order: MonomialOrder) -> 'PolyRing':
        return PolyRing(self.field, self.names, order)

    def with_field(self, field: Field) -> 'PolyRing':
        return PolyRing(field, self.names, self.order)

    def monomials(self, degree: int) -> list[tuple[int, ...]]:
        return list(_compositions(degree, self.nvars))

    def random_homogeneous(self, degree: int, rng: random.Random) -> 'Poly':
        '''
        Form of the given degree with every coefficient drawn uniformly from the field,
        in a fixed monomial sequence so the draws are reproducible from ``rng``'s state.
        '''
        return Poly(self, {m: self.field.random(rng) for m in self.monomials(degree)})

    def parse(self, text: str) -> 'Poly':
        return _Parser(text, self).parse()


def projective_ring(field: Field | None = None, order: MonomialOrder = GREVLEX) -> PolyRing:
    return PolyRing(field or PrimeField(DEFAULT_PRIME), PROJECTIVE, order)

def affine_ring(
    field: Field | None = None,
    names: Sequence[str] = AFFINE,
    order: MonomialOrder = GREVLEX,
) -> PolyRing:
    return PolyRing(field or PrimeField(DEFAULT_PRIME), tuple(names), order)

def chart_ring(field: Field, chart: int, order: MonomialOrder = GREVLEX) -> PolyRing:
    '''Affine ring of the chart ``{x_chart = 1}``.'''
    names = tuple(name for i, name in enumerate(PROJECTIVE) if i != chart)
    return PolyRing(field, names, order)


def _neg(key):
    return tuple(-k for k in key)


class Poly:
    '''
    Immutable sparse polynomial.

    Scalars (ints, Fractions, FieldElements of the ring's field) mix freely with
    polynomials in arithmetic. Operands from rings with different fields or variables
    raise ``FieldMismatch``.
    '''
    __slots__ = ('ring', '_terms', '_lead')

    def __init__(self, ring: PolyRing, terms: dict | None = None):
        K = ring.field
        self.ring = ring
        self._terms = {
            tuple(m): c for m, c in (terms or {}).items() if not K.is_zero(c)
        }
        self._lead = None

    @classmethod
    def _raw(cls, ring, terms):
        # terms already normalized
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._lead = None
        return poly

    # -- inspection -----------------------------------------------------------------
    @property
    def field(self) -> Field:
        return self.ring.field

    def terms(self) -> list[tuple[tuple[int, ...], object]]:
        '''(exponents, coefficient) pairs, strictly descending in the ring's order.'''
        key = self.ring.order.key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def monomials(self) -> list[tuple[int, ...]]:
        return [m for m, _ in self.terms()]

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    @property
    def LM(self) -> tuple[int, ...]:
        if self._lead is None:
            if not self._terms:
                raise ValueError('the zero polynomial has no leading monomial')
            self._lead = max(self._terms, key=self.ring.order.key)
        return self._lead

    @property
    def LC(self):
        return self._terms[self.LM]

    def degree(self) -> int:
        '''Total degree, -1 for the zero polynomial.'''
        return max((sum(m) for m in self._terms), default=-1)

    def min_degree(self) -> int:
        '''Lowest total degree present (the vanishing order at the origin).'''
        return min((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_component(self, degree: int) -> 'Poly':
        return Poly._raw(
            self.ring, {m: c for m, c in self._terms.items() if sum(m) == degree}
        )

    # -- arithmetic -----------------------------------------------------------------
    def _coerce(self, other) -> 'Poly':
        if isinstance(other, Poly):
            if other.ring.field != self.ring.field or other.ring.names != self.ring.names:
                raise FieldMismatch(f'{self.ring} and {other.ring}')
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            try:
                return self.ring.scalar(other)
            except IncompatibleFields as exc:
                raise FieldMismatch(str(exc)) from exc
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.field
        terms = dict(self._terms)
        for m, c in other._terms.items():
            if m in terms:
                s = K.add(terms[m], c)
                if K.is_zero(s):
                    del terms[m]
                else:
                    terms[m] = s
            else:
                terms[m] = c
        return Poly._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        K = self.field
        return Poly._raw(self.ring, {m: K.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.field
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = K.mul(c1, c2)
                terms[m] = K.add(terms[m], c) if m in terms else c
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError('exponent must be a non-negative integer')
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> 'Poly':
        '''Multiply by a raw field value.'''
        K = self.field
        return Poly(self.ring, {m: K.mul(c, v) for m, v in self._terms.items()})

    def monic(self) -> 'Poly':
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.LC))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.ring.field == other.ring.field
                and self.ring.names == other.ring.names
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self._terms.items())))

    # -- calculus and substitution ------------------------------------------------
    def diff(self, i: int) -> 'Poly':
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f'variable index {i} out of range for {self.ring}')
        K = self.field
        terms = {}
        for m, c in self._terms.items():
            e = m[i]
            if e == 0:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1:]
            terms[dm] = K.mul(K.from_int(e), c)
        return Poly(self.ring, terms)

    def gradient(self) -> list['Poly']:
        return [self.diff(i) for i in range(self.ring.nvars)]

    def _eval(self, values, K: Field):
        src = self.field
        same = K == src
        powers = [{0: K.one, 1: v} for v in values]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = K.pow(values[i], e)
            return cache[e]

        total = K.zero
        for m, c in self._terms.items():
            t = c if same else K.convert(c, src)
            for i, e in enumerate(m):
                if e:
                    t = K.mul(t, power(i, e))
            total = K.add(total, t)
        return total

    def evaluate(self, point: Sequence, field: Field | None = None) -> FieldElement:
        '''
        Evaluate at ``point``, a sequence of FieldElements or raw values of ``field``
        (default: the field of the point's elements, else the ring's field).
        '''
        K, values = _point_values(point, field or self.field)
        if len(values) != self.ring.nvars:
            raise ValueError(
                f'point has {len(values)} coordinates, ring {self.ring} needs {self.ring.nvars}'
            )
        try:
            return FieldElement(K, self._eval(values, K))
        except IncompatibleFields as exc:
            raise FieldMismatch(str(exc)) from exc

    def change_field(self, field: Field) -> 'Poly':
        if field == self.field:
            return self
        src = self.field
        try:
            terms = {m: field.convert(c, src) for m, c in self._terms.items()}
        except IncompatibleFields as exc:
            raise FieldMismatch(str(exc)) from exc
        return Poly(self.ring.with_field(field), terms)

    def with_ring(self, ring: PolyRing) -> 'Poly':
        if ring.nvars != self.ring.nvars:
            raise FieldMismatch(f'{self.ring} and {ring}')
        return self.change_field(ring.field)._replace_ring(ring)

    def _replace_ring(self, ring):
        return Poly._raw(ring, dict(self._terms))

    def compose(self, images: Sequence['Poly']) -> 'Poly':
        '''
        Substitute ``images[i]`` for the i-th variable. All images share one ring, whose
        field must accept this polynomial's coefficients.
        '''
        if len(images) != self.ring.nvars:
            raise ValueError('one image per variable is required')
        target = images[0].ring
        K, src = target.field, self.field
        cache = [{0: target.one, 1: img} for img in images]

        def power(i, e):
            if e not in cache[i]:
                cache[i][e] = power(i, e - 1) * images[i]
            return cache[i][e]

        result = target.zero
        for m, c in self._terms.items():
            term = target.constant(K.convert(c, src))
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def dehomogenize(self, chart: int) -> 'Poly':
        '''Set ``x_chart = 1``; the result lives in the chart ring.'''
        ring = PolyRing(
            self.field,
            tuple(n for i, n in enumerate(self.ring.names) if i != chart),
            self.ring.order,
        )
        K = self.field
        terms = {}
        for m, c in self._terms.items():
            dm = m[:chart] + m[chart + 1:]
            terms[dm] = K.add(terms[dm], c) if dm in terms else c
        return Poly(ring, terms)

    # -- text -----------------------------------------------------------------------
    def format(self) -> str:
        '''
        Signed-residue form accepted by :func:`parse` over ``QQ`` and prime fields.
        Extension-field coefficients print as ``(t + 3)`` in the field generator
        ``t``, which the parser does not read back.
        '''
        if not self._terms:
            return '0'

        K = self.field
        parts = []
        for m, c in self.terms():
            sc = K.signed(c)
            if isinstance(sc, (int, Fraction)):
                negative = sc < 0
                magnitude = -sc if negative else sc
                coef, unit = str(magnitude), magnitude == 1
            else:
                negative = False
                coef, unit = f'({K.format(c)})', c == K.one

            mono = '*'.join(
                name if e == 1 else f'{name}^{e}'
                for name, e in zip(self.ring.names, m) if e
            )
            if not mono:
                body = coef
            elif unit:
                body = mono
            else:
                body = f'{coef}*{mono}'

            if parts:
                parts.append((' - ' if negative else ' + ') + body)
            else:
                parts.append(('-' if negative else '') + body)

        return ''.join(parts)

    __str__ = format

    def __repr__(self):
        return f'Poly({self.format()!r}, {self.ring})'


def _point_values(point: Sequence, default: Field) -> tuple[Field, list]:
    fields = {a.field for a in point if isinstance(a, FieldElement)}
    if len(fields) > 1:
        raise FieldMismatch(f'point coordinates live in different fields: {fields}')
    K = fields.pop() if fields else default
    # tuples are raw extension-field values
    return K, [
        a.value if isinstance(a, FieldElement) else a if isinstance(a, tuple) else K.coerce(a)
        for a in point
    ]


def reduce(
    f: Poly,
    divisors: Sequence[Poly],
    quotients: bool = False,
) -> tuple[list[Poly] | None, Poly]:
    '''
    Full multivariate division of ``f`` by ``divisors`` in the ring's order.

    Terms are processed from the top through a heap of pending monomials; each term is
    reduced by the first divisor whose leading monomial divides it, otherwise it moves
    to the remainder. Returns ``(quotients or None, remainder)``.
    '''
    ring = f.ring
    K = ring.field
    key = ring.order.key

    divs = []
    for g in divisors:
        if g.is_zero():
            raise DivisionByZeroPoly('division by the zero polynomial')
        lm = g.LM
        tail = [(m, c) for m, c in g._terms.items() if m != lm]
        divs.append((lm, K.inv(g.LC), tail))

    pending = dict(f._terms)
    heap = [(_neg(key(m)), m) for m in pending]
    heapq.heapify(heap)

    remainder = {}
    quots = [{} for _ in divs] if quotients else None
    while heap:
        _, m = heapq.heappop(heap)
        c = pending.pop(m, None)
        if c is None:
            continue

        for idx, (lm, inv, tail) in enumerate(divs):
            if all(a >= b for a, b in zip(m, lm)):
                break
        else:
            remainder[m] = c
            continue

        shift = tuple(a - b for a, b in zip(m, lm))
        factor = K.mul(c, inv)
        if quots is not None:
            quots[idx][shift] = factor

        for tm, tc in tail:
            nm = tuple(a + b for a, b in zip(tm, shift))
            delta = K.mul(factor, tc)
            old = pending.get(nm)
            if old is None:
                pending[nm] = K.neg(delta)
                heapq.heappush(heap, (_neg(key(nm)), nm))
            else:
                new = K.sub(old, delta)
                if K.is_zero(new):
                    del pending[nm]
                else:
                    pending[nm] = new

    rem = Poly._raw(ring, remainder)
    if quots is None:
        return None, rem
    return [Poly._raw(ring, q) for q in quots], rem


def exact_div(a: Poly, b: Poly) -> tuple[Poly, bool]:
    '''
    Divide ``a`` by ``b``. The flag is true iff the remainder vanishes, in which case
    ``a == q * b``.
    '''
    b = a._coerce(b)
    (q,), r = reduce(a, [b], quotients=True)
    return q, r.is_zero()

def poly_arith(a: Poly, b, op: str):
    match op:
        case 'add':
            return a + b
        case 'sub':
            return a - b
        case 'mul':
            return a * b
        case 'pow':
            return a ** b
        case 'exact_div':
            return exact_div(a, b)
    raise ValueError(f'unknown polynomial operation "{op}"')

def partial_derivative(f: Poly, var_index: int) -> Poly:
    return f.diff(var_index)

def evaluate(f: Poly, point: Sequence) -> FieldElement:
    return f.evaluate(point)

def localize(f: Poly, chart: int, point: Sequence) -> Poly:
    '''
    Local equation of the homogeneous ``f`` at ``point`` in the chart ``{x_chart = 1}``:
    dehomogenize and translate so that the point becomes the origin.

    ``point`` holds either the three affine chart coordinates or four projective ones
    (rescaled so that ``x_chart = 1``). Coefficients move to the field of the point.
    '''
    if not f.is_homogeneous():
        raise ValueError('localization needs a homogeneous polynomial')

    K, values = _point_values(point, f.field)
    if len(values) == f.ring.nvars:
        if K.is_zero(values[chart]):
            raise PointNotInChart(f'point has x{chart} = 0, outside chart {chart}')
        inv = K.inv(values[chart])
        values = [K.mul(v, inv) for i, v in enumerate(values) if i != chart]
    elif len(values) != f.ring.nvars - 1:
        raise ValueError(f'expected {f.ring.nvars - 1} affine coordinates, got {len(values)}')

    g = f.dehomogenize(chart).change_field(K)
    shifted = [x + g.ring.constant(v) for x, v in zip(g.ring.gens, values)]
    return g.compose(shifted)

def random_homogeneous(
    degree: int,
    seed,
    field: Field | None = None,
    ring: PolyRing | None = None,
) -> Poly:
    if degree < 0:
        raise ValueError('degree must be non-negative')
    ring = ring or projective_ring(field)
    return ring.random_homogeneous(degree, random.Random(seed))


# -- parsing ------------------------------------------------------------------------
_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^]))')


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(
                f'unexpected character {text[pos + stripped]!r}', text, pos + stripped
            )
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


def _infer_ring(tokens, text: str, field: Field) -> PolyRing:
    names = [(value, start) for kind, value, start in tokens if kind == 'name']
    for name, start in names:
        if name not in PROJECTIVE and name not in AFFINE:
            raise UnknownVariable(f'unknown variable "{name}"', text, start)

    if all(name in AFFINE for name, _ in names) and names:
        return affine_ring(field)
    for name, start in names:
        if name not in PROJECTIVE:
            raise UnknownVariable(
                f'variable "{name}" mixes affine and projective names', text, start
            )
    return projective_ring(field)


class _Parser:
    def __init__(self, text: str, ring: PolyRing | None = None, field: Field | None = None):
        self.text = text
        self.tokens = _tokenize(text)
        self.ring = ring or _infer_ring(
            self.tokens, text, field or PrimeField(DEFAULT_PRIME)
        )
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _fail(self, message):
        tok = self._peek()
        position = tok[2] if tok else len(self.text)
        raise PolySyntaxError(message, self.text, position)

    def _is_op(self, *ops) -> bool:
        tok = self._peek()
        return tok is not None and tok[0] == 'op' and tok[1] in ops

    def parse(self) -> Poly:
        if not self.tokens:
            self._fail('empty polynomial')

        K = self.ring.field
        terms = {}
        negative = False
        if self._is_op('+', '-'):
            negative = self._next()[1] == '-'

        while True:
            coeff, exps = self._term()
            if negative:
                coeff = K.neg(coeff)
            terms[exps] = K.add(terms[exps], coeff) if exps in terms else coeff

            if self._peek() is None:
                break
            if not self._is_op('+', '-'):
                self._fail('expected "+" or "-"')
            negative = self._next()[1] == '-'

        return Poly(self.ring, terms)

    def _term(self):
        K = self.ring.field
        exps = [0] * self.ring.nvars
        tok = self._peek()
        if tok is None:
            self._fail('expected a term')

        if tok[0] == 'int':
            coeff = self._coef()
            if self._is_op('*'):
                self._next()
                self._monom(exps)
            elif self._peek() is not None and self._peek()[0] == 'name':
                self._monom(exps)
        elif tok[0] == 'name':
            coeff = K.one
            self._monom(exps)
        else:
            self._fail('expected a coefficient or a variable')

        return coeff, tuple(exps)

    def _coef(self):
        K = self.ring.field
        num = int(self._next()[1])
        if not self._is_op('/'):
            return K.from_int(num)

        self._next()
        tok = self._peek()
        if tok is None or tok[0] != 'int':
            self._fail('expected a denominator')
        den = int(self._next()[1])
        if K.is_zero(K.from_int(den)):
            raise PolySyntaxError('zero denominator', self.text, tok[2])
        return K.from_fraction(num, den)

    def _monom(self, exps):
        self._factor(exps)
        while self._is_op('*'):
            self._next()
            self._factor(exps)

    def _factor(self, exps):
        tok = self._peek()
        if tok is None or tok[0] != 'name':
            self._fail('expected a variable')
        self._next()
        if tok[1] not in self.ring.names:
            raise UnknownVariable(
                f'unknown variable "{tok[1]}" for ring {self.ring}', self.text, tok[2]
            )
        idx = self.ring.names.index(tok[1])

        e = 1
        if self._is_op('^'):
            self._next()
            etok = self._peek()
            if etok is None or etok[0] != 'int':
                self._fail('expected an exponent')
            e = int(self._next()[1])
        exps[idx] += e


def parse(text: str, ring: PolyRing | None = None, field: Field | None = None) -> Poly:
    '''
    Parse polynomial text. Without an explicit ring, ``x0..x3`` select the projective
    ring and ``x, y, z`` the affine one, over ``field`` (default ``GF(10007)``).
    '''
    return _Parser(text, ring, field).parse()

def format_poly(f: Poly) -> str:
    return f.format()

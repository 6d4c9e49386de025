"""Exact fields: GF(p), GF(p^m) and the rationals.

A field object builds and owns its elements::

    >>> F = parse_field("gf:7")
    >>> F(3) + F(5)
    1
    >>> F(1) / F(3)
    5

Elements of different fields never mix; arithmetic between them raises
:class:`FieldMismatchError`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property, total_ordering
from itertools import product
from typing import Iterator

INFINITE = math.inf

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981

# Largest solution set solve_power() will materialise.
MAX_ROOTS = 1_000_000


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic primality test for n below roughly 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= _MR_LIMIT:
        raise FieldError(f"primality of {n} is beyond the supported range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def integer_root(n: int, e: int) -> int | None:
    """Exact non-negative e-th root of n >= 0, or None."""
    if n in (0, 1):
        return n
    if e >= n.bit_length():
        return None
    lo, hi = 1, 1 << (n.bit_length() // e + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**e
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


@total_ordering
class Scalar:
    """An element of a :class:`Field`. Immutable and hashable."""

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field.spec} and {other.field.spec}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError(f"zero has no inverse in {self.field.spec}")
        return Scalar(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Scalar(self.field, self.field._pow(self.value, e))

    def is_zero(self) -> bool:
        return self.value == self.field.zero.value

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field(other).value
        return NotImplemented

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.sort_key(self.value) < self.field.sort_key(other.value)

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return self.field.format(self.value)


class Field:
    """Common interface; concrete fields implement the raw-value hooks."""

    kind: str

    def __call__(self, value) -> Scalar:
        return Scalar(self, self._normalize(value))

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.spec

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def unit_count(self):
        raise NotImplementedError

    def units(self, n: int) -> list[Scalar]:
        """First n nonzero elements in canonical order."""
        if n > self.unit_count():
            raise FieldError(f"{self.spec} has only {self.unit_count()} units, {n} requested")
        out = []
        for u in self.iter_units():
            if len(out) == n:
                break
            out.append(u)
        return out

    def iter_units(self) -> Iterator[Scalar]:
        raise NotImplementedError

    def solve_power(self, e: int, q: Scalar) -> list[Scalar]:
        """All nonzero t with t**e == q, in canonical order."""
        raise NotImplementedError

    def _pow(self, x, e: int):
        result = self._normalize(1)
        base = x
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result


class _FiniteField(Field):
    """Shared machinery for fields with a cyclic unit group."""

    @property
    def order(self) -> int:
        raise NotImplementedError

    def unit_count(self) -> int:
        return self.order - 1

    def _pow(self, x, e: int):
        if x == self.zero.value:
            return x if e else self.one.value
        return Field._pow(self, x, e % (self.order - 1))

    @cached_property
    def primitive_element(self) -> Scalar:
        n = self.unit_count()
        factors = prime_factors(n)
        for g in self.iter_units():
            if all(g ** (n // r) != self.one for r in factors):
                return g
        raise FieldError(f"no primitive element found in {self.spec}")  # unreachable for a field

    def discrete_log(self, q: Scalar) -> int:
        """Baby-step giant-step logarithm of q to the primitive element."""
        n = self.unit_count()
        g = self.primitive_element
        m = math.isqrt(n) + 1
        table = {}
        cur = self.one
        for j in range(m):
            table.setdefault(cur.value, j)
            cur = cur * g
        step = (g ** m).inverse()
        cur = q
        for i in range(m + 1):
            j = table.get(cur.value)
            if j is not None:
                return (i * m + j) % n
            cur = cur * step
        raise FieldError(f"{q} is not a unit of {self.spec}")

    def roots_of_unity(self, k: int) -> list[Scalar]:
        """The k-th roots of unity (t**k == 1) of this field."""
        return self.solve_power(k, self.one)

    def solve_power(self, e: int, q: Scalar) -> list[Scalar]:
        if q.field != self:
            raise FieldMismatchError("right-hand side lies in another field")
        if q.is_zero():
            raise FieldError("t**e == 0 has no unit solution")
        n = self.unit_count()
        e %= n
        g = math.gcd(e, n)
        if g > MAX_ROOTS:
            raise FieldError(f"solution set of size {g} is too large to enumerate")
        if q ** (n // g) != self.one:
            return []
        if e == 0:
            x0 = 0
        else:
            x0 = (self.discrete_log(q) // g) * pow(e // g, -1, n // g) % (n // g)
        gen = self.primitive_element
        step = gen ** (n // g)
        cur = gen**x0
        sols = []
        for _ in range(g):
            sols.append(cur)
            cur = cur * step
        return sorted(sols)


@dataclass(frozen=True, eq=True)
class PrimeField(_FiniteField):
    p: int
    kind: str = dc_field(default="prime", init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def spec(self) -> str:
        return f"gf:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def _normalize(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.spec}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, bool) or not isinstance(value, int):
            raise FieldError(f"cannot interpret {value!r} in {self.spec}")
        return value % self.p

    def _add(self, x, y):
        return (x + y) % self.p

    def _neg(self, x):
        return -x % self.p

    def _mul(self, x, y):
        return x * y % self.p

    def _inv(self, x):
        return pow(x, -1, self.p)

    def _pow(self, x, e):
        if x == 0:
            return 0 if e else 1
        return pow(x, e % (self.p - 1), self.p)

    def sort_key(self, x):
        return x

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        try:
            if "/" in text:
                return self(Fraction(text))
            return self(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse {text!r} in {self.spec}") from exc

    def iter_units(self):
        for v in range(1, self.p):
            yield Scalar(self, v)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over GF(p); coefficient lists are constant-first."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _poly_trim(a)
    return a


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(modulus) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible of degree m, ordering lower coefficients from the top."""
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


_TERM = re.compile(r"([+-])?\s*(\d*)\s*(x(?:\^(\d+))?)?")


@dataclass(frozen=True, eq=True)
class ExtensionField(_FiniteField):
    """GF(p^m) as GF(p)[x]/(modulus). Elements are constant-first coefficient tuples."""

    p: int
    m: int
    modulus: tuple[int, ...] = ()
    explicit: bool = dc_field(default=False, compare=False)
    kind: str = dc_field(default="extension", init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.m < 1:
            raise FieldError("extension degree must be at least 1")
        if not self.modulus:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.m))
        else:
            mod = tuple(c % self.p for c in self.modulus)
            object.__setattr__(self, "modulus", mod)
            if len(mod) != self.m + 1 or mod[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {self.m}")
            if not is_irreducible(mod, self.p):
                raise FieldError(f"modulus {mod} is reducible over GF({self.p})")

    @property
    def spec(self) -> str:
        if self.explicit:
            return f"gf:{self.p}^{self.m}:" + ",".join(map(str, self.modulus))
        return f"gf:{self.p}^{self.m}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p**self.m

    def _normalize(self, value):
        if isinstance(value, tuple):
            if len(value) > self.m:
                value = tuple(_poly_mod(list(value), list(self.modulus), self.p))
            value = tuple(c % self.p for c in value)
            return value + (0,) * (self.m - len(value))
        if isinstance(value, Fraction):
            base = PrimeField(self.p)(value).value
            return (base,) + (0,) * (self.m - 1)
        if isinstance(value, bool) or not isinstance(value, int):
            raise FieldError(f"cannot interpret {value!r} in {self.spec}")
        return (value % self.p,) + (0,) * (self.m - 1)

    def _add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def _neg(self, x):
        return tuple(-a % self.p for a in x)

    def _mul(self, x, y):
        prod = [0] * (2 * self.m - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        rem = _poly_mod([c % self.p for c in prod], list(self.modulus), self.p)
        return tuple(rem) + (0,) * (self.m - len(rem))

    def _inv(self, x):
        return self._pow(x, self.order - 2)

    def encode(self, x) -> int:
        return sum(c * self.p**i for i, c in enumerate(x))

    def decode(self, code: int):
        return tuple((code // self.p**i) % self.p for i in range(self.m))

    def sort_key(self, x):
        return self.encode(x)

    def format(self, x) -> str:
        terms = []
        for i in range(self.m - 1, -1, -1):
            c = x[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str) -> Scalar:
        src = text.replace(" ", "")
        if not src:
            raise FieldError(f"cannot parse {text!r} in {self.spec}")
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(src):
            mt = _TERM.match(src, pos)
            if not mt or mt.end() == pos or (mt.group(2) == "" and mt.group(3) is None):
                raise FieldError(f"cannot parse {text!r} in {self.spec}")
            sign = -1 if mt.group(1) == "-" else 1
            coef = int(mt.group(2)) if mt.group(2) else 1
            if mt.group(3) is None:
                deg = 0
            else:
                deg = int(mt.group(4)) if mt.group(4) else 1
            coeffs[deg] = coeffs.get(deg, 0) + sign * coef
            pos = mt.end()
        top = max(coeffs)
        poly = tuple(coeffs.get(i, 0) for i in range(top + 1))
        return self(poly)

    def iter_units(self):
        for code in range(1, self.order):
            yield Scalar(self, self.decode(code))


@dataclass(frozen=True, eq=True)
class RationalField(Field):
    kind: str = dc_field(default="rational", init=False, repr=False, compare=False)

    @property
    def spec(self) -> str:
        return "rational"

    @property
    def characteristic(self) -> int:
        return 0

    def unit_count(self):
        return INFINITE

    def _normalize(self, value) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise FieldError(f"cannot interpret {value!r} as a rational")
        return Fraction(value)

    def _add(self, x, y):
        return x + y

    def _neg(self, x):
        return -x

    def _mul(self, x, y):
        return x * y

    def _inv(self, x):
        return 1 / x

    def _pow(self, x, e):
        return x**e

    def sort_key(self, x):
        return x

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str) -> Scalar:
        try:
            return self(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse {text!r} as a rational") from exc

    def iter_units(self):
        k = 1
        while True:
            yield self(k)
            k += 1

    def solve_power(self, e: int, q: Scalar) -> list[Scalar]:
        if q.field != self:
            raise FieldMismatchError("right-hand side lies in another field")
        if q.is_zero():
            raise FieldError("t**e == 0 has no unit solution")
        v = q.value
        if e == 0:
            if v == 1:
                raise FieldError("every nonzero rational solves t**0 == 1")
            return []
        if e < 0:
            e, v = -e, 1 / v
        if v < 0 and e % 2 == 0:
            return []
        num = integer_root(abs(v.numerator), e)
        den = integer_root(v.denominator, e)
        if num is None or den is None:
            return []
        r = Fraction(num, den)
        if e % 2 == 0:
            return [self(-r), self(r)]
        return [self(r if v > 0 else -r)]


def unit_group_order(F: Field):
    """|F*|; ``math.inf`` for the rationals."""
    return F.unit_count()


def enumerate_units(F: Field, n: int) -> list[Scalar]:
    return F.units(n)


def embed(F: Field, E: Field, a: Scalar) -> Scalar:
    """Image of a in E under the constant-polynomial embedding GF(p) -> GF(p^m)."""
    if not isinstance(F, PrimeField) or not isinstance(E, (PrimeField, ExtensionField)):
        raise FieldError("embedding is defined from a prime field into an extension of it")
    if F.p != E.p:
        raise FieldMismatchError(f"characteristic mismatch: {F.spec} vs {E.spec}")
    if a.field != F:
        raise FieldMismatchError(f"{a} is not an element of {F.spec}")
    return E(a.value)


_GF = re.compile(r"^gf:(\d+)(?:\^(\d+)(?::([\d,\s]+))?)?$")


def parse_field(text: str) -> Field:
    """Parse ``gf:p``, ``gf:p^m``, ``gf:p^m:c0,c1,...,1`` or ``rational``."""
    src = text.strip().lower()
    if src in ("rational", "q", "qq"):
        return RationalField()
    mt = _GF.match(src)
    if not mt:
        raise FieldError(f"unrecognised field spec {text!r}")
    p = int(mt.group(1))
    if mt.group(2) is None:
        return PrimeField(p)
    m = int(mt.group(2))
    if mt.group(3):
        coeffs = tuple(int(c) for c in mt.group(3).split(",") if c.strip())
        return ExtensionField(p, m, coeffs, explicit=True)
    if m == 1:
        return PrimeField(p)
    return ExtensionField(p, m)

"""Exact truncated power series in q over small coefficient rings.

Three rings are supported: Python integers, ``Z[sqrt 2]`` (``QuadElem``) and
integer polynomials in one tracking variable (``TrackedPoly``).  Every series
is reduced modulo ``q**(order + 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import comb
from typing import Any, Callable, Iterable, Sequence


class SeriesError(ArithmeticError):
    pass


class OrderMismatch(SeriesError):
    pass


class NonUnitConstantTerm(SeriesError):
    pass


class NotTruncatable(SeriesError):
    pass


class InexactDivision(SeriesError):
    pass


# ---------------------------------------------------------------------------
# coefficient types


@total_ordering
class QuadElem:
    """a + b*sqrt(2) with integer a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    @classmethod
    def coerce(cls, x) -> QuadElem:
        if isinstance(x, QuadElem):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to QuadElem")

    def __repr__(self):
        return f"QuadElem({self.a}, {self.b})"

    def __str__(self):
        return f"{self.a}{self.b:+}√2"

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadElem):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other):
        # lexicographic; only used for deterministic sorting, not the real order
        other = QuadElem.coerce(other)
        return (self.a, self.b) < (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __bool__(self):
        return bool(self.a or self.b)

    def __add__(self, other):
        if isinstance(other, (int, QuadElem)):
            o = QuadElem.coerce(other)
            return QuadElem(self.a + o.a, self.b + o.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, (int, QuadElem)):
            o = QuadElem.coerce(other)
            return QuadElem(self.a - o.a, self.b - o.b)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadElem(self.a * other, self.b * other)
        if isinstance(other, QuadElem):
            return QuadElem(self.a * other.a + 2 * self.b * other.b, self.a * other.b + self.b * other.a)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out, base = QuadElem(1), self
        if n < 0:
            raise ValueError("negative power")
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> QuadElem:
        return QuadElem(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def inverse(self) -> QuadElem:
        n = self.norm()
        if n not in (1, -1):
            raise NonUnitConstantTerm(f"{self} is not a unit in Z[sqrt2]")
        return self.conj() * n

    def div_int(self, d: int) -> QuadElem:
        if self.a % d or self.b % d:
            raise InexactDivision(f"{self} is not divisible by {d}")
        return QuadElem(self.a // d, self.b // d)

    def div_sqrt2(self) -> QuadElem:
        # (a + b r)/r = b + (a/2) r
        if self.a % 2:
            raise InexactDivision(f"{self} is not divisible by sqrt2")
        return QuadElem(self.b, self.a // 2)


SQRT2 = QuadElem(0, 1)


class TrackedPoly:
    """Integer polynomial in a tracking variable, coefficients by ascending degree."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def coerce(cls, x) -> TrackedPoly:
        if isinstance(x, TrackedPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot coerce {x!r} to TrackedPoly")

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> TrackedPoly:
        return cls([0] * degree + [coeff])

    def __repr__(self):
        return f"TrackedPoly({list(self.c)})"

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, d: int) -> int:
        return self.c[d] if 0 <= d < len(self.c) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = TrackedPoly((other,))
        if isinstance(other, TrackedPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        if not isinstance(other, (int, TrackedPoly)):
            return NotImplemented
        o = TrackedPoly.coerce(other).c
        n = max(len(self.c), len(o))
        return TrackedPoly(
            (self.c[i] if i < len(self.c) else 0) + (o[i] if i < len(o) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return TrackedPoly(-x for x in self.c)

    def __sub__(self, other):
        if not isinstance(other, (int, TrackedPoly)):
            return NotImplemented
        return self + (-TrackedPoly.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TrackedPoly(x * other for x in self.c)
        if not isinstance(other, TrackedPoly):
            return NotImplemented
        if not self.c or not other.c:
            return TrackedPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return TrackedPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = TrackedPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def is_unit(self) -> bool:
        return len(self.c) == 1 and self.c[0] in (1, -1)

    def inverse(self) -> TrackedPoly:
        if not self.is_unit():
            raise NonUnitConstantTerm(f"{self!r} is not a unit")
        return self

    def div_int(self, d: int) -> TrackedPoly:
        if any(x % d for x in self.c):
            raise InexactDivision(f"{self!r} is not divisible by {d}")
        return TrackedPoly(x // d for x in self.c)

    def at(self, x: int) -> int:
        out = 0
        for coeff in reversed(self.c):
            out = out * x + coeff
        return out


# ---------------------------------------------------------------------------
# rings


class Ring:
    """Coefficient ring contract used by ``TruncatedSeries``."""

    name = "Z"
    zero: Any = 0
    one: Any = 1

    def coerce(self, x):
        if not isinstance(x, int):
            raise TypeError(f"{x!r} is not an integer")
        return x

    def monomial(self, coeff, degree: int):
        if degree:
            raise ValueError(f"ring {self.name} has no tracking variable")
        return self.coerce(coeff)

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def inverse(self, x):
        if x not in (1, -1):
            raise NonUnitConstantTerm(f"{x} is not a unit in Z")
        return x

    def div_int(self, x, d: int):
        if x % d:
            raise InexactDivision(f"{x} is not divisible by {d}")
        return x // d

    def to_json(self, x):
        return str(x)


class QuadRing(Ring):
    name = "Z[sqrt2]"
    zero = QuadElem(0, 0)
    one = QuadElem(1, 0)

    def coerce(self, x):
        return QuadElem.coerce(x)

    def is_unit(self, x) -> bool:
        return self.coerce(x).is_unit()

    def inverse(self, x):
        return self.coerce(x).inverse()

    def div_int(self, x, d: int):
        return self.coerce(x).div_int(d)

    def to_json(self, x):
        return [str(x.a), str(x.b)]


class TrackedRing(Ring):
    zero = TrackedPoly()
    one = TrackedPoly((1,))

    def __init__(self, var: str = "z"):
        self.var = var
        self.name = f"Z[{var}]"

    def __eq__(self, other):
        return isinstance(other, TrackedRing)

    def __hash__(self):
        return hash(TrackedRing)

    def coerce(self, x):
        return TrackedPoly.coerce(x)

    def monomial(self, coeff, degree: int):
        return TrackedPoly.monomial(coeff, degree)

    def is_unit(self, x) -> bool:
        return self.coerce(x).is_unit()

    def inverse(self, x):
        return self.coerce(x).inverse()

    def div_int(self, x, d: int):
        return self.coerce(x).div_int(d)

    def to_json(self, x):
        return [str(v) for v in x.c]


INTEGERS = Ring()
ZSQRT2 = QuadRing()


def _same_ring(r1: Ring, r2: Ring) -> bool:
    return r1 is r2 or type(r1) is type(r2)


# ---------------------------------------------------------------------------
# series


class TruncatedSeries:
    """Power series c_0 + c_1 q + ... + c_N q^N, exact modulo q^(N+1)."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable, order: int | None = None, ring: Ring = INTEGERS):
        c = [ring.coerce(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            c = c[: order + 1] + [ring.zero] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs an order")
        self.coeffs = c
        self.ring = ring

    @classmethod
    def one(cls, order: int, ring: Ring = INTEGERS) -> TruncatedSeries:
        return cls([ring.one], order, ring)

    @classmethod
    def zero(cls, order: int, ring: Ring = INTEGERS) -> TruncatedSeries:
        return cls([], order, ring)

    @classmethod
    def monomial(cls, coeff, exponent: int, order: int, ring: Ring = INTEGERS) -> TruncatedSeries:
        s = cls.zero(order, ring)
        if exponent <= order:
            s.coeffs[exponent] = ring.coerce(coeff)
        return s

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = ", ".join(map(str, self.coeffs[:8]))
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"TruncatedSeries([{head}{more}], order={self.order}, ring={self.ring.name})"

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def _check(self, other: TruncatedSeries) -> None:
        if other.order != self.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")
        if not _same_ring(self.ring, other.ring):
            raise TypeError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([x + y for x, y in zip(self.coeffs, other.coeffs)], ring=self.ring)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([x - y for x, y in zip(self.coeffs, other.coeffs)], ring=self.ring)

    def __neg__(self):
        return TruncatedSeries([-x for x in self.coeffs], ring=self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(_cauchy(self.coeffs, other.coeffs, self.ring.zero), ring=self.ring)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar) -> TruncatedSeries:
        s = self.ring.coerce(scalar)
        return TruncatedSeries([s * x for x in self.coeffs], ring=self.ring)

    def shift(self, e: int) -> TruncatedSeries:
        """Multiply by q**e."""
        n = len(self.coeffs)
        return TruncatedSeries([self.ring.zero] * min(e, n) + self.coeffs[: max(n - e, 0)], ring=self.ring)

    def invert(self) -> TruncatedSeries:
        c0 = self.coeffs[0]
        if not self.ring.is_unit(c0):
            raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
        inv0 = self.ring.inverse(c0)
        out = [inv0]
        f = self.coeffs
        for n in range(1, len(f)):
            acc = self.ring.zero
            for i in range(1, n + 1):
                if f[i]:
                    acc = acc + f[i] * out[n - i]
            out.append(-(acc * inv0))
        return TruncatedSeries(out, ring=self.ring)

    def map(self, fn: Callable, ring: Ring | None = None) -> TruncatedSeries:
        return TruncatedSeries([fn(x) for x in self.coeffs], ring=ring or self.ring)

    def div_int(self, d: int) -> TruncatedSeries:
        return self.map(lambda x: self.ring.div_int(x, d))

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, order, self.ring)

    def mul_binomial(self, a, e: int) -> TruncatedSeries:
        """Multiply by (1 - a*q**e) in O(N)."""
        f = self.coeffs
        out = list(f)
        if e == 0:
            return self.scale(self.ring.one - a)
        for n in range(e, len(f)):
            if f[n - e]:
                out[n] = out[n] - a * f[n - e]
        return TruncatedSeries(out, ring=self.ring)

    def div_binomial(self, a, e: int) -> TruncatedSeries:
        """Divide by (1 - a*q**e) in O(N); e = 0 needs 1 - a to be a unit."""
        if e == 0:
            return self.scale(self.ring.inverse(self.ring.one - a))
        out = list(self.coeffs)
        for n in range(e, len(out)):
            if out[n - e]:
                out[n] = out[n] + a * out[n - e]
        return TruncatedSeries(out, ring=self.ring)

    def to_json(self) -> list:
        return [self.ring.to_json(x) for x in self.coeffs]

    def at_one(self) -> TruncatedSeries:
        """Set the tracking variable to 1 (tracked series only)."""
        return self.map(lambda p: p.at(1), INTEGERS)


def _cauchy(f: Sequence, g: Sequence, zero) -> list:
    n = len(f)
    out = [zero] * n
    for i, x in enumerate(f):
        if not x:
            continue
        for j in range(n - i):
            y = g[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f + g


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


def series_scale(f: TruncatedSeries, scalar) -> TruncatedSeries:
    return f.scale(scalar)


def series_invert(f: TruncatedSeries) -> TruncatedSeries:
    return f.invert()


def first_difference(f: TruncatedSeries, g: TruncatedSeries) -> int | None:
    """Smallest index where the coefficients differ, None if equal up to the shorter order."""
    for n, (x, y) in enumerate(zip(f.coeffs, g.coeffs)):
        if x != y:
            return n
    return None


# ---------------------------------------------------------------------------
# q-Pochhammer products


@dataclass(frozen=True)
class FactorSpec:
    """The base ``a = coeff * q**q_exp * v**track_exp`` of ``(a; q**step)``."""

    coeff: Any = 1
    q_exp: int = 1
    track_exp: int = 0
    step: int = 1

    def ring(self) -> Ring:
        if self.track_exp:
            return TrackedRing()
        if isinstance(self.coeff, QuadElem):
            return ZSQRT2
        return INTEGERS

    def element(self, ring: Ring):
        return ring.monomial(self.coeff, self.track_exp)

    def negated(self) -> FactorSpec:
        return FactorSpec(-self.coeff, self.q_exp, self.track_exp, self.step)


def _factor_exponents(spec: FactorSpec, count: int | None, order: int) -> list[int]:
    if spec.q_exp < 0:
        raise NotTruncatable(f"negative q exponent in {spec}")
    if count is None:
        if spec.step <= 0:
            raise NotTruncatable(f"infinitely many factors reach q^0..q^{order}: {spec}")
        return list(range(spec.q_exp, order + 1, spec.step))
    if spec.step < 0:
        raise NotTruncatable(f"negative step in {spec}")
    return [e for e in (spec.q_exp + i * spec.step for i in range(count)) if e <= order]


def poch_finite(spec: FactorSpec, n: int, order: int, ring: Ring | None = None) -> TruncatedSeries:
    """(a; q^step)_n = prod_{i<n} (1 - a q^(i*step)) modulo q^(order+1)."""
    if n < 0:
        raise ValueError("factor count must be nonnegative")
    ring = ring or spec.ring()
    a = spec.element(ring)
    out = TruncatedSeries.one(order, ring)
    for e in _factor_exponents(spec, n, order):
        out = out.mul_binomial(a, e)
    return out


def poch_infinite(spec: FactorSpec, order: int, ring: Ring | None = None) -> TruncatedSeries:
    """(a; q^step)_oo modulo q^(order+1); factors beyond q^order are 1."""
    ring = ring or spec.ring()
    a = spec.element(ring)
    out = TruncatedSeries.one(order, ring)
    for e in _factor_exponents(spec, None, order):
        out = out.mul_binomial(a, e)
    return out


def poch_infinite_inverse(spec: FactorSpec, order: int, ring: Ring | None = None) -> TruncatedSeries:
    """1/(a; q^step)_oo, built factor by factor as geometric series."""
    ring = ring or spec.ring()
    a = spec.element(ring)
    out = TruncatedSeries.one(order, ring)
    for e in _factor_exponents(spec, None, order):
        out = out.div_binomial(a, e)
    return out


def poch_finite_inverse(spec: FactorSpec, n: int, order: int, ring: Ring | None = None) -> TruncatedSeries:
    ring = ring or spec.ring()
    a = spec.element(ring)
    out = TruncatedSeries.one(order, ring)
    for e in _factor_exponents(spec, n, order):
        out = out.div_binomial(a, e)
    return out


# ---------------------------------------------------------------------------
# Euler's identity  sum_n q^C(n,2) a^n / (q;q)_n = (-a; q)_oo


def euler_sum(a: FactorSpec, order: int, parity: int | None = None, ring: Ring | None = None) -> TruncatedSeries:
    """Left side of Euler's identity, optionally only the terms with n % 2 == parity.

    Only the monomial of ``a`` is used; the base is always q.
    """
    ring = ring or a.ring()
    out = TruncatedSeries.zero(order, ring)
    base = a.element(ring)
    inv = TruncatedSeries.one(order, ring)  # 1/(q;q)_n
    n = 0
    while comb(n, 2) + n * a.q_exp <= order:
        if n:
            inv = inv.div_binomial(ring.one, n)
        if parity is None or n % 2 == parity:
            lead = comb(n, 2) + n * a.q_exp
            out = out + (inv.shift(lead) * base**n)
        n += 1
    return out


def euler_product_check(a: FactorSpec, order: int, ring: Ring | None = None) -> bool:
    ring = ring or a.ring()
    lhs = euler_sum(a, order, ring=ring)
    rhs = poch_infinite(FactorSpec(-a.coeff, a.q_exp, a.track_exp, 1), order, ring)
    return lhs == rhs


def euler_dissection(a: FactorSpec, order: int, ring: Ring | None = None) -> tuple[bool, bool]:
    """Check the even-power and odd-power halves of Euler's identity.

    even: sum_n q^C(2n,2) a^(2n)/(q;q)_2n       = ((-a;q)_oo + (a;q)_oo)/2
    odd:  sum_n q^C(2n+1,2) a^(2n+1)/(q;q)_2n+1 = ((-a;q)_oo - (a;q)_oo)/2
    """
    ring = ring or a.ring()
    plus = poch_infinite(FactorSpec(-a.coeff, a.q_exp, a.track_exp, 1), order, ring)
    minus = poch_infinite(FactorSpec(a.coeff, a.q_exp, a.track_exp, 1), order, ring)
    even = euler_sum(a, order, parity=0, ring=ring) == (plus + minus).div_int(2)
    odd = euler_sum(a, order, parity=1, ring=ring) == (plus - minus).div_int(2)
    return even, odd

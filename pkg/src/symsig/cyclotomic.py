"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

Elements are represented on the power basis 1, z, ..., z^(phi(m)-1) modulo the
m-th cyclotomic polynomial Phi_m — *not* modulo x^m - 1, which is not a field
and would break equality tests (1 + z + ... + z^(m-1) must be exactly 0).

Everything here is exact: coefficients are arbitrary-precision rationals,
stored as one integer vector plus a shared positive denominator so that the
inner loops are pure big-int arithmetic.  The only floating-point door is
``embed_complex``, which evaluates at e^(2*pi*i/m) and is reserved for error
bounds, never for exact results.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

# Rational scalar type: always reduced, denominator > 0.  The stdlib
# Fraction satisfies both invariants, so it *is* our Rational.
Rational = Fraction


class ConsistencyError(Exception):
    """An internal exactness invariant failed (this is a bug, not bad input)."""


def euler_phi(m: int) -> int:
    """Euler's totient of m >= 1."""
    if m < 1:
        raise ValueError(f"totient undefined for {m}")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return tuple(out)


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> tuple[int, ...]:
    """Divide num by monic den over Z; the division must be exact."""
    if den[-1] != 1:
        raise ConsistencyError("divisor is not monic")
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dn]
        if c:
            quot[k] = c
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num):
        raise ConsistencyError("polynomial division left a remainder")
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first, monic.

    Computed by exact division of x^m - 1 by the product of Phi_d over the
    proper divisors d of m (the recursion bottoms out at Phi_1 = x - 1).
    """
    if m < 1:
        raise ValueError(f"no cyclotomic polynomial for {m}")
    if m == 1:
        return (-1, 1)
    den: tuple[int, ...] = (1,)
    for d in divisors(m)[:-1]:
        den = _poly_mul(den, cyclotomic_polynomial(d))
    num = [-1] + [0] * (m - 1) + [1]
    return _poly_div_exact(num, den)


class CycloContext:
    """The field Q(zeta_m): conductor, Phi_m, and reduction tables.

    Contexts are interned by conductor (see ``get_context``), so identity
    comparison of contexts is meaningful and elements of different conductors
    refuse to mix rather than silently coercing.
    """

    __slots__ = ("m", "degree", "poly", "_red", "_zeta_num", "zero", "one")

    def __init__(self, m: int):
        if m < 1:
            raise ValueError(f"conductor must be positive, got {m}")
        self.m = m
        self.poly = cyclotomic_polynomial(m)
        self.degree = len(self.poly) - 1  # phi(m)
        d = self.degree
        # _red[k] = integer coefficient vector of x^(d+k) reduced mod Phi_m,
        # for k in [0, d-1); products of reduced elements never need more.
        # Phi_m is monic with integer coefficients, so these rows stay integral.
        row = [-c for c in self.poly[:d]]
        red = [tuple(row)]
        for _ in range(d - 2):
            lead = row[-1]
            row = [0] + row[:-1]
            if lead:
                for j, rj in enumerate(red[0]):
                    row[j] += lead * rj
            red.append(tuple(row))
        self._red = red
        # _zeta_num[e] = reduced integer vector of z^e, e in [0, m).
        pows = []
        vec = [0] * d
        vec[0] = 1
        for _ in range(m):
            pows.append(tuple(vec))
            lead = vec[-1]
            vec = [0] + vec[:-1]
            if lead:
                for j, rj in enumerate(red[0]):
                    vec[j] += lead * rj
        self._zeta_num = pows
        self.zero = CycloElement(self, (0,) * d, 1)
        self.one = CycloElement(self, pows[0], 1)

    def zeta(self, k: int = 1) -> "CycloElement":
        """The root of unity zeta_m^k (k taken modulo m)."""
        return CycloElement(self, self._zeta_num[k % self.m], 1)

    def rational(self, value) -> "CycloElement":
        """Embed a rational number as a constant element."""
        f = Fraction(value)
        num = [0] * self.degree
        num[0] = f.numerator
        return CycloElement._make(self, num, f.denominator)

    def from_coeffs(self, coeffs) -> "CycloElement":
        """Element with the given power-basis rational coefficients."""
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != self.degree:
            raise ValueError(
                f"need {self.degree} coefficients for conductor {self.m}, got {len(fracs)}"
            )
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        num = [f.numerator * (den // f.denominator) for f in fracs]
        return CycloElement._make(self, num, den)

    def from_counts(self, counts) -> "CycloElement":
        """Sum of counts[e] * zeta^e over e in [0, m), with integer counts.

        This is the cheap bridge from eigenvalue-exponent bookkeeping (where
        symmetric-power character values are just multisets of exponents) back
        to reduced field elements.
        """
        if len(counts) != self.m:
            raise ValueError(f"need {self.m} counts, got {len(counts)}")
        acc = [0] * self.degree
        for e, c in enumerate(counts):
            if c:
                for j, pj in enumerate(self._zeta_num[e]):
                    if pj:
                        acc[j] += c * pj
        return CycloElement._make(self, acc, 1)

    def __repr__(self) -> str:
        return f"CycloContext(m={self.m})"


@lru_cache(maxsize=None)
def get_context(m: int) -> CycloContext:
    return CycloContext(m)


class CycloElement:
    """An element of Q(zeta_m), reduced modulo Phi_m.

    Internally an integer numerator vector of length phi(m) plus one positive
    denominator, normalized so gcd(content(num), den) = 1.  The ``coeffs``
    property presents the rational view: a tuple of phi(m) Fractions.
    """

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: CycloContext, num, den: int):
        self.ctx = ctx
        self.num = tuple(num)
        self.den = den

    @staticmethod
    def _make(ctx: CycloContext, num: list[int], den: int) -> "CycloElement":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-v for v in num]
        g = den
        for v in num:
            g = math.gcd(g, v)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [v // g for v in num]
        if den != 1 and not any(num):
            den = 1
        return CycloElement(ctx, num, den)

    # -- views ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    @property
    def is_zero(self) -> bool:
        return not any(self.num)

    def to_rational(self) -> Fraction | None:
        """The element as a Rational, or None if it is not rational."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def embed_complex(self) -> complex:
        """Numeric value at zeta_m = e^(2*pi*i/m).  Bounds only, never exact."""
        m = self.ctx.m
        total = 0j
        for j, v in enumerate(self.num):
            if v:
                total += v * cmath.exp(2j * cmath.pi * j / m)
        return total / self.den

    def sort_key(self):
        return self.coeffs

    # -- arithmetic --------------------------------------------------------

    def _check_ctx(self, other: "CycloElement") -> None:
        if self.ctx is not other.ctx and self.ctx.m != other.ctx.m:
            raise ValueError(
                f"conductor mismatch: {self.ctx.m} vs {other.ctx.m}"
            )

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            self._check_ctx(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        if da == db:
            num = [x + y for x, y in zip(self.num, o.num)]
            return CycloElement._make(self.ctx, num, da)
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        num = [x * ma + y * mb for x, y in zip(self.num, o.num)]
        return CycloElement._make(self.ctx, num, da * ma)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.ctx, tuple(-v for v in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        d = ctx.degree
        out = [0] * (2 * d - 1)
        for i, ai in enumerate(self.num):
            if ai:
                for j, bj in enumerate(o.num):
                    if bj:
                        out[i + j] += ai * bj
        red = ctx._red
        for k in range(2 * d - 2, d - 1, -1):
            c = out[k]
            if c:
                for j, rj in enumerate(red[k - d]):
                    if rj:
                        out[j] += c * rj
        return CycloElement._make(ctx, out[:d], self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "CycloElement":
        """Multiplicative inverse via extended gcd with Phi_m."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")

        # Cold path: Fraction-coefficient extended Euclid against Phi_m,
        # maintaining a = sa * self (mod Phi_m) and b = sb * self (mod Phi_m).
        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        def sub_scaled(p, q, c, shift):
            out = list(p) + [Fraction(0)] * max(0, len(q) + shift - len(p))
            for i, qi in enumerate(q):
                out[i + shift] -= c * qi
            return trim(out)

        a = trim([Fraction(v, self.den) for v in self.num])
        b = trim([Fraction(c) for c in self.ctx.poly])
        sa, sb = [Fraction(1)], []
        while b:
            if len(a) < len(b):
                a, b, sa, sb = b, a, sb, sa
                continue
            c = a[-1] / b[-1]
            shift = len(a) - len(b)
            a = sub_scaled(a, b, c, shift)
            sa = sub_scaled(sa, sb, c, shift)
        if len(a) != 1:
            raise ConsistencyError(
                f"gcd with Phi_{self.ctx.m} is not constant; Phi reducible or bug"
            )
        scale = a[0]
        inv_coeffs = [c / scale for c in sa]
        inv_coeffs += [Fraction(0)] * (self.ctx.degree - len(inv_coeffs))
        result = self.ctx.from_coeffs(inv_coeffs[: self.ctx.degree])
        if (result * self) != self.ctx.one:
            raise ConsistencyError("inverse check failed")
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int) -> "CycloElement":
        if k < 0:
            return self.inv() ** (-k)
        result = self.ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "CycloElement":
        """Image under the automorphism zeta_m -> zeta_m^(-1)."""
        ctx = self.ctx
        acc = [0] * ctx.degree
        for j, v in enumerate(self.num):
            if v:
                for t, pt in enumerate(ctx._zeta_num[(ctx.m - j) % ctx.m]):
                    if pt:
                        acc[t] += v * pt
        return CycloElement._make(ctx, acc, self.den)

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return (
            self.ctx.m == other.ctx.m
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return hash((self.ctx.m, self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for j, v in enumerate(self.num):
            if not v:
                continue
            c = Fraction(v, self.den)
            if j == 0:
                terms.append((c, ""))
            elif j == 1:
                terms.append((c, "z"))
            else:
                terms.append((c, f"z^{j}"))
        if not terms:
            return "0"
        parts = []
        for i, (c, mon) in enumerate(terms):
            sign = "-" if c < 0 else ("+" if i else "")
            mag = -c if c < 0 else c
            if mon and mag == 1:
                body = mon
            elif mon:
                body = f"{mag}*{mon}"
            else:
                body = str(mag)
            parts.append(f"{sign} {body}" if i else f"{sign}{body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Cyclo(m={self.ctx.m}: {self})"


# Free-function spellings, for callers who prefer them over methods.


def root_of_unity(ctx: CycloContext, k: int) -> CycloElement:
    return ctx.zeta(k)


def add(x: CycloElement, y: CycloElement) -> CycloElement:
    return x + y


def mul(x: CycloElement, y: CycloElement) -> CycloElement:
    return x * y


def neg(x: CycloElement) -> CycloElement:
    return -x


def inv(x: CycloElement) -> CycloElement:
    return x.inv()


def conjugate(x: CycloElement) -> CycloElement:
    return x.conjugate()


def to_rational(x: CycloElement) -> Fraction | None:
    return x.to_rational()


def embed_complex(x: CycloElement) -> complex:
    return x.embed_complex()

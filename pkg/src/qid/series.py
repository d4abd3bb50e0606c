"""Exact truncated Laurent series over arbitrary-precision rationals.

A series is stored densely on an integer exponent window [min_exp, order]
and is known modulo q^(order+1).  Truncation order is data: every operation
computes the tightest order that is sound for its inputs, so precision loss
is visible rather than silent.  All coefficient arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NotInvertibleError, TruncationError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Below this size schoolbook convolution beats big-integer packing.
_SMALL_CONV = 16


def _pack(coeffs: list[int], bits: int) -> int:
    x = 0
    for c in reversed(coeffs):
        x = (x << bits) + c
    return x


def _unpack(x: int, bits: int, n: int) -> list[int]:
    full = 1 << bits
    half = full >> 1
    mask = full - 1
    out = []
    for _ in range(n):
        d = x & mask
        if d >= half:
            d -= full
            x += full
        out.append(d)
        x >>= bits
    return out


def _convolve_int(a: list[int], b: list[int], n_out: int) -> list[int]:
    """First n_out coefficients of the product of two integer polynomials.

    Uses Kronecker substitution (pack into one big integer, multiply,
    unpack with balanced digits) so the cost is one big-int multiply.
    """
    out = [0] * n_out
    if not a or not b or n_out <= 0:
        return out
    nnz_a = sum(1 for c in a if c)
    nnz_b = sum(1 for c in b if c)
    if nnz_a == 0 or nnz_b == 0:
        return out
    if min(nnz_a, nnz_b) <= _SMALL_CONV:
        if nnz_a > nnz_b:
            a, b = b, a
        for i, ai in enumerate(a):
            if ai and i < n_out:
                for j, bj in enumerate(b[: n_out - i]):
                    if bj:
                        out[i + j] += ai * bj
        return out
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    bound = min(len(a), len(b)) * max_a * max_b
    bits = bound.bit_length() + 2
    prod = _pack(a, bits) * _pack(b, bits)
    return _unpack(prod, bits, n_out)


def _to_int_scaled(coeffs) -> tuple[list[int], int]:
    """Clear denominators; return (integer coefficients, common denominator)."""
    den = 1
    for c in coeffs:
        d = c.denominator if isinstance(c, Fraction) else 1
        if d != 1:
            den = lcm(den, d)
    if den == 1:
        return [int(c) for c in coeffs], 1
    return [int(c * den) for c in coeffs], den


def _mul_list(a, b, n_out: int) -> list[Fraction]:
    """First n_out coefficients of the product of two rational coefficient lists."""
    ia, da = _to_int_scaled(a)
    ib, db = _to_int_scaled(b)
    raw = _convolve_int(ia, ib, n_out)
    d = da * db
    if d == 1:
        return [Fraction(c) for c in raw]
    return [Fraction(c, d) for c in raw]


def _invert_list(c, n_out: int) -> list[Fraction]:
    """Inverse of a power series given by coefficient list c (c[0] != 0),
    correct through n_out coefficients, by Newton iteration."""
    x = [1 / Fraction(c[0])]
    k = 1
    while k < n_out:
        k = min(2 * k, n_out)
        cx = _mul_list(c[:k], x, k)
        # x <- x * (2 - c*x)
        corr = [-t for t in cx]
        corr[0] += 2
        x = _mul_list(x, corr, k)
    return x


@dataclass(frozen=True, eq=False)
class TruncatedLaurentSeries:
    """Dense exact-rational Laurent series known modulo q^(order+1).

    coeffs[i] is the coefficient of q^(min_exp + i).  An empty window
    (order == min_exp - 1) means "known to be O(q^(order+1)) only".
    """

    min_exp: int
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order - self.min_exp + 1:
            raise ValueError("coefficient window does not match [min_exp, order]")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: dict[int, Fraction | int], order: int) -> "TruncatedLaurentSeries":
        terms = {e: Fraction(c) for e, c in terms.items() if e <= order and c != 0}
        if not terms:
            return cls(0, order, tuple(_ZERO for _ in range(order + 1))) if order >= 0 \
                else cls(order + 1, order, ())
        lo = min(min(terms), 0)
        return cls(lo, order, tuple(terms.get(e, _ZERO) for e in range(lo, order + 1)))

    @classmethod
    def zero(cls, order: int) -> "TruncatedLaurentSeries":
        return cls.from_terms({}, order)

    @classmethod
    def one(cls, order: int) -> "TruncatedLaurentSeries":
        return cls.from_terms({0: 1}, order)

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: Fraction | int = 1) -> "TruncatedLaurentSeries":
        return cls.from_terms({exp: coeff}, order)

    # -- inspection ----------------------------------------------------------

    def coefficient(self, n: int) -> Fraction:
        if n > self.order:
            raise TruncationError(f"coefficient of q^{n} is beyond truncation order {self.order}")
        if n < self.min_exp:
            return _ZERO
        return self.coeffs[n - self.min_exp]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def lowest_nonzero(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return self.min_exp + i
        return None

    def nonzero_terms(self) -> dict[int, Fraction]:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self.order == other.order and self.nonzero_terms() == other.nonzero_terms()

    def __repr__(self):
        terms = self.nonzero_terms()
        if not terms:
            body = "0"
        else:
            parts = []
            for e in sorted(terms):
                c = terms[e]
                mono = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
                parts.append(f"{c}*{mono}" if e != 0 else str(c))
            body = " + ".join(parts)
        return f"<{body} + O(q^{self.order + 1})>"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "TruncatedLaurentSeries") -> "TruncatedLaurentSeries":
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp)
        n = order - lo + 1
        if n <= 0:
            return TruncatedLaurentSeries(order + 1, order, ())
        out = [_ZERO] * n
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.min_exp + i
                if e <= order:
                    out[e - lo] += c
        return TruncatedLaurentSeries(lo, order, tuple(out))

    def __neg__(self) -> "TruncatedLaurentSeries":
        return TruncatedLaurentSeries(self.min_exp, self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "TruncatedLaurentSeries") -> "TruncatedLaurentSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedLaurentSeries") -> "TruncatedLaurentSeries":
        lo = self.min_exp + other.min_exp
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        n = order - lo + 1
        if n <= 0:
            return TruncatedLaurentSeries(order + 1, order, ())
        out = _mul_list(list(self.coeffs), list(other.coeffs), n)
        return TruncatedLaurentSeries(lo, order, tuple(out))

    def scale(self, c: Fraction | int) -> "TruncatedLaurentSeries":
        c = Fraction(c)
        return TruncatedLaurentSeries(self.min_exp, self.order, tuple(c * x for x in self.coeffs))

    def shift(self, r: int) -> "TruncatedLaurentSeries":
        """Exact multiplication by q^r."""
        return TruncatedLaurentSeries(self.min_exp + r, self.order + r, self.coeffs)

    def invert(self) -> "TruncatedLaurentSeries":
        """Inverse b with self*b = 1 + O(q^(M+1)), M = order - 2e, where
        c*q^e is the lowest nonzero term of self."""
        e = self.lowest_nonzero()
        if e is None:
            raise NotInvertibleError("not invertible at this truncation: all-zero window")
        unit = self.coeffs[e - self.min_exp :]  # power-series part, constant term nonzero
        inv = _invert_list(list(unit), len(unit))
        return TruncatedLaurentSeries(-e, self.order - 2 * e, tuple(inv))

    def substitute_power(self, m: int) -> "TruncatedLaurentSeries":
        """q -> q^m (m >= 1): exponent e becomes m*e."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        lo = m * self.min_exp
        order = m * self.order + (m - 1)
        out = [_ZERO] * (order - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return TruncatedLaurentSeries(lo, order, tuple(out))

    def pow(self, n: int) -> "TruncatedLaurentSeries":
        if n < 0:
            return self.invert().pow(-n)
        # exponentiation by squaring; order bookkeeping is handled by __mul__
        acc = None
        base = self
        k = n
        if k == 0:
            return TruncatedLaurentSeries.one(self.order)
        while k:
            if k & 1:
                acc = base if acc is None else acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def truncate(self, new_order: int) -> "TruncatedLaurentSeries":
        """Restrict to a (weakly) smaller order."""
        if new_order >= self.order:
            return self
        n = new_order - self.min_exp + 1
        if n <= 0:
            return TruncatedLaurentSeries(new_order + 1, new_order, ())
        return TruncatedLaurentSeries(self.min_exp, new_order, self.coeffs[:n])


# Functional aliases matching the operation-level API.

def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_invert(a):
    return a.invert()


def series_substitute_power(a, m):
    return a.substitute_power(m)


def series_coefficient(a, n):
    return a.coefficient(n)

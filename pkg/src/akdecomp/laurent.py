"""Integer Laurent polynomials in one variable ``q``.

A :class:`LaurentPoly` stores a dense coefficient tuple over the exponent
range ``[lo, lo + len(coeffs) - 1]``. The constructor trims zero coefficients
at both ends, so every polynomial has exactly one representation and the zero
polynomial is ``LaurentPoly(0, ())``.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Iterator

from .errors import NotDivisibleError


class LaurentPoly:
    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int = 0, coeffs: Iterable[int] = ()):
        coeffs = [int(c) for c in coeffs]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            lo, coeffs = 0, []
        else:
            lo, coeffs = lo + start, coeffs[start:end]
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __reduce__(self):
        return (LaurentPoly, (self.lo, self.coeffs))

    # -- constructors -------------------------------------------------

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls(exp, (coeff,))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> LaurentPoly:
        """Build from ``(exponent, coefficient)`` pairs; repeated exponents add."""
        acc: dict[int, int] = {}
        for k, c in terms:
            acc[k] = acc.get(k, 0) + c
        acc = {k: c for k, c in acc.items() if c}
        if not acc:
            return cls()
        lo, hi = min(acc), max(acc)
        return cls(lo, (acc.get(k, 0) for k in range(lo, hi + 1)))

    # -- inspection ---------------------------------------------------

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, exp: int) -> int:
        k = exp - self.lo
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in increasing exponent."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield self.lo + k, c

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.lo - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.lo - lo + k] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.lo, (-c for c in self.coeffs))

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.lo + other.lo, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return LaurentPoly(self.lo * k, (self.coeffs[0] ** -k,))
            raise ValueError("only monomials with unit coefficient are invertible")
        result = LaurentPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.lo, self.coeffs))

    # -- q-specific operations ----------------------------------------

    def bar(self) -> LaurentPoly:
        """The ring involution q -> q^-1."""
        return LaurentPoly(-self.hi, reversed(self.coeffs)) if self.coeffs else self

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def in_qZq(self) -> bool:
        """True when every nonzero term has exponent >= 1 (true for zero)."""
        return not self.coeffs or self.lo >= 1

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for exp, c in sorted(self.terms(), reverse=True):
            if exp == 0:
                body = str(abs(c))
            else:
                var = "q" if exp == 1 else f"q^{exp}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if c < 0:
                out.append("-" + body)
            else:
                out.append(("+" if out else "") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def q_int(k: int) -> LaurentPoly:
    """Balanced quantum integer [k] = q^(k-1) + q^(k-3) + ... + q^(1-k)."""
    if k < 1:
        raise ValueError(f"q_int needs k >= 1, got {k}")
    return LaurentPoly.from_terms((k - 1 - 2 * j, 1) for j in range(k))


def signed_q_int(m: int) -> LaurentPoly:
    """[m] extended to all integers by [0] = 0 and [-m] = -[m]."""
    if m == 0:
        return ZERO
    return q_int(m) if m > 0 else -q_int(-m)


def q_factorial(r: int) -> LaurentPoly:
    if r < 0:
        raise ValueError(f"q_factorial needs r >= 0, got {r}")
    return prod((q_int(k) for k in range(1, r + 1)), start=ONE)


def exact_div(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    """Return z with z * y == x, or raise NotDivisibleError.

    Long division from the lowest exponent upward; any fractional
    coefficient or leftover remainder is an error, never truncated.
    """
    if not y:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not x:
        return ZERO
    length = len(x.coeffs) - len(y.coeffs) + 1
    if length < 1:
        raise NotDivisibleError(f"{x} is not divisible by {y}")
    rem = list(x.coeffs)
    lead = y.coeffs[0]
    quot = []
    for j in range(length):
        c, r = divmod(rem[j], lead)
        if r:
            raise NotDivisibleError(f"{x} is not divisible by {y}")
        quot.append(c)
        if c:
            for t, b in enumerate(y.coeffs):
                rem[j + t] -= c * b
    if any(rem):
        raise NotDivisibleError(f"{x} is not divisible by {y}")
    return LaurentPoly(x.lo - y.lo, quot)


def bar_symmetric_completion(c: LaurentPoly) -> LaurentPoly:
    """The unique bar-invariant polynomial congruent to ``c`` modulo qZ[q].

    Keeps the coefficients of exponents <= 0 and mirrors the negative ones
    onto the positive side.
    """
    terms = []
    for exp, coeff in c.terms():
        if exp > 0:
            break
        terms.append((exp, coeff))
        if exp < 0:
            terms.append((-exp, coeff))
    return LaurentPoly.from_terms(terms)

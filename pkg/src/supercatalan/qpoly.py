"""Exact Laurent polynomials in ``q`` and the q-quantities built from them.

A :class:`QPoly` stores a dense run of Python integers together with the
exponent of its lowest term, so ``q**-1 + 2 + q`` is ``QPoly([1, 2, 1], -1)``.
Values are immutable and always kept in canonical form: no zero at either end
of the coefficient run, and the zero polynomial is the one with no
coefficients at all.

>>> q_int(3)
QPoly('1 + q + q^2')
>>> gaussian_binomial(4, 2)
QPoly('1 + q + 2*q^2 + q^3 + q^4')
>>> super_catalan_t_q(2, 2)
QPoly('1 + q + q^2')
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, InvariantViolation, NotDivisible

__all__ = [
    "QPoly", "PolyFraction", "Q", "ONE", "ZERO",
    "add", "sub", "mul", "neg", "shift", "exact_div",
    "q_int", "q_factorial", "gaussian_binomial",
    "super_catalan", "super_catalan_t", "super_catalan_q", "super_catalan_t_q",
    "ballot_q", "ballot_q_binomial_form",
    "is_nonnegative", "is_unimodal", "eval_at_one",
]


class QPoly:
    """Laurent polynomial in ``q`` with integer coefficients."""

    __slots__ = ("min_deg", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), min_deg: int = 0):
        c = [int(x) for x in coeffs]
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        object.__setattr__(self, "coeffs", tuple(c[lo:hi]))
        object.__setattr__(self, "min_deg", min_deg + lo if hi > lo else 0)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    def __reduce__(self):
        return QPoly, (self.coeffs, self.min_deg)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPoly:
        """Return ``c * q**k``."""
        return cls((c,), k)

    @classmethod
    def constant(cls, c: int) -> QPoly:
        return cls((c,), 0)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> QPoly:
        """Build from an ``{exponent: coefficient}`` mapping."""
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        c = [0] * (hi - lo + 1)
        for k, v in terms.items():
            c[k - lo] += v
        return cls(c, lo)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.min_deg + len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        i = k - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> dict[int, int]:
        """Nonzero terms as ``{exponent: coefficient}``."""
        return {self.min_deg + i: c for i, c in enumerate(self.coeffs) if c}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.min_deg == other.min_deg and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.min_deg, self.coeffs)))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.degree, other.degree)
        c = [0] * (hi - lo + 1)
        for i, v in enumerate(self.coeffs, self.min_deg - lo):
            c[i] += v
        for i, v in enumerate(other.coeffs, other.min_deg - lo):
            c[i] += v
        return QPoly(c, lo)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly([-x for x in self.coeffs], self.min_deg)

    def __sub__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        c = [0] * (len(a) + len(b) - 1)
        for j, y in enumerate(b):
            if y == 0:
                continue
            for i, x in enumerate(a, j):
                c[i] += x * y
        return QPoly(c, self.min_deg + other.min_deg)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return QPoly.monomial(-self.min_deg, self.coeffs[0]) ** (-k)
            raise ValueError("negative power of a non-unit")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return QPoly(self.coeffs, self.min_deg + k)

    # -- rendering and serialization ---------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k, c in self.terms().items():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"min_deg": self.min_deg, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> QPoly:
        return cls([int(c) for c in obj["coeffs"]], int(obj["min_deg"]))

    @classmethod
    def parse(cls, text: str) -> QPoly:
        """Inverse of ``str``: accepts e.g. ``"1 + 2*q - q^3"`` or ``"q^-2"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[int, int] = {}
        pos = 0
        for m in _TERM_RE.finditer(s):
            if m.start() != pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            pos = m.end()
            sign, num, var, exp = m.groups()
            if not num and not var:
                raise ValueError(f"cannot parse polynomial {text!r}")
            c = int(num) if num else 1
            k = (int(exp) if exp else 1) if var else 0
            terms[k] = terms.get(k, 0) + (c if sign == "+" else -c)
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls.from_terms(terms)


_TERM_RE = re.compile(r"([+-])(\d+)?(?:\*?(q)(?:\^(-?\d+))?)?")


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.constant(x)
    return NotImplemented


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((1,), 1)


# module-level spellings of the ring operations

def add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def sub(a: QPoly, b: QPoly) -> QPoly:
    return a - b


def mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def neg(a: QPoly) -> QPoly:
    return -a


def shift(a: QPoly, k: int) -> QPoly:
    return a.shift(k)


def exact_div(a: QPoly, b: QPoly) -> QPoly:
    """Return ``c`` with ``b * c == a``, or raise :class:`NotDivisible`.

    Both operands are first moved to start at ``q**0``; since the divisor
    then has a nonzero constant term, any Laurent quotient is an ordinary
    polynomial and plain long division from the top decides exactness.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    num = list(a.coeffs)
    den = b.coeffs
    lead = den[-1]
    dlen = len(den)
    if len(num) < dlen:
        raise NotDivisible(f"{b} does not divide {a}", remainder=a)
    quot = [0] * (len(num) - dlen + 1)
    for i in range(len(quot) - 1, -1, -1):
        top = num[i + dlen - 1]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise NotDivisible(
                f"{b} does not divide {a}",
                remainder=QPoly(num, a.min_deg),
            )
        quot[i] = c
        for j in range(dlen):
            num[i + j] -= c * den[j]
    if any(num):
        raise NotDivisible(f"{b} does not divide {a}", remainder=QPoly(num, a.min_deg))
    return QPoly(quot, a.min_deg - b.min_deg)


class PolyFraction:
    """Quotient ``num / den`` of two QPoly values, compared by cross-multiplying.

    No gcd reduction is ever attempted, so two equal fractions may carry
    different numerators and denominators.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly | int, den: QPoly | int = 1):
        num, den = _coerce(num), _coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("PolyFraction needs QPoly or int parts")
        if den.is_zero():
            raise ZeroDivisionError("PolyFraction with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("PolyFraction is immutable")

    def __reduce__(self):
        return PolyFraction, (self.num, self.den)

    @staticmethod
    def _lift(x) -> PolyFraction:
        if isinstance(x, PolyFraction):
            return x
        return PolyFraction(x)

    def __add__(self, other) -> PolyFraction:
        o = self._lift(other)
        if self.den == o.den:
            return PolyFraction(self.num + o.num, self.den)
        return PolyFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> PolyFraction:
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other) -> PolyFraction:
        return self + (-self._lift(other))

    def __mul__(self, other) -> PolyFraction:
        o = self._lift(other)
        return PolyFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, (PolyFraction, QPoly, int)):
            return NotImplemented
        o = self._lift(other)
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def to_poly(self) -> QPoly:
        """Collapse to a QPoly; raises NotDivisible if not a polynomial."""
        return exact_div(self.num, self.den)

    def __repr__(self) -> str:
        return f"PolyFraction(({self.num}) / ({self.den}))"


# -- closed-form q-quantities ------------------------------------------------

def _need_nonneg(name: str, *vals: int) -> None:
    for v in vals:
        if v < 0:
            raise DomainError(f"{name} needs nonnegative arguments, got {vals}")


@lru_cache(maxsize=None)
def q_int(r: int) -> QPoly:
    """``[r]_q = 1 + q + ... + q**(r-1)``; ``[0]_q`` is zero."""
    _need_nonneg("q_int", r)
    return QPoly([1] * r)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    _need_nonneg("q_factorial", n)
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> QPoly:
    _need_nonneg("gaussian_binomial", n)
    if k < 0 or k > n:
        return ZERO
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def _invariant_div(a: QPoly, b: QPoly, what: str) -> QPoly:
    try:
        return exact_div(a, b)
    except NotDivisible as exc:
        raise InvariantViolation(f"{what} is not a polynomial: {exc}") from exc


@lru_cache(maxsize=None)
def super_catalan_q(m: int, n: int) -> QPoly:
    """``[2m]! [2n]! / ([m]! [n]! [m+n]!)`` in q-factorials."""
    _need_nonneg("super_catalan_q", m, n)
    num = q_factorial(2 * m) * q_factorial(2 * n)
    den = q_factorial(m) * q_factorial(n) * q_factorial(m + n)
    return _invariant_div(num, den, f"S_q({m},{n})")


@lru_cache(maxsize=None)
def super_catalan_t_q(m: int, n: int) -> QPoly:
    """``S_q(m, n) / (1 + q**n)``; only defined for ``n >= 1``."""
    _need_nonneg("super_catalan_t_q", m, n)
    if n < 1:
        raise DomainError("super_catalan_t_q needs n >= 1 (1 + q^0 = 2 would leave Z[q])")
    return _invariant_div(super_catalan_q(m, n), ONE + Q.shift(n - 1), f"T_q({m},{n})")


def super_catalan(m: int, n: int) -> int:
    """Integer ``(2m)! (2n)! / (m! n! (m+n)!)``, computed with plain factorials."""
    from math import factorial
    _need_nonneg("super_catalan", m, n)
    num = factorial(2 * m) * factorial(2 * n)
    den = factorial(m) * factorial(n) * factorial(m + n)
    if num % den:
        raise InvariantViolation(f"S({m},{n}) is not an integer")
    return num // den


def super_catalan_t(m: int, n: int) -> int:
    """Integer ``S(m, n) / 2`` for ``m, n`` not both zero."""
    s = super_catalan(m, n)
    if s % 2:
        raise DomainError(f"S({m},{n}) = {s} is odd")
    return s // 2


def _check_ballot(n: int, r: int) -> None:
    if not (1 <= r <= n):
        raise DomainError(f"ballot_q needs 1 <= r <= n, got n={n}, r={r}")


@lru_cache(maxsize=None)
def ballot_q(n: int, r: int) -> QPoly:
    """q-Ballot number ``[2n-1]! [2r] / ([n+r]! [n-r]!)``."""
    _check_ballot(n, r)
    num = q_factorial(2 * n - 1) * q_int(2 * r)
    den = q_factorial(n + r) * q_factorial(n - r)
    return _invariant_div(num, den, f"B_q({n},{r})")


@lru_cache(maxsize=None)
def ballot_q_binomial_form(n: int, r: int) -> QPoly:
    """Same number as :func:`ballot_q`, via a difference of gaussian binomials."""
    _check_ballot(n, r)
    diff = gaussian_binomial(2 * n - 1, n + r - 1) - gaussian_binomial(2 * n - 1, n + r)
    return diff.shift(-(n - r))


# -- coefficient predicates --------------------------------------------------

def is_nonnegative(a: QPoly) -> bool:
    return all(c >= 0 for c in a.coeffs)


def is_unimodal(a: QPoly) -> bool:
    """Coefficients over ``min_deg..degree`` weakly rise, then weakly fall."""
    if a.is_zero():
        raise ValueError("unimodality is undefined for the zero polynomial")
    return _unimodal(a.coeffs)


def _unimodal(seq: Sequence[int]) -> bool:
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i == n - 1


def eval_at_one(a: QPoly) -> int:
    return sum(a.coeffs)

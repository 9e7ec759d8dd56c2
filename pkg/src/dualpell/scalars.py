"""Exact scalars: rational text format and the quadratic extension Q(sqrt(d)).

Rationals are stdlib ``fractions.Fraction`` values (always reduced, positive
denominator, exact equality). ``QuadExt`` adds a single square root so the
characteristic roots 1 +/- sqrt(1+k) of x^2 = 2x + k can be manipulated
exactly; when 1+k happens to be a perfect rational square the radical is
folded away so equality stays coefficient-wise decidable.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/[1-9]\d*)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (decimal digits, q > 0) into a Fraction.

    Rejects everything else: zero or signed denominators, decimals,
    exponents, empty strings.
    """
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"malformed rational: {text!r}")
    return Fraction(s)


def render_rational(x: Fraction) -> str:
    """Canonical text form: reduced, ``p`` or ``p/q`` with q > 0."""
    return str(Fraction(x))


def _rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of x if x is a square of a rational, else None."""
    if x < 0:
        return None
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


@dataclass(frozen=True, eq=False)
class QuadExt:
    """Field element a + b*sqrt(d) with rational a, b and fixed radicand d > 0.

    Two elements may be combined only when their radicands agree (plain ints
    and Fractions are coerced). If d is a perfect rational square the value
    normalizes to b = 0, so structural equality is mathematical equality in
    the degenerate case too.
    """

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "d", Fraction(self.d))
        if self.d <= 0:
            raise ValueError("radicand must be positive")
        if self.b:
            root = _rational_sqrt(self.d)
            if root is not None:
                object.__setattr__(self, "a", self.a + self.b * root)
                object.__setattr__(self, "b", Fraction(0))

    def _coerce(self, other: object) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mismatched radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        raise TypeError(f"cannot combine QuadExt with {type(other).__name__}")

    def __add__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other: object) -> "QuadExt":
        return self._coerce(other) - self

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __mul__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        return QuadExt(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        # (a+b sqrt d)^-1 = (a-b sqrt d)/(a^2 - b^2 d); the norm vanishes
        # only for the zero element because d is not a nonzero square here.
        norm = o.a * o.a - o.b * o.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        return QuadExt(
            (self.a * o.a - self.b * o.b * self.d) / norm,
            (self.b * o.a - self.a * o.b) / norm,
            self.d,
        )

    def __rtruediv__(self, other: object) -> "QuadExt":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "QuadExt":
        if n < 0:
            return (QuadExt(Fraction(1), Fraction(0), self.d) / self) ** (-n)
        result = QuadExt(Fraction(1), Fraction(0), self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        """Radical conjugate a + b*sqrt(d) -> a - b*sqrt(d)."""
        return QuadExt(self.a, -self.b, self.d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


def make_alpha_beta(k: Fraction | int) -> tuple[QuadExt, QuadExt]:
    """Characteristic roots 1 + sqrt(1+k) and 1 - sqrt(1+k) of x^2 = 2x + k.

    Requires k > 0. Their sum is 2 and their product is -k.
    """
    k = Fraction(k)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    d = 1 + k
    return QuadExt(Fraction(1), Fraction(1), d), QuadExt(Fraction(1), Fraction(-1), d)


def rationalize(x: QuadExt | Fraction | int) -> Fraction:
    """Collapse a radical-free value to a plain Fraction.

    Raises ValueError when the radical coefficient is nonzero.
    """
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if x.b != 0:
        raise ValueError(f"not a rational value: {x}")
    return x.a

"""The commutative dual-complex ring on the basis {1, i, eps, i*eps}.

Multiplication follows i^2 = -1, eps^2 = 0, (i*eps)^2 = 0, i*eps = eps*i.
Writing w = z1 + eps*z2 with complex z1, z2, an element is invertible exactly
when z1 is nonzero; elements with z1 = 0 are zero divisors (eps is nilpotent).

Coefficients are generic over an exact scalar ring: everything here works the
same over Fraction and over QuadExt, which is how the Binet machinery reuses
one multiplication code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from .scalars import parse_rational


class NonInvertibleError(ZeroDivisionError):
    """The divisor's complex part is zero, so no inverse exists."""


class Conjugation(Enum):
    """The five conjugations of a dual-complex number.

    COMPLEX       z1* + eps z2*        (negate both i-slots)
    DUAL          z1  - eps z2         (negate the eps half)
    COUPLED       z1* - eps z2*        (composition of the two above)
    DUAL_COMPLEX  z1* (1 - eps z2/z1)  (needs z1 invertible)
    ANTI_DUAL     z2  - eps z1         (swap halves, negate the new eps half)
    """

    COMPLEX = 1
    DUAL = 2
    COUPLED = 3
    DUAL_COMPLEX = 4
    ANTI_DUAL = 5


def _cmul(x: tuple, y: tuple) -> tuple:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _cdiv(x: tuple, y: tuple) -> tuple:
    norm = y[0] * y[0] + y[1] * y[1]
    return (
        (x[0] * y[0] + x[1] * y[1]) / norm,
        (x[1] * y[0] - x[0] * y[1]) / norm,
    )


@dataclass(frozen=True)
class DualComplex:
    """w = real + imag*i + dual*eps + dual_imag*i*eps."""

    real: Any
    imag: Any
    dual: Any
    dual_imag: Any

    @classmethod
    def from_scalar(cls, x: Any) -> "DualComplex":
        zero = x - x
        return cls(x, zero, zero, zero)

    @classmethod
    def from_complex_pair(cls, re: Any, im: Any) -> "DualComplex":
        zero = re - re
        return cls(re, im, zero, zero)

    def complex_part(self) -> tuple:
        """z1 of the split w = z1 + eps*z2."""
        return (self.real, self.imag)

    def dual_part(self) -> tuple:
        """z2 of the split w = z1 + eps*z2."""
        return (self.dual, self.dual_imag)

    def coefficients(self) -> tuple:
        return (self.real, self.imag, self.dual, self.dual_imag)

    def has_zero_complex_part(self) -> bool:
        return not self.real and not self.imag

    def __add__(self, other: "DualComplex") -> "DualComplex":
        return DualComplex(
            self.real + other.real,
            self.imag + other.imag,
            self.dual + other.dual,
            self.dual_imag + other.dual_imag,
        )

    def __sub__(self, other: "DualComplex") -> "DualComplex":
        return DualComplex(
            self.real - other.real,
            self.imag - other.imag,
            self.dual - other.dual,
            self.dual_imag - other.dual_imag,
        )

    def __neg__(self) -> "DualComplex":
        return DualComplex(-self.real, -self.imag, -self.dual, -self.dual_imag)

    def scale(self, s: Any) -> "DualComplex":
        return DualComplex(
            s * self.real, s * self.imag, s * self.dual, s * self.dual_imag
        )

    def __mul__(self, other: Any) -> "DualComplex":
        if not isinstance(other, DualComplex):
            return self.scale(other)
        a1, a2, a3, a4 = self.coefficients()
        b1, b2, b3, b4 = other.coefficients()
        return DualComplex(
            a1 * b1 - a2 * b2,
            a1 * b2 + a2 * b1,
            a1 * b3 + a3 * b1 - a2 * b4 - a4 * b2,
            a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
        )

    def __rmul__(self, other: Any) -> "DualComplex":
        return self.scale(other)

    def __truediv__(self, other: "DualComplex") -> "DualComplex":
        """Quotient q with q * other == self; other needs a nonzero complex part.

        Computed as z1/z3 + eps*(z2*z3 - z1*z4)/z3^2.
        """
        if other.has_zero_complex_part():
            raise NonInvertibleError("divisor has zero complex part")
        z1, z2 = self.complex_part(), self.dual_part()
        z3, z4 = other.complex_part(), other.dual_part()
        head = _cdiv(z1, z3)
        num = _cmul(z2, z3)
        sub = _cmul(z1, z4)
        tail = _cdiv((num[0] - sub[0], num[1] - sub[1]), _cmul(z3, z3))
        return DualComplex(head[0], head[1], tail[0], tail[1])

    def conjugate(self, kind: Conjugation) -> "DualComplex":
        r, i, d, di = self.coefficients()
        if kind is Conjugation.COMPLEX:
            return DualComplex(r, -i, d, -di)
        if kind is Conjugation.DUAL:
            return DualComplex(r, i, -d, -di)
        if kind is Conjugation.COUPLED:
            return DualComplex(r, -i, -d, di)
        if kind is Conjugation.ANTI_DUAL:
            return DualComplex(d, di, -r, -i)
        if self.has_zero_complex_part():
            raise NonInvertibleError(
                "dual-complex conjugation needs a nonzero complex part"
            )
        quot = _cdiv((d, di), (r, i))          # z2/z1
        t = _cmul((r, -i), quot)               # z1* * (z2/z1)
        return DualComplex(r, -i, -t[0], -t[1])

    def norm_product(self, kind: Conjugation) -> "DualComplex":
        """The exact product w * conj(w) whose square root would be the norm."""
        return self * self.conjugate(kind)

    def to_json_dict(self) -> dict:
        return {
            "one": str(self.real),
            "i": str(self.imag),
            "eps": str(self.dual),
            "ieps": str(self.dual_imag),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "DualComplex":
        return cls(
            parse_rational(obj["one"]),
            parse_rational(obj["i"]),
            parse_rational(obj["eps"]),
            parse_rational(obj["ieps"]),
        )

    def render(self) -> str:
        return (
            f"{self.real} + {self.imag}·i + {self.dual}·eps"
            f" + {self.dual_imag}·i·eps"
        )


DC_ZERO = DualComplex(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
DC_ONE = DualComplex(Fraction(1), Fraction(0), Fraction(0), Fraction(0))
DC_I = DualComplex(Fraction(0), Fraction(1), Fraction(0), Fraction(0))
DC_EPS = DualComplex(Fraction(0), Fraction(0), Fraction(1), Fraction(0))
DC_IEPS = DualComplex(Fraction(0), Fraction(0), Fraction(0), Fraction(1))

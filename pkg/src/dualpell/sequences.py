"""The k-Pell sequence family, exact over the rationals.

P is defined by P_0 = 0, P_1 = 1, P_{n+1} = 2 P_n + k P_{n-1}; the companion
and modified sequences are the linear combinations PL_n = 2(P_{n+1} - P_n)
and MP_n = P_{n+1} - P_n, which satisfy the same recurrence. Negative indices
extend backwards through P_{n-2} = (P_n - 2 P_{n-1}) / k, which is exact
because k is a positive rational.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .dualcomplex import DualComplex
from .scalars import make_alpha_beta, rationalize


class Family(Enum):
    K_PELL = "pell"
    K_PELL_LUCAS = "pell-lucas"
    MODIFIED_K_PELL = "modified-pell"

    @classmethod
    def from_name(cls, name: str) -> "Family":
        key = name.strip().lower()
        aliases = {
            "pell": cls.K_PELL,
            "p": cls.K_PELL,
            "pell-lucas": cls.K_PELL_LUCAS,
            "lucas": cls.K_PELL_LUCAS,
            "pl": cls.K_PELL_LUCAS,
            "modified-pell": cls.MODIFIED_K_PELL,
            "modified": cls.MODIFIED_K_PELL,
            "mp": cls.MODIFIED_K_PELL,
        }
        if key not in aliases:
            raise ValueError(f"unknown sequence family: {name!r}")
        return aliases[key]


@dataclass(frozen=True)
class SequenceSpec:
    """A concrete sequence: the family plus its exact positive parameter k."""

    family: Family
    k: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", Fraction(self.k))
        if self.k <= 0:
            raise ValueError(f"k must be positive, got {self.k}")


# Per-k tables of P terms, grown on demand. Purely a cache: results are
# identical with or without it, and fills are idempotent.
_cache: dict[Fraction, tuple[list[Fraction], list[Fraction]]] = {}
_cache_lock = threading.Lock()


def pell_term(k: Fraction | int, n: int) -> Fraction:
    """P_{k,n} for any integer n (negative indices via backward recurrence)."""
    k = Fraction(k)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    with _cache_lock:
        fwd, bwd = _cache.setdefault(k, ([Fraction(0), Fraction(1)], []))
        if n >= 0:
            while len(fwd) <= n:
                fwd.append(2 * fwd[-1] + k * fwd[-2])
            return fwd[n]
        # bwd[j] holds P_{-1-j}
        while len(bwd) <= -n - 1:
            succ2 = fwd[1] if len(bwd) < 1 else (fwd[0] if len(bwd) < 2 else bwd[-2])
            succ1 = fwd[0] if len(bwd) < 1 else bwd[-1]
            bwd.append((succ2 - 2 * succ1) / k)
        return bwd[-n - 1]


def seq_term(spec: SequenceSpec, n: int) -> Fraction:
    """The n-th term of the chosen family, exact, any integer index."""
    if spec.family is Family.K_PELL:
        return pell_term(spec.k, n)
    if spec.family is Family.K_PELL_LUCAS:
        return 2 * (pell_term(spec.k, n + 1) - pell_term(spec.k, n))
    return pell_term(spec.k, n + 1) - pell_term(spec.k, n)


def _mat_mul(x: tuple, y: tuple) -> tuple:
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def seq_term_fast(spec: SequenceSpec, n: int) -> Fraction:
    """Same value as seq_term for n >= 0, via companion-matrix squaring.

    (P_{n+1}, P_n) is the first column of [[2, k], [1, 0]]^n, so the cost is
    O(log n) big-number multiplications instead of n recurrence steps.
    """
    if n < 0:
        raise ValueError("fast evaluation is defined for n >= 0 only")
    acc = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    base = (Fraction(2), spec.k, Fraction(1), Fraction(0))
    e = n
    while e:
        if e & 1:
            acc = _mat_mul(acc, base)
        base = _mat_mul(base, base)
        e >>= 1
    p_next, p_n = acc[0], acc[2]
    if spec.family is Family.K_PELL:
        return p_n
    if spec.family is Family.K_PELL_LUCAS:
        return 2 * (p_next - p_n)
    return p_next - p_n


def seq_binet(k: Fraction | int, n: int) -> Fraction:
    """P_{k,n} evaluated as (alpha^n - beta^n) / (alpha - beta) in Q(sqrt(1+k))."""
    if n < 0:
        raise ValueError("closed-form evaluation is defined for n >= 0 only")
    alpha, beta = make_alpha_beta(k)
    return rationalize((alpha**n - beta**n) / (alpha - beta))


def seq_prefix_sum(k: Fraction | int, n: int) -> Fraction:
    """Closed form of sum(P_{k,i} for i = 0..n): (-1 + P_{n+1} + k P_n)/(k+1)."""
    if n < 0:
        raise ValueError("prefix sums are defined for n >= 0 only")
    k = Fraction(k)
    return (-1 + pell_term(k, n + 1) + k * pell_term(k, n)) / (k + 1)


def dc_number(family: Family, k: Fraction | int, n: int) -> DualComplex:
    """Dual-complex number S_n + i S_{n+1} + eps S_{n+2} + i eps S_{n+3}."""
    spec = SequenceSpec(family, Fraction(k))
    return DualComplex(
        seq_term(spec, n),
        seq_term(spec, n + 1),
        seq_term(spec, n + 2),
        seq_term(spec, n + 3),
    )

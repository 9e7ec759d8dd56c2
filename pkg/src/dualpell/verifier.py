"""Grid sweeps over the identity catalog with exact three-way verdicts.

A sweep enumerates every parameter tuple of every requested identity in
lexicographic (id, k, n, m, r) order, compares both sides exactly, and
classifies the identity as holding everywhere, holding only at k = 1, or
failing outright. Tuples that violate an identity's range precondition are
skipped and counted, never judged. Reports are fully deterministic once the
elapsed-time field is zeroed.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .dualcomplex import DualComplex
from .identities import CATALOG, CatalogEntry, IdentityId, identity_sides

_CATALOG_ORDER = {ident: pos for pos, ident in enumerate(CATALOG)}


class Verdict(Enum):
    HOLDS = "holds"
    HOLDS_ONLY_K1 = "holds_only_k1"
    FAILS = "fails"


@dataclass(frozen=True)
class SweepConfig:
    ids: tuple[IdentityId, ...]
    k_values: tuple[Fraction, ...]
    n_range: tuple[int, int]
    m_range: tuple[int, int]
    r_range: tuple[int, int]
    max_counterexamples: int = 5


def default_config(ids: Iterable[IdentityId] | None = None) -> SweepConfig:
    return SweepConfig(
        ids=tuple(ids) if ids is not None else tuple(CATALOG),
        k_values=(Fraction(1), Fraction(2), Fraction(3), Fraction(4)),
        n_range=(0, 32),
        m_range=(0, 32),
        r_range=(1, 8),
    )


@dataclass(frozen=True)
class Counterexample:
    bindings: dict
    lhs: DualComplex | None
    rhs: DualComplex | None
    error: str | None = None


@dataclass(frozen=True)
class IdentityReport:
    id: IdentityId
    grid_size: int
    skipped: int
    verdict: Verdict
    counterexamples: tuple[Counterexample, ...]
    elapsed: float


def check_one(
    ident: IdentityId, bindings: dict
) -> tuple[bool, DualComplex, DualComplex]:
    """Evaluate one tuple; equal is exact coefficient-wise equality."""
    lhs, rhs = identity_sides(ident, bindings)
    return lhs == rhs, lhs, rhs


def _normalize(config: SweepConfig) -> SweepConfig:
    ids = tuple(sorted(set(config.ids), key=_CATALOG_ORDER.__getitem__))
    ks = tuple(sorted({Fraction(k) for k in config.k_values}))
    return replace(config, ids=ids, k_values=ks)


def _span(rng: tuple[int, int]) -> range:
    return range(rng[0], rng[1] + 1)


def _tuples(entry: CatalogEntry, config: SweepConfig) -> Iterator[dict]:
    axes = {"n": config.n_range, "m": config.m_range, "r": config.r_range}
    ks: Sequence = config.k_values if entry.uses_k else (None,)
    for k in ks:
        for values in itertools.product(*(_span(axes[p]) for p in entry.params)):
            b = dict(zip(entry.params, values))
            if entry.uses_k:
                b["k"] = k
            yield b


def sweep(config: SweepConfig) -> list[IdentityReport]:
    """Run every requested identity over its grid and report verdicts.

    Deterministic: same config, same report (modulo elapsed). Per-tuple
    evaluation errors are recorded as failures, not raised, so one bad tuple
    cannot abort the sweep.
    """
    config = _normalize(config)
    reports = []
    for ident in config.ids:
        entry = CATALOG[ident]
        started = time.perf_counter()
        grid_size = 0
        skipped = 0
        k1_seen = False
        k1_failed = False
        failures = 0
        counterexamples: list[Counterexample] = []
        for bindings in _tuples(entry, config):
            ints = {p: bindings[p] for p in entry.params}
            if not entry.pre(ints):
                skipped += 1
                continue
            grid_size += 1
            is_k1 = entry.uses_k and bindings["k"] == 1
            k1_seen = k1_seen or is_k1
            try:
                lhs, rhs = entry.sides(bindings.get("k"), ints)
                equal = lhs == rhs
                error = None
            except Exception as exc:  # recorded, never thrown mid-sweep
                lhs = rhs = None
                equal = False
                error = f"{type(exc).__name__}: {exc}"
            if equal:
                continue
            failures += 1
            k1_failed = k1_failed or is_k1
            if len(counterexamples) < config.max_counterexamples:
                shown = {key: bindings[key] for key in ("k", "n", "m", "r") if key in bindings}
                counterexamples.append(Counterexample(shown, lhs, rhs, error))
        if failures == 0:
            verdict = Verdict.HOLDS
        elif k1_seen and not k1_failed:
            verdict = Verdict.HOLDS_ONLY_K1
        else:
            verdict = Verdict.FAILS
        reports.append(
            IdentityReport(
                id=ident,
                grid_size=grid_size,
                skipped=skipped,
                verdict=verdict,
                counterexamples=tuple(counterexamples),
                elapsed=time.perf_counter() - started,
            )
        )
    return reports


def adjudicate(ident: IdentityId) -> Verdict:
    """Verdict of the default sweep restricted to one identity."""
    (report,) = sweep(default_config([ident]))
    return report.verdict


def counterexample_to_dict(ce: Counterexample) -> dict:
    out: dict = {}
    for key in ("k", "n", "m", "r"):
        if key in ce.bindings:
            value = ce.bindings[key]
            out[key] = str(value) if key == "k" else int(value)
    out["lhs"] = ce.lhs.to_json_dict() if ce.lhs is not None else None
    out["rhs"] = ce.rhs.to_json_dict() if ce.rhs is not None else None
    if ce.error is not None:
        out["error"] = ce.error
    return out


def report_to_dict(report: IdentityReport, zero_elapsed: bool = False) -> dict:
    return {
        "identity": report.id.value,
        "grid_size": report.grid_size,
        "skipped": report.skipped,
        "verdict": report.verdict.value,
        "counterexamples": [counterexample_to_dict(ce) for ce in report.counterexamples],
        "elapsed_ms": 0.0 if zero_elapsed else report.elapsed * 1000.0,
    }


def reports_to_json(
    reports: Iterable[IdentityReport], zero_elapsed: bool = False
) -> str:
    payload = [report_to_dict(r, zero_elapsed=zero_elapsed) for r in reports]
    return json.dumps(payload, indent=2)


def summary_lines(reports: Iterable[IdentityReport]) -> list[str]:
    return [
        f"{r.id.value} {r.verdict.value} {r.grid_size} {r.skipped}" for r in reports
    ]

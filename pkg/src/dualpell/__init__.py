"""Exact dual-complex k-Pell arithmetic and identity verification."""

from .dualcomplex import (
    DC_EPS,
    DC_I,
    DC_IEPS,
    DC_ONE,
    DC_ZERO,
    Conjugation,
    DualComplex,
    NonInvertibleError,
)
from .identities import CATALOG, IdentityId, identity_sides, required_bindings
from .quaternions import (
    PellQuaternion,
    binet_quaternion,
    build_quaternion,
    gamma_closed,
    gamma_coefficient,
    hat_pair,
)
from .scalars import QuadExt, make_alpha_beta, parse_rational, rationalize, render_rational
from .sequences import (
    Family,
    SequenceSpec,
    dc_number,
    pell_term,
    seq_binet,
    seq_prefix_sum,
    seq_term,
    seq_term_fast,
)
from .verifier import (
    Counterexample,
    IdentityReport,
    SweepConfig,
    Verdict,
    adjudicate,
    check_one,
    default_config,
    report_to_dict,
    reports_to_json,
    summary_lines,
    sweep,
)

__all__ = [
    "CATALOG",
    "Conjugation",
    "Counterexample",
    "DC_EPS",
    "DC_I",
    "DC_IEPS",
    "DC_ONE",
    "DC_ZERO",
    "DualComplex",
    "Family",
    "IdentityId",
    "IdentityReport",
    "NonInvertibleError",
    "PellQuaternion",
    "QuadExt",
    "SequenceSpec",
    "SweepConfig",
    "Verdict",
    "adjudicate",
    "binet_quaternion",
    "build_quaternion",
    "check_one",
    "dc_number",
    "default_config",
    "gamma_closed",
    "gamma_coefficient",
    "hat_pair",
    "identity_sides",
    "make_alpha_beta",
    "parse_rational",
    "pell_term",
    "rationalize",
    "render_rational",
    "report_to_dict",
    "reports_to_json",
    "required_bindings",
    "seq_binet",
    "seq_prefix_sum",
    "seq_term",
    "seq_term_fast",
    "summary_lines",
    "sweep",
]

__version__ = "0.1.0"

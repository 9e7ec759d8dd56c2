"""Command-line front-end: sequences, quaternions, identity checks, sweeps.

Exit codes: 0 success, 1 an exact check came out unequal or inconsistent,
2 usage error (malformed flags, unknown ids, out-of-range parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .identities import CATALOG, IdentityId, identity_sides, required_bindings
from .quaternions import binet_quaternion, build_quaternion
from .scalars import parse_rational
from .sequences import Family, SequenceSpec, seq_binet, seq_term
from .verifier import SweepConfig, default_config, reports_to_json, summary_lines, sweep

USAGE_ERROR = 2
UNEQUAL = 1


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_rational(text: str) -> Fraction:
    value = _rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"k must be positive, got {text}")
    return value


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_positive_rational(part) for part in text.split(","))


def _int_range(text: str) -> tuple[int, int]:
    """Inclusive range 'a..b', or a single integer 'a' meaning a..a."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            bounds = (int(lo), int(hi))
        else:
            bounds = (int(text), int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range: {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return bounds


def _identity_ids(text: str) -> tuple[IdentityId, ...]:
    if text.strip().lower() == "all":
        return tuple(CATALOG)
    try:
        return tuple(IdentityId.from_tag(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(text: str) -> Family:
    try:
        return Family.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_seq(args: argparse.Namespace) -> int:
    if args.start > args.end:
        print("error: --from must not exceed --to", file=sys.stderr)
        return USAGE_ERROR
    spec = SequenceSpec(args.family, args.k)
    values = [str(seq_term(spec, n)) for n in range(args.start, args.end + 1)]
    if args.format == "csv":
        print(",".join(values))
    elif args.format == "plain":
        print(" ".join(values))
    else:
        _emit(
            {
                "family": args.family.value,
                "k": str(args.k),
                "from": args.start,
                "to": args.end,
                "values": values,
            }
        )
    return 0


def _cmd_quat(args: argparse.Namespace) -> int:
    quaternion = build_quaternion(args.family, args.k, args.n)
    if args.format == "plain":
        print(quaternion.value.render())
    else:
        _emit(quaternion.value.to_json_dict())
    return 0


def _cmd_identity(args: argparse.Namespace) -> int:
    bindings: dict = {}
    for name in ("k", "n", "m", "r"):
        value = getattr(args, name)
        if value is not None:
            bindings[name] = value
    required = required_bindings(args.id)
    if "k" not in required:
        bindings.pop("k", None)
    try:
        lhs, rhs = identity_sides(args.id, bindings)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    equal = lhs == rhs
    if args.format == "plain":
        print(f"equal: {'true' if equal else 'false'}")
        print(f"lhs: {lhs.render()}")
        print(f"rhs: {rhs.render()}")
    else:
        _emit({"equal": equal, "lhs": lhs.to_json_dict(), "rhs": rhs.to_json_dict()})
    return 0 if equal else UNEQUAL


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        ids=args.ids,
        k_values=args.k,
        n_range=args.n,
        m_range=args.m,
        r_range=args.r,
        max_counterexamples=args.max_counterexamples,
    )
    reports = sweep(config)
    if args.out is not None:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(reports_to_json(reports) + "\n")
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return USAGE_ERROR
    if args.format == "csv":
        print("identity,verdict,grid_size,skipped")
        for line in summary_lines(reports):
            print(",".join(line.split()))
    else:
        for line in summary_lines(reports):
            print(line)
    return 0


def _cmd_binet(args: argparse.Namespace) -> int:
    if args.level == "number":
        closed = seq_binet(args.k, args.n)
        direct = seq_term(SequenceSpec(Family.K_PELL, args.k), args.n)
        consistent = closed == direct
        rendered: object = str(closed)
        plain_value = str(closed)
    else:
        closed_q = binet_quaternion(args.k, args.n)
        consistent = closed_q == build_quaternion(Family.K_PELL, args.k, args.n).value
        rendered = closed_q.to_json_dict()
        plain_value = closed_q.render()
    if args.format == "plain":
        print(plain_value)
        print(f"consistent: {'true' if consistent else 'false'}")
    else:
        _emit(
            {
                "level": args.level,
                "k": str(args.k),
                "n": args.n,
                "value": rendered,
                "consistent": consistent,
            }
        )
    return 0 if consistent else UNEQUAL


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualpell",
        description="Exact dual-complex k-Pell sequences, quaternions and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print a stretch of a sequence")
    p_seq.add_argument("--family", type=_family, required=True)
    p_seq.add_argument("--k", type=_positive_rational, required=True)
    p_seq.add_argument("--from", dest="start", type=int, required=True)
    p_seq.add_argument("--to", dest="end", type=int, required=True)
    p_seq.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    p_seq.set_defaults(func=_cmd_seq)

    p_quat = sub.add_parser("quat", help="print one dual-complex quaternion")
    p_quat.add_argument("--family", type=_family, required=True)
    p_quat.add_argument("--k", type=_positive_rational, required=True)
    p_quat.add_argument("--n", type=int, required=True)
    p_quat.add_argument("--format", choices=("json", "plain"), default="json")
    p_quat.set_defaults(func=_cmd_quat)

    p_id = sub.add_parser("identity", help="check one identity at one tuple")
    p_id.add_argument("--id", type=IdentityId.from_tag, required=True)
    p_id.add_argument("--k", type=_positive_rational)
    p_id.add_argument("--n", type=int)
    p_id.add_argument("--m", type=int)
    p_id.add_argument("--r", type=int)
    p_id.add_argument("--format", choices=("json", "plain"), default="json")
    p_id.set_defaults(func=_cmd_identity)

    p_sweep = sub.add_parser("sweep", help="sweep identities over a parameter grid")
    p_sweep.add_argument("--ids", type=_identity_ids, default=tuple(CATALOG))
    p_sweep.add_argument("--k", type=_rational_list, default=default_config().k_values)
    p_sweep.add_argument("--n", type=_int_range, default=(0, 32))
    p_sweep.add_argument("--m", type=_int_range, default=(0, 32))
    p_sweep.add_argument("--r", type=_int_range, default=(1, 8))
    p_sweep.add_argument("--max-counterexamples", type=_nonnegative_int, default=5)
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--format", choices=("plain", "csv"), default="plain")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_binet = sub.add_parser("binet", help="closed-form value plus consistency check")
    p_binet.add_argument("--k", type=_positive_rational, required=True)
    p_binet.add_argument("--n", type=_nonnegative_int, required=True)
    p_binet.add_argument("--level", choices=("number", "quaternion"), default="number")
    p_binet.add_argument("--format", choices=("json", "plain"), default="json")
    p_binet.set_defaults(func=_cmd_binet)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

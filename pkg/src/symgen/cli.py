"""Command-line front door.

Subcommands: expand, inner, skew, tabloids, check, oracle, probe.  Every
subcommand is a thin adapter over the library; output is byte-stable across
runs (canonical orders and renderings everywhere).

Verdict records are JSON lines with a fixed field order
(n, family, ring, criterion, reason, value[, det, independent, generates,
inner]).  Sequence files are UTF-8 text, one line per degree, "n: [lam]" or
"n: [lam]/[mu]", '#' comments, degrees consecutive from 1.

Exit codes: 0 success, 1 when a check/oracle run's overall verdict is false,
2 on parse errors (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .criteria import (
    FamilySpec,
    GradingViolation,
    Specialization,
    UnsupportedCombination,
    check_sequence,
    inner_value,
    parse_sequence_file,
    render_value,
    verdict_records,
)
from .exactalg import RING_Q, RING_QQT, RING_QT
from .deformed import hl_P, skew_hl_P
from .oracle import conjecture_probe, verdict
from .partitions import parse_partition
from .symfunc import parse_symfunc, render_symfunc, skew, sym, to_basis
from .tabloids import enumerate_tabloids, w


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


class CliError(Exception):
    pass


_RINGS = {"Q": RING_Q, "Qt": RING_QT, "Qqt": RING_QQT, "Z": RING_Q}


def _build_parser() -> _Parser:
    parser = _Parser(prog="symgen", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--seed-manifest",
        action="store_true",
        help="print a JSON manifest of the full invocation before the output",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="re-express a symmetric function")
    p_expand.add_argument("--expr", required=True, help='e.g. "s[2,1]" or "3*m[2,1] - 1*m[3]"')
    p_expand.add_argument("--to", required=True, choices=list("mhepsf"))
    p_expand.add_argument("--ring", default="Q", choices=["Q", "Qt", "Qqt"])

    p_inner = sub.add_parser("inner", help="closed-form <u_n, p_n> for a family")
    p_inner.add_argument("--family", required=True)
    p_inner.add_argument("--lambda", dest="lam", required=True)
    p_inner.add_argument("--mu", default=None)
    p_inner.add_argument("--n", type=int, required=True)
    p_inner.add_argument("--at-root", type=int, default=None, metavar="K")
    p_inner.add_argument("--at-value", default=None, metavar="RAT")
    p_inner.add_argument("--at-q", default=None, metavar="RAT")
    p_inner.add_argument("--at-t", default=None, metavar="RAT")

    p_skew = sub.add_parser("skew", help="expand a skew family element")
    p_skew.add_argument("--family", required=True, choices=["m", "h", "e", "s", "f", "hl-P"])
    p_skew.add_argument("--lambda", dest="lam", required=True)
    p_skew.add_argument("--mu", default="")
    p_skew.add_argument("--to", default=None, choices=list("mhepsf"))

    p_tab = sub.add_parser("tabloids", help="domino tabloid weight sums")
    p_tab.add_argument("--shape", required=True)
    p_tab.add_argument("--type", dest="typ", required=True)
    p_tab.add_argument("--list", action="store_true")

    p_check = sub.add_parser("check", help="criteria verdicts for a sequence file")
    _sequence_flags(p_check)

    p_oracle = sub.add_parser("oracle", help="determinant verdicts for a sequence file")
    _sequence_flags(p_oracle)
    p_oracle.add_argument("--max-degree", type=int, default=None)

    p_probe = sub.add_parser("probe", help="skew Hall-Littlewood conjecture probe")
    p_probe.add_argument("--seq-file", required=True)
    p_probe.add_argument("--max-degree", type=int, default=4)
    return parser


def _sequence_flags(sub_parser):
    sub_parser.add_argument("--family", required=True)
    sub_parser.add_argument("--ring", required=True, choices=["Q", "Z", "Qt", "Qqt"])
    sub_parser.add_argument("--seq-file", required=True)
    sub_parser.add_argument("--at-root", type=int, default=None, metavar="K")
    sub_parser.add_argument("--at-value", default=None, metavar="RAT")
    sub_parser.add_argument("--at-q", default=None, metavar="RAT")
    sub_parser.add_argument("--at-t", default=None, metavar="RAT")


def _specialization(args) -> Specialization | None:
    if getattr(args, "at_root", None) is not None:
        return Specialization.at_root(args.at_root)
    if getattr(args, "at_value", None) is not None:
        return Specialization.at_value(Fraction(args.at_value))
    at_q, at_t = getattr(args, "at_q", None), getattr(args, "at_t", None)
    if at_q is not None or at_t is not None:
        if at_q is None or at_t is None:
            raise CliError("--at-q and --at-t must be given together")
        return Specialization.at_pair(Fraction(at_q), Fraction(at_t))
    return None


def _emit(line: str):
    sys.stdout.write(line + "\n")


def _manifest(args) -> dict:
    payload = {
        key: (str(value) if isinstance(value, Fraction) else value)
        for key, value in sorted(vars(args).items())
        if key != "seed_manifest"
    }
    return {"package": "symgen", "version": __version__, "invocation": payload}


def _cmd_expand(args) -> int:
    ring = _RINGS[args.ring]
    element = parse_symfunc(args.expr, ring)
    _emit(render_symfunc(to_basis(element, args.to)))
    return 0


def _cmd_inner(args) -> int:
    spec = _family_spec_for_inner(args)
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu) if args.mu is not None else None
    value = inner_value(spec, lam, mu, args.n)
    rendered = render_value(value)
    _emit(rendered if rendered is not None else "undefined")
    return 0


def _family_spec_for_inner(args) -> FamilySpec:
    spz = _specialization(args)
    family = args.family
    if family in ("hl-P", "hl-Q", "big-S", "whittaker"):
        ring = "Qt" if spz is None else "Q"
    elif family in ("mac-P", "mac-J"):
        ring = "Qqt" if spz is None else "Q"
    else:
        ring = "Q"
    return FamilySpec(family, ring, spz)


def _cmd_skew(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    if args.family == "hl-P":
        element = skew_hl_P(lam, mu)
        target = args.to or "m"
    else:
        element = skew(args.family, lam, mu, RING_Q)
        target = args.to or "h"
    _emit(render_symfunc(to_basis(element, target)))
    return 0


def _cmd_tabloids(args) -> int:
    shape = parse_partition(args.shape)
    typ = parse_partition(args.typ)
    _emit(f"w={w(shape, typ)}")
    if args.list:
        for tabloid in enumerate_tabloids(shape, typ):
            _emit(tabloid.render())
    return 0


def _load_sequence(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_sequence_file(handle.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _cmd_check(args) -> int:
    spec = FamilySpec(args.family, args.ring, _specialization(args))
    seq = _load_sequence(args.seq_file)
    result = check_sequence(spec, seq)
    for record in verdict_records(spec, result):
        _emit(json.dumps(record))
    _emit(f"overall={'true' if result.overall else 'false'}")
    return 0 if result.overall else 1


def _cmd_oracle(args) -> int:
    spec = FamilySpec(args.family, args.ring, _specialization(args))
    seq = _load_sequence(args.seq_file)
    max_degree = args.max_degree if args.max_degree is not None else len(seq)
    if max_degree > len(seq):
        raise CliError(
            f"--max-degree {max_degree} exceeds the {len(seq)} degrees in the file"
        )
    records = verdict(spec, seq, max_degree)
    for record in records:
        _emit(json.dumps(record))
    overall = bool(records) and records[-1]["generates"]
    _emit(f"overall={'true' if overall else 'false'}")
    return 0 if overall else 1


def _cmd_probe(args) -> int:
    if args.max_degree > 5:
        raise CliError("probe degrees are capped at 5")
    seq = _load_sequence(args.seq_file)
    max_degree = min(args.max_degree, len(seq))
    for record in conjecture_probe(seq, max_degree):
        _emit(json.dumps(record))
    return 0


_COMMANDS = {
    "expand": _cmd_expand,
    "inner": _cmd_inner,
    "skew": _cmd_skew,
    "tabloids": _cmd_tabloids,
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "probe": _cmd_probe,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.seed_manifest:
            _emit(json.dumps(_manifest(args)))
        return _COMMANDS[args.command](args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (UnsupportedCombination, GradingViolation, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    akdecomp matrix -n 6 -e 4 -v 0,2,3 [--format text|csv|json] [--q] [-o FILE] [-j JOBS]
    akdecomp basis  -n 4 -e 2 -v 0
    akdecomp flotw  -n 3 -e 2 -v 0
    akdecomp aseq   -e 4 -v 0,2,3 -p "1|3.1|2.1.1"
    akdecomp avalue -e 2 -v 0 -p 2
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .afun import a1, format_rational
from .canonical import compute_basis
from .decomp import FORMATS, assemble, serialize
from .errors import DiagramError, InvariantError, NotDivisibleError
from .flotw import a_sequence, enumerate_flotw, format_sequence, is_flotw
from .mpart import Multipartition, ParamSet

COMMANDS = ("matrix", "basis", "flotw", "aseq", "avalue")


@dataclass
class RunConfig:
    command: str
    params: ParamSet
    n: int | None = None
    fmt: str = "text"
    q_mode: bool = False
    output: str | None = None
    mp: Multipartition | None = None
    jobs: int = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="akdecomp",
        description="Canonical bases of level-d Fock spaces and decomposition "
        "matrices of Ariki-Koike algebras at a root of unity.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("-n", type=int, help="rank (number of boxes)")
    parser.add_argument("-e", type=int, required=True, help="order of the root of unity")
    parser.add_argument("-v", type=_int_list, required=True, help="charges v_0,...,v_(d-1)")
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    parser.add_argument("--q", dest="q_mode", action="store_true", help="keep q-polynomials")
    parser.add_argument("-o", dest="output", help="write output to this file")
    parser.add_argument("-p", dest="mp", help="multipartition, e.g. '1|3.1|2.1.1'")
    parser.add_argument("-j", "--jobs", type=int, default=1, help="worker processes")
    return parser


def parse_args(argv: list[str]) -> RunConfig:
    """Parse argv into a RunConfig; raises UsageError on any bad input."""
    parser = build_parser()
    # multipartitions may start with "-" (an empty first component)
    fixed = []
    tokens = iter(argv)
    for tok in tokens:
        fixed.append("-p" + next(tokens, "") if tok == "-p" else tok)
    ns = parser.parse_args(fixed)
    try:
        params = ParamSet(ns.e, ns.v)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    mp = None
    if ns.command in ("aseq", "avalue"):
        if ns.mp is None:
            raise UsageError(f"{ns.command} needs -p <multipartition>")
        try:
            mp = Multipartition.parse(ns.mp)
        except DiagramError as exc:
            raise UsageError(str(exc)) from None
        if mp.d != params.d:
            raise UsageError(f"{mp} has {mp.d} components but -v gives d={params.d}")
    elif ns.n is None or ns.n < 0:
        raise UsageError(f"{ns.command} needs -n <nonnegative int>")
    if ns.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if ns.command == "basis" and ns.fmt != "text":
        raise UsageError("basis only supports --format text")
    if ns.fmt == "csv" and ns.q_mode:
        raise UsageError("csv output is only available without --q")
    return RunConfig(ns.command, params, ns.n, ns.fmt, ns.q_mode, ns.output, mp, ns.jobs)


def run(config: RunConfig) -> str:
    p = config.params
    if config.command == "flotw":
        return "".join(f"{mp}\n" for mp in enumerate_flotw(config.n, p))
    if config.command == "aseq":
        if not is_flotw(config.mp, p):
            raise UsageError(f"{config.mp} is not FLOTW for {p}")
        return format_sequence(a_sequence(config.mp, p)) + "\n"
    if config.command == "avalue":
        return format_rational(a1(config.mp, p)) + "\n"
    basis = compute_basis(config.n, p, jobs=config.jobs)
    if config.command == "basis":
        return basis.dump()
    return serialize(assemble(basis), config.fmt, config.q_mode)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
        out = run(config)
    except UsageError as exc:
        print(f"akdecomp: error: {exc}", file=sys.stderr)
        return 2
    except (InvariantError, NotDivisibleError) as exc:
        print(f"akdecomp: internal invariant violated: {exc}", file=sys.stderr)
        return 3
    if config.output:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

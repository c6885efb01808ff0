"""Command-line entry point: ``chromconc {gen,chi,lemma,concentrate}``.

Exit codes: 0 success, 1 usage/validation, 2 guard refusal, 3 I/O.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import dimacs
from .coloring import CHI_EXACT_MAX_N, chromatic_number_exact
from .errors import EnumerationBudgetExceeded, GraphTooLarge, GuardExceeded
from .graph import GnpParams, complement, gen_gnp
from .lab import OmegaSpec, run_concentration_experiment
from .lemma import c_of_p, density_event_check, greedy_clique, guaranteed_clique_size

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        _write_atomic(out, text)


def _params(args) -> GnpParams:
    try:
        return GnpParams(args.n, args.p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args) -> int:
    params = _params(args)
    g = gen_gnp(params)
    comment = f"gnp n={params.n} p={_fmt(params.p)} seed={params.seed}"
    _emit(dimacs.dumps(g, [comment]), args.out)
    return EXIT_OK


def cmd_chi(args) -> int:
    try:
        g = dimacs.read(args.input)
    except dimacs.DimacsError as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    k, col = chromatic_number_exact(g, max_n=args.guard_n)
    if not col.is_proper(g):
        raise AssertionError("solver returned an improper colouring")
    _emit(f"chi={k}\n" + col.to_csv(), args.out)
    return EXIT_OK


def cmd_lemma(args) -> int:
    params = _params(args)
    if params.n < 1:
        raise UsageError("lemma needs n >= 1")
    g = gen_gnp(params)
    vs = range(params.n)
    lines = [
        f"n={params.n}",
        f"p={_fmt(params.p)}",
        f"seed={params.seed}",
        f"c_of_p={_fmt(c_of_p(params.p))}",
        f"guaranteed_size={guaranteed_clique_size(params.n, params.p)}",
        f"greedy_clique={len(greedy_clique(g, vs))}",
        f"greedy_independent={len(greedy_clique(complement(g), vs))}",
    ]
    if args.u is not None:
        if not 1 <= args.u <= params.n:
            raise UsageError(f"--u must lie in 1..{params.n}")
        witness = density_event_check(g, args.u, params.p)
        lines.append(f"density_event={'pass' if witness is None else 'fail'}")
        if witness is not None:
            lines.append("witness=" + " ".join(str(v) for v in witness))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_concentrate(args) -> int:
    params = _params(args)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    try:
        omega = OmegaSpec.parse(args.omega)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    guard = CHI_EXACT_MAX_N if args.guard_n is None else args.guard_n
    if params.n > guard:
        raise GuardExceeded("concentrate", params.n, guard)
    report = run_concentration_experiment(params.n, params.p, args.trials, params.seed,
                                          omega, chi_max_n=guard, workers=args.workers)
    if report.incomplete_trials == report.trials:
        print("error: every trial was refused by the exact solver", file=sys.stderr)
        return EXIT_GUARD
    if args.out is None:
        sys.stdout.write(report.to_csv())
        sys.stdout.write(report.summary_json())
    else:
        _write_atomic(args.out, report.to_csv())
        _write_atomic(summary_path(args.out), report.summary_json())
    return EXIT_OK


def summary_path(out: str) -> str:
    """Summary JSON path written next to the CSV: ``x.csv`` -> ``x.summary.json``."""
    p = Path(out)
    return str(p.with_name(p.stem + ".summary.json"))


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromconc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sampling(sp, need_trials=False):
        sp.add_argument("--n", type=_nonneg, required=True)
        sp.add_argument("--p", type=float, required=True)
        sp.add_argument("--seed", type=_nonneg, default=0)
        if need_trials:
            sp.add_argument("--trials", type=int, required=True)
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("gen", help="write a G(n,p) sample as a DIMACS edge list")
    sampling(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("chi", help="exact chromatic number of a DIMACS graph")
    sp.add_argument("input")
    sp.add_argument("--out", default=None)
    sp.add_argument("--guard-n", type=_nonneg, default=None)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("lemma", help="greedy clique and density checks on a G(n,p) sample")
    sampling(sp)
    sp.add_argument("--u", type=int, default=None, help="also run the exhaustive density check")
    sp.set_defaults(func=cmd_lemma)

    sp = sub.add_parser("concentrate", help="Monte Carlo chromatic-number concentration run")
    sampling(sp, need_trials=True)
    sp.add_argument("--omega", default="loglog", help="const:<c> | loglog | log")
    sp.add_argument("--guard-n", type=_nonneg, default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_concentrate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GuardExceeded, EnumerationBudgetExceeded, GraphTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

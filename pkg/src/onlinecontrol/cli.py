"""Command-line entry point: solve, gen, verify, winners, play."""

from __future__ import annotations

import argparse
import io
import random
import sys
from contextlib import redirect_stdout
from pathlib import Path

from .core import ValidationError, lex_sorted, validate_election
from .fast import EngineMismatch, fast_solve
from .formula import FormulaSyntaxError, parse_formula
from .game import InstanceError, validate_instance
from .instance_io import InstanceFormatError, dumps_instance, load_election, load_instance
from .play import play_loop
from .reductions import (
    QBF_FAMILIES,
    QbfPrimeInstance,
    ReductionError,
    parse_sets_file,
    reduce_hitting_set,
    reduce_qbf,
    reduce_sat_1cand,
    reduce_taut,
)
from .corpus import random_instance
from .solver import SolverCapError, SolverConfig, solve
from .systems import get_system
from .verify import SUITES, verify_equivalence

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3

INVALID = (InstanceError, InstanceFormatError, ValidationError, FormulaSyntaxError,
           ReductionError, EngineMismatch, KeyError, OSError)


def _cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    if args.engine == "fast":
        wins = fast_solve(inst)
        print("chair-wins" if wins else "chair-loses")
        return EXIT_OK
    verdict = solve(inst, SolverConfig(max_candidates=args.max_candidates))
    print(verdict.answer)
    if verdict.witness is not None:
        print(f"witness: {verdict.witness}")
    print(f"stats: nodes={verdict.nodes} max_depth={verdict.max_depth}")
    return EXIT_OK


def _emit(inst, out: str | None) -> int:
    validate_instance(inst)
    text = dumps_instance(inst)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "qbf":
        q = QbfPrimeInstance.from_formula(parse_formula(args.formula))
        return _emit(reduce_qbf(q, args.family), args.out)
    if kind == "sat1c":
        return _emit(reduce_sat_1cand(parse_formula(args.formula)), args.out)
    if kind == "taut":
        return _emit(reduce_taut(parse_formula(args.formula), args.control), args.out)
    if kind == "hs":
        h = parse_sets_file(Path(args.sets_file).read_text(encoding="utf-8"), args.k)
        return _emit(reduce_hitting_set(h, args.variant), args.out)
    rng = random.Random(args.seed)
    budget = None if args.control == "PV" else args.budget
    inst = random_instance(rng, args.control, args.mode, args.candidates, args.past,
                           args.future, budget)
    return _emit(inst, args.out)


def _cmd_verify(args) -> int:
    report = verify_equivalence(args.suite, seed=args.seed, limit=args.limit)
    print(report.to_text(verbose=args.verbose))
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n", encoding="utf-8")
    return EXIT_OK if not report.disagreements else EXIT_FAIL


def _cmd_winners(args) -> int:
    cands, votes = load_election(args.election)
    validate_election(cands, votes)
    winners = get_system(args.system)(cands, votes)
    print("{" + ", ".join(lex_sorted(winners)) + "}")
    return EXIT_OK


def _cmd_play(args) -> int:
    inst = load_instance(args.instance)
    result = play_loop(inst, cfg=SolverConfig(max_candidates=args.max_candidates))
    return EXIT_OK if result.completed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="onlinecontrol", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide an instance file")
    s.add_argument("--instance", required=True)
    s.add_argument("--engine", choices=("exact", "fast"), default="exact")
    s.add_argument("--max-candidates", type=int, default=5)
    s.set_defaults(func=_cmd_solve)

    g = sub.add_parser("gen", help="generate an instance")
    gsub = g.add_subparsers(dest="kind", required=True)
    q = gsub.add_parser("qbf")
    q.add_argument("--family", choices=QBF_FAMILIES, required=True)
    q.add_argument("--formula", required=True)
    s1 = gsub.add_parser("sat1c")
    s1.add_argument("--formula", required=True)
    t = gsub.add_parser("taut")
    t.add_argument("--formula", required=True)
    t.add_argument("--control", choices=("DV", "AV"), default="DV")
    h = gsub.add_parser("hs")
    h.add_argument("--sets-file", required=True)
    h.add_argument("--k", type=int, default=None, help="override k from the sets file")
    h.add_argument("--variant", choices=("cc", "dc"), default="cc")
    r = gsub.add_parser("random")
    r.add_argument("--control", choices=("DV", "AV", "PV"), required=True)
    r.add_argument("--mode", choices=("constructive", "destructive"), default="constructive")
    r.add_argument("--candidates", type=int, default=3)
    r.add_argument("--past", type=int, default=2)
    r.add_argument("--future", type=int, default=2)
    r.add_argument("--budget", type=int, default=1)
    r.add_argument("--seed", type=int, default=0)
    for sp in (q, s1, t, h, r):
        sp.add_argument("--out", default=None, help="write JSON here instead of stdout")
    g.set_defaults(func=_cmd_gen)

    v = sub.add_parser("verify", help="run an equivalence suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--limit", type=int, default=None)
    v.add_argument("--json", default=None, help="also dump the report as JSON to this path")
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=_cmd_verify)

    w = sub.add_parser("winners", help="winner set of a single election")
    w.add_argument("--system", required=True)
    w.add_argument("--election", required=True)
    w.set_defaults(func=_cmd_winners)

    pl = sub.add_parser("play", help="play an instance as the chair")
    pl.add_argument("--instance", required=True)
    pl.add_argument("--max-candidates", type=int, default=5)
    pl.set_defaults(func=_cmd_play)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        return args.func(args)
    except SolverCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except INVALID as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


def run_command(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture its standard output."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())

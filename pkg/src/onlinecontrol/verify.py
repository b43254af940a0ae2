"""Equivalence suites: oracle versus engine over fixed and seeded corpora."""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from . import corpus
from .fast import fast_solve
from .formula import render_formula
from .instance_io import instance_to_dict
from .reductions import (
    QBF_FAMILIES,
    QbfPrimeInstance,
    eval_qbf_prime,
    reduce_qbf,
    reduce_sat_1cand,
    reduce_taut,
    sat_satisfiable,
    simulate_hs_proof_strategies,
    taut,
)
from .solver import Solver, SolverCapError, SolverConfig, solve

SUITES = ("plurality-fast-vs-exact", "qbf", "sat1c", "taut", "hs-scores")


@dataclass
class CaseResult:
    case_id: str
    expected: Any
    got: Any
    agree: bool
    counterexample: dict | None = None


@dataclass
class VerifyReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    cap_breaches: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def agreements(self) -> int:
        return sum(c.agree for c in self.cases)

    @property
    def disagreements(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.agree]

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.cap_breaches

    def add(self, case_id: str, expected, got, instance=None) -> None:
        agree = expected == got
        dump = instance_to_dict(instance) if (not agree and instance is not None) else None
        self.cases.append(CaseResult(case_id, expected, got, agree, dump))

    def summary(self) -> str:
        return (f"suite {self.suite}: {self.agreements}/{self.total} agree, "
                f"{len(self.disagreements)} disagree, {len(self.cap_breaches)} cap breaches")

    def to_text(self, verbose: bool = False) -> str:
        lines = []
        for c in self.cases:
            if verbose or not c.agree:
                mark = "ok  " if c.agree else "FAIL"
                lines.append(f"{mark} {c.case_id} expected={c.expected} got={c.got}")
                if c.counterexample is not None:
                    lines.append("     counterexample: " + json.dumps(c.counterexample, sort_keys=True))
        lines += [f"CAP  {b}" for b in self.cap_breaches]
        lines.append(self.summary())
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "suite": self.suite,
            "total": self.total,
            "agree": self.agreements,
            "disagree": len(self.disagreements),
            "cap_breaches": self.cap_breaches,
            "cases": [asdict(c) for c in self.cases],
        }, indent=2, sort_keys=True)


def _describe(inst) -> str:
    past = ",".join(r.flag[0] + ("" if r.order is None else "".join(r.order)) for r in inst.past)
    fut = "".join("r" if f.registered else "-" for f in inst.future)
    return (f"{inst.control}/{inst.mode[0]}/sigma={''.join(inst.sigma)}/d={inst.distinguished}"
            f"/k={inst.budget}/past=[{past}]/u={''.join(inst.current.order)}/future={fut}")


def plurality_cases(seed: int | None, limit: int | None) -> Iterable:
    if limit is None:
        for control in ("DV", "AV"):
            for n in (1, 2, 3):
                yield from corpus.plurality_space(control, n)
        return
    rng = random.Random(seed)
    for _ in range(limit):
        control = rng.choice(("DV", "AV"))
        yield corpus.random_instance(rng, control, rng.choice(corpus.MODES),
                                     rng.randint(1, 4), rng.randint(0, 3), rng.randint(0, 3),
                                     rng.randint(0, 2))


def verify_plurality(seed: int | None = None, limit: int | None = None) -> VerifyReport:
    """Fast algorithms against the exact solver; exhaustive unless ``limit`` is set."""
    report = VerifyReport("plurality-fast-vs-exact")
    cache: dict = {}
    for inst in plurality_cases(seed, limit):
        exact = Solver(inst, SolverConfig(), cache).solve().chair_wins
        report.add(_describe(inst), exact, fast_solve(inst), inst)
    return report


def _solve_into(report: VerifyReport, case_id: str, expected: bool, inst) -> None:
    try:
        got = solve(inst).chair_wins
    except SolverCapError as e:
        report.cap_breaches.append(f"{case_id}: {e}")
        return
    report.add(case_id, expected, got, inst)


def verify_qbf(seed: int = 0, limit: int | None = None) -> VerifyReport:
    report = VerifyReport("qbf")
    formulas = corpus.qbf_ell1_corpus() + corpus.random_qbf_formulas(seed, 20 if limit is None else limit)
    for f in formulas:
        q = QbfPrimeInstance.from_formula(f)
        expected = eval_qbf_prime(q)
        for family in QBF_FAMILIES:
            _solve_into(report, f"{family}:{render_formula(f)}", expected, reduce_qbf(q, family))
    return report


def verify_sat1c(seed: int = 0, limit: int | None = None) -> VerifyReport:
    report = VerifyReport("sat1c")
    for f in corpus.small_formula_corpus(40 if limit is None else max(limit, 0), seed):
        _solve_into(report, render_formula(f), sat_satisfiable(f), reduce_sat_1cand(f))
    return report


def verify_taut(seed: int = 0, limit: int | None = None) -> VerifyReport:
    report = VerifyReport("taut")
    for f in corpus.small_formula_corpus(40 if limit is None else max(limit, 0), seed):
        expected = taut(f)
        for control in ("DV", "AV"):
            _solve_into(report, f"{control}:{render_formula(f)}", expected, reduce_taut(f, control))
    return report


def hs_identities(report) -> dict[str, bool]:
    """Check the runoff score identities on every simulated case of one instance."""
    h = report.instance
    m, n, k = h.m, h.n, h.k
    base = 8 * n * k + 8 * m * n * k
    checks = {"a_side_scores": all(c.max_a_side_score <= 2 + k for c in report.cases)}
    if report.branch == "yes":
        checks["score_c"] = all(c.score_c == base for c in report.cases)
        checks["score_w"] = all(c.score_w == base + 1 for c in report.cases)
        checks["score_b"] = all(c.score_b == 8 * m * n * k - 2 * m + k for c in report.cases)
        checks["w_wins_c_loses"] = all("w" in c.runoff_winners and "c" not in c.runoff_winners
                                       for c in report.cases)
    else:
        checks["score_c"] = all(c.score_c >= base + 4 * k for c in report.cases)
        checks["score_w"] = all(c.score_w <= base + 1 + k for c in report.cases)
        checks["c_unique"] = all(c.runoff_winners == frozenset({"c"}) for c in report.cases)
    return checks


def verify_hs_scores(seed: int | None = None, limit: int | None = None) -> VerifyReport:
    report = VerifyReport("hs-scores")
    for i, h in enumerate(corpus.hs_grid(2)):
        if limit is not None and i >= limit:
            break
        sim = simulate_hs_proof_strategies(h)
        sets = "/".join("".join(map(str, sorted(s))) for s in h.sets)
        for name, ok in hs_identities(sim).items():
            report.add(f"m={h.m},n={h.n},k={h.k},S={sets},{sim.branch}:{name}", True, ok)
    return report


def verify_equivalence(suite: str, seed: int | None = None, limit: int | None = None) -> VerifyReport:
    if suite == "plurality-fast-vs-exact":
        return verify_plurality(seed, limit)
    runners = {"qbf": verify_qbf, "sat1c": verify_sat1c, "taut": verify_taut,
               "hs-scores": verify_hs_scores}
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    return runners[suite](0 if seed is None else seed, limit)

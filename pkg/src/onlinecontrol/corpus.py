"""Fixed and seeded corpora: formulas, plurality instance spaces, random instances."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .core import Ballot
from .formula import And, Formula, Not, Or, Var, max_var, parse_formula, variables
from .game import MODES, NO_BALLOT_FLAGS, PAST_FLAGS, ControlInstance, FutureVoter, PastRecord

CANONICAL_CANDIDATES = ("a", "b", "c", "d", "e", "f", "g", "h")


def _literals(i: int) -> list[Formula]:
    return [Var(i), Not(Var(i))]


def qbf_ell1_corpus() -> list[Formula]:
    """Every literal or binary AND/OR of literals over x1, x2 in which x2 occurs."""
    out: list[Formula] = list(_literals(2))
    for op in (And, Or):
        for l1 in _literals(1):
            for l2 in _literals(2):
                out += [op(l1, l2), op(l2, l1)]
        out += [op(Var(2), Not(Var(2)))]
    return out


def random_formula(rng: random.Random, n_vars: int, depth: int = 3) -> Formula:
    if depth == 0 or rng.random() < 0.25:
        v: Formula = Var(rng.randint(1, n_vars))
        return Not(v) if rng.random() < 0.5 else v
    r = rng.random()
    if r < 0.15:
        return Not(random_formula(rng, n_vars, depth - 1))
    op = And if r < 0.575 else Or
    return op(random_formula(rng, n_vars, depth - 1), random_formula(rng, n_vars, depth - 1))


def random_qbf_formulas(seed: int, count: int, ell: int = 2) -> list[Formula]:
    rng = random.Random(seed)
    out: list[Formula] = []
    while len(out) < count:
        f = random_formula(rng, 2 * ell, depth=3)
        if max_var(f) == 2 * ell and f not in out:
            out.append(f)
    return out


_SMALL_FIXED = [
    "x1", "!x1", "(x1|!x1)", "(x1&!x1)", "!!x1",
    "(x1&x2)", "(x1|x2)", "(!x1|x2)", "(x1&!x2)", "((x1|x2)&(!x1|!x2))",
    "((x1&x2)|(!x1&!x2))", "((x1|!x1)&x2)", "((x1|x2)|!x1)", "((x1&!x1)|(x2&!x2))",
    "((x1|x2)|!x2)", "(x1&(x2&x3))", "(x1|(x2|x3))", "((x1|x2)&(x3|!x3))",
    "(((x1|x2)|x3)|!x1)", "((x1&x2)&!x3)", "((x1&!x1)&(x2|x3))", "((!x1|!x2)|(x1&x2))",
    "(((x1&x2)|(x1&x3))|((x2&x3)|!x1))",
]


def small_formula_corpus(size: int = 40, seed: int = 0) -> list[Formula]:
    """Formulas over x1..xk, k <= 3, each using every one of its k variables."""
    out = [parse_formula(s) for s in _SMALL_FIXED]
    rng = random.Random(seed)
    while len(out) < size:
        k = rng.randint(1, 3)
        f = random_formula(rng, k, depth=3)
        if variables(f) == frozenset(range(1, k + 1)) and f not in out:
            out.append(f)
    return out


def hs_grid(max_value: int = 2):
    """All Hitting Set instances with 1 <= m, n, k <= max_value, k <= m."""
    from .reductions import HittingSetInstance

    for m in range(1, max_value + 1):
        subsets = [frozenset(c) for r in range(1, m + 1)
                   for c in itertools.combinations(range(1, m + 1), r)]
        for n in range(1, max_value + 1):
            for sets in itertools.combinations_with_replacement(subsets, n):
                for k in range(1, min(m, max_value) + 1):
                    yield HittingSetInstance(m, tuple(sets), k)


def plurality_space(control: str, n_candidates: int, max_past: int = 2, max_future: int = 3,
                    max_budget: int = 2, modes=MODES, budgets=None) -> Iterator[ControlInstance]:
    """Every valid plurality DV/AV instance over canonical candidate names."""
    cands = CANONICAL_CANDIDATES[:n_candidates]
    perms = list(itertools.permutations(cands))
    flags = PAST_FLAGS[control]
    options = [(f, o) for f in flags for o in ([None] if f in NO_BALLOT_FLAGS else perms)]
    spent = "deleted" if control == "DV" else "added"
    budgets = range(max_budget + 1) if budgets is None else budgets
    for sigma in perms:
        for d in cands:
            for mode in modes:
                for k in budgets:
                    for n_past in range(max_past + 1):
                        for recs in itertools.product(options, repeat=n_past):
                            if sum(f == spent for f, _ in recs) > k:
                                continue
                            past = tuple(PastRecord(f"p{i}", f, o) for i, (f, o) in enumerate(recs, 1))
                            for u in perms:
                                for roster in _rosters(control, max_future):
                                    yield ControlInstance(control, mode, "plurality", cands, sigma, d,
                                                          Ballot("u", u), past, roster, k)


def _rosters(control: str, max_future: int):
    for n in range(max_future + 1):
        if control == "AV":
            for regs in itertools.product((False, True), repeat=n):
                yield tuple(FutureVoter(f"f{i}", r) for i, r in enumerate(regs, 1))
        else:
            yield tuple(FutureVoter(f"f{i}") for i in range(1, n + 1))


def random_instance(rng: random.Random, control: str, mode: str, n_candidates: int,
                    n_past: int, n_future: int, budget: int | None) -> ControlInstance:
    """Uniform ballots over all orders; past flags uniform subject to the budget."""
    if n_candidates > len(CANONICAL_CANDIDATES):
        cands = tuple(f"c{i}" for i in range(1, n_candidates + 1))
    else:
        cands = CANONICAL_CANDIDATES[:n_candidates]

    def order():
        o = list(cands)
        rng.shuffle(o)
        return tuple(o)

    sigma = order()
    d = rng.choice(cands)
    if control == "PV":
        budget = None
    elif budget is None:
        raise ValueError("DV/AV need a budget")
    flags = PAST_FLAGS[control]
    spent = {"DV": "deleted", "AV": "added"}.get(control)
    while True:
        chosen = [rng.choice(flags) for _ in range(n_past)]
        if spent is None or chosen.count(spent) <= budget:
            break
    past = tuple(PastRecord(f"p{i}", f, None if f in NO_BALLOT_FLAGS else order())
                 for i, f in enumerate(chosen, 1))
    future = tuple(FutureVoter(f"f{i}", rng.random() < 0.5 if control == "AV" else None)
                   for i in range(1, n_future + 1))
    return ControlInstance(control, mode, "plurality", cands, sigma, d,
                           Ballot("u", order()), past, future, budget)

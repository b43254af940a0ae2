"""Exact alternating search for online control instances.

Chair decision nodes are existential (any legal action may be taken),
reveal nodes are universal (every total order the next voter could cast).
The search is exhaustive; for anonymous systems subtrees are memoized on the
multiset of counted ballots, since voter names cannot change the outcome.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import lex_sorted
from .game import (
    ControlInstance,
    GameState,
    apply_chair_action,
    finalize_and_evaluate,
    goal_holds,
    initial_state,
    legal_chair_actions,
    reveal_vote,
    validate_instance,
)


class SolverCapError(RuntimeError):
    """Universal branching would exceed the configured candidate cap."""


@dataclass(frozen=True)
class SolverConfig:
    max_candidates: int = 5
    # None: use whenever the system allows it; True: require; False: never
    top_only_reduction: bool | None = None
    memoize: bool | None = None


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0


@dataclass(frozen=True)
class Verdict:
    chair_wins: bool
    witness: str | None
    nodes: int
    max_depth: int

    @property
    def answer(self) -> str:
        return "chair-wins" if self.chair_wins else "chair-loses"


def _resolve(flag: bool | None, allowed: bool, name: str) -> bool:
    if flag is None:
        return allowed
    if flag and not allowed:
        raise ValueError(f"{name} is not permitted for this instance")
    return flag


class Solver:
    """Evaluator for a single instance.

    A ``cache`` dict may be shared between solvers; keys include everything
    that determines a subtree value, so sharing across instances is sound.
    """

    def __init__(self, inst: ControlInstance, cfg: SolverConfig = SolverConfig(),
                 cache: dict | None = None, validate: bool = True):
        if validate:
            validate_instance(inst)
        self.inst = inst
        self.cfg = cfg
        system = inst.election_system
        self.system = system
        self.goal = inst.goal
        self.top_only = _resolve(cfg.top_only_reduction,
                                 system.top_only and inst.control in ("DV", "AV"),
                                 "top_only_reduction")
        self.memoize = _resolve(cfg.memoize, system.anonymous, "memoize")
        ordered = lex_sorted(inst.candidates)
        if self.top_only:
            self.orders = [(c,) + tuple(x for x in ordered if x != c) for c in ordered]
        else:
            self.orders = list(itertools.permutations(ordered))
        self.cache = {} if cache is None else cache
        self._context = (system.id, inst.control, inst.mode, frozenset(inst.candidates),
                         self.goal.up if inst.mode == "constructive" else self.goal.down,
                         inst.budget)
        self.stats = SearchStats()

    def check_cap(self) -> None:
        n = len(self.inst.candidates)
        if self.inst.future and n > 1 and n > self.cfg.max_candidates:
            raise SolverCapError(f"{n} candidates exceeds the universal-branching cap "
                                 f"of {self.cfg.max_candidates}")

    def _ballots_key(self, ballots):
        if self.top_only:
            return tuple(sorted(b.order[0] for b in ballots))
        return tuple(sorted(b.order for b in ballots))

    def _key(self, s: GameState):
        inst = self.inst
        if inst.control == "AV":
            roster = tuple(f.registered for f in inst.future[s.next_index:])
        else:
            roster = len(inst.future) - s.next_index
        pending = None
        if s.pending is not None:
            pending = s.pending.order[0] if self.top_only else s.pending.order
        return (self._context, roster, pending, s.used,
                self._ballots_key(s.counted), self._ballots_key(s.right))

    def value(self, s: GameState, depth: int = 0) -> bool:
        self.stats.nodes += 1
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        if s.terminal:
            return goal_holds(self.goal, finalize_and_evaluate(s))
        key = None
        if self.memoize:
            key = self._key(s)
            hit = self.cache.get(key)
            if hit is not None:
                return hit
        if s.pending is not None:
            result = any(self.value(apply_chair_action(s, a), depth + 1)
                         for a in legal_chair_actions(s))
        else:
            result = all(self.value(reveal_vote(s, o), depth + 1) for o in self.orders)
        if key is not None:
            self.cache.setdefault(key, result)
        return result

    def winning_actions(self, s: GameState) -> Iterator[tuple[str, bool]]:
        for a in legal_chair_actions(s):
            yield a, self.value(apply_chair_action(s, a), 1)

    def solve(self) -> Verdict:
        self.check_cap()
        s0 = initial_state(self.inst)
        witness = None
        wins = False
        for action, ok in self.winning_actions(s0):
            if ok:
                wins, witness = True, action
                break
        return Verdict(wins, witness, self.stats.nodes, self.stats.max_depth)


def solve(inst: ControlInstance, cfg: SolverConfig = SolverConfig()) -> Verdict:
    return Solver(inst, cfg).solve()


def best_action(inst: ControlInstance, cfg: SolverConfig = SolverConfig(),
                state: GameState | None = None) -> str:
    """First action in tie-break order after which the chair still wins."""
    solver = Solver(inst, cfg)
    solver.check_cap()
    s = initial_state(inst) if state is None else state
    if s.pending is None:
        raise ValueError("no chair decision pending")
    for action, ok in solver.winning_actions(s):
        if ok:
            return action
    raise ValueError("chair cannot guarantee the goal from this position")


def adversary_best_reply(state: GameState, cfg: SolverConfig = SolverConfig()) -> tuple[str, ...]:
    """A ballot for the next voter that defeats the chair, if one exists;
    otherwise the first ballot in enumeration order."""
    if state.next_voter is None:
        raise ValueError("no voter remaining to reveal")
    solver = Solver(state.instance, cfg, validate=False)
    solver.check_cap()
    orders = list(itertools.permutations(lex_sorted(state.instance.candidates)))
    for order in orders:
        if not solver.value(reveal_vote(state, order)):
            return order
    return orders[0]

"""The online voter control game.

A :class:`ControlInstance` is a snapshot: past voters with their flags,
the current voter ``u`` whose ballot the chair sees before acting, and the
names of the voters still to come.  Play alternates between the chair's
decision on a revealed voter and the (adversarial) reveal of the next ballot.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .core import Ballot, ElectionSystem, ValidationError, is_total_order, mask_ballot
from .systems import get_system

CONTROLS = ("DV", "AV", "PV")
MODES = ("constructive", "destructive")

PAST_FLAGS = {
    "DV": ("kept", "deleted"),
    "AV": ("registered", "added", "skipped"),
    "PV": ("left", "right"),
}
# flags whose past records carry no ballot
NO_BALLOT_FLAGS = frozenset({"deleted", "skipped"})

# chair actions in tie-break order
ACTIONS = {
    "DV": ("keep", "delete"),
    "AV": ("skip", "add"),
    "PV": ("left", "right"),
}


class InstanceError(ValueError):
    """An instance violating a structural invariant; ``code`` names which."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class PastRecord:
    voter: str
    flag: str
    order: tuple[str, ...] | None = None


@dataclass(frozen=True)
class FutureVoter:
    voter: str
    registered: bool | None = None  # AV only


@dataclass(frozen=True)
class ControlInstance:
    control: str
    mode: str
    system: str
    candidates: tuple[str, ...]
    sigma: tuple[str, ...]
    distinguished: str
    current: Ballot
    past: tuple[PastRecord, ...] = ()
    future: tuple[FutureVoter, ...] = ()
    budget: int | None = None
    current_registered: bool = False  # AV: u must be unregistered

    @property
    def election_system(self) -> ElectionSystem:
        return get_system(self.system)

    @property
    def goal(self) -> "GoalSpec":
        return GoalSpec(self.mode, self.sigma, self.distinguished)


@dataclass(frozen=True)
class GoalSpec:
    mode: str
    sigma: tuple[str, ...]
    d: str

    @property
    def up(self) -> frozenset[str]:
        return frozenset(self.sigma[: self.sigma.index(self.d) + 1])

    @property
    def down(self) -> frozenset[str]:
        return frozenset(self.sigma[self.sigma.index(self.d):])

    @property
    def threat(self) -> frozenset[str]:
        """Candidates whose winning hurts the chair: C - Up or Down."""
        if self.mode == "constructive":
            return frozenset(self.sigma) - self.up
        return self.down


def goal_holds(goal: GoalSpec, winners: Iterable[str]) -> bool:
    w = frozenset(winners)
    if goal.mode == "constructive":
        return bool(w & goal.up)
    return not (w & goal.down)


def validate_instance(inst: ControlInstance) -> None:
    def fail(code: str, msg: str):
        raise InstanceError(code, msg)

    if inst.control not in CONTROLS:
        fail("bad-control", f"control must be one of {CONTROLS}, got {inst.control!r}")
    if inst.mode not in MODES:
        fail("bad-mode", f"mode must be one of {MODES}, got {inst.mode!r}")
    try:
        get_system(inst.system)
    except KeyError as e:
        fail("unknown-system", str(e.args[0]))
    cands = inst.candidates
    if not cands:
        fail("no-candidates", "candidate set is empty")
    if len(set(cands)) != len(cands):
        fail("duplicate-candidate", "candidate names must be distinct")
    if any(not c for c in cands):
        fail("empty-name", "candidate names must be non-empty")
    if not is_total_order(inst.sigma, cands) or len(set(inst.sigma)) != len(inst.sigma):
        fail("bad-sigma", "sigma must be a total order over the candidates")
    if inst.distinguished not in cands:
        fail("bad-distinguished", f"distinguished candidate {inst.distinguished!r} not in C")

    if inst.control in ("DV", "AV"):
        if inst.budget is None or inst.budget < 0:
            fail("bad-budget", "DV/AV instances need a nonnegative budget")
    elif inst.budget is not None:
        fail("bad-budget", "PV instances carry no budget")

    names: list[str] = []
    flags = PAST_FLAGS[inst.control]
    for rec in inst.past:
        names.append(rec.voter)
        if rec.flag not in flags:
            fail("bad-flag", f"past voter {rec.voter!r}: flag {rec.flag!r} not in {flags}")
        if rec.flag in NO_BALLOT_FLAGS:
            if rec.order is not None:
                fail("unexpected-ballot", f"past voter {rec.voter!r} is {rec.flag} but carries a ballot")
        elif rec.order is None:
            fail("missing-ballot", f"past voter {rec.voter!r} ({rec.flag}) has no ballot")
        elif not is_total_order(rec.order, cands) or len(set(rec.order)) != len(rec.order):
            fail("bad-ballot", f"ballot of past voter {rec.voter!r} is not a total order over C")
    if inst.control == "DV":
        used = sum(r.flag == "deleted" for r in inst.past)
        if used > inst.budget:
            fail("over-budget", f"{used} past voters flagged deleted but budget is {inst.budget}")
    if inst.control == "AV":
        used = sum(r.flag == "added" for r in inst.past)
        if used > inst.budget:
            fail("over-budget", f"{used} past voters flagged added but budget is {inst.budget}")
        if inst.current_registered:
            fail("registered-current", "u must be unregistered")
    elif inst.current_registered:
        fail("registered-current", "registration flags only apply to AV")

    u = inst.current
    names.append(u.voter)
    if not is_total_order(u.order, cands) or len(set(u.order)) != len(u.order):
        fail("bad-ballot", f"ballot of current voter {u.voter!r} is not a total order over C")
    for fv in inst.future:
        names.append(fv.voter)
        if inst.control == "AV" and fv.registered is None:
            fail("missing-registration", f"future voter {fv.voter!r} lacks a registered flag")
        if inst.control != "AV" and fv.registered is not None:
            fail("unexpected-registration", f"future voter {fv.voter!r}: registration only applies to AV")
    if any(not n for n in names):
        fail("empty-name", "voter names must be non-empty")
    if len(set(names)) != len(names):
        fail("duplicate-voter", "voter names must be globally distinct")


@dataclass(frozen=True)
class GameState:
    """Position in the game.

    ``counted`` is the DV kept list, the AV registered-plus-added list, or
    the PV left side; ``right`` is used by PV only.  ``pending`` holds a
    revealed voter awaiting the chair's decision.
    """

    instance: ControlInstance
    next_index: int
    pending: Ballot | None
    counted: tuple[Ballot, ...] = ()
    right: tuple[Ballot, ...] = ()
    used: int = 0
    history: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    @property
    def terminal(self) -> bool:
        return self.pending is None and self.next_index == len(self.instance.future)

    @property
    def next_voter(self) -> FutureVoter | None:
        if self.pending is not None or self.next_index >= len(self.instance.future):
            return None
        return self.instance.future[self.next_index]


def initial_state(inst: ControlInstance) -> GameState:
    counted: list[Ballot] = []
    right: list[Ballot] = []
    used = 0
    for rec in inst.past:
        if rec.flag in ("deleted", "added"):
            used += 1
        if rec.order is None:
            continue
        (right if rec.flag == "right" else counted).append(Ballot(rec.voter, rec.order))
    return GameState(inst, 0, inst.current, tuple(counted), tuple(right), used)


def legal_chair_actions(state: GameState) -> tuple[str, ...]:
    if state.pending is None:
        return ()
    inst = state.instance
    if inst.control == "PV":
        return ACTIONS["PV"]
    passive, active = ACTIONS[inst.control]
    if state.used < inst.budget:
        return (passive, active)
    return (passive,)


def apply_chair_action(state: GameState, action: str) -> GameState:
    if action not in legal_chair_actions(state):
        raise ValueError(f"illegal action {action!r}; legal: {legal_chair_actions(state)}")
    b = state.pending
    hist = state.history + ((b.voter, action),)
    if action in ("keep", "add", "left"):
        return replace(state, pending=None, counted=state.counted + (b,),
                       used=state.used + (action == "add"), history=hist)
    if action == "right":
        return replace(state, pending=None, right=state.right + (b,), history=hist)
    return replace(state, pending=None, used=state.used + (action == "delete"), history=hist)


def reveal_vote(state: GameState, order: Sequence[str]) -> GameState:
    voter = state.next_voter
    if voter is None:
        raise ValueError("no voter left to reveal" if state.pending is None
                         else "pending chair decision must be made first")
    order = tuple(order)
    if not is_total_order(order, state.instance.candidates) or len(set(order)) != len(order):
        raise ValidationError(f"revealed ballot {order} is not a total order over C")
    b = Ballot(voter.voter, order)
    hist = state.history + ((voter.voter, ">".join(order)),)
    if state.instance.control == "AV" and voter.registered:
        return replace(state, next_index=state.next_index + 1,
                       counted=state.counted + (b,), history=hist)
    return replace(state, next_index=state.next_index + 1, pending=b, history=hist)


@dataclass(frozen=True)
class PartitionOutcome:
    w1: frozenset[str]
    w2: frozenset[str]
    winners: frozenset[str]


def run_two_round_tp(system: ElectionSystem, candidates: Iterable[str],
                     left: Sequence[Ballot], right: Sequence[Ballot]) -> PartitionOutcome:
    """Ties-promote partition election: every first-round winner advances."""
    cands = frozenset(candidates)
    w1 = system(cands, left)
    w2 = system(cands, right)
    finalists = w1 | w2
    if not finalists:
        return PartitionOutcome(w1, w2, frozenset())
    runoff = [mask_ballot(b, finalists) for b in (*left, *right)]
    return PartitionOutcome(w1, w2, system(finalists, runoff))


def finalize_and_evaluate(state: GameState) -> frozenset[str]:
    if not state.terminal:
        raise ValueError("state is not terminal")
    inst = state.instance
    system = inst.election_system
    if inst.control == "PV":
        return run_two_round_tp(system, inst.candidates, state.counted, state.right).winners
    return system(inst.candidates, state.counted)


def nononline_ccpv_one_candidate(system: ElectionSystem, candidates: Iterable[str],
                                 ballots: Sequence[Ballot]) -> bool:
    """Non-online constructive partition control with a single candidate.

    The candidate must win the runoff, where everyone votes; conversely the
    partition (V, empty) lets her through the first round whenever she wins
    with all of V.
    """
    cands = frozenset(candidates)
    if len(cands) != 1:
        raise ValueError("exactly one candidate required")
    return cands <= system(cands, ballots)

"""Text-mode game: a human chair against the exhaustive adversary."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .game import (
    ControlInstance,
    GameState,
    apply_chair_action,
    finalize_and_evaluate,
    goal_holds,
    initial_state,
    legal_chair_actions,
    reveal_vote,
)
from .solver import Solver, SolverConfig, adversary_best_reply


@dataclass
class PlayResult:
    transcript: list[str] = field(default_factory=list)
    completed: bool = False
    winners: frozenset[str] | None = None
    goal_met: bool | None = None


def _show(state: GameState) -> str:
    inst = state.instance
    parts = [f"{len(state.counted)} counted" if inst.control != "PV"
             else f"left={len(state.counted)} right={len(state.right)}"]
    if inst.control in ("DV", "AV"):
        parts.append(f"budget used {state.used}/{inst.budget}")
    parts.append(f"{len(inst.future) - state.next_index} voters to come")
    return "[" + ", ".join(parts) + "]"


def play_loop(inst: ControlInstance, read: Callable[[str], str] = input,
              write: Callable[[str], None] = print,
              cfg: SolverConfig = SolverConfig()) -> PlayResult:
    result = PlayResult()
    solver = Solver(inst, cfg)
    solver.check_cap()
    state = initial_state(inst)

    def log(line: str) -> None:
        result.transcript.append(line)
        write(line)

    while not state.terminal:
        if state.pending is None:
            order = adversary_best_reply(state, cfg)
            voter = state.next_voter.voter
            state = reveal_vote(state, order)
            log(f"reveal {voter} {'>'.join(order)}")
            continue
        actions = legal_chair_actions(state)
        winning = [a for a, ok in solver.winning_actions(state) if ok]
        hint = f"hint: {winning[0]} keeps the guarantee" if winning else "hint: no action guarantees the goal"
        write(f"{_show(state)} voter {state.pending.voter} votes {'>'.join(state.pending.order)}")
        write(hint)
        while True:
            try:
                answer = read(f"action {'/'.join(actions)} (or quit)> ").strip()
            except EOFError:
                log("aborted: end of input")
                return result
            if answer == "quit":
                log("aborted: chair quit")
                return result
            if answer in actions:
                break
            write(f"illegal action {answer!r}")
        log(f"chair {state.pending.voter} {answer}")
        state = apply_chair_action(state, answer)

    winners = finalize_and_evaluate(state)
    result.completed = True
    result.winners = winners
    result.goal_met = goal_holds(inst.goal, winners)
    log(f"winners {{{', '.join(sorted(winners))}}}")
    log("goal met" if result.goal_met else "goal missed")
    return result

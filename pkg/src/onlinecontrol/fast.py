"""Polynomial-time online plurality control by deleting or adding voters.

The chair acts greedily on ``u``; the rest is a closed-form worst case in
which every future vote that can count goes to the strongest threatening
candidate, and the chair spends any remaining deletions on those votes.
"""

from __future__ import annotations

from .game import ControlInstance, validate_instance


class EngineMismatch(ValueError):
    """The fast engine was asked to handle an instance it does not cover."""


def _check(inst: ControlInstance, control: str) -> None:
    if inst.control != control:
        raise EngineMismatch(f"fast_{control.lower()} needs a {control} instance, got {inst.control}")
    if inst.system != "plurality":
        raise EngineMismatch(f"fast engine only handles plurality, got {inst.system!r}")
    validate_instance(inst)


def _best(table: dict[str, int], group) -> int:
    return max(table[c] for c in group)


def _compare(inst, table, extra) -> bool:
    goal = inst.goal
    threat = goal.threat
    if inst.mode == "constructive":
        return _best(table, goal.up) >= _best(table, threat) + extra
    safe = frozenset(inst.candidates) - threat
    return _best(table, safe) > _best(table, threat) + extra


def fast_dv(inst: ControlInstance) -> bool:
    _check(inst, "DV")
    goal = inst.goal
    threat = goal.threat
    if inst.mode == "constructive" and not threat:
        return True
    if inst.mode == "destructive" and threat == frozenset(inst.candidates):
        return False
    table = dict.fromkeys(inst.candidates, 0)
    for r in inst.past:
        if r.flag == "kept":
            table[r.order[0]] += 1
    left = inst.budget - sum(r.flag == "deleted" for r in inst.past)
    top_u = inst.current.top
    delete = left > 0 and top_u in threat and table[top_u] == _best(table, threat)
    if delete:
        left -= 1
    else:
        table[top_u] += 1
    return _compare(inst, table, max(0, len(inst.future) - left))


def fast_av(inst: ControlInstance) -> bool:
    _check(inst, "AV")
    goal = inst.goal
    threat = goal.threat
    if inst.mode == "constructive" and not threat:
        return True
    if inst.mode == "destructive" and threat == frozenset(inst.candidates):
        return False
    table = dict.fromkeys(inst.candidates, 0)
    for r in inst.past:
        if r.flag in ("registered", "added"):
            table[r.order[0]] += 1
    left = inst.budget - sum(r.flag == "added" for r in inst.past)
    if left > 0 and inst.current.top not in threat:
        table[inst.current.top] += 1
    n_registered = sum(bool(f.registered) for f in inst.future)
    return _compare(inst, table, n_registered)


def fast_solve(inst: ControlInstance) -> bool:
    if inst.control == "DV":
        return fast_dv(inst)
    if inst.control == "AV":
        return fast_av(inst)
    raise EngineMismatch("no fast algorithm for partition control")

"""JSON wire format for control instances and elections."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import Ballot
from .game import NO_BALLOT_FLAGS, ControlInstance, FutureVoter, PastRecord, validate_instance


class InstanceFormatError(ValueError):
    """The document is not a well-formed instance file."""


TOP_KEYS = {"control", "mode", "system", "candidates", "sigma", "distinguished",
            "budget", "past", "current", "future"}
REQUIRED = TOP_KEYS - {"budget"}


def _names(value, what: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise InstanceFormatError(f"{what} must be a list of strings")
    return tuple(value)


def _only(d: dict, allowed: set[str], where: str) -> None:
    if not isinstance(d, dict):
        raise InstanceFormatError(f"{where} must be an object")
    extra = set(d) - allowed
    if extra:
        raise InstanceFormatError(f"unknown field(s) {sorted(extra)} in {where}")


def _voter(d: dict, where: str) -> str:
    v = d.get("voter")
    if not isinstance(v, str):
        raise InstanceFormatError(f"{where} needs a string 'voter'")
    return v


def instance_from_dict(doc: dict[str, Any]) -> ControlInstance:
    _only(doc, TOP_KEYS, "instance")
    missing = REQUIRED - set(doc)
    if missing:
        raise InstanceFormatError(f"missing field(s) {sorted(missing)}")
    control = doc["control"]
    budget = doc.get("budget")
    if control in ("DV", "AV") and not isinstance(budget, int):
        raise InstanceFormatError("DV/AV instances need an integer 'budget'")
    past = []
    for i, rec in enumerate(doc["past"]):
        where = f"past[{i}]"
        _only(rec, {"voter", "flag", "ballot"}, where)
        voter = _voter(rec, where)
        flag = rec.get("flag")
        if not isinstance(flag, str):
            raise InstanceFormatError(f"{where} needs a string 'flag'")
        if flag in NO_BALLOT_FLAGS:
            if "ballot" in rec:
                raise InstanceFormatError(f"{where} is {flag} and must not carry a ballot")
            order = None
        else:
            if "ballot" not in rec:
                raise InstanceFormatError(f"{where} ({flag}) is missing its ballot")
            order = _names(rec["ballot"], f"{where}.ballot")
        past.append(PastRecord(voter, flag, order))
    cur = doc["current"]
    _only(cur, {"voter", "ballot", "registered"}, "current")
    if "ballot" not in cur:
        raise InstanceFormatError("current voter is missing its ballot")
    future = []
    for i, fv in enumerate(doc["future"]):
        where = f"future[{i}]"
        _only(fv, {"voter", "registered"}, where)
        reg = fv.get("registered")
        if reg is not None and not isinstance(reg, bool):
            raise InstanceFormatError(f"{where}.registered must be a boolean")
        future.append(FutureVoter(_voter(fv, where), reg))
    reg_u = cur.get("registered", False)
    if not isinstance(reg_u, bool):
        raise InstanceFormatError("current.registered must be a boolean")
    inst = ControlInstance(
        control=control,
        mode=doc["mode"],
        system=doc["system"],
        candidates=_names(doc["candidates"], "candidates"),
        sigma=_names(doc["sigma"], "sigma"),
        distinguished=doc["distinguished"],
        current=Ballot(_voter(cur, "current"), _names(cur["ballot"], "current.ballot")),
        past=tuple(past),
        future=tuple(future),
        budget=budget,
        current_registered=reg_u,
    )
    validate_instance(inst)
    return inst


def instance_to_dict(inst: ControlInstance) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "control": inst.control,
        "mode": inst.mode,
        "system": inst.system,
        "candidates": list(inst.candidates),
        "sigma": list(inst.sigma),
        "distinguished": inst.distinguished,
    }
    if inst.budget is not None:
        doc["budget"] = inst.budget
    doc["past"] = []
    for r in inst.past:
        rec: dict[str, Any] = {"voter": r.voter, "flag": r.flag}
        if r.order is not None:
            rec["ballot"] = list(r.order)
        doc["past"].append(rec)
    doc["current"] = {"voter": inst.current.voter, "ballot": list(inst.current.order)}
    if inst.current_registered:
        doc["current"]["registered"] = True
    doc["future"] = [
        {"voter": f.voter} if f.registered is None else {"voter": f.voter, "registered": f.registered}
        for f in inst.future
    ]
    return doc


def dumps_instance(inst: ControlInstance) -> str:
    return json.dumps(instance_to_dict(inst), indent=2, ensure_ascii=False)


def loads_instance(text: str) -> ControlInstance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"invalid JSON: {e}") from e
    return instance_from_dict(doc)


def load_instance(path) -> ControlInstance:
    return loads_instance(Path(path).read_text(encoding="utf-8"))


def store_instance(inst: ControlInstance, path) -> None:
    Path(path).write_text(dumps_instance(inst) + "\n", encoding="utf-8")


def load_election(path) -> tuple[tuple[str, ...], list[Ballot]]:
    """Election file: {"candidates": [...], "votes": [{"voter": ..., "ballot": [...]}]}."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"invalid JSON: {e}") from e
    _only(doc, {"candidates", "votes"}, "election")
    cands = _names(doc.get("candidates"), "candidates")
    votes = []
    for i, v in enumerate(doc.get("votes", [])):
        _only(v, {"voter", "ballot"}, f"votes[{i}]")
        votes.append(Ballot(_voter(v, f"votes[{i}]"), _names(v.get("ballot"), f"votes[{i}].ballot")))
    return cands, votes

"""Constructed election systems used by the hardness reductions.

Each rule is total: malformed elections fall into an "everyone wins" or
"everyone loses" branch rather than raising.  Only plurality is anonymous
or top-only; every constructed system reads voter names.
"""

from __future__ import annotations

from typing import Sequence

from .core import PLURALITY, Ballot, ElectionSystem, lex_less, lex_sorted
from .formula import eval_formula, max_var, try_parse

ROUND_ONE = "RoundOne"
MARKER = "Marker"


def pad_binary(i: int, width: int) -> str:
    return format(i, f"0{width}b")


def _ballot_bit(b: Ballot) -> bool:
    # true iff the least preferred name sorts before the next-to-least one
    return lex_less(b.order[-1], b.order[-2])


def _distinct_names(ballots: Sequence[Ballot]) -> bool:
    return len({b.voter for b in ballots}) == len(ballots)


def _qbf_dv_satisfied(cands: frozenset, ballots: Sequence[Ballot]) -> bool:
    phi = try_parse(lex_sorted(cands)[0])
    if phi is None:
        return False
    top = max_var(phi)
    if top % 2:
        return False
    if not _distinct_names(ballots):
        return False
    voters = sorted(ballots, key=lambda b: b.voter.encode())
    if len(voters) < top or len(cands) < 2:
        return False
    bits = []
    for i, b in enumerate(voters[:top], start=1):
        suffix = b.voter[-2:]
        if len(suffix) < 2:
            return False
        if i % 2:
            if suffix not in ("00", "01"):
                return False
            bits.append(suffix == "01")
        else:
            if suffix not in ("10", "11"):
                return False
            bits.append(_ballot_bit(b))
    return eval_formula(phi, bits)


def winners_qbf_dv(cands: frozenset, ballots: Sequence[Ballot], flip: bool = False) -> frozenset:
    """Everyone wins iff the voter names and ballots encode an assignment
    satisfying the formula named by the least candidate.

    Odd variables come from the last two characters of the sorted voter
    names ("01" true, "00" false); even variables from whether the voter's
    least preferred candidate name sorts before the next-to-least one.
    ``flip`` exchanges the everyone-wins and everyone-loses outcomes.
    """
    ok = _qbf_dv_satisfied(cands, ballots)
    return frozenset(cands) if ok != flip else frozenset()


def winners_taut(cands: frozenset, ballots: Sequence[Ballot]) -> frozenset:
    phi = try_parse(lex_sorted(cands)[0])
    if phi is None or len(cands) < 2 or not _distinct_names(ballots):
        return frozenset()
    n = max_var(phi)
    if len(ballots) < n:
        return frozenset()
    voters = sorted(ballots, key=lambda b: b.voter.encode())
    bits = [_ballot_bit(b) for b in voters[:n]]
    return frozenset(cands) if eval_formula(phi, bits) else frozenset()


def _roundone_case2(cands: frozenset, ballots: Sequence[Ballot]) -> tuple[str | None, bool]:
    """Return (formula candidate, satisfied); candidate is None when malformed."""
    others = lex_sorted(c for c in cands if c != ROUND_ONE)
    if not others or len(cands) != 2:
        return None, False
    phi_name = others[0]
    phi = try_parse(phi_name)
    if phi is None or max_var(phi) % 2:
        return None, False
    two_ell = max_var(phi)
    names = [b.voter for b in ballots]
    present = set(names)
    if len(names) != two_ell + 1 or len(present) != len(names) or MARKER not in present:
        return None, False
    width = two_ell.bit_length()
    by_name = {b.voter: b for b in ballots}
    bits = []
    for i in range(1, two_ell + 1):
        stem = "v" + pad_binary(i, width)
        if i % 2:
            yes, no = stem + "yes" in present, stem + "no" in present
            if yes == no:
                return None, False
            bits.append(yes)
        else:
            if stem not in present:
                return None, False
            bits.append(by_name[stem].top == ROUND_ONE)
    return phi_name, eval_formula(phi, bits)


def winners_roundone(cands: frozenset, ballots: Sequence[Ballot], flip: bool = False) -> frozenset:
    if ROUND_ONE not in cands:
        return frozenset() if flip else frozenset(cands)
    if not any(b.voter == MARKER for b in ballots):
        return frozenset()
    phi_name, satisfied = _roundone_case2(cands, ballots)
    if flip:
        return frozenset() if satisfied else frozenset(cands)
    if satisfied:
        return frozenset([phi_name])
    return frozenset([ROUND_ONE])


def winners_sat_1c(cands: frozenset, ballots: Sequence[Ballot]) -> frozenset:
    if len(cands) != 1:
        return frozenset(cands)
    (name,) = cands
    phi = try_parse(name)
    if phi is None:
        return frozenset(cands)
    k = max_var(phi)
    if len(ballots) != k:
        return frozenset(cands)
    bits = [v.endswith("1") for v in lex_sorted(b.voter for b in ballots)]
    twin = [not x for x in bits]
    if eval_formula(phi, bits) or eval_formula(phi, twin):
        return frozenset()
    return frozenset(cands)


QBF_DV = ElectionSystem("qbf-dv", winners_qbf_dv)
QBF_DV_FLIP = ElectionSystem("qbf-dv-flip", lambda c, v: winners_qbf_dv(c, v, flip=True))
TAUT = ElectionSystem("taut", winners_taut)
ROUNDONE = ElectionSystem("roundone", winners_roundone)
ROUNDONE_FLIP = ElectionSystem("roundone-flip", lambda c, v: winners_roundone(c, v, flip=True))
SAT_1C = ElectionSystem("sat-1c", winners_sat_1c)

SYSTEMS: dict[str, ElectionSystem] = {
    s.id: s for s in (PLURALITY, QBF_DV, QBF_DV_FLIP, TAUT, ROUNDONE, ROUNDONE_FLIP, SAT_1C)
}


def get_system(system_id: str) -> ElectionSystem:
    try:
        return SYSTEMS[system_id]
    except KeyError:
        raise KeyError(f"unknown election system {system_id!r}; known: {sorted(SYSTEMS)}") from None

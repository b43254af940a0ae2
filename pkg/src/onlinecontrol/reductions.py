"""Instance generators for the hardness reductions, and brute-force oracles.

Binary voter names are zero-padded to a fixed width per instance so that
byte-wise name order coincides with numeric order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import PLURALITY, Ballot, lex_sorted, mask_ballot
from .formula import Formula, assignments, eval_formula, max_var, render_formula, variables
from .game import ControlInstance, FutureVoter, PastRecord, run_two_round_tp
from .systems import MARKER, ROUND_ONE, pad_binary


class ReductionError(ValueError):
    pass


# --- oracles -----------------------------------------------------------------

@dataclass(frozen=True)
class QbfPrimeInstance:
    formula: Formula
    ell: int

    def __post_init__(self):
        if self.ell < 1 or max_var(self.formula) != 2 * self.ell:
            raise ReductionError(f"formula must have x{2 * self.ell} as its largest variable")

    @classmethod
    def from_formula(cls, f: Formula) -> "QbfPrimeInstance":
        top = max_var(f)
        if top % 2:
            raise ReductionError(f"largest variable x{top} has odd index")
        return cls(f, top // 2)


def eval_qbf_prime(q: QbfPrimeInstance) -> bool:
    """exists b1 forall b2 ... exists b_{2l-1} forall b_{2l}: F(b)."""
    n = 2 * q.ell

    def go(prefix: tuple[bool, ...]) -> bool:
        if len(prefix) == n:
            return eval_formula(q.formula, prefix)
        branches = (go(prefix + (b,)) for b in (False, True))
        return any(branches) if len(prefix) % 2 == 0 else all(branches)

    return go(())


def sat_satisfiable(f: Formula) -> bool:
    return any(eval_formula(f, a) for a in assignments(max_var(f)))


def taut(f: Formula) -> bool:
    return all(eval_formula(f, a) for a in assignments(max_var(f)))


@dataclass(frozen=True)
class HittingSetInstance:
    m: int
    sets: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self):
        if not self.sets:
            raise ReductionError("collection of sets must be nonempty")
        for s in self.sets:
            if not s or not s <= set(range(1, self.m + 1)):
                raise ReductionError(f"set {sorted(s)} is empty or not within 1..{self.m}")
        if not 1 <= self.k <= self.m:
            raise ReductionError(f"need 1 <= k <= m, got k={self.k}, m={self.m}")

    @property
    def n(self) -> int:
        return len(self.sets)


def find_hitting_set(h: HittingSetInstance) -> tuple[int, ...] | None:
    for size in range(h.k + 1):
        for combo in itertools.combinations(range(1, h.m + 1), size):
            chosen = set(combo)
            if all(s & chosen for s in h.sets):
                return combo
    return None


def hitting_set_exists(h: HittingSetInstance) -> bool:
    return find_hitting_set(h) is not None


def parse_sets_file(text: str, k: int | None = None) -> HittingSetInstance:
    """First line "m n k", then one line of element indices per set."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 3:
        raise ReductionError("first line must be 'm n k'")
    m, n, k0 = (int(x) for x in lines[0])
    sets = tuple(frozenset(int(x) for x in ln) for ln in lines[1:])
    if len(sets) != n:
        raise ReductionError(f"header says {n} sets, found {len(sets)}")
    return HittingSetInstance(m, sets, k0 if k is None else k)


# --- QBF' -> DV / AV / PV -------------------------------------------------------

QBF_FAMILIES = ("ccdv", "ccav", "dcdv", "dcav", "ccpv", "dcpv")


def _name_suffix(i: int) -> str:
    return ("10", "00", "01")[i % 3]


def reduce_qbf(q: QbfPrimeInstance, family: str) -> ControlInstance:
    if family not in QBF_FAMILIES:
        raise ReductionError(f"unknown family {family!r}; choose from {QBF_FAMILIES}")
    a = render_formula(q.formula)
    ell = q.ell
    if family.endswith("pv"):
        width = (2 * ell).bit_length()
        names = []
        for i in range(1, ell + 1):
            odd, even = pad_binary(2 * i - 1, width), pad_binary(2 * i, width)
            names += [f"v{odd}yes", f"v{odd}no", f"v{even}"]
        constructive = family == "ccpv"
        sigma = (a, ROUND_ONE) if constructive else (ROUND_ONE, a)
        return ControlInstance(
            control="PV",
            mode="constructive" if constructive else "destructive",
            system="roundone" if constructive else "roundone-flip",
            candidates=(ROUND_ONE, a),
            sigma=sigma,
            distinguished=a,
            current=Ballot(MARKER, sigma),
            future=tuple(FutureVoter(n) for n in names),
        )
    b = a + "0"
    count = 3 * ell
    width = count.bit_length()
    names = [pad_binary(i, width) + _name_suffix(i) for i in range(1, count + 1)]
    control = family[2:].upper()
    constructive = family.startswith("cc")
    if control == "AV":
        future = tuple(FutureVoter(n, i % 3 == 0) for i, n in enumerate(names[1:], start=2))
    else:
        future = tuple(FutureVoter(n) for n in names[1:])
    return ControlInstance(
        control=control,
        mode="constructive" if constructive else "destructive",
        system="qbf-dv" if constructive else "qbf-dv-flip",
        candidates=(a, b),
        sigma=(a, b),
        distinguished=a if constructive else b,
        current=Ballot(names[0], (a, b)),
        future=future,
        budget=ell,
    )


# --- SAT -> one-candidate DCPV -------------------------------------------------

def reduce_sat_1cand(f: Formula) -> ControlInstance:
    k = max_var(f)
    if variables(f) != frozenset(range(1, k + 1)):
        missing = sorted(set(range(1, k + 1)) - variables(f))
        raise ReductionError(f"variables {missing} do not occur; x1..x{k} must all appear")
    c = render_formula(f)
    width = (2 * k).bit_length()
    names = [pad_binary(i, width) for i in range(1, 2 * k + 1)]
    return ControlInstance(
        control="PV",
        mode="destructive",
        system="sat-1c",
        candidates=(c,),
        sigma=(c,),
        distinguished=c,
        current=Ballot(names[0], (c,)),
        future=tuple(FutureVoter(n) for n in names[1:]),
    )


# --- tautology -> bounded-budget DV / AV -----------------------------------------

def reduce_taut(f: Formula, control: str = "DV") -> ControlInstance:
    """Budget-0 instance the chair wins iff ``f`` is a tautology.

    The n test voters come after ``u``; ``u`` gets the lexicographically
    greatest name so the system ranks it past position n and ignores its
    (fixed, chair-visible) ballot.
    """
    if control not in ("DV", "AV"):
        raise ReductionError("tautology reduction targets DV or AV")
    n = max_var(f)
    a = render_formula(f)
    b = a + "0"
    width = (n + 1).bit_length()
    tests = [pad_binary(i, width) for i in range(1, n + 1)]
    registered = True if control == "AV" else None
    return ControlInstance(
        control=control,
        mode="constructive",
        system="taut",
        candidates=(a, b),
        sigma=(a, b),
        distinguished=a,
        current=Ballot(pad_binary(n + 1, width), (a, b)),
        future=tuple(FutureVoter(t, registered) for t in tests),
        budget=0,
    )


# --- Hitting Set -> plurality PV ----------------------------------------------------

@dataclass(frozen=True)
class HsLayout:
    c: str
    w: str
    bs: tuple[str, ...]
    as_: tuple[str, ...]

    @property
    def all(self) -> list[str]:
        return lex_sorted((self.c, self.w, *self.bs, *self.as_))

    def ballot(self, *head: str) -> tuple[str, ...]:
        """``head`` followed by the remaining candidates in ascending name order."""
        rest = [x for x in self.all if x not in head]
        return tuple(head) + tuple(rest)


def hs_layout(h: HittingSetInstance) -> HsLayout:
    n_a = 4 * h.m * h.n * h.k + 1
    bw, aw = len(str(h.m)), len(str(n_a))
    return HsLayout("c", "w",
                    tuple(f"b{j:0{bw}d}" for j in range(1, h.m + 1)),
                    tuple(f"a{i:0{aw}d}" for i in range(1, n_a + 1)))


def _b_ballot(lay: HsLayout, j: int) -> tuple[str, ...]:
    b = lay.bs[j - 1]
    others = [x for x in lay.bs if x != b]
    return lay.ballot(b, *others, lay.c, lay.w)


def hs_side_orders(h: HittingSetInstance) -> list[tuple[str, ...]]:
    lay = hs_layout(h)
    nk = h.n * h.k
    orders = [lay.ballot(lay.c, lay.w)] * (4 * nk)
    orders += [lay.ballot(lay.w, lay.c)] * (4 * nk)
    for s in h.sets:
        orders += [lay.ballot(*(lay.bs[j - 1] for j in sorted(s)), lay.c)] * (2 * h.k)
    for j in range(1, h.m + 1):
        already = 2 * h.k * sum(min(s) == j for s in h.sets)
        orders += [_b_ballot(lay, j)] * (4 * nk - 1 - already)
    for a in lay.as_[:-1]:
        orders += [lay.ballot(a, lay.c), lay.ballot(a, lay.w)]
    return orders


def reduce_hitting_set(h: HittingSetInstance, variant: str = "cc") -> ControlInstance:
    if variant not in ("cc", "dc"):
        raise ReductionError("variant must be 'cc' or 'dc'")
    lay = hs_layout(h)
    side = hs_side_orders(h)
    width = len(str(len(side)))
    past = tuple(PastRecord(f"{tag}{i:0{width}d}", flag, o)
                 for tag, flag in (("L", "left"), ("R", "right"))
                 for i, o in enumerate(side, start=1))
    middle = [x for x in lay.all if x not in (lay.c, lay.w)]
    sigma = (lay.c, *middle, lay.w)
    kw = len(str(h.k))
    return ControlInstance(
        control="PV",
        mode="constructive" if variant == "cc" else "destructive",
        system="plurality",
        candidates=tuple(lay.all),
        sigma=sigma,
        distinguished=lay.c if variant == "cc" else lay.w,
        current=Ballot("u", lay.ballot(lay.as_[-1], lay.w)),
        past=past,
        future=tuple(FutureVoter(f"f{i:0{kw}d}") for i in range(1, h.k + 1)),
    )


@dataclass(frozen=True)
class HsCase:
    """One simulated game: the adversary's future tops and the chair's sides."""

    future_tops: tuple[str, ...]
    sides: tuple[str, ...]  # for u then each future voter
    finalists: frozenset[str]
    score_c: int
    score_w: int
    score_b: int  # summed over finalists drawn from B
    runoff_winners: frozenset[str]
    max_a_side_score: int


@dataclass(frozen=True)
class HsScoreReport:
    instance: HittingSetInstance
    hitting_set: tuple[str, ...] | None
    cases: tuple[HsCase, ...]

    @property
    def branch(self) -> str:
        return "yes" if self.hitting_set is not None else "no"


def _runoff_scores(finalists, ballots: Sequence[Ballot]) -> dict[str, int]:
    table = dict.fromkeys(finalists, 0)
    for b in ballots:
        table[mask_ballot(b, finalists).top] += 1
    return table


def _play_hs(inst: ControlInstance, lay: HsLayout, tops: Sequence[str], sides: Sequence[str]) -> HsCase:
    left = [Ballot(r.voter, r.order) for r in inst.past if r.flag == "left"]
    right = [Ballot(r.voter, r.order) for r in inst.past if r.flag == "right"]
    movers = [inst.current]
    for fv, top in zip(inst.future, tops):
        if top in lay.bs:
            order = _b_ballot(lay, lay.bs.index(top) + 1)
        elif top == lay.c:
            order = lay.ballot(lay.c, lay.w)
        else:
            order = lay.ballot(lay.w, lay.c)
        movers.append(Ballot(fv.voter, order))
    for b, side in zip(movers, sides):
        (left if side == "left" else right).append(b)
    out = run_two_round_tp(PLURALITY, inst.candidates, left, right)
    finalists = out.w1 | out.w2
    table = _runoff_scores(finalists, left + right)
    a_set = set(lay.as_)
    max_a = 0
    for votes in (left, right):
        counts: dict[str, int] = {}
        for b in votes:
            if b.top in a_set:
                counts[b.top] = counts.get(b.top, 0) + 1
        max_a = max([max_a, *counts.values()])
    return HsCase(
        future_tops=tuple(tops),
        sides=tuple(sides),
        finalists=frozenset(finalists),
        score_c=table.get(lay.c, 0),
        score_w=table.get(lay.w, 0),
        score_b=sum(v for x, v in table.items() if x in lay.bs),
        runoff_winners=out.winners,
        max_a_side_score=max_a,
    )


def simulate_hs_proof_strategies(h: HittingSetInstance) -> HsScoreReport:
    """Play the reduced instance with the strategies from the hardness argument.

    With a hitting set B' of size k, the i-th future voter ranks the i-th
    member of B' first and every partition of the remaining voters is tried.
    Without one, the chair puts u and all future voters on the left side and
    every assignment of future top choices from B, c and w is tried.
    """
    inst = reduce_hitting_set(h, "cc")
    lay = hs_layout(h)
    hs = find_hitting_set(h)
    cases = []
    if hs is not None:
        chosen = list(hs) + [j for j in range(1, h.m + 1) if j not in hs]
        b_prime = tuple(lay.bs[j - 1] for j in chosen[: h.k])
        for sides in itertools.product(("left", "right"), repeat=h.k + 1):
            cases.append(_play_hs(inst, lay, b_prime, sides))
        return HsScoreReport(h, b_prime, tuple(cases))
    pool = (*lay.bs, lay.c, lay.w)
    for tops in itertools.product(pool, repeat=h.k):
        cases.append(_play_hs(inst, lay, tops, ("left",) * (h.k + 1)))
    return HsScoreReport(h, None, tuple(cases))

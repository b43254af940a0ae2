"""Candidates, ballots, masking and the plurality rule.

Candidate and voter names are plain ``str``.  Ordering between names is
byte-wise over their UTF-8 encoding, which several constructed systems rely
on ("lexicographically least candidate", sorting voters by name).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence


class ValidationError(ValueError):
    """Malformed election data (bad ballot, duplicate names, ...)."""


def lex_key(name: str) -> bytes:
    return name.encode("utf-8")


def lex_less(a: str, b: str) -> bool:
    return lex_key(a) < lex_key(b)


def lex_sorted(names: Iterable[str]) -> list[str]:
    return sorted(names, key=lex_key)


@dataclass(frozen=True)
class Ballot:
    voter: str
    order: tuple[str, ...]

    @property
    def top(self) -> str:
        return self.order[0]


def mask(order: Sequence[str], keep: Iterable[str]) -> tuple[str, ...]:
    """Restrict a preference order to ``keep``, preserving relative order."""
    keep = set(keep)
    unknown = keep.difference(order)
    if unknown:
        raise ValidationError(f"cannot mask to unknown candidates {sorted(unknown)}")
    return tuple(c for c in order if c in keep)


def mask_ballot(ballot: Ballot, keep: Iterable[str]) -> Ballot:
    return Ballot(ballot.voter, mask(ballot.order, keep))


def is_total_order(order: Sequence[str], candidates: Iterable[str]) -> bool:
    cands = set(candidates)
    return len(order) == len(cands) and set(order) == cands


def validate_election(candidates: Iterable[str], ballots: Sequence[Ballot]) -> None:
    cands = list(candidates)
    if len(set(cands)) != len(cands):
        raise ValidationError("duplicate candidate name")
    if any(not c for c in cands):
        raise ValidationError("empty candidate name")
    seen: set[str] = set()
    for b in ballots:
        if not b.voter:
            raise ValidationError("empty voter name")
        if b.voter in seen:
            raise ValidationError(f"duplicate voter {b.voter!r}")
        seen.add(b.voter)
        if len(set(b.order)) != len(b.order):
            raise ValidationError(f"ballot of {b.voter!r} repeats a candidate")
        if not is_total_order(b.order, cands):
            raise ValidationError(f"ballot of {b.voter!r} is not a total order over the candidates")


def scores(candidates: Iterable[str], ballots: Iterable[Ballot]) -> dict[str, int]:
    table = dict.fromkeys(candidates, 0)
    for b in ballots:
        table[b.top] += 1
    return table


def plurality_winners(candidates: Iterable[str], ballots: Sequence[Ballot]) -> frozenset[str]:
    cands = frozenset(candidates)
    if not cands:
        return frozenset()
    counts = Counter(dict.fromkeys(cands, 0))
    for b in ballots:
        if not b.order or b.top not in cands:
            raise ValidationError(f"ballot of {b.voter!r} does not rank a candidate first")
        counts[b.top] += 1
    best = max(counts.values())
    return frozenset(c for c, n in counts.items() if n == best)


WinnerRule = Callable[[frozenset, Sequence[Ballot]], frozenset]


@dataclass(frozen=True)
class ElectionSystem:
    """A winner rule plus the structural flags the solver may exploit."""

    id: str
    winners: WinnerRule
    anonymous: bool = False
    top_only: bool = False

    def __call__(self, candidates: Iterable[str], ballots: Sequence[Ballot]) -> frozenset[str]:
        cands = frozenset(candidates)
        if not cands:
            return frozenset()
        return frozenset(self.winners(cands, list(ballots)))


PLURALITY = ElectionSystem("plurality", plurality_winners, anonymous=True, top_only=True)

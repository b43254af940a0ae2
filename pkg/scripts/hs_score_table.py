"""Runoff scores from the Hitting Set construction, one row per instance.

For yes-instances the scores are the same in every simulated partition, so a
single row is shown; for no-instances the row gives the worst case over the
adversary's choices (smallest c score, largest w score).
"""

from __future__ import annotations

import argparse

from onlinecontrol.corpus import hs_grid
from onlinecontrol.reductions import simulate_hs_proof_strategies


def row(rep) -> str:
    h = rep.instance
    sets = " ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in h.sets)
    cs = [c.score_c for c in rep.cases]
    ws = [c.score_w for c in rep.cases]
    a = max(c.max_a_side_score for c in rep.cases)
    if rep.branch == "yes":
        b = {c.score_b for c in rep.cases}
        scores = f"c={min(cs)} w={max(ws)} B'={'/'.join(map(str, sorted(b)))}"
    else:
        scores = f"c>={min(cs)} w<={max(ws)}"
    return f"{h.m:>2} {h.n:>2} {h.k:>2}  {rep.branch:<3}  {scores:<24} a<={a:<3} {sets}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=2, help="bound on m, n and k")
    args = ap.parse_args()
    print(" m  n  k  hs   scores                   A-side sets")
    for h in hs_grid(args.max):
        print(row(simulate_hs_proof_strategies(h)))


if __name__ == "__main__":
    main()

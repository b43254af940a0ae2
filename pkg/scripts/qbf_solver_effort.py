"""Search effort of the exact solver on the QBF-derived instances.

Prints, per family, how many instances the chair wins and the node counts
the game-tree search needed (no memoization is available for these systems).
"""

from __future__ import annotations

import argparse
import statistics
import time

from onlinecontrol.corpus import qbf_ell1_corpus, random_qbf_formulas
from onlinecontrol.reductions import QBF_FAMILIES, QbfPrimeInstance, eval_qbf_prime, reduce_qbf
from onlinecontrol.solver import solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=20, help="seeded formulas with two quantifier blocks")
    args = ap.parse_args()
    corpora = {1: qbf_ell1_corpus(), 2: random_qbf_formulas(args.seed, args.count)}
    print("ell family  true/total  agree  nodes(mean)  nodes(max)  seconds")
    for ell, formulas in corpora.items():
        for fam in QBF_FAMILIES:
            nodes, truths, agree = [], 0, 0
            t0 = time.perf_counter()
            for f in formulas:
                q = QbfPrimeInstance.from_formula(f)
                v = solve(reduce_qbf(q, fam))
                expected = eval_qbf_prime(q)
                truths += expected
                agree += v.chair_wins == expected
                nodes.append(v.nodes)
            dt = time.perf_counter() - t0
            print(f"{ell:>3} {fam:<6} {truths:>4}/{len(formulas):<5}  {agree:>5}  "
                  f"{statistics.mean(nodes):>11.1f}  {max(nodes):>10}  {dt:7.2f}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Reproduce the two path-graph fixtures.

1. On the 5-path, greedy edge addition with k=2 is suboptimal: it reaches
   R_tot ~ 8.18 while the best pair of edges reaches ~ 7.67.
2. On the 20-path, the single-edge improvement is not monotone under edge
   addition: after connecting the endpoints, the edge (0,2) improves from
   91/3 ~ 30.33 to 285/7 ~ 40.71.
"""

from reswire import brute_force_optimal, delta_table, gtr
from reswire.verify import path_graph


def main():
    p5 = path_graph(5)
    plan = gtr(p5, 2)
    edges, opt = brute_force_optimal(p5, 2)
    print("5-path, k=2")
    print(f"  greedy edges:  {plan.edge_list()}  R_tot = {plan.rtot_final:.4f}")
    print(f"  optimal edges: {list(edges)}  R_tot = {opt:.4f}")

    p20 = path_graph(20)
    f = (0, 19)
    before = delta_table(p20)
    after = delta_table(p20.with_edges([f]))
    print("\n20-path, non-monotone single-edge improvements after adding (0,19)")
    for e in sorted(after):
        if e in before and after[e] > before[e] + 1e-9:
            print(f"  edge {e}: {before[e]:.4f} -> {after[e]:.4f}")


if __name__ == "__main__":
    main()

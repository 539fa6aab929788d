#!/usr/bin/env python3
"""Compare greedy and random rewiring trajectories on a directory of
edge-list files and write a combined CSV.

Usage: greedy_vs_random_curves.py INPUT_DIR K [SEED] [OUTPUT.csv]
"""

import sys
from pathlib import Path

from reswire import from_edge_list, gtr, random_baseline


def mean_curve(trajectories, k):
    rows = []
    for i in range(k + 1):
        vals = [t[min(i, len(t) - 1)] for t in trajectories]
        rows.append(sum(vals) / len(vals))
    return rows


def main(argv):
    if len(argv) < 3:
        print(__doc__)
        return 2
    input_dir, k = Path(argv[1]), int(argv[2])
    seed = int(argv[3]) if len(argv) > 3 else 0
    out = Path(argv[4]) if len(argv) > 4 else None
    greedy, rand = [], []
    for path in sorted(input_dir.glob("*.el")):
        g = from_edge_list(path.read_text())
        greedy.append(gtr(g, k).rtot_trajectory)
        rand.append(random_baseline(g, k, seed).rtot_trajectory)
    if not greedy:
        print(f"no .el files in {input_dir}", file=sys.stderr)
        return 2
    gm, rm = mean_curve(greedy, k), mean_curve(rand, k)
    lines = ["edges_added,mean_rtot_gtr,mean_rtot_random"]
    for i in range(k + 1):
        lines.append(f"{i},{gm[i]:.17g},{rm[i]:.17g}")
    text = "\n".join(lines) + "\n"
    if out:
        out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))

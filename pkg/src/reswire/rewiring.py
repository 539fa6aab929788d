"""Greedy total-resistance rewiring, baselines, and exhaustive oracles."""

from __future__ import annotations

import itertools
import math
import random
import warnings
from dataclasses import dataclass

from . import graph as gr
from . import spectral as sp
from .errors import InfeasibleSearchError
from .state import ResistanceState

BRUTE_FORCE_CAP = 10**6


@dataclass
class AddedEdge:
    u: int
    v: int
    r_before: float
    bsq_before: float
    delta: float


@dataclass
class RewirePlan:
    method: str
    k: int
    added: list[AddedEdge]
    rtot_trajectory: list[float]
    seed: int | None = None
    truncated: bool = False

    @property
    def rtot_initial(self) -> float:
        return self.rtot_trajectory[0]

    @property
    def rtot_final(self) -> float:
        return self.rtot_trajectory[-1]

    def edge_list(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.added]


def same_component_non_edges(g: gr.Graph) -> list[tuple[int, int]]:
    existing = g.edge_set()
    out = []
    for verts in gr.components(g):
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if (int(u), int(v)) not in existing:
                    out.append((int(u), int(v)))
    out.sort()
    return out


def gtr(g: gr.Graph, k: int) -> RewirePlan:
    """Greedily add k edges, each maximizing B^2/(1+R) over all
    same-component non-edges. Ties break lexicographically by (u, v)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    state = ResistanceState(g)
    added: list[AddedEdge] = []
    trajectory = [state.rtot]
    truncated = False
    for _ in range(k):
        cand = state.best_candidate()
        if cand is None:
            warnings.warn(
                f"all components complete after {len(added)} of {k} edges; "
                "plan truncated", stacklevel=2
            )
            truncated = True
            break
        u, v, r, bsq, delta = cand
        state.apply_edge(u, v)
        added.append(AddedEdge(u, v, r, bsq, delta))
        trajectory.append(state.rtot)
    return RewirePlan(method="gtr", k=k, added=added,
                      rtot_trajectory=trajectory, truncated=truncated)


def random_baseline(g: gr.Graph, k: int, seed: int) -> RewirePlan:
    """Add k uniformly random same-component non-edges, sequentially
    without replacement, scoring through the same state machinery."""
    if k < 0:
        raise ValueError("k must be non-negative")
    rng = random.Random(seed)
    state = ResistanceState(g)
    added: list[AddedEdge] = []
    trajectory = [state.rtot]
    truncated = False
    candidates = same_component_non_edges(g)
    for _ in range(k):
        if not candidates:
            warnings.warn(
                f"no candidates left after {len(added)} of {k} edges; "
                "plan truncated", stacklevel=2
            )
            truncated = True
            break
        u, v = candidates.pop(rng.randrange(len(candidates)))
        r, bsq, delta = state.pair_scores(u, v)
        state.apply_edge(u, v)
        added.append(AddedEdge(u, v, r, bsq, delta))
        trajectory.append(state.rtot)
    return RewirePlan(method="random", k=k, added=added,
                      rtot_trajectory=trajectory, seed=seed,
                      truncated=truncated)


def rewire(g: gr.Graph, k: int, method: str = "gtr", seed: int = 0) -> RewirePlan:
    if method == "gtr":
        return gtr(g, k)
    if method == "random":
        return random_baseline(g, k, seed)
    raise ValueError(f"unknown method {method!r}")


def brute_force_optimal(g: gr.Graph, k: int, cap: int = BRUTE_FORCE_CAP):
    """Exhaustive search for the k same-component non-edges minimizing the
    total resistance of the augmented graph. Returns (edge tuple, rtot).

    Ties break by lexicographic edge-set order (the first minimizer found
    when iterating sorted combinations)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    candidates = same_component_non_edges(g)
    if k > len(candidates):
        raise InfeasibleSearchError(
            f"k={k} exceeds the {len(candidates)} available non-edges"
        )
    n_combos = math.comb(len(candidates), k)
    if n_combos > cap:
        raise InfeasibleSearchError(
            f"{n_combos} candidate sets exceed the cap of {cap}"
        )
    best_edges: tuple = ()
    best_rtot = math.inf
    for combo in itertools.combinations(candidates, k):
        rtot = sp.total_resistance(g.with_edges(combo))
        if rtot < best_rtot:
            best_rtot = rtot
            best_edges = combo
    if k == 0:
        best_rtot = sp.total_resistance(g)
    return best_edges, best_rtot


def delta_table(g: gr.Graph) -> dict[tuple[int, int], float]:
    """Exact total-resistance decrease for every same-component non-edge."""
    state = ResistanceState(g)
    return {(u, v): d for u, v, _, _, d in state.all_pair_scores()}


def nonmonotonicity_witness(g: gr.Graph, margin: float = 1e-9):
    """First (e, f) pair, scanning f then e lexicographically, where the
    decrease from adding e strictly grows after f is added. None if the
    exhaustive scan finds no witness."""
    base = delta_table(g)
    for f in sorted(base):
        after = delta_table(g.with_edges([f]))
        for e in sorted(after):
            if e == f or e not in base:
                continue
            if after[e] > base[e] + margin:
                return e, f
    return None

"""Mutable per-component cache of M = (L + 11^T/n)^{-1} and N = M^2.

Supports O(n^2) pair-score scans and O(n^2) edge insertions via rank-1
(for M) and rank-2 (for N) updates. With x = 1_u - 1_v, w = Mx,
R = x^T M x, c = 1/(1 + R):

    M' = M - c w w^T
    N' = M'^2 = N - c (w (Mw)^T + (Mw) w^T) + c^2 (w^T w) w w^T

All products use the pre-update M; w and Mw are computed once per insertion.
"""

from __future__ import annotations

import numpy as np

from . import graph as gr
from . import spectral as sp
from .errors import CrossComponentError


class _Component:
    __slots__ = ("verts", "pos", "m", "n2", "edges_local")

    def __init__(self, verts: np.ndarray, m: np.ndarray):
        self.verts = verts
        self.pos = {int(v): i for i, v in enumerate(verts)}
        self.m = m
        self.n2 = m @ m
        self.edges_local: set[tuple[int, int]] = set()

    @property
    def size(self) -> int:
        return len(self.verts)

    def rtot(self) -> float:
        return self.size * float(np.trace(self.m)) - self.size


class ResistanceState:
    """Single-writer cache; pair_scores/all_pair_scores are read-only."""

    def __init__(self, g: gr.Graph, refresh_every: int = 0):
        self.original = g
        self.comps = [
            _Component(verts, m) for verts, m in sp.component_inverses(g)
        ]
        self._comp_of = list(g.component_id)
        for u, v in g.edges:
            c = self.comps[g.component_id[u]]
            c.edges_local.add((c.pos[u], c.pos[v]))
        self.rtot = sum(c.rtot() for c in self.comps)
        self.added_edges: list[tuple[int, int]] = []
        self.refresh_every = refresh_every
        self._insertions = 0

    def current_graph(self) -> gr.Graph:
        return self.original.with_edges(self.added_edges)

    def _locate(self, u: int, v: int):
        if u == v:
            raise ValueError(f"pair requires distinct vertices, got ({u}, {v})")
        if self._comp_of[u] != self._comp_of[v]:
            raise CrossComponentError(
                f"vertices {u} and {v} lie in different components"
            )
        c = self.comps[self._comp_of[u]]
        lu, lv = c.pos[u], c.pos[v]
        if (min(lu, lv), max(lu, lv)) in c.edges_local:
            raise ValueError(f"edge ({u}, {v}) already present")
        return c, lu, lv

    def pair_scores(self, u: int, v: int) -> tuple[float, float, float]:
        """(R, B^2, delta) for a same-component non-edge.

        delta = n_c * B^2 / (1 + R) is the exact total-resistance decrease
        from adding {u, v}.
        """
        c, lu, lv = self._locate(u, v)
        r = float(c.m[lu, lu] + c.m[lv, lv] - 2.0 * c.m[lu, lv])
        bsq = float(c.n2[lu, lu] + c.n2[lv, lv] - 2.0 * c.n2[lu, lv])
        return r, bsq, c.size * bsq / (1.0 + r)

    def apply_edge(self, u: int, v: int) -> None:
        c, lu, lv = self._locate(u, v)
        x = np.zeros(c.size)
        x[lu] = 1.0
        x[lv] = -1.0
        w = c.m @ x
        r = float(x @ w)
        bsq = float(w @ w)
        cc = 1.0 / (1.0 + r)
        mw = c.m @ w
        c.m -= cc * np.outer(w, w)
        c.n2 -= cc * (np.outer(w, mw) + np.outer(mw, w))
        c.n2 += (cc * cc * bsq) * np.outer(w, w)
        c.edges_local.add((min(lu, lv), max(lu, lv)))
        delta = c.size * bsq * cc
        self.rtot -= delta
        self.added_edges.append((min(u, v), max(u, v)))
        self._insertions += 1
        if self.refresh_every and self._insertions % self.refresh_every == 0:
            self.refresh()

    def refresh(self) -> None:
        """Recompute M and N from scratch to shed floating-point drift."""
        g = self.current_graph()
        lap = gr.laplacian(g)
        for c in self.comps:
            sub = lap[np.ix_(c.verts, c.verts)]
            c.m = sp.regularized_inverse_dense(sub)
            c.n2 = c.m @ c.m
        self.rtot = sum(c.rtot() for c in self.comps)

    def component_score_tables(self):
        """Per component: (verts, R, Bsq, delta, candidate mask) dense tables."""
        out = []
        for c in self.comps:
            dm = np.diag(c.m)
            dn = np.diag(c.n2)
            r = dm[:, None] + dm[None, :] - 2.0 * c.m
            bsq = dn[:, None] + dn[None, :] - 2.0 * c.n2
            delta = c.size * bsq / (1.0 + r)
            mask = np.triu(np.ones((c.size, c.size), dtype=bool), k=1)
            for a, b in c.edges_local:
                mask[a, b] = False
            out.append((c.verts, r, bsq, delta, mask))
        return out

    def all_pair_scores(self):
        """One row (u, v, R, Bsq, delta) per same-component non-edge,
        sorted lexicographically by (u, v)."""
        rows = []
        for verts, r, bsq, delta, mask in self.component_score_tables():
            for a, b in zip(*np.nonzero(mask)):
                u, v = int(verts[a]), int(verts[b])
                lo, hi = min(u, v), max(u, v)
                rows.append((lo, hi, float(r[a, b]), float(bsq[a, b]),
                             float(delta[a, b])))
        rows.sort(key=lambda t: (t[0], t[1]))
        return rows

    def best_candidate(self):
        """(u, v, R, Bsq, delta) maximizing delta; ties broken by (u, v).

        Returns None when every component is complete.
        """
        best = None
        for verts, r, bsq, delta, mask in self.component_score_tables():
            if not mask.any():
                continue
            vals = np.where(mask, delta, -np.inf)
            top = float(vals.max())
            idxs = np.argwhere(vals == top)
            # edge with smallest global (u, v) among exact ties
            cand = min(
                (min(int(verts[a]), int(verts[b])),
                 max(int(verts[a]), int(verts[b])), a, b)
                for a, b in idxs
            )
            u, v, a, b = cand
            entry = (u, v, float(r[a, b]), float(bsq[a, b]), top)
            if best is None or top > best[4] or (top == best[4] and (u, v) < best[:2]):
                best = entry
        return best

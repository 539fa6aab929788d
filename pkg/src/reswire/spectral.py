"""Eigendecompositions, pseudoinverses, and resistance quantities.

Everything here is batch (from scratch). The closed forms follow the
regularized-inverse identities: with M = (L + 11^T/n)^{-1} on a connected
component,

    R_{u,v}   = M_uu + M_vv - 2 M_uv
    B^2_{u,v} = ||M (1_u - 1_v)||^2
    R_tot     = n * tr(M) - n

Eigendecomposition is used only for Spectrum, oracles, and sigma/mu
quantities, never on the rewiring hot path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graph as gr
from .errors import (
    BipartiteGraphError,
    CrossComponentError,
    DisconnectedGraphError,
    IllConditionedError,
)

RCOND_LIMIT = 1e-12
SERIES_MAX_TERMS = 10**5


@dataclass
class Spectrum:
    """Eigenvalues of L (sigma, ascending), of the normalized Laplacian
    (lam, ascending), of the normalized adjacency (mu, descending), and the
    shared orthonormal eigenvector basis z of the normalized matrices."""

    sigma: np.ndarray
    lam: np.ndarray
    mu: np.ndarray
    z: np.ndarray


def spectrum(g: gr.Graph) -> Spectrum:
    sigma = np.linalg.eigvalsh(gr.laplacian(g))
    lhat = gr.normalized_laplacian(g)
    lam, z = np.linalg.eigh(lhat)
    return Spectrum(sigma=sigma, lam=lam, mu=1.0 - lam, z=z)


def pseudo_inverse(mat: np.ndarray) -> np.ndarray:
    """Moore-Penrose pseudoinverse via symmetric eigendecomposition."""
    w, v = np.linalg.eigh(mat)
    cutoff = 1e-10 * max(1.0, float(np.max(np.abs(w))) if w.size else 1.0)
    inv = np.where(np.abs(w) > cutoff, 1.0 / np.where(w == 0, 1.0, w), 0.0)
    out = (v * inv) @ v.T
    return (out + out.T) / 2.0


def regularized_inverse_dense(lap: np.ndarray) -> np.ndarray:
    """M = (L + 11^T/n)^{-1} for the Laplacian of one connected component."""
    n = lap.shape[0]
    a = lap + np.ones((n, n)) / n
    w = np.linalg.eigvalsh(a)
    if w[0] <= 0 or w[0] / w[-1] < RCOND_LIMIT:
        raise IllConditionedError(
            f"reciprocal condition estimate {w[0] / w[-1]:.3e} below {RCOND_LIMIT:.0e}"
        )
    m = np.linalg.solve(a, np.eye(n))
    return (m + m.T) / 2.0


def component_inverses(g: gr.Graph):
    """Per-component (vertex array, M) pairs, ordered by component label."""
    lap = gr.laplacian(g)
    out = []
    for verts in gr.components(g):
        out.append((verts, regularized_inverse_dense(lap[np.ix_(verts, verts)])))
    return out


def regularized_inverse(g: gr.Graph) -> np.ndarray:
    """M for a connected graph."""
    if g.num_components != 1:
        raise DisconnectedGraphError("regularized_inverse requires a connected graph")
    return regularized_inverse_dense(gr.laplacian(g))


def _component_pair(g: gr.Graph, u: int, v: int):
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range: ({u}, {v}) for n={g.n}")
    if g.component_id[u] != g.component_id[v]:
        raise CrossComponentError(
            f"vertices {u} and {v} lie in different components; "
            "resistance is not defined across components"
        )
    verts = np.flatnonzero(
        np.array(g.component_id) == g.component_id[u]
    )
    pos = {int(x): i for i, x in enumerate(verts)}
    return verts, pos[u], pos[v]


def effective_resistance(g: gr.Graph, u: int, v: int) -> float:
    if u == v:
        _component_pair(g, u, v)
        return 0.0
    verts, lu, lv = _component_pair(g, u, v)
    m = regularized_inverse_dense(gr.laplacian(g)[np.ix_(verts, verts)])
    return float(m[lu, lu] + m[lv, lv] - 2.0 * m[lu, lv])


def effective_resistance_normalized(g: gr.Graph, u: int, v: int) -> float:
    """Resistance via the normalized-Laplacian pseudoinverse route."""
    if u == v:
        _component_pair(g, u, v)
        return 0.0
    verts, lu, lv = _component_pair(g, u, v)
    sub = _subgraph(g, verts)
    lhat_pinv = pseudo_inverse(gr.normalized_laplacian(sub))
    d = gr.degrees(sub).astype(float)
    x = np.zeros(len(verts))
    x[lu] = 1.0 / np.sqrt(d[lu])
    x[lv] -= 1.0 / np.sqrt(d[lv])
    return float(x @ lhat_pinv @ x)


def effective_resistance_flow(g: gr.Graph, u: int, v: int) -> float:
    """Resistance as the minimum squared 2-norm of a unit u->v flow."""
    if u == v:
        _component_pair(g, u, v)
        return 0.0
    verts, lu, lv = _component_pair(g, u, v)
    sub = _subgraph(g, verts)
    b = gr.boundary_matrix(sub)
    rhs = np.zeros(len(verts))
    rhs[lu] = 1.0
    rhs[lv] = -1.0
    f, *_ = np.linalg.lstsq(b, rhs, rcond=None)
    return float(f @ f)


def _subgraph(g: gr.Graph, verts: np.ndarray) -> gr.Graph:
    pos = {int(x): i for i, x in enumerate(verts)}
    sub_edges = [
        (pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos
    ]
    return gr.build_graph(len(verts), sub_edges)


def biharmonic_distance_sq(g: gr.Graph, u: int, v: int) -> float:
    if u == v:
        _component_pair(g, u, v)
        return 0.0
    verts, lu, lv = _component_pair(g, u, v)
    m = regularized_inverse_dense(gr.laplacian(g)[np.ix_(verts, verts)])
    w = m[:, lu] - m[:, lv]
    return float(w @ w)


def total_resistance(g: gr.Graph) -> float:
    """Sum of pairwise resistances within each component."""
    total = 0.0
    for verts, m in component_inverses(g):
        nc = len(verts)
        total += nc * float(np.trace(m)) - nc
    return total


def resistance_series_truncated(g: gr.Graph, u: int, v: int, tol: float) -> float:
    """Resistance via the normalized-adjacency power series with a spectral
    tail-bound stopping rule. Requires the component to be non-bipartite."""
    if u == v:
        raise ValueError("series form requires u != v")
    verts, lu, lv = _component_pair(g, u, v)
    sub = _subgraph(g, verts)
    if gr.is_bipartite(sub)[0]:
        raise BipartiteGraphError(
            "power series diverges on bipartite components (mu_n = -1)"
        )
    ahat = gr.normalized_adjacency(sub)
    mu = mu_bound(sub)
    if mu >= 1.0:
        raise BipartiteGraphError(f"spectral bound mu={mu} >= 1; series diverges")
    d = gr.degrees(sub).astype(float)
    du, dv = d[lu], d[lv]
    d_min = min(du, dv)
    # term_i = (A^i)_uu/du + (A^i)_vv/dv - 2 (A^i)_uv / sqrt(du dv)
    xu = np.zeros(len(verts))
    xu[lu] = 1.0
    xv = np.zeros(len(verts))
    xv[lv] = 1.0
    total = 0.0
    for i in range(SERIES_MAX_TERMS):
        total += xu[lu] / du + xv[lv] / dv - 2.0 * xv[lu] / np.sqrt(du * dv)
        tail = 2.0 * mu ** (i + 1) / (d_min * (1.0 - mu))
        if tail < tol:
            return total
        xu = ahat @ xu
        xv = ahat @ xv
    raise ArithmeticError(
        f"series did not reach tolerance {tol} within {SERIES_MAX_TERMS} terms"
    )


def spectral_gap(g: gr.Graph) -> float:
    if g.num_components != 1:
        raise DisconnectedGraphError("spectral gap requires a connected graph")
    sigma = np.linalg.eigvalsh(gr.laplacian(g))
    return float(sigma[1])


def mu_bound(g: gr.Graph) -> float:
    """max(|mu_2|, |mu_n|) for the normalized adjacency."""
    ahat = gr.normalized_adjacency(g)
    mu = np.sort(np.linalg.eigvalsh(ahat))[::-1]
    if len(mu) < 2:
        return 0.0
    return float(max(abs(mu[1]), abs(mu[-1])))


def resistance_matrix(g: gr.Graph) -> np.ndarray:
    """All-pairs resistance for a connected graph."""
    if g.num_components != 1:
        raise DisconnectedGraphError("resistance matrix requires a connected graph")
    m = regularized_inverse_dense(gr.laplacian(g))
    d = np.diag(m)
    return d[:, None] + d[None, :] - 2.0 * m


def rmax(g: gr.Graph) -> float:
    return float(np.max(resistance_matrix(g)))


def format_sig(x: float) -> str:
    return format(x, ".17g")


def spectrum_csv(s: Spectrum) -> str:
    lines = ["index,sigma,lambda,mu"]
    k = max(len(s.sigma), len(s.lam))
    for i in range(k):
        sig = format_sig(float(s.sigma[i])) if i < len(s.sigma) else ""
        lam = format_sig(float(s.lam[i])) if i < len(s.lam) else ""
        mu = format_sig(float(s.mu[i])) if i < len(s.mu) else ""
        lines.append(f"{i},{sig},{lam},{mu}")
    return "\n".join(lines) + "\n"


def matrix_csv(mat: np.ndarray) -> str:
    return "\n".join(
        ",".join(format_sig(float(x)) for x in row) for row in np.atleast_2d(mat)
    ) + "\n"

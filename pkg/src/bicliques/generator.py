"""Seeded synthetic near-bipartite graph generator.

Builds a random bipartite core L-R from a degree distribution on R,
attaches an OCT set O by the same process against L ∪ R, and fills the
inside of O with an Erdős-Rényi process. The draw order is fixed (R
degrees ascending, R neighbor picks, O degrees, O neighbor picks, O-O
coin flips by ascending pair) so a seed pins the edge set exactly,
independent of platform.
"""

from __future__ import annotations

import math
import random
import statistics
from dataclasses import dataclass

from .decomposition import OctDecomposition
from .graph import Graph


@dataclass(frozen=True)
class GeneratorParams:
    """Sizes, densities, degree-spread (cv), and PRNG seed.

    Densities are expected edge fractions in [0, 1]; cv is the standard
    deviation of the degree distribution divided by its mean. Convention:
    n_l >= n_r.
    """

    n_l: int
    n_r: int
    n_o: int
    d_lr: float
    d_cross: float
    d_o: float
    cv_lr: float
    cv_cross: float
    seed: int

    def validate(self) -> None:
        if min(self.n_l, self.n_r, self.n_o) < 0:
            raise ValueError("part sizes must be nonnegative")
        if self.n_l < self.n_r:
            raise ValueError(f"convention requires n_l >= n_r, got {self.n_l} < {self.n_r}")
        for name in ("d_lr", "d_cross", "d_o"):
            val = getattr(self, name)
            if not 0.0 <= val <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {val}")
        for name in ("cv_lr", "cv_cross"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class RealizedStats:
    """Densities and degree cv values actually realized in a graph."""

    d_lr: float
    d_cross: float
    d_o: float
    cv_lr: float
    cv_cross: float


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def _draw_degree(rng: random.Random, mean: float, cv: float, cap: int) -> int:
    deg = _round_half_up(rng.gauss(mean, cv * mean))
    return min(max(deg, 0), cap)


def _pick_neighbors(rng: random.Random, pool_size: int, k: int) -> list[int]:
    """k distinct ids from 0..pool_size-1 via partial Fisher-Yates shuffle."""
    pool = list(range(pool_size))
    for i in range(k):
        j = rng.randrange(i, pool_size)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


def generate(p: GeneratorParams) -> tuple[Graph, OctDecomposition]:
    """Generate a graph and its naive [L, R, O] decomposition.

    Vertices 0..n_l-1 are L, the next n_r are R, the last n_o are O.
    Deterministic for a fixed seed.
    """
    p.validate()
    rng = random.Random(p.seed)
    n_lr = p.n_l + p.n_r
    n = n_lr + p.n_o
    edges: list[tuple[int, int]] = []

    r_degrees = [
        _draw_degree(rng, p.d_lr * p.n_l, p.cv_lr, p.n_l) for _ in range(p.n_r)
    ]
    for i in range(p.n_r):
        r = p.n_l + i
        for l in _pick_neighbors(rng, p.n_l, r_degrees[i]):
            edges.append((l, r))

    o_degrees = [
        _draw_degree(rng, p.d_cross * n_lr, p.cv_cross, n_lr) for _ in range(p.n_o)
    ]
    for i in range(p.n_o):
        o = n_lr + i
        for w in _pick_neighbors(rng, n_lr, o_degrees[i]):
            edges.append((w, o))

    for i in range(p.n_o):
        for j in range(i + 1, p.n_o):
            if rng.random() < p.d_o:
                edges.append((n_lr + i, n_lr + j))

    g = Graph.from_edges(n, edges)
    d = OctDecomposition.from_sets(
        n,
        range(p.n_l),
        range(p.n_l, n_lr),
        range(n_lr, n),
    )
    return g, d


def _cv(values: list[int]) -> float:
    if not values:
        return 0.0
    mean = statistics.fmean(values)
    if mean == 0.0:
        return 0.0
    return statistics.pstdev(values) / mean


def realized_stats(g: Graph, d: OctDecomposition) -> RealizedStats:
    """Measure the densities and degree cv values of a decomposed graph."""
    lm, rm, om = d.masks()
    lr = lm | rm
    m_lr = m_cross = m_o = 0
    for u, v in g.edges():
        bu, bv = 1 << u, 1 << v
        if (bu | bv) & om == 0:
            m_lr += 1
        elif bu & om and bv & om:
            m_o += 1
        else:
            m_cross += 1
    pairs_lr = d.n_l * d.n_r
    pairs_cross = d.n_o * (d.n_l + d.n_r)
    pairs_o = d.n_o * (d.n_o - 1) // 2
    r_degs = [(g.neighbor_masks[v] & lm).bit_count() for v in d.right]
    o_degs = [(g.neighbor_masks[v] & lr).bit_count() for v in d.oct_set]
    return RealizedStats(
        d_lr=m_lr / pairs_lr if pairs_lr else 0.0,
        d_cross=m_cross / pairs_cross if pairs_cross else 0.0,
        d_o=m_o / pairs_o if pairs_o else 0.0,
        cv_lr=_cv(r_degs),
        cv_cross=_cv(o_degs),
    )

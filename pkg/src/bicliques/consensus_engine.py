"""Maximal (non-induced) biclique enumeration by consensus.

Both variants run the same closure loop: combine every seed biclique
with every known maximal biclique through the four side union/
intersection candidates, re-maximalize, and keep anything new until a
full sweep adds nothing. The baseline seeds a maximalized star per
vertex; the OCT variant seeds only the stars of O and takes the rest
from the bipartite enumerator, which is what cuts the seed factor from
n to n_O.
"""

from __future__ import annotations

import time

from .biclique import Biclique, BicliqueStore, EnumerationResult
from .bipartite import bipartite_solve
from .bitset import canonical_pair
from .decomposition import OctDecomposition, validate_oct
from .graph import Graph
from .kernels import consensus_mask_pairs, make_maximal_masks


def _consensus_closure(
    g: Graph,
    seeds: list[tuple[int, int]],
    initial: list[tuple[int, int]],
    deadline: float | None,
) -> tuple[list[tuple[int, int]], bool]:
    """Sweep seeds × known set until stable; returns (found, timed_out).

    Each sweep iterates a snapshot of the known set, so bicliques
    discovered mid-sweep are combined in later sweeps. Membership uses
    canonically ordered mask pairs.
    """
    seen: set[tuple[int, int]] = set()
    work: list[tuple[int, int]] = []
    for pair in initial:
        key = canonical_pair(*pair)
        if key not in seen:
            seen.add(key)
            work.append(key)
    found = True
    ticks = 0
    while found:
        found = False
        snapshot = list(work)
        for b1x, b1y in seeds:
            for b2x, b2y in snapshot:
                ticks += 1
                if (
                    deadline is not None
                    and not ticks & 0xFF
                    and time.perf_counter() > deadline
                ):
                    return work, True
                for cx, cy in consensus_mask_pairs(b1x, b1y, b2x, b2y):
                    mm = make_maximal_masks(g, cx, cy)
                    key = canonical_pair(*mm)
                    if key not in seen:
                        seen.add(key)
                        work.append(key)
                        found = True
    return work, False


def _result(
    name: str, g: Graph, start: float, pairs, timed_out: bool, count_only: bool
) -> EnumerationResult:
    store = BicliqueStore(count_only=count_only)
    for key in pairs:
        store.add(Biclique.from_masks(*key))
    return EnumerationResult(
        algorithm=name,
        bicliques=store,
        count=len(store),
        wall_time=time.perf_counter() - start,
        timed_out=timed_out,
    )


def _star_seeds(g: Graph, vertices) -> list[tuple[int, int]]:
    """Maximalized star {v} × N(v) for each non-isolated v, deduplicated."""
    seen: set[tuple[int, int]] = set()
    out: list[tuple[int, int]] = []
    for v in vertices:
        if not g.adjacency[v]:
            continue
        pair = make_maximal_masks(g, 1 << v, g.neighbor_masks[v])
        key = canonical_pair(*pair)
        if key not in seen:
            seen.add(key)
            out.append(pair)
    return out


def mica(
    g: Graph, timeout: float | None = None, count_only: bool = False
) -> EnumerationResult:
    """All maximal bicliques of g; seeds are the stars of every vertex."""
    start = time.perf_counter()
    deadline = None if timeout is None else start + timeout
    seeds = _star_seeds(g, range(g.n))
    pairs, timed_out = _consensus_closure(g, seeds, seeds, deadline)
    return _result("mica", g, start, pairs, timed_out, count_only)


def oct_mica(
    g: Graph,
    d: OctDecomposition,
    timeout: float | None = None,
    count_only: bool = False,
) -> EnumerationResult:
    """All maximal bicliques of g, parameterized by an OCT decomposition.

    The bipartite part is enumerated directly and maximalized with
    respect to the whole graph; only the O stars join the seed set.
    """
    ok, violations = validate_oct(g, d)
    if not ok:
        raise ValueError(f"invalid OCT decomposition; offending edges {violations[:3]}")
    start = time.perf_counter()
    deadline = None if timeout is None else start + timeout
    initial: list[tuple[int, int]] = [
        make_maximal_masks(g, *b.masks()) for b in bipartite_solve(g, (d.left, d.right))
    ]
    seeds = _star_seeds(g, d.oct_set)
    initial.extend(seeds)
    pairs, timed_out = _consensus_closure(g, seeds, initial, deadline)
    return _result("oct-mica", g, start, pairs, timed_out, count_only)

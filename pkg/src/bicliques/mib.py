"""Maximal induced biclique enumeration.

A single queue-driven framework does the work: pop a known MIB, try to
add each vertex of the iteration set to either side, re-extend to a MIB,
and keep anything unseen. Exactness only needs the seed set to satisfy
the coverage condition (for every MIB, some seed contains its part
outside the iteration set and shares a vertex with it); the two seed
constructions below instantiate the whole-graph and the OCT-parameterized
algorithms.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from collections import deque

from .biclique import Biclique, BicliqueStore, EnumerationResult
from .bipartite import bipartite_solve
from .bitset import bits, canonical_pair, mask_of
from .decomposition import OctDecomposition, validate_oct
from .graph import Graph, induced_subgraph
from .kernels import add_to_masks, make_ind_maximal_masks


class SeedTimeout(Exception):
    """Raised internally when seed construction exceeds the deadline."""


@dataclass
class SeedConfig:
    """Iteration set and seed MIBs for the framework loop."""

    iteration_set: tuple[int, ...]
    seeds: list[Biclique] = field(default_factory=list)


def enumerate_mis(g: Graph) -> list[tuple[int, ...]]:
    """All maximal independent sets, sorted; meant for small graphs.

    Bron-Kerbosch with pivoting on the complement adjacency.
    """
    full = g.full_mask
    comp = [full & ~g.neighbor_masks[v] & ~(1 << v) for v in range(g.n)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            if r:
                found.append(r)
            return
        pivot, best = -1, -1
        m = p | x
        while m:
            b = m & -m
            m ^= b
            c = (p & comp[b.bit_length() - 1]).bit_count()
            if c > best:
                best, pivot = c, b.bit_length() - 1
        cand = p & ~comp[pivot]
        while cand:
            b = cand & -cand
            cand ^= b
            cv = comp[b.bit_length() - 1]
            expand(r | b, p & cv, x & cv)
            p ^= b
            x |= b

    if g.n:
        expand(0, full, 0)
    return sorted(tuple(bits(m)) for m in found)


def _dedup_seed(g: Graph, seen: set, seeds: list, c1: int, c2: int) -> None:
    """Extend (c1, c2) to a MIB over all of V and record it once."""
    res = make_ind_maximal_masks(g, c1, c2, g.full_mask)
    # with S = V the outside scan is empty, so extension never fails
    key = canonical_pair(*res)
    if key not in seen:
        seen.add(key)
        seeds.append(Biclique.from_masks(*key))


def seed_enum_mib(g: Graph) -> SeedConfig:
    """Whole-graph instantiation: iterate over V, seed from every vertex.

    Each non-isolated vertex v is paired with its smallest neighbor and
    extended to a MIB; every MIB intersects the seed of any of its own
    vertices, which is all the coverage condition asks for when the
    iteration set is V.
    """
    seen: set = set()
    seeds: list[Biclique] = []
    for v in range(g.n):
        if g.adjacency[v]:
            _dedup_seed(g, seen, seeds, 1 << v, 1 << g.adjacency[v][0])
    return SeedConfig(iteration_set=tuple(range(g.n)), seeds=seeds)


def seed_oct_mib2(
    g: Graph, d: OctDecomposition, deadline: float | None = None
) -> SeedConfig:
    """OCT instantiation: iterate over O only.

    Three families, each extended to MIBs of G and deduplicated:
    bipartite maximal bicliques of G[L ∪ R]; for each v in O, every
    maximal independent set of G[N(v) ∩ (L ∪ R)] paired with v; and a
    star seed per non-isolated O vertex (covers MIBs lying entirely
    inside O).
    """
    ok, violations = validate_oct(g, d)
    if not ok:
        raise ValueError(f"invalid OCT decomposition; offending edges {violations[:3]}")
    lm, rm, _ = d.masks()
    seen: set = set()
    seeds: list[Biclique] = []
    for b in bipartite_solve(g, (d.left, d.right)):
        if deadline is not None and time.perf_counter() > deadline:
            raise SeedTimeout
        _dedup_seed(g, seen, seeds, *b.masks())
    for v in d.oct_set:
        hood = g.neighbor_masks[v] & (lm | rm)
        if not hood:
            continue
        sub, mapping = induced_subgraph(g, bits(hood))
        for mis in enumerate_mis(sub):
            if deadline is not None and time.perf_counter() > deadline:
                raise SeedTimeout
            _dedup_seed(g, seen, seeds, mask_of(mapping[i] for i in mis), 1 << v)
    for v in d.oct_set:
        if g.adjacency[v]:
            _dedup_seed(g, seen, seeds, 1 << v, 1 << g.adjacency[v][0])
    return SeedConfig(iteration_set=d.oct_set, seeds=seeds)


def run_framework(
    g: Graph,
    cfg: SeedConfig,
    timeout: float | None = None,
    count_only: bool = False,
    _started: float | None = None,
) -> EnumerationResult:
    """Queue loop: explore AddTo/MakeIndMaximal moves from every seed.

    Pops each discovered MIB once; for each iteration-set vertex j not in
    the biclique, tries j against both orientations. Unseen results join
    the store and the queue. Timeout is checked once per pop.
    """
    start = _started if _started is not None else time.perf_counter()
    deadline = None if timeout is None else start + timeout
    nbr = g.neighbor_masks
    is_mask = mask_of(cfg.iteration_set)
    seen: set[tuple[int, int]] = set()
    order: list[tuple[int, int]] = []
    queue: deque[tuple[int, int]] = deque()
    for b in cfg.seeds:
        key = canonical_pair(*b.masks())
        if key not in seen:
            seen.add(key)
            order.append(key)
            queue.append(key)
    timed_out = False
    while queue:
        if deadline is not None and time.perf_counter() > deadline:
            timed_out = True
            break
        x, y = queue.popleft()
        union = x | y
        reach = 0
        m = union
        while m:
            b = m & -m
            reach |= nbr[b.bit_length() - 1]
            m ^= b
        # vertices with no neighbor in the biclique can never survive AddTo
        for j in bits(is_mask & reach & ~union):
            for c1, c2 in ((x, y), (y, x)):
                added = add_to_masks(g, c1, c2, j)
                if added is None:
                    continue
                res = make_ind_maximal_masks(g, added[0], added[1], is_mask)
                if res is None:
                    continue
                key = canonical_pair(*res)
                if key not in seen:
                    seen.add(key)
                    order.append(key)
                    queue.append(key)
    store = BicliqueStore(count_only=count_only)
    for key in order:
        store.add(Biclique.from_masks(*key))
    return EnumerationResult(
        algorithm="framework",
        bicliques=store,
        count=len(store),
        wall_time=time.perf_counter() - start,
        timed_out=timed_out,
    )


def enum_mib(
    g: Graph, timeout: float | None = None, count_only: bool = False
) -> EnumerationResult:
    """Enumerate all MIBs of g with the whole-graph seeding."""
    start = time.perf_counter()
    cfg = seed_enum_mib(g)
    res = run_framework(g, cfg, timeout=timeout, count_only=count_only, _started=start)
    res.algorithm = "enum-mib"
    return res


def oct_mib2(
    g: Graph,
    d: OctDecomposition,
    timeout: float | None = None,
    count_only: bool = False,
) -> EnumerationResult:
    """Enumerate all MIBs of g, parameterized by an OCT decomposition."""
    start = time.perf_counter()
    deadline = None if timeout is None else start + timeout
    try:
        cfg = seed_oct_mib2(g, d, deadline=deadline)
    except SeedTimeout:
        return EnumerationResult(
            algorithm="oct-mib2",
            bicliques=BicliqueStore(count_only=count_only),
            count=0,
            wall_time=time.perf_counter() - start,
            timed_out=True,
        )
    res = run_framework(g, cfg, timeout=timeout, count_only=count_only, _started=start)
    res.algorithm = "oct-mib2"
    return res

"""Single dispatch point for every enumeration algorithm by name."""

from __future__ import annotations

import time

from .biclique import BicliqueStore, EnumerationResult
from .decomposition import OctDecomposition
from .graph import Graph
from .mib import enum_mib, oct_mib2
from .consensus_engine import mica, oct_mica
from .oracle import brute_mibs, brute_mbs

MIB_ALGORITHMS = ("enum-mib", "oct-mib2", "oracle-mib")
MB_ALGORITHMS = ("mica", "oct-mica", "oracle-mb")
ALGORITHMS = MIB_ALGORITHMS + MB_ALGORITHMS
NEEDS_OCT = ("oct-mib2", "oct-mica")


def _oracle_result(name: str, g: Graph, fn, count_only: bool) -> EnumerationResult:
    start = time.perf_counter()
    items = fn(g)
    store = BicliqueStore(count_only=count_only)
    for b in items:
        store.add(b)
    return EnumerationResult(
        algorithm=name,
        bicliques=store,
        count=len(store),
        wall_time=time.perf_counter() - start,
        timed_out=False,
    )


def run_algorithm(
    name: str,
    g: Graph,
    decomposition: OctDecomposition | None = None,
    timeout: float | None = None,
    count_only: bool = False,
) -> EnumerationResult:
    """Run one algorithm by name; oct-* variants require a decomposition."""
    if name not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    if name in NEEDS_OCT and decomposition is None:
        raise ValueError(f"algorithm {name!r} requires an OCT decomposition")
    if name == "enum-mib":
        return enum_mib(g, timeout=timeout, count_only=count_only)
    if name == "oct-mib2":
        return oct_mib2(g, decomposition, timeout=timeout, count_only=count_only)
    if name == "mica":
        return mica(g, timeout=timeout, count_only=count_only)
    if name == "oct-mica":
        return oct_mica(g, decomposition, timeout=timeout, count_only=count_only)
    if name == "oracle-mib":
        return _oracle_result(name, g, brute_mibs, count_only)
    return _oracle_result(name, g, brute_mbs, count_only)

"""Maximal biclique mining in near-bipartite graphs.

Enumerates maximal induced bicliques (enum-mib, oct-mib2) and maximal
non-induced bicliques (mica, oct-mica), parameterized by an odd cycle
transversal decomposition, with a seeded instance generator, brute-force
oracles, a benchmark harness, an HTTP service, and a CLI.
"""

__version__ = "0.1.0"

from .biclique import Biclique, BicliqueStore, EnumerationResult
from .bipartite import bipartite_solve
from .decomposition import (
    OctDecomposition,
    greedy_oct,
    min_oct_exhaustive,
    parse_decomposition,
    serialize_decomposition,
    validate_oct,
)
from .generator import GeneratorParams, RealizedStats, generate, realized_stats
from .graph import Graph, GraphFormatError, induced_subgraph, load_graph, serialize_graph
from .kernels import add_to, consensus, make_ind_maximal, make_maximal
from .mib import SeedConfig, enum_mib, enumerate_mis, oct_mib2, run_framework, seed_enum_mib, seed_oct_mib2
from .consensus_engine import mica, oct_mica
from .oracle import brute_mbs, brute_mibs

__all__ = [
    "Biclique",
    "BicliqueStore",
    "EnumerationResult",
    "Graph",
    "GraphFormatError",
    "GeneratorParams",
    "OctDecomposition",
    "RealizedStats",
    "SeedConfig",
    "add_to",
    "bipartite_solve",
    "brute_mbs",
    "brute_mibs",
    "consensus",
    "enum_mib",
    "enumerate_mis",
    "generate",
    "greedy_oct",
    "induced_subgraph",
    "load_graph",
    "make_ind_maximal",
    "make_maximal",
    "mica",
    "min_oct_exhaustive",
    "oct_mib2",
    "oct_mica",
    "parse_decomposition",
    "realized_stats",
    "run_framework",
    "seed_enum_mib",
    "seed_oct_mib2",
    "serialize_decomposition",
    "serialize_graph",
    "validate_oct",
]

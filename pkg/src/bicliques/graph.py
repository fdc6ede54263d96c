"""Undirected simple graphs with dual adjacency representations.

Vertices are always relabeled to ``0..n-1``. Each graph carries three views
of the same edge set: sorted neighbor tuples (fast ordered iteration and
merges), frozensets (constant-time membership), and per-vertex bitmasks
(fast set algebra in the enumeration kernels).
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input or an invalid edge set."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Safe for shared read-only access from concurrent workers.
    """

    n: int
    m: int
    adjacency: tuple[tuple[int, ...], ...]
    neighbor_sets: tuple[frozenset[int], ...]
    neighbor_masks: tuple[int, ...]
    label_map: tuple[int, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        label_map: Sequence[int] | None = None,
    ) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates, and bad ids."""
        if n < 0:
            raise GraphFormatError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        adjacency = tuple(tuple(sorted(s)) for s in adj)
        masks = tuple(_mask(s) for s in adj)
        return cls(
            n=n,
            m=m,
            adjacency=adjacency,
            neighbor_sets=tuple(frozenset(s) for s in adj),
            neighbor_masks=masks,
            label_map=tuple(label_map) if label_map is not None else None,
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def _mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def load_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with ``#`` are comments. The first non-comment line is
    ``n m``; the following m lines are ``u v`` edges with 0 <= u < v < n.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two fields, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer field in {line!r}") from exc
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(f"line {lineno}: negative count in header")
            header = (a, b)
        else:
            if a == b:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {a}")
            if a > b:
                raise GraphFormatError(
                    f"line {lineno}: edge endpoints must satisfy u < v, got {line!r}"
                )
            edges.append((a, b))
    if header is None:
        raise GraphFormatError("no header line 'n m' found")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} present")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Render the normalized edge-list form: header plus sorted u<v lines."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices`` with relabeled ids.

    Returns the subgraph and a mapping tuple where ``mapping[new_id]`` is
    the original id in ``g``.
    """
    mapping = tuple(sorted(set(vertices)))
    for v in mapping:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {old: new for new, old in enumerate(mapping)}
    edges = []
    for new_u, old_u in enumerate(mapping):
        for old_v in g.adjacency[old_u]:
            if old_v > old_u and old_v in index:
                edges.append((new_u, index[old_v]))
    labels = mapping if g.label_map is None else tuple(g.label_map[v] for v in mapping)
    sub = Graph.from_edges(len(mapping), edges, label_map=labels)
    return sub, mapping

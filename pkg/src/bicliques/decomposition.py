"""OCT decompositions: the [L, R, O] vertex partition and tools to
produce, check, and (de)serialize one.

A decomposition is valid when no edge lies inside L or inside R, i.e. the
graph minus O is bipartite with parts L and R. Non-optimal O sets only
cost runtime in the parameterized algorithms, never correctness, so a
cheap greedy heuristic is enough for production use; the exhaustive
search exists as a quality oracle for small graphs.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from collections.abc import Iterable

from .bitset import mask_of
from .graph import Graph


@dataclass(frozen=True)
class OctDecomposition:
    """Immutable partition of ``0..n-1`` into L, R, O (each sorted)."""

    n: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    oct_set: tuple[int, ...]

    @classmethod
    def from_sets(
        cls, n: int, left: Iterable[int], right: Iterable[int], oct_set: Iterable[int]
    ) -> "OctDecomposition":
        l, r, o = sorted(set(left)), sorted(set(right)), sorted(set(oct_set))
        seen: dict[int, str] = {}
        for tag, part in (("L", l), ("R", r), ("O", o)):
            for v in part:
                if not (0 <= v < n):
                    raise ValueError(f"vertex {v} out of range for n={n}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in both {seen[v]} and {tag}")
                seen[v] = tag
        if len(seen) != n:
            missing = [v for v in range(n) if v not in seen]
            raise ValueError(f"partition does not cover all vertices; missing {missing}")
        return cls(n=n, left=tuple(l), right=tuple(r), oct_set=tuple(o))

    @property
    def n_l(self) -> int:
        return len(self.left)

    @property
    def n_r(self) -> int:
        return len(self.right)

    @property
    def n_o(self) -> int:
        return len(self.oct_set)

    def side_of(self, v: int) -> str:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        cached = getattr(self, "_sides", None)
        if cached is None:
            cached = {}
            for tag, part in (("L", self.left), ("R", self.right), ("O", self.oct_set)):
                for u in part:
                    cached[u] = tag
            object.__setattr__(self, "_sides", cached)
        return cached[v]

    def masks(self) -> tuple[int, int, int]:
        """(L, R, O) as bitmasks."""
        return mask_of(self.left), mask_of(self.right), mask_of(self.oct_set)


def validate_oct(g: Graph, d: OctDecomposition) -> tuple[bool, list[tuple[int, int]]]:
    """Check that G[L ∪ R] is bipartite with parts L and R.

    Returns (ok, violations) where violations lists edges inside L or
    inside R. Raises ValueError when d is not a partition of V(g).
    """
    if d.n != g.n:
        raise ValueError(f"decomposition is over {d.n} vertices, graph has {g.n}")
    lm, rm, _ = d.masks()
    violations = []
    for u, v in g.edges():
        uv = (1 << u) | (1 << v)
        if uv & lm == uv or uv & rm == uv:
            violations.append((u, v))
    return (not violations, violations)


def parse_decomposition(text: str, n: int) -> OctDecomposition:
    """Parse the three-line 'L:'/'R:'/'O:' format (comments allowed)."""
    parts: dict[str, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, sep, rest = line.partition(":")
        tag = tag.strip().upper()
        if not sep or tag not in ("L", "R", "O"):
            raise ValueError(f"line {lineno}: expected 'L:', 'R:' or 'O:' line, got {line!r}")
        if tag in parts:
            raise ValueError(f"line {lineno}: duplicate {tag!r} line")
        try:
            parts[tag] = [int(tok) for tok in rest.split()]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer vertex id in {line!r}") from exc
    for tag in ("L", "R", "O"):
        if tag not in parts:
            raise ValueError(f"missing {tag!r} line")
    return OctDecomposition.from_sets(n, parts["L"], parts["R"], parts["O"])


def serialize_decomposition(d: OctDecomposition) -> str:
    return (
        f"L: {' '.join(map(str, d.left))}\n"
        f"R: {' '.join(map(str, d.right))}\n"
        f"O: {' '.join(map(str, d.oct_set))}\n"
    )


def _bfs_two_coloring(g: Graph, order: list[int]) -> list[int]:
    """Color every vertex 0/1 by BFS parity, visiting roots in ``order``."""
    color = [-1] * g.n
    for root in order:
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    queue.append(w)
    return color


def greedy_oct(g: Graph, rng_seed: int = 0) -> OctDecomposition:
    """Heuristic decomposition: BFS 2-coloring, then peel conflict vertices.

    Each edge joining same-colored vertices is a conflict; the vertex with
    the most incident conflicts (smallest id on ties) moves to O until the
    rest is bipartite. The seed only varies the BFS root order.
    """
    order = list(range(g.n))
    random.Random(rng_seed).shuffle(order)
    color = _bfs_two_coloring(g, order)
    in_oct = [False] * g.n
    mono = [(u, v) for u, v in g.edges() if color[u] == color[v]]
    while True:
        counts = [0] * g.n
        live = 0
        for u, v in mono:
            if not (in_oct[u] or in_oct[v]):
                counts[u] += 1
                counts[v] += 1
                live += 1
        if not live:
            break
        pick = max(range(g.n), key=lambda v: (counts[v], -v))
        in_oct[pick] = True
    left = [v for v in range(g.n) if color[v] == 0 and not in_oct[v]]
    right = [v for v in range(g.n) if color[v] == 1 and not in_oct[v]]
    oct_set = [v for v in range(g.n) if in_oct[v]]
    return OctDecomposition.from_sets(g.n, left, right, oct_set)


def _bipartition_without(g: Graph, removed: frozenset[int]) -> tuple[list[int], list[int]] | None:
    """2-color g minus ``removed``; None if not bipartite."""
    color = {}
    for root in range(g.n):
        if root in removed or root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w in removed:
                    continue
                if w not in color:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    left = sorted(v for v, c in color.items() if c == 0)
    right = sorted(v for v, c in color.items() if c == 1)
    return left, right


def min_oct_exhaustive(g: Graph, k_max: int) -> OctDecomposition | None:
    """Smallest OCT set of size <= k_max by exhaustive subset search.

    Intended as a test oracle on small graphs (n <= 20 recommended).
    Returns None when every candidate of size <= k_max fails.
    """
    for k in range(min(k_max, g.n) + 1):
        for subset in combinations(range(g.n), k):
            removed = frozenset(subset)
            parts = _bipartition_without(g, removed)
            if parts is not None:
                return OctDecomposition.from_sets(g.n, parts[0], parts[1], subset)
    return None

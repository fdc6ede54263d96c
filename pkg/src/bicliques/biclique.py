"""Bicliques, deduplicating stores, and enumeration results."""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from .bitset import ids_of, mask_of
from .graph import Graph


class Biclique:
    """An unordered pair of disjoint nonempty vertex sets.

    Sides are stored sorted ascending, with the lexicographically smaller
    side first; equality and hashing use this canonical form, so
    ``Biclique(x, y) == Biclique(y, x)``.
    """

    __slots__ = ("x", "y")

    def __init__(self, x: Iterable[int], y: Iterable[int]):
        xs = tuple(sorted(set(x)))
        ys = tuple(sorted(set(y)))
        if not xs or not ys:
            raise ValueError("biclique sides must be nonempty")
        if set(xs) & set(ys):
            raise ValueError("biclique sides must be disjoint")
        if ys < xs:
            xs, ys = ys, xs
        self.x = xs
        self.y = ys

    @classmethod
    def from_masks(cls, xm: int, ym: int) -> "Biclique":
        return cls(ids_of(xm), ids_of(ym))

    def masks(self) -> tuple[int, int]:
        return mask_of(self.x), mask_of(self.y)

    def key(self) -> str:
        """Portable canonical key: decimal ids, comma-joined, '|'-delimited."""
        return f"{','.join(map(str, self.x))}|{','.join(map(str, self.y))}"

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.x + self.y))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Biclique) and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __lt__(self, other: "Biclique") -> bool:
        return (self.x, self.y) < (other.x, other.y)

    def __repr__(self) -> str:
        return f"Biclique({list(self.x)}, {list(self.y)})"


def is_biclique(g: Graph, b: Biclique) -> bool:
    """True iff every (x, y) pair across the sides is an edge of g."""
    xm, ym = b.masks()
    return all(g.neighbor_masks[x] & ym == ym for x in b.x) and not (xm & ym)


def is_induced_biclique(g: Graph, b: Biclique) -> bool:
    """True iff b is a biclique and each side is independent in g."""
    xm, ym = b.masks()
    if any(g.neighbor_masks[x] & xm for x in b.x):
        return False
    if any(g.neighbor_masks[y] & ym for y in b.y):
        return False
    return is_biclique(g, b)


class BicliqueStore:
    """Deduplicating, insertion-ordered collection of canonical bicliques.

    With ``count_only=True`` only the canonical key index is kept; the
    materialized sequence is unavailable but sizes and membership still work.
    """

    def __init__(self, count_only: bool = False):
        self.count_only = count_only
        self._keys: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
        self._items: list[Biclique] = []

    def add(self, b: Biclique) -> bool:
        """Insert b; returns False if an equal biclique is already present."""
        key = (b.x, b.y)
        if key in self._keys:
            return False
        self._keys.add(key)
        if not self.count_only:
            self._items.append(b)
        return True

    def __contains__(self, b: Biclique) -> bool:
        return (b.x, b.y) in self._keys

    def __len__(self) -> int:
        return len(self._keys)

    def __iter__(self):
        return iter(self.bicliques)

    @property
    def bicliques(self) -> list[Biclique]:
        if self.count_only:
            raise ValueError("store was built count-only; bicliques not materialized")
        return self._items

    def sorted_bicliques(self) -> list[Biclique]:
        return sorted(self.bicliques)


@dataclass
class EnumerationResult:
    """Outcome of one enumeration run."""

    algorithm: str
    bicliques: BicliqueStore | None
    count: int
    wall_time: float
    timed_out: bool = False

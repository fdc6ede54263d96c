"""Bitmask helpers for vertex sets.

Vertex sets are represented as Python ints with bit ``i`` set for vertex
``i``; set algebra then runs at machine speed regardless of set size.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(ids: Iterable[int]) -> int:
    """Pack vertex ids into a bitmask."""
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids set in ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def ids_of(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def lowest(mask: int) -> int:
    """Smallest vertex id in a nonempty mask."""
    return (mask & -mask).bit_length() - 1


def canonical_pair(xm: int, ym: int) -> tuple[int, int]:
    """Order the two sides of a biclique mask pair canonically.

    The sides are disjoint, so the lexicographically smaller sorted vertex
    sequence is exactly the side containing the smaller minimum id.
    """
    if (xm & -xm) <= (ym & -ym):
        return (xm, ym)
    return (ym, xm)

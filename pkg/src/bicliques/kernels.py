"""The four low-level biclique subroutines the enumeration engines compose.

Public functions accept either a :class:`~bicliques.biclique.Biclique`
(canonical orientation) or an explicit ``(side1, side2)`` pair of vertex
collections when the caller's orientation matters — the engines call the
mask-level variants with both orientations of a stored biclique.

All set work runs on bitmasks; with sorted-merge semantics folded into
machine words the O(m)/O(n) bounds hold with a small constant.
"""

from __future__ import annotations

from collections.abc import Collection

from .biclique import Biclique, is_biclique, is_induced_biclique
from .bitset import lowest, mask_of
from .graph import Graph

def _sides_to_masks(c) -> tuple[int, int]:
    """Masks for a Biclique or an explicit (side1, side2) pair."""
    if isinstance(c, Biclique):
        return c.masks()
    s1, s2 = c
    m1, m2 = mask_of(s1), mask_of(s2)
    if not m1 or not m2:
        raise ValueError("biclique sides must be nonempty")
    if m1 & m2:
        raise ValueError("biclique sides must be disjoint")
    return m1, m2


# -- mask-level kernels (engine hot path) -----------------------------------


def make_maximal_masks(g: Graph, xm: int, ym: int) -> tuple[int, int]:
    """Extend a (non-induced) biclique to a maximal one.

    Replaces the first side by the full common neighborhood of the second,
    then the second side by the common neighborhood of the new first side.
    """
    nbr = g.neighbor_masks
    xs = -1
    m = ym
    while m:
        b = m & -m
        xs &= nbr[b.bit_length() - 1]
        m ^= b
    ys = -1
    m = xs
    while m:
        b = m & -m
        ys &= nbr[b.bit_length() - 1]
        m ^= b
    return xs, ys


def consensus_mask_pairs(
    ax: int, ay: int, bx: int, by: int
) -> list[tuple[int, int]]:
    """All four union/intersection combinations of two bicliques' sides.

    Candidates with an empty side are dropped; union sides are never empty
    so only the intersection side is tested. Every surviving candidate is a
    biclique whenever the inputs are.
    """
    out = []
    d = ay & by
    if d:
        out.append((ax | bx, d))
    c = ax & bx
    if c:
        out.append((c, ay | by))
    d = ax & by
    if d:
        out.append((ay | bx, d))
    d = ay & bx
    if d:
        out.append((ax | by, d))
    return out


def add_to_masks(g: Graph, c1: int, c2: int, v: int) -> tuple[int, int] | None:
    """AddTo: put v on side 1, drop its neighbors from side 1 and its
    non-neighbors from side 2; None when side 2 empties."""
    nv = g.neighbor_masks[v]
    y = c2 & nv
    if not y:
        return None
    return ((c1 | (1 << v)) & ~nv, y)


def make_ind_maximal_masks(g: Graph, c1: int, c2: int, s_mask: int) -> tuple[int, int] | None:
    """MakeIndMaximal: grow an induced biclique to a MIB using only S.

    Two ascending-id extension passes (side 2 first, checked against the
    growing side), then a scan of V \\ (S ∪ C): if any outside vertex could
    extend either side, returns None — some MIB outside S's reach contains
    the input.
    """
    nbr = g.neighbor_masks
    cs = s_mask & ~(c1 | c2)
    # pass 1: candidates must be adjacent to all of C1, so they lie in the
    # neighborhood of C1's smallest vertex
    cand = nbr[lowest(c1)] & cs
    while cand:
        b = cand & -cand
        cand ^= b
        nv = nbr[b.bit_length() - 1]
        if nv & c1 == c1 and not (nv & c2):
            c2 |= b
            cs ^= b
    cand = nbr[lowest(c2)] & cs
    while cand:
        b = cand & -cand
        cand ^= b
        nv = nbr[b.bit_length() - 1]
        if nv & c2 == c2 and not (nv & c1):
            c1 |= b
    vs = g.full_mask & ~(s_mask | c1 | c2)
    if vs:
        cand = nbr[lowest(c1)] & vs
        while cand:
            b = cand & -cand
            cand ^= b
            nv = nbr[b.bit_length() - 1]
            if nv & c1 == c1 and not (nv & c2):
                return None
        cand = nbr[lowest(c2)] & vs
        while cand:
            b = cand & -cand
            cand ^= b
            nv = nbr[b.bit_length() - 1]
            if nv & c2 == c2 and not (nv & c1):
                return None
    return c1, c2


# -- public kernels ----------------------------------------------------------


def make_maximal(g: Graph, b) -> Biclique:
    """Maximal biclique containing b (orientation-sensitive extension).

    The first side is replaced by the common neighborhood of the second,
    so the second side of the input is always preserved. The result is a
    fixed point of this operation.
    """
    xm, ym = _sides_to_masks(b)
    assert is_biclique(g, Biclique.from_masks(xm, ym)), "input is not a biclique"
    xs, ys = make_maximal_masks(g, xm, ym)
    return Biclique.from_masks(xs, ys)


def consensus(g: Graph, b_a, b_b) -> list[Biclique]:
    """The candidate bicliques formed from two bicliques' side unions and
    intersections, dropping candidates with an empty side; deduplicated.
    """
    ax, ay = _sides_to_masks(b_a)
    bx, by = _sides_to_masks(b_b)
    assert is_biclique(g, Biclique.from_masks(ax, ay)), "first input is not a biclique"
    assert is_biclique(g, Biclique.from_masks(bx, by)), "second input is not a biclique"
    candidates = []
    d = ay & by
    if d:
        candidates.append((ax | bx, d))
    c = ax & bx
    if c:
        candidates.append((c, ay | by))
    d = ax & by
    if d:
        candidates.append((ay | bx, d))
        candidates.append((d, ay | bx))
    out: list[Biclique] = []
    for xm, ym in candidates:
        b = Biclique.from_masks(xm, ym)
        if b not in out:
            out.append(b)
    return out


def add_to(g: Graph, c, v: int) -> Biclique | None:
    """Induced biclique with v added to side 1, or None.

    v's neighbors are removed from side 1 and its non-neighbors from
    side 2; None when nothing of side 2 survives.
    """
    c1, c2 = _sides_to_masks(c)
    if (c1 | c2) & (1 << v):
        raise ValueError(f"vertex {v} is already in the biclique")
    assert is_induced_biclique(g, Biclique.from_masks(c1, c2)), "input is not induced"
    res = add_to_masks(g, c1, c2, v)
    return None if res is None else Biclique.from_masks(*res)


def make_ind_maximal(g: Graph, c, s: Collection[int]) -> Biclique | None:
    """Extend an induced biclique to a MIB using vertices of s only.

    None input (the empty sentinel) stays None. None output signals that a
    vertex outside s could still extend the result, i.e. some MIB not
    confined to c ∪ s contains c.
    """
    if c is None:
        return None
    c1, c2 = _sides_to_masks(c)
    assert is_induced_biclique(g, Biclique.from_masks(c1, c2)), "input is not induced"
    res = make_ind_maximal_masks(g, c1, c2, mask_of(s))
    return None if res is None else Biclique.from_masks(*res)

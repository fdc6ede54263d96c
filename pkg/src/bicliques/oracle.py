"""Exponential-time ground-truth enumerators for small graphs.

These are the independent side of every correctness check: no shared
machinery with the production engines beyond the graph type. Hard caps
on n keep accidental blowups out of CI.
"""

from __future__ import annotations

from .biclique import Biclique
from .graph import Graph

MIB_MAX_N = 16
MB_MAX_N = 20


def brute_mibs(g: Graph) -> list[Biclique]:
    """All maximal induced bicliques by ternary enumeration.

    Every vertex goes to side X, side Y, or out; branches that already
    break independence or completeness are pruned, and the first placed
    vertex goes to X (each unordered pair is still visited). Leaves are
    kept when no outside vertex extends either side.
    """
    if g.n > MIB_MAX_N:
        raise ValueError(f"n={g.n} exceeds brute-force cap {MIB_MAX_N}")
    nbr = g.neighbor_masks
    full = g.full_mask
    found: dict[tuple[int, int], None] = {}

    def is_maximal(xm: int, ym: int) -> bool:
        rest = full & ~(xm | ym)
        while rest:
            b = rest & -rest
            rest ^= b
            nw = nbr[b.bit_length() - 1]
            if not (nw & xm) and nw & ym == ym:
                return False
            if not (nw & ym) and nw & xm == xm:
                return False
        return True

    def rec(v: int, xm: int, ym: int) -> None:
        if v == g.n:
            if xm and ym and is_maximal(xm, ym):
                a, b = (xm, ym) if (xm & -xm) <= (ym & -ym) else (ym, xm)
                found.setdefault((a, b))
            return
        b = 1 << v
        nv = nbr[v]
        rec(v + 1, xm, ym)
        if not (nv & xm) and nv & ym == ym:
            rec(v + 1, xm | b, ym)
        if (xm or ym) and not (nv & ym) and nv & xm == xm:
            rec(v + 1, xm, ym | b)

    rec(0, 0, 0)
    return sorted(Biclique.from_masks(a, b) for a, b in found)


def brute_mbs(g: Graph) -> list[Biclique]:
    """All maximal (non-induced) bicliques by subset enumeration.

    For every nonempty vertex subset Y with nonempty common neighborhood
    X*, close the other way (Y* = common neighborhood of X*) and keep
    X* × Y* when Y survived inside Y*. Every maximal biclique is such a
    fixed point and is reached from its own Y side.
    """
    if g.n > MB_MAX_N:
        raise ValueError(f"n={g.n} exceeds brute-force cap {MB_MAX_N}")
    nbr = g.neighbor_masks
    found: dict[tuple[int, int], None] = {}
    for ym in range(1, 1 << g.n):
        xm = -1
        m = ym
        while m:
            b = m & -m
            m ^= b
            xm &= nbr[b.bit_length() - 1]
            if not xm:
                break
        if not xm:
            continue
        ys = -1
        m = xm
        while m:
            b = m & -m
            m ^= b
            ys &= nbr[b.bit_length() - 1]
        if ym & ~ys:
            continue
        a, b = (xm, ys) if (xm & -xm) <= (ys & -ys) else (ys, xm)
        found.setdefault((a, b))
    return sorted(Biclique.from_masks(a, b) for a, b in found)

"""Independent brute-force oracles for the test suite.

Deliberately naive re-derivations (subset scans, assignment scans, antichain
enumeration).  They never share code with the production kernels they check.
"""

from __future__ import annotations

from itertools import product

from facehull.graphs import Graph


def is_clique_mask(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        m ^= low
        v = low.bit_length() - 1
        if (mask ^ low) & ~g._adj[v]:
            return False
    return True


def subset_scan_clique_vector(g: Graph) -> list[int]:
    """c_1..c_n by scanning all 2^n vertex subsets."""
    counts = [0] * (g.n + 1)
    for mask in range(1, 1 << g.n):
        if is_clique_mask(g, mask):
            counts[mask.bit_count()] += 1
    return counts[1:]


def colorable_by_scan(g: Graph, r: int) -> bool:
    """Proper r-colorability by trying all r^n assignments."""
    if g.n == 0:
        return True
    edges = g.edges()
    for assignment in product(range(r), repeat=g.n):
        if all(assignment[u - 1] != assignment[v - 1] for u, v in edges):
            return True
    return False


def is_proper_coloring(g: Graph, colors, r: int) -> bool:
    if colors is None or len(colors) != g.n:
        return False
    if any(not (1 <= c <= r) for c in colors):
        return False
    return all(colors[u - 1] != colors[v - 1] for u, v in g.edges())


def _comparable(a: int, b: int) -> bool:
    return a & b == a or a & b == b


def antichains(n: int) -> list[tuple[int, ...]]:
    """All antichains of subsets of {1..n} (subsets as vertex bitmasks)."""
    subsets = list(range(1 << n))
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(start: int) -> None:
        out.append(tuple(chosen))
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if all(not _comparable(s, c) for c in chosen):
                chosen.append(s)
                rec(idx + 1)
                chosen.pop()

    rec(0)
    return out


def antichain_closure_mask(antichain: tuple[int, ...]) -> int:
    """Family mask of the downward closure of an antichain of facets."""
    fam = 0
    for facet in antichain:
        sub = facet
        while True:
            fam |= 1 << sub
            if sub == 0:
                break
            sub = (sub - 1) & facet
    return fam


def family_masks_via_antichains(n: int) -> set[int]:
    return {antichain_closure_mask(a) for a in antichains(n)}

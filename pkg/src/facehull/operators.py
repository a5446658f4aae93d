"""Constructive operators used by the extremal arguments.

Graph side: the shift G_{u->v} that re-attaches a non-neighbor u so its
neighborhood duplicates v's, the symmetrization pipeline that drives any
graph to a complete multipartite one without raising the clique number, and
the rebalancing step that equalizes part sizes.

Complex side: the analogous vertex shift, the shift-everything pipeline, and
the color-shiftedness machinery (r-colored k-subsets under the componentwise
dominance order).
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

from .complexes import SimplicialComplex, face_mask, mask_vertices
from .graphs import Graph, clique_count, clique_vector, multipartite_parts


def zykov_shift(g: Graph, u: int, v: int) -> Graph:
    """Replace u's incident edges by edges from u to every neighbor of v.

    Requires u != v and u, v non-adjacent; the order is preserved and the
    clique number never increases.  c_k changes by
    c_{k-1}(G[N(v)]) - c_{k-1}(G[N(u)]).
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("shift endpoints must differ")
    if g.has_edge(u, v):
        raise ValueError(f"shift requires non-adjacent endpoints, but {u} ~ {v}")
    masks = list(g._adj)
    ubit = 1 << (u - 1)
    mu = masks[u - 1]
    while mu:
        low = mu & -mu
        mu ^= low
        masks[low.bit_length() - 1] &= ~ubit
    nv = g._adj[v - 1]  # u is not in N(v), so no loop can appear
    masks[u - 1] = nv
    m = nv
    while m:
        low = m & -m
        m ^= low
        masks[low.bit_length() - 1] |= ubit
    return Graph._from_masks(g.n, masks)


def zykov_clique_delta(g: Graph, u: int, v: int, k: int) -> tuple[int, int]:
    """Both sides of c_k(G_{u->v}) = c_k(G) - c_{k-1}(G[N(u)]) + c_{k-1}(G[N(v)]).

    Left side counted on the shifted graph, right side assembled from
    independent counts on g and its induced neighborhoods (c_0 = 1).
    Returns (lhs, rhs); the two must agree.
    """
    if k < 1:
        raise ValueError("clique size must be >= 1")
    lhs = clique_count(zykov_shift(g, u, v), k)
    gu, _ = g.induced_subgraph(g.neighborhood(u))
    gv, _ = g.induced_subgraph(g.neighborhood(v))
    rhs = clique_count(g, k) - clique_count(gu, k - 1) + clique_count(gv, k - 1)
    return lhs, rhs


def _is_clique_within(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        m ^= low
        if (mask ^ low) & ~g._adj[low.bit_length() - 1]:
            return False
    return True


def symmetrize_to_multipartite(g: Graph) -> tuple[Graph, list[dict]]:
    """Drive g to a complete multipartite graph by rounds of shifts.

    Each round picks a pivot v of maximum degree within the active remainder
    (ties to the smallest label), shifts every remainder non-neighbor of v
    onto v in ascending label order, then recurses on the common
    neighborhood.  Rounds stop when the remainder induces a clique.

    Termination measure: the pivot and its non-neighbors leave the remainder
    each round, so there are at most n rounds of at most n shifts each; this
    bound is asserted.  Shifts that would not change the graph (u already a
    neighborhood twin of v) are skipped, so complete multipartite inputs
    come back unchanged with an empty trace.
    """
    trace: list[dict] = []
    n = g.n
    remainder = (1 << n) - 1
    rounds = 0
    while not _is_clique_within(g, remainder):
        rounds += 1
        assert rounds <= n, "symmetrization exceeded its round bound"
        cand = remainder
        pivot, best = -1, -1
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            deg = (g._adj[i] & remainder).bit_count()
            if deg > best:
                pivot, best = i, deg
        vbit = 1 << pivot
        nonnbrs = remainder & ~g._adj[pivot] & ~vbit
        m = nonnbrs
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length()
            if g._adj[u - 1] != g._adj[pivot]:
                g = zykov_shift(g, u, pivot + 1)
                trace.append({"op": "zykov_shift", "u": u, "v": pivot + 1})
        remainder &= g._adj[pivot]
    return g, trace


def balance_multipartite(h: Graph) -> Graph:
    """Equalize the parts of a complete multipartite graph one move at a time.

    While two parts differ in size by at least 2, one vertex moves from a
    largest part to a smallest part (largest label moves; ties on parts go
    to the smallest member label).  Each move weakly increases every clique
    count, and the result has the clique vector of T(n, #parts).
    """
    parts = multipartite_parts(h)
    if parts is None:
        raise ValueError("input graph is not complete multipartite")
    parts = [sorted(p) for p in parts]
    while True:
        parts.sort(key=lambda p: (-len(p), p[0]))
        if not parts or len(parts[0]) - len(parts[-1]) <= 1:
            break
        donor = parts[0]
        recipient = min(parts, key=lambda p: (len(p), p[0]))
        recipient.append(donor.pop())
        recipient.sort()
    masks = [0] * h.n
    full = (1 << h.n) - 1
    for part in parts:
        block = 0
        for u in part:
            block |= 1 << (u - 1)
        for u in part:
            masks[u - 1] = full & ~block
    return Graph._from_masks(h.n, masks)


def complex_shift(cx: SimplicialComplex, u: int, target: int) -> SimplicialComplex:
    """Move vertex u onto a non-adjacent target vertex.

    Removes every face properly containing {u} and adds F + {u} for each
    face F of the target's link.  Face counts obey
    f_j(out) = f_j(in) - f_{j-1}(link u) + f_{j-1}(link target),
    and r-colorability of the underlying graph is preserved.
    """
    ubit = face_mask([u], cx.n)
    tbit = face_mask([target], cx.n)
    if u == target:
        raise ValueError("shift endpoints must differ")
    if ubit not in cx._faces or tbit not in cx._faces:
        raise ValueError("both shift endpoints must be vertices of the complex")
    if (ubit | tbit) in cx._faces:
        raise ValueError(f"shift requires non-adjacent endpoints, but {{{u},{target}}} is a face")
    kept = {m for m in cx._faces if not (m & ubit)}
    added = {(m ^ tbit) | ubit for m in cx._faces if m & tbit}
    return SimplicialComplex._from_masks(cx.n, frozenset(kept | added | {ubit}))


class ShiftPipeline(NamedTuple):
    """Outcome of shifting every non-neighbor of a target vertex onto it."""

    result: SimplicialComplex
    multiplicity: int          # 1 + number of shifted vertices
    shifted: tuple[int, ...]   # labels, in the order they were shifted

    def trace(self) -> list[dict]:
        return [{"op": "complex_shift", "u": u, "v": -1} for u in self.shifted]


def shift_all_to_target(cx: SimplicialComplex, target: int) -> ShiftPipeline:
    """Shift every vertex not adjacent to the target onto it, ascending labels.

    Afterwards f_j(result) = m * f_{j-1}(L) + f_j(D), where m is the
    returned multiplicity, L the target's link and D the subcomplex induced
    on the link's vertices.
    """
    tbit = face_mask([target], cx.n)
    if tbit not in cx._faces:
        raise ValueError(f"target {target} is not a vertex of the complex")
    nonnbrs = [
        u for u in cx.vertices()
        if u != target and (face_mask([u], cx.n) | tbit) not in cx._faces
    ]
    out = cx
    for u in nonnbrs:
        out = complex_shift(out, u, target)
    return ShiftPipeline(out, len(nonnbrs) + 1, tuple(nonnbrs))


# ---------------------------------------------------------------------------
# r-colored k-subsets and the dominance order

class ColoredKSubset(NamedTuple):
    """A k-subset with pairwise distinct residue classes modulo r.

    Residues are taken in {1..r}: label x falls in class ((x-1) mod r) + 1,
    so labels map to color classes with class r standing in for residue 0.
    """

    vertices: tuple[int, ...]
    residues: tuple[int, ...]


def residue_class(x: int, r: int) -> int:
    return (x - 1) % r + 1


def colored_subset(vertices: Iterable[int], r: int) -> ColoredKSubset:
    """Validate membership in M(k,r): at most one element per residue class."""
    if r < 1:
        raise ValueError("residue count r must be >= 1")
    vs = tuple(sorted(vertices))
    if len(set(vs)) != len(vs) or any(v < 1 for v in vs):
        raise ValueError(f"colored subset needs distinct positive labels, got {vs}")
    res = tuple(residue_class(v, r) for v in vs)
    if len(set(res)) != len(res):
        raise ValueError(f"{vs} has two elements in one residue class mod {r}")
    return ColoredKSubset(vs, res)


def is_colored_subset(vertices: Iterable[int], r: int) -> bool:
    try:
        colored_subset(vertices, r)
        return True
    except ValueError:
        return False


def dominance_order(t: Sequence[int], s: Sequence[int]) -> bool:
    """T <=_p S: the sorted elements compare entrywise."""
    ts, ss = sorted(t), sorted(s)
    if len(ts) != len(ss):
        raise ValueError(f"dominance order needs equal sizes, got {len(ts)} and {len(ss)}")
    return all(a <= b for a, b in zip(ts, ss))


def dominated_colored_subsets(s: Sequence[int], r: int):
    """All T in M(k,r) with T <=_p S, in lexicographic order (S included)."""
    top = colored_subset(s, r).vertices
    k = len(top)
    picked: list[int] = []

    def grow(i: int, lo: int, used: int):
        if i == k:
            yield tuple(picked)
            return
        for t in range(lo, top[i] + 1):
            res = residue_class(t, r)
            if used >> res & 1:
                continue
            picked.append(t)
            yield from grow(i + 1, t + 1, used | (1 << res))
            picked.pop()

    yield from grow(0, 1, 0)


def is_color_shifted(
    family: Iterable[Sequence[int]], k: int, r: int
) -> tuple[bool, Optional[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Is the family downward closed under the dominance order within M(k,r)?

    Every member must be a k-subset lying in M(k,r).  On failure returns a
    witness pair (T, S): S in the family, T dominated by S, T missing.
    """
    members = set()
    for s in family:
        cs = colored_subset(s, r)
        if len(cs.vertices) != k:
            raise ValueError(f"family member {cs.vertices} does not have size {k}")
        members.add(cs.vertices)
    for s in sorted(members):
        for t in dominated_colored_subsets(s, r):
            if t not in members:
                return False, (t, s)
    return True, None


def color_shifted_witness_faces(cx: SimplicialComplex, r: int) -> Optional[tuple]:
    """First level witness that a complex's k-faces are not r-color shifted.

    Returns (k, T, S) for the smallest failing cardinality, or None when every
    face level that lies inside M(k,r) is color shifted.  Levels with a face
    outside M(k,r) report that face as (k, None, face).
    """
    for k in range(1, cx.n + 1):
        level = [mask_vertices(m) for m in cx.face_masks() if m.bit_count() == k]
        if not level:
            continue
        if not all(is_colored_subset(f, r) for f in level):
            bad = next(f for f in level if not is_colored_subset(f, r))
            return k, None, bad
        ok, witness = is_color_shifted(level, k, r)
        if not ok:
            return (k, *witness)
    return None

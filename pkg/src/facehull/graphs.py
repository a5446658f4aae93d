"""Simple undirected graphs on {1..n} with bitset adjacency.

Vertices carry 1-based labels; adjacency lives in one machine-word bitmask
per vertex (bit j-1 of mask i-1 set iff i ~ j), which keeps the exhaustive
sweeps and the clique-counting kernel cheap.  The ground-set cap is 64.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .vectors import IntVector

MAX_VERTICES = 64


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"graph order must be an integer, got {n!r}")
    if n < 0 or n > MAX_VERTICES:
        raise ValueError(f"graph order must be in [0, {MAX_VERTICES}], got {n}")


class Graph:
    """Immutable simple undirected graph: no loops, no multi-edges."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of vertex range [1, {n}]")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def _from_masks(cls, n: int, masks: Iterable[int]) -> "Graph":
        # trusted constructor: caller guarantees symmetry/irreflexivity
        g = object.__new__(cls)
        g.n = n
        g._adj = tuple(masks)
        return g

    @property
    def order(self) -> int:
        return self.n

    def neighbors_mask(self, u: int) -> int:
        self._check_vertex(u)
        return self._adj[u - 1]

    def neighborhood(self, u: int) -> tuple[int, ...]:
        """Open neighborhood of u as sorted labels (u itself excluded)."""
        return tuple(_mask_labels(self.neighbors_mask(u)))

    def degree(self, u: int) -> int:
        return self.neighbors_mask(u).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u - 1] >> (v - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            m = self._adj[i] >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    out.append((i + 1, j + 1))
                m >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph on the given vertex set, relabeled 1..|W|.

        Returns the relabeled graph and the label map: new vertex i+1 is
        old vertex ``labels[i]``.
        """
        labels = sorted(set(vertices))
        for u in labels:
            self._check_vertex(u)
        pos = {u: i for i, u in enumerate(labels)}
        masks = [0] * len(labels)
        for i, u in enumerate(labels):
            m = self._adj[u - 1]
            for v in labels[i + 1:]:
                if m >> (v - 1) & 1:
                    masks[i] |= 1 << pos[v]
                    masks[pos[v]] |= 1 << i
        return Graph._from_masks(len(labels), masks), tuple(labels)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        masks = [full & ~self._adj[i] & ~(1 << i) for i in range(self.n)]
        return Graph._from_masks(self.n, masks)

    def _check_vertex(self, u: int) -> None:
        if not isinstance(u, int) or isinstance(u, bool) or not (1 <= u <= self.n):
            raise ValueError(f"vertex {u!r} out of range [1, {self.n}]")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self._adj == other._adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def _mask_labels(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph._from_masks(n, [0] * n)


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._from_masks(n, [full ^ (1 << i) for i in range(n)])


def clique_vector(g: Graph) -> IntVector:
    """Exact number of k-cliques for k = 1..n.

    Enumeration kernel: extend cliques along the fixed vertex order, so each
    clique is visited exactly once via its ascending vertex sequence.
    """
    counts = [0] * (g.n + 1)
    adj = g._adj

    def extend(cand: int, size: int) -> None:
        counts[size] += 1
        while cand:
            low = cand & -cand
            cand ^= low  # only vertices above the chosen one remain
            extend(cand & adj[low.bit_length() - 1], size + 1)

    extend((1 << g.n) - 1, 0)
    return IntVector(counts[1:])


def clique_count(g: Graph, k: int) -> int:
    """c_k(g), with the convention c_0 = 1 for every graph."""
    if k < 0:
        raise ValueError("clique size must be nonnegative")
    if k == 0:
        return 1
    return clique_vector(g)[k] if k <= g.n else 0


def clique_number(g: Graph) -> int:
    """Largest k with c_k > 0; 0 for the graph on an empty vertex set."""
    return clique_vector(g).support()


def iter_clique_masks(g: Graph) -> Iterator[int]:
    """All cliques of g as vertex bitmasks, the empty clique included."""
    adj = g._adj
    stack = [(0, (1 << g.n) - 1)]
    while stack:
        clique, cand = stack.pop()
        yield clique
        while cand:
            low = cand & -cand
            cand ^= low
            stack.append((clique | low, cand & adj[low.bit_length() - 1]))


def is_r_colorable(g: Graph, r: int) -> Optional[tuple[int, ...]]:
    """Exact r-colorability test by backtracking.

    Returns a proper coloring (colors[v-1] in 1..r for vertex v) or None if
    no proper coloring with at most r colors exists.  Vertices are processed
    in descending-degree order, and a fresh color is only opened when all
    used ones fail, which breaks color-permutation symmetry.
    """
    if r < 1:
        raise ValueError(f"color count must be >= 1, got {r}")
    n = g.n
    if n == 0:
        return ()
    order = sorted(range(n), key=lambda i: (-g._adj[i].bit_count(), i))
    colors = [0] * n
    adj = g._adj

    def assign(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        forbidden = 0
        m = adj[v]
        while m:
            low = m & -m
            m ^= low
            c = colors[low.bit_length() - 1]
            if c:
                forbidden |= 1 << c
        for c in range(1, min(used + 1, r) + 1):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if assign(idx + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    if assign(0, 0):
        return tuple(colors)
    return None


def multipartite_parts(g: Graph) -> Optional[list[list[int]]]:
    """Partition of a complete multipartite graph into its independent parts.

    Returns the parts sorted by (size descending, smallest label), or None
    if g is not complete multipartite.  Parts are the connected components
    of the complement; the graph qualifies iff every such component is
    independent in g.
    """
    n = g.n
    comp_adj = [((1 << n) - 1) & ~g._adj[i] & ~(1 << i) for i in range(n)]
    seen = 0
    parts = []
    for i in range(n):
        if seen >> i & 1:
            continue
        # BFS over the complement
        frontier = 1 << i
        part = 0
        while frontier:
            part |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= comp_adj[low.bit_length() - 1]
            frontier = nxt & ~part
        seen |= part
        labels = list(_mask_labels(part))
        for u in labels:
            if g._adj[u - 1] & part:
                return None  # an edge inside a would-be part
        parts.append(labels)
    parts.sort(key=lambda p: (-len(p), p[0]))
    return parts


def join_with_independent_set(h: Graph, m: int) -> Graph:
    """Join h with a totally disconnected graph on m new vertices.

    The new vertices h.n+1 .. h.n+m are pairwise non-adjacent and adjacent
    to every vertex of h, so c_t(result) = m*c_{t-1}(h) + c_t(h).
    """
    if m < 1:
        raise ValueError(f"independent-set size must be >= 1, got {m}")
    n = h.n + m
    _check_order(n)
    old = (1 << h.n) - 1
    new_bits = ((1 << n) - 1) ^ old
    masks = [h._adj[i] | new_bits for i in range(h.n)]
    masks += [old] * m
    return Graph._from_masks(n, masks)

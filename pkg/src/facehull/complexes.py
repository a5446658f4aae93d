"""Simplicial complexes on small ground sets, with cardinality-indexed face counts.

Faces are indexed by CARDINALITY throughout (f_1 = vertex count, f_2 = edge
count), never by dimension.  A face is stored as a bitmask over the ground
set {1..n}; the complex stores its full face set, which makes the
membership-heavy operators cheap at desk scale.

The empty face (mask 0) belongs to every nonempty complex but is never
counted in face vectors.  ``count(0)`` reports it explicitly, which is what
the link identities need at the cardinality-1 boundary.  The completely
empty family ("void complex", no faces at all) is a legal value produced by
exhaustive enumeration, though no constructor here builds it.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import MAX_VERTICES, Graph, iter_clique_masks
from .vectors import IntVector


def face_mask(vertices: Iterable[int], n: int) -> int:
    """Bitmask of a face given by vertex labels; validates range and duplicates."""
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool) or not (1 <= v <= n):
            raise ValueError(f"vertex label {v!r} out of range [1, {n}]")
        bit = 1 << (v - 1)
        if mask & bit:
            raise ValueError(f"duplicate vertex label {v} in face")
        mask |= bit
    return mask


def mask_vertices(mask: int) -> tuple[int, ...]:
    """Sorted vertex labels of a face bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


class SimplicialComplex:
    """Immutable downward-closed face family on ground set {1..n}.

    "On n vertices" means ground-set size: labels that appear in no face are
    allowed, and the face vector's first entry counts actual singleton faces.
    """

    __slots__ = ("n", "_faces")

    def __init__(self, n: int, faces: Iterable[Iterable[int]]):
        _check_ground(n)
        masks = frozenset(face_mask(f, n) for f in faces)
        if masks and 0 not in masks:
            masks |= {0}
        for f in masks:
            if f and not _submasks_present(f, masks):
                raise ValueError(
                    f"face set not downward closed at face {mask_vertices(f)}"
                )
        self.n = n
        self._faces = masks

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the given facets (empty facet list gives {|})."""
        _check_ground(n)
        faces = {0}
        for facet in facets:
            fm = face_mask(facet, n)
            sub = fm
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        return cls._from_masks(n, frozenset(faces))

    @classmethod
    def _from_masks(cls, n: int, masks: frozenset[int]) -> "SimplicialComplex":
        # trusted constructor: caller guarantees downward closure
        cx = object.__new__(cls)
        cx.n = n
        cx._faces = masks
        return cx

    @property
    def is_void(self) -> bool:
        """True for the completely empty family (not even the empty face)."""
        return not self._faces

    def face_masks(self) -> list[int]:
        return sorted(self._faces)

    def face_sets(self) -> list[tuple[int, ...]]:
        """All faces as sorted vertex tuples, in (cardinality, label) order."""
        return [mask_vertices(m) for m in sorted(self._faces, key=lambda m: (m.bit_count(), m))]

    def facets(self) -> list[tuple[int, ...]]:
        """Maximal faces, in (cardinality, label) order."""
        masks = self._faces
        out = [m for m in masks if not any(m != o and m & o == m for o in masks)]
        return [mask_vertices(m) for m in sorted(out, key=lambda m: (m.bit_count(), m))]

    def has_face(self, vertices: Iterable[int]) -> bool:
        return face_mask(vertices, self.n) in self._faces

    def num_faces(self) -> int:
        """Total number of faces, the empty face included."""
        return len(self._faces)

    def count(self, k: int) -> int:
        """Number of faces of cardinality k; count(0) is 1 unless void."""
        if k < 0:
            raise ValueError("cardinality must be nonnegative")
        return sum(1 for m in self._faces if m.bit_count() == k)

    def face_vector(self) -> IntVector:
        """f-vector: entry k counts the faces of cardinality k, k = 1..n."""
        counts = [0] * (self.n + 1)
        for m in self._faces:
            counts[m.bit_count()] += 1
        return IntVector(counts[1:])

    def vertices(self) -> tuple[int, ...]:
        """Labels present as singleton faces."""
        return tuple(sorted(m.bit_length() for m in self._faces if m.bit_count() == 1))

    def link(self, v: int) -> "SimplicialComplex":
        """Link of a vertex: faces F with v not in F and F + {v} a face.

        Contains the empty face whenever {v} is a face, so count(0) = 1 and
        the face-count identities hold at the cardinality-1 boundary.
        """
        bit = face_mask([v], self.n)
        if bit not in self._faces:
            raise ValueError(f"vertex {v} is not a face of the complex")
        return SimplicialComplex._from_masks(
            self.n, frozenset(m ^ bit for m in self._faces if m & bit)
        )

    def induced_on(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """Subcomplex of faces entirely contained in the given vertex set."""
        wmask = face_mask(vertices, self.n)
        return SimplicialComplex._from_masks(
            self.n, frozenset(m for m in self._faces if m & ~wmask == 0)
        )

    def skeleton(self, k: int) -> "SimplicialComplex":
        """All faces of cardinality <= k; its f-vector is the k-truncation."""
        if k < 0:
            raise ValueError("skeleton cardinality must be nonnegative")
        return SimplicialComplex._from_masks(
            self.n, frozenset(m for m in self._faces if m.bit_count() <= k)
        )

    def underlying_graph(self) -> Graph:
        """Graph on {1..n} whose edges are the cardinality-2 faces."""
        masks = [0] * self.n
        for m in self._faces:
            if m.bit_count() == 2:
                lo = m & -m
                hi = m ^ lo
                masks[lo.bit_length() - 1] |= hi
                masks[hi.bit_length() - 1] |= lo
        return Graph._from_masks(self.n, masks)

    def __contains__(self, mask: int) -> bool:
        return mask in self._faces

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._faces))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SimplicialComplex):
            return self.n == other.n and self._faces == other._faces
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self._faces))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={self.facets()!r})"


def _check_ground(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1 or n > MAX_VERTICES:
        raise ValueError(f"ground-set size must be in [1, {MAX_VERTICES}], got {n!r}")


def _submasks_present(mask: int, faces: frozenset[int]) -> bool:
    m = mask
    while m:
        low = m & -m
        if (mask ^ low) not in faces:
            return False
        m ^= low
    return True


def clique_complex(g: Graph) -> SimplicialComplex:
    """Complex whose faces are exactly the cliques of g (flag complex)."""
    if g.n < 1:
        raise ValueError("clique complex needs at least one vertex")
    return SimplicialComplex._from_masks(g.n, frozenset(iter_clique_masks(g)))

"""Turan graphs T(n,r) and their clique vectors in closed form.

A k-clique of a complete multipartite graph picks at most one vertex per
part, so the number of k-cliques is the k-th elementary symmetric polynomial
of the part sizes.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .graphs import Graph
from .vectors import IntVector


class TuranSpec(NamedTuple):
    """Normalized Turan parameters: r > n is folded to r = n (T(n,r) = K_n)."""

    n: int
    r: int
    parts: tuple[int, ...]

    @classmethod
    def of(cls, n: int, r: int) -> "TuranSpec":
        _check_params(n, r)
        return cls(n, min(r, n), turan_parts(n, r))


def _check_params(n: int, r: int) -> None:
    for name, val in (("n", n), ("r", r)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise ValueError(f"{name} must be a positive integer, got {val!r}")


def turan_parts(n: int, r: int) -> tuple[int, ...]:
    """Part sizes of T(n,r), as equal as possible, larger parts first."""
    _check_params(n, r)
    p = min(r, n)
    q, rem = divmod(n, p)
    # (n mod p) parts of the larger size come first
    return tuple([q + 1] * rem + [q] * (p - rem))


def turan_graph(n: int, r: int) -> Graph:
    """Complete multipartite graph on contiguous label blocks per part.

    Vertices 1..n are assigned to parts in order (larger parts first), which
    fixes a byte-reproducible labeling.
    """
    parts = turan_parts(n, r)
    masks = [0] * n
    full = (1 << n) - 1
    start = 0
    for size in parts:
        block = ((1 << size) - 1) << start
        others = full ^ block
        for i in range(start, start + size):
            masks[i] = others
        start += size
    return Graph._from_masks(n, masks)


def elementary_symmetric(values: Iterable[int], upto: int | None = None) -> list[int]:
    """e_0..e_m of the given integers by the stable O(len*m) recurrence."""
    vals = list(values)
    m = len(vals) if upto is None else min(upto, len(vals))
    e = [0] * (m + 1)
    e[0] = 1
    top = 0
    for p in vals:
        top = min(top + 1, m)
        for k in range(top, 0, -1):
            e[k] += p * e[k - 1]
    return e


def turan_clique_vector(n: int, r: int) -> IntVector:
    """t_k(n,r) for k = 1..n: elementary symmetric polynomials of the parts."""
    parts = turan_parts(n, r)
    e = elementary_symmetric(parts)
    return IntVector(e[1:] + [0] * (n - len(parts)))

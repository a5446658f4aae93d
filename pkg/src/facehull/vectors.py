"""Exact integer count vectors indexed by cardinality."""

from __future__ import annotations

from typing import Iterable, Iterator


def _trim(entries: tuple[int, ...]) -> tuple[int, ...]:
    d = len(entries)
    while d and entries[d - 1] == 0:
        d -= 1
    return entries[:d]


class IntVector:
    """Nonnegative integer counts indexed by cardinality k = 1, 2, ...

    Houses face vectors of complexes, clique vectors of graphs and Turan
    vectors.  Index 1 is the first coordinate (the cardinality-1 count);
    there is no index 0.  Reading past the stored length yields 0, so a
    vector behaves as if it carried an infinite zero tail, and equality
    ignores trailing zeros.  All entries are exact Python integers.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int] = ()):
        ent = tuple(entries)
        for x in ent:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"count vector entries must be integers, got {x!r}")
            if x < 0:
                raise ValueError(f"count vector entries must be nonnegative, got {x}")
        self._entries = ent

    @classmethod
    def parse(cls, text: str) -> "IntVector":
        """Parse a comma-separated integer literal such as ``"5,6,0"``."""
        body = text.strip()
        if not body:
            return cls()
        try:
            return cls(int(part.strip(), 10) for part in body.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed integer vector literal {text!r}: {exc}") from None

    def __getitem__(self, k: int) -> int:
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("cardinality index must be an integer")
        if k < 1:
            raise IndexError("cardinality index starts at 1")
        if k > len(self._entries):
            return 0
        return self._entries[k - 1]

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntVector):
            return _trim(self._entries) == _trim(other._entries)
        if isinstance(other, (tuple, list)):
            return _trim(self._entries) == _trim(tuple(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(_trim(self._entries))

    def __repr__(self) -> str:
        return f"IntVector({self._entries!r})"

    def trimmed(self) -> tuple[int, ...]:
        """Entries with trailing zeros removed."""
        return _trim(self._entries)

    def padded(self, d: int) -> tuple[int, ...]:
        """Entries zero-extended or zero-truncated-checked to length ``d``."""
        if d < len(self._entries):
            if any(self._entries[d:]):
                raise ValueError(f"cannot shorten to length {d}: nonzero tail")
            return self._entries[:d]
        return self._entries + (0,) * (d - len(self._entries))

    def support(self) -> int:
        """Largest k with a nonzero entry, 0 for the zero vector."""
        return len(_trim(self._entries))

    def to_list(self) -> list[int]:
        return list(self._entries)

    def to_text(self) -> str:
        """Space-separated entries, trailing zeros dropped (``"0"`` for zero vectors)."""
        t = _trim(self._entries)
        return " ".join(map(str, t)) if t else "0"


def as_vector(values: "IntVector | Iterable[int]") -> IntVector:
    """Coerce an iterable of nonnegative integers into an IntVector."""
    if isinstance(values, IntVector):
        return values
    return IntVector(values)

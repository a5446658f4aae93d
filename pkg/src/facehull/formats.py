"""Input/output formats: graph6, edge-list text, facet text and JSON forms.

Graphs travel as (a) edge-list text with an ``n=<int>`` header and one
``u v`` pair per line, (b) standard graph6 strings (bit-exact, padding bits
must be zero), or (c) JSON objects {"n": int, "edges": [[u, v], ...]}.
Complexes travel as facet text (``n=<int>`` header, one facet per line as
space-separated labels) or JSON objects {"n": int, "facets": [[...], ...]}.
"""

from __future__ import annotations

import json
from typing import Iterable

from .complexes import SimplicialComplex
from .graphs import MAX_VERTICES, Graph


class ParseError(ValueError):
    """Malformed graph or complex input; carries the offending position."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = ""
        if line is not None:
            where += f" at line {line}"
        if offset is not None:
            where += f" at offset {offset}"
        super().__init__(message + where)
        self.line = line
        self.offset = offset


# ---------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    """Standard graph6 encoding: order, then the upper triangle column-major."""
    n = g.n
    chars = _encode_g6_order(n)
    bits = []
    for j in range(1, n):
        col = 1 << j
        for i in range(j):
            bits.append(1 if g._adj[i] & col else 0)
    for group in range(0, len(bits), 6):
        chunk = bits[group:group + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        chars.append(val + 63)
    return "".join(map(chr, chars))


def _encode_g6_order(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    # 63 <= n <= 258047: '~' then 18 bits in three sextets
    return [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 string (optional ``>>graph6<<`` header tolerated)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise ParseError("empty graph6 string")
    vals = []
    for pos, ch in enumerate(s):
        v = ord(ch) - 63
        if not (0 <= v <= 63):
            raise ParseError(f"invalid graph6 character {ch!r}", offset=pos)
        vals.append(v)
    if vals[0] == 63:  # '~' prefix: extended order
        if len(vals) < 4:
            raise ParseError("truncated graph6 order field")
        if vals[1] == 63:
            raise ParseError("graph6 orders above 258047 are not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    if n > MAX_VERTICES:
        raise ParseError(f"graphs larger than {MAX_VERTICES} vertices are unsupported (n={n})")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) != need:
        raise ParseError(
            f"graph6 body for n={n} needs {need} characters, got {len(data)}"
        )
    bits = []
    for v in data:
        for shift in range(5, -1, -1):
            bits.append(v >> shift & 1)
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 body")
    masks = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos += 1
    return Graph._from_masks(n, masks)


# ---------------------------------------------------------------------------
# edge-list text and JSON

def graph_to_edge_text(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_edge_text(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise ParseError("edge-list input must start with an n=<int> header", line=lineno)
            try:
                n = int(line[2:], 10)
            except ValueError:
                raise ParseError(f"bad order header {line!r}", line=lineno) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v' pair, got {line!r}", line=lineno)
        try:
            u, v = int(parts[0], 10), int(parts[1], 10)
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line=lineno) from None
        edges.append((u, v))
    if n is None:
        raise ParseError("empty edge-list input (missing n=<int> header)")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json_dict(data: dict) -> Graph:
    try:
        n = data["n"]
        edges = [(u, v) for u, v in data.get("edges", [])]
        return Graph(n, edges)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None


def load_graph_text(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph from text in any supported format.

    Auto-detection: a leading '{' means JSON, a leading 'n=' means
    edge-list text, anything else is treated as graph6.
    """
    body = text.strip()
    if fmt == "auto":
        if body.startswith("{"):
            fmt = "json"
        elif body.startswith("n="):
            fmt = "edgelist"
        else:
            fmt = "graph6"
    if fmt == "json":
        try:
            data = json.loads(body)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, offset=exc.colno) from None
        return graph_from_json_dict(data)
    if fmt == "edgelist":
        return graph_from_edge_text(body)
    if fmt == "graph6":
        return decode_graph6(body)
    raise ValueError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------------------
# complexes

def complex_to_facet_text(cx: SimplicialComplex) -> str:
    """Facet text form; the {|}-only complex serializes as a bare header.

    The void complex (no faces at all) has no text form and is rejected.
    """
    if cx.is_void:
        raise ValueError("the void complex has no facet-text form")
    lines = [f"n={cx.n}"]
    lines += [" ".join(map(str, facet)) for facet in cx.facets() if facet]
    return "\n".join(lines) + "\n"


def complex_from_facet_text(text: str) -> SimplicialComplex:
    n = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise ParseError("facet input must start with an n=<int> header", line=lineno)
            try:
                n = int(line[2:], 10)
            except ValueError:
                raise ParseError(f"bad header {line!r}", line=lineno) from None
            continue
        try:
            facets.append([int(p, 10) for p in line.split()])
        except ValueError:
            raise ParseError(f"non-integer label in {line!r}", line=lineno) from None
    if n is None:
        raise ParseError("empty complex input (missing n=<int> header)")
    try:
        return SimplicialComplex.from_facets(n, facets)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def complex_to_json_dict(cx: SimplicialComplex) -> dict:
    if cx.is_void:
        return {"n": cx.n, "facets": [], "void": True}
    return {"n": cx.n, "facets": [list(f) for f in cx.facets() if f]}


def complex_from_json_dict(data: dict) -> SimplicialComplex:
    try:
        return SimplicialComplex.from_facets(data["n"], data.get("facets", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad complex JSON: {exc}") from None


def load_complex_text(text: str, fmt: str = "auto") -> SimplicialComplex:
    body = text.strip()
    if fmt == "auto":
        fmt = "json" if body.startswith("{") else "facets"
    if fmt == "json":
        try:
            data = json.loads(body)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, offset=exc.colno) from None
        return complex_from_json_dict(data)
    if fmt == "facets":
        return complex_from_facet_text(body)
    raise ValueError(f"unknown complex format {fmt!r}")

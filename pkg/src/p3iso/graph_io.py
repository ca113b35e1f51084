"""Bit-exact graph6 parsing/emission and a human-readable edge-list format.

graph6: one printable line per graph; chars are 63..126, carrying 6-bit
groups. Header is n+63 for n <= 62, or '~' + 3 chars (18-bit n), or '~~' +
6 chars (36-bit n). The body packs the upper triangle of the adjacency
matrix in column-major order (bit (i, j) for i < j ordered by j then i),
zero-padded to a multiple of 6. Emission always uses the short header and
canonical zero padding; extended headers are accepted on parse only.

Edge list: a header line "n m" then m lines "u v" with 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .graphcore import Graph


class Graph6Error(ValueError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class NonCanonicalPadding(Graph6Error):
    """Padding bits were not zero; reported, fatal only in strict mode."""


class EdgeListError(ValueError):
    pass


class DuplicateEdge(EdgeListError):
    pass


class SelfLoop(EdgeListError):
    pass


class OutOfRange(EdgeListError):
    pass


class IoFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class Graph6Record:
    """A validated graph6 line: its text and the decoded order."""

    text: str
    order: int


def _check_chars(line: str) -> None:
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise MalformedHeader(f"character {ch!r} outside graph6 range 63..126")


def _decode_order(line: str) -> tuple[int, int]:
    """(n, index where the body starts)."""
    if not line:
        raise MalformedHeader("empty line")
    if line[0] != "~":
        return ord(line[0]) - 63, 1
    if len(line) >= 2 and line[1] == "~":
        chunk, start = line[2:8], 8
        if len(chunk) < 6:
            raise MalformedHeader("incomplete 8-byte order header")
    else:
        chunk, start = line[1:4], 4
        if len(chunk) < 3:
            raise MalformedHeader("incomplete 4-byte order header")
    n = 0
    for ch in chunk:
        n = (n << 6) | (ord(ch) - 63)
    return n, start


def graph6_record(line: str) -> Graph6Record:
    line = line.rstrip("\n")
    if not line:
        raise MalformedHeader("empty line")
    _check_chars(line)
    n, start = _decode_order(line)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(line) - start != need:
        raise TruncatedBits(
            f"order {n} needs {need} body characters, got {len(line) - start}")
    return Graph6Record(line, n)


def _parse_record(rec: Graph6Record) -> tuple[Graph, list[str]]:
    n = rec.order
    _, start = _decode_order(rec.text)
    warnings: list[str] = []
    bits = 0
    body = rec.text[start:]
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    nbits = n * (n - 1) // 2
    pad = len(body) * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        warnings.append("non-canonical padding (padding bits not zero)")
    bits >>= pad
    rows = [0] * n
    # column-major upper triangle: highest-order bit first is (0, 1)
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, rows), warnings


def parse_graph6(line: str, *, strict: bool = False) -> Graph:
    """Decode one graph6 line.

    Raises MalformedHeader/TruncatedBits on structural damage. Nonzero
    padding bits are tolerated (the payload is still unambiguous) unless
    ``strict``, in which case NonCanonicalPadding is raised.
    """
    g, warnings = _parse_record(graph6_record(line))
    if strict and warnings:
        raise NonCanonicalPadding("; ".join(warnings))
    return g


def emit_graph6(g: Graph) -> str:
    """Encode with the short-form header and canonical zero padding."""
    if g.n > 62:
        raise ValueError("emission is restricted to the short-form header (n <= 62)")
    nbits = g.n * (g.n - 1) // 2
    bits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | ((g.rows[i] >> j) & 1)
    pad = (-nbits) % 6
    bits <<= pad
    out = [chr(g.n + 63)]
    for k in range(((nbits + pad) // 6) - 1, -1, -1):
        out.append(chr(((bits >> (6 * k)) & 63) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" then m lines "u v" (1-based labels)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise EdgeListError("empty input")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.lstrip("-").isdigit() for tok in header):
        raise EdgeListError(f"bad header {lines[0]!r}, expected 'n m'")
    n, m = int(header[0]), int(header[1])
    if n < 0 or m < 0:
        raise EdgeListError("negative counts in header")
    if len(lines) - 1 != m:
        raise EdgeListError(f"header promises {m} edges, found {len(lines) - 1}")
    rows = [0] * n
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2 or not all(tok.lstrip("-").isdigit() for tok in toks):
            raise EdgeListError(f"bad edge line {ln!r}")
        u, v = int(toks[0]), int(toks[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise OutOfRange(f"edge {u} {v} outside 1..{n}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        u, v = u - 1, v - 1
        if (rows[u] >> v) & 1:
            raise DuplicateEdge(f"duplicate edge {u + 1} {v + 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def iter_graph6(lines: Iterable[str],
                on_diagnostic: Callable[[int, str], None] | None = None
                ) -> Iterator[Graph]:
    """Yield one graph per line, never buffering the stream.

    Malformed lines are reported through ``on_diagnostic`` (1-based line
    number, message) and skipped; the optional leading '>>graph6<<' marker
    is tolerated.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        if not line:
            continue
        try:
            g, warnings = _parse_record(graph6_record(line))
        except Graph6Error as exc:
            if on_diagnostic:
                on_diagnostic(lineno, str(exc))
            continue
        if warnings and on_diagnostic:
            for w in warnings:
                on_diagnostic(lineno, w)
        yield g


@dataclass
class StreamSummary:
    count: int
    diagnostics: list[tuple[int, str]]


def ingest_graph6_stream(reader, sink: Callable[[Graph], None]) -> StreamSummary:
    """Forward every parseable graph to ``sink`` with a running count.

    ``reader`` is any iterable of lines (file object, list, generator).
    I/O errors surface as IoFailure; parse problems become diagnostics.
    """
    diagnostics: list[tuple[int, str]] = []
    count = 0
    try:
        for g in iter_graph6(reader, on_diagnostic=lambda no, msg: diagnostics.append((no, msg))):
            sink(g)
            count += 1
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    return StreamSummary(count, diagnostics)

"""graph6 reading and writing (short form only, n <= 62)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import SimpleGraph

MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: str | bytes) -> SimpleGraph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.rstrip("\r\n")
    if line.startswith(">>graph6<<"):
        line = line[10:]
    if not line:
        raise Graph6Error("empty record", 0)
    first = ord(line[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid size byte {line[0]!r}", 0)
    n = first - 63
    need = _payload_len(n)
    body = line[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated record: expected {need} payload bytes, got {len(body)}", len(line))
    if len(body) > need:
        raise Graph6Error("trailing bytes after payload", 1 + need)
    bits: list[int] = []
    for k, ch in enumerate(body):
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise Graph6Error(f"byte {ch!r} out of range", 1 + k)
        for s in range(5, -1, -1):
            bits.append((x >> s) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise Graph6Error("non-zero padding bits", len(line) - 1)
    return SimpleGraph(n, edges)


def write_graph6(g: SimpleGraph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise ValueError(f"graph6 long form unsupported (n={n} > {MAX_ORDER})")
    bits = bytearray(_payload_len(n) * 6)
    for u, v in g.edges:
        i, j = (u, v) if u < v else (v, u)
        bits[j * (j - 1) // 2 + i] = 1
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(63 + x))
    return "".join(out)


def read_graph6_lines(stream: TextIO | Iterable[str], strict: bool = True) -> Iterator[tuple[int, SimpleGraph | Graph6Error]]:
    """Yield ``(line_number, graph)`` for each non-blank line.

    With ``strict=False`` malformed lines are yielded as the ``Graph6Error``
    instead of raising, so a scan can report them and carry on.
    """
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc.message}", exc.offset) from None
            yield lineno, exc

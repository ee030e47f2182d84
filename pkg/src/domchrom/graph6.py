"""graph6 encoding (nauty formats document), bit-exact in both directions."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
_MIN, _MAX = 63, 126


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` without header or trailing newline."""
    out = [_encode_size(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        mj = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | ((mj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record.  A leading ``>>graph6<<`` header and
    surrounding whitespace are ignored; anything else malformed raises
    :class:`Graph6Error` with the offending byte offset."""
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        base = len(HEADER)
        line = line[base:]
    if not line:
        raise Graph6Error("empty record", base)
    if line[0] in ":&":
        raise Graph6Error("sparse6/digraph6 records are not supported", base)

    for pos, ch in enumerate(line):
        if not _MIN <= ord(ch) <= _MAX:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", base + pos)

    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    elif len(line) >= 2 and line[1] == "~":
        if len(line) < 8:
            raise Graph6Error("truncated size field", base + len(line))
        n = 0
        for p in range(2, 8):
            n = (n << 6) | (ord(line[p]) - 63)
        pos = 8
    else:
        if len(line) < 4:
            raise Graph6Error("truncated size field", base + len(line))
        n = 0
        for p in range(1, 4):
            n = (n << 6) | (ord(line[p]) - 63)
        pos = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated adjacency data: need {need} bytes, have {len(body)}", base + len(line))
    if len(body) > need:
        raise Graph6Error("trailing data after adjacency bytes", base + pos + need)

    masks = [0] * n
    bit = 0
    i, j = 0, 1
    for off, ch in enumerate(body):
        val = ord(ch) - 63
        for s in range(5, -1, -1):
            b = (val >> s) & 1
            if bit >= nbits:
                if b:
                    raise Graph6Error("nonzero padding bits", base + pos + off)
                continue
            if b:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(masks))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield every record of a graph6 file, skipping blank and header-only lines."""
    with open(path, encoding="ascii") as fh:
        for line in fh:
            rec = line.strip()
            if not rec or rec == HEADER:
                continue
            yield parse_graph6(rec)


def write_graph6_file(path: str | Path, graphs, header: bool = False) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if header:
            fh.write(HEADER + "\n")
        for g in graphs:
            fh.write(write_graph6(g) + "\n")

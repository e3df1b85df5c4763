"""graph6 encoding and decoding.

Upper-triangle bits are taken column by column, ``(0,1), (0,2), (1,2), (0,3), ...``,
packed six to a byte with 63 added to each group.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import TextIO

from stlab.graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode(g: Graph) -> str:
    n = g.n
    rows = g.rows
    out = [_encode_size(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _byte(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise Graph6Error(f"character {text[pos]!r} outside the graph6 range", pos)
    return c - 63


def decode(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty input", base)
    pos = 0
    if s[0] == "~":
        if len(s) > 1 and s[1] == "~":
            if len(s) < 8:
                raise Graph6Error("truncated 36-bit size field", base + len(s))
            n = 0
            for i in range(2, 8):
                n = (n << 6) | _byte(s, i)
            pos = 8
        else:
            if len(s) < 4:
                raise Graph6Error("truncated 18-bit size field", base + len(s))
            n = 0
            for i in range(1, 4):
                n = (n << 6) | _byte(s, i)
            pos = 4
    else:
        n = _byte(s, 0)
        pos = 1
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", base + pos + min(len(body), need))
    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for b_idx, ch in enumerate(body):
        val = _byte(s, pos + b_idx)
        for shift in range(5, -1, -1):
            if bit >= total:
                if val >> shift & 1:
                    raise Graph6Error("non-zero padding bits", base + pos + b_idx)
                continue
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, rows, _trusted=True)


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(encode(g))
        out.write("\n")
        count += 1
    return count

"""graph6 codec for graphs with up to 62 vertices (short size form only).

A record is one byte n+63 followed by the upper-triangle adjacency bits
in column-major order, packed six per byte most-significant first, each
byte offset by 63.  Padding bits in the final byte must be zero.
"""

from .graphs import MAX_VERTICES, Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def emit_graph6(g):
    """Encode a graph as a graph6 record (bytes, no trailing newline)."""
    nbits = g.n * (g.n - 1) // 2
    out = bytearray([g.n + 63])
    bits = g.bits
    for base in range(0, nbits, 6):
        byte = 0
        for t in range(6):
            idx = base + t
            if idx < nbits and bits >> idx & 1:
                byte |= 1 << (5 - t)
        out.append(byte + 63)
    return bytes(out)


def parse_graph6(record):
    """Decode one graph6 record; accepts str or bytes, one trailing newline ok."""
    if isinstance(record, str):
        record = record.encode("ascii", errors="surrogateescape")
    if record.endswith(b"\n"):
        record = record[:-1]
    if record.endswith(b"\r"):
        record = record[:-1]
    if record.startswith(HEADER):
        record = record[len(HEADER) :]
    if not record:
        raise Graph6Error("empty graph6 record")
    for pos, byte in enumerate(record):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid graph6 byte {byte} at position {pos}")
    if record[0] == 126:
        raise Graph6Error("long size form not supported (n > 62)")
    n = record[0] - 63
    if n == 0:
        raise Graph6Error("graph6 record with zero vertices not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = record[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated graph6 record: n={n} needs {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing bytes after graph6 record for n={n}")
    bits = 0
    for k, byte in enumerate(body):
        chunk = byte - 63
        for t in range(6):
            if chunk >> (5 - t) & 1:
                idx = 6 * k + t
                if idx >= nbits:
                    raise Graph6Error("nonzero padding bits in final graph6 byte")
                bits |= 1 << idx
    return Graph(n, bits)


def graph6_str(g):
    return emit_graph6(g).decode("ascii")

"""BFTT truth-table files: b"BFTT0001", u32 n, u32 m (little endian), then m
tables of ceil(2^n / 8) bytes, bits packed LSB first by index."""
from __future__ import annotations

import struct

import numpy as np

from .truthtable import TruthTable

MAGIC = b"BFTT0001"
_HEADER = struct.Struct("<II")


class BFTTError(ValueError):
    pass


def dumps(tables) -> bytes:
    tables = list(tables)
    if not tables:
        raise ValueError("nothing to write")
    n = tables[0].n
    if any(t.n != n for t in tables):
        raise ValueError("tables have different variable counts")
    parts = [MAGIC, _HEADER.pack(n, len(tables))]
    for t in tables:
        parts.append(np.packbits(t.bits, bitorder="little").tobytes())
    return b"".join(parts)


def loads(data: bytes) -> list[TruthTable]:
    head = len(MAGIC) + _HEADER.size
    if len(data) < head or data[:len(MAGIC)] != MAGIC:
        raise BFTTError("missing BFTT0001 header")
    n, m = _HEADER.unpack_from(data, len(MAGIC))
    if n > 40 or m == 0:
        raise BFTTError("implausible header n=%d m=%d" % (n, m))
    size = ((1 << n) + 7) // 8
    if len(data) != head + m * size:
        raise BFTTError("expected %d bytes, found %d" % (head + m * size, len(data)))
    out = []
    for j in range(m):
        chunk = np.frombuffer(data, dtype=np.uint8, count=size, offset=head + j * size)
        bits = np.unpackbits(chunk, bitorder="little")[: 1 << n]
        out.append(TruthTable(bits, n))
    return out


def write_bftt(path, tables):
    with open(path, "wb") as fh:
        fh.write(dumps(tables))


def read_bftt(path) -> list[TruthTable]:
    with open(path, "rb") as fh:
        return loads(fh.read())

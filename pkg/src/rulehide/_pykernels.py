"""Pure-Python vertical bitset index.

Each item owns one arbitrary-precision int whose bit ``t - 1`` is set when
transaction ``t`` contains the item. Support of an itemset is the popcount
of the AND of its rows.
"""
from __future__ import annotations

from typing import Iterable, Sequence


def _pack(positions: list[int]) -> int:
    buf = bytearray((max(positions) >> 3) + 1 if positions else 0)
    for pos in positions:
        buf[pos >> 3] |= 1 << (pos & 7)
    return int.from_bytes(buf, "little")


class BitIndex:
    __slots__ = ("n", "m", "_rows", "_all")

    def __init__(self, rows: Sequence[Iterable[int]], m: int):
        self.n = len(rows)
        self.m = m
        positions: list[list[int]] = [[] for _ in range(m)]
        for pos, row in enumerate(rows):
            for item in row:
                positions[item].append(pos)
        self._rows = [_pack(p) for p in positions]
        self._all = (1 << self.n) - 1

    def _mask(self, itemset: Sequence[int]) -> int:
        rows = self._rows
        acc = self._all
        for item in itemset:
            acc &= rows[item]
            if not acc:
                break
        return acc

    def count(self, candidates: Sequence[Sequence[int]]) -> list[int]:
        mask = self._mask
        return [mask(c).bit_count() for c in candidates]

    def tids(self, itemset: Sequence[int]) -> list[int]:
        acc = self._mask(itemset)
        out = []
        while acc:
            low = acc & -acc
            out.append(low.bit_length())
            acc ^= low
        return out

    def discard(self, item: int, tid: int) -> None:
        self._rows[item] &= ~(1 << (tid - 1))

    def copy(self) -> "BitIndex":
        new = BitIndex.__new__(BitIndex)
        new.n, new.m, new._all = self.n, self.m, self._all
        new._rows = list(self._rows)
        return new

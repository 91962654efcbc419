"""Domino tabloids and their weight sums.

A domino tabloid of shape lambda and type mu fills each row of lambda with an
ordered sequence of horizontal dominoes whose lengths, over all rows, form
the multiset of parts of mu.  Its weight is the product of the lengths of the
leftmost domino in each row; w(shape, type) is the total weight over all
tabloids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition


class SizeMismatch(ValueError):
    """Shapes whose sizes disagree where equality is required."""


@dataclass(frozen=True)
class DominoTabloid:
    shape: Partition
    rows: tuple  # one tuple of domino lengths per row of the shape

    @property
    def weight(self) -> int:
        out = 1
        for row in self.rows:
            if row:
                out *= row[0]
        return out

    def render(self) -> str:
        body = "".join("[" + ",".join(str(d) for d in row) + "]" for row in self.rows)
        return f"{body} weight={self.weight}"


def _remove(avail: tuple, value: int) -> tuple:
    out = list(avail)
    out.remove(value)
    return tuple(out)


@lru_cache(maxsize=None)
def _w_rows(rows: tuple, avail: tuple) -> int:
    if not rows:
        return 1 if not avail else 0
    total = 0
    for a in sorted(set(avail), reverse=True):
        if a <= rows[0]:
            total += a * _w_fill(rows[0] - a, _remove(avail, a), rows[1:])
    return total


@lru_cache(maxsize=None)
def _w_fill(rem: int, avail: tuple, rows: tuple) -> int:
    if rem == 0:
        return _w_rows(rows, avail)
    total = 0
    for b in sorted(set(avail), reverse=True):
        if b <= rem:
            total += _w_fill(rem - b, _remove(avail, b), rows)
    return total


def w(shape, typ) -> int:
    """Total weight of all domino tabloids of the given shape and type.

    Computed by dynamic programming over (remaining rows, remaining multiset)
    without materializing tabloids; the memo tables persist across calls.
    """
    shape, typ = Partition(shape), Partition(typ)
    if shape.size != typ.size:
        raise SizeMismatch(f"|{shape}| = {shape.size} != |{typ}| = {typ.size}")
    return _w_rows(tuple(shape), tuple(typ))


def enumerate_tabloids(shape, typ) -> list[DominoTabloid]:
    """All distinct domino tabloids, deterministically ordered (rows filled
    left to right, longer dominoes tried first at each choice point)."""
    shape, typ = Partition(shape), Partition(typ)
    if shape.size != typ.size:
        raise SizeMismatch(f"|{shape}| = {shape.size} != |{typ}| = {typ.size}")
    out: list[DominoTabloid] = []

    def fill_rows(row_idx: int, avail: tuple, done: tuple):
        if row_idx == len(shape):
            if not avail:
                out.append(DominoTabloid(shape, done))
            return
        fill_one(row_idx, shape[row_idx], avail, (), done)

    def fill_one(row_idx: int, rem: int, avail: tuple, row: tuple, done: tuple):
        if rem == 0:
            fill_rows(row_idx + 1, avail, done + (row,))
            return
        for d in sorted(set(avail), reverse=True):
            if d <= rem:
                fill_one(row_idx, rem - d, _remove(avail, d), row + (d,), done)

    fill_rows(0, tuple(typ), ())
    return out

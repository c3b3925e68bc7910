"""Products of 2x2 boolean matrices over a dynamic array.

A matrix is packed into four bits, entry ``(r, c)`` at bit ``2r + c``; a
1x2 row vector uses bit ``c`` for column ``c``.  Each tree node keeps the
product of its range under all 16 entry masks, so masked searches cost the
same as plain ones.
"""

from __future__ import annotations

from typing import Sequence

from .errors import IndexOutOfRange

IDENTITY = 0b1001
ONES = 0b1111
ZERO = 0


def entry(m: int, r: int, c: int) -> int:
    return (m >> (2 * r + c)) & 1


def pack(rows: Sequence[Sequence[int]]) -> int:
    return sum(1 << (2 * r + c) for r in range(2) for c in range(2) if rows[r][c])


def unpack(m: int) -> list[list[int]]:
    return [[entry(m, r, c) for c in range(2)] for r in range(2)]


def _mul(a: int, b: int) -> int:
    out = 0
    for r in range(2):
        for c in range(2):
            if any(entry(a, r, k) and entry(b, k, c) for k in range(2)):
                out |= 1 << (2 * r + c)
    return out


def _vmul(x: int, m: int) -> int:
    out = 0
    for c in range(2):
        if any((x >> r) & 1 and entry(m, r, c) for r in range(2)):
            out |= 1 << c
    return out


MUL = [[_mul(a, b) for b in range(16)] for a in range(16)]
VMUL = [[_vmul(x, m) for m in range(16)] for x in range(4)]
_MASKS = range(16)


def multiply(a: int, b: int) -> int:
    return MUL[a][b]


def apply(x: int, m: int) -> int:
    """Row vector ``x`` times matrix ``m``."""
    return VMUL[x][m]


class MatrixProductTree:
    """Array ``sigma[1..length]`` with range products and masked prefix search."""

    def __init__(self, length: int, fill: int = ONES) -> None:
        if length < 0:
            raise IndexOutOfRange("negative length")
        self.length = length
        size = 1
        while size < max(length, 1):
            size *= 2
        self.size = size
        self.sigma = [IDENTITY] + [fill] * length
        pad = [IDENTITY & m for m in _MASKS]
        leaf = [fill & m for m in _MASKS]
        self.prod: list[list[int]] = [pad] * (2 * size)
        for i in range(length):
            self.prod[size + i] = list(leaf)
        for x in range(size - 1, 0, -1):
            self._pull(x)

    def _pull(self, x: int) -> None:
        left, right = self.prod[2 * x], self.prod[2 * x + 1]
        self.prod[x] = [MUL[left[m]][right[m]] for m in _MASKS]

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.length:
            raise IndexOutOfRange(f"index {i} outside 1..{self.length}")

    def update(self, i: int, sigma: int) -> None:
        self._check(i)
        self.sigma[i] = sigma
        x = self.size + i - 1
        self.prod[x] = [sigma & m for m in _MASKS]
        x //= 2
        while x:
            self._pull(x)
            x //= 2

    def product(self, i: int, j: int, mask: int = ONES) -> int:
        """``sigma_i ... sigma_j`` (each entry-masked); identity when ``j == i - 1``."""
        if j == i - 1 and 1 <= i <= self.length + 1:
            return IDENTITY
        self._check(i)
        self._check(j)
        if j < i:
            raise IndexOutOfRange(f"empty range {i}..{j}")
        lo, hi = i - 1 + self.size, j + self.size
        left, right = IDENTITY, IDENTITY
        while lo < hi:
            if lo & 1:
                left = MUL[left][self.prod[lo][mask]]
                lo += 1
            if hi & 1:
                hi -= 1
                right = MUL[self.prod[hi][mask]][right]
            lo //= 2
            hi //= 2
        return MUL[left][right]

    def search(self, x: int, mask: int, i: int) -> int:
        """Largest ``j >= i - 1`` with ``x (sigma_i & mask) ... (sigma_j & mask) != 0``.

        A zero ``x`` yields ``i - 1``.
        """
        if not 1 <= i <= self.length + 1:
            raise IndexOutOfRange(f"start {i} outside 1..{self.length + 1}")
        if x == 0 or i == self.length + 1:
            return i - 1
        stop = self._search(1, 1, self.size, i, mask, x)[1]
        return self.length if stop is None or stop > self.length else stop - 1

    def _search(self, node: int, lo: int, hi: int, i: int, mask: int, v: int) -> tuple[int, int | None]:
        if hi < i:
            return v, None
        if lo >= i:
            w = VMUL[v][self.prod[node][mask]]
            if w:
                return w, None
            if lo == hi:
                return v, lo
            # the vector dies inside this node: find the leaf
            while node < self.size:
                left = 2 * node
                w = VMUL[v][self.prod[left][mask]]
                mid = (lo + hi) // 2
                if w:
                    v, node, lo = w, left + 1, mid + 1
                else:
                    node, hi = left, mid
            return v, lo
        mid = (lo + hi) // 2
        v, stop = self._search(2 * node, lo, mid, i, mask, v)
        if stop is not None:
            return v, stop
        return self._search(2 * node + 1, mid + 1, hi, i, mask, v)

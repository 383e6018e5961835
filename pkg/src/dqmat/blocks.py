"""Block shapes (n_1, ..., n_q) and helpers for block triangular matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .fields import Field
from .linalg import Matrix


@dataclass(frozen=True)
class BlockType:
    """The tuple (n_1, ..., n_q) of diagonal block sizes, with partial sums N_i."""

    parts: tuple

    def __post_init__(self):
        if not self.parts or any(int(p) < 1 for p in self.parts):
            raise InvalidInput(f"block sizes must be positive integers, got {self.parts}")
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))

    @property
    def q(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def partial_sums(self) -> tuple:
        sums = []
        total = 0
        for p in self.parts:
            total += p
            sums.append(total)
        return tuple(sums)

    @property
    def offsets(self) -> tuple:
        """(0, N_1, ..., N_q): start index of each block plus the final n."""
        return (0,) + self.partial_sums

    def block_of(self, index: int) -> int:
        """Block number (0-based) containing a given row/column index."""
        for b, end in enumerate(self.partial_sums):
            if index < end:
                return b
        raise InvalidInput(f"index {index} outside 0..{self.n - 1}")

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"BlockType{self.parts}"


def submatrix(m: Matrix, bt: BlockType, bi: int, bj: int) -> Matrix:
    """The (bi, bj) block of m with respect to bt (0-based block indices)."""
    offs = bt.offsets
    r0, r1 = offs[bi], offs[bi + 1]
    c0, c1 = offs[bj], offs[bj + 1]
    rows = [[m[i, j] for j in range(c0, c1)] for i in range(r0, r1)]
    return Matrix.from_rows(m.field, rows)


def embed_block(field: Field, bt: BlockType, bi: int, bj: int, block: Matrix) -> Matrix:
    """Place `block` at block position (bi, bj) of an n x n matrix, zeros elsewhere."""
    n = bt.n
    offs = bt.offsets
    ent = [field.zero] * (n * n)
    for i in range(block.nrows):
        for j in range(block.ncols):
            ent[(offs[bi] + i) * n + offs[bj] + j] = block[i, j]
    return Matrix(field, n, n, tuple(ent))


def is_block_upper(m: Matrix, bt: BlockType) -> bool:
    """True when every entry strictly below the block diagonal vanishes."""
    zero = m.field.zero
    n = bt.n
    for i in range(n):
        bi = bt.block_of(i)
        row_start = i * n
        for j in range(bt.offsets[bi]):
            if m.entries[row_start + j] != zero:
                return False
    return True


def diagonal_blocks_vanish(m: Matrix, bt: BlockType) -> bool:
    """True when every diagonal block of m is zero (strictly block upper part only)."""
    zero = m.field.zero
    n = bt.n
    offs = bt.offsets
    for b in range(bt.q):
        for i in range(offs[b], offs[b + 1]):
            for j in range(offs[b], offs[b + 1]):
                if m.entries[i * n + j] != zero:
                    return False
    return True

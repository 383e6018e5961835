"""Constructors for the canonical algebras used throughout the package.

Covers the finitely many canonical maximum-dimension commutative subalgebras
C^k_n of M_n(K), block-type algebras with prescribed diagonal blocks, full
type algebras, maximum-dimension examples for given (n, q), and two named
hardcoded examples used by the test corpus.

Constructed bases are emitted in a fixed deterministic order (identity and
strip elements first, then matrix units by (i, j) lexicographic) so that
serialized documents are bit-stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MatSubalgebra
from .blocks import BlockType, embed_block
from .errors import InadmissibleId, InvalidInput, InvalidQ, ShapeMismatch
from .fields import Field
from .linalg import Matrix


def admissible_k(n: int) -> list:
    """Canonical indices k available for block size n.

    One representative per conjugacy class of maximum-dimension commutative
    subalgebras of M_n: a single class for n = 1 and even n >= 4, two classes
    for n = 2 and odd n >= 5, five classes for n = 3.
    """
    if n < 1:
        raise InvalidInput("block size must be positive")
    if n == 1:
        return [1]
    if n == 2:
        return [1, 2]
    if n == 3:
        return [1, 2, 3, 4, 5]
    return [1] if n % 2 == 0 else [1, 2]


@dataclass(frozen=True)
class CanonicalBlockId:
    """Pair (n, k) naming the canonical commutative algebra C^k_n."""

    n: int
    k: int

    def __post_init__(self):
        if self.k not in admissible_k(self.n):
            raise InadmissibleId(f"no canonical algebra with (n, k) = ({self.n}, {self.k})")

    def as_tuple(self) -> tuple:
        return (self.n, self.k)


def _corner_algebra(field: Field, n: int, r: int) -> MatSubalgebra:
    # K*I_n plus the full upper-right r x (n - r) corner
    basis = [Matrix.identity(field, n)]
    for i in range(r):
        for j in range(r, n):
            basis.append(Matrix.unit(field, n, i, j))
    return MatSubalgebra.from_matrices(field, n, basis, check=False)


def canonical_commutative(field: Field, block_id) -> MatSubalgebra:
    """The canonical maximum-dimension commutative algebra C^k_n over `field`.

    Every output has dimension floor(n^2/4) + 1, is commutative, and equals
    its own centralizer in M_n.
    """
    if not isinstance(block_id, CanonicalBlockId):
        block_id = CanonicalBlockId(*block_id)
    n, k = block_id.n, block_id.k
    if n == 1:
        return MatSubalgebra.from_matrices(field, 1, [Matrix.identity(field, 1)], check=False)
    if n == 2:
        if k == 1:
            return _corner_algebra(field, 2, 1)
        return MatSubalgebra.from_matrices(
            field, 2, [Matrix.unit(field, 2, 0, 0), Matrix.unit(field, 2, 1, 1)], check=False)
    if n == 3:
        if k == 1:
            return _corner_algebra(field, 3, 1)
        if k == 2:
            return _corner_algebra(field, 3, 2)
        if k == 3:
            shift = Matrix.unit(field, 3, 0, 1) + Matrix.unit(field, 3, 1, 2)
            basis = [Matrix.identity(field, 3), shift, Matrix.unit(field, 3, 0, 2)]
            return MatSubalgebra.from_matrices(field, 3, basis, check=False)
        if k == 4:
            basis = [Matrix.unit(field, 3, 0, 0) + Matrix.unit(field, 3, 1, 1),
                     Matrix.unit(field, 3, 2, 2), Matrix.unit(field, 3, 0, 1)]
            return MatSubalgebra.from_matrices(field, 3, basis, check=False)
        basis = [Matrix.unit(field, 3, i, i) for i in range(3)]
        return MatSubalgebra.from_matrices(field, 3, basis, check=False)
    # n >= 4: corner shapes only; k = 2 (odd n) puts the wide side on the left
    r = n // 2 if k == 1 else n // 2 + 1
    return _corner_algebra(field, n, r)


def block_type_algebra(bt: BlockType, blocks) -> MatSubalgebra:
    """Block triangular algebra with the given independent diagonal blocks.

    Diagonal strip i carries blocks[i], every off-diagonal block (i, j) with
    i < j is the full M_{n_i x n_j}, and everything below vanishes; the
    dimension is sum(dim blocks[i]) + sum_{i<j} n_i * n_j.
    """
    blocks = list(blocks)
    if len(blocks) != bt.q:
        raise ShapeMismatch(f"{bt.q} blocks expected, got {len(blocks)}")
    field = blocks[0].field
    for part, block in zip(bt.parts, blocks):
        if block.n != part:
            raise ShapeMismatch(f"block of size {block.n} placed in a slot of size {part}")
        if block.field != field:
            raise ShapeMismatch("blocks over different fields")
    n = bt.n
    basis = []
    for i, block in enumerate(blocks):
        for m in block.basis:
            basis.append(embed_block(field, bt, i, i, m))
    for i in range(bt.q):
        for j in range(i + 1, bt.q):
            for r in range(bt.parts[i]):
                for c in range(bt.parts[j]):
                    basis.append(Matrix.unit(field, n, bt.offsets[i] + r, bt.offsets[j] + c))
    return MatSubalgebra.from_matrices(field, n, basis, check=False)


def full_matrix_algebra(field: Field, n: int) -> MatSubalgebra:
    units = [Matrix.unit(field, n, i, j) for i in range(n) for j in range(n)]
    return MatSubalgebra.from_matrices(field, n, units, check=False)


def full_type_algebra(field: Field, bt: BlockType) -> MatSubalgebra:
    """Block-type algebra whose diagonal blocks are the full M_{n_i}."""
    return block_type_algebra(bt, [full_matrix_algebra(field, p) for p in bt.parts])


def max_dim_example(field: Field, n: int, q: int) -> MatSubalgebra:
    """A D_q subalgebra of M_n of the maximum possible dimension.

    Takes the nondecreasing type with q - r parts floor(n/q) and r parts
    floor(n/q) + 1 (r the division remainder), with the canonical k = 1
    commutative algebra in every diagonal block.
    """
    if not 2 <= q <= n:
        raise InvalidQ(f"need 2 <= q <= n, got q={q}, n={n}")
    f, r = n // q, n % q
    parts = (f,) * (q - r) + (f + 1,) * r
    bt = BlockType(parts)
    blocks = [canonical_commutative(field, (p, 1)) for p in parts]
    return block_type_algebra(bt, blocks)


# -- named hardcoded examples ---------------------------------------------------

M2_DUAL_NUMBERS = "m2-dual-numbers"
NINE_BY_NINE = "nine-by-nine"
EXAMPLE_NAMES = (M2_DUAL_NUMBERS, NINE_BY_NINE)


def _m2_dual_numbers(field: Field) -> MatSubalgebra:
    # 2x2 matrices over K[x]/(x^2), each dual number a + b*xbar written as the
    # 2x2 block [[a, b], [0, a]]; an 8-dimensional subalgebra of M_4
    basis = []
    for i in range(2):
        for j in range(2):
            a_part = Matrix.unit(field, 4, 2 * i, 2 * j) + Matrix.unit(field, 4, 2 * i + 1, 2 * j + 1)
            basis.append(a_part)
            basis.append(Matrix.unit(field, 4, 2 * i, 2 * j + 1))
    return MatSubalgebra.from_matrices(field, 4, basis, check=False)


_NINE_BY_NINE_PATTERN = {
    "a": [(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7), (8, 8), (9, 9)],
    "b": [(1, 2), (4, 5), (7, 8)],
    "c": [(1, 3), (4, 6), (7, 9)],
    "d": [(2, 3), (5, 6), (8, 9)],
    "e": [(1, 4), (2, 5), (3, 6)],
    "f": [(1, 5)],
    "g": [(1, 6)],
    "h": [(2, 6)],
    "p": [(4, 7), (5, 8), (6, 9)],
    "q": [(4, 8)],
    "r": [(4, 9)],
    "s": [(5, 9)],
    "t": [(1, 7), (2, 8), (3, 9)],
    "u": [(1, 8)],
    "v": [(1, 9)],
    "w": [(2, 9)],
}


def _nine_by_nine(field: Field) -> MatSubalgebra:
    """The 16-parameter subalgebra of U_9(K): constant-diagonal 3x3 triangular
    matrices whose entries are themselves constant-diagonal 3x3 triangular.

    Lie solvable of index two but satisfies no product of two commutators.
    The transcription is self-checked for multiplicative closure on build.
    """
    basis = []
    for positions in _NINE_BY_NINE_PATTERN.values():
        m = Matrix.zero(field, 9)
        for (i, j) in positions:
            m = m + Matrix.unit(field, 9, i - 1, j - 1)
        basis.append(m)
    return MatSubalgebra.from_matrices(field, 9, basis, check=True)


def named_example(field: Field, name: str) -> MatSubalgebra:
    if name == M2_DUAL_NUMBERS:
        return _m2_dual_numbers(field)
    if name == NINE_BY_NINE:
        return _nine_by_nine(field)
    raise InvalidInput(f"unknown example {name!r}; available: {', '.join(EXAMPLE_NAMES)}")

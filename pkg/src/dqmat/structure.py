"""D_q structure theory: minimal q, identity checking, block triangulation,
type detection, and the maximality decision.

An algebra is D_q when every product of q commutators vanishes.  The minimal
such q for a subalgebra of M_n(K) equals the nilpotency index of its
commutator ideal, which caps it at n.  The triangulation below follows the
filtration 0 < I^(q-1)V < ... < IV < V of column spaces of a nilpotent ideal:
an adapted basis makes the algebra block upper triangular and pushes the
ideal strictly above the block diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    IdealSpace,
    MatSubalgebra,
    commutator,
    commutator_ideal,
    conjugate_algebra,
    conjugate_ideal,
    centralizer,
    is_commutative,
    nilpotency_index,
)
from .blocks import BlockType, diagonal_blocks_vanish, embed_block, is_block_upper, submatrix
from .errors import (
    BudgetExceeded,
    InvalidInput,
    NotAnIdeal,
    NotNilpotent,
    ZeroIdeal,
)
from .linalg import Matrix, Subspace

DEFAULT_BRUTE_BUDGET = 10 ** 6


@dataclass
class TriangulationResult:
    """Outcome of a block triangulation along a nilpotent ideal.

    `conjugated` = conjugator^-1 * a * conjugator is block upper triangular
    with respect to `block_type`, and the conjugated ideal is strictly block
    upper; `filtration_dims` are the dimensions of I^(q-1)V < ... < IV < V.
    """

    conjugator: Matrix
    block_type: BlockType
    conjugated: MatSubalgebra
    conjugated_ideal: IdealSpace
    filtration_dims: tuple


def min_dq(a: MatSubalgebra):
    """Minimal q for which a satisfies the q-fold commutator-product identity.

    Commutative algebras give 1; otherwise this is the nilpotency index of the
    commutator ideal, and None means the algebra satisfies no such identity.
    """
    if is_commutative(a):
        return 1
    return nilpotency_index(commutator_ideal(a))


def check_dq_bruteforce(a: MatSubalgebra, q: int, budget: int = DEFAULT_BRUTE_BUDGET) -> bool:
    """Evaluate the product of q commutators over all 2q-tuples of basis elements.

    Multilinearity in each slot makes basis tuples sufficient.  Internally the
    distinct nonzero commutator values are multiplied level by level, which
    covers exactly the same set of products.
    """
    if q < 1:
        raise InvalidInput("q must be >= 1")
    d = a.dim
    if d ** (2 * q) > budget:
        raise BudgetExceeded(f"{d}^{2 * q} tuple evaluations exceed the budget {budget}")
    basis = a.echelon_basis()
    comms = set()
    for i, x in enumerate(basis):
        for y in basis[i + 1:]:
            c = commutator(x, y)
            if not c.is_zero():
                # [y, x] = -[x, y]; sign never affects whether a product vanishes
                comms.add(c)
    level = list(comms)
    if q == 1 or not level:
        return not level
    for _ in range(q - 1):
        nxt = set()
        for prod in level:
            for c in comms:
                pc = prod * c
                if not pc.is_zero():
                    nxt.add(pc)
        level = list(nxt)
        if not level:
            return True
    return not level


def _validate_ideal(a: MatSubalgebra, ideal: IdealSpace):
    if ideal.space.ambient_dim != a.n ** 2 or ideal.parent.field != a.field:
        raise NotAnIdeal("ideal lives in a different matrix algebra")
    if not a.space.contains(ideal.space):
        raise NotAnIdeal("ideal is not contained in the algebra")
    mats = ideal.matrices()
    for b in a.echelon_basis():
        for x in mats:
            if not ideal.space.contains_vector((b * x).entries) or \
               not ideal.space.contains_vector((x * b).entries):
                raise NotAnIdeal("subspace is not closed under multiplication by the algebra")


def _column_space_power_filtration(a: MatSubalgebra, ideal: IdealSpace, q: int) -> list:
    """[I^(q-1)V, ..., IV, V] as subspaces of K^n, smallest first."""
    field, n = a.field, a.n
    mats = ideal.matrices()
    spaces = [Subspace.full(field, n)]
    for _ in range(q - 1):
        prev = spaces[-1]
        images = [m.apply(v) for m in mats for v in prev.rows]
        spaces.append(Subspace.span(field, n, images))
    spaces.reverse()
    return spaces


def block_triangulate(a: MatSubalgebra, ideal: IdealSpace) -> TriangulationResult:
    """Conjugate a into block upper triangular form along a nilpotent ideal.

    The block sizes are the dimension jumps of the filtration I^(q-i)V; the
    adapted basis is extended deterministically, drawing candidates first from
    the echelon basis of each filtration space and then from the standard
    basis vectors in index order.
    """
    field, n = a.field, a.n
    if ideal.is_zero():
        raise ZeroIdeal("triangulation needs a nonzero nilpotent ideal")
    _validate_ideal(a, ideal)
    q = nilpotency_index(ideal)
    if q is None:
        raise NotNilpotent("ideal powers stabilize at a nonzero subspace")
    filtration = _column_space_power_filtration(a, ideal, q)
    dims = tuple(s.dim for s in filtration)
    parts = tuple(d - prev for d, prev in zip(dims, (0,) + dims[:-1]))
    bt = BlockType(parts)

    chosen = []
    chosen_space = Subspace.zero_space(field, n)
    std = [tuple(field.one if k == i else field.zero for k in range(n)) for i in range(n)]
    for space in filtration:
        for candidate in list(space.rows) + std:
            if chosen_space.dim == space.dim:
                break
            if space.contains_vector(candidate) and not chosen_space.contains_vector(candidate):
                chosen.append(candidate)
                chosen_space = Subspace.span(field, n, chosen)
        assert chosen_space.dim == space.dim
    assert len(chosen) == n

    # adapted basis vectors become the columns of the conjugator
    x = Matrix(field, n, n, tuple(chosen[j][i] for i in range(n) for j in range(n)))
    conj = conjugate_algebra(a, x)
    conj_ideal = conjugate_ideal(ideal, x, conj)
    for m in conj.echelon_basis():
        assert is_block_upper(m, bt)
    for m in conj_ideal.matrices():
        assert is_block_upper(m, bt) and diagonal_blocks_vanish(m, bt)
    return TriangulationResult(x, bt, conj, conj_ideal, dims)


def detect_type(a: MatSubalgebra):
    """The tuple (n_1, ..., n_q) read off the commutator-ideal filtration.

    This is a conjugation invariant; for maximal D_q algebras it is the unique
    type of the conjugated block triangular form.  Returns None when the
    algebra satisfies no q-fold identity, and (n,) for commutative input.
    """
    q = min_dq(a)
    if q is None:
        return None
    if q == 1:
        return BlockType((a.n,))
    ideal = commutator_ideal(a)
    filtration = _column_space_power_filtration(a, ideal, q)
    dims = [s.dim for s in filtration]
    parts = tuple(d - prev for d, prev in zip(dims, [0] + dims[:-1]))
    return BlockType(parts)


def diagonal_block_algebras(conj: MatSubalgebra, bt: BlockType) -> list:
    """The algebras of diagonal blocks of a block upper triangular algebra.

    Projection onto a diagonal block is an algebra homomorphism on block
    triangular matrices, so each image is a unital subalgebra of M_{n_i}.
    """
    out = []
    for i in range(bt.q):
        mats = [submatrix(m, bt, i, i) for m in conj.echelon_basis()]
        space = Subspace.span(conj.field, bt.parts[i] ** 2, [m.entries for m in mats])
        out.append(MatSubalgebra(conj.field, bt.parts[i], space, unital=True))
    return out


def strip_structure_matches(conj: MatSubalgebra, bt: BlockType, blocks: list) -> bool:
    """Whether conj equals the block-type algebra over its own diagonal blocks.

    The containment conj <= (strips + full off-diagonal blocks) always holds,
    so equality amounts to the dimension count plus explicit strip membership.
    """
    field = conj.field
    expected = sum(b.dim for b in blocks)
    for i in range(bt.q):
        for j in range(i + 1, bt.q):
            expected += bt.parts[i] * bt.parts[j]
    if conj.dim != expected:
        return False
    for i, block in enumerate(blocks):
        for m in block.echelon_basis():
            if not conj.contains(embed_block(field, bt, i, i, m)):
                return False
    for i in range(bt.q):
        for j in range(i + 1, bt.q):
            for r in range(bt.parts[i]):
                for c in range(bt.parts[j]):
                    unit = Matrix.unit(field, bt.n, bt.offsets[i] + r, bt.offsets[j] + c)
                    if not conj.contains(unit):
                        return False
    return True


def is_maximal_dq(a: MatSubalgebra, q=None):
    """Decide maximality among D_q subalgebras of M_n(K).

    Triangulates along the commutator ideal and answers True exactly when the
    conjugated algebra is the full block-type algebra over its diagonal blocks
    and every diagonal block is maximal commutative (equal to its own
    centralizer).  Returns (verdict, triangulation witness, blocks_checked);
    blocks_checked is False when the strip-structure test already failed, so
    the per-block maximal-commutativity checks never ran.

    An algebra satisfying no q-fold identity at all is not a D_q subalgebra,
    hence not a maximal one: the answer is (False, None, False).
    """
    if q is None:
        q = min_dq(a)
    if q is None:
        return False, None, False
    if q < 2:
        raise InvalidInput("maximality test needs a noncommutative algebra (q >= 2)")
    ideal = commutator_ideal(a)
    tri = block_triangulate(a, ideal)
    blocks = diagonal_block_algebras(tri.conjugated, tri.block_type)
    if not strip_structure_matches(tri.conjugated, tri.block_type, blocks):
        return False, tri, False
    for block in blocks:
        if not is_commutative(block) or centralizer(block) != block:
            return False, tri, True
    return True, tri, True

"""Unital subalgebras of M_n(K): closures, ideals, radicals, centralizers.

A MatSubalgebra is a multiplicatively closed subspace of K^(n*n) (row-major
flattening).  All operations are pure; saturation loops keep only local state
and terminate because dimensions are bounded by n^2.
"""

from __future__ import annotations

from .errors import (
    ClosureViolation,
    DimensionMismatch,
    NotInAlgebra,
    UnsupportedCharacteristic,
)
from .fields import Field
from .linalg import Matrix, Subspace, commutator, matrix_invert, nullspace


class MatSubalgebra:
    """A unital subalgebra of M_n(K), stored as a canonical subspace of K^(n*n).

    `basis` keeps the presentation-order basis used for serialization; `space`
    is the canonical echelon form used for every equality and membership test.
    """

    __slots__ = ("field", "n", "space", "unital", "basis")

    def __init__(self, field: Field, n: int, space: Subspace, unital: bool,
                 basis: tuple | None = None):
        assert space.ambient_dim == n * n
        self.field = field
        self.n = n
        self.space = space
        self.unital = unital
        if basis is None:
            basis = tuple(Matrix.from_vector(field, n, n, row) for row in space.rows)
        self.basis = basis

    @classmethod
    def from_matrices(cls, field: Field, n: int, mats, *, check: bool = True) -> "MatSubalgebra":
        """Wrap an already multiplicatively closed span; verifies closure by default."""
        mats = tuple(mats)
        for m in mats:
            if m.nrows != n or m.ncols != n or m.field != field:
                raise DimensionMismatch("generator of wrong shape or field")
        space = Subspace.span(field, n * n, [m.entries for m in mats])
        alg = cls(field, n, space, unital=space.contains_vector(Matrix.identity(field, n).entries),
                  basis=mats if mats else None)
        if check:
            defect = alg.closure_defect()
            if defect is not None:
                i, j = defect
                raise ClosureViolation(
                    f"product of basis elements {i} and {j} leaves the span")
        return alg

    @property
    def dim(self) -> int:
        return self.space.dim

    def echelon_basis(self) -> tuple:
        return tuple(Matrix.from_vector(self.field, self.n, self.n, row)
                     for row in self.space.rows)

    def contains(self, m: Matrix) -> bool:
        if m.nrows != self.n or m.ncols != self.n or m.field != self.field:
            return False
        return self.space.contains_vector(m.entries)

    def closure_defect(self):
        """Pair (i, j) of echelon-basis indices with b_i*b_j outside the span, or None."""
        basis = self.echelon_basis()
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                if not self.space.contains_vector((a * b).entries):
                    return (i, j)
        return None

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatSubalgebra) and self.field == other.field
                and self.n == other.n and self.space == other.space)

    def __hash__(self) -> int:
        return hash((self.n, self.space))

    def __repr__(self) -> str:
        return f"MatSubalgebra(n={self.n}, dim={self.dim}, field={self.field!r})"


class IdealSpace:
    """A two-sided ideal of a MatSubalgebra, stored as a subspace of K^(n*n)."""

    __slots__ = ("parent", "space", "saturation_rounds")

    def __init__(self, parent: MatSubalgebra, space: Subspace, saturation_rounds: int = 0):
        self.parent = parent
        self.space = space
        self.saturation_rounds = saturation_rounds

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_zero(self) -> bool:
        return self.space.is_zero()

    def matrices(self) -> tuple:
        p = self.parent
        return tuple(Matrix.from_vector(p.field, p.n, p.n, row) for row in self.space.rows)

    def __repr__(self) -> str:
        return f"IdealSpace(n={self.parent.n}, dim={self.dim})"


def _matrices_of(x) -> tuple:
    if isinstance(x, MatSubalgebra):
        return x.echelon_basis()
    if isinstance(x, IdealSpace):
        return x.matrices()
    raise TypeError(f"expected MatSubalgebra or IdealSpace, got {type(x).__name__}")


def _ambient_of(x):
    if isinstance(x, MatSubalgebra):
        return x.field, x.n
    return x.parent.field, x.parent.n


def unital_closure(field: Field, n: int, generators) -> MatSubalgebra:
    """Smallest unital subalgebra of M_n containing the generators.

    Saturates span{I, generators} under pairwise products until the dimension
    stabilizes; at most n^2 rounds since the dimension grows strictly.
    """
    gens = list(generators)
    for g in gens:
        if g.nrows != n or g.ncols != n or g.field != field:
            raise DimensionMismatch("generator of wrong shape or field")
    vectors = [Matrix.identity(field, n).entries] + [g.entries for g in gens]
    space = Subspace.span(field, n * n, vectors)
    while True:
        basis = [Matrix.from_vector(field, n, n, row) for row in space.rows]
        products = [(a * b).entries for a in basis for b in basis]
        bigger = Subspace.span(field, n * n, list(space.rows) + products)
        if bigger.dim == space.dim:
            break
        space = bigger
    return MatSubalgebra(field, n, space, unital=True)


def product_space(a, b) -> Subspace:
    """span{x*y : x in basis(a), y in basis(b)} in canonical form."""
    fa, na = _ambient_of(a)
    fb, nb = _ambient_of(b)
    if fa != fb or na != nb:
        raise DimensionMismatch("operands live in different matrix algebras")
    mats_a, mats_b = _matrices_of(a), _matrices_of(b)
    return Subspace.span(fa, na * na, [(x * y).entries for x in mats_a for y in mats_b])


def two_sided_ideal(parent: MatSubalgebra, seed) -> IdealSpace:
    """Smallest two-sided ideal of `parent` containing the seed matrices."""
    seed = list(seed)
    for s in seed:
        if not parent.contains(s):
            raise NotInAlgebra("seed matrix lies outside the parent algebra")
    space = Subspace.span(parent.field, parent.n ** 2, [s.entries for s in seed])
    basis = parent.echelon_basis()
    rounds = 0
    while True:
        mats = [Matrix.from_vector(parent.field, parent.n, parent.n, row)
                for row in space.rows]
        products = []
        for a in basis:
            for x in mats:
                products.append((a * x).entries)
                products.append((x * a).entries)
        bigger = Subspace.span(parent.field, parent.n ** 2, list(space.rows) + products)
        rounds += 1
        if bigger.dim == space.dim:
            return IdealSpace(parent, space, rounds)
        space = bigger


def commutator_ideal(a: MatSubalgebra) -> IdealSpace:
    """Two-sided ideal generated by all commutators; basis pairs suffice by bilinearity."""
    basis = a.echelon_basis()
    seeds = []
    for i, x in enumerate(basis):
        for y in basis[i + 1:]:
            c = commutator(x, y)
            if not c.is_zero():
                seeds.append(c)
    return two_sided_ideal(a, seeds)


def ideal_power(ideal: IdealSpace, k: int) -> Subspace:
    """The subspace spanned by k-fold products of ideal elements (left to right)."""
    assert k >= 1
    space = ideal.space
    field, n = _ambient_of(ideal)
    base = ideal.matrices()
    for _ in range(k - 1):
        mats = [Matrix.from_vector(field, n, n, row) for row in space.rows]
        space = Subspace.span(field, n * n, [(x * y).entries for x in mats for y in base])
    return space


def nilpotency_index(ideal: IdealSpace):
    """Least q >= 1 with ideal^q = 0; None when the power sequence stabilizes nonzero.

    The powers are weakly decreasing subspaces (ideals absorb), so either some
    power vanishes or two consecutive powers coincide; both happen within n^2
    steps.
    """
    field, n = _ambient_of(ideal)
    space = ideal.space
    base = ideal.matrices()
    q = 1
    while True:
        if space.is_zero():
            return q
        mats = [Matrix.from_vector(field, n, n, row) for row in space.rows]
        nxt = Subspace.span(field, n * n, [(x * y).entries for x in mats for y in base])
        if nxt == space:
            return None
        space = nxt
        q += 1


def radical(a: MatSubalgebra) -> IdealSpace:
    """Jacobson radical via the trace bilinear form (valid in char 0 or p > n).

    J(a) = {x in a : trace(x*b) = 0 for every basis element b}; computed as the
    kernel of the Gram matrix of the trace form on a.  The result is verified
    post hoc to be a nilpotent two-sided ideal.
    """
    f = a.field
    if f.is_prime_field and f.p <= a.n:
        raise UnsupportedCharacteristic(
            f"trace-form radical needs characteristic 0 or p > n, got p={f.p}, n={a.n}")
    basis = a.echelon_basis()
    d = len(basis)
    gram = [[(basis[i] * basis[j]).trace() for j in range(d)] for i in range(d)]
    coeff_vectors = nullspace(f, gram, d)
    n = a.n
    rad_vectors = []
    for coeffs in coeff_vectors:
        acc = [f.zero] * (n * n)
        for c, b in zip(coeffs, basis):
            if c != f.zero:
                acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, b.entries)]
        rad_vectors.append(tuple(acc))
    space = Subspace.span(f, n * n, rad_vectors)
    ideal = IdealSpace(a, space)
    _verify_radical(a, ideal)
    return ideal


def _verify_radical(a: MatSubalgebra, ideal: IdealSpace):
    for x in ideal.matrices():
        if not a.contains(x):
            raise ArithmeticError("radical candidate leaves the algebra")
        for b in a.echelon_basis():
            if not ideal.space.contains_vector((b * x).entries) or \
               not ideal.space.contains_vector((x * b).entries):
                raise ArithmeticError("radical candidate is not a two-sided ideal")
    if nilpotency_index(ideal) is None:
        raise ArithmeticError("radical candidate is not nilpotent")


def centralizer(a: MatSubalgebra) -> MatSubalgebra:
    """All X in M_n commuting with every basis element, via one linear system.

    Constraint rows come from X*b - b*X = 0 read entry by entry; the nullspace
    in K^(n*n) is always a unital subalgebra.
    """
    f, n = a.field, a.n
    zero = f.zero
    rows = []
    seen = set()
    for b in a.echelon_basis():
        for i in range(n):
            for j in range(n):
                # coefficient of X[i,k] is b[k,j]; coefficient of X[k,j] is -b[i,k]
                row = [zero] * (n * n)
                for k in range(n):
                    row[i * n + k] = f.add(row[i * n + k], b[k, j])
                    row[k * n + j] = f.sub(row[k * n + j], b[i, k])
                t = tuple(row)
                if t not in seen and any(x != zero for x in t):
                    seen.add(t)
                    rows.append(row)
    vectors = nullspace(f, rows, n * n) if rows else \
        [v for v in Subspace.full(f, n * n).rows]
    space = Subspace.span(f, n * n, vectors)
    return MatSubalgebra(f, n, space, unital=True)


def conjugate_algebra(a: MatSubalgebra, x: Matrix) -> MatSubalgebra:
    """The subalgebra x^-1 a x; dimension is preserved."""
    if x.nrows != a.n or x.ncols != a.n or x.field != a.field:
        raise DimensionMismatch("conjugator of wrong shape or field")
    xinv = matrix_invert(x)
    conj_basis = tuple(xinv * b * x for b in a.basis)
    space = Subspace.span(a.field, a.n ** 2, [m.entries for m in conj_basis])
    assert space.dim == a.dim
    return MatSubalgebra(a.field, a.n, space, unital=a.unital, basis=conj_basis)


def conjugate_ideal(ideal: IdealSpace, x: Matrix, new_parent: MatSubalgebra) -> IdealSpace:
    xinv = matrix_invert(x)
    vectors = [(xinv * m * x).entries for m in ideal.matrices()]
    f, n = _ambient_of(ideal)
    return IdealSpace(new_parent, Subspace.span(f, n * n, vectors))


def is_commutative(a: MatSubalgebra) -> bool:
    basis = a.echelon_basis()
    for i, x in enumerate(basis):
        for y in basis[i + 1:]:
            if x * y != y * x:
                return False
    return True

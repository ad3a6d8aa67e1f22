"""Exact rational subspaces of Q^n in reduced row echelon form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import as_fraction
from .errors import DimensionMismatchError

Vector = tuple[Fraction, ...]


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q, zero rows dropped.

    Returns the nonzero rows (ordered by pivot column) and the pivot columns.
    """
    mat = [[as_fraction(x) for x in row] for row in rows]
    for row in mat:
        if len(row) != ncols:
            raise DimensionMismatchError(f"row of length {len(row)} in a {ncols}-column matrix")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][c]
        if lead != 1:
            mat[r] = [x / lead for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class RationalSubspace:
    """A subspace of Q^n, stored by its canonical RREF basis.

    Two instances are equal exactly when they describe the same subspace.
    Build with :meth:`span`, :meth:`zero` or :meth:`full`.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise DimensionMismatchError("ambient dimension must be positive")
        red, _ = rref(self.basis, self.ambient_dim)
        canon = tuple(tuple(row) for row in red)
        if canon != self.basis:
            object.__setattr__(self, "basis", canon)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int | None = None) -> "RationalSubspace":
        vectors = [tuple(as_fraction(x) for x in v) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise DimensionMismatchError("cannot infer the ambient dimension of an empty span")
            ambient_dim = len(vectors[0])
        return cls(ambient_dim, tuple(vectors))

    @classmethod
    def zero(cls, n: int) -> "RationalSubspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "RationalSubspace":
        return cls(n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "RationalSubspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"subspaces of Q^{self.ambient_dim} and Q^{other.ambient_dim}"
            )

    def contains(self, v: Sequence) -> bool:
        v = [as_fraction(x) for x in v]
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector length differs from ambient dimension")
        return RationalSubspace(self.ambient_dim, self.basis + (tuple(v),)).dim == self.dim

    def __le__(self, other: "RationalSubspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "RationalSubspace") -> "RationalSubspace":
        return self.sum(other)

    def sum(self, other: "RationalSubspace") -> "RationalSubspace":
        self._check(other)
        return RationalSubspace(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "RationalSubspace") -> "RationalSubspace":
        """Intersection via the kernel of the stacked-basis system.

        (x, y) with x A = y B gives the common vectors x A.
        """
        self._check(other)
        if self.is_zero() or other.is_zero():
            return RationalSubspace.zero(self.ambient_dim)
        k, n = self.dim, self.ambient_dim
        # columns of [A^T | -B^T]; unknowns are the combination weights
        cols = list(self.basis) + [tuple(-x for x in v) for v in other.basis]
        system = [[col[i] for col in cols] for i in range(n)]
        vectors = []
        for w in nullspace(system, len(cols)):
            vectors.append(tuple(sum((w[j] * self.basis[j][i] for j in range(k)), Fraction(0)) for i in range(n)))
        return RationalSubspace(n, tuple(vectors))

    def orthogonal_complement(self) -> "RationalSubspace":
        """Complement under the standard bilinear form on Q^n."""
        return RationalSubspace(self.ambient_dim, tuple(tuple(v) for v in nullspace(self.basis, self.ambient_dim)))

    def project(self, v: Sequence) -> Vector:
        """Orthogonal projection of v onto this subspace."""
        v = [as_fraction(x) for x in v]
        if self.is_zero():
            return tuple(Fraction(0) for _ in v)
        gram = [[dot(a, b) for b in self.basis] for a in self.basis]
        rhs = [dot(a, v) for a in self.basis]
        k = self.dim
        red, _ = rref([gram[i] + [rhs[i]] for i in range(k)], k + 1)
        coeffs = [row[k] for row in red]
        return tuple(
            sum((coeffs[j] * self.basis[j][i] for j in range(k)), Fraction(0))
            for i in range(self.ambient_dim)
        )

    def image(self, matrix: Sequence[Sequence]) -> "RationalSubspace":
        """Image under x -> M x, where M has ``ambient_dim`` columns."""
        rows = [[as_fraction(x) for x in row] for row in matrix]
        if any(len(row) != self.ambient_dim for row in rows):
            raise DimensionMismatchError("matrix columns differ from ambient dimension")
        vectors = tuple(tuple(dot(row, v) for row in rows) for v in self.basis)
        return RationalSubspace(len(rows), vectors)

    def __str__(self) -> str:
        inner = ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.basis)
        return f"span[{inner}]"

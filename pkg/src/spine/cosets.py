"""Coset-ring expressions over Z^m built from finite-index cosets.

A leaf ``t + H`` stores an offset t and a square integer matrix whose rows
generate H; the index of H is |det|.  Leaves combine with union,
intersection and difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError, DomainError, SizeLimitError, UnsupportedScopeError

#: Largest subgroup index for which the dual group is enumerated.
MAX_INDEX = 4096


def determinant(rows: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise DomainError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _frac_mod1(v) -> tuple[Fraction, ...]:
    return tuple(x - (x.numerator // x.denominator) for x in v)


class CosetExpr:
    dim: int

    def contains(self, point: Sequence[int]) -> bool:
        raise NotImplementedError

    def __or__(self, other: "CosetExpr") -> "CosetExpr":
        return Union(self, other)

    def __and__(self, other: "CosetExpr") -> "CosetExpr":
        return Intersection(self, other)

    def __sub__(self, other: "CosetExpr") -> "CosetExpr":
        return Difference(self, other)


@dataclass(frozen=True)
class Leaf(CosetExpr):
    offset: tuple
    generators: tuple  # rows generate the subgroup

    def __post_init__(self):
        offset = tuple(int(x) for x in self.offset)
        gens = tuple(tuple(int(x) for x in row) for row in self.generators)
        m = len(offset)
        if m < 1:
            raise DimensionMismatchError("a coset needs an offset of length at least 1")
        if len(gens) != m or any(len(row) != m for row in gens):
            raise DimensionMismatchError(f"generator matrix must be {m}x{m}")
        if determinant(gens) == 0:
            raise UnsupportedScopeError("generator matrix has zero determinant (infinite index)")
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def subgroup(cls, generators) -> "Leaf":
        return cls((0,) * len(generators), generators)

    @classmethod
    def scaled(cls, d: int, m: int = 1, offset=None) -> "Leaf":
        """The coset offset + d Z^m."""
        gens = tuple(tuple(d if i == j else 0 for j in range(m)) for i in range(m))
        return cls(tuple(offset) if offset is not None else (0,) * m, gens)

    @property
    def dim(self) -> int:
        return len(self.offset)

    @property
    def index(self) -> int:
        return abs(int(determinant(self.generators)))

    def contains(self, point) -> bool:
        x = [int(v) for v in point]
        if len(x) != self.dim:
            raise DimensionMismatchError("point dimension differs from coset dimension")
        # x - t = G^T k with k integral
        diff = [a - b for a, b in zip(x, self.offset)]
        inv = inverse(self.generators)
        k = [sum((inv[j][i] * diff[j] for j in range(self.dim)), Fraction(0)) for i in range(self.dim)]
        return all(v.denominator == 1 for v in k)

    def dual_group(self) -> list[tuple[Fraction, ...]]:
        """Frequencies theta mod 1 with theta.h integral on the subgroup.

        Closure of the columns of G^-1 under addition mod 1, sorted.
        """
        d = self.index
        if d > MAX_INDEX:
            raise SizeLimitError(f"subgroup index {d} exceeds the limit {MAX_INDEX}")
        inv = inverse(self.generators)
        m = self.dim
        gens = [_frac_mod1(inv[i][j] for i in range(m)) for j in range(m)]
        zero = (Fraction(0),) * m
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = _frac_mod1(a + b for a, b in zip(x, g))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(seen) != d:
            raise AssertionError("dual group size differs from the index")
        return sorted(seen)


@dataclass(frozen=True)
class _Binary(CosetExpr):
    left: CosetExpr
    right: CosetExpr

    def __post_init__(self):
        if self.left.dim != self.right.dim:
            raise DimensionMismatchError("coset expressions of different dimension")

    @property
    def dim(self) -> int:
        return self.left.dim


class Union(_Binary):
    def contains(self, point) -> bool:
        return self.left.contains(point) or self.right.contains(point)


class Intersection(_Binary):
    def contains(self, point) -> bool:
        return self.left.contains(point) and self.right.contains(point)


class Difference(_Binary):
    def contains(self, point) -> bool:
        return self.left.contains(point) and not self.right.contains(point)


def leaves(expr: CosetExpr) -> list[Leaf]:
    if isinstance(expr, Leaf):
        return [expr]
    return leaves(expr.left) + leaves(expr.right)

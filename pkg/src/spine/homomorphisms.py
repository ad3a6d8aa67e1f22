"""Idempotent synthesis over Z^m and homomorphisms induced by affine maps."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import GradedElement, frequency_space, graded_mul
from .cosets import CosetExpr, Difference, Intersection, Leaf, Union
from .cyclotomic import Cyclotomic, as_fraction
from .errors import DimensionMismatchError, DomainError, ModelMismatchError
from .models import Grade, ModelSpec, TwoPointGrade, VectorGrade
from .subspace import RationalSubspace, nullspace
from .trig import TrigPolynomial


def integer_model(m: int) -> ModelSpec:
    return ModelSpec("Zn", m)


def _leaf_element(model: ModelSpec, leaf: Leaf) -> GradedElement:
    # 1_{t+H} = (1/|G/H|) sum over the annihilator of H of e(-theta.t) chi_theta
    dim, periodic = frequency_space(model)
    d = leaf.index
    terms = []
    for theta in leaf.dual_group():
        phase = -sum((a * b for a, b in zip(theta, leaf.offset)), Fraction(0))
        terms.append((theta, Cyclotomic.root_of_unity(phase) / d))
    return GradedElement.build(model, [(model.unit(), TrigPolynomial.build(dim, periodic, terms))])


def synthesize_idempotent(expr: CosetExpr, model: ModelSpec | None = None) -> GradedElement:
    """The idempotent whose values are the indicator of ``expr``.

    Ring operations follow inclusion-exclusion: 1_{A|B} = a + b - ab,
    1_{A&B} = ab, 1_{A\\B} = a - ab.  Everything lives at the unit grade.
    """
    if model is None:
        model = integer_model(expr.dim)
    if model.family not in ("Zn", "Z") or (model.family == "Zn" and model.n != expr.dim) or (
        model.family == "Z" and expr.dim != 1
    ):
        raise ModelMismatchError(f"coset expression in Z^{expr.dim} cannot live in model {model}")
    return _synth(expr, model)


def _synth(expr: CosetExpr, model: ModelSpec) -> GradedElement:
    if isinstance(expr, Leaf):
        return _leaf_element(model, expr)
    a = _synth(expr.left, model)
    b = _synth(expr.right, model)
    ab = graded_mul(a, b)
    if isinstance(expr, Union):
        return a + b - ab
    if isinstance(expr, Intersection):
        return ab
    if isinstance(expr, Difference):
        return a - ab
    raise DomainError(f"unknown coset expression {type(expr).__name__}")


# affine pullback ----------------------------------------------------------


def _to_vector(g: Grade) -> RationalSubspace:
    if isinstance(g, VectorGrade):
        return g.subspace
    if isinstance(g, TwoPointGrade):
        return RationalSubspace.full(1) if g.level == "full" else RationalSubspace.zero(1)
    raise ModelMismatchError("only vector and two-point grades can be pulled back")


def _from_vector(model: ModelSpec, sub: RationalSubspace) -> Grade:
    if model.family == "Z":
        return TwoPointGrade("full" if sub.is_full() else "ap")
    return VectorGrade(sub)


def pullback_grade(matrix: Sequence[Sequence], g: Grade, target: ModelSpec) -> Grade:
    """Grade of the pulled-back part: the image of L under the transpose."""
    at = [[matrix[i][j] for i in range(len(matrix))] for j in range(len(matrix[0]))]
    return _from_vector(target, _to_vector(g).image(at))


def pushforward_grade(matrix: Sequence[Sequence], g: Grade, source: ModelSpec) -> Grade:
    """Largest grade M with pullback_grade(M) below g: {x : A^T x in K}.

    Evaluating a pullback at (K, h) agrees with evaluating the original
    element at (pushforward_grade(K), A h + b).
    """
    k = _to_vector(g)
    n, m = len(matrix), len(matrix[0])
    # x with A^T x in K  <=>  (A^T x) orthogonal to the complement of K
    perp = k.orthogonal_complement()
    rows = [[sum((p[j] * matrix[i][j] for j in range(m)), Fraction(0)) for i in range(n)] for p in perp.basis]
    sub = RationalSubspace(n, tuple(tuple(v) for v in nullspace(rows, n))) if rows else RationalSubspace.full(n)
    if source.family == "R":
        return TwoPointGrade("full" if sub.is_full() else "ap")
    return VectorGrade(sub)


def _shape(matrix, offset, n: int):
    a = [[as_fraction(x) for x in row] for row in matrix]
    if len(a) != n or not a or any(len(row) != len(a[0]) for row in a) or len(a[0]) < 1:
        raise DimensionMismatchError(f"matrix must have {n} rows of equal positive length")
    b = [as_fraction(x) for x in offset]
    if len(b) != n:
        raise DimensionMismatchError(f"offset must have length {n}")
    return a, b, len(a[0])


def affine_pullback(matrix, offset, u: GradedElement, target: ModelSpec | None = None) -> GradedElement:
    """Pull u back along h -> A h + b from Z^m into the real model of u.

    c chi_theta at grade L becomes c e(theta.b) chi_{A^T theta} at grade A^T L.
    """
    if u.model.family not in ("Rn", "R"):
        raise ModelMismatchError(f"pullback needs an element over R^n, got {u.model}")
    n = u.model.n if u.model.is_vector else 1
    a, b, m = _shape(matrix, offset, n)
    if target is None:
        target = ModelSpec("Z") if u.model.family == "R" and m == 1 else integer_model(m)
    tdim, tper = frequency_space(target)
    if tdim != m or not tper:
        raise ModelMismatchError(f"target {target} is not Z^{m}")
    parts = []
    for g, poly in u.parts:
        terms = []
        for theta, c in poly.terms:
            phase = sum((x * y for x, y in zip(theta, b)), Fraction(0))
            freq = tuple(sum((theta[i] * a[i][j] for i in range(n)), Fraction(0)) for j in range(m))
            terms.append((freq, c * Cyclotomic.root_of_unity(phase)))
        parts.append((pullback_grade(a, g, target), TrigPolynomial.build(tdim, tper, terms)))
    return GradedElement.build(target, parts)


def apply_affine(matrix, offset, h: Sequence) -> tuple[Fraction, ...]:
    a = [[as_fraction(x) for x in row] for row in matrix]
    return tuple(
        sum((row[j] * as_fraction(h[j]) for j in range(len(h))), Fraction(0)) + as_fraction(bi)
        for row, bi in zip(a, offset)
    )


def restrict_check(u: GradedElement, leaf: Leaf, extent: int | None = None) -> list[tuple[tuple, Cyclotomic]]:
    """Values of u at the points t + k G, k in {0..extent-1}^m.

    The default extent is the index of the subgroup.
    """
    if u.model.family not in ("Zn", "Z"):
        raise ModelMismatchError(f"restriction needs an element over Z^m, got {u.model}")
    m = leaf.dim
    if frequency_space(u.model)[0] != m:
        raise DimensionMismatchError("sublattice dimension differs from the model")
    if extent is None:
        extent = leaf.index
    if extent < 1:
        raise DomainError("extent must be positive")
    out = []
    for k in product(range(extent), repeat=m):
        point = tuple(
            leaf.offset[j] + sum(k[i] * leaf.generators[i][j] for i in range(m)) for j in range(m)
        )
        out.append((point, u.evaluate(point)))
    return out

"""Independent reference computations.

These take different routes from the library: sympy for linear algebra,
floating point for character values, explicit projections for the product
of spine points, and direct membership for indicators.
"""

import cmath
import math
from fractions import Fraction

import sympy

from spine.cosets import Difference, Intersection, Leaf, Union
from spine.subspace import RationalSubspace


def _to_sympy(rows, n):
    return sympy.Matrix(len(rows), n, [sympy.Rational(x.numerator, x.denominator) for r in rows for x in r])


def _from_sympy_rows(mat):
    return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in mat.row(i)) for i in range(mat.rows))


def sympy_rref_basis(rows, n):
    """Canonical RREF rows (zero rows dropped) computed by sympy."""
    if not rows:
        return ()
    red, pivots = _to_sympy(rows, n).rref()
    return _from_sympy_rows(red[: len(pivots), :])


def sympy_sum(a: RationalSubspace, b: RationalSubspace):
    return sympy_rref_basis(list(a.basis) + list(b.basis), a.ambient_dim)


def sympy_perp(rows, n):
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    out = []
    for v in _to_sympy(rows, n).nullspace():
        out.append(tuple(Fraction(int(x.p), int(x.q)) for x in v))
    return out


def sympy_intersection(a: RationalSubspace, b: RationalSubspace):
    """A & B as the complement of (A^perp + B^perp)."""
    n = a.ambient_dim
    perps = sympy_perp(list(a.basis), n) + sympy_perp(list(b.basis), n)
    if not perps:
        return sympy_rref_basis(sympy_perp([], n), n)
    return sympy_rref_basis(sympy_perp(perps, n), n)


def sympy_dim(rows, n):
    if not rows:
        return 0
    return _to_sympy(rows, n).rank()


def float_eval(terms, point):
    """sum c exp(2 pi i theta.x) in floating point."""
    total = 0j
    for freq, c in terms:
        phase = float(sum((f * x for f, x in zip(freq, point)), Fraction(0)))
        total += complex(c) * cmath.exp(2j * math.pi * phase)
    return total


def projection(sub: RationalSubspace, v):
    """Orthogonal projection by the normal equations, via sympy."""
    n = sub.ambient_dim
    if sub.is_zero():
        return tuple(Fraction(0) for _ in range(n))
    b = _to_sympy(list(sub.basis), n).T
    x = sympy.Matrix([sympy.Rational(f.numerator, f.denominator) for f in v])
    p = b * (b.T * b).inv() * b.T * x
    return tuple(Fraction(int(t.p), int(t.q)) for t in p)


def projection_product(l_sub, v, m_sub, w):
    """Product of (L, v) and (M, w) written in the completion L&M x ((L&M)')^ap.

    Each point is first split as (P_L v, P_L' v); the image at the lower
    grade L&M is (P_{L&M} x, P_{(L&M)'} x + y).  Returns the pair of
    components of the product.
    """
    k = l_sub.intersect(m_sub)
    kp = k.orthogonal_complement()

    def down(sub, u):
        x = projection(sub, u)
        y = tuple(a - b for a, b in zip(u, x))
        a = projection(k, x)
        b = tuple(p + q for p, q in zip(projection(kp, x), y))
        return a, b

    a1, b1 = down(l_sub, v)
    a2, b2 = down(m_sub, w)
    return tuple(x + y for x, y in zip(a1, a2)), tuple(x + y for x, y in zip(b1, b2))


def p_adic_valuation(p, r: Fraction):
    """Valuation from sympy's factorization."""
    num = sympy.factorint(abs(r.numerator)).get(p, 0)
    den = sympy.factorint(r.denominator).get(p, 0)
    return num - den


def in_coset(offset, generators, point):
    """x in t + H, with H spanned by the integer rows of G, via sympy's solver."""
    g = sympy.Matrix(generators).T
    diff = sympy.Matrix([x - t for x, t in zip(point, offset)])
    k = g.LUsolve(diff)
    return all(val.is_integer for val in k)


def indicator(expr, point):
    """Membership computed from the tree, with leaves checked by in_coset."""
    if isinstance(expr, Leaf):
        return int(in_coset(expr.offset, expr.generators, point))
    a, b = indicator(expr.left, point), indicator(expr.right, point)
    if isinstance(expr, Union):
        return a | b
    if isinstance(expr, Intersection):
        return a & b
    assert isinstance(expr, Difference)
    return a & (1 - b)

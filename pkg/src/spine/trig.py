"""Trigonometric polynomials with exact cyclotomic coefficients.

A term ``c * chi_theta`` is the character x -> exp(2 pi i theta.x) scaled by
c.  For periodic frequency spaces (the integer groups) frequencies are taken
mod 1 and stored in [0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cyclotomic import Cyclotomic, as_fraction
from .errors import DimensionMismatchError, DomainError, ModelMismatchError

Frequency = tuple[Fraction, ...]
Number = Fraction | float


def _coeff(c) -> Cyclotomic:
    if isinstance(c, Cyclotomic):
        return c
    if isinstance(c, complex):
        raise TypeError("floating complex coefficients are not exact")
    return Cyclotomic.rational(as_fraction(c))


def _canon_freq(freq: Sequence, dim: int, periodic: bool) -> Frequency:
    f = tuple(as_fraction(x) for x in freq)
    if len(f) != dim:
        raise DimensionMismatchError(f"frequency of length {len(f)} in dimension {dim}")
    if periodic:
        f = tuple(x - math.floor(x) for x in f)
    return f


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def coeff_abs(c: Cyclotomic) -> Number:
    """|c| exactly when it is rational, else as a float."""
    if c.is_rational():
        return abs(c.rational_value())
    sq = c.abs_squared()
    if sq.is_rational():
        root = _rational_sqrt(sq.rational_value())
        if root is not None:
            return root
    return abs(c.to_complex())


def sum_numbers(values: Iterable[Number]) -> Number:
    """Exact sum unless some summand is a float."""
    exact = Fraction(0)
    approx = 0.0
    inexact = False
    for v in values:
        if isinstance(v, float):
            inexact = True
            approx += v
        else:
            exact += v
    return float(exact) + approx if inexact else exact


@dataclass(frozen=True)
class TrigPolynomial:
    dim: int
    periodic: bool
    terms: tuple = ()  # ((frequency, Cyclotomic), ...) sorted, non-zero

    @classmethod
    def build(cls, dim: int, periodic: bool, terms: Mapping | Iterable) -> "TrigPolynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for freq, c in items:
            f = _canon_freq(freq, dim, periodic)
            acc[f] = acc[f] + _coeff(c) if f in acc else _coeff(c)
        return cls(dim, periodic, tuple(sorted((f, c) for f, c in acc.items() if not c.is_zero())))

    @classmethod
    def constant(cls, dim: int, periodic: bool, c=1) -> "TrigPolynomial":
        return cls.build(dim, periodic, [((0,) * dim, c)])

    @classmethod
    def character(cls, dim: int, periodic: bool, freq: Sequence, c=1) -> "TrigPolynomial":
        return cls.build(dim, periodic, [(freq, c)])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def _check(self, other: "TrigPolynomial") -> None:
        if (self.dim, self.periodic) != (other.dim, other.periodic):
            raise ModelMismatchError("trigonometric polynomials over different frequency spaces")

    def __add__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        self._check(other)
        return TrigPolynomial.build(self.dim, self.periodic, self.terms + other.terms)

    def __neg__(self) -> "TrigPolynomial":
        return TrigPolynomial(self.dim, self.periodic, tuple((f, -c) for f, c in self.terms))

    def __sub__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        return self + (-other)

    def scale(self, c) -> "TrigPolynomial":
        c = _coeff(c)
        return TrigPolynomial.build(self.dim, self.periodic, [(f, a * c) for f, a in self.terms])

    def __mul__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        return trig_mul(self, other)

    def evaluate(self, point: Sequence) -> Cyclotomic:
        x = tuple(as_fraction(v) for v in point)
        if len(x) != self.dim:
            raise DimensionMismatchError(f"point of length {len(x)} in dimension {self.dim}")
        if self.periodic and any(v.denominator != 1 for v in x):
            raise DomainError("integer groups are evaluated at integer points only")
        return Cyclotomic.from_phases(
            (sum((a * b for a, b in zip(f, x)), Fraction(0)), c) for f, c in self.terms
        )

    def norm(self) -> Number:
        """Sum of coefficient moduli (the norm of distinct characters)."""
        return sum_numbers(coeff_abs(c) for _, c in self.terms)


def trig_mul(a: TrigPolynomial, b: TrigPolynomial) -> TrigPolynomial:
    """Convolution of spectra: frequencies add, coefficients multiply."""
    a._check(b)
    prods = []
    for fa, ca in a.terms:
        for fb, cb in b.terms:
            prods.append((tuple(x + y for x, y in zip(fa, fb)), ca * cb))
    return TrigPolynomial.build(a.dim, a.periodic, prods)

"""Finite graded sums over the grade semilattice.

A :class:`GradedElement` is a finite family of trigonometric polynomials,
one per grade.  The product of parts at grades g1, g2 lands at g1 v g2, the
norm is the sum of the part norms, and the point ``s`` of the spine acts by
evaluating every part whose grade lies below the grade of ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cyclotomic import Cyclotomic
from .errors import ModelMismatchError, UnsupportedScopeError
from .models import Grade, ModelSpec, grade_join, grade_key, grade_leq
from .semigroup import SpineElement
from .trig import Number, TrigPolynomial, sum_numbers, trig_mul

ALGEBRA_FAMILIES = ("Rn", "Zn", "R", "Z", "Q")


def frequency_space(model: ModelSpec) -> tuple[int, bool]:
    """(dimension, periodic) of the characters used for a model."""
    if model.family not in ALGEBRA_FAMILIES:
        raise UnsupportedScopeError(f"no graded algebra model for {model}")
    if model.is_vector:
        return model.n, model.family == "Zn"
    return 1, model.family == "Z"


def as_point(model: ModelSpec, rep) -> tuple:
    return rep if isinstance(rep, tuple) else (rep,)


@dataclass(frozen=True)
class GradedElement:
    model: ModelSpec
    parts: tuple = ()  # ((grade, TrigPolynomial), ...) sorted by grade_key

    @classmethod
    def build(cls, model: ModelSpec, parts: Mapping | Iterable) -> "GradedElement":
        dim, periodic = frequency_space(model)
        items = parts.items() if isinstance(parts, Mapping) else parts
        acc: dict = {}
        for g, poly in items:
            model.check_grade(g)
            if not isinstance(poly, TrigPolynomial):
                poly = TrigPolynomial.build(dim, periodic, poly)
            if (poly.dim, poly.periodic) != (dim, periodic):
                raise ModelMismatchError(f"part over the wrong frequency space for {model}")
            acc[g] = acc[g] + poly if g in acc else poly
        kept = [(g, p) for g, p in acc.items() if p]
        kept.sort(key=lambda gp: grade_key(gp[0]))
        return cls(model, tuple(kept))

    @classmethod
    def zero(cls, model: ModelSpec) -> "GradedElement":
        return cls.build(model, [])

    @classmethod
    def unit(cls, model: ModelSpec) -> "GradedElement":
        dim, periodic = frequency_space(model)
        return cls.build(model, [(model.unit(), TrigPolynomial.constant(dim, periodic))])

    @classmethod
    def single(cls, model: ModelSpec, grade: Grade, freq, c=1) -> "GradedElement":
        dim, periodic = frequency_space(model)
        return cls.build(model, [(grade, TrigPolynomial.character(dim, periodic, freq, c))])

    @property
    def grades(self) -> tuple:
        return tuple(g for g, _ in self.parts)

    def part(self, g: Grade) -> TrigPolynomial:
        for h, p in self.parts:
            if h == g:
                return p
        dim, periodic = frequency_space(self.model)
        return TrigPolynomial(dim, periodic)

    def _check(self, other: "GradedElement") -> None:
        if self.model != other.model:
            raise ModelMismatchError(f"graded elements over {self.model} and {other.model}")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        return GradedElement.build(self.model, self.parts + other.parts)

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.model, tuple((g, -p) for g, p in self.parts))

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def scale(self, c) -> "GradedElement":
        return GradedElement.build(self.model, [(g, p.scale(c)) for g, p in self.parts])

    def __mul__(self, other: "GradedElement") -> "GradedElement":
        return graded_mul(self, other)

    def part_norms(self) -> tuple:
        return tuple(p.norm() for _, p in self.parts)

    def norm(self) -> Number:
        return sum_numbers(self.part_norms())

    def collapse(self) -> TrigPolynomial:
        """Sum of all parts: the function on the group itself."""
        dim, periodic = frequency_space(self.model)
        out = TrigPolynomial(dim, periodic)
        for _, p in self.parts:
            out = out + p
        return out

    def evaluate(self, point) -> Cyclotomic:
        """Value of the underlying function at a group element."""
        return self.collapse().evaluate(as_point(self.model, point))


def graded_mul(u: GradedElement, v: GradedElement) -> GradedElement:
    u._check(v)
    prods = [
        (grade_join(gu, gv), trig_mul(pu, pv)) for gu, pu in u.parts for gv, pv in v.parts
    ]
    return GradedElement.build(u.model, prods)


def char_eval(s: SpineElement, u: GradedElement) -> Cyclotomic:
    """Sum of the parts at grades below s.grade, evaluated at s's representative."""
    if s.model != u.model:
        raise ModelMismatchError(f"point of {s.model} against element of {u.model}")
    point = as_point(s.model, s.rep)
    total = Cyclotomic.zero()
    for g, p in u.parts:
        if grade_leq(g, s.grade):
            total = total + p.evaluate(point)
    return total

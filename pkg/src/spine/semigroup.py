"""The spine compactification on dense-image representatives.

A point is a grade together with a group element of the modelled group;
products multiply representatives with the group law and meet the grades.
Representatives are normalized by the kernel of the map into the completion
at their grade, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cyclotomic import as_fraction
from .errors import DomainError, ModelMismatchError
from .models import (
    AxbGrade,
    Grade,
    GradeSemilattice,
    ModelSpec,
    enumerate_grades,
    format_grade,
    grade_leq,
    grade_meet,
    grade_order_key,
    restrict_grades,
)
from .semilattice import is_hereditary


def identity_rep(model: ModelSpec):
    if model.is_vector:
        return tuple(Fraction(0) for _ in range(model.n))
    if model.family in ("R", "Z", "Q", "Qp"):
        return Fraction(0)
    if model.family == "axb":
        return (Fraction(1), Fraction(0))
    return None


def check_rep(model: ModelSpec, rep):
    """Validate and coerce a representative to its canonical exact form."""
    fam = model.family
    if fam in ("compact", "minWAP"):
        if rep is not None:
            raise DomainError(f"model {model} only represents the identity")
        return None
    if model.is_vector:
        if isinstance(rep, (str, bytes)) or not hasattr(rep, "__len__"):
            raise DomainError(f"model {model} needs a vector representative")
        if len(rep) != model.n:
            raise DomainError(f"representative has length {len(rep)}, expected {model.n}")
        vec = tuple(as_fraction(x) for x in rep)
        if fam == "Zn" and any(x.denominator != 1 for x in vec):
            raise DomainError("Z^n representatives must be integer vectors")
        return vec
    if fam == "axb":
        try:
            a, b = rep
        except (TypeError, ValueError):
            raise DomainError("ax+b representatives are pairs (a, b)") from None
        a, b = as_fraction(a), as_fraction(b)
        if a <= 0:
            raise DomainError("ax+b needs a > 0")
        return (a, b)
    x = as_fraction(rep)
    if fam == "Z" and x.denominator != 1:
        raise DomainError("Z representatives must be integers")
    return x


def normalize_rep(model: ModelSpec, grade: Grade, rep):
    """Kernel normalization; only the ax+b model has non-trivial kernels."""
    if model.family == "axb" and grade != AxbGrade("full"):
        return (rep[0], Fraction(0))
    return rep


def group_mul(model: ModelSpec, x, y):
    if model.is_vector:
        return tuple(a + b for a, b in zip(x, y))
    if model.family == "axb":
        return (x[0] * y[0], x[0] * y[1] + x[1])
    if x is None:
        return None
    return x + y


@dataclass(frozen=True)
class SpineElement:
    model: ModelSpec
    grade: Grade
    rep: object = None

    def __post_init__(self):
        self.model.check_grade(self.grade)
        # an omitted representative means the group identity
        rep = identity_rep(self.model) if self.rep is None else self.rep
        rep = check_rep(self.model, rep)
        object.__setattr__(self, "rep", normalize_rep(self.model, self.grade, rep))

    def __mul__(self, other: "SpineElement") -> "SpineElement":
        return spine_mul(self, other)

    def __str__(self) -> str:
        key = "L" if self.model.is_vector else "g"
        return f"({key}={format_grade(self.grade)}, v={format_rep(self.rep)})"


def format_rep(rep) -> str:
    if rep is None:
        return "e"
    if isinstance(rep, tuple):
        return "[" + ",".join(str(x) for x in rep) + "]"
    return str(rep)


def spine_mul(s: SpineElement, t: SpineElement) -> SpineElement:
    if s.model != t.model:
        raise ModelMismatchError(f"cannot multiply points of {s.model} and {t.model}")
    return SpineElement(s.model, grade_meet(s.grade, t.grade), group_mul(s.model, s.rep, t.rep))


def spine_idempotent(model: ModelSpec, grade: Grade) -> SpineElement:
    return SpineElement(model, grade, identity_rep(model))


def pushforward(s: SpineElement, lower: Grade) -> SpineElement:
    """Image of s under the quotient map to a lower grade."""
    if not grade_leq(lower, s.grade):
        raise DomainError(f"{format_grade(lower)} is not below {format_grade(s.grade)}")
    return SpineElement(s.model, lower, s.rep)


# projective-limit tuples ---------------------------------------------------


@dataclass(frozen=True)
class CompatibleTuple:
    """One representative per grade of a hereditary set."""

    model: ModelSpec
    components: tuple  # ((grade, rep), ...)

    @classmethod
    def build(cls, model: ModelSpec, components: Mapping[Grade, object] | Iterable) -> "CompatibleTuple":
        items = components.items() if isinstance(components, Mapping) else components
        pairs = tuple(sorted(((g, r) for g, r in items), key=lambda p: grade_order_key(p[0])))
        return cls(model, pairs)

    @property
    def grades(self) -> tuple:
        return tuple(g for g, _ in self.components)


def _grade_lattice(t: CompatibleTuple) -> GradeSemilattice:
    if t.model.is_finite:
        return enumerate_grades(t.model)
    return restrict_grades(t.model, t.grades)


def principal_tuple(model: ModelSpec, top: Grade, rep) -> CompatibleTuple:
    """Push one representative at ``top`` down to every grade below it.

    Only available when the principal set is finite (finite models).
    """
    if not model.is_finite:
        raise DomainError(f"principal sets of {model} are infinite; supply the grades explicitly")
    lat = enumerate_grades(model)
    return CompatibleTuple.build(model, [(g, rep) for g in lat.grades if grade_leq(g, top)])


def validate_tuple(t: CompatibleTuple) -> list[tuple[Grade, Grade]]:
    """Pairs (lower, upper) whose consistency equation fails.

    The grades must form a hereditary set in the model semilattice (for the
    infinite models: in the sub-semilattice they generate).
    """
    if len(set(t.grades)) != len(t.grades):
        raise DomainError("a grade occurs twice in the tuple")
    if not t.components:
        raise DomainError("a tuple needs at least one component")
    lat = _grade_lattice(t)
    ids = {lat.id_of(t.model.check_grade(g)) for g in t.grades}
    if not is_hereditary(lat.lattice, ids):
        raise DomainError("tuple grades do not form a hereditary directed set")
    points = {g: SpineElement(t.model, g, r) for g, r in t.components}
    bad = []
    for upper, s in points.items():
        for lower, r in points.items():
            if lower != upper and grade_leq(lower, upper) and pushforward(s, lower) != r:
                bad.append((lower, upper))
    bad.sort(key=lambda p: (grade_order_key(p[0]), grade_order_key(p[1])))
    return bad


# Clifford structure ---------------------------------------------------------


@dataclass(frozen=True)
class CliffordCell:
    grade: Grade
    members: tuple

    @property
    def idempotent(self) -> SpineElement:
        return spine_idempotent(self.members[0].model, self.grade)


def clifford_decompose(elements: Sequence[SpineElement]) -> list[CliffordCell]:
    """Partition by grade; each cell lies in one maximal subgroup."""
    if not elements:
        return []
    model = elements[0].model
    cells: dict = {}
    for e in elements:
        if e.model != model:
            raise ModelMismatchError("all elements must come from one model")
        bucket = cells.setdefault(e.grade, [])
        if e not in bucket:
            bucket.append(e)
    return [CliffordCell(g, tuple(cells[g])) for g in sorted(cells, key=grade_order_key)]


def close_products(elements: Sequence[SpineElement], rounds: int = 1) -> list[SpineElement]:
    """Append all pairwise products, ``rounds`` times."""
    out = list(dict.fromkeys(elements))
    for _ in range(rounds):
        new = [spine_mul(a, b) for a in out for b in out]
        out = list(dict.fromkeys(out + new))
    return out

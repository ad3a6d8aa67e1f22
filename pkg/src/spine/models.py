"""Concrete semilattices of non-quotient topologies for the modelled groups.

Each group family is described by a :class:`ModelSpec`.  Its grades are

* ``VectorGrade`` for R^n and Z^n: one grade per rational subspace L, joined
  by L1 + L2 and met by L1 & L2.  The zero subspace is the almost periodic
  grade and the full space the original topology.
* ``TwoPointGrade`` for compact groups (one point), R, Z, Q_p and groups with
  WAP = AP + C_0 (two points ``ap < full``).
* ``AxbGrade`` for the ax+b group: the chain ``ap < realline < full``.
* ``QGrade`` for the discrete rationals: the free semilattice generated by
  the real place ``R`` and the primes, plus the discrete topology ``TOP``.
  This is only a sub-semilattice of all non-quotient topologies on Q, so
  meets are meets inside that sub-semilattice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, DomainError, ModelMismatchError
from .padic import is_prime
from .semilattice import FiniteSemilattice
from .subspace import RationalSubspace

TWO_POINT_LEVELS = ("ap", "full")
AXB_LEVELS = ("ap", "realline", "full")


@dataclass(frozen=True)
class VectorGrade:
    subspace: RationalSubspace

    @property
    def n(self) -> int:
        return self.subspace.ambient_dim


@dataclass(frozen=True)
class TwoPointGrade:
    level: str

    def __post_init__(self):
        if self.level not in TWO_POINT_LEVELS:
            raise DomainError(f"two-point level must be one of {TWO_POINT_LEVELS}")


@dataclass(frozen=True)
class AxbGrade:
    level: str

    def __post_init__(self):
        if self.level not in AXB_LEVELS:
            raise DomainError(f"ax+b level must be one of {AXB_LEVELS}")


def _qgen_key(g) -> tuple[int, int]:
    return (0, 0) if g == "R" else (1, g)


@dataclass(frozen=True)
class QGrade:
    generators: tuple = ()
    top: bool = False

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g == "R":
                gens.append("R")
            elif isinstance(g, int) and not isinstance(g, bool) and is_prime(g):
                gens.append(g)
            else:
                raise DomainError(f"Q-model generator {g!r} is neither 'R' nor a prime")
        gens = tuple(sorted(set(gens), key=_qgen_key))
        if self.top:
            gens = ()
        object.__setattr__(self, "generators", gens)


Grade = Union[VectorGrade, TwoPointGrade, AxbGrade, QGrade]


def _same_family(a: Grade, b: Grade) -> None:
    if type(a) is not type(b):
        raise ModelMismatchError(f"grades from different models: {format_grade(a)} and {format_grade(b)}")
    if isinstance(a, VectorGrade) and a.n != b.n:
        raise ModelMismatchError(f"vector grades in dimensions {a.n} and {b.n}")


def grade_join(a: Grade, b: Grade) -> Grade:
    _same_family(a, b)
    if isinstance(a, VectorGrade):
        return VectorGrade(a.subspace.sum(b.subspace))
    if isinstance(a, TwoPointGrade):
        return a if TWO_POINT_LEVELS.index(a.level) >= TWO_POINT_LEVELS.index(b.level) else b
    if isinstance(a, AxbGrade):
        return a if AXB_LEVELS.index(a.level) >= AXB_LEVELS.index(b.level) else b
    if a.top or b.top:
        return QGrade(top=True)
    return QGrade(a.generators + b.generators)


def grade_meet(a: Grade, b: Grade) -> Grade:
    _same_family(a, b)
    if isinstance(a, VectorGrade):
        return VectorGrade(a.subspace.intersect(b.subspace))
    if isinstance(a, TwoPointGrade):
        return a if TWO_POINT_LEVELS.index(a.level) <= TWO_POINT_LEVELS.index(b.level) else b
    if isinstance(a, AxbGrade):
        return a if AXB_LEVELS.index(a.level) <= AXB_LEVELS.index(b.level) else b
    if a.top:
        return b
    if b.top:
        return a
    return QGrade(tuple(g for g in a.generators if g in b.generators))


def grade_leq(a: Grade, b: Grade) -> bool:
    return grade_join(a, b) == b


def format_grade(g: Grade) -> str:
    if isinstance(g, VectorGrade):
        return str(g.subspace)
    if isinstance(g, (TwoPointGrade, AxbGrade)):
        return g.level
    if g.top:
        return "TOP"
    return "{" + ",".join(str(x) for x in g.generators) + "}"


def grade_to_json(g: Grade) -> dict:
    if isinstance(g, VectorGrade):
        return {
            "type": "vector",
            "n": g.n,
            "basis": [[str(x) for x in row] for row in g.subspace.basis],
        }
    if isinstance(g, TwoPointGrade):
        return {"type": "two_point", "level": g.level}
    if isinstance(g, AxbGrade):
        return {"type": "axb", "level": g.level}
    return {"type": "q", "generators": [str(x) for x in g.generators], "top": g.top}


def grade_from_json(obj: dict) -> Grade:
    try:
        kind = obj["type"]
        if kind == "vector":
            n = obj["n"]
            if not isinstance(n, int) or n < 1:
                raise DomainError("vector grade needs a positive dimension")
            return VectorGrade(RationalSubspace(n, tuple(tuple(Fraction(x) for x in row) for row in obj["basis"])))
        if kind == "two_point":
            return TwoPointGrade(obj["level"])
        if kind == "axb":
            return AxbGrade(obj["level"])
        if kind == "q":
            gens = tuple(g if g == "R" else int(g) for g in obj["generators"])
            return QGrade(gens, bool(obj.get("top", False)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed grade object: {exc}") from None
    raise DomainError(f"unknown grade type {obj.get('type')!r}")


def grade_key(g: Grade) -> str:
    """Serialized form; the canonical sort key for grades."""
    return json.dumps(grade_to_json(g), sort_keys=True, separators=(",", ":"))


def _height(g: Grade) -> int:
    if isinstance(g, VectorGrade):
        return g.subspace.dim
    if isinstance(g, TwoPointGrade):
        return TWO_POINT_LEVELS.index(g.level)
    if isinstance(g, AxbGrade):
        return AXB_LEVELS.index(g.level)
    return 10**6 if g.top else len(g.generators)


def grade_order_key(g: Grade) -> tuple[int, str]:
    """Sort key that lists lower grades first."""
    return (_height(g), grade_key(g))


# models -----------------------------------------------------------------

FAMILIES = ("compact", "R", "Z", "Rn", "Zn", "Q", "axb", "minWAP", "Qp")


@dataclass(frozen=True)
class ModelSpec:
    family: str
    n: int | None = None
    p: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unsupported model {self.family!r}")
        if self.family in ("Rn", "Zn"):
            if not isinstance(self.n, int) or self.n < 1:
                raise DomainError("vector models need n >= 1")
        elif self.n is not None:
            raise DomainError(f"model {self.family} takes no dimension")
        if self.family == "Qp":
            if not is_prime(self.p):
                raise DomainError(f"Q_p needs a prime, got {self.p}")
        elif self.p is not None:
            raise DomainError(f"model {self.family} takes no prime")

    def __str__(self) -> str:
        if self.family == "Rn":
            return f"R^{self.n}"
        if self.family == "Zn":
            return f"Z^{self.n}"
        if self.family == "Qp":
            return f"Q_{self.p}"
        return self.family

    @property
    def is_vector(self) -> bool:
        return self.family in ("Rn", "Zn")

    @property
    def is_finite(self) -> bool:
        return self.family not in ("Rn", "Zn", "Q")

    @property
    def is_abelian(self) -> bool:
        return self.family not in ("axb", "minWAP")

    def unit(self) -> Grade:
        """The almost periodic grade."""
        if self.is_vector:
            return VectorGrade(RationalSubspace.zero(self.n))
        if self.family == "Q":
            return QGrade()
        if self.family == "axb":
            return AxbGrade("ap")
        if self.family == "compact":
            return TwoPointGrade("full")
        return TwoPointGrade("ap")

    def top(self) -> Grade:
        """The grade of the original topology."""
        if self.is_vector:
            return VectorGrade(RationalSubspace.full(self.n))
        if self.family == "Q":
            return QGrade(top=True)
        if self.family == "axb":
            return AxbGrade("full")
        return TwoPointGrade("full")

    def check_grade(self, g: Grade) -> Grade:
        ok = False
        if self.is_vector:
            ok = isinstance(g, VectorGrade) and g.n == self.n
        elif self.family == "Q":
            ok = isinstance(g, QGrade)
        elif self.family == "axb":
            ok = isinstance(g, AxbGrade)
        elif self.family == "compact":
            ok = g == TwoPointGrade("full")
        else:
            ok = isinstance(g, TwoPointGrade)
        if not ok:
            raise ModelMismatchError(f"grade {format_grade(g)} does not belong to model {self}")
        return g

    def finite_grades(self) -> tuple[Grade, ...]:
        if not self.is_finite:
            raise DomainError(f"model {self} has infinitely many grades")
        if self.family == "compact":
            return (TwoPointGrade("full"),)
        if self.family == "axb":
            return tuple(AxbGrade(lv) for lv in AXB_LEVELS)
        return tuple(TwoPointGrade(lv) for lv in TWO_POINT_LEVELS)


@dataclass(frozen=True)
class GradeSemilattice:
    """A finite set of grades with its join table; ids are positions."""

    model: ModelSpec
    grades: tuple
    lattice: FiniteSemilattice

    def id_of(self, g: Grade) -> int:
        try:
            return self.grades.index(g)
        except ValueError:
            raise DomainError(f"grade {format_grade(g)} is not in this semilattice") from None

    def grade_of(self, i: int) -> Grade:
        return self.grades[self.lattice.position(i)]

    def __len__(self) -> int:
        return len(self.grades)


@dataclass(frozen=True)
class SymbolicGrades:
    """An infinite grade semilattice, restricted on demand."""

    model: ModelSpec
    description: str

    def restrict(self, generators: Iterable[Grade]) -> GradeSemilattice:
        return restrict_grades(self.model, generators)


def _semilattice_of(model: ModelSpec, grades: Sequence[Grade], unit: Grade | None) -> GradeSemilattice:
    grades = tuple(sorted(grades, key=grade_order_key))
    pos = {g: i for i, g in enumerate(grades)}
    table = tuple(tuple(pos[grade_join(a, b)] for b in grades) for a in grades)
    lattice = FiniteSemilattice(
        tuple(range(len(grades))),
        table,
        pos[unit] if unit in pos else None,
        tuple(format_grade(g) for g in grades),
    )
    return GradeSemilattice(model, grades, lattice)


def restrict_grades(model: ModelSpec, generators: Iterable[Grade]) -> GradeSemilattice:
    """The finite sub-semilattice generated by the unit and the given grades."""
    found = {model.unit()}
    for g in generators:
        found.add(model.check_grade(g))
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(found):
                c = grade_join(a, b)
                if c not in found:
                    new.add(c)
        found |= new
        frontier = new
    return _semilattice_of(model, list(found), model.unit())


def enumerate_grades(model: ModelSpec) -> GradeSemilattice | SymbolicGrades:
    if model.is_finite:
        return _semilattice_of(model, model.finite_grades(), model.unit())
    if model.is_vector:
        return SymbolicGrades(
            model,
            f"rational subspaces L of Q^{model.n}; join L1+L2, meet L1&L2, unit {{0}}, top Q^{model.n}",
        )
    return SymbolicGrades(
        model,
        "free semilattice on R and the primes under union, unit {}, plus absorbing TOP",
    )


# raw descriptors, closure and quotients ------------------------------------


@dataclass(frozen=True)
class RawTopologyDescriptor:
    """A vector-group topology before non-quotient closure.

    ``include_ap`` records whether the almost periodic factor (L')^ap is
    present; without it the completion is just L.
    """

    subspace: RationalSubspace
    include_ap: bool = False

    @classmethod
    def from_grade(cls, g: VectorGrade) -> "RawTopologyDescriptor":
        return cls(g.subspace, True)


def closure_descriptor(d: RawTopologyDescriptor | VectorGrade) -> RawTopologyDescriptor:
    if isinstance(d, VectorGrade):
        return RawTopologyDescriptor.from_grade(d)
    return RawTopologyDescriptor(d.subspace, True)


def nq_closure(d: RawTopologyDescriptor | VectorGrade) -> VectorGrade:
    """tau -> tau v tau_ap in the vector model."""
    if isinstance(d, VectorGrade):
        return d
    return VectorGrade(d.subspace)


def is_quotient(a: RawTopologyDescriptor, b: RawTopologyDescriptor) -> bool:
    """Whether a is a quotient of b (compact kernel).

    Dropping the compact almost periodic factor is the only such quotient;
    shrinking the subspace leaves a non-compact vector direction in the kernel.
    """
    if a.subspace.ambient_dim != b.subspace.ambient_dim:
        raise DimensionMismatchError("descriptors live in different dimensions")
    return a.subspace == b.subspace and (not a.include_ap or b.include_ap)


# duality --------------------------------------------------------------------


@dataclass(frozen=True)
class DualDescriptor:
    """The dual topology on the character group: L is an open subgroup."""

    subspace: RationalSubspace

    def dual(self) -> VectorGrade:
        return VectorGrade(self.subspace)

    def intersect(self, other: "DualDescriptor") -> "DualDescriptor":
        """Intersection of the two dual topologies (the coarser common one)."""
        return DualDescriptor(self.subspace.sum(other.subspace))


def dual_descriptor(g: Grade) -> DualDescriptor:
    if not isinstance(g, VectorGrade):
        raise ModelMismatchError(f"no dual descriptor for non-vector grade {format_grade(g)}")
    return DualDescriptor(g.subspace)


def dual_join_law(a: VectorGrade, b: VectorGrade) -> bool:
    """Dual of a join equals the intersection of the duals."""
    lhs = dual_descriptor(grade_join(a, b))
    rhs = dual_descriptor(a).intersect(dual_descriptor(b))
    return lhs == rhs and lhs.subspace == a.subspace.sum(b.subspace)

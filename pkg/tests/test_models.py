from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spine.errors import DimensionMismatchError, DomainError, ModelMismatchError
from spine.models import (
    AxbGrade,
    DualDescriptor,
    ModelSpec,
    QGrade,
    RawTopologyDescriptor,
    SymbolicGrades,
    TwoPointGrade,
    VectorGrade,
    dual_descriptor,
    dual_join_law,
    enumerate_grades,
    format_grade,
    grade_join,
    grade_key,
    grade_leq,
    grade_meet,
    is_quotient,
    nq_closure,
)
from spine.semilattice import verify_axioms
from spine.subspace import RationalSubspace
from strategies import q_grades, subspaces, vector_grades


def span(rows, n=None):
    return RationalSubspace.span(rows, n)


def test_vector_join_is_subspace_sum():
    a, b = VectorGrade(span([[1, 0]])), VectorGrade(span([[0, 1]]))
    assert grade_join(a, b) == VectorGrade(RationalSubspace.full(2))
    assert grade_meet(a, b) == VectorGrade(RationalSubspace.zero(2))


def test_q_join_and_meet():
    assert grade_join(QGrade(("R",)), QGrade((2, 3))) == QGrade(("R", 2, 3))
    assert grade_meet(QGrade(("R", 2)), QGrade((2, 5))) == QGrade((2,))
    assert grade_join(QGrade((7,)), QGrade(top=True)) == QGrade(top=True)
    assert grade_meet(QGrade((7,)), QGrade(top=True)) == QGrade((7,))


def test_q_generators_are_sorted_and_validated():
    assert QGrade((5, "R", 2, 2)).generators == ("R", 2, 5)
    assert format_grade(QGrade((3, "R"))) == "{R,3}"
    with pytest.raises(DomainError):
        QGrade((4,))


def test_chain_meets():
    assert grade_meet(AxbGrade("realline"), AxbGrade("full")) == AxbGrade("realline")
    assert grade_join(TwoPointGrade("ap"), TwoPointGrade("full")) == TwoPointGrade("full")


def test_mismatched_families():
    with pytest.raises(ModelMismatchError):
        grade_join(TwoPointGrade("ap"), AxbGrade("ap"))
    with pytest.raises(ModelMismatchError):
        grade_join(VectorGrade(RationalSubspace.zero(2)), VectorGrade(RationalSubspace.zero(3)))


@pytest.mark.parametrize(
    "family,size", [("compact", 1), ("R", 2), ("Z", 2), ("minWAP", 2), ("Qp", 2), ("axb", 3)]
)
def test_finite_model_sizes(family, size):
    model = ModelSpec(family, p=5 if family == "Qp" else None)
    lat = enumerate_grades(model)
    assert len(lat) == size
    assert verify_axioms(lat.lattice) == []
    assert lat.grades[0] == model.unit()


def test_axb_is_a_chain():
    lat = enumerate_grades(ModelSpec("axb"))
    assert [format_grade(g) for g in lat.grades] == ["ap", "realline", "full"]
    assert all(grade_leq(a, b) for a, b in zip(lat.grades, lat.grades[1:]))


def test_infinite_models_are_symbolic():
    for model in (ModelSpec("Rn", 2), ModelSpec("Q")):
        assert isinstance(enumerate_grades(model), SymbolicGrades)


def test_restriction_of_q_to_three_generators():
    lat = enumerate_grades(ModelSpec("Q")).restrict([QGrade(("R",)), QGrade((2,)), QGrade((3,))])
    assert len(lat) == 8
    assert verify_axioms(lat.lattice) == []


def test_model_validation():
    with pytest.raises(DomainError):
        ModelSpec("Rn", 0)
    with pytest.raises(DomainError):
        ModelSpec("Qp", p=6)
    with pytest.raises(DomainError):
        ModelSpec("free")
    assert str(ModelSpec("Rn", 3)) == "R^3"
    assert str(ModelSpec("Qp", p=7)) == "Q_7"


def test_check_grade_rejects_foreign_grades():
    with pytest.raises(ModelMismatchError):
        ModelSpec("compact").check_grade(TwoPointGrade("ap"))
    with pytest.raises(ModelMismatchError):
        ModelSpec("Rn", 2).check_grade(VectorGrade(RationalSubspace.zero(3)))


def test_nq_closure():
    l = span([[1, 2]])
    assert nq_closure(RawTopologyDescriptor(l, False)) == VectorGrade(l)
    assert nq_closure(RawTopologyDescriptor(l, True)) == VectorGrade(l)
    assert nq_closure(nq_closure(RawTopologyDescriptor(l))) == nq_closure(RawTopologyDescriptor(l))


def test_quotients():
    l = span([[1, 0, 0]], 3)
    big = span([[1, 0, 0], [0, 1, 0]])
    assert is_quotient(RawTopologyDescriptor(l, False), RawTopologyDescriptor(l, True))
    assert not is_quotient(RawTopologyDescriptor(l, True), RawTopologyDescriptor(big, True))
    assert is_quotient(RawTopologyDescriptor(l, True), RawTopologyDescriptor(l, True))
    assert not is_quotient(RawTopologyDescriptor(l, True), RawTopologyDescriptor(l, False))
    with pytest.raises(DimensionMismatchError):
        is_quotient(RawTopologyDescriptor(l), RawTopologyDescriptor(span([[1, 0]])))


def test_dual_descriptor_examples():
    full = VectorGrade(RationalSubspace.full(3))
    assert dual_descriptor(full).subspace == RationalSubspace.full(3)
    assert dual_descriptor(VectorGrade(RationalSubspace.zero(3))).subspace.is_zero()
    assert dual_descriptor(full).dual() == full
    with pytest.raises(ModelMismatchError):
        dual_descriptor(TwoPointGrade("ap"))


def test_grade_key_is_deterministic():
    g = VectorGrade(span([[2, 4]]))
    assert grade_key(g) == '{"basis":[["1","2"]],"n":2,"type":"vector"}'


@given(vector_grades(3), vector_grades(3), vector_grades(3))
def test_vector_semilattice_laws(a, b, c):
    assert grade_join(a, b) == grade_join(b, a)
    assert grade_join(grade_join(a, b), c) == grade_join(a, grade_join(b, c))
    assert grade_join(a, a) == a
    assert grade_join(a, VectorGrade(RationalSubspace.zero(3))) == a
    assert grade_meet(a, grade_join(a, b)) == a


@given(q_grades, q_grades, q_grades)
def test_q_semilattice_laws(a, b, c):
    unit = QGrade()
    assert grade_join(a, b) == grade_join(b, a)
    assert grade_join(grade_join(a, b), c) == grade_join(a, grade_join(b, c))
    assert grade_join(a, a) == a and grade_join(a, unit) == a
    m = grade_meet(a, b)
    assert grade_leq(m, a) and grade_leq(m, b)
    assert grade_meet(a, grade_join(a, b)) == a


def test_finite_models_exhaustive():
    for fam in ("compact", "R", "Z", "minWAP", "axb"):
        grades = ModelSpec(fam).finite_grades()
        for a, b, c in product(grades, repeat=3):
            assert grade_join(grade_join(a, b), c) == grade_join(a, grade_join(b, c))
            assert grade_join(a, b) == grade_join(b, a)


@given(subspaces(3), subspaces(3))
def test_integer_and_real_models_share_the_lattice(a, b):
    r, z = ModelSpec("Rn", 3), ModelSpec("Zn", 3)
    ga, gb = VectorGrade(a), VectorGrade(b)
    r.check_grade(ga)
    z.check_grade(ga)
    assert grade_join(ga, gb) == VectorGrade(a + b)
    assert r.unit() == z.unit() and r.top() == z.top()


@given(subspaces(3), subspaces(3))
def test_dual_join_law(a, b):
    assert dual_join_law(VectorGrade(a), VectorGrade(b))
    joined = dual_descriptor(grade_join(VectorGrade(a), VectorGrade(b)))
    assert joined == DualDescriptor(a + b)
    assert joined == dual_descriptor(VectorGrade(a)).intersect(dual_descriptor(VectorGrade(b)))


@given(st.sampled_from(["compact", "R", "Z", "minWAP", "axb"]))
def test_unit_is_least(fam):
    model = ModelSpec(fam)
    for g in model.finite_grades():
        assert grade_leq(model.unit(), g)
        assert grade_leq(g, model.top())

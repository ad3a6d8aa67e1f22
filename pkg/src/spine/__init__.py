"""Exact computations on semilattices of group topologies, the spine
compactification on dense representatives, and graded trigonometric models."""

from .algebra import GradedElement, char_eval, graded_mul
from .cosets import Difference, Intersection, Leaf, Union
from .cyclotomic import Cyclotomic
from .errors import (
    DimensionMismatchError,
    DomainError,
    DslSyntaxError,
    InvalidHereditarySetError,
    ModelMismatchError,
    SemanticError,
    SizeLimitError,
    SpineError,
    UnknownElementError,
    UnsupportedScopeError,
)
from .homomorphisms import affine_pullback, restrict_check, synthesize_idempotent
from .models import (
    AxbGrade,
    ModelSpec,
    QGrade,
    RawTopologyDescriptor,
    TwoPointGrade,
    VectorGrade,
    dual_descriptor,
    dual_join_law,
    enumerate_grades,
    grade_join,
    grade_leq,
    grade_meet,
    is_quotient,
    nq_closure,
)
from .padic import PAdicWitness, abs_p, nu_p, padic_witness, q_distinctness_witness
from .semigroup import (
    CompatibleTuple,
    SpineElement,
    clifford_decompose,
    spine_idempotent,
    spine_mul,
    validate_tuple,
)
from .semilattice import (
    FiniteSemilattice,
    enumerate_hereditary_sets,
    is_hereditary,
    is_principal,
    leq,
    principal_set,
    semicharacters,
    verify_axioms,
)
from .subspace import RationalSubspace
from .trig import TrigPolynomial, trig_mul

__version__ = "0.1.0"


def subspace_sum(a: RationalSubspace, b: RationalSubspace) -> RationalSubspace:
    return a.sum(b)


def subspace_intersect(a: RationalSubspace, b: RationalSubspace) -> RationalSubspace:
    return a.intersect(b)

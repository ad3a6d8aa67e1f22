import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spine.algebra import GradedElement
from spine.cyclotomic import Cyclotomic
from spine.errors import DomainError
from spine.models import ModelSpec, VectorGrade
from spine.serialize import (
    coeff_from_json,
    coeff_to_json,
    graded_dumps,
    graded_from_json,
    graded_loads,
    spine_from_json,
    spine_to_json,
)
from spine.subspace import RationalSubspace
from strategies import ALL_MODELS, rand_graded, spine_elements

F = Fraction
MODELS = [ModelSpec("Rn", 2), ModelSpec("Zn", 2), ModelSpec("R"), ModelSpec("Z"), ModelSpec("Q")]


def test_gaussian_coefficient_format():
    assert coeff_to_json(Cyclotomic.gaussian(F(1, 2), -3)) == {"re": "1/2", "im": "-3"}
    assert coeff_from_json({"re": "1/2", "im": "-3"}) == Cyclotomic.gaussian(F(1, 2), -3)


def test_cyclotomic_coefficient_round_trip():
    c = Cyclotomic.root_of_unity(F(1, 5)) * F(2, 3) + 1
    assert coeff_from_json(coeff_to_json(c)) == c


def test_known_document():
    u = GradedElement.single(ModelSpec("Rn", 2), VectorGrade(RationalSubspace.span([[1, 0]])), (F(1, 2), 0), 3)
    doc = json.loads(graded_dumps(u))
    assert doc["model"] == "R^2"
    assert graded_loads(graded_dumps(u)) == u


@pytest.mark.parametrize("model", MODELS, ids=str)
@given(st.integers(0, 10**9))
def test_bit_exact_round_trip(model, seed):
    u = rand_graded(random.Random(seed), model)
    text = graded_dumps(u)
    back = graded_loads(text)
    assert back == u
    assert graded_dumps(back) == text
    assert back.norm() == u.norm()


@pytest.mark.parametrize("model", ALL_MODELS, ids=str)
@given(data=st.data())
def test_spine_round_trip(model, data):
    s = data.draw(spine_elements(model))
    assert spine_from_json(json.loads(json.dumps(spine_to_json(s)))) == s


@pytest.mark.parametrize(
    "doc",
    [
        {"model": "R^2", "parts": [{"grade": {"type": "vector", "n": 2, "basis": []}, "terms": [{"freq": ["0.5", "0"], "coeff": {"re": "1", "im": "0"}}]}]},
        {"model": "R^2", "parts": [{"grade": {"type": "vector", "n": 2, "basis": []}, "terms": [{"freq": ["1", "0", "0"], "coeff": {"re": "1", "im": "0"}}]}]},
        {"model": "R^2"},
        {"model": "axb", "parts": []},
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(DomainError):
        graded_from_json(doc)

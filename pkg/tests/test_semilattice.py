from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from spine.errors import InvalidHereditarySetError, SizeLimitError, UnknownElementError
from spine.semilattice import (
    FiniteSemilattice,
    covering_pairs,
    enumerate_hereditary_sets,
    indicator,
    is_hereditary,
    is_principal,
    leq,
    meet,
    principal_set,
    semicharacters,
    verify_axioms,
)

CHAIN = FiniteSemilattice.chain(["ap", "mid", "top"])
AP, MID, TOP = 0, 1, 2


def labels(s, xs):
    return sorted(s.label(x) for x in xs)


def brute_semicharacters(s):
    """Every {0,1} function on the elements, filtered by the multiplicative law."""
    out = []
    for values in product((0, 1), repeat=len(s)):
        w = dict(zip(s.elements, values))
        if any(values) and all(w[s.join(x, y)] == w[x] * w[y] for x in s.elements for y in s.elements):
            out.append(w)
    return out


def brute_hereditary(s):
    out = []
    for bits in product((0, 1), repeat=len(s)):
        h = {x for x, b in zip(s.elements, bits) if b}
        if not h:
            continue
        down = all(y in h for x in h for y in s.elements if s.join(y, x) == x)
        directed = all(s.join(x, y) in h for x in h for y in h)
        if down and directed:
            out.append(frozenset(h))
    return out


@st.composite
def random_semilattices(draw, max_gens=4):
    """Sub-semilattices of a power set, generated by random subsets."""
    k = draw(st.integers(1, max_gens))
    gens = draw(st.lists(st.integers(0, (1 << k) - 1), min_size=1, max_size=5))
    els = set(gens)
    changed = True
    while changed:
        new = {a | b for a in els for b in els} - els
        changed = bool(new)
        els |= new
    els = sorted(els)
    assume(len(els) <= 10)
    return FiniteSemilattice.from_join(els, lambda a, b: a | b)


def test_chain_axioms_hold():
    assert verify_axioms(CHAIN) == []


def test_noncommutative_table_reports_pair():
    table = ((0, 1), (0, 1))
    s = FiniteSemilattice((0, 1), table)
    bad = verify_axioms(s)
    assert ("commutativity", (0, 1)) in [(v.law, v.elements) for v in bad]


def test_free_semilattice_on_three_generators():
    s = FiniteSemilattice.free(["R", "2", "3"])
    assert len(s) == 8
    assert verify_axioms(s) == []


def test_leq_examples():
    assert leq(CHAIN, AP, TOP)
    assert not leq(CHAIN, TOP, MID)
    f = FiniteSemilattice.free(["R", "2"])
    assert leq(f, f.id_for_label("{R}"), f.id_for_label("{R,2}"))


def test_principal_sets():
    assert labels(CHAIN, principal_set(CHAIN, MID)) == ["ap", "mid"]
    assert principal_set(CHAIN, AP) == {AP}
    f = FiniteSemilattice.free(["R", "2", "3"])
    got = labels(f, principal_set(f, f.id_for_label("{R,2}")))
    assert got == sorted(["{}", "{R}", "{2}", "{R,2}"])


def test_hereditary_enumeration_examples():
    hs = enumerate_hereditary_sets(CHAIN)
    assert [labels(CHAIN, h) for h in hs] == [["ap"], ["ap", "mid"], ["ap", "mid", "top"]]
    assert len(enumerate_hereditary_sets(FiniteSemilattice.free(["a", "b"]))) == 4
    assert len(enumerate_hereditary_sets(FiniteSemilattice.chain(["x"]))) == 1


def test_semicharacter_examples():
    assert len(semicharacters(CHAIN)) == 3
    ind = indicator(CHAIN, {AP, MID})
    assert ind in semicharacters(CHAIN)
    assert {x: 0 for x in CHAIN.elements} not in semicharacters(CHAIN)


def test_is_principal_examples():
    assert is_principal(CHAIN, {AP, MID}) == (True, MID)
    assert is_principal(CHAIN, {AP}) == (True, AP)
    with pytest.raises(InvalidHereditarySetError):
        is_principal(CHAIN, {MID})


def test_unknown_identifier():
    with pytest.raises(UnknownElementError):
        leq(CHAIN, AP, 7)
    with pytest.raises(UnknownElementError):
        principal_set(CHAIN, -1)


def test_size_limit():
    big = FiniteSemilattice.chain([str(i) for i in range(21)])
    with pytest.raises(SizeLimitError):
        enumerate_hereditary_sets(big)
    with pytest.raises(SizeLimitError):
        semicharacters(big)


def test_covering_pairs():
    assert covering_pairs(CHAIN) == [(AP, MID), (MID, TOP)]
    assert covering_pairs(FiniteSemilattice.chain(["x"])) == []
    assert len(covering_pairs(FiniteSemilattice.free(["a", "b"]))) == 4


def test_meet_in_diamond():
    f = FiniteSemilattice.free(["a", "b"])
    assert meet(f, 1, 2) == 0
    assert meet(f, 3, 1) == 1


@given(random_semilattices())
def test_duality_bijection(s):
    hs = enumerate_hereditary_sets(s)
    chars = semicharacters(s)
    assert sorted(map(sorted, hs)) == sorted(map(sorted, brute_hereditary(s)))
    assert len(hs) == len(chars)
    assert sorted(indicator(s, h).items() for h in hs) == sorted(c.items() for c in chars)
    assert {tuple(sorted(w.items())) for w in brute_semicharacters(s)} == {
        tuple(sorted(c.items())) for c in chars
    }


@given(random_semilattices())
def test_every_hereditary_set_is_principal(s):
    for h in enumerate_hereditary_sets(s):
        ok, x = is_principal(s, h)
        assert ok and principal_set(s, x) == h


@given(random_semilattices())
def test_leq_is_partial_order(s):
    els = s.elements
    for x in els:
        assert leq(s, x, x)
    for x, y in product(els, repeat=2):
        if leq(s, x, y) and leq(s, y, x):
            assert x == y
    for x, y, z in product(els, repeat=3):
        if leq(s, x, y) and leq(s, y, z):
            assert leq(s, x, z)


@given(random_semilattices())
def test_principal_intersections(s):
    for x, y in product(s.elements, repeat=2):
        common = principal_set(s, x) & principal_set(s, y)
        m = meet(s, x, y)
        if common:
            assert is_hereditary(s, common)
        if m is not None:
            assert common == principal_set(s, m)

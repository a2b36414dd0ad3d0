import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import closure_roots, root_coords
from rhotensor.errors import InvalidSpec, NonDominantInput
from rhotensor.rootsystem import (
    RootSystemSpec,
    apply_word,
    build_root_datum,
    dominate,
    dual_weight,
    eval_coweight,
    inverse_word,
    is_reduced,
    longest_element,
    parse_spec,
    simple_reflection,
    to_root_basis,
    word_length,
)

ALL_TYPES = ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C2", "C3",
             "C4", "C5", "C6", "D4", "D5", "D6", "G2", "F4", "E6", "E7", "E8"]
SMALL = ["A1", "A2", "A3", "B2", "C3", "B3", "G2", "D4", "F4"]


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "Z9", "", "A"])
def test_invalid_specs(text):
    with pytest.raises(InvalidSpec):
        parse_spec(text)


def test_c2_is_accepted():
    d = build_root_datum("C2")
    assert d.num_positive_roots == 4


@pytest.mark.parametrize("t", ALL_TYPES)
def test_datum_invariants(t):
    d = build_root_datum(t)
    r = d.rank
    for i in range(r):
        assert d.cartan[i][i] == 2
        for j in range(r):
            if i != j:
                assert d.cartan[i][j] <= 0
            s = sum(d.cartan[i][k] * d.cartan_inverse[k][j] for k in range(r))
            assert s == (1 if i == j else 0)
    assert d.dim_g == 2 * d.num_positive_roots + r
    assert d.rho == (1,) * r
    half = tuple(Fraction(sum(b[k] for b in d.positive_roots), 2) for k in range(r))
    assert to_root_basis(d, d.rho) == half


@pytest.mark.parametrize("t", ["A1", "A2", "A4", "B3", "C4", "D5", "G2", "F4", "E6"])
def test_positive_roots_match_reflection_closure(t):
    d = build_root_datum(t)
    roots = closure_roots(d.cartan)
    positive = {w for w in roots if all(c >= 0 for c in root_coords(d.cartan, w))}
    assert len(roots) == 2 * len(positive)
    assert positive == set(d.positive_roots_fund)


def test_known_examples():
    a2 = build_root_datum("A2")
    assert (a2.num_positive_roots, a2.dim_g) == (3, 8)
    a1 = build_root_datum("A1")
    assert a1.cartan == ((2,),) and a1.positive_roots == ((1,),) and a1.rho == (1,)
    g2 = build_root_datum("G2")
    assert (g2.num_positive_roots, g2.dim_g) == (6, 14)
    assert to_root_basis(g2, g2.rho) == (5, 3)
    f4 = build_root_datum("F4")
    assert to_root_basis(f4, f4.rho) == (8, 15, 21, 11)
    e8 = build_root_datum("E8")
    assert to_root_basis(e8, e8.rho) == (46, 68, 91, 135, 110, 84, 57, 29)


def test_simple_reflection_examples():
    a1, a2 = build_root_datum("A1"), build_root_datum("A2")
    assert simple_reflection(a1, 1, (-1,)) == (1,)
    assert simple_reflection(a2, 1, (1, 1)) == (-1, 2)
    for t in SMALL:
        d = build_root_datum(t)
        for i in range(1, d.rank + 1):
            assert simple_reflection(d, i, (0,) * d.rank) == (0,) * d.rank


@pytest.mark.parametrize("t", SMALL)
def test_simple_reflection_involution_1000_samples(t):
    d = build_root_datum(t)
    rng = random.Random(1234)
    for _ in range(1000):
        w = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(d.rank))
        i = rng.randint(1, d.rank)
        img = simple_reflection(d, i, w)
        assert simple_reflection(d, i, img) == w
        diff = to_root_basis(d, tuple(x - y for x, y in zip(w, img)))
        assert all(c == 0 for k, c in enumerate(diff) if k != i - 1)


def test_apply_word_examples():
    a1, a2 = build_root_datum("A1"), build_root_datum("A2")
    assert apply_word(a2, (), (3, -4)) == (3, -4)
    assert apply_word(a1, (1,), (1,)) == (-1,)
    assert apply_word(a2, (1, 2, 1), (1, 1)) == (-1, -1)


@settings(max_examples=200, deadline=None)
@given(t=st.sampled_from(SMALL), data=st.data())
def test_apply_word_inverse(t, data):
    d = build_root_datum(t)
    word = tuple(data.draw(st.lists(st.integers(1, d.rank), max_size=12)))
    w = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=d.rank, max_size=d.rank)))
    assert apply_word(d, word, apply_word(d, inverse_word(word), w)) == w


def test_to_root_basis_examples():
    a1, a2 = build_root_datum("A1"), build_root_datum("A2")
    assert to_root_basis(a2, (1, 1)) == (1, 1)
    assert to_root_basis(a1, (1,)) == (Fraction(1, 2),)
    assert to_root_basis(a2, (0, 0)) == (0, 0)


def test_eval_coweight():
    a1, a2 = build_root_datum("A1"), build_root_datum("A2")
    assert eval_coweight(a2, (1, 1), 1) == 1
    assert eval_coweight(a1, (1,), 1) == Fraction(1, 2)
    for t in SMALL:
        d = build_root_datum(t)
        for j in range(1, d.rank + 1):
            for k in range(1, d.rank + 1):
                assert eval_coweight(d, d.cartan[j - 1], k) == (1 if j == k else 0)


def test_dominate_examples():
    a1, a2 = build_root_datum("A1"), build_root_datum("A2")
    assert dominate(a2, (2, 3)) == ((2, 3), ())
    assert dominate(a1, (-3,)) == ((3,), (1,))
    assert dominate(a2, (-1, 2)) == ((1, 1), (1,))


@settings(max_examples=300, deadline=None)
@given(t=st.sampled_from(SMALL), data=st.data())
def test_dominate_properties(t, data):
    d = build_root_datum(t)
    w = tuple(data.draw(st.lists(st.integers(-8, 8), min_size=d.rank, max_size=d.rank)))
    dom, word = dominate(d, w)
    assert all(x >= 0 for x in dom)
    assert apply_word(d, word, w) == dom
    assert len(word) <= d.num_positive_roots
    assert is_reduced(d, word)
    assert dominate(d, dom) == (dom, ())


def test_longest_element_examples():
    a2 = build_root_datum("A2")
    assert longest_element(a2, []) == ()
    w0 = longest_element(a2)
    assert len(w0) == 3 and apply_word(a2, w0, a2.rho) == (-1, -1)
    wj = longest_element(a2, [1])
    assert wj == (1,)
    diff = tuple(x - y for x, y in zip(a2.rho, apply_word(a2, wj, a2.rho)))
    assert diff == a2.cartan[0]


@pytest.mark.parametrize("t", SMALL + ["E6"])
def test_longest_element_properties(t):
    d = build_root_datum(t)
    w0 = longest_element(d)
    assert len(w0) == d.num_positive_roots == word_length(d, w0)
    rng = random.Random(7)
    for _ in range(50):
        lam = tuple(rng.randint(0, 5) for _ in range(d.rank))
        assert all(x <= 0 for x in apply_word(d, w0, lam))
    for mask in range(1 << d.rank):
        J = [j for j in range(1, d.rank + 1) if mask >> (j - 1) & 1]
        wj = longest_element(d, J)
        n_j = sum(1 for root in d.positive_roots
                  if all(root[k] == 0 or (k + 1) in J for k in range(d.rank)))
        assert len(wj) == n_j and is_reduced(d, wj)
        img = apply_word(d, wj, d.rho)
        assert all(img[j - 1] == -1 for j in J)


def test_dual_weight():
    a2 = build_root_datum("A2")
    assert dual_weight(a2, (1, 0)) == (0, 1)
    g2 = build_root_datum("G2")
    assert apply_word(g2, longest_element(g2), g2.rho) == (-1, -1)
    for lam in [(0, 0), (1, 0), (3, 2)]:
        assert dual_weight(g2, lam) == lam
    for t in ["A1", "B3", "C4", "D4", "E7", "E8", "F4", "G2"]:
        d = build_root_datum(t)
        lam = tuple(range(1, d.rank + 1))
        assert dual_weight(d, lam) == lam
    for t in ["A3", "D5", "E6"]:
        d = build_root_datum(t)
        lam = tuple(range(1, d.rank + 1))
        assert dual_weight(d, lam) != lam
        assert dual_weight(d, dual_weight(d, lam)) == lam
        assert dual_weight(d, (0,) * d.rank) == (0,) * d.rank
    with pytest.raises(NonDominantInput):
        dual_weight(a2, (-1, 0))


def test_spec_is_hashable_and_ordered():
    assert RootSystemSpec("A", 2) == parse_spec("a2")
    assert build_root_datum("A2") == build_root_datum(RootSystemSpec("A", 2))

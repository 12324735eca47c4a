import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from opposition.core import product
from opposition.diagrams import RelationKind as R
from opposition.instances import (
    MatrixOrderConfig,
    MultiplicityConfig,
    NegationGenerator,
    SignedMultiset,
    UnsupportedOperation,
    antisymmetry_witness,
    classical_complement,
    fixed_point,
    load_generator,
    load_matrix,
    load_multiset,
    matrix_leq,
    matrix_zero_member,
    matrix_zero_member_stated,
    multiset_leq,
    multiset_leq_literal,
    multiset_neg,
    multiset_union,
    parse_formula,
    prop_square,
    strong_negation,
    three_valued,
    truth_vector,
    tv_relation,
    zero_discrepancy,
)
from opposition.instances.truthtable import And, Implies, Not, Var

M = SignedMultiset.of


# ------------------------------------------------------------ three-valued

def test_three_valued():
    t3 = three_valued()
    assert {t3.labels[z] for z in t3.zeros} == {"h", "1"}
    assert t3.labels[t3.neg[t3.index("h")]] == "h"


def test_powers_of_three_valued_admitted():
    t3 = three_valued()
    assert len(product([t3, t3, t3]).zeros) == 8


# ------------------------------------------------------------ signed multisets

def test_multiset_order_examples():
    assert multiset_leq(M({"x": 1}), M({"x": 2}))
    assert not multiset_leq(M({"x": 1}), M({}))
    empty = M({})
    assert multiset_leq(multiset_neg(empty), empty)


def test_multiset_neg_and_union():
    a = M({"x": 2, "y": -1})
    assert multiset_neg(a) == M({"x": -2, "y": 1})
    assert multiset_union(a, M({"x": -2, "y": 1})) == M({})
    assert multiset_union(M({"x": 1}), M({"x": 1})) == M({"x": 2})


def test_canonical_form_drops_zero_multiplicities():
    assert M({"x": 0, "y": 3}) == M({"y": 3})
    assert M({"x": 0}).get("x") == 0


def test_literal_rule_breaks_antisymmetry():
    one, empty = M({"x": 1}), M({})
    assert multiset_leq_literal(one, empty) and multiset_leq_literal(empty, one) and one != empty
    assert multiset_leq(empty, one) and not multiset_leq(one, empty)


def test_invalid_multiplicity():
    with pytest.raises(ValueError):
        M({"x": 1.5})
    with pytest.raises(ValueError):
        load_multiset({"items": {}})
    assert load_multiset({"entries": {"x": 2}}) == M({"x": 2})


def test_three_valued_multiplicities():
    cfg = MultiplicityConfig.from_structure(three_valued(), "h")
    a = SignedMultiset.of({"x": "1", "y": "h"}, cfg)
    assert a.entries == (("x", "1"),)
    assert multiset_neg(a, cfg) == SignedMultiset.of({"x": "0"}, cfg)
    assert multiset_leq(multiset_neg(a, cfg), a, cfg)
    assert not multiset_leq(a, multiset_neg(a, cfg), cfg)
    with pytest.raises(UnsupportedOperation):
        multiset_union(a, a, cfg)
    with pytest.raises(ValueError):
        MultiplicityConfig.from_structure(three_valued(), "0")


def test_fraction_multiplicities_with_group():
    cfg = MultiplicityConfig(leq=lambda a, b: a <= b, neg=lambda a: -a, zero=Fraction(0),
                             op=lambda a, b: a + b, contains=lambda m: isinstance(m, Fraction))
    a = SignedMultiset.of({"x": Fraction(1, 2)}, cfg)
    assert multiset_union(a, multiset_neg(a, cfg), cfg) == SignedMultiset.of({}, cfg)


multisets = st.dictionaries(st.sampled_from("abcde"), st.integers(-3, 3), max_size=5).map(M)


@given(multisets, multisets, multisets)
def test_multiset_order_laws(a, b, c):
    assert multiset_leq(a, a)
    if multiset_leq(a, b) and multiset_leq(b, a):
        assert a == b
    if multiset_leq(a, b) and multiset_leq(b, c):
        assert multiset_leq(a, c)
    assert multiset_leq(a, b) == multiset_leq(multiset_neg(b), multiset_neg(a))
    assert multiset_neg(multiset_neg(a)) == a


@given(multisets, multisets, multisets)
def test_multiset_union_group_laws(a, b, c):
    assert multiset_union(a, b) == multiset_union(b, a)
    assert multiset_union(multiset_union(a, b), c) == multiset_union(a, multiset_union(b, c))
    assert multiset_union(a, M({})) == a
    assert multiset_union(a, multiset_neg(a)) == M({})


# ------------------------------------------------------------ classical sets

def test_classical_complement_examples():
    u = M({"x": 1, "y": 1})
    assert classical_complement(M({"x": 1}), u) == M({"y": 1})
    assert classical_complement(u, u) == M({})
    assert classical_complement(M({}), u) == u


@pytest.mark.parametrize("a", [M({"x": 2}), M({"x": -1}), M({"z": 1})])
def test_classical_complement_rejects(a):
    with pytest.raises(ValueError):
        classical_complement(a, M({"x": 1, "y": 1}))


# ------------------------------------------------------------ truth vectors

def test_truth_vector_rows():
    assert truth_vector("P & Q", ["P", "Q"]).bits == (0, 0, 0, 1)
    assert truth_vector("P >> Q", ["P", "Q"]).bits == (1, 1, 0, 1)
    assert truth_vector("P -> Q", ["P", "Q"]).bits == (1, 1, 0, 1)
    assert truth_vector("~P", ["P"]).bits == (1, 0)
    assert truth_vector("P | Q", ["P", "Q"]).bits == (0, 1, 1, 1)
    # first variable is the most significant bit
    assert truth_vector("P", ["P", "Q"]).bits == (0, 0, 1, 1)


def test_truth_vector_errors():
    with pytest.raises(KeyError):
        truth_vector("P & R", ["P", "Q"])
    with pytest.raises(ValueError):
        parse_formula("P + Q")
    with pytest.raises(ValueError):
        tv_relation(truth_vector("P", ["P"]), truth_vector("P", ["P", "Q"]), R.CONTRARY)


def test_tv_relations():
    v = ["P", "Q"]
    assert tv_relation(truth_vector("P & Q", v), truth_vector("P & ~Q", v), R.CONTRARY)
    assert tv_relation(truth_vector("P & Q", v), truth_vector("P >> Q", v), R.SUB_IMPLICATION)
    assert tv_relation(truth_vector("P >> Q", v), truth_vector("P >> ~Q", v), R.SUBCONTRARY)
    assert tv_relation(truth_vector("P & Q", v), truth_vector("P >> ~Q", v), R.CONTRADICTORY)


def test_prop_square():
    r = prop_square()
    assert r.ok and len(r.claims) == 6 and r.admissible_point_count == 4


formulas = st.recursive(
    st.sampled_from([Var("P"), Var("Q"), Var("R")]),
    lambda f: st.one_of(st.builds(Not, f), st.builds(And, f, f), st.builds(Implies, f, f)),
    max_leaves=8,
)


@given(formulas)
def test_double_negation_and_contradiction(f):
    vs = ["P", "Q", "R"]
    assert truth_vector(Not(Not(f)), vs) == truth_vector(f, vs)
    assert tv_relation(truth_vector(f, vs), truth_vector(Not(f), vs), R.CONTRADICTORY)


# ------------------------------------------------------------ matrices

CFG1, CFG2 = MatrixOrderConfig(1), MatrixOrderConfig(2)


def test_matrix_examples():
    assert matrix_leq([[0]], [[1]], CFG1)
    assert matrix_leq([[1j]], [[0]], CFG1) and matrix_leq([[0]], [[1j]], CFG1)
    assert matrix_leq(np.zeros((2, 2)), np.eye(2), CFG2)
    assert not matrix_leq(np.eye(2), np.zeros((2, 2)), CFG2)


def test_matrix_zero_membership():
    assert matrix_zero_member([[0]], CFG1) and matrix_zero_member_stated([[0]], CFG1)
    assert matrix_zero_member([[1j]], CFG1) and matrix_zero_member_stated([[1j]], CFG1)
    assert matrix_zero_member([[1]], CFG1) and not matrix_zero_member_stated([[1]], CFG1)
    assert zero_discrepancy([[1]], CFG1) is not None
    assert zero_discrepancy([[0]], CFG1) is None


def test_matrix_dimension_mismatch():
    with pytest.raises(ValueError):
        matrix_leq(np.eye(2), np.eye(3), CFG2)
    with pytest.raises(ValueError):
        MatrixOrderConfig(2, tolerance=-1.0)


def test_antisymmetry_witness():
    a, b = antisymmetry_witness(3)
    cfg = MatrixOrderConfig(3)
    assert matrix_leq(a, b, cfg) and matrix_leq(b, a, cfg) and not np.allclose(a, b)
    d = b - a
    assert np.allclose(d, -d.conj().T)


def test_load_matrix():
    m = load_matrix([[[1, 0], [0, 1]], [[0, -1], [2, 0]]])
    assert m[0, 1] == 1j and m[1, 0] == -1j and m[1, 1] == 2
    with pytest.raises(ValueError):
        load_matrix([[[1, 0]], [[1, 0]]])


@given(st.integers(0, 10_000))
def test_matrix_preorder_samples(seed):
    rng = np.random.default_rng(seed)
    cfg = MatrixOrderConfig(2)
    a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
    assert matrix_leq(a, a, cfg)
    assert matrix_leq(a, b, cfg) == matrix_leq(-b, -a, cfg)
    if matrix_leq(a, b, cfg) and matrix_leq(b, c, cfg):
        assert matrix_leq(a, c, cfg)


# ------------------------------------------------------------ strong negation

def test_strong_negation_examples():
    sq = NegationGenerator.power(2.0)
    assert strong_negation(sq, 0.0) == 1.0
    assert strong_negation(sq, 0.6) == pytest.approx(math.sqrt(1 - 0.36), abs=1e-12)
    assert strong_negation(sq, 0.6) == pytest.approx(0.8, abs=1e-12)
    assert strong_negation(NegationGenerator.identity(), 0.25) == 0.75


def test_strong_negation_domain():
    with pytest.raises(ValueError):
        strong_negation(NegationGenerator.identity(), 1.5)
    with pytest.raises(ValueError):
        NegationGenerator.power(0)
    with pytest.raises(ValueError):
        NegationGenerator(lambda x: 1 - np.asarray(x), lambda y: 1 - np.asarray(y))


def test_fixed_points():
    assert fixed_point(NegationGenerator.power(2.0)) == pytest.approx(math.sqrt(0.5))
    assert fixed_point(NegationGenerator.identity()) == 0.5


def test_table_generator():
    g = load_generator({"kind": "table", "xs": [0, 0.5, 1], "ys": [0, 0.25, 1]})
    x = np.linspace(0, 1, 101)
    assert np.max(np.abs(strong_negation(g, strong_negation(g, x)) - x)) < 1e-12
    assert load_generator({"kind": "power", "p": 2}).name == "power(p=2)"
    with pytest.raises(ValueError):
        load_generator({"kind": "cubic"})


@given(st.floats(0.2, 2.0), st.floats(0.0, 1.0))
def test_strong_negation_properties(p, x):
    g = NegationGenerator.power(p)
    nx = strong_negation(g, x)
    assert abs(strong_negation(g, nx) - x) <= 1e-9
    xs = fixed_point(g)
    if abs(x - xs) > 1e-9:
        assert (nx <= x) == (x >= xs)


@given(st.floats(2.0, 8.0), st.floats(0.0, 1.0))
def test_strong_negation_involution_in_phi_space(p, x):
    # for steep phi, 1 - phi(x) drops the low bits of small x; compare through phi
    g = NegationGenerator.power(p)
    assert abs(g.phi(strong_negation(g, strong_negation(g, x))) - g.phi(x)) <= 1e-12

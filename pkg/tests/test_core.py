import itertools

import pytest
from hypothesis import given, strategies as st

from opposition.core import (
    ClassCStructure,
    NotInClassC,
    RawStructure,
    StructureError,
    admit,
    close_order,
    falsifies,
    load_structure,
    parse_structure,
    product,
    validate_axioms,
    zeros,
)
from opposition.instances import swap_antichain, three_valued

from .conftest import SMALL_STRUCTURES


def labels(elems):
    return {e.label for e in elems}


def test_t3_passes_every_axiom(t3):
    r = validate_axioms(t3)
    assert r.ok and r.failed() == [] and r.witnesses == {}


def test_antichain_swap_has_no_zeros():
    r = validate_axioms(swap_antichain())
    assert r.failed() == ["zeros_nonempty"]
    with pytest.raises(NotInClassC) as exc:
        admit(swap_antichain())
    assert exc.value.report.zeros_nonempty_ok is False


def test_non_involutive_negation_reported():
    t3 = three_valued()
    bad = RawStructure(t3.labels, t3.leq, (1, 2, 0))
    r = validate_axioms(bad)
    assert not r.involution_ok
    assert r.witnesses["involution"][0] == (0,)
    assert bad.neg[bad.neg[0]] == 2  # neg(neg(0)) = 1 != 0


def test_zero_sets(t3, b2):
    assert labels(zeros(t3)) == {"h", "1"}
    assert labels(zeros(b2)) == {"1"}


def test_product_of_t3_with_itself(t3):
    p = product([t3, t3])
    assert len(p) == 9
    assert labels(zeros(p)) == {f"({x},{y})" for x in ("h", "1") for y in ("h", "1")}


def test_unary_product_is_t3(t3):
    p = product([t3])
    assert p.labels == t3.labels and p.leq == t3.leq and p.neg == t3.neg


def test_product_of_booleans_is_bit_vector_order(b2):
    p = product([b2, b2])
    bits = [tuple(int(c) for c in lab.strip("()").split(",")) for lab in p.labels]
    for i, j in itertools.product(range(4), repeat=2):
        assert p.le(i, j) == all(a <= b for a, b in zip(bits[i], bits[j]))
    assert labels(zeros(p)) == {"(1,1)"}


def test_product_of_nothing():
    with pytest.raises(ValueError):
        product([])


def test_close_order_cover_chain():
    m = close_order([(0, 1), (1, 2)], "cover", 3)
    true = {(i, j) for i in range(3) for j in range(3) if m[i][j]}
    assert true == {(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)}


def test_close_order_full_empty_is_antichain():
    assert close_order([], "full", 2) == ((True, False), (False, True))


def test_close_order_symmetric_pair_fails_antisymmetry_later():
    m = close_order([(0, 1), (1, 0)], "cover", 2)
    assert m[0][1] and m[1][0]
    r = validate_axioms(RawStructure(("a", "b"), m, (0, 1)))
    assert r.witnesses["antisymmetric"] == [(0, 1)]


def test_close_order_out_of_range():
    with pytest.raises(StructureError):
        close_order([(0, 3)], "cover", 3)


def test_malformed_tables_rejected():
    with pytest.raises(StructureError):
        RawStructure(("a", "b"), ((True,),), (1, 0))
    with pytest.raises(StructureError):
        RawStructure(("a",), ((True,),), (2,))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=10))))
def test_cover_closure_is_reflexive_and_transitive(arg):
    n, pairs = arg
    m = close_order(pairs, "cover", n)
    for i in range(n):
        assert m[i][i]
    for a, b, c in itertools.product(range(n), repeat=3):
        if m[a][b] and m[b][c]:
            assert m[a][c]
    for a, b in pairs:
        assert m[a][b]


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.booleans(), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
)))
def test_axiom_witnesses_really_falsify(arg):
    n, leq, neg = arg
    s = RawStructure.build([str(i) for i in range(n)], leq, neg)
    r = validate_axioms(s)
    for ax in r.failed():
        assert r.witnesses[ax]
        if ax == "zeros_nonempty":
            assert all(falsifies(s, ax, w) for w in r.witnesses[ax])
            assert len(r.witnesses[ax]) == n
        else:
            assert all(falsifies(s, ax, w) for w in r.witnesses[ax])


@pytest.mark.parametrize("s", SMALL_STRUCTURES, ids=lambda s: s.name)
def test_admitted_structure_invariants(s: ClassCStructure):
    n = len(s)
    for a, b in itertools.product(range(n), repeat=2):
        assert s.le(a, b) == s.le(s.neg[b], s.neg[a])
    assert all(s.neg[s.neg[x]] == x for x in range(n))
    assert s.zeros and s.zeros == {x for x in range(n) if s.le(s.neg[x], x)}
    for z in s.zeros:
        if s.neg[z] in s.zeros:
            assert s.neg[z] == z


def test_products_of_small_structures_are_admitted():
    picks = SMALL_STRUCTURES[:: max(1, len(SMALL_STRUCTURES) // 12)]
    for a, b in itertools.product(picks[:6], repeat=2):
        p = product([a, b])
        expect = {(x, y) for x in a.zeros for y in b.zeros}
        got = {(i // len(b), i % len(b)) for i in p.zeros}
        assert got == expect


def test_structure_file_roundtrip(tmp_path):
    f = tmp_path / "t3.json"
    f.write_text('{"name": "T3", "elements": ["0","h","1"], "neg": {"0":"1","h":"h","1":"0"},'
                 ' "order": {"kind": "cover", "pairs": [["0","h"],["h","1"]]}}')
    s = admit(load_structure(f))
    assert s.leq == three_valued().leq and labels(zeros(s)) == {"h", "1"}


@pytest.mark.parametrize("doc", [
    {"elements": ["a"], "neg": {"b": "a"}},
    {"elements": ["a", "b"], "neg": {"a": "b"}},
    {"elements": ["a"], "neg": {"a": "a"}, "order": {"pairs": [["a", "zz"]]}},
    {"elements": ["a"]},
])
def test_bad_structure_documents(doc):
    with pytest.raises(StructureError):
        parse_structure(doc)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import frames, omega_frames
from oracles import Order, all_nuclei, fixset, random_closure
from localelab import corpus
from localelab.config import Caps, set_caps
from localelab.errors import FrameMismatch, NotAClosure, NotANucleus, NotASublocaleSet, SizeLimit
from localelab.nuclei import (
    ClosureOperator,
    Nucleus,
    boolean_sublocale,
    constant_top,
    double_negation,
    enumerate_nuclei,
    generated_by_closure,
    generated_by_set,
    identity_nucleus,
    is_closure_operator,
    is_dense,
    is_nucleus,
    is_strongly_dense,
    min_strongly_dense,
    nucleus_from_fixset,
    rx_nucleus,
    sub_omega_frame,
    sublocale,
    sublocale_leq,
)
from localelab.omega import discrete_omega_frame

C3 = corpus.C3


def test_law_checks_on_c3():
    assert is_closure_operator(C3(), {"0": "0", "a": "a", "1": "1"})
    assert is_closure_operator(C3(), {"0": "1", "a": "1", "1": "1"})
    assert is_closure_operator(C3(), {"0": "a", "a": "a", "1": "1"})
    assert is_nucleus(C3(), {"0": "0", "a": "1", "1": "1"})
    bad = is_nucleus(C3(), {"0": "a", "a": "1", "1": "1"})
    assert not bad and bad.law == "idempotent"
    with pytest.raises(NotANucleus):
        Nucleus.of(C3(), {"0": "a", "a": "1", "1": "1"})
    with pytest.raises(NotAClosure):
        ClosureOperator.of(C3(), {"0": "0", "a": "0", "1": "1"})


def test_closed_nucleus_on_b4():
    B4 = corpus.B4()
    s = B4.idx("{s}")
    assert is_nucleus(B4, [B4.join(x, s) for x in range(B4.size)])


def test_fixset_examples():
    assert nucleus_from_fixset(C3(), ["a", "1"]).as_dict() == {"0": "a", "a": "a", "1": "1"}
    assert nucleus_from_fixset(C3(), ["0", "1"]) == double_negation(C3())
    with pytest.raises(NotASublocaleSet) as exc:
        nucleus_from_fixset(C3(), ["0", "a"])
    assert exc.value.witness[0] == "contains top"


def test_double_negation_examples():
    assert double_negation(C3()).as_dict() == {"0": "0", "a": "1", "1": "1"}
    assert double_negation(corpus.B4()).is_identity
    assert double_negation(corpus.TWO()).is_identity


def test_generated_examples():
    j = generated_by_set(C3(), ["a"])
    assert j.as_dict() == {"0": "a", "a": "a", "1": "1"}
    assert generated_by_set(C3(), ["0", "a", "1"]).is_identity
    assert generated_by_set(C3(), ["1"]) == constant_top(C3())
    f = C3()
    assert generated_by_closure(f, [f.top] * 3) == constant_top(f)
    assert generated_by_closure(f, list(range(3))).is_identity
    assert generated_by_closure(f, double_negation(f).table) == double_negation(f)


@pytest.mark.parametrize("a,fix", [("a", ("a", "1")), ("0", ("0", "1")), ("1", ("1",))])
def test_boolean_sublocale_examples(a, fix):
    s = boolean_sublocale(C3(), a)
    assert tuple(C3().label(x) for x in s.fix) == fix
    assert s.frame.size == len(fix)


def test_enumeration_examples():
    assert [j.fix_label() for j in enumerate_nuclei(C3())] == ["{0,a,1}", "{0,1}", "{a,1}", "{1}"]
    assert len(enumerate_nuclei(corpus.TWO())) == 2
    B4 = corpus.B4()
    L = enumerate_nuclei(B4)
    closed = {Nucleus(B4, tuple(B4.join(u, x) for x in range(4))) for u in range(4)}
    assert set(L) == closed


def test_enumeration_cap():
    set_caps(Caps(max_nuclei=2))
    with pytest.raises(SizeLimit):
        enumerate_nuclei(C3())


def test_sublocale_order_examples():
    f = C3()
    top = constant_top(f)
    assert all(sublocale_leq(top, j) for j in enumerate_nuclei(f))
    assert not sublocale_leq(double_negation(f), nucleus_from_fixset(f, ["a", "1"]))
    nn = double_negation(f)
    assert sublocale_leq(nn, nn)
    with pytest.raises(FrameMismatch):
        sublocale_leq(nn, double_negation(corpus.B4()))


def test_density_examples():
    f = C3()
    assert is_dense(double_negation(f))
    assert not is_dense(constant_top(f))
    assert not is_dense(nucleus_from_fixset(f, ["a", "1"]))


def test_strong_density_examples():
    OC3, CLC3 = corpus.OC3(), corpus.CLC3()
    assert is_strongly_dense(OC3, identity_nucleus(C3()))
    nn = double_negation(C3())
    assert not is_strongly_dense(OC3, nn) and is_dense(nn)
    assert is_strongly_dense(CLC3, nn)


@pytest.mark.parametrize(
    "X,expected",
    [
        (corpus.CLC3, "nn"),
        (corpus.OC3, "id"),
        (lambda: discrete_omega_frame(C3(), "s"), "id"),
        (lambda: discrete_omega_frame(C3(), "st"), "id"),
    ],
)
def test_min_strongly_dense_and_rx_examples(X, expected):
    X = X()
    want = double_negation(X.carrier) if expected == "nn" else identity_nucleus(X.carrier)
    assert min_strongly_dense(X) == want
    assert rx_nucleus(X) == want


def test_oc3_rx_value_at_a():
    X = corpus.OC3()
    assert min_strongly_dense(X).as_dict()["a"] == "a"


def test_sub_omega_frame_examples():
    CLC3 = corpus.CLC3()
    assert sub_omega_frame(CLC3, identity_nucleus(C3())).carrier.size == 3
    Y = sub_omega_frame(CLC3, double_negation(C3()))
    assert Y.carrier.size == 2 and Y.pos_map() == {"0": "0", "1": "1"}
    Z = sub_omega_frame(corpus.OC3(), constant_top(C3()))
    assert Z.carrier.size == 1
    assert Z.pos_map() == {"1": "0"}


def test_frame_mismatch():
    with pytest.raises(FrameMismatch):
        is_strongly_dense(corpus.OC3(), double_negation(corpus.B4()))


# -- oracles --------------------------------------------------------------------


@pytest.mark.parametrize("f", frames(max_size=6), ids=lambda f: f.name)
def test_enumeration_matches_all_self_maps(f):
    expected = {fixset(t) for t in all_nuclei(Order.of(f))}
    got = {frozenset(j.fix) for j in enumerate_nuclei(f)}
    assert got == expected


@pytest.mark.parametrize("f", frames(max_size=8), ids=lambda f: f.name)
def test_generated_is_least_containing(f):
    L = list(enumerate_nuclei(f))
    rng = random.Random(f.size)
    for _ in range(10):
        A = [x for x in range(f.size) if rng.random() < 0.3]
        g = generated_by_set(f, A)
        assert set(A) <= set(g.fix)
        for j in L:
            if set(A) <= set(j.fix):
                assert set(g.fix) <= set(j.fix)


@pytest.mark.parametrize("f", frames(max_size=8), ids=lambda f: f.name)
def test_closure_approximation_is_largest_nucleus_below(f):
    L = list(enumerate_nuclei(f))
    o = Order.of(f)
    rng = random.Random(7 * f.size)
    for _ in range(20):
        c = random_closure(o, rng)
        j = generated_by_closure(f, c)
        assert all(f.le(j(x), c[x]) for x in range(f.size))
        for k in L:
            if all(f.le(k(x), c[x]) for x in range(f.size)):
                assert k.le(j)


@pytest.mark.parametrize("f", frames(max_size=8), ids=lambda f: f.name)
def test_nucleus_lattice_is_a_frame(f):
    L = enumerate_nuclei(f)
    g = L.as_frame()
    assert g.size == len(L)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(frames(max_size=12)), st.randoms(use_true_random=False))
def test_sublocale_frame_operations(f, rng):
    j = generated_by_set(f, [x for x in range(f.size) if rng.random() < 0.3])
    s = sublocale(j)
    g = s.frame
    for k in range(g.size):
        for m in range(g.size):
            x, y = s.embed(k), s.embed(m)
            assert s.embed(g.meet(k, m)) == f.meet(x, y)
            assert s.embed(g.join(k, m)) == j(f.join(x, y))
            assert s.embed(g.imp(k, m)) == f.imp(x, y)


@pytest.mark.parametrize("X", omega_frames(), ids=lambda X: X.name)
def test_rx_join_form_by_definition(X):
    # least nucleus index whose fix-set contains the image of e, by scan
    L = list(enumerate_nuclei(X.carrier))
    containing = [j for j in L if set(X.e) <= set(j.fix)]
    least = [j for j in containing if all(set(j.fix) <= set(k.fix) for k in containing)]
    assert len(least) == 1
    assert rx_nucleus(X) == least[0]

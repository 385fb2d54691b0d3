import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import frames
from oracles import Order
from localelab import corpus
from localelab.errors import CycleError, NotAFrame, NotALattice, SizeLimit, UnknownElement
from localelab.lattice import (
    chain,
    downset_frame,
    frame_from_lattice,
    frame_from_relation,
    frame_report_from_poset,
    hasse_dot,
    implication,
    is_boolean,
    is_frame,
    lattice_from_poset,
    poset_from_relation,
    powerset_frame,
)
from localelab.config import Caps, set_caps


def test_c3_implication_table():
    C3 = corpus.C3()
    assert implication(C3, "a", "0") == "0"
    assert implication(C3, "1", "a") == "a"
    assert implication(C3, "a", "a") == "1"
    assert implication(C3, "0", "0") == "1"


def test_m3_rejected_with_witness():
    r = frame_report_from_poset(corpus.M3_poset())
    assert r.is_lattice and not r.is_distributive
    x, y, z = (corpus.M3().poset.idx(n) for n in r.counterexample)
    L = corpus.M3()
    assert L.meet[x][L.join[y][z]] != L.join[L.meet[x][y]][L.meet[x][z]]
    with pytest.raises(NotAFrame) as exc:
        frame_from_lattice(corpus.M3())
    assert exc.value.witness == r.counterexample


def test_n5_is_lattice_but_not_frame():
    p = poset_from_relation(
        ["0", "a", "b", "c", "1"], [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")], "N5"
    )
    r = frame_report_from_poset(p)
    assert r.is_lattice and not r.is_distributive


def test_not_a_lattice_two_maximal():
    p = poset_from_relation(["0", "a", "b"], [("0", "a"), ("0", "b")])
    with pytest.raises(NotALattice):
        lattice_from_poset(p)
    assert not frame_report_from_poset(p).is_lattice


def test_cycle_and_unknown():
    with pytest.raises(CycleError):
        poset_from_relation(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownElement):
        poset_from_relation(["a"], [("a", "zz")])


def test_empty_poset_not_a_lattice():
    with pytest.raises(NotALattice):
        lattice_from_poset(poset_from_relation([], []))


def test_boolean_examples():
    assert is_boolean(corpus.B4()).is_boolean
    assert is_boolean(corpus.TWO()).is_boolean
    r = is_boolean(corpus.C3())
    assert not r.is_boolean and r.counterexample == ("a",)
    assert is_boolean(corpus.ONE()).is_boolean


def test_size_limit_on_triple_scan():
    set_caps(Caps(max_triple=4))
    with pytest.raises(SizeLimit):
        is_frame(lattice_from_poset(corpus.M3_poset()))


@pytest.mark.parametrize("f", frames(), ids=lambda f: f.name)
def test_tables_match_brute_force(f):
    o = Order.of(f)
    n = f.size
    assert f.top == o.top and f.bottom == o.bottom
    for x in range(n):
        for y in range(n):
            assert f.meet(x, y) == o.meet(x, y)
            assert f.join(x, y) == o.join(x, y)
            if n <= 16:
                assert f.imp(x, y) == o.imp(x, y)


@pytest.mark.parametrize("f", frames(max_size=16), ids=lambda f: f.name)
def test_residuation_and_distributivity(f):
    r = range(f.size)
    for x in r:
        for y in r:
            for z in r:
                assert f.le(f.meet(z, x), y) == f.le(z, f.imp(x, y))
                assert f.meet(x, f.join(y, z)) == f.join(f.meet(x, y), f.meet(x, z))


def test_corpus_sizes_and_dedup():
    fs = frames()
    assert len(fs) == 88
    assert len(frames(max_size=8)) == 29
    assert len(frames(max_size=12)) == 65
    keys = {corpus.join_irreducible_key(f) for f in fs}
    assert len(keys) == len(fs)


def test_poset_counts_match_brute_force():
    from oracles import poset_count

    for n in range(5):
        assert len(corpus.posets(n)) == poset_count(n)
    assert [len(corpus.posets(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


def test_set_family_frames_agree_with_relation_frames():
    # powerset built from the subset order equals the set-family construction
    P = powerset_frame(["s", "t"])
    pairs = [(P.label(x), P.label(y)) for x in range(P.size) for y in range(P.size) if P.le(x, y)]
    g = frame_from_relation(list(P.elements), pairs)
    for x in range(P.size):
        for y in range(P.size):
            assert g.imp(g.idx(P.label(x)), g.idx(P.label(y))) == g.idx(P.label(P.imp(x, y)))


def test_chain_labels():
    assert chain(1).elements == ("*",)
    assert chain(3).elements == ("0", "a", "1")
    assert chain(4).elements == ("0", "a", "b", "1")


def test_hasse_dot_lists_covers():
    dot = hasse_dot(corpus.C3())
    assert dot.startswith('digraph "C3"')
    assert dot.count("->") == 2


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(frames(max_size=12)), st.data())
def test_heyting_laws(f, data):
    x, y, z = (data.draw(st.integers(0, f.size - 1)) for _ in range(3))
    assert f.meet(x, f.imp(x, y)) == f.meet(x, y)
    assert f.imp(x, f.meet(y, z)) == f.meet(f.imp(x, y), f.imp(x, z))
    assert f.imp(f.join(x, y), z) == f.meet(f.imp(x, z), f.imp(y, z))
    assert f.le(x, f.neg(f.neg(x)))
    assert f.neg(f.neg(f.neg(x))) == f.neg(x)


def test_downset_frame_of_antichain_is_powerset():
    p = poset_from_relation(["u", "v"], [])
    assert is_boolean(downset_frame(p)).is_boolean


def test_antichain_poset_and_lattice_witness():
    p = poset_from_relation(["x", "y"], [])
    assert not p.le(0, 1) and not p.le(1, 0)
    with pytest.raises(NotALattice) as exc:
        lattice_from_poset(p)
    assert set(exc.value.witness) == {"x", "y"}


def test_m3_is_a_lattice():
    L = corpus.M3()
    assert L.size == 5
    o = Order(5, L.poset.le)
    assert all(L.meet[x][y] == o.meet(x, y) and L.join[x][y] == o.join(x, y) for x in range(5) for y in range(5))


def test_powerset_examples():
    assert powerset_frame([]).size == 1
    assert powerset_frame(["s"]).size == 2
    P = powerset_frame(["s", "t"])
    assert P.elements == ("{}", "{s}", "{t}", "{s,t}")


@pytest.mark.parametrize(
    "elements,pairs,size,boolean",
    [
        (["p"], [], 2, True),
        (["p", "q"], [("p", "q")], 3, False),
        (["p", "q"], [], 4, True),
    ],
)
def test_downset_frame_examples(elements, pairs, size, boolean):
    f = downset_frame(poset_from_relation(elements, pairs))
    assert f.size == size
    assert is_boolean(f).is_boolean == boolean

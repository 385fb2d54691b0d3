import json

import pytest

from localelab.cli import main
from localelab.errors import DocumentError
from localelab.oalgebra import is_oalgebra
from localelab.search import PREDICATES, candidates, parse, search
from localelab import corpus


def names(family, n, where, bases):
    return [c.omega_frame.name for c in search(family, n, where, bases)]


def test_chains_find_oc3():
    hits = list(search("chains", 3, "oalgebra & !boolean", ("C3",)))
    assert len(hits) == 1
    X = hits[0].omega_frame
    assert X.carrier.elements == ("0", "a", "1") and X.e == corpus.OC3().e


def test_powersets_classical_are_oalgebras():
    assert names("powersets", 2, "!oalgebra", ("TWO",)) == []


@pytest.mark.parametrize("family", ["chains", "powersets", "downsets", "topologies"])
def test_boolean_without_frame_is_empty(family):
    assert names(family, 3, "boolean & !frame", ("TWO", "C3")) == []


def test_parser_precedence():
    X = corpus.OC3()
    assert parse("boolean | oalgebra & overt")(X)
    assert not parse("(boolean | !oalgebra) & overt")(X)
    assert parse("!!oalgebra")(X)


@pytest.mark.parametrize("bad", ["", "oalgebra &", "nonsense", "(oalgebra", "oalgebra $ boolean", "a b"])
def test_parser_errors(bad):
    with pytest.raises(DocumentError):
        parse(bad)


def test_candidates_are_deterministic_and_indexed():
    a = [(c.index, c.omega_frame.name) for c in candidates("downsets", 3)]
    b = [(c.index, c.omega_frame.name) for c in candidates("downsets", 3)]
    assert a == b and [i for i, _ in a] == list(range(len(a)))


def test_classical_search_agrees_with_boolean():
    hits = {c.index for c in search("downsets", 4, "oalgebra", ("TWO",))}
    bools = {c.index for c in search("downsets", 4, "boolean", ("TWO",))}
    assert hits == bools


def test_dense_eq_strongly_dense_classically():
    assert names("downsets", 4, "classical & !dense_eq_strongly_dense", ("TWO", "C3")) == []
    assert names("chains", 3, "!dense_eq_strongly_dense", ("C3",))


def test_rx_is_double_negation_classically():
    assert names("downsets", 4, "classical & !rx_is_double_negation", ("TWO", "C3")) == []


def test_all_predicates_evaluate():
    X = corpus.OC3()
    assert {k: bool(v(X)) for k, v in PREDICATES.items()} == {
        "frame": True,
        "boolean": False,
        "overt": True,
        "oalgebra": True,
        "classical": False,
        "dense_eq_strongly_dense": False,
        "rx_is_double_negation": False,
        "spatial": True,
    }


def test_cli_search_streams_jsonl(capsys):
    code = main(["search", "--family", "chains", "--max", "3", "--where", "oalgebra & !boolean", "--base", "C3"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0 and len(lines) == 1
    doc = json.loads(lines[0])
    assert doc["e"] == {"0": "0", "a": "a", "1": "1"}
    from localelab.documents import omega_frame_from_doc

    assert is_oalgebra(omega_frame_from_doc(doc)).is_oalgebra


def test_cli_search_bad_expression(capsys):
    assert main(["search", "--family", "chains", "--max", "2", "--where", "oalgebra &"]) == 2


def test_over_cap_candidates_are_skipped():
    skipped = []
    hits = list(search("downsets", 4, "classical & !dense_eq_strongly_dense", ("TWO",), on_skip=skipped.append))
    assert hits == [] and skipped
    assert all(c.omega_frame.carrier.size > 12 for c in skipped)

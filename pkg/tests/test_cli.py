import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fuzzytop.cli import main
from fuzzytop.instance import InstanceDocument, InstanceError, parse_instance, render_instance
from fuzzytop.lattice import FuzzySet
from fuzzytop.topology import GroundMap, Topology

SIERPINSKI_DOC = {"ground_size": 2, "denominator": 1, "topology": [[], [1], [0, 1]]}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="doc.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


# --- instance documents ------------------------------------------------------

def test_parse_minimal_document():
    doc = parse_instance(json.dumps(SIERPINSKI_DOC))
    assert doc.tau() == Topology.sierpinski()


def test_parse_scaled_and_string_values():
    doc = parse_instance(json.dumps({"ground_size": 2, "denominator": 4, "fuzzy_sets": [["3/4", 1]]}))
    assert doc.fuzzy_sets[0] == FuzzySet([F(3, 4), F(1, 4)])
    assert doc.fuzzy_sets[0].codes(4) == (3, 1)


@pytest.mark.parametrize("text, where", [
    ('{"ground_size": 2, "topology": [[], [1]]}', "$.topology"),
    ('{"ground_size": 2, "topology": [[], [2], [0, 1]]}', "$.topology[1][0]"),
    ('{"ground_size": 2, "fuzzy_sets": [["3/2", 0]]}', "$.fuzzy_sets[0][0]"),
    ('{"ground_size": 2, "fuzzy_sets": [[0.5, 0]]}', "$.fuzzy_sets[0][0]"),
    ('{"ground_size": 2, "fuzzy_sets": [["0.5", 0]]}', "$.fuzzy_sets[0][0]"),
    ('{"ground_size": 2, "denominator": 2, "fuzzy_sets": [["1/3", 0]]}', "$.fuzzy_sets[0]"),
    ('{"ground_size": 2, "topology": [[], [1], [0], [0, 1]], "extra": 1}', "$.extra"),
    ('{"ground_size": 2,', "line 1"),
    ('{"denominator": 2}', "$.ground_size"),
    ('{"ground_size": 2, "maps": {"h": {"target": 2, "image": [0, 5]}}}', "$.maps.h.image[1]"),
])
def test_parse_errors_are_positioned(text, where):
    with pytest.raises(InstanceError) as err:
        parse_instance(text)
    assert any(p.path.startswith(where) for p in err.value.problems), err.value.problems


def test_subbase_flag_requests_closure():
    doc = parse_instance('{"ground_size": 3, "subbase": true, "topology": [[0, 1], [1, 2]]}')
    assert doc.tau().opens == {0, 0b010, 0b011, 0b110, 0b111}


def test_not_a_topology_without_subbase_flag():
    with pytest.raises(InstanceError):
        parse_instance('{"ground_size": 3, "topology": [[], [0, 1], [1, 2], [0, 1, 2]]}')


@st.composite
def documents(draw):
    n = draw(st.integers(1, 4))
    q = draw(st.integers(1, 6))
    full = (1 << n) - 1
    topology = None
    subbase = draw(st.booleans())
    if draw(st.booleans()):
        masks = draw(st.lists(st.integers(0, full), max_size=5, unique=True))
        if not subbase:
            topology = tuple(sorted(Topology.discrete(n).opens)) if draw(st.booleans()) else (0, full)
        else:
            topology = tuple(masks)
    rows = draw(st.lists(st.lists(st.integers(0, q), min_size=n, max_size=n), max_size=4))
    fuzzy = tuple(FuzzySet.from_codes(r, q) for r in rows)
    maps = tuple((f"m{i}", GroundMap(m, tuple(draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)))))
                 for i, m in enumerate(draw(st.lists(st.integers(1, 3), max_size=2))))
    oracle = tuple(range(full + 1)) if draw(st.booleans()) else None
    return InstanceDocument(n, q, topology, subbase, fuzzy, maps, oracle)


@given(documents())
def test_render_parse_round_trip(doc):
    assert parse_instance(render_instance(doc)) == doc


# --- commands and exit codes -------------------------------------------------

def test_classify_induced_sierpinski_is_all_true(capsys, write):
    code, out, _ = run(capsys, "classify", write(SIERPINSKI_DOC), "--report", "json")
    report = json.loads(out)
    assert code == 0
    details = report["details"]
    assert details["laminated"] and details["induced_on_grid"] and details["grid_affine_invariant"]
    assert details["weakly_induced_conditions"] == [True] * 4


def test_text_and_json_reports_share_verdicts(capsys, write):
    path = write(SIERPINSKI_DOC)
    _, text, _ = run(capsys, "classify", path)
    _, js, _ = run(capsys, "classify", path, "--report", "json")
    for name, ok in json.loads(js)["verdicts"].items():
        assert f"{'PASS' if ok else 'FAIL'}  {name}" in text


def test_check_round_trip_on_builtins(capsys):
    code, out, _ = run(capsys, "check", "thm-1.3")
    assert code == 0 and "PASS  functor-round-trip" in out


def test_check_unknown_property_is_an_input_error(capsys):
    code, _, err = run(capsys, "check", "thm-9.9")
    assert code == 2 and "unknown property" in err


def test_bad_document_exits_2(capsys, write):
    code, _, err = run(capsys, "classify", write('{"ground_size": 2, "topology": [[], [1]]}'))
    assert code == 2 and "$.topology" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, _ = run(capsys, "classify", str(tmp_path / "absent.json"))
    assert code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_property_failure_exits_1(capsys, write):
    doc = {"ground_size": 3, "denominator": 2, "topology": [[], [0], [0, 1], [0, 1, 2]],
           "fuzzy_sets": [["1", "1/2", "0"], [2, 2, 2]], "oracle": [[2], [1, 2]]}
    code, out, _ = run(capsys, "compactness", "subcover", write(doc))
    assert code == 1 and "FAIL  levels compact" in out


def test_gallery_B_reports_indiscrete_indicator_topology(capsys):
    code, out, _ = run(capsys, "gallery", "B", "--q", "2", "--interval", "0,1/2", "--report", "json")
    report = json.loads(out)
    assert code == 0
    assert report["details"]["instance"]["chi_star"] == [[], [0, 1]]


@pytest.mark.parametrize("entry", ["A", "C", "D", "E"])
def test_gallery_entries_pass(capsys, entry):
    code, _, _ = run(capsys, "gallery", entry)
    assert code == 0


def test_census_command(capsys):
    code, out, _ = run(capsys, "census", "--report", "json")
    runs = json.loads(out)["details"]["census"]
    assert code == 0 and [(r["n"], r["q"], r["total"]) for r in runs] == [(1, 1, 1), (1, 2, 2), (2, 1, 4), (2, 2, 49)]


def test_construct_commands(capsys, write):
    s = write(SIERPINSKI_DOC)
    assert run(capsys, "construct", "product", s, s)[0] == 0
    assert run(capsys, "construct", "coproduct", s, s)[0] == 0
    code, out, _ = run(capsys, "construct", "subspace", s, "--subset", "0", "--report", "json")
    assert code == 0 and json.loads(out)["details"]["iota"] == [[], [0]]
    src = write({**SIERPINSKI_DOC, "maps": {"id": {"target": 2, "image": [0, 1]}}}, "src.json")
    code, out, _ = run(capsys, "construct", "quotient", src, s, "--map", "id", "--report", "json")
    details = json.loads(out)["details"]
    assert code == 0 and details["fuzzy_quotient"] and details["quotient"]
    assert run(capsys, "construct", "product", s)[0] == 2
    assert run(capsys, "construct", "subspace", s)[0] == 2


@pytest.mark.parametrize("task", ["subcover", "levels", "tychonoff", "onepoint"])
def test_compactness_commands(capsys, write, task):
    doc = {"ground_size": 3, "denominator": 2, "topology": [[], [0], [1], [0, 1], [2], [0, 2], [1, 2], [0, 1, 2]],
           "fuzzy_sets": [["1", "1/2", "0"], [2, 2, 2], [1, 0, 2]]}
    assert run(capsys, "compactness", task, write(doc))[0] == 0
    assert run(capsys, "compactness", task, "--seed", "3")[0] == 0


def test_same_seed_same_bytes(capsys):
    a = run(capsys, "check", "subcover", "--seed", "11", "--report", "json")[1]
    b = run(capsys, "check", "subcover", "--seed", "11", "--report", "json")[1]
    assert a == b


def test_guards(capsys, write):
    doc = write({"ground_size": 4, "topology": [[], [0, 1, 2, 3]]})
    assert run(capsys, "classify", doc, "--max-n", "3")[0] == 2
    with pytest.raises(SystemExit):
        main(["census", "--max-n", "0"])

"""Wire formats, report determinism, the command line, and staircase SVG."""

import io
import json
from fractions import Fraction

import pytest

from momidual import cli
from momidual.corpus import fixture_document, load_fixture
from momidual.documents import (
    IdealDocument,
    NonminimalInputWarning,
    default_variables,
    document_hash,
    document_to_ideal,
    format_monomial,
    ideal_to_document,
    jsonify,
    parse_ideal_document,
    parse_monomial,
    serialize_ideal_document,
)
from momidual.errors import PreconditionError
from momidual.ideals import minimalize
from momidual.staircase import staircase_svg


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_default_variables():
    assert default_variables(2) == ("x", "y")
    assert default_variables(3) == ("x", "y", "z")
    assert default_variables(4) == ("a", "b", "c", "d")
    assert default_variables(27)[26] == "x27"


def test_monomial_parsing_and_formatting():
    names = ("x", "y", "z")
    assert parse_monomial("x^2*z^2", names) == (2, 0, 2)
    assert parse_monomial("y", names) == (0, 1, 0)
    assert parse_monomial("x*x*y^3", names) == (2, 3, 0)
    assert parse_monomial("1", names) == (0, 0, 0)
    assert format_monomial((2, 0, 2), names) == "x^2*z^2"
    assert format_monomial((0, 1, 0), names) == "y"
    assert format_monomial((0, 0, 0), names) == "1"
    for bad in ("", "w^2", "x^-1", "x^one"):
        with pytest.raises(PreconditionError):
            parse_monomial(bad, names)


def test_monomial_round_trip_through_formatting():
    ideal = load_fixture("fig1")
    names = default_variables(3)
    for g in ideal.gens:
        assert parse_monomial(format_monomial(g, names), names) == g


def test_parse_document_accepts_monomial_sugar():
    doc = parse_ideal_document(
        '{"n": 2, "vars": ["x", "y"], "generators": ["x^2*y", [0, 3]]}'
    )
    assert doc.generators == ((2, 1), (0, 3))
    assert doc.vars == ("x", "y")


def test_parse_document_defaults_and_errors():
    doc = parse_ideal_document('{"n": 2, "generators": [[1, 0]]}')
    assert doc.vars == ("x", "y")
    bad_inputs = [
        "not json",
        "[1, 2]",
        '{"generators": []}',
        '{"n": 0, "generators": []}',
        '{"n": 2, "generators": [[1]]}',
        '{"n": 2, "generators": [[1, -1]]}',
        '{"n": 2, "generators": [[1, 0]], "extra": 1}',
        '{"n": 2, "vars": ["x", "x"], "generators": []}',
        '{"n": 2, "generators": [[1, 0]], "name": 7}',
        '{"n": 2, "generators": [[1, 0]], "attributes": []}',
    ]
    for text in bad_inputs:
        with pytest.raises(PreconditionError):
            parse_ideal_document(text)


def test_document_serialization_is_byte_stable():
    doc = fixture_document("fig1")
    once = serialize_ideal_document(doc)
    again = serialize_ideal_document(parse_ideal_document(once))
    assert once == again
    assert once.endswith("\n")
    assert document_hash(doc) == document_hash(parse_ideal_document(once))


def test_document_hash_tracks_content():
    doc = IdealDocument(2, ("x", "y"), ((1, 0),))
    other = IdealDocument(2, ("x", "y"), ((0, 1),))
    assert document_hash(doc) != document_hash(other)


def test_document_to_ideal_warns_on_nonminimal_input():
    doc = IdealDocument(2, ("x", "y"), ((1, 0), (2, 1)))
    with pytest.warns(NonminimalInputWarning):
        ideal = document_to_ideal(doc)
    assert ideal.gens == ((1, 0),)
    round_trip = ideal_to_document(load_fixture("fig1"), name="fig1")
    assert document_to_ideal(round_trip) == load_fixture("fig1")


def test_jsonify_edge_cases():
    assert jsonify({(1, 2): Fraction(1, 2), "b": (True, 3)}) == {
        "1,2": "1/2",
        "b": [True, 3],
    }
    assert jsonify(frozenset({(0, 1), (1, 0)})) == [[0, 1], [1, 0]]
    with pytest.raises(PreconditionError):
        jsonify(object())


def test_cli_dual_on_a_fixture(capsys):
    code, out = run_cli(capsys, "dual", "paper:tighten")
    assert code == 0
    report = json.loads(out)
    assert report["version"] == 1
    assert report["command"] == ["dual", "paper:tighten"]
    assert report["input"]["name"] == "tighten"
    assert report["results"]["a"] == [3, 3, 1]
    assert sorted(tuple(g) for g in report["results"]["generators"]) == [
        (0, 1, 1),
        (1, 0, 1),
        (1, 3, 0),
        (3, 1, 0),
    ]


def test_cli_reads_documents_from_stdin(monkeypatch, capsys):
    text = serialize_ideal_document(ideal_to_document(minimalize(2, [(1, 0), (0, 1)])))
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out = run_cli(capsys, "dual", "-", "--a", "1,1")
    assert code == 0
    assert json.loads(out)["results"]["generators"] == [[1, 1]]


def test_cli_reads_documents_from_files(tmp_path, capsys):
    path = tmp_path / "ideal.json"
    path.write_text(serialize_ideal_document(fixture_document("tighten")))
    code, out = run_cli(capsys, "decompose", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["results"]["count"] == 4
    assert [1, 3] in report["results"]["supports"]


def test_cli_reports_are_deterministic(capsys):
    _, first = run_cli(capsys, "betti", "paper:tree3")
    _, second = run_cli(capsys, "betti", "paper:tree3")
    assert first == second
    assert json.loads(first)["results"]["totals"] == [7, 12, 6]


def test_cli_scarf_payload(capsys):
    code, out = run_cli(capsys, "scarf", "paper:fig1")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["f_vector"] == [7, 10, 4]
    assert results["exact"] is True and results["minimal"] is True
    assert results["ranks"] == {"0": 7, "1": 10, "2": 4}


def test_cli_bass_flags_out_of_range(capsys):
    code, out = run_cli(capsys, "bass", "paper:fig1", "--face", "1", "--degree", "0,1,0", "-i", "0")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["value"] == 0 and results["in_range"] is False


def test_cli_exit_code_for_cap(capsys):
    code, _ = run_cli(capsys, "betti", "paper:fig1", "--box-cap", "3")
    assert code == 2


def test_cli_exit_code_for_preconditions(capsys, tmp_path):
    assert run_cli(capsys, "dual", "paper:fig1", "--a", "1,1,1")[0] == 3
    assert run_cli(capsys, "dual", str(tmp_path / "missing.json"))[0] == 3
    assert run_cli(capsys, "dual", "paper:fig1", "--field", "junk")[0] == 3
    assert run_cli(capsys, "betti", "paper:fig1", "--field", "p:6")[0] == 3
    assert run_cli(capsys, "staircase", "paper:twistedcubic")[0] == 3


def test_cli_verify_single_fixture(capsys):
    code, out = run_cli(capsys, "verify", "paper:tighten")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["all_pass"] is True
    names = {c["name"] for c in report["results"]["checks"]}
    assert "involution" in names and "expected_canonical_a" in names
    assert "expected_dual_at_3_3_1" in names and "expected_dual_at_3_4_1" in names
    statuses = {c["status"] for c in report["results"]["checks"]}
    assert statuses <= {"pass", "skip", "info"}


def test_cli_verify_corpus_kind(capsys):
    code, out = run_cli(capsys, "verify", "--kind", "random", "--n", "3", "--gens", "4", "--count", "2", "--seed", "5")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["runs"] == 2
    assert report["results"]["all_pass"] is True


def count_markers(svg, marker):
    return svg.count(f'class="{marker}"')


def test_staircase_inventories():
    fat = minimalize(2, [(2, 0), (1, 1), (0, 2)])
    svg = staircase_svg(fat)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert count_markers(svg, "generator") == 3
    assert count_markers(svg, "component") == 2
    assert count_markers(svg, "arrow") == 0
    assert count_markers(svg, "staircase") == 1

    edge = minimalize(2, [(1, 1)])
    svg = staircase_svg(edge)
    # two non-artinian components, one escape arrow each
    assert count_markers(svg, "generator") == 1
    assert count_markers(svg, "component") == 2
    assert count_markers(svg, "arrow") == 2

    fig1 = load_fixture("fig1")
    svg = staircase_svg(fig1)
    assert count_markers(svg, "generator") == 7
    assert count_markers(svg, "component") == 8
    assert count_markers(svg, "arrow") == 4


def test_staircase_rejects_large_n():
    with pytest.raises(PreconditionError):
        staircase_svg(minimalize(4, [(1, 0, 0, 0)]))


def test_cli_staircase_outputs_svg(capsys):
    code, out = run_cli(capsys, "staircase", "paper:fig1")
    assert code == 0
    assert out.startswith("<svg")

"""CLI parsing, dispatch, report formats, and exit codes."""

import io
import json
import os

import pytest

from weakgalois.cli import (InputError, main, parse, parse_document,
                            parse_field, parse_groupoid, serialize_groupoid)
from weakgalois.groupoid import cyclic_group, disjoint_union, pair_groupoid

CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus")


def corpus_path(name):
    return os.path.join(CORPUS, name)


def run_cli(args):
    buf = io.StringIO()
    code = main(args, out=buf)
    return code, buf.getvalue()


def write_doc(tmp_path, doc):
    p = tmp_path / "doc.json"
    p.write_text(json.dumps(doc))
    return str(p)


def test_parse_pair_groupoid_builder_document():
    doc = parse_document(parse(corpus_path("p2_kG_weakhopf.json")))
    assert doc.kind == "weakhopf"
    assert doc.groupoid.n_morphisms == 4
    assert doc.subject.dim == 4


def test_dimension_error_names_the_key(tmp_path):
    doc = {"field": "rationals",
           "groupoid": {"builder": "group", "table": [[0, 1], [1, 0]]},
           "subject": {"kind": "action",
                       "algebra": {"dim": 2,
                                   "table": [[[1, 0], [0, 0]],
                                             [[0, 0], [0, 1]]],
                                   "unit": [1, 1]},
                       "matrices": [[[1, 0], [0, 1]],
                                    [[0, 1, 0], [1, 0, 0]]]}}
    with pytest.raises(InputError) as err:
        parse_document(doc)
    assert "subject.matrices[1]" in str(err.value)


def test_non_prime_modulus_rejected():
    with pytest.raises(InputError) as err:
        parse_field({"prime": 4})
    assert "prime" in str(err.value)


def test_unknown_builder_rejected():
    with pytest.raises(InputError):
        parse_groupoid({"builder": "torus", "n": 2})


@pytest.mark.parametrize("g", [pair_groupoid(2), cyclic_group(3),
                               disjoint_union(cyclic_group(2),
                                              pair_groupoid(2))])
def test_groupoid_serialization_round_trip(g):
    g2 = parse_groupoid(serialize_groupoid(g))
    assert g2.n_objects == g.n_objects
    assert g2.morphisms == g.morphisms
    assert g2.compose == g.compose
    assert g2.inverse == g.inverse
    assert g2.identity == g.identity


def test_all_on_matrix_units_grading_passes():
    code, out = run_cli(["all", corpus_path("m2_p2_graded.json")])
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["galois"] is True
    assert report["summary"]["strongly_graded"] is True


def test_galois_fail_witness_on_dual_numbers():
    code, out = run_cli(["galois", corpus_path("dualnumbers_z2_graded.json")])
    assert code == 1
    report = json.loads(out)
    check = report["checks"][0]
    assert check["verdict"] == "fail"
    assert check["witness"]["note"] == "image dim 3 < 4"


def test_frobenius_on_transport_action_passes():
    code, out = run_cli(["frobenius",
                         corpus_path("p2_transport_action.json")])
    assert code == 0
    report = json.loads(out)
    frob = [c for c in report["checks"] if c["name"] == "frobenius system"]
    assert frob[0]["witness"] == {"casimir_residual": 0,
                                  "normalization_residual": 0}


def test_pretty_and_machine_agree_on_verdicts():
    path = corpus_path("dualnumbers_z2_graded.json")
    code_m, machine = run_cli(["all", path])
    code_p, pretty = run_cli(["all", path, "--format", "pretty"])
    assert code_m == code_p == 1
    report = json.loads(machine)
    for check in report["checks"]:
        line = "[%s] %s" % (check["verdict"].upper(), check["name"])
        assert line in pretty


def test_machine_report_is_byte_deterministic():
    path = corpus_path("c2_swap_action.json")
    _, first = run_cli(["all", path])
    _, second = run_cli(["all", path])
    assert first == second


def test_subject_command_mismatch_is_input_error():
    code, _ = run_cli(["frobenius", corpus_path("m2_p2_graded.json")])
    assert code == 2
    code, _ = run_cli(["strongly-graded",
                       corpus_path("c2_swap_action.json")])
    assert code == 2


def test_unknown_subring_is_input_error():
    code, _ = run_cli(["morita", corpus_path("c2_swap_action.json"),
                       "--subring", "nonexistent"])
    assert code == 2


def test_samples_flag_on_non_graded_subject_is_input_error():
    code, _ = run_cli(["all", corpus_path("c2_swap_action.json"),
                       "--samples", "column"])
    assert code == 2


def test_field_override(tmp_path):
    code, out = run_cli(["verify", corpus_path("p2_kG_weakhopf.json"),
                         "--field", "7"])
    assert code == 0
    assert json.loads(out)["field"] == {"prime": 7}
    code, _ = run_cli(["verify", corpus_path("p2_kG_weakhopf.json"),
                       "--field", "6"])
    assert code == 2


def test_malformed_json_is_input_error(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    code, _ = run_cli(["verify", str(p)])
    assert code == 2


def test_invalid_subject_fails_verify(tmp_path):
    # non-multiplicative "action": verify fails with exit 1
    path = write_doc(tmp_path, {
        "field": "rationals",
        "groupoid": {"builder": "group", "table": [[0, 1], [1, 0]]},
        "subject": {"kind": "action",
                    "algebra": {"dim": 2,
                                "table": [[[1, 0], [0, 0]],
                                          [[0, 0], [0, 1]]],
                                "unit": [1, 1]},
                    "matrices": [[[1, 0], [0, 1]], [[1, 0], [1, 0]]]}})
    code, out = run_cli(["verify", path])
    assert code == 1
    assert json.loads(out)["summary"]["weak_hopf_valid"] is False


def test_rational_scalars_parse(tmp_path):
    path = write_doc(tmp_path, {
        "field": "rationals",
        "groupoid": {"builder": "group", "table": [[0]]},
        "subject": {"kind": "action",
                    "algebra": {"dim": 1, "table": [[["2/2"]]],
                                "unit": ["1/1"]},
                    "matrices": [[[1]]]}})
    code, _ = run_cli(["all", path])
    assert code == 0

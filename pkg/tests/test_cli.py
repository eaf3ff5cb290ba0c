"""The command-line interface: JSON payloads, determinism, exit codes."""

import json

import pytest

from tautring import cli
from tautring.errors import ConsistencyError


def _run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _run_json(capsys, argv):
    code, out, err = _run(capsys, argv)
    assert code == 0, err
    payload = json.loads(out)
    assert payload["tool"] == "tautring"
    assert payload["version"] == cli.VERSION
    return payload


def test_graphs_command(capsys):
    payload = _run_json(capsys, ["graphs", "2", "0"])
    assert payload["count"] == 7
    assert len(payload["graphs"]) == 7
    assert all(entry["g"] == 2 for entry in payload["graphs"])


def test_dr_examples(capsys):
    payload = _run_json(capsys, ["dr", "1", "--weights", "0"])
    assert payload["degree"] == 1
    terms = payload["class"]["terms"]
    assert len(terms) == 1
    assert terms[0]["coeff"] == "-1/24"
    assert terms[0]["graph"]["edges"] == [[[0, 0], [0, 1]]]

    payload = _run_json(capsys, ["dr", "0", "--weights", "2,-1,-1"])
    terms = payload["class"]["terms"]
    assert len(terms) == 1
    assert terms[0]["coeff"] == "1" and terms[0]["graph"]["edges"] == []

    payload = _run_json(capsys, ["dr", "0", "--weights", "2,-1,-1", "--degree", "0"])
    terms = payload["class"]["terms"]
    assert len(terms) == 1 and terms[0]["coeff"] == "1"


def test_lambda_command(capsys):
    payload = _run_json(capsys, ["lambda", "1", "1"])
    terms = payload["class"]["terms"]
    assert len(terms) == 1 and terms[0]["coeff"] == "1/24"

    payload = _run_json(capsys, ["lambda", "2", "0", "--pair", "--check-separating"])
    assert payload["pairing_check"]["matches_reference"] is True
    assert all(x == "0" for x in payload["pairing_check"]["difference_pairing"])
    assert payload["separating_check"]["all_nonseparating"] is True
    coeffs = sorted(term["coeff"] for term in payload["class"]["terms"])
    assert coeffs == ["1/1152", "1/240"]


def test_div_membership_command(capsys):
    payload = _run_json(capsys, ["div-membership", "2", "0", "2"])
    assert payload["member"] is True
    assert payload["certified"] is True
    assert payload["verdict"] == "member"
    assert payload["rank"] == 2 and payload["ambient"] == 2


def test_theta_text_report_is_idempotent(capsys):
    code1, out1, _ = _run(capsys, ["theta-genus2"])
    code2, out2, _ = _run(capsys, ["theta-genus2"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "infeasible" in out1
    assert out1.startswith("tautring %s theta-genus2" % cli.VERSION)


def test_theta_json(capsys):
    payload = _run_json(capsys, ["theta-genus2", "--json"])
    assert payload["solution_dimension"] == 1
    assert payload["x_nonneg_z_nonpos_feasible"] is False
    assert payload["particular"] == ["-1/120", "11/2880", "0"]
    assert payload["basis"] == [["1", "-5/24", "1"]]


def test_outputs_are_deterministic(capsys):
    for argv in (
        ["graphs", "1", "2"],
        ["dr", "1", "--weights", "0"],
        ["cone", "triangle-z3", "pp", "2"],
    ):
        _, out1, _ = _run(capsys, argv)
        _, out2, _ = _run(capsys, argv)
        assert out1 == out2


def test_threads_flag_does_not_change_output(capsys):
    base = _run(capsys, ["--threads", "1", "dr", "1", "--weights", "0,0"])
    pooled = _run(capsys, ["--threads", "4", "dr", "1", "--weights", "0,0"])
    assert base == pooled


def test_cone_operations(capsys):
    payload = _run_json(capsys, ["cone", "simplex3", "barycentric"])
    assert payload["maximal_cones"] == 6

    payload = _run_json(capsys, ["cone", "simplex3", "explosion", "3", "2"])
    assert payload["holds"] is True

    payload = _run_json(capsys, ["cone", "triangle-z3", "pp", "1"])
    assert payload["dimension"] == 1

    payload = _run_json(capsys, ["cone", "triangle-z3", "gen1", "2"])
    assert payload["generated"] is False

    payload = _run_json(capsys, ["cone", "simplex2"])
    assert payload["maximal_cones"] == 1
    # faces: two rays and the full cone
    assert len(payload["complex"]["cones"]) == 3

    # star at the full cone of simplex2 (faces are sorted by dimension,
    # so the 2-dimensional cone comes last)
    payload = _run_json(capsys, ["cone", "simplex2", "star", "2"])
    assert payload["maximal_cones"] == 2


def test_cone_accepts_a_file(capsys, tmp_path):
    from tautring.cone_complex import simplex_cone_complex

    path = tmp_path / "complex.json"
    path.write_text(simplex_cone_complex(2).to_json())
    payload = _run_json(capsys, ["cone", str(path)])
    assert payload["maximal_cones"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["graphs", "0", "2"],  # unstable space
        ["dr", "1", "--weights", "1"],  # weights do not sum to zero
        ["lambda", "0", "5"],  # genus must be positive
        ["div-membership", "4", "0", "4"],  # uncertified regime, no flag
        ["div-membership", "2", "0", "1"],  # degree must equal the genus
        ["cone", "nosuchfixture"],
        ["cone", "simplex2", "star", "99"],
        ["cone", "simplex2", "pp"],  # missing degree
        ["--threads", "0", "graphs", "2", "0"],
    ],
)
def test_domain_errors_exit_2(capsys, argv):
    code, out, err = _run(capsys, argv)
    assert code == 2
    assert err.startswith("error:")


def test_consistency_failures_exit_3(capsys, monkeypatch):
    def boom(args):
        raise ConsistencyError("sample check failed")

    monkeypatch.setattr(cli, "_cmd_graphs", boom)
    code, out, err = _run(capsys, ["graphs", "2", "0"])
    assert code == 3
    assert err.startswith("consistency failure:")

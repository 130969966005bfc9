"""
Command-Line Tests

Runs the app in-process and checks output and exit codes.
"""

import json

import pytest

from ribbon_invariants import dependencies

from ribbon_invariants.app import EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, app


# ==========================================
# INVARIANT
# ==========================================


def test_invariant_from_file(cli, unknot_file):
    """Test the 0-framed unknot under the default ST ribbon"""
    code, out, _ = cli("invariant", "--tangle", str(unknot_file))

    assert code == EXIT_OK
    assert out.strip() == "-q - q^-1"


def test_invariant_standard_ribbon(cli, unknot_file):
    """Test --ribbon switches the ribbon element"""
    code, out, _ = cli("invariant", "--tangle", str(unknot_file), "--ribbon", "standard")

    assert code == EXIT_OK
    assert out.strip() == "q + q^-1"


def test_invariant_from_braid_matches_file(cli, trefoil_file):
    """Test a braid word and the equivalent file agree"""
    _, from_file, _ = cli("invariant", "--tangle", str(trefoil_file))
    code, from_braid, _ = cli("invariant", "--braid", "1 1 1")

    assert code == EXIT_OK
    assert from_braid == from_file


def test_invariant_both_ribbons(cli, unknot_file):
    """Test --both prints both values, the ratio and its prediction"""
    code, out, _ = cli("invariant", "--tangle", str(unknot_file), "--both")

    assert code == EXIT_OK
    assert out.splitlines() == [
        "st: -q - q^-1",
        "standard: q + q^-1",
        "ratio: -1",
        "predicted: -1",
    ]


def test_invariant_json(cli, unknot_file):
    """Test the JSON report"""
    code, out, _ = cli("invariant", "--tangle", str(unknot_file), "--output", "json")
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["invariant"] == [[1, 1, -1], [-1, 1, -1]]
    assert payload["components"] == [{"label": [1], "writhe": 0}]
    assert payload["ribbon"] == "st"


def test_invariant_normalized(cli):
    """Test --normalized on a braid with a colour"""
    code, out, _ = cli("invariant", "--braid", "1", "--labels", "2;2", "--normalized")

    assert code == EXIT_OK
    assert out.splitlines()[-1] == "normalized: 1"


def test_invariant_open_tangle(cli, tmp_path):
    """Test open tangles print their matrix entries"""
    path = tmp_path / "strand.tangle"
    path.write_text("algebra A1\nbottom: [1;up]\n")
    code, out, _ = cli("invariant", "--tangle", str(path))

    assert code == EXIT_OK
    assert sorted(out.splitlines()) == ["(0,) <- (0,): 1", "(1,) <- (1,): 1"]


def test_invariant_parse_error(cli, tmp_path):
    """Test syntax errors exit 1 with the line number"""
    path = tmp_path / "bad.tangle"
    path.write_text("algebra A1\nwiggle 0\n")
    code, _, err = cli("invariant", "--tangle", str(path))

    assert code == EXIT_PARSE
    assert err.startswith("error: line 2:")


def test_invariant_validation_error(cli, tmp_path):
    """Test boundary errors exit 2 with the slice index"""
    path = tmp_path / "bad.tangle"
    path.write_text("algebra A1\ncup_cw 0 [1]\ncap_ccw 0\n")
    code, _, err = cli("invariant", "--tangle", str(path))

    assert code == EXIT_VALIDATION
    assert "slice 1: cap orientation violation" in err


def test_invariant_algebra_mismatch(cli, unknot_file):
    """Test --algebra must agree with the file"""
    code, _, err = cli("invariant", "--tangle", str(unknot_file), "--algebra", "A2")

    assert code == EXIT_VALIDATION
    assert "declares A1" in err


def test_invariant_unknown_algebra(cli):
    """Test an invalid algebra fails before computing"""
    code, _, err = cli("invariant", "--braid", "1", "--algebra", "Z9")

    assert code == EXIT_VALIDATION
    assert "unknown algebra" in err


def test_invariant_missing_file(cli, tmp_path):
    """Test unreadable files exit 2"""
    code, _, _ = cli("invariant", "--tangle", str(tmp_path / "missing.tangle"))
    assert code == EXIT_VALIDATION


def test_invariant_persists_blocks(cli, trefoil_file, tmp_path):
    """Test --cache-dir creates the block database"""
    cache = tmp_path / "cache"
    code, _, _ = cli("invariant", "--tangle", str(trefoil_file), "--cache-dir", str(cache))

    assert code == EXIT_OK
    assert (cache / "blocks.db").exists()


def test_invariant_requires_a_source(cli):
    """Test --tangle or --braid is mandatory"""
    with pytest.raises(SystemExit):
        cli("invariant")


# ==========================================
# COMPARE
# ==========================================


def test_compare_equal(cli, trefoil_file, tmp_path):
    """Test a file against a copy padded with a cancelling twist pair"""
    copy = tmp_path / "copy.tangle"
    padded = trefoil_file.read_text().replace("cap_cw 1", "twist_pos 1\ntwist_neg 1\ncap_cw 1")
    copy.write_text(padded)
    code, out, _ = cli("compare", str(trefoil_file), str(copy))

    assert code == EXIT_OK
    assert out.splitlines()[-1] == "EQUAL"


def test_compare_different(cli, trefoil_file, tmp_path):
    """Test the trefoil and its mirror differ"""
    mirror = tmp_path / "mirror.tangle"
    mirror.write_text(trefoil_file.read_text().replace("cross_pos", "cross_neg"))
    code, out, _ = cli("compare", str(trefoil_file), str(mirror))

    assert code == EXIT_INTERNAL
    assert out.splitlines()[-1] == "DIFFERENT"


# ==========================================
# REP, CHECK, HOMOLOGY
# ==========================================


def test_rep(cli):
    """Test the standard A2 module description"""
    code, out, _ = cli("rep", "--algebra", "A2", "--weight", "1,0")
    lines = out.splitlines()

    assert code == EXIT_OK
    assert lines[0] == "A2 [1,0]: dim 3, minuscule"
    assert lines[1] == "quantum dimension: q^2 + 1 + q^-2"
    assert len(lines) == 5


def test_rep_rejects_non_dominant(cli):
    """Test non-dominant highest weights exit 2"""
    code, _, err = cli("rep", "--algebra", "A2", "--weight", "1,-1")

    assert code == EXIT_VALIDATION
    assert "not dominant" in err


def test_check_passes(cli):
    """Test a passing suite prints PASS lines and a tally"""
    code, out, _ = cli("check", "--suite", "zigzag", "--algebra", "A1", "--weight", "1")
    lines = out.splitlines()

    assert code == EXIT_OK
    assert lines[:2] == ["PASS zigzag A1 [1] st", "PASS zigzag A1 [1] standard"]
    assert lines[-1] == "2/2 passed"


def test_check_json(cli):
    """Test check results as a JSON list"""
    code, out, _ = cli(
        "check",
        "--suite",
        "yangbaxter",
        "--algebra",
        "A1",
        "--weights",
        "1;1;1",
        "--output",
        "json",
    )
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload == [
        {"suite": "yangbaxter", "case": "A1 [1] [1] [1]", "passed": True, "detail": ""}
    ]


def test_check_unknown_suite(cli):
    """Test an unknown suite exits 2"""
    code, _, err = cli("check", "--suite", "everything")

    assert code == EXIT_VALIDATION
    assert "unknown suite" in err


def test_unknot_homology(cli):
    """Test the homology command reports a match"""
    code, out, _ = cli("unknot-homology", "--tmax", "6")

    assert code == EXIT_OK
    assert "closed form: PASS" in out
    assert out.splitlines()[-1] == "euler characteristic: q^2 + 1 + q^-2"
    assert "t^-2: q^2" in out.splitlines()


def test_unknot_homology_small_tmax(cli):
    """Test truncation orders below 4 are rejected"""
    code, _, _ = cli("unknot-homology", "--tmax", "3")
    assert code == EXIT_VALIDATION


# ==========================================
# APPLICATION
# ==========================================


def test_registered_commands():
    """Test every command is registered once"""
    assert sorted(app.commands) == ["check", "compare", "invariant", "rep", "unknot-homology"]
    with pytest.raises(ValueError):
        app.command("rep", "again", lambda parser: None)(lambda args, config: None)


def test_version(cli):
    """Test --version exits cleanly"""
    with pytest.raises(SystemExit) as exc_info:
        cli("--version")
    assert exc_info.value.code == 0


def test_invalid_log_level(cli, unknot_file):
    """Test a bad log level is a configuration error"""
    code, _, _ = cli("invariant", "--tangle", str(unknot_file), "--log-level", "LOUD")
    assert code == EXIT_VALIDATION


def test_config_read_from_environment_on_first_use(cli, monkeypatch):
    """Test the environment is read when a command runs, not at import"""
    monkeypatch.setenv("RIBBON_OUTPUT", "json")
    monkeypatch.setattr(dependencies, "_config", None)

    code, out, _ = cli("rep", "--algebra", "A1", "--weight", "1")

    assert code == EXIT_OK
    assert json.loads(out)["dimension"] == 2


def test_bad_environment_is_a_configuration_error(cli, monkeypatch):
    """Test an unknown output format in the environment exits with a validation code"""
    monkeypatch.setenv("RIBBON_OUTPUT", "yaml")
    monkeypatch.setattr(dependencies, "_config", None)

    code, _, _ = cli("rep", "--algebra", "A1", "--weight", "1")

    assert code == EXIT_VALIDATION

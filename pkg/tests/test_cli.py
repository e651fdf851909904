"""End-to-end tests for the command line interface.

Everything runs in process through ``mzl.cli.main`` so the suite stays
fast; one subprocess test confirms the ``python -m mzl`` entry point.
The golden files under ``tests/golden`` pin the exact bytes of one
invocation per subcommand.  Regenerate them with
``PYTHONPATH=src python3 tests/golden/regen.py`` after an intentional
format change.
"""

import contextlib
import importlib.util
import io
import json
import os
import pathlib
import subprocess
import sys

import pytest

from mzl.algebra import RING_POLY, EPolynomial, SeriesPrefix, series_to_json
from mzl.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, EXIT_PREFIX, EXIT_VERDICT, main

HERE = pathlib.Path(__file__).resolve().parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

_spec = importlib.util.spec_from_file_location("golden_regen", GOLDEN / "regen.py")
_regen = importlib.util.module_from_spec(_spec)
_spec.loader.exec_module(_regen)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------- goldens


@pytest.mark.parametrize("name", sorted(_regen.INVOCATIONS))
def test_golden_byte_equality(name):
    code, out, err = run_cli(*_regen.INVOCATIONS[name])
    assert code == EXIT_OK, err
    assert out.encode() == (GOLDEN / name).read_bytes()


def test_goldens_cover_every_subcommand():
    heads = {tuple(argv[:2]) if argv[0] in ("zeta", "rationality", "claim") else (argv[0],)
             for argv in _regen.INVOCATIONS.values()}
    assert heads == {
        ("zeta", "coeffs"),
        ("zeta", "hankel"),
        ("rationality", "reconstruct"),
        ("rationality", "check"),
        ("claim", "verify"),
        ("claim", "expand"),
        ("witness",),
        ("genus",),
    }


def test_output_is_deterministic_across_runs():
    argv = _regen.INVOCATIONS["zeta_hankel.json"]
    first = run_cli(*argv)
    second = run_cli(*argv)
    assert first == second


def test_seed_flag_is_accepted_and_inert():
    base = run_cli("claim", "verify", "--pg", "2", "--n", "1", "--m", "1:10")
    seeded = run_cli("claim", "verify", "--seed", "7", "--pg", "2", "--n", "1",
                     "--m", "1:10")
    assert seeded == base


def test_module_entry_point():
    env = dict(os.environ)
    env["PYTHONPATH"] = str(HERE.parent / "src") + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "mzl", "genus", "--diamond", str(DATA / "p1.json")],
        capture_output=True, env=env, cwd=HERE.parent,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["coeffs"] == [1, 0]


# ---------------------------------------------------------- payload shape


def test_zeta_coeffs_payload():
    code, out, _ = run_cli("zeta", "coeffs", "--diamond", str(DATA / "p2.json"),
                           "--terms", "2")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["ring"] == "ZuvPoly"
    assert doc["lshift"] == 0
    assert len(doc["coeffs"]) == 3
    assert doc["coeffs"][0] == {"terms": [{"c": "1", "u": 0, "v": 0}]}
    assert out.endswith("\n") and not out.endswith("\n\n")


def test_zeta_coeffs_with_inversion_reports_laurent_ring():
    code, out, _ = run_cli("zeta", "coeffs", "--diamond", str(DATA / "p1.json"),
                           "--terms", "2", "--invert-L", "2")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["ring"] == "Laurent"
    assert doc["lshift"] == 2
    assert doc["coeffs"][0] == {"lpow": 2, "num": {"terms": [{"c": "1", "u": 0, "v": 0}]}}


def test_hankel_poly_ring_omits_det_values():
    code, out, _ = run_cli("zeta", "hankel", "--diamond", str(DATA / "p1.json"),
                           "--terms", "8", "--window", "3")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["determinantally_rational_up_to_prefix"] is True
    for report in doc["reports"]:
        assert all(entry["det"] is None for entry in report["offsets"])
    three = next(r for r in doc["reports"] if r["window"] == 3)
    assert three["first_stable_offset"] == 0


def test_hankel_eval_keeps_det_values():
    code, out, _ = run_cli("zeta", "hankel", "--diamond", str(DATA / "p1.json"),
                           "--terms", "8", "--window", "2", "--eval", "1,1")
    assert code == EXIT_OK
    doc = json.loads(out)
    # specialized at (1,1) the coefficients are 1,2,3,... and every 2x2
    # window determinant is -1
    two = next(r for r in doc["reports"] if r["window"] == 2)
    assert two["offsets"][0]["det"] == "-1"


def test_hankel_csv_format():
    code, out, _ = run_cli("zeta", "hankel", "--diamond", str(DATA / "p1.json"),
                           "--terms", "8", "--window", "2", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "window,offset,zero,first_stable_offset"
    assert lines[1].startswith("1,0,")


def test_claim_expand_csv_format():
    code, out, _ = run_cli("claim", "expand", "--n", "1", "--m", "2:3",
                           "--pg", "2", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "m,sigma,genus_product"
    assert lines[1] == "2,1 2,15"


def test_reconstruct_found_payload():
    code, out, _ = run_cli("rationality", "reconstruct",
                           str(DATA / "geom_series.json"), "--max-deg", "2")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["found"] is True
    assert doc["certificate"]["g"] == ["1", "-2"]


def test_genus_payload():
    code, out, _ = run_cli("genus", "--diamond", str(DATA / "surface137.json"))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc == {"coeffs": [1, 1, 3], "dim": 2, "geometric_genus": 3}


# ------------------------------------------------------------- exit codes


def test_verdict_exit_reconstruct_failure():
    code, out, _ = run_cli("rationality", "reconstruct",
                           str(DATA / "exp_series.json"), "--max-deg", "3")
    assert code == EXIT_VERDICT
    doc = json.loads(out)
    assert doc["found"] is False
    assert doc["certificate"] is None


def test_verdict_exit_check_failure():
    code, out, _ = run_cli("rationality", "check", str(DATA / "geom_series.json"),
                           "--certificate", str(DATA / "wrong_cert.json"))
    assert code == EXIT_VERDICT
    assert json.loads(out)["holds"] is False


def test_verdict_exit_claim_collision():
    code, out, _ = run_cli("claim", "verify", "--pg", "1", "--n", "1", "--m", "1:10")
    assert code == EXIT_VERDICT
    doc = json.loads(out)
    assert doc["separated"] is False
    assert len(doc["collisions"]) == 10


def test_invalid_exit_bad_diamond_names_the_axiom():
    code, _, err = run_cli("genus", "--diamond", str(DATA / "bad_serre.json"))
    assert code == EXIT_INVALID
    assert "Serre duality violated" in err


def test_invalid_exit_witness_needs_two_genus():
    code, _, err = run_cli("witness", "--diamond", str(DATA / "k3like.json"),
                           "--n", "1", "--m", "1:5")
    assert code == EXIT_INVALID
    assert "P_g(X) >= 2 required" in err


def test_invalid_exit_witness_rejects_curves():
    code, _, err = run_cli("witness", "--diamond", str(DATA / "curve2.json"),
                           "--n", "1", "--m", "1:5")
    assert code == EXIT_INVALID
    assert "dimension 2" in err


def test_invalid_exit_nonunit_certificate():
    code, _, err = run_cli("rationality", "check", str(DATA / "geom_series.json"),
                           "--certificate", str(DATA / "nonunit_cert.json"))
    assert code == EXIT_INVALID
    assert "unit" in err


def test_invalid_exit_reversed_m_range():
    code, _, err = run_cli("claim", "verify", "--pg", "2", "--n", "1", "--m", "9:3")
    assert code == EXIT_INVALID


def test_invalid_exit_expand_csv_needs_pg():
    code, _, err = run_cli("claim", "expand", "--n", "1", "--m", "2",
                           "--format", "csv")
    assert code == EXIT_INVALID
    assert "--pg" in err


def test_invalid_exit_poly_reconstruct_needs_eval(tmp_path):
    L = EPolynomial.lefschetz()
    series = SeriesPrefix(RING_POLY, [L ** k for k in range(7)])
    path = tmp_path / "lpowers.json"
    path.write_text(json.dumps(series_to_json(series)) + "\n")
    code, _, err = run_cli("rationality", "reconstruct", str(path), "--max-deg", "1")
    assert code == EXIT_INVALID
    assert "--eval" in err

    code, out, _ = run_cli("rationality", "reconstruct", str(path),
                           "--max-deg", "1", "--eval", "2,2")
    assert code == EXIT_OK
    assert json.loads(out)["certificate"]["g"] == ["1", "-4"]


def test_invalid_exit_unknown_flag():
    code, _, _ = run_cli("zeta", "coeffs", "--diamond", str(DATA / "p1.json"),
                         "--no-such-flag")
    assert code == EXIT_INVALID


def test_io_exit_missing_file():
    code, _, err = run_cli("genus", "--diamond", str(DATA / "does_not_exist.json"))
    assert code == EXIT_IO
    assert "error:" in err


def test_io_exit_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("this is { not json\n")
    code, _, _ = run_cli("genus", "--diamond", str(path))
    assert code == EXIT_IO


def test_prefix_exit_window_too_wide():
    code, _, err = run_cli("zeta", "hankel", "--diamond", str(DATA / "p1.json"),
                           "--terms", "3", "--window", "5")
    assert code == EXIT_PREFIX
    assert "K >= 8" in err


def test_help_exits_zero():
    code, out, _ = run_cli("--help")
    assert code == EXIT_OK
    assert "zeta" in out

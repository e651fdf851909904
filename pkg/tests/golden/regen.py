"""Regenerate the golden CLI outputs.

Run from the repository root:

    PYTHONPATH=src python3 tests/golden/regen.py

Each golden file is the exact stdout of one CLI invocation.  The test
suite compares byte for byte, so regenerate only when an output format
change is intentional, and review the diff.
"""

import contextlib
import io
import pathlib
import sys

from mzl.cli import main

HERE = pathlib.Path(__file__).resolve().parent
DATA = HERE.parent / "data"

INVOCATIONS = {
    "zeta_coeffs.json": [
        "zeta", "coeffs", "--diamond", str(DATA / "p1.json"), "--terms", "3",
    ],
    "zeta_hankel.json": [
        "zeta", "hankel", "--diamond", str(DATA / "curve1.json"),
        "--terms", "10", "--window", "3", "--eval", "2,3",
    ],
    "reconstruct.json": [
        "rationality", "reconstruct", str(DATA / "geom_series.json"),
        "--max-deg", "2",
    ],
    "check.json": [
        "rationality", "check", str(DATA / "geom_series.json"),
        "--certificate", str(DATA / "geom_cert.json"),
    ],
    "claim_verify.json": [
        "claim", "verify", "--pg", "2", "--n", "1", "--m", "1:10",
    ],
    "claim_expand.json": [
        "claim", "expand", "--n", "1", "--m", "2", "--pg", "2",
    ],
    "witness.json": [
        "witness", "--diamond", str(DATA / "surface022.json"),
        "--n", "1", "--m", "1:5",
    ],
    "genus.json": [
        "genus", "--diamond", str(DATA / "surface022.json"),
    ],
}


def regenerate() -> None:
    for name, argv in INVOCATIONS.items():
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = main(argv)
        if code != 0:
            sys.exit(f"{name}: expected exit 0, got {code}")
        (HERE / name).write_bytes(out.getvalue().encode())
        print(f"wrote {name} ({len(out.getvalue())} bytes)")


if __name__ == "__main__":
    regenerate()

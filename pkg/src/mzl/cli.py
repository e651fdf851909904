"""Command-line frontend.

Every command writes one JSON or CSV document to stdout and returns a coded
status: 0 success, 1 negative verdict (collision found, witness failed,
certificate rejected or absent), 2 invalid parameters or input data, 3 I/O
failure, 4 prefix too short for the requested window.  Output bytes are a
pure function of the invocation: JSON keys are sorted, big integers travel
as decimal strings, CSV rows end with a bare newline.

The --seed flag is accepted everywhere for interface stability; no current
subcommand draws randomness, so it has no effect on output.
"""
from __future__ import annotations

import argparse
import json
import sys

from mzl.algebra import (
    RING_LAURENT,
    RING_POLY,
    RING_Q,
    RING_Z,
    InsufficientPrefix,
    SeriesPrefix,
    series_from_json,
)
from mzl.claim import (
    InvalidSurface,
    claim_report_to_json,
    expand_terms_to_csv,
    expand_terms_to_json,
    irrationality_witness,
    verify_claim,
    witness_report_to_json,
)
from mzl.hodge import (
    InvalidDiamond,
    InvalidParams,
    diamond_from_json,
    genus_polynomial,
)
from mzl.rationality import (
    NonUnitLeadingTerm,
    certificate_from_json,
    certificate_to_json,
    check_global,
    determinantal_test,
    hankel_reports_to_csv,
    hankel_reports_to_json,
    reconstruct_certificate,
)
from mzl.zeta import (
    SpecializationMap,
    ZeroDenominator,
    invert_L,
    specialize,
    sym_coefficients,
    zeta_to_json,
)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_PREFIX = 4


def _m_range(text: str) -> range:
    """Inclusive 'A:B', or a single 'M'."""
    a, sep, b = text.partition(":")
    try:
        lo = int(a)
        hi = int(b) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad m range {text!r}: use A:B or M")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"bad m range {text!r}: end before start")
    return range(lo, hi + 1)


def _eval_point(text: str) -> tuple:
    try:
        u, v = text.split(",")
        return int(u), int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad evaluation point {text!r}: use U,V")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzl",
        description="Symmetric-power zeta coefficients, Hankel rationality "
        "tests, and genus separation over exact arithmetic.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed", type=int, default=0, help="accepted for reproducibility; inert"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    zeta = sub.add_parser("zeta", help="symmetric-power series of a diamond")
    zeta_sub = zeta.add_subparsers(dest="zeta_command", required=True)

    coeffs = zeta_sub.add_parser(
        "coeffs", parents=[common], help="emit the coefficient prefix"
    )
    coeffs.add_argument("--diamond", required=True, help="diamond JSON path")
    coeffs.add_argument("--terms", type=int, default=32, metavar="K")
    coeffs.add_argument("--invert-L", type=int, default=0, metavar="N")
    coeffs.add_argument("--format", choices=["json"], default="json")

    hankel = zeta_sub.add_parser(
        "hankel", parents=[common], help="Hankel window verdicts for the prefix"
    )
    hankel.add_argument("--diamond", required=True, help="diamond JSON path")
    hankel.add_argument("--terms", type=int, default=32, metavar="K")
    hankel.add_argument("--window", type=int, required=True, metavar="S")
    hankel.add_argument("--invert-L", type=int, default=0, metavar="N")
    hankel.add_argument(
        "--eval", type=_eval_point, default=None, metavar="U,V",
        help="specialize at an integer point before testing",
    )
    hankel.add_argument("--format", choices=["json", "csv"], default="json")

    rat = sub.add_parser("rationality", help="certificates over a series prefix")
    rat_sub = rat.add_subparsers(dest="rationality_command", required=True)

    recon = rat_sub.add_parser(
        "reconstruct", parents=[common], help="minimal certificate over the rationals"
    )
    recon.add_argument("series", help="series JSON path")
    recon.add_argument("--max-deg", type=int, required=True, metavar="D")
    recon.add_argument(
        "--eval", type=_eval_point, default=None, metavar="U,V",
        help="specialize a polynomial-ring series first",
    )
    recon.add_argument("--format", choices=["json"], default="json")

    check = rat_sub.add_parser(
        "check", parents=[common], help="verify a stored certificate"
    )
    check.add_argument("series", help="series JSON path")
    check.add_argument("--certificate", required=True, help="certificate JSON path")
    check.add_argument("--format", choices=["json"], default="json")

    claim = sub.add_parser("claim", help="genus separation of expansion terms")
    claim_sub = claim.add_subparsers(dest="claim_command", required=True)

    verify = claim_sub.add_parser(
        "verify", parents=[common], help="collision sweep over an m range"
    )
    verify.add_argument("--pg", type=int, required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--m", type=_m_range, required=True, metavar="A:B")
    verify.add_argument("--format", choices=["json"], default="json")

    expand = claim_sub.add_parser(
        "expand", parents=[common], help="list the signed permutation terms"
    )
    expand.add_argument("--n", type=int, required=True)
    expand.add_argument("--m", type=_m_range, required=True, metavar="A:B")
    expand.add_argument("--pg", type=int, default=None)
    expand.add_argument("--format", choices=["json", "csv"], default="json")

    witness = sub.add_parser(
        "witness", parents=[common], help="per-m irrationality witness for a surface"
    )
    witness.add_argument("--diamond", required=True, help="diamond JSON path")
    witness.add_argument("--n", type=int, required=True)
    witness.add_argument("--m", type=_m_range, required=True, metavar="A:B")
    witness.add_argument("--format", choices=["json"], default="json")

    genus = sub.add_parser(
        "genus", parents=[common], help="genus polynomial of a diamond"
    )
    genus.add_argument("--diamond", required=True, help="diamond JSON path")
    genus.add_argument("--format", choices=["json"], default="json")

    return parser


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _load_diamond(path: str):
    return diamond_from_json(_read_json(path))


def _zeta_prefix(args):
    z = sym_coefficients(_load_diamond(args.diamond), args.terms)
    if args.invert_L:
        z = invert_L(z, args.invert_L)
    return z


def _cmd_zeta_coeffs(args) -> int:
    _emit_json(zeta_to_json(_zeta_prefix(args)))
    return EXIT_OK


def _cmd_zeta_hankel(args) -> int:
    z = _zeta_prefix(args)
    if args.eval is not None:
        f = specialize(z, SpecializationMap(*args.eval))
    else:
        f = z.coeffs
    # exact values attach only where they come cheap; verdicts are exact always
    keep = f.ring in (RING_Z, RING_Q)
    reports = determinantal_test(f, args.window, keep_values=keep)
    if args.format == "csv":
        sys.stdout.write(hankel_reports_to_csv(reports))
    else:
        _emit_json(hankel_reports_to_json(f, reports))
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    doc = _read_json(args.series)
    f = series_from_json(doc)
    if f.ring in (RING_POLY, RING_LAURENT):
        if args.eval is None:
            raise InvalidParams(
                "a polynomial-ring series needs --eval U,V to reach the rationals"
            )
        phi = SpecializationMap(*args.eval)
        f = SeriesPrefix(RING_Q, [phi.apply(c) for c in f.coeffs])
    elif f.ring == RING_Z:
        f = SeriesPrefix(RING_Q, list(f.coeffs))
    cert = reconstruct_certificate(f, args.max_deg)
    _emit_json(
        {
            "certificate": None if cert is None else certificate_to_json(cert),
            "d_max": args.max_deg,
            "found": cert is not None,
        }
    )
    return EXIT_OK if cert is not None else EXIT_VERDICT


def _cmd_check(args) -> int:
    f = series_from_json(_read_json(args.series))
    cert = certificate_from_json(_read_json(args.certificate))
    holds = check_global(f, cert)
    _emit_json(
        {
            "holds": holds,
            "verified_through": min(f.K, cert.verified_to),
        }
    )
    return EXIT_OK if holds else EXIT_VERDICT


def _cmd_claim_verify(args) -> int:
    report = verify_claim(args.pg, args.n, args.m)
    _emit_json(claim_report_to_json(report))
    return EXIT_OK if report.separated else EXIT_VERDICT


def _cmd_claim_expand(args) -> int:
    if args.format == "csv":
        if args.pg is None:
            raise InvalidParams("--format csv needs --pg for the genus column")
        sys.stdout.write(expand_terms_to_csv(args.n, args.m, args.pg))
        return EXIT_OK
    docs = [expand_terms_to_json(args.n, m, args.pg) for m in args.m]
    _emit_json(docs[0] if len(docs) == 1 else {"expansions": docs})
    return EXIT_OK


def _cmd_witness(args) -> int:
    report = irrationality_witness(_load_diamond(args.diamond), args.n, args.m)
    _emit_json(witness_report_to_json(report))
    return EXIT_OK if report.all_hold else EXIT_VERDICT


def _cmd_genus(args) -> int:
    x = _load_diamond(args.diamond)
    gp = genus_polynomial(x)
    _emit_json(
        {
            "coeffs": list(gp.coeffs),
            "dim": x.dim,
            "geometric_genus": gp.geometric_genus,
        }
    )
    return EXIT_OK


def _dispatch(args) -> int:
    if args.command == "zeta":
        if args.zeta_command == "coeffs":
            return _cmd_zeta_coeffs(args)
        return _cmd_zeta_hankel(args)
    if args.command == "rationality":
        if args.rationality_command == "reconstruct":
            return _cmd_reconstruct(args)
        return _cmd_check(args)
    if args.command == "claim":
        if args.claim_command == "verify":
            return _cmd_claim_verify(args)
        return _cmd_claim_expand(args)
    if args.command == "witness":
        return _cmd_witness(args)
    return _cmd_genus(args)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    try:
        return _dispatch(args)
    except InsufficientPrefix as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PREFIX
    except json.JSONDecodeError as exc:
        print(f"error: unreadable JSON input: {exc}", file=sys.stderr)
        return EXIT_IO
    except (
        InvalidDiamond,
        InvalidParams,
        InvalidSurface,
        NonUnitLeadingTerm,
        ZeroDenominator,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

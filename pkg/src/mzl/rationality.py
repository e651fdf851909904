"""Three gradations of rationality for truncated power series.

A global certificate (g, h) with g * f = h pins the series down in the ring
itself; vanishing Hankel determinants detect a linear recurrence without
naming one; pointwise rationality samples the series through evaluation maps
to the rationals.  The first implies the second implies the third, and the
probe here exercises that chain on generated instances.  Every verdict is
relative to the stored prefix and the reports say so.

Certificates insist on a unit constant term in g.  The coefficient ring of
interest has zero divisors, and a zero-divisor leading term would leave the
solution of g * x = h ambiguous, so such certificates are rejected outright
instead of being trusted.
"""
from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from mzl.algebra import (
    RING_LAURENT,
    RING_POLY,
    RING_Q,
    RING_Z,
    EPolynomial,
    HankelScanner,
    InsufficientPrefix,
    SeriesPrefix,
    UniPoly,
    coeff_from_json,
    coeff_to_json,
    hankel_det,
    rational_series_prefix,
    ring_is_unit,
    ring_zero,
    series_mul_prefix,
)
from mzl.zeta import SpecializationMap, ZetaPrefix, specialize


class NonUnitLeadingTerm(ValueError):
    """Certificate denominator starts with a non-unit; uniqueness is not certifiable."""


class RationalCertificate:
    """A pair g, h over one ring together with the order it was checked to."""

    __slots__ = ("g", "h", "verified_to")

    def __init__(self, g: UniPoly, h: UniPoly, verified_to: int):
        if g.ring != h.ring:
            raise ValueError("certificate numerator and denominator ring mismatch")
        if verified_to < 0:
            raise ValueError("verified_to must be non-negative")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "verified_to", verified_to)

    def __setattr__(self, name, value):
        raise AttributeError("RationalCertificate is immutable")

    @property
    def ring(self) -> str:
        return self.g.ring

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalCertificate):
            return NotImplemented
        return (
            self.g == other.g
            and self.h == other.h
            and self.verified_to == other.verified_to
        )

    def __repr__(self) -> str:
        return (
            f"RationalCertificate(deg g={self.g.degree}, deg h={self.h.degree}, "
            f"verified_to={self.verified_to})"
        )


def check_global(f: SeriesPrefix, cert: RationalCertificate) -> bool:
    """Whether g * f = h holds through order min(K, verified_to)."""
    if cert.ring != f.ring:
        raise ValueError("certificate ring does not match the series ring")
    if not ring_is_unit(f.ring, cert.g.coeff(0)):
        raise NonUnitLeadingTerm(
            f"g(0) = {cert.g.coeff(0)!r} is not a unit; "
            "the solution of g*x = h need not be unique"
        )
    bound = min(f.K, cert.verified_to)
    prod = series_mul_prefix(cert.g, f)
    return all(prod[k] == cert.h.coeff(k) for k in range(bound + 1))


@dataclass(frozen=True)
class OffsetVerdict:
    i: int
    zero: bool
    det: object = None  # exact value, kept only on request


@dataclass(frozen=True)
class HankelReport:
    window: int
    offsets: tuple
    first_stable_offset: Optional[int]

    @property
    def stable(self) -> bool:
        return self.first_stable_offset is not None


def _first_stable(verdicts: Sequence[OffsetVerdict]) -> Optional[int]:
    # smallest n >= 0 with every tested determinant at i > n zero
    last_nonzero = None
    for v in verdicts:
        if not v.zero:
            last_nonzero = v.i
    if last_nonzero is None:
        return 0
    if last_nonzero == verdicts[-1].i:
        return None
    return last_nonzero


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("MZL_THREADS", "1")))
    except ValueError:
        return 1


def determinantal_test(
    f: SeriesPrefix, s_max: int, keep_values: bool = False
) -> list[HankelReport]:
    """Hankel verdicts for every window size s <= s_max at every offset the
    prefix can hold.  Exact values are attached only when keep_values is set;
    the zero/nonzero verdicts are exact either way.
    """
    if s_max < 1:
        raise ValueError("window bound must be at least 1")
    if f.K < 2 * (s_max - 1):
        raise InsufficientPrefix(
            f"prefix K={f.K} cannot hold an s={s_max} window (needs K >= {2 * (s_max - 1)})"
        )
    windows = [
        (s, list(range(f.K - 2 * (s - 1) + 1))) for s in range(1, s_max + 1)
    ]
    reports = []
    if f.ring in (RING_Z, RING_Q):
        zero = ring_zero(f.ring)
        cap = _thread_cap()
        for s, offsets in windows:
            if cap > 1 and len(offsets) > 1:
                with ThreadPoolExecutor(max_workers=cap) as pool:
                    dets = list(pool.map(lambda i: hankel_det(f, i, s), offsets))
            else:
                dets = [hankel_det(f, i, s) for i in offsets]
            verdicts = tuple(
                OffsetVerdict(i, d == zero, d if keep_values else None)
                for i, d in zip(offsets, dets)
            )
            reports.append(HankelReport(s, verdicts, _first_stable(verdicts)))
        return reports
    scanner = HankelScanner(f, windows)
    for s, offsets in windows:
        verdicts = []
        for i in offsets:
            is_zero = scanner.vanishes(i, s)
            det = None
            if keep_values:
                det = hankel_det(f, i, s)
            verdicts.append(OffsetVerdict(i, is_zero, det))
        verdicts = tuple(verdicts)
        reports.append(HankelReport(s, verdicts, _first_stable(verdicts)))
    return reports


def is_determinantally_rational(reports: Iterable[HankelReport]) -> bool:
    """The finite-prefix verdict: some window size stabilizes to zero."""
    return any(r.stable for r in reports)


def reconstruct_certificate(
    f: SeriesPrefix, d_max: int
) -> Optional[RationalCertificate]:
    """Minimal recurrence over the rationals fitting the whole prefix.

    Searches deg g = 0..d_max for g with g(0) = 1 and (g*f)_k = 0 for every
    k in (d_max, K]; the numerator is then the truncation of g*f, so its
    degree stays within d_max as well.  Returns None when nothing fits.
    """
    if f.ring != RING_Q:
        raise ValueError("reconstruction works over the rational field")
    if d_max < 0:
        raise ValueError("d_max must be non-negative")
    if f.K < 2 * d_max:
        raise InsufficientPrefix(
            f"prefix K={f.K} too short to reconstruct with d_max={d_max} "
            f"(needs K >= {2 * d_max})"
        )
    a = f.coeffs
    ks = range(d_max + 1, f.K + 1)
    for d in range(d_max + 1):
        # unknowns g_1..g_d in f_k + sum_j g_j f_{k-j} = 0 for the tail orders
        rows = [[a[k - j] for j in range(1, d + 1)] for k in ks]
        rhs = [-a[k] for k in ks]
        sol = _solve_exact(rows, rhs, d)
        if sol is None:
            continue
        g = UniPoly(RING_Q, [Fraction(1)] + sol)
        prod = series_mul_prefix(g, f)
        if any(prod[k] != 0 for k in ks):
            continue  # defensive; the solver should have guaranteed this
        h = UniPoly(RING_Q, list(prod[: d_max + 1]))
        return RationalCertificate(g, h, f.K)
    return None


def _solve_exact(rows, rhs, ncols) -> Optional[list[Fraction]]:
    """Gaussian elimination over Fraction; free variables pinned to zero.
    Returns None when the system is inconsistent."""
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        m[r] = pr = [x * inv for x in pr]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for row_idx, c in enumerate(pivots):
        sol[c] = m[row_idx][ncols] - sum(
            m[row_idx][j] * sol[j] for j in range(c + 1, ncols)
        )
    return sol


@dataclass(frozen=True)
class PointwiseEntry:
    point: SpecializationMap
    rational: bool
    certificate: Optional[RationalCertificate]
    witness_offset: Optional[int] = None
    witness_det: Optional[Fraction] = None


@dataclass(frozen=True)
class PointwiseReport:
    d_max: int
    entries: tuple

    @property
    def all_rational(self) -> bool:
        return all(e.rational for e in self.entries)


def pointwise_test(
    z, maps: Sequence[SpecializationMap], d_max: int
) -> PointwiseReport:
    """Specialize at each point and attempt reconstruction there.

    Accepts a ZetaPrefix or a plain SeriesPrefix over the polynomial or
    Laurent ring.  A negative verdict carries, when one exists inside the
    prefix, an offset whose (d_max+1)-window determinant is nonzero.
    """
    if not maps:
        raise ValueError("pointwise test needs at least one specialization point")
    entries = []
    for phi in maps:
        fq = _specialize_any(z, phi)
        cert = reconstruct_certificate(fq, d_max)
        if cert is not None:
            entries.append(PointwiseEntry(phi, True, cert))
            continue
        offset, det = _nonzero_window_witness(fq, d_max + 1)
        entries.append(PointwiseEntry(phi, False, None, offset, det))
    return PointwiseReport(d_max, tuple(entries))


def _specialize_any(z, phi: SpecializationMap) -> SeriesPrefix:
    if isinstance(z, ZetaPrefix):
        return specialize(z, phi)
    if isinstance(z, SeriesPrefix):
        if z.ring == RING_Q:
            return z
        if z.ring in (RING_POLY, RING_LAURENT):
            return SeriesPrefix(RING_Q, [phi.apply(c) for c in z.coeffs])
    raise TypeError(f"cannot specialize {z!r}")


def _nonzero_window_witness(fq: SeriesPrefix, s: int):
    if fq.K < 2 * (s - 1):
        return None, None
    for i in range(fq.K - 2 * (s - 1), -1, -1):
        d = hankel_det(fq, i, s)
        if d != 0:
            return i, d
    return None, None


PROBE_POINTS = (
    SpecializationMap(1, 1),
    SpecializationMap(2, 3),
    SpecializationMap(3, 5),
    SpecializationMap(5, 2),
    SpecializationMap(7, 2),
)


@dataclass(frozen=True)
class ProbeItem:
    deg_g: int
    deg_h: int
    window: int
    determinantal: bool
    pointwise: bool


@dataclass(frozen=True)
class ProbeReport:
    items: tuple

    @property
    def all_hold(self) -> bool:
        return all(it.determinantal and it.pointwise for it in self.items)


def implication_chain_probe(samples: Iterable[tuple]) -> ProbeReport:
    """Drive globally rational inputs through the weaker two notions.

    Each sample is (g, h, f): a certificate pair over the polynomial ring with
    g(0) = 1 and the series prefix it generates.  Determinantal testing uses
    window deg g + 1; pointwise testing reconstructs at the fixed probe points
    with d_max = max(deg g, deg h).  A failure here falsifies the implication
    chain, so it raises instead of reporting quietly.
    """
    items = []
    for g, h, f in samples:
        dg = max(g.degree, 0)
        dh = max(h.degree, 0)
        cert = RationalCertificate(g, h, f.K)
        if not check_global(f, cert):
            raise AssertionError("sample is not globally rational as claimed")
        reports = determinantal_test(f, dg + 1)
        det_ok = reports[dg].stable
        pw = pointwise_test(f, PROBE_POINTS, max(dg, dh))
        pw_ok = pw.all_rational
        if not (det_ok and pw_ok):
            raise AssertionError(
                f"implication chain broke on deg g={dg}, deg h={dh}: "
                f"determinantal={det_ok}, pointwise={pw_ok}"
            )
        items.append(ProbeItem(dg, dh, dg + 1, det_ok, pw_ok))
    return ProbeReport(tuple(items))


def random_global_series(rng, count: int, max_deg: int = 3, K: Optional[int] = None):
    """Seeded stream of (g, h, f) samples with g(0) = 1 over the polynomial ring."""

    def small_poly():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[(rng.randint(0, 2), rng.randint(0, 2))] = rng.randint(-3, 3)
        return EPolynomial(terms)

    for _ in range(count):
        dg = rng.randint(0, max_deg)
        dh = rng.randint(0, max_deg)
        g = UniPoly(
            RING_POLY, [EPolynomial.one()] + [small_poly() for _ in range(dg)]
        )
        h = UniPoly(RING_POLY, [small_poly() for _ in range(dh + 1)])
        prefix_len = K if K is not None else 2 * (g.degree + max(h.degree, 0)) + 2
        f = rational_series_prefix(g, h, max(prefix_len, 2 * g.degree, 1))
        yield g, h, f


# ---------------------------------------------------------------------------
# report serialization

def certificate_to_json(cert: RationalCertificate) -> dict:
    return {
        "g": [coeff_to_json(cert.ring, c) for c in cert.g.coeffs],
        "h": [coeff_to_json(cert.ring, c) for c in cert.h.coeffs],
        "ring": cert.ring,
        "verified_to": cert.verified_to,
    }


def certificate_from_json(obj) -> RationalCertificate:
    if not isinstance(obj, dict) or not {"g", "h", "ring"} <= set(obj):
        raise ValueError("certificate JSON must carry 'ring', 'g' and 'h'")
    ring = obj["ring"]
    g = UniPoly(ring, [coeff_from_json(ring, c) for c in obj["g"]])
    h = UniPoly(ring, [coeff_from_json(ring, c) for c in obj["h"]])
    return RationalCertificate(g, h, int(obj.get("verified_to", 0)))


def hankel_report_to_json(report: HankelReport, ring: str) -> dict:
    return {
        "first_stable_offset": report.first_stable_offset,
        "offsets": [
            {
                "det": None if v.det is None else coeff_to_json(ring, v.det),
                "i": v.i,
                "zero": v.zero,
            }
            for v in report.offsets
        ],
        "window": report.window,
    }


def hankel_reports_to_json(f: SeriesPrefix, reports: Sequence[HankelReport]) -> dict:
    return {
        "K": f.K,
        "determinantally_rational_up_to_prefix": is_determinantally_rational(reports),
        "reports": [hankel_report_to_json(r, f.ring) for r in reports],
        "ring": f.ring,
    }


def hankel_reports_to_csv(reports: Sequence[HankelReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["window", "offset", "zero", "first_stable_offset"])
    for r in reports:
        stable = "" if r.first_stable_offset is None else r.first_stable_offset
        for v in r.offsets:
            writer.writerow([r.window, v.i, int(v.zero), stable])
    return buf.getvalue()


def pointwise_report_to_json(report: PointwiseReport) -> dict:
    entries = []
    for e in report.entries:
        doc = {
            "point": {"u0": e.point.u0, "v0": e.point.v0},
            "rational": e.rational,
        }
        doc["certificate"] = (
            None if e.certificate is None else certificate_to_json(e.certificate)
        )
        if not e.rational:
            doc["witness"] = (
                None
                if e.witness_offset is None
                else {
                    "det": coeff_to_json(RING_Q, e.witness_det),
                    "offset": e.witness_offset,
                }
            )
        entries.append(doc)
    return {"d_max": report.d_max, "entries": entries}

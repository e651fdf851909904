"""Symmetric-product zeta prefixes under the E-polynomial realization.

The abstract variety ring is deliberately not represented: no normal form is
known that would decide equality there, so everything downstream works with
the realization.  Irrationality probed here is therefore evidence about the
realization; the genus-claim module carries the argument that survives the
abstraction.

Coefficient generation expands the product over Hodge positions (p, q) of
(1 - u^p v^q t) raised to -(-1)^(p+q) h^{p,q}, truncated at t^K, one factor at
a time with exact integer arithmetic throughout.
"""
from __future__ import annotations

from fractions import Fraction

from mzl import _kernels
from mzl.algebra import (
    RING_LAURENT,
    RING_POLY,
    RING_Q,
    EPolynomial,
    LaurentClass,
    SeriesPrefix,
    binomial,
)
from mzl.hodge import HodgeDiamond, diamond_from_json, diamond_to_json, e_polynomial


class ZeroDenominator(ValueError):
    """Specialization hit a coefficient with an inverted u*v at a zero of u*v."""


class ZetaPrefix:
    """Truncated zeta series of a diamond, possibly with (u*v)^-N applied.

    lshift records the net inversion: coefficient k stores a_k * (u*v)^-lshift
    relative to the plain symmetric-product series, whose a_0 = 1 and
    a_1 = e_polynomial(source).
    """

    __slots__ = ("source", "coeffs", "lshift")

    def __init__(self, source: HodgeDiamond, coeffs: SeriesPrefix, lshift: int = 0):
        if coeffs.ring not in (RING_POLY, RING_LAURENT):
            raise ValueError("zeta coefficients live over ZuvPoly or Laurent")
        base0 = _unshift(coeffs.ring, coeffs.coeffs[0], lshift)
        if base0 != LaurentClass.one():
            raise ValueError("zeta prefix must start at the class of a point")
        if coeffs.K >= 1:
            base1 = _unshift(coeffs.ring, coeffs.coeffs[1], lshift)
            if base1 != LaurentClass(e_polynomial(source), 0):
                raise ValueError(
                    "second zeta coefficient must realize the source class"
                )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "lshift", lshift)

    def __setattr__(self, name, value):
        raise AttributeError("ZetaPrefix is immutable")

    @property
    def K(self) -> int:
        return self.coeffs.K

    @property
    def ring(self) -> str:
        return self.coeffs.ring

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaPrefix):
            return NotImplemented
        return (
            self.source == other.source
            and self.coeffs == other.coeffs
            and self.lshift == other.lshift
        )

    def __repr__(self) -> str:
        return f"ZetaPrefix(dim={self.source.dim}, K={self.K}, lshift={self.lshift})"


def _unshift(ring: str, c, lshift: int) -> LaurentClass:
    x = c if ring == RING_LAURENT else LaurentClass(c, 0)
    return x.times_lpow(lshift)


def sym_coefficients(x: HodgeDiamond, K: int) -> ZetaPrefix:
    """Prefix (a_0 .. a_K) of the symmetric-product series of the diamond.

    Each Hodge position (p, q) contributes one factor; even p + q gives the
    full binomial tail C(h+m-1, m), odd p + q the alternating finite one.
    """
    if K < 0:
        raise ValueError(f"truncation order must be >= 0, got {K}")
    series: list[dict] = [{0: 1}] + [{} for _ in range(K)]
    positions = [
        (p, q, x.h[p][q])
        for p in range(x.dim + 1)
        for q in range(x.dim + 1)
        if x.h[p][q]
    ]
    for p, q, h in positions:
        if (p + q) % 2 == 0:
            weights = [binomial(h + m - 1, m) for m in range(K + 1)]
        else:
            weights = [binomial(h, m) if m % 2 == 0 else -binomial(h, m) for m in range(min(h, K) + 1)]
        # multiply in place by sum_m weights[m] (u^p v^q t)^m; weights[0] = 1,
        # so walking k downward keeps the untouched entries as the old series
        for k in range(K, 0, -1):
            acc = series[k]
            for m in range(1, min(k, len(weights) - 1) + 1):
                dkey = ((m * p) << 32) | (m * q)
                _kernels.poly_addmul_shifted(acc, series[k - m], dkey, weights[m])
    coeffs = SeriesPrefix(
        RING_POLY, [EPolynomial._from_dict(d) for d in series]
    )
    return ZetaPrefix(x, coeffs)


def invert_L(z: ZetaPrefix, N: int) -> ZetaPrefix:
    """Multiply every coefficient by (u*v)^-N; N may be negative to undo.

    When the result carries no inverted powers at all the prefix collapses
    back to plain polynomial coefficients, so applying N and then -N restores
    the original object exactly.
    """
    if N == 0:
        return z
    shifted = [
        _unshift(z.ring, c, 0).times_lpow(-N) for c in z.coeffs.coeffs
    ]
    if all(c.lpow == 0 for c in shifted):
        coeffs = SeriesPrefix(RING_POLY, [c.num for c in shifted])
    else:
        coeffs = SeriesPrefix(RING_LAURENT, shifted)
    return ZetaPrefix(z.source, coeffs, z.lshift + N)


class SpecializationMap:
    """Evaluation at an integer point (u0, v0); a ring map to the rationals."""

    __slots__ = ("u0", "v0")

    def __init__(self, u0: int, v0: int):
        if not isinstance(u0, int) or not isinstance(v0, int):
            raise TypeError("specialization point must have integer coordinates")
        object.__setattr__(self, "u0", u0)
        object.__setattr__(self, "v0", v0)

    def __setattr__(self, name, value):
        raise AttributeError("SpecializationMap is immutable")

    def apply(self, c) -> Fraction:
        if isinstance(c, EPolynomial):
            return Fraction(c.evaluate(self.u0, self.v0))
        if isinstance(c, LaurentClass):
            if c.lpow > 0 and self.u0 * self.v0 == 0:
                raise ZeroDenominator(
                    f"coefficient inverts u*v but u0*v0 = 0 at ({self.u0}, {self.v0})"
                )
            return c.evaluate(self.u0, self.v0)
        raise TypeError(f"cannot specialize {c!r}")

    __call__ = apply

    def __repr__(self) -> str:
        return f"SpecializationMap(u0={self.u0}, v0={self.v0})"


def specialize(z: ZetaPrefix, phi: SpecializationMap) -> SeriesPrefix:
    """Apply the evaluation map coefficientwise, landing in rational series."""
    return SeriesPrefix(RING_Q, [phi.apply(c) for c in z.coeffs.coeffs])


def zeta_to_json(z: ZetaPrefix) -> dict:
    from mzl.algebra import coeff_to_json

    return {
        "K": z.K,
        "coeffs": [coeff_to_json(z.ring, c) for c in z.coeffs.coeffs],
        "diamond": diamond_to_json(z.source),
        "lshift": z.lshift,
        "ring": z.ring,
    }


def zeta_from_json(obj) -> ZetaPrefix:
    from mzl.algebra import coeff_from_json

    if not isinstance(obj, dict):
        raise ValueError("zeta JSON must be an object")
    missing = {"coeffs", "diamond", "ring"} - set(obj)
    if missing:
        raise ValueError(f"zeta JSON lacks {sorted(missing)}")
    ring = obj["ring"]
    if ring not in (RING_POLY, RING_LAURENT):
        raise ValueError(f"zeta ring must be ZuvPoly or Laurent, got {ring!r}")
    coeffs = SeriesPrefix(ring, [coeff_from_json(ring, c) for c in obj["coeffs"]])
    return ZetaPrefix(
        diamond_from_json(obj["diamond"]), coeffs, int(obj.get("lshift", 0))
    )

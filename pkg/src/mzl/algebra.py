"""Exact arithmetic substrate.

Rings in play: arbitrary-precision integers (plain int), rationals
(fractions.Fraction), sparse bivariate polynomials over the integers
(EPolynomial), and the Laurent extension of those by an inverse of u*v
(LaurentClass).  Series prefixes and dense univariate polynomials are generic
over any of them.

EPolynomial stores a sparse map from packed exponent keys (p << 32) | q to
nonzero integer coefficients.  Canonical form means: no zero coefficients ever
stored, so two equal polynomials hold identical maps.  Exponents are capped at
2**31 - 1 per variable, far beyond anything the desk-scale computations here
produce.

Hankel determinant values are computed by fraction-free elimination (integer
and rational entries) or by evaluation on an integer grid followed by
degree-bound interpolation (polynomial entries).  Zero/nonzero verdicts for
polynomial determinants run the same grid modulo enough 61-bit primes that the
prime product exceeds twice a coefficient-height bound for the determinant;
vanishing everywhere on the full grid for every such prime forces the exact
determinant to vanish, while a single nonzero value anywhere certifies
nonvanishing.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from mzl import _kernels

_SHIFT = 32
_MASK = (1 << 32) - 1
_MAX_EXP = (1 << 31) - 1

RING_Z = "Z"
RING_Q = "Q"
RING_POLY = "ZuvPoly"
RING_LAURENT = "Laurent"
RINGS = (RING_Z, RING_Q, RING_POLY, RING_LAURENT)

# Verified primes just below 2**61; products of prefixes of this pool serve as
# CRT moduli for vanishing certificates.  Twelve give headroom past 10**219.
PRIME_POOL = (
    2305843009213693951,
    2305843009213693921,
    2305843009213693907,
    2305843009213693723,
    2305843009213693693,
    2305843009213693669,
    2305843009213693613,
    2305843009213693561,
    2305843009213693549,
    2305843009213693487,
    2305843009213693421,
    2305843009213693373,
)


class InsufficientPrefix(ValueError):
    """A window or reconstruction asked for more coefficients than the prefix holds."""


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) with C(n, 0) = 1 for every n; negative n follows the
    generalized convention C(n, k) = (-1)^k C(k - n - 1, k)."""
    if k < 0:
        raise ValueError("binomial requires k >= 0")
    if k == 0:
        return 1
    if n >= 0:
        return math.comb(n, k)
    val = math.comb(k - n - 1, k)
    return -val if k % 2 else val


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable items."""
    inversions = 0
    n = len(perm)
    for a in range(n):
        for b in range(a + 1, n):
            if perm[a] > perm[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


def _pack(p: int, q: int) -> int:
    return (p << _SHIFT) | q


class EPolynomial:
    """Sparse polynomial in u, v over the integers.

    The Lefschetz class maps to u*v under the realization implemented here, so
    `EPolynomial.lefschetz()` is the polynomial u*v.
    """

    __slots__ = ("_d",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        d: dict[int, int] = {}
        if terms:
            for (p, q), c in terms.items():
                if not isinstance(p, int) or not isinstance(q, int) or not isinstance(c, int):
                    raise TypeError("EPolynomial terms must be {(int, int): int}")
                if p < 0 or q < 0 or p > _MAX_EXP or q > _MAX_EXP:
                    raise ValueError("exponents must lie in [0, 2**31)")
                if c:
                    key = _pack(p, q)
                    nc = d.get(key, 0) + c
                    if nc:
                        d[key] = nc
                    elif key in d:
                        del d[key]
        self._d = d

    @classmethod
    def _from_dict(cls, d: dict[int, int]) -> "EPolynomial":
        # Trusted constructor: d is already canonical (packed keys, no zeros).
        out = object.__new__(cls)
        out._d = d
        return out

    @classmethod
    def zero(cls) -> "EPolynomial":
        return cls._from_dict({})

    @classmethod
    def one(cls) -> "EPolynomial":
        return cls._from_dict({0: 1})

    @classmethod
    def const(cls, c: int) -> "EPolynomial":
        return cls._from_dict({0: c} if c else {})

    @classmethod
    def monomial(cls, p: int, q: int, c: int = 1) -> "EPolynomial":
        if p < 0 or q < 0 or p > _MAX_EXP or q > _MAX_EXP:
            raise ValueError("exponents must lie in [0, 2**31)")
        return cls._from_dict({_pack(p, q): c} if c else {})

    @classmethod
    def lefschetz(cls) -> "EPolynomial":
        return cls.monomial(1, 1)

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield (p, q, coefficient) in lexicographic (p, q) order."""
        for key in sorted(self._d):
            yield key >> _SHIFT, key & _MASK, self._d[key]

    def term_count(self) -> int:
        return len(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def is_one(self) -> bool:
        return self._d == {0: 1}

    def constant_term(self) -> int:
        return self._d.get(0, 0)

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and 0 in self._d)

    def degree_u(self) -> int:
        """Max exponent of u; 0 for the zero polynomial."""
        return max((k >> _SHIFT for k in self._d), default=0)

    def degree_v(self) -> int:
        return max((k & _MASK for k in self._d), default=0)

    def height(self) -> int:
        """Largest absolute coefficient; 0 for the zero polynomial."""
        return max((abs(c) for c in self._d.values()), default=0)

    def evaluate(self, u0: int, v0: int):
        """Exact value at integer (or Fraction) arguments."""
        upows: dict[int, object] = {}
        vpows: dict[int, object] = {}
        total = 0
        for key, c in self._d.items():
            p = key >> _SHIFT
            q = key & _MASK
            up = upows.get(p)
            if up is None:
                up = upows[p] = u0 ** p
            vp = vpows.get(q)
            if vp is None:
                vp = vpows[q] = v0 ** q
            total += c * up * vp
        return total

    def shifted(self, dp: int, dq: int) -> "EPolynomial":
        """Multiply by u^dp v^dq; negative shifts require divisibility."""
        if not self._d:
            return self
        out = {}
        for key, c in self._d.items():
            p = (key >> _SHIFT) + dp
            q = (key & _MASK) + dq
            if p < 0 or q < 0:
                raise ValueError("negative exponent after shift")
            out[_pack(p, q)] = c
        return EPolynomial._from_dict(out)

    def divisible_by_uv(self) -> bool:
        return bool(self._d) and all(
            (k >> _SHIFT) >= 1 and (k & _MASK) >= 1 for k in self._d
        )

    def __bool__(self) -> bool:
        return bool(self._d)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._d == ({0: other} if other else {})
        if isinstance(other, EPolynomial):
            return self._d == other._d
        return NotImplemented

    def __neg__(self) -> "EPolynomial":
        return EPolynomial._from_dict({k: -c for k, c in self._d.items()})

    def __add__(self, other) -> "EPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._d, other._d
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            elif k in out:
                del out[k]
        return EPolynomial._from_dict(out)

    __radd__ = __add__

    def __sub__(self, other) -> "EPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "EPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "EPolynomial":
        if isinstance(other, int):
            if not other:
                return EPolynomial.zero()
            return EPolynomial._from_dict({k: c * other for k, c in self._d.items()})
        if isinstance(other, EPolynomial):
            return EPolynomial._from_dict(_kernels.poly_mul(self._d, other._d))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = EPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"EPolynomial({self})"

    def __str__(self) -> str:
        if not self._d:
            return "0"
        pieces = []
        for p, q, c in self.terms():
            mono = []
            if p:
                mono.append("u" if p == 1 else f"u^{p}")
            if q:
                mono.append("v" if q == 1 else f"v^{q}")
            # coefficient rendering: suppress 1 next to a monomial
            mstr = "*".join(mono)
            mag = abs(c)
            if not mstr:
                body = str(mag)
            elif mag == 1:
                body = mstr
            else:
                body = f"{mag}*{mstr}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" + body) if sign == "-" else body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def _as_poly(x):
    if isinstance(x, EPolynomial):
        return x
    if isinstance(x, int):
        return EPolynomial.const(x)
    return NotImplemented


class LaurentClass:
    """A class in the localization of Z[u, v] at powers of u*v.

    Stored as numerator / (u*v)^lpow with lpow >= 0, normalized so the
    numerator is not divisible by u*v unless lpow is 0.  The zero class is
    canonically (0, lpow 0).
    """

    __slots__ = ("num", "lpow")

    def __init__(self, num: EPolynomial | int, lpow: int = 0):
        if isinstance(num, int):
            num = EPolynomial.const(num)
        if not isinstance(num, EPolynomial):
            raise TypeError("numerator must be an EPolynomial or int")
        if lpow < 0:
            raise ValueError("lpow must be non-negative")
        if num.is_zero():
            num, lpow = EPolynomial.zero(), 0
        else:
            while lpow > 0 and num.divisible_by_uv():
                num = num.shifted(-1, -1)
                lpow -= 1
        self.num = num
        self.lpow = lpow

    @classmethod
    def zero(cls) -> "LaurentClass":
        return cls(EPolynomial.zero(), 0)

    @classmethod
    def one(cls) -> "LaurentClass":
        return cls(EPolynomial.one(), 0)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def times_lpow(self, k: int) -> "LaurentClass":
        """Multiply by (u*v)^k; negative k divides, with normalization."""
        if k == 0:
            return self
        if k > 0:
            if k >= self.lpow:
                return LaurentClass(self.num.shifted(k - self.lpow, k - self.lpow), 0)
            return LaurentClass(self.num, self.lpow - k)
        return LaurentClass(self.num, self.lpow - k)

    def evaluate(self, u0, v0) -> Fraction:
        val = Fraction(self.num.evaluate(u0, v0))
        if self.lpow:
            scale = u0 * v0
            if scale == 0:
                raise ZeroDivisionError("evaluation at a zero of u*v with lpow > 0")
            val /= Fraction(scale) ** self.lpow
        return val

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self.lpow == other.lpow and self.num == other.num

    def __neg__(self) -> "LaurentClass":
        return LaurentClass(-self.num, self.lpow)

    def __add__(self, other) -> "LaurentClass":
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(self.lpow, other.lpow)
        a = self.num.shifted(n - self.lpow, n - self.lpow)
        b = other.num.shifted(n - other.lpow, n - other.lpow)
        return LaurentClass(a + b, n)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentClass":
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentClass":
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentClass":
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentClass(self.num * other.num, self.lpow + other.lpow)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"LaurentClass({self})"

    def __str__(self) -> str:
        if not self.lpow:
            return str(self.num)
        return f"({self.num}) / (u*v)^{self.lpow}"


def _as_laurent(x):
    if isinstance(x, LaurentClass):
        return x
    if isinstance(x, (EPolynomial, int)):
        return LaurentClass(x, 0)
    return NotImplemented


def laurent_mul_lpow(c: LaurentClass, k: int) -> LaurentClass:
    """c times (u*v)^k, normalized."""
    return c.times_lpow(k)


# ---------------------------------------------------------------------------
# ring helpers

def ring_zero(ring: str):
    if ring == RING_Z:
        return 0
    if ring == RING_Q:
        return Fraction(0)
    if ring == RING_POLY:
        return EPolynomial.zero()
    if ring == RING_LAURENT:
        return LaurentClass.zero()
    raise ValueError(f"unknown ring {ring!r}")


def ring_one(ring: str):
    if ring == RING_Z:
        return 1
    if ring == RING_Q:
        return Fraction(1)
    if ring == RING_POLY:
        return EPolynomial.one()
    if ring == RING_LAURENT:
        return LaurentClass.one()
    raise ValueError(f"unknown ring {ring!r}")


def ring_coerce(ring: str, x):
    if ring == RING_Z:
        if isinstance(x, int):
            return x
        raise TypeError(f"not an integer: {x!r}")
    if ring == RING_Q:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"not a rational: {x!r}")
    if ring == RING_POLY:
        y = _as_poly(x)
        if y is NotImplemented:
            raise TypeError(f"not a polynomial: {x!r}")
        return y
    if ring == RING_LAURENT:
        y = _as_laurent(x)
        if y is NotImplemented:
            raise TypeError(f"not a Laurent class: {x!r}")
        return y
    raise ValueError(f"unknown ring {ring!r}")


def ring_is_unit(ring: str, x) -> bool:
    """Whether x is invertible in the ring."""
    if ring == RING_Z:
        return x in (1, -1)
    if ring == RING_Q:
        return x != 0
    if ring == RING_POLY:
        return x.is_constant() and x.constant_term() in (1, -1)
    if ring == RING_LAURENT:
        # units are +-(u*v)^j for integer j
        d = x.num._d
        if len(d) != 1:
            return False
        ((key, c),) = d.items()
        return c in (1, -1) and (key >> _SHIFT) == (key & _MASK)
    raise ValueError(f"unknown ring {ring!r}")


def ring_unit_inverse(ring: str, x):
    """Inverse of a unit; raises ValueError when x is not a unit."""
    if not ring_is_unit(ring, x):
        raise ValueError(f"not a unit in {ring}: {x!r}")
    if ring == RING_Z:
        return x
    if ring == RING_Q:
        return 1 / x
    if ring == RING_POLY:
        return x  # +-1 is self-inverse
    # +-(u*v)^j inverts to +-(u*v)^(-j)
    ((key, c),) = x.num._d.items()
    j = (key >> _SHIFT) - x.lpow
    return LaurentClass(EPolynomial.const(c), 0).times_lpow(-j)


class SeriesPrefix:
    """Truncated power series: coefficients a_0..a_K over a declared ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: str, coeffs: Iterable):
        if ring not in RINGS:
            raise ValueError(f"unknown ring {ring!r}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "coeffs", tuple(ring_coerce(ring, c) for c in coeffs)
        )
        if not self.coeffs:
            raise ValueError("a series prefix needs at least a_0")

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    def __setattr__(self, name, value):
        raise AttributeError("SeriesPrefix is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesPrefix):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"SeriesPrefix({self.ring}, K={self.K})"


class UniPoly:
    """Dense univariate polynomial over one of the supported rings.

    Trailing zeros are trimmed, so degree is len(coeffs) - 1 and the leading
    coefficient is nonzero unless the polynomial is zero (empty coeffs).
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: str, coeffs: Iterable):
        if ring not in RINGS:
            raise ValueError(f"unknown ring {ring!r}")
        cs = [ring_coerce(ring, c) for c in coeffs]
        zero = ring_zero(ring)
        while cs and cs[-1] == zero:
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ring_zero(self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.ring, [-c for c in self.coeffs])

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly) or other.ring != self.ring:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.ring, [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly) or other.ring != self.ring:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly) or other.ring != self.ring:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly(self.ring, [])
        out = [ring_zero(self.ring)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.ring, out)

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly(self.ring, [ring_one(self.ring)])
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"UniPoly({self.ring}, {list(self.coeffs)!r})"


def series_mul_prefix(g: UniPoly, f: SeriesPrefix) -> tuple:
    """Coefficients of g(t) * f(t) through order K of the prefix."""
    if g.ring != f.ring:
        raise ValueError("ring mismatch")
    out = []
    dg = g.degree
    for k in range(f.K + 1):
        acc = ring_zero(f.ring)
        for j in range(0, min(k, dg) + 1):
            acc = acc + g.coeff(j) * f.coeffs[k - j]
        out.append(acc)
    return tuple(out)


def rational_series_prefix(g: UniPoly, h: UniPoly, K: int) -> SeriesPrefix:
    """Prefix of the series f with g * f = h, requiring g(0) to be a unit."""
    if g.ring != h.ring:
        raise ValueError("ring mismatch")
    ring = g.ring
    g0 = g.coeff(0)
    inv0 = ring_unit_inverse(ring, g0)
    coeffs = []
    dg = g.degree
    for k in range(K + 1):
        acc = h.coeff(k)
        for j in range(1, min(k, dg) + 1):
            acc = acc - g.coeff(j) * coeffs[k - j]
        coeffs.append(acc * inv0)
    return SeriesPrefix(ring, coeffs)


# ---------------------------------------------------------------------------
# determinants

def det_by_expansion(rows: Sequence[Sequence]):
    """Signed permutation-sum determinant over any ring; test oracle for
    small matrices, kept independent of the elimination and grid routes."""
    n = len(rows)
    if n == 0:
        return 1
    total = None
    for perm in itertools.permutations(range(n)):
        prod = rows[0][perm[0]]
        for r in range(1, n):
            prod = prod * rows[r][perm[r]]
        if permutation_sign(perm) < 0:
            prod = -prod
        total = prod if total is None else total + prod
    return total


def det_fraction(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix: rows are scaled to integers and
    the integer result of fraction-free elimination is rescaled."""
    scale = 1
    int_rows = []
    for row in rows:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        int_rows.append([int(x * lcm) for x in row])
        scale *= lcm
    return Fraction(_kernels.bareiss_det(int_rows), scale)


def _grid_coord(j: int) -> int:
    # 0, 1, -1, 2, -2, ...: distinct small integers, deterministic
    if j == 0:
        return 0
    half = (j + 1) // 2
    return half if j % 2 else -half


def interpolate_coeffs(xs: Sequence[int], ys: Sequence) -> list[Fraction]:
    """Monomial coefficients of the unique polynomial of degree < len(xs)
    through the points (xs[i], ys[i]); exact, via Newton divided differences."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        new = [Fraction(0)] * (len(poly) + 1)
        for d_idx, c in enumerate(poly):
            new[d_idx + 1] += c
            new[d_idx] -= c * xs[i]
        new[0] += dd[i]
        poly = new
    return poly


def _poly_det_degree_bounds(entries: Sequence[Sequence[EPolynomial]]) -> tuple[int, int]:
    du = 0
    dv = 0
    for row in entries:
        du += max(e.degree_u() for e in row)
        dv += max(e.degree_v() for e in row)
    return du, dv


def poly_matrix_det(entries: Sequence[Sequence[EPolynomial]]) -> EPolynomial:
    """Exact determinant of a matrix of polynomials by integer-grid evaluation
    and bivariate interpolation with per-matrix degree bounds."""
    s = len(entries)
    if s == 0:
        return EPolynomial.one()
    if any(all(e.is_zero() for e in row) for row in entries):
        return EPolynomial.zero()
    du, dv = _poly_det_degree_bounds(entries)
    us = [_grid_coord(j) for j in range(du + 1)]
    vs = [_grid_coord(j) for j in range(dv + 1)]
    value_grid = []
    for u0 in us:
        row_vals = []
        for v0 in vs:
            mat = [[e.evaluate(u0, v0) for e in row] for row in entries]
            row_vals.append(_kernels.bareiss_det(mat))
        value_grid.append(row_vals)
    # interpolate in v for each u, then in u for each power of v
    per_u = [interpolate_coeffs(vs, value_grid[iu]) for iu in range(len(us))]
    terms: dict[tuple[int, int], int] = {}
    for qv in range(dv + 1):
        coeffs_u = interpolate_coeffs(us, [per_u[iu][qv] for iu in range(len(us))])
        for pu, c in enumerate(coeffs_u):
            if c:
                if c.denominator != 1:
                    raise ArithmeticError("interpolated determinant is not integral")
                terms[(pu, qv)] = int(c)
    return EPolynomial(terms)


def _window_entries(prefix: SeriesPrefix, i: int, s: int) -> list[list]:
    if s < 1:
        raise ValueError("window size must be at least 1")
    if i < 0:
        raise ValueError("offset must be non-negative")
    if i + 2 * (s - 1) > prefix.K:
        raise InsufficientPrefix(
            f"window needs a_{i + 2 * (s - 1)} but the prefix stops at a_{prefix.K}"
        )
    return [[prefix.coeffs[i + r + c] for c in range(s)] for r in range(s)]


def hankel_det(prefix: SeriesPrefix, i: int, s: int):
    """Exact determinant of the s x s window M[r][c] = a_{i+r+c}.

    Integer and rational prefixes go through fraction-free elimination;
    polynomial and Laurent prefixes go through grid evaluation plus
    interpolation.  Requires i + 2(s-1) <= K.
    """
    entries = _window_entries(prefix, i, s)
    if prefix.ring == RING_Z:
        return _kernels.bareiss_det(entries)
    if prefix.ring == RING_Q:
        return det_fraction(entries)
    if prefix.ring == RING_POLY:
        return poly_matrix_det(entries)
    n = max(e.lpow for row in entries for e in row)
    scaled = [
        [e.num.shifted(n - e.lpow, n - e.lpow) for e in row] for row in entries
    ]
    return LaurentClass(poly_matrix_det(scaled), s * n)


class HankelScanner:
    """Shared-cache zero tests for many Hankel windows over one series prefix.

    Construction declares every (window size, offsets) pair that will be
    queried so the evaluation grid and the CRT prime set can be sized once.
    Rows of grid values are cached per (prime, coefficient, u-column) and
    reused across windows.
    """

    def __init__(self, prefix: SeriesPrefix, windows: Sequence[tuple[int, Sequence[int]]]):
        self.prefix = prefix
        self.ring = prefix.ring
        if self.ring == RING_LAURENT:
            n = max((c.lpow for c in prefix.coeffs), default=0)
            self._polys = [c.num.shifted(n - c.lpow, n - c.lpow) for c in prefix.coeffs]
        elif self.ring == RING_POLY:
            self._polys = list(prefix.coeffs)
        else:
            self._polys = None
        if self._polys is None:
            return
        deg_u = [p.degree_u() for p in self._polys]
        deg_v = [p.degree_v() for p in self._polys]
        heights = [p.height() for p in self._polys]
        counts = [p.term_count() for p in self._polys]
        max_du = 0
        max_dv = 0
        max_bound = 0
        for s, offsets in windows:
            for i in offsets:
                if i + 2 * (s - 1) > prefix.K:
                    raise InsufficientPrefix(
                        f"window needs a_{i + 2 * (s - 1)} but the prefix stops at a_{prefix.K}"
                    )
                du, dv, bound = self._window_bounds(
                    i, s, deg_u, deg_v, heights, counts
                )
                max_du = max(max_du, du)
                max_dv = max(max_dv, dv)
                max_bound = max(max_bound, bound)
        self._deg_u = deg_u
        self._deg_v = deg_v
        self._heights = heights
        self._counts = counts
        self._us = [_grid_coord(j) for j in range(max_du + 1)]
        self._vs = [_grid_coord(j) for j in range(max_dv + 1)]
        self._primes = self._select_primes(max_bound)
        self._reduced: dict[tuple[int, int], list] = {}
        self._rows: dict[tuple[int, int, int], object] = {}

    @staticmethod
    def _window_bounds(i, s, deg_u, deg_v, heights, counts):
        du = 0
        dv = 0
        bound_h = 1
        bound_t = 1
        for r in range(s):
            ks = range(i + r, i + r + s)
            du += max(deg_u[k] for k in ks)
            dv += max(deg_v[k] for k in ks)
            bound_h *= max(heights[k] for k in ks)
            if r:
                bound_t *= max(counts[k] for k in ks)
        bound = math.factorial(s) * bound_h * bound_t
        return du, dv, bound

    @staticmethod
    def _select_primes(bound: int) -> list[int] | None:
        # Enough pool primes that their product exceeds 2 * bound; None means
        # the pool cannot certify vanishing and exact values must be used.
        need = 2 * bound
        taken = []
        prod = 1
        for p in PRIME_POOL:
            if prod > need:
                return taken
            taken.append(p)
            prod *= p
        return taken if prod > need else None

    def _reduced_terms(self, prime_idx: int, k: int) -> list:
        key = (prime_idx, k)
        cached = self._reduced.get(key)
        if cached is None:
            p = PRIME_POOL[prime_idx]
            cached = [(pu, qv, c % p) for pu, qv, c in self._polys[k].terms()]
            self._reduced[key] = cached
        return cached

    def _row(self, prime_idx: int, k: int, iu: int):
        key = (prime_idx, k, iu)
        row = self._rows.get(key)
        if row is None:
            row = _kernels.eval_poly_row_mod(
                self._reduced_terms(prime_idx, k),
                self._us[iu],
                self._vs,
                PRIME_POOL[prime_idx],
            )
            self._rows[key] = row
        return row

    def vanishes(self, i: int, s: int) -> bool:
        """Exact zero test for the window at offset i of size s."""
        if self._polys is None:
            return self._dense_det(i, s) == ring_zero(self.ring)
        if s == 1:
            return self._polys[i].is_zero()
        du, dv, bound = self._window_bounds(
            i, s, self._deg_u, self._deg_v, self._heights, self._counts
        )
        if bound == 0:
            return True  # some row is identically zero
        primes = self._select_primes(bound)
        if primes is None or self._primes is None:
            return hankel_det(self.prefix, i, s) == ring_zero(self.ring)
        ks = range(i, i + 2 * s - 1)
        for prime_idx in range(len(primes)):
            prime = PRIME_POOL[prime_idx]
            for iu in range(du + 1):
                rows = [self._row(prime_idx, k, iu) for k in ks]
                hit = _kernels.hankel_dets_row_mod(rows, dv + 1, s, prime)
                if hit >= 0:
                    return False
        return True

    def _dense_det(self, i, s):
        entries = _window_entries(self.prefix, i, s)
        if self.ring == RING_Z:
            return _kernels.bareiss_det(entries)
        return det_fraction(entries)

    def det(self, i: int, s: int):
        """Exact determinant value (delegates to hankel_det)."""
        return hankel_det(self.prefix, i, s)


# ---------------------------------------------------------------------------
# JSON forms; every big integer travels as a decimal string

def poly_to_json(pol: EPolynomial) -> dict:
    return {
        "terms": [
            {"c": str(c), "u": p, "v": q} for p, q, c in pol.terms()
        ]
    }


def poly_from_json(obj) -> EPolynomial:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ValueError("polynomial JSON must be an object with a 'terms' list")
    terms: dict[tuple[int, int], int] = {}
    for t in obj["terms"]:
        p, q, c = t["u"], t["v"], int(t["c"])
        if not isinstance(p, int) or not isinstance(q, int):
            raise ValueError("polynomial exponents must be integers")
        terms[(p, q)] = terms.get((p, q), 0) + c
    return EPolynomial(terms)


def coeff_to_json(ring: str, x):
    if ring == RING_Z:
        return str(x)
    if ring == RING_Q:
        return str(Fraction(x))
    if ring == RING_POLY:
        return poly_to_json(x)
    return {"lpow": x.lpow, "num": poly_to_json(x.num)}


def coeff_from_json(ring: str, obj):
    if ring == RING_Z:
        return int(obj)
    if ring == RING_Q:
        return Fraction(obj)
    if ring == RING_POLY:
        return poly_from_json(obj)
    if not isinstance(obj, dict) or "num" not in obj or "lpow" not in obj:
        raise ValueError("Laurent JSON must carry 'num' and 'lpow'")
    return LaurentClass(poly_from_json(obj["num"]), int(obj["lpow"]))


def series_to_json(f: SeriesPrefix) -> dict:
    return {
        "coeffs": [coeff_to_json(f.ring, c) for c in f.coeffs],
        "ring": f.ring,
    }


def series_from_json(obj) -> SeriesPrefix:
    if not isinstance(obj, dict) or "ring" not in obj or "coeffs" not in obj:
        raise ValueError("series JSON must carry 'ring' and 'coeffs'")
    ring = obj["ring"]
    if ring not in RINGS:
        raise ValueError(f"unknown ring {ring!r}")
    return SeriesPrefix(ring, [coeff_from_json(ring, c) for c in obj["coeffs"]])

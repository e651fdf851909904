"""Hodge diamonds as formal variety classes.

A diamond here is an input datum, not a certificate that a variety with those
Hodge numbers exists; the downstream machinery is ring-theoretic and only
consumes the numbers.  Characteristic zero conventions throughout.  Only
smooth projective classes are modeled; open varieties enter downstream through
the realization where the Lefschetz class becomes u*v.
"""
from __future__ import annotations

import random
from typing import Iterable, Sequence

from mzl.algebra import EPolynomial


class InvalidParams(ValueError):
    """Constructor parameters outside their allowed range."""


class InvalidDiamond(ValueError):
    """A Hodge grid violating connectedness, conjugation symmetry, or Serre duality."""


class HodgeDiamond:
    """Immutable (d+1) x (d+1) grid of Hodge numbers h[p][q]."""

    __slots__ = ("dim", "h")

    def __init__(self, dim: int, h: Sequence[Sequence[int]]):
        if not isinstance(dim, int) or dim < 0:
            raise InvalidParams(f"dimension must be a non-negative integer, got {dim!r}")
        grid = tuple(tuple(row) for row in h)
        if len(grid) != dim + 1 or any(len(row) != dim + 1 for row in grid):
            raise InvalidDiamond(
                f"grid must be ({dim + 1})x({dim + 1}) for dimension {dim}"
            )
        for p in range(dim + 1):
            for q in range(dim + 1):
                v = grid[p][q]
                if not isinstance(v, int) or v < 0:
                    raise InvalidDiamond(
                        f"Hodge numbers must be non-negative integers, got h[{p}][{q}] = {v!r}"
                    )
        if grid[0][0] != 1:
            raise InvalidDiamond(
                f"connectedness violated: h[0][0] = {grid[0][0]}, expected 1"
            )
        for p in range(dim + 1):
            for q in range(p + 1, dim + 1):
                if grid[p][q] != grid[q][p]:
                    raise InvalidDiamond(
                        f"conjugation symmetry violated: h[{p}][{q}] = {grid[p][q]} "
                        f"but h[{q}][{p}] = {grid[q][p]}"
                    )
        for p in range(dim + 1):
            for q in range(dim + 1):
                if grid[p][q] != grid[dim - p][dim - q]:
                    raise InvalidDiamond(
                        f"Serre duality violated: h[{p}][{q}] = {grid[p][q]} "
                        f"but h[{dim - p}][{dim - q}] = {grid[dim - p][dim - q]}"
                    )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "h", grid)

    def __setattr__(self, name, value):
        raise AttributeError("HodgeDiamond is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self.dim == other.dim and self.h == other.h

    def __hash__(self) -> int:
        return hash((self.dim, self.h))

    def __repr__(self) -> str:
        return f"HodgeDiamond(dim={self.dim}, h={[list(r) for r in self.h]})"


class GenusPolynomial:
    """Coefficients c_0..c_d with c_i = h^{i,0}; the top one is the geometric genus."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(coeffs)
        if not cs or cs[0] != 1:
            raise ValueError("genus polynomial must have constant coefficient 1")
        if any(not isinstance(c, int) or c < 0 for c in cs):
            raise ValueError("genus polynomial coefficients must be non-negative integers")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("GenusPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def geometric_genus(self) -> int:
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        # polynomial equality: trailing zeros do not distinguish
        if not isinstance(other, GenusPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return all(
            (a[k] if k < len(a) else 0) == (b[k] if k < len(b) else 0)
            for k in range(n)
        )

    def __mul__(self, other: "GenusPolynomial") -> "GenusPolynomial":
        if not isinstance(other, GenusPolynomial):
            return NotImplemented
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return GenusPolynomial(out)

    def __repr__(self) -> str:
        return f"GenusPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and k > 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("s" if c == 1 else f"{c}*s")
            else:
                parts.append(f"s^{k}" if c == 1 else f"{c}*s^{k}")
        return " + ".join(parts)


def point() -> HodgeDiamond:
    return HodgeDiamond(0, [[1]])


def projective_space(n: int) -> HodgeDiamond:
    if n < 0:
        raise InvalidParams(f"projective space dimension must be >= 0, got {n}")
    return HodgeDiamond(
        n, [[1 if p == q else 0 for q in range(n + 1)] for p in range(n + 1)]
    )


def curve(g: int) -> HodgeDiamond:
    if g < 0:
        raise InvalidParams(f"genus must be >= 0, got {g}")
    return HodgeDiamond(1, [[1, g], [g, 1]])


def surface(q: int, p_g: int, h11: int) -> HodgeDiamond:
    if q < 0 or p_g < 0 or h11 < 0:
        raise InvalidParams(
            f"surface Hodge numbers must be >= 0, got q={q}, p_g={p_g}, h11={h11}"
        )
    return HodgeDiamond(
        2,
        [
            [1, q, p_g],
            [q, h11, q],
            [p_g, q, 1],
        ],
    )


_STANDARD_KINDS = {
    "point": (point, 0),
    "projective_space": (projective_space, 1),
    "curve": (curve, 1),
    "surface": (surface, 3),
}


def make_standard(kind: str, *params: int) -> HodgeDiamond:
    """Named constructors: point, projective_space(n), curve(g), surface(q, p_g, h11)."""
    entry = _STANDARD_KINDS.get(kind)
    if entry is None:
        raise InvalidParams(
            f"unknown kind {kind!r}; expected one of {sorted(_STANDARD_KINDS)}"
        )
    fn, arity = entry
    if len(params) != arity:
        raise InvalidParams(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def diamond_product(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Hodge numbers of a product, by the Kunneth splitting of (p, q)."""
    d = a.dim + b.dim
    grid = [[0] * (d + 1) for _ in range(d + 1)]
    for p1 in range(a.dim + 1):
        for q1 in range(a.dim + 1):
            c1 = a.h[p1][q1]
            if not c1:
                continue
            for p2 in range(b.dim + 1):
                for q2 in range(b.dim + 1):
                    c2 = b.h[p2][q2]
                    if c2:
                        grid[p1 + p2][q1 + q2] += c1 * c2
    return HodgeDiamond(d, grid)


def e_polynomial(x: HodgeDiamond) -> EPolynomial:
    """Realization sending the class to sum of (-1)^(p+q) h^{p,q} u^p v^q."""
    terms = {}
    for p in range(x.dim + 1):
        for q in range(x.dim + 1):
            c = x.h[p][q]
            if c:
                terms[(p, q)] = -c if (p + q) % 2 else c
    return EPolynomial(terms)


def genus_polynomial(x: HodgeDiamond) -> GenusPolynomial:
    """Column q = 0 of the diamond, as coefficients in s."""
    return GenusPolynomial([x.h[i][0] for i in range(x.dim + 1)])


def stable_invariance_check(x: HodgeDiamond, n: int) -> bool:
    """Whether multiplying by projective n-space leaves the genus polynomial
    unchanged (it always does; exposed as a checkable claim)."""
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    return genus_polynomial(diamond_product(x, projective_space(n))) == genus_polynomial(x)


def random_diamond(rng: random.Random, max_dim: int = 3, max_h: int = 9) -> HodgeDiamond:
    """Random valid diamond: one value per orbit of the symmetries."""
    d = rng.randint(0, max_dim)
    grid = [[-1] * (d + 1) for _ in range(d + 1)]
    for p in range(d + 1):
        for q in range(d + 1):
            if grid[p][q] >= 0:
                continue
            v = 1 if (p, q) in ((0, 0), (d, d)) else rng.randint(0, max_h)
            for pp, qq in ((p, q), (q, p), (d - p, d - q), (d - q, d - p)):
                grid[pp][qq] = v
    return HodgeDiamond(d, grid)


def diamond_to_json(x: HodgeDiamond) -> dict:
    return {"dim": x.dim, "hpq": [list(row) for row in x.h]}


def diamond_from_json(obj) -> HodgeDiamond:
    if not isinstance(obj, dict) or "dim" not in obj or "hpq" not in obj:
        raise InvalidDiamond("diamond JSON must carry 'dim' and 'hpq'")
    return HodgeDiamond(obj["dim"], obj["hpq"])

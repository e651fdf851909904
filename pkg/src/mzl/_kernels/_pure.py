"""Pure-Python kernels for the hot inner loops.

The compiled twin (_core.pyx) implements the same five functions with the same
contracts; mzl._kernels picks one at import time.  Everything is exact integer
arithmetic.

Sparse polynomials in u, v are plain dicts with packed integer keys
key = (p << 32) | q and nonzero integer values.  Packing keeps dict hashing
cheap and lets a monomial shift become a single integer addition.
"""
from __future__ import annotations

from array import array


def bareiss_det(rows):
    # Fraction-free elimination; every // is an exact division.
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def poly_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def poly_addmul_shifted(acc, src, dkey, c):
    # acc += c * u^dp v^dq * src, in place; dkey is the packed shift.
    if not c:
        return
    get = acc.get
    for k, v in src.items():
        kk = k + dkey
        nv = get(kk, 0) + c * v
        if nv:
            acc[kk] = nv
        elif kk in acc:
            del acc[kk]


def eval_poly_row_mod(terms, u0, vs, p):
    # terms: list of (pu, qv, c) with 0 <= c < p.  Returns array('Q') of
    # values at (u0, v) for v in vs, all reduced mod p.
    du = 0
    dv = 0
    for pu, qv, _ in terms:
        if pu > du:
            du = pu
        if qv > dv:
            dv = qv
    u0 %= p
    upow = [1] * (du + 1)
    acc = 1
    for i in range(1, du + 1):
        acc = acc * u0 % p
        upow[i] = acc
    part = [0] * (dv + 1)
    for pu, qv, c in terms:
        part[qv] = (part[qv] + c * upow[pu]) % p
    out = array("Q", bytes(8 * len(vs)))
    for i, v in enumerate(vs):
        v %= p
        val = 0
        for q in range(dv, -1, -1):
            val = (val * v + part[q]) % p
        out[i] = val
    return out


def _det2(a, b, c, d, p):
    return (a * d - b * c) % p


def hankel_dets_row_mod(rows, nv, s, p):
    # rows[j][iv] = a_{i+j} evaluated at grid column iv, j = 0..2s-2.
    # Returns the first iv in [0, nv) where the s x s Hankel determinant
    # M[r][c] = rows[r+c][iv] is nonzero mod p, or -1 if all vanish.
    if s == 1:
        r0 = rows[0]
        for iv in range(nv):
            if r0[iv] % p:
                return iv
        return -1
    if s == 2:
        r0, r1, r2 = rows[0], rows[1], rows[2]
        for iv in range(nv):
            if (r0[iv] * r2[iv] - r1[iv] * r1[iv]) % p:
                return iv
        return -1
    if s == 3:
        r0, r1, r2, r3, r4 = rows
        for iv in range(nv):
            a, b, c = r0[iv], r1[iv], r2[iv]
            d, e, f = r1[iv], r2[iv], r3[iv]
            g, h, i = r2[iv], r3[iv], r4[iv]
            det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
            if det % p:
                return iv
        return -1
    for iv in range(nv):
        m = [[rows[r + c][iv] for c in range(s)] for r in range(s)]
        if _rank_full_mod(m, s, p):
            return iv
    return -1


def _rank_full_mod(m, s, p):
    # True iff det(m) is nonzero mod p.  Division-free: rows are eliminated by
    # cross-multiplication, which scales the determinant by nonzero pivots and
    # so never changes whether it vanishes.
    for k in range(s):
        piv_row = -1
        for r in range(k, s):
            if m[r][k] % p:
                piv_row = r
                break
        if piv_row < 0:
            return False
        if piv_row != k:
            m[k], m[piv_row] = m[piv_row], m[k]
        piv = m[k][k]
        row_k = m[k]
        for r in range(k + 1, s):
            lead = m[r][k]
            if lead % p:
                row_r = m[r]
                for c in range(k + 1, s):
                    row_r[c] = (row_r[c] * piv - lead * row_k[c]) % p
                row_r[k] = 0
    return True

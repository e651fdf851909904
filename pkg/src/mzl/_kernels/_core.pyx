# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see _pure.py for the reference semantics."""

from array import array

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64


def bareiss_det(rows):
    # Object arithmetic (entries are arbitrary-precision ints); the win over
    # the pure twin is loop dispatch only.
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, r
    cdef int sign = 1
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
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
    if sign > 0:
        return m[n - 1][n - 1]
    return -m[n - 1][n - 1]


def poly_mul(dict a, dict b):
    cdef dict out = {}
    if len(a) > len(b):
        a, b = b, a
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = k1 + k2
            prev = out.get(k)
            if prev is None:
                out[k] = c1 * c2
            else:
                out[k] = prev + c1 * c2
    return {k: c for k, c in out.items() if c}


def poly_addmul_shifted(dict acc, dict src, dkey, c):
    if not c:
        return
    for k, v in src.items():
        kk = k + dkey
        prev = acc.get(kk)
        if prev is None:
            nv = c * v
        else:
            nv = prev + c * v
        if nv:
            acc[kk] = nv
        elif prev is not None:
            del acc[kk]


cdef inline u64 _mulmod(u64 a, u64 b, u64 p):
    return <u64> ((<u128> a * b) % p)


def eval_poly_row_mod(list terms, object u0, list vs, object p):
    cdef u64 pp = <u64> p
    cdef Py_ssize_t nterms = len(terms)
    cdef Py_ssize_t nv = len(vs)
    cdef Py_ssize_t i, t
    cdef long du = 0, dv = 0, pu, qv, q
    cdef u64 *upow = NULL
    cdef u64 *part = NULL
    cdef u64 *vred = NULL
    cdef u64 ur, cc, val, v0
    cdef u64[::1] mv
    for t in range(nterms):
        tup = terms[t]
        pu = tup[0]
        qv = tup[1]
        if pu > du:
            du = pu
        if qv > dv:
            dv = qv
    upow = <u64 *> malloc((du + 1) * sizeof(u64))
    part = <u64 *> malloc((dv + 1) * sizeof(u64))
    vred = <u64 *> malloc((nv if nv else 1) * sizeof(u64))
    if upow == NULL or part == NULL or vred == NULL:
        free(upow); free(part); free(vred)
        raise MemoryError()
    try:
        ur = <u64> (u0 % p)
        upow[0] = 1
        for i in range(1, du + 1):
            upow[i] = _mulmod(upow[i - 1], ur, pp)
        for i in range(dv + 1):
            part[i] = 0
        for t in range(nterms):
            tup = terms[t]
            pu = tup[0]
            qv = tup[1]
            cc = <u64> tup[2]
            part[qv] = (part[qv] + _mulmod(cc, upow[pu], pp)) % pp
        for i in range(nv):
            vred[i] = <u64> (vs[i] % p)
        out = array("Q", bytes(8 * nv))
        if nv:
            mv = out
            for i in range(nv):
                v0 = vred[i]
                val = 0
                for q in range(dv, -1, -1):
                    val = (_mulmod(val, v0, pp) + part[q]) % pp
                mv[i] = val
        return out
    finally:
        free(upow)
        free(part)
        free(vred)


def hankel_dets_row_mod(list rows, Py_ssize_t nv, Py_ssize_t s, object p):
    cdef u64 pp = <u64> p
    cdef Py_ssize_t nrows = 2 * s - 1
    cdef Py_ssize_t iv, r, c, k, piv_row
    cdef u64 *buf = NULL
    cdef u64 *m = NULL
    cdef u64[::1] src
    cdef u64 a, b, piv, lead, t
    cdef bint ok
    if nv <= 0:
        return -1
    buf = <u64 *> malloc(nrows * nv * sizeof(u64))
    m = <u64 *> malloc(s * s * sizeof(u64))
    if buf == NULL or m == NULL:
        free(buf); free(m)
        raise MemoryError()
    try:
        for r in range(nrows):
            src = rows[r]
            memcpy(buf + r * nv, &src[0], nv * sizeof(u64))
        if s == 1:
            for iv in range(nv):
                if buf[iv] % pp:
                    return iv
            return -1
        if s == 2:
            for iv in range(nv):
                a = _mulmod(buf[iv], buf[2 * nv + iv], pp)
                b = _mulmod(buf[nv + iv], buf[nv + iv], pp)
                if a != b:
                    return iv
            return -1
        for iv in range(nv):
            for r in range(s):
                for c in range(s):
                    m[r * s + c] = buf[(r + c) * nv + iv]
            # division-free elimination: nonzero verdict only
            ok = True
            for k in range(s):
                piv_row = -1
                for r in range(k, s):
                    if m[r * s + k] % pp:
                        piv_row = r
                        break
                if piv_row < 0:
                    ok = False
                    break
                if piv_row != k:
                    for c in range(k, s):
                        t = m[k * s + c]
                        m[k * s + c] = m[piv_row * s + c]
                        m[piv_row * s + c] = t
                piv = m[k * s + k]
                for r in range(k + 1, s):
                    lead = m[r * s + k] % pp
                    if lead:
                        for c in range(k + 1, s):
                            a = _mulmod(m[r * s + c], piv, pp)
                            b = _mulmod(lead, m[k * s + c], pp)
                            m[r * s + c] = (a + pp - b) % pp
                        m[r * s + k] = 0
            if ok:
                return iv
        return -1
    finally:
        free(buf)
        free(m)

# cython: language_level=3
"""Compiled twins of the enumeration kernels in ``_kernels_pure``.

Semantics (including which violation is reported first) match the pure
module exactly; only the inner loops differ.
"""

import numpy as np

cimport cython
cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

ctypedef cnp.int32_t I32
ctypedef cnp.int64_t I64


def first_illtyped(src, tgt, comp):
    cdef I32[::1] s = np.ascontiguousarray(src, dtype=np.int32)
    cdef I32[::1] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t g, f
    cdef I32 v
    for g in range(n):
        for f in range(n):
            v = c[g, f]
            if t[f] == s[g]:
                if v < 0 or v >= n or s[v] != s[f] or t[v] != t[g]:
                    return int(g), int(f)
            elif v >= 0:
                return int(g), int(f)
    return None


def first_unit_violation(src, tgt, comp, ident):
    cdef I32[::1] s = np.ascontiguousarray(src, dtype=np.int32)
    cdef I32[::1] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef I32[::1] ids = np.ascontiguousarray(ident, dtype=np.int32)
    cdef Py_ssize_t n_obj = ids.shape[0]
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t x, f
    cdef I32 e
    for x in range(n_obj):
        e = ids[x]
        if s[e] != x or t[e] != x:
            return int(x), int(e)
        for f in range(n):
            if s[f] == x and c[f, e] != f:
                return int(x), int(f)
        for f in range(n):
            if t[f] == x and c[e, f] != f:
                return int(x), int(f)
    return None


def first_assoc_violation(src, tgt, comp):
    cdef I32[::1] s = np.ascontiguousarray(src, dtype=np.int32)
    cdef I32[::1] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t f, g, e
    cdef I32 gf, fe
    for f in range(n):
        for g in range(n):
            if s[g] != t[f]:
                continue
            gf = c[g, f]
            for e in range(n):
                if t[e] != s[f]:
                    continue
                if c[gf, e] != c[g, c[f, e]]:
                    return int(g), int(f), int(e)
    return None


def closure_violation(src, tgt, comp, members):
    cdef I32[::1] s = np.ascontiguousarray(src, dtype=np.int32)
    cdef I32[::1] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef cnp.uint8_t[::1] m = np.ascontiguousarray(members, dtype=np.uint8)
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t f, g
    for f in range(n):
        if not m[f]:
            continue
        for g in range(n):
            if m[g] and s[g] == t[f] and not m[c[g, f]]:
                return int(g), int(f)
    return None


def invertibles(src, tgt, comp, ident):
    cdef I32[::1] s = np.ascontiguousarray(src, dtype=np.int32)
    cdef I32[::1] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef I32[::1] ids = np.ascontiguousarray(ident, dtype=np.int32)
    cdef Py_ssize_t n = s.shape[0]
    out_np = np.zeros(n, dtype=bool)
    inv_np = np.full(n, -1, dtype=np.int64)
    cdef cnp.uint8_t[::1] out = out_np.view(np.uint8)
    cdef I64[::1] inv = inv_np
    cdef Py_ssize_t f, g
    for f in range(n):
        for g in range(n):
            if s[g] == t[f] and t[g] == s[f]:
                if c[g, f] == ids[s[f]] and c[f, g] == ids[t[f]]:
                    out[f] = 1
                    inv[f] = g
                    break
    return out_np, inv_np


def compat_pairs(comp, prev, nxt, x_step, y_step):
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef I64[::1] p = np.ascontiguousarray(prev, dtype=np.int64)
    cdef I64[::1] q = np.ascontiguousarray(nxt, dtype=np.int64)
    cdef long xs = x_step, ys = y_step
    cdef Py_ssize_t np_ = p.shape[0], nq = q.shape[0]
    cdef list ii = [], jj = []
    cdef Py_ssize_t i, j
    cdef I32 left
    for i in range(np_):
        left = c[ys, p[i]]
        for j in range(nq):
            if c[q[j], xs] == left:
                ii.append(i)
                jj.append(j)
    return np.asarray(ii, dtype=np.int64), np.asarray(jj, dtype=np.int64)


@cython.boundscheck(False)
cdef Py_ssize_t _bucket_count(I32[:, ::1] c, I64[::1] homY, I64[::1] homZ,
                              long f, long g, I32[::1] scratch) except -1:
    # scratch: per-morphism counters, zeroed on entry and re-zeroed on exit
    cdef Py_ssize_t i, total = 0
    for i in range(homY.shape[0]):
        scratch[c[homY[i], f]] += 1
    for i in range(homZ.shape[0]):
        total += scratch[c[homZ[i], g]]
    for i in range(homY.shape[0]):
        scratch[c[homY[i], f]] = 0
    return total


def bucket_cocone_count(comp, homY, homZ, f, g):
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef I64[::1] hy = np.ascontiguousarray(homY, dtype=np.int64)
    cdef I64[::1] hz = np.ascontiguousarray(homZ, dtype=np.int64)
    scratch_np = np.zeros(c.shape[0], dtype=np.int32)
    cdef I32[::1] scratch = scratch_np
    return int(_bucket_count(c, hy, hz, f, g, scratch))


def bucket_cocones(comp, homY, homZ, f, g):
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef I64[::1] hy = np.ascontiguousarray(homY, dtype=np.int64)
    cdef I64[::1] hz = np.ascontiguousarray(homZ, dtype=np.int64)
    cdef list us = [], vs = []
    cdef Py_ssize_t i, j
    cdef I32 key
    for i in range(hy.shape[0]):
        key = c[hy[i], f]
        for j in range(hz.shape[0]):
            if c[hz[j], g] == key:
                us.append(hy[i])
                vs.append(hz[j])
    return np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)


def pair_distinct_count(comp, homW, u0, v0, n_mor):
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef I64[::1] h = np.ascontiguousarray(homW, dtype=np.int64)
    cdef long u = u0, v = v0
    cdef Py_ssize_t n = h.shape[0]
    enc_np = np.empty(n, dtype=np.int64)
    cdef I64[::1] enc = enc_np
    cdef Py_ssize_t i
    cdef I64 m = n_mor
    for i in range(n):
        enc[i] = c[h[i], u] * m + c[h[i], v]
    return int(np.unique(enc_np).size)


def solve_mediator(comp, homW, u0, v0, u1, v1):
    cdef I32[:, ::1] c = np.ascontiguousarray(comp, dtype=np.int32)
    cdef I64[::1] h = np.ascontiguousarray(homW, dtype=np.int64)
    cdef long a = u0, b = v0, x = u1, y = v1
    cdef Py_ssize_t i
    cdef long found = -1
    for i in range(h.shape[0]):
        if c[h[i], a] == x and c[h[i], b] == y:
            if found >= 0:
                return -2
            found = h[i]
    return int(found)


def hom_bijection_check(comp, homA, fmap):
    imgs = np.asarray(fmap)[np.asarray(homA)]
    return int(np.unique(imgs).size) == len(homA)

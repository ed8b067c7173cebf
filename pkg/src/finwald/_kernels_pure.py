"""Pure-Python (numpy) implementations of the hot enumeration kernels.

The compiled module ``finwald._kernels_fast`` exposes the same functions
with identical semantics, including the order in which first violations
are reported: outer loop ascending over ``f``, then ``g``, then ``e``.
All composition tables are dense ``int32`` arrays with ``-1`` marking
undefined entries.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def _by_src(src, n_obj):
    order = np.argsort(src, kind="stable")
    return order.astype(np.int64), np.searchsorted(src[order], np.arange(n_obj + 1))


def first_illtyped(src, tgt, comp):
    """First (g, f) whose comp entry is defined on a non-composable pair,
    undefined on a composable one, or typed wrong. None when clean."""
    n = comp.shape[0]
    for g in range(n):
        row = comp[g]
        composable = tgt == src[g]
        defined = row >= 0
        bad = composable != defined
        if not bad.any():
            ok = defined
            if ok.any():
                c = row[ok]
                f_idx = np.nonzero(ok)[0]
                mistyped = (src[c] != src[f_idx]) | (tgt[c] != tgt[g]) | (c >= n)
                if mistyped.any():
                    f = int(f_idx[np.argmax(mistyped)])
                    return g, f
            continue
        return g, int(np.argmax(bad))
    return None


def first_unit_violation(src, tgt, comp, ident):
    """First (x, f) where ident[x] fails to act as a unit against f."""
    n_obj = len(ident)
    for x in range(n_obj):
        e = ident[x]
        if src[e] != x or tgt[e] != x:
            return x, int(e)
        outgoing = np.nonzero(src == x)[0]
        if outgoing.size:
            bad = comp[outgoing, e] != outgoing
            if bad.any():
                return x, int(outgoing[np.argmax(bad)])
        incoming = np.nonzero(tgt == x)[0]
        if incoming.size:
            bad = comp[e, incoming] != incoming
            if bad.any():
                return x, int(incoming[np.argmax(bad)])
    return None


def first_assoc_violation(src, tgt, comp):
    """First (g, f, e) with (g.f).e != g.(f.e); iteration order f, g, e."""
    n = comp.shape[0]
    for f in range(n):
        G = np.nonzero(src == tgt[f])[0]
        E = np.nonzero(tgt == src[f])[0]
        if not G.size or not E.size:
            continue
        gf = comp[G, f]
        fe = comp[f, E]
        lhs = comp[gf[:, None], E[None, :]]
        rhs = comp[G[:, None], fe[None, :]]
        if lhs.shape != rhs.shape or (lhs != rhs).any():
            bad = np.argwhere(lhs != rhs)
            gi, ei = bad[0]
            return int(G[gi]), f, int(E[ei])
    return None


def closure_violation(src, tgt, comp, members):
    """First composable (g, f), both in ``members``, whose composite is not."""
    idx = np.nonzero(members)[0]
    for f in idx:
        G = idx[src[idx] == tgt[f]]
        if not G.size:
            continue
        c = comp[G, f]
        bad = ~members[c]
        if bad.any():
            return int(G[np.argmax(bad)]), int(f)
    return None


def invertibles(src, tgt, comp, ident):
    """Boolean mask of two-sided invertible morphisms plus the inverse index
    (-1 where not invertible)."""
    n = comp.shape[0]
    inv = np.full(n, -1, dtype=np.int64)
    out = np.zeros(n, dtype=bool)
    for f in range(n):
        cands = np.nonzero((src == tgt[f]) & (tgt == src[f]))[0]
        if not cands.size:
            continue
        good = (comp[cands, f] == ident[src[f]]) & (comp[f, cands] == ident[tgt[f]])
        if good.any():
            out[f] = True
            inv[f] = int(cands[np.argmax(good)])
    return out, inv


def compat_pairs(comp, prev, nxt, x_step, y_step):
    """Index pairs (i, j) with nxt[j] . x_step == y_step . prev[i].

    Used when extending a natural transformation one level at a time.
    Returned in lexicographic (i, j) order.
    """
    left = comp[y_step, prev]
    right = comp[nxt, x_step]
    eq = left[:, None] == right[None, :]
    pairs = np.argwhere(eq)
    return pairs[:, 0].astype(np.int64), pairs[:, 1].astype(np.int64)


def bucket_cocone_count(comp, homY, homZ, f, g):
    """Number of cocones (u, v) at a fixed vertex: u.f == v.g."""
    rf = comp[homY, f]
    rg = comp[homZ, g]
    keys, counts_f = np.unique(rf, return_counts=True)
    keys_g, counts_g = np.unique(rg, return_counts=True)
    common, ia, ib = np.intersect1d(keys, keys_g, return_indices=True)
    return int(np.sum(counts_f[ia] * counts_g[ib]))


def bucket_cocones(comp, homY, homZ, f, g):
    """All cocones (u, v) at a fixed vertex, ordered by (u, v) index."""
    rf = comp[homY, f]
    rg = comp[homZ, g]
    eq = rf[:, None] == rg[None, :]
    pairs = np.argwhere(eq)
    return homY[pairs[:, 0]], homZ[pairs[:, 1]]


def pair_distinct_count(comp, homW, u0, v0, n_mor):
    """Distinct pairs (w.u0, w.v0) over w in homW."""
    cu = comp[homW, u0].astype(np.int64)
    cv = comp[homW, v0].astype(np.int64)
    return int(np.unique(cu * n_mor + cv).size)


def solve_mediator(comp, homW, u0, v0, u1, v1):
    """Unique w with w.u0 == u1 and w.v0 == v1; -1 if none, -2 if several."""
    hits = homW[(comp[homW, u0] == u1) & (comp[homW, v0] == v1)]
    if hits.size == 0:
        return -1
    if hits.size > 1:
        return -2
    return int(hits[0])


def hom_bijection_check(comp, homA, fmap):
    """Whether fmap restricted to homA is injective (hom-block bijectivity
    is then a cardinality comparison done by the caller)."""
    imgs = fmap[homA]
    return int(np.unique(imgs).size) == len(homA)

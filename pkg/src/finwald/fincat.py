"""Exact finite categories: validated composition tables, functors, natural
transformations, and colimit search by enumeration.

A category is stored as flat index sets with a dense composition table
(``comp[g, f]`` is g after f, ``-1`` where not composable).  Dense tables
make the exhaustive axiom checks and pushout searches O(1) per lookup;
categories too large for a dense table carry a vectorized composer
callback instead and are excluded from the search-based operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from . import errors

# Largest morphism count for which a dense n x n table is built.
DENSE_LIMIT = 9000


class FinCat:
    """A finite category over index sets, immutable after validation."""

    def __init__(self, n_obj, src, tgt, ident, comp=None, *, composer=None,
                 obj_labels=None, mor_labels=None, obj_data=None, mor_data=None):
        self.n_obj = int(n_obj)
        self.src = np.asarray(src, dtype=np.int32)
        self.tgt = np.asarray(tgt, dtype=np.int32)
        self.ident = np.asarray(ident, dtype=np.int32)
        self.n_mor = len(self.src)
        self.comp = None if comp is None else np.asarray(comp, dtype=np.int32)
        self._composer = composer
        self.obj_labels = obj_labels if obj_labels is not None else [str(i) for i in range(n_obj)]
        self.mor_labels = mor_labels if mor_labels is not None else [f"m{i}" for i in range(self.n_mor)]
        self.obj_data = obj_data
        self.mor_data = mor_data
        self._hom = None
        self._iso_cache = None

    # -- structure access ---------------------------------------------------

    @property
    def is_dense(self):
        return self.comp is not None

    def _hom_table(self):
        if self._hom is None:
            table = [[None] * self.n_obj for _ in range(self.n_obj)]
            order = np.lexsort((np.arange(self.n_mor), self.tgt, self.src))
            s, t = self.src[order], self.tgt[order]
            start = 0
            for k in range(1, self.n_mor + 1):
                if k == self.n_mor or s[k] != s[start] or t[k] != t[start]:
                    table[s[start]][t[start]] = np.sort(order[start:k]).astype(np.int64)
                    start = k
            empty = np.empty(0, dtype=np.int64)
            for a in range(self.n_obj):
                for b in range(self.n_obj):
                    if table[a][b] is None:
                        table[a][b] = empty
            self._hom = table
        return self._hom

    def hom(self, a, b):
        """Morphism indices from a to b, ascending."""
        return self._hom_table()[a][b]

    def compose(self, g, f):
        """g after f; raises when tgt(f) != src(g)."""
        if self.tgt[f] != self.src[g]:
            raise errors.NotComposable(int(g), int(f))
        if self.comp is not None:
            return int(self.comp[g, f])
        return int(self._composer(np.asarray([g]), np.asarray([f]))[0])

    def compose_many(self, gs, fs):
        gs = np.asarray(gs, dtype=np.int64)
        fs = np.asarray(fs, dtype=np.int64)
        if self.comp is not None:
            return self.comp[gs, fs].astype(np.int64)
        return np.asarray(self._composer(gs, fs), dtype=np.int64)

    def require_dense(self, what="operation"):
        if self.comp is None:
            raise errors.EnumerationLimitExceeded(
                f"dense composition table for {what}", self.n_mor, DENSE_LIMIT)

    # -- derived structure ---------------------------------------------------

    def isomorphisms(self):
        """(mask, inverse) over morphism indices."""
        if self._iso_cache is None:
            if self.is_dense:
                self._iso_cache = kernels.invertibles(self.src, self.tgt, self.comp, self.ident)
            else:
                self._iso_cache = self._invertibles_blockwise()
        return self._iso_cache

    def _invertibles_blockwise(self):
        mask = np.zeros(self.n_mor, dtype=bool)
        inv = np.full(self.n_mor, -1, dtype=np.int64)
        for a in range(self.n_obj):
            for b in range(self.n_obj):
                fwd = self.hom(a, b)
                if not fwd.size:
                    continue
                bwd = self.hom(b, a)
                if not bwd.size:
                    continue
                for f in fwd:
                    left = self.compose_many(bwd, np.full(bwd.shape, f))
                    hits = bwd[left == self.ident[a]]
                    for g in hits:
                        if self.compose(f, g) == self.ident[b]:
                            mask[f] = True
                            inv[f] = g
                            break
        return mask, inv

    def __repr__(self):
        return f"FinCat({self.n_obj} objects, {self.n_mor} morphisms)"


def validate_fincat(n_obj, src, tgt, ident, comp, **kw):
    """Check the axioms exhaustively and return the validated category.

    Raises IllTypedComposite / MissingIdentity / NonAssociative naming the
    first offending indices.
    """
    src = np.asarray(src, dtype=np.int32)
    tgt = np.asarray(tgt, dtype=np.int32)
    ident = np.asarray(ident, dtype=np.int32)
    comp = np.asarray(comp, dtype=np.int32)
    n_mor = len(src)
    if comp.shape != (n_mor, n_mor):
        raise errors.IllTypedComposite(-1, -1, f"table shape {comp.shape} != ({n_mor}, {n_mor})")
    if n_mor and (src.min() < 0 or src.max() >= n_obj or tgt.min() < 0 or tgt.max() >= n_obj):
        raise errors.IllTypedComposite(-1, -1, "src/tgt index out of range")
    if len(ident) != n_obj:
        raise errors.MissingIdentity(len(ident))

    hit = kernels.first_illtyped(src, tgt, comp)
    if hit is not None:
        raise errors.IllTypedComposite(*hit)
    hit = kernels.first_unit_violation(src, tgt, comp, ident)
    if hit is not None:
        raise errors.MissingIdentity(*hit)
    hit = kernels.first_assoc_violation(src, tgt, comp)
    if hit is not None:
        raise errors.NonAssociative(*hit)
    return FinCat(n_obj, src, tgt, ident, comp, **kw)


def compose(C, g, f):
    return C.compose(g, f)


def isomorphisms(C):
    """The set of two-sided invertible morphisms."""
    mask, _ = C.isomorphisms()
    return np.nonzero(mask)[0]


def interior_groupoid(C):
    """Wide subcategory on exactly the invertible morphisms.

    Returns (groupoid, old_index_of_new) -- a groupoid by construction,
    re-validated on the way out.
    """
    mask, _ = C.isomorphisms()
    keep = np.nonzero(mask)[0]
    reindex = np.full(C.n_mor, -1, dtype=np.int64)
    reindex[keep] = np.arange(len(keep))
    if C.is_dense:
        sub = C.comp[np.ix_(keep, keep)]
        new_comp = np.where(sub >= 0, reindex[np.where(sub >= 0, sub, 0)], -1).astype(np.int32)
    else:
        n = len(keep)
        new_comp = np.full((n, n), -1, dtype=np.int32)
        for j, f in enumerate(keep):
            G = keep[C.src[keep] == C.tgt[f]]
            if G.size:
                vals = C.compose_many(G, np.full(G.shape, f))
                new_comp[reindex[G], j] = reindex[vals]
    G = validate_fincat(
        C.n_obj, C.src[keep], C.tgt[keep], reindex[C.ident], new_comp,
        obj_labels=list(C.obj_labels),
        mor_labels=[C.mor_labels[i] for i in keep],
        obj_data=C.obj_data,
        mor_data=None if C.mor_data is None else [C.mor_data[i] for i in keep])
    return G, keep


def zero_objects(C):
    """Objects with exactly one morphism to and from every object."""
    out = []
    for z in range(C.n_obj):
        if all(len(C.hom(z, x)) == 1 and len(C.hom(x, z)) == 1 for x in range(C.n_obj)):
            out.append(z)
    return out


def iso_classes(C):
    """Union-find over the isomorphism relation; representatives take the
    lowest object index in their class."""
    parent = list(range(C.n_obj))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mask, _ = C.isomorphisms()
    for f in np.nonzero(mask)[0]:
        a, b = find(int(C.src[f])), find(int(C.tgt[f]))
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    reps = np.asarray([find(x) for x in range(C.n_obj)], dtype=np.int64)
    return reps


# ---------------------------------------------------------------------------
# spans, cocones, pushouts


@dataclass(frozen=True)
class Span:
    """f: X -> Y and g: X -> Z with a common source."""

    f: int
    g: int

    def check(self, C):
        if C.src[self.f] != C.src[self.g]:
            raise errors.NotComposable(self.f, self.g)


@dataclass(frozen=True)
class Cocone:
    vertex: int
    u: int  # Y -> vertex
    v: int  # Z -> vertex


@dataclass
class PushoutResult:
    """A colimit cocone with its enumeration certificate.

    ``cocone_counts[W]`` is the number of cocones with vertex W; the
    certificate is that ``w -> (w.u, w.v)`` hits each of them exactly once
    from hom(vertex, W), which was verified by counting.
    """

    span: Span
    cocone: Cocone
    cocone_counts: dict

    def mediator(self, C, u1, v1):
        """The unique morphism w with w.u == u1 and w.v == v1."""
        W1 = int(C.tgt[u1])
        homW = C.hom(self.cocone.vertex, W1)
        w = kernels.solve_mediator(C.comp, homW, self.cocone.u, self.cocone.v, u1, v1)
        if w == -2:
            raise errors.NonUniqueMediator((self.span.f, self.span.g), (u1, v1))
        if w == -1:
            raise errors.WorkbenchError(f"no mediator to cocone ({u1}, {v1}); certificate broken")
        return w


def _cocone_counts(C, f, g, cache=None):
    """Cocone counts per vertex for the span (f, g)."""
    Y, Z = int(C.tgt[f]), int(C.tgt[g])
    counts = {}
    for W in range(C.n_obj):
        homY, homZ = C.hom(Y, W), C.hom(Z, W)
        if not homY.size or not homZ.size:
            counts[W] = 0
            continue
        if cache is not None:
            rf = cache.restriction(f, W)
            rg = cache.restriction(g, W)
            counts[W] = _bucket_count(rf, rg)
        else:
            counts[W] = kernels.bucket_cocone_count(C.comp, homY, homZ, f, g)
    return counts


def _bucket_count(rf, rg):
    keys, cf = np.unique(rf, return_counts=True)
    keys_g, cg = np.unique(rg, return_counts=True)
    _, ia, ib = np.intersect1d(keys, keys_g, return_indices=True)
    return int(np.sum(cf[ia] * cg[ib]))


class RestrictionCache:
    """Memo for comp[hom(tgt(f), W), f] arrays, shared across span searches."""

    def __init__(self, C):
        self.C = C
        self._memo = {}

    def restriction(self, f, W):
        key = (int(f), int(W))
        hit = self._memo.get(key)
        if hit is None:
            homT = self.C.hom(int(self.C.tgt[f]), W)
            hit = self.C.comp[homT, f]
            self._memo[key] = hit
        return hit


def verify_pushout(C, span, cocone, cocone_counts=None, cache=None):
    """Certificate check that ``cocone`` is a colimit of ``span``.

    Returns True when universal.  Raises NonUniqueMediator when some other
    cocone receives two mediators; returns False when one receives none.
    """
    C.require_dense("pushout verification")
    f, g = span.f, span.g
    if cocone_counts is None:
        cocone_counts = _cocone_counts(C, f, g, cache)
    W0 = cocone.vertex
    u0, v0 = cocone.u, cocone.v
    if C.comp[u0, f] != C.comp[v0, g]:
        return False
    for W in range(C.n_obj):
        homW = C.hom(W0, W)
        n = cocone_counts[W]
        if len(homW) != n:
            return False
        if not homW.size:
            continue
        distinct = kernels.pair_distinct_count(C.comp, homW, u0, v0, C.n_mor)
        if distinct < len(homW):
            # two parallel maps compose equally with (u0, v0)
            cu, cv = C.comp[homW, u0], C.comp[homW, v0]
            enc = cu.astype(np.int64) * C.n_mor + cv.astype(np.int64)
            _, first = np.unique(enc, return_index=True)
            dup = np.setdiff1d(np.arange(len(homW)), first)[0]
            raise errors.NonUniqueMediator((f, g), (int(cu[dup]), int(cv[dup])))
        if distinct != n:
            return False
    return True


def pushout(C, span, *, obj_order=None, uv_reverse=False, cache=None):
    """Search for a pushout of the span by enumeration.

    Candidates are tried vertex by vertex (default order: object index),
    cocones within a vertex in (u, v) index order (reversed under
    ``uv_reverse``).  Returns a PushoutResult or None when no cocone is
    universal.  The search order only affects which representative is
    chosen, never existence.
    """
    C.require_dense("pushout search")
    span.check(C)
    f, g = span.f, span.g
    Y, Z = int(C.tgt[f]), int(C.tgt[g])
    counts = _cocone_counts(C, f, g, cache)
    order = range(C.n_obj) if obj_order is None else obj_order
    hom_ok = [W for W in order
              if all(len(C.hom(W, Wp)) == counts[Wp] for Wp in range(C.n_obj))]
    for W0 in hom_ok:
        us, vs = kernels.bucket_cocones(C.comp, C.hom(Y, W0), C.hom(Z, W0), f, g)
        idx = range(len(us) - 1, -1, -1) if uv_reverse else range(len(us))
        for k in idx:
            cocone = Cocone(W0, int(us[k]), int(vs[k]))
            try:
                if verify_pushout(C, span, cocone, cocone_counts=counts, cache=cache):
                    return PushoutResult(span, cocone, counts)
            except errors.NonUniqueMediator:
                continue  # candidate not initial; a collision elsewhere is not fatal to the search
    return None


# ---------------------------------------------------------------------------
# functors and natural transformations


@dataclass
class Functor:
    source: FinCat
    target: FinCat
    obj_map: np.ndarray
    mor_map: np.ndarray
    label: str = ""

    def __post_init__(self):
        self.obj_map = np.asarray(self.obj_map, dtype=np.int64)
        self.mor_map = np.asarray(self.mor_map, dtype=np.int64)

    def validate(self):
        C, D = self.source, self.target
        if (self.target.src[self.mor_map] != self.obj_map[C.src]).any() or \
           (self.target.tgt[self.mor_map] != self.obj_map[C.tgt]).any():
            raise errors.IllTypedComposite(-1, -1, "functor breaks src/tgt")
        if (self.mor_map[C.ident] != D.ident[self.obj_map]).any():
            bad = np.nonzero(self.mor_map[C.ident] != D.ident[self.obj_map])[0][0]
            raise errors.MissingIdentity(int(bad), int(C.ident[bad]))
        # composition, blockwise to stay dense-agnostic
        for f in range(C.n_mor):
            G = np.nonzero(C.src == C.tgt[f])[0]
            if not G.size:
                continue
            lhs = self.mor_map[C.compose_many(G, np.full(G.shape, f))]
            rhs = D.compose_many(self.mor_map[G], np.full(G.shape, self.mor_map[f]))
            if (lhs != rhs).any():
                g = int(G[np.argmax(lhs != rhs)])
                raise errors.NonAssociative(g, int(f), -1)
        return self

    def apply_obj(self, x):
        return int(self.obj_map[x])

    def apply_mor(self, m):
        return int(self.mor_map[m])


def identity_functor(C):
    return Functor(C, C, np.arange(C.n_obj), np.arange(C.n_mor), label="id")


def compose_functors(G, F):
    """G after F."""
    if F.target is not G.source:
        raise errors.NotComposable(-1, -1)
    return Functor(F.source, G.target, G.obj_map[F.obj_map], G.mor_map[F.mor_map],
                   label=f"{G.label}.{F.label}")


@dataclass
class NatTrans:
    source: Functor
    target: Functor
    components: np.ndarray

    def validate(self):
        F, G = self.source, self.target
        D = F.target
        comps = np.asarray(self.components, dtype=np.int64)
        if (D.src[comps] != F.obj_map).any() or (D.tgt[comps] != G.obj_map).any():
            raise errors.IllTypedComposite(-1, -1, "component typing")
        C = F.source
        for f in range(C.n_mor):
            a, b = int(C.src[f]), int(C.tgt[f])
            left = D.compose(comps[b], F.mor_map[f])
            right = D.compose(G.mor_map[f], comps[a])
            if left != right:
                raise errors.NonAssociative(int(comps[b]), int(F.mor_map[f]), f)
        return self


def equivalence_check(F, *, need_witness=True):
    """Fully faithful + essentially surjective, with explicit witnesses.

    Returns (ok, witness) where the witness holds per-object iso choices in
    the target and per-hom bijection tables.
    """
    C, D = F.source, F.target
    hom_tables = {}
    for x in range(C.n_obj):
        for y in range(C.n_obj):
            h = C.hom(x, y)
            h_im = D.hom(F.apply_obj(x), F.apply_obj(y))
            if len(h) != len(h_im):
                return False, {"reason": f"hom({x},{y}) has size {len(h)} vs {len(h_im)}"}
            imgs = F.mor_map[h]
            if len(np.unique(imgs)) != len(h):
                return False, {"reason": f"hom({x},{y}) not injective"}
            if need_witness:
                hom_tables[(x, y)] = dict(zip(h.tolist(), imgs.tolist()))
    mask, _ = D.isomorphisms()
    iso_choice = {}
    image = set(F.obj_map.tolist())
    for d in range(D.n_obj):
        found = None
        for c_img in sorted(image):
            cand = D.hom(c_img, d)
            cand = cand[mask[cand]]
            if cand.size:
                found = (c_img, int(cand[0]))
                break
        if found is None:
            return False, {"reason": f"object {d} misses the essential image"}
        iso_choice[d] = found
    return True, {"iso_choice": iso_choice, "hom_tables": hom_tables}


def functor_category(D, C, *, limit=50000):
    """All functors D -> C with all natural transformations between them.

    Eager enumeration behind a hard ceiling; raises
    EnumerationLimitExceeded past ``limit`` functors.
    """
    C.require_dense("functor enumeration")
    D.require_dense("functor enumeration")
    functors = []
    mor_order = sorted(range(D.n_mor), key=lambda m: (int(D.src[m]), int(D.tgt[m]), m))

    def assign(obj_map):
        mor_map = np.full(D.n_mor, -1, dtype=np.int64)
        for x in range(D.n_obj):
            mor_map[D.ident[x]] = C.ident[obj_map[x]]

        def extend(k):
            if len(functors) > limit:
                raise errors.EnumerationLimitExceeded("functors", len(functors), limit)
            if k == len(mor_order):
                functors.append(Functor(D, C, np.asarray(obj_map), mor_map.copy()))
                return
            m = mor_order[k]
            if mor_map[m] >= 0:
                extend(k + 1)
                return
            for cand in C.hom(obj_map[int(D.src[m])], obj_map[int(D.tgt[m])]):
                mor_map[m] = cand
                if _composites_consistent(D, C, mor_map, m):
                    extend(k + 1)
            mor_map[m] = -1

        extend(0)

    def _composites_consistent(D, C, mor_map, m):
        for other in np.nonzero(mor_map >= 0)[0]:
            if D.tgt[m] == D.src[other]:
                c = D.comp[other, m]
                if mor_map[c] >= 0 and mor_map[c] != C.comp[mor_map[other], mor_map[m]]:
                    return False
            if D.tgt[other] == D.src[m]:
                c = D.comp[m, other]
                if mor_map[c] >= 0 and mor_map[c] != C.comp[mor_map[m], mor_map[other]]:
                    return False
        return True

    for flat in range(C.n_obj ** D.n_obj if D.n_obj else 1):
        obj_map = []
        v = flat
        for _ in range(D.n_obj):
            obj_map.append(v % C.n_obj)
            v //= C.n_obj
        assign(obj_map)

    # natural transformations, then the category structure on them
    nats = []  # (src functor idx, tgt functor idx, components tuple)
    for i, F in enumerate(functors):
        for j, G in enumerate(functors):
            for comps in _enumerate_nat_components(F, G):
                nats.append((i, j, comps))
    n = len(nats)
    src = np.asarray([a for a, _, _ in nats], dtype=np.int32)
    tgt = np.asarray([b for _, b, _ in nats], dtype=np.int32)
    key = {(a, b, c): k for k, (a, b, c) in enumerate(nats)}
    ident = np.asarray(
        [key[(i, i, tuple(int(C.ident[x]) for x in F.obj_map))] for i, F in enumerate(functors)],
        dtype=np.int32)
    comp = np.full((n, n), -1, dtype=np.int32)
    for k2, (b2, c2, beta) in enumerate(nats):
        for k1, (a1, b1, alpha) in enumerate(nats):
            if b1 != b2:
                continue
            gamma = tuple(int(C.comp[beta[x], alpha[x]]) for x in range(D.n_obj))
            comp[k2, k1] = key[(a1, c2, gamma)]
    cat = validate_fincat(len(functors), src, tgt, ident, comp,
                          obj_data=functors, mor_data=nats)
    return cat, functors, nats


def _enumerate_nat_components(F, G):
    C, D = F.source, F.target
    comps = [None] * C.n_obj

    def extend(x):
        if x == C.n_obj:
            yield tuple(int(c) for c in comps)
            return
        for cand in D.hom(F.apply_obj(x), G.apply_obj(x)):
            comps[x] = int(cand)
            ok = True
            for f in range(C.n_mor):
                a, b = int(C.src[f]), int(C.tgt[f])
                if comps[a] is None or comps[b] is None or (a != x and b != x):
                    continue
                if D.comp[comps[b], F.mor_map[f]] != D.comp[G.mor_map[f], comps[a]]:
                    ok = False
                    break
            if ok:
                yield from extend(x + 1)
        comps[x] = None

    yield from extend(0)

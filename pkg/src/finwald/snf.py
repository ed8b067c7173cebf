"""Exact integer matrix normal forms and finitely generated abelian groups.

Everything here runs on arbitrary-precision Python integers: intermediate
entries of a Smith reduction can blow up even on small inputs, so no fixed
width is safe.  Pivoting picks the smallest nonzero absolute value,
breaking ties by lowest (row, column) index, which makes every normal
form deterministic for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in range(len(A))]
    cols = len(B[0])
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def vec_mat(v, A):
    if not A:
        return []
    cols = len(A[0])
    return [sum(v[i] * A[i][j] for i in range(len(v))) for j in range(cols)]


@dataclass
class SNFResult:
    """U @ M @ V == diag(factors), with U, V unimodular.

    ``U`` is only populated when requested: it is square in the number of
    rows, which gets large for relation matrices with thousands of rows.
    """

    factors: list
    rank: int
    V: list | None = None
    V_inv: list | None = None
    U: list | None = None


def smith_normal_form(M, *, want_V=False, want_U=False):
    """Reduce an integer matrix to Smith normal form.

    Returns an :class:`SNFResult` whose ``factors`` hold the nonzero
    invariant factors d1 | d2 | ..., all positive.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [list(map(int, r)) for r in M]
    V = _identity(cols) if want_V else None
    V_inv = _identity(cols) if want_V else None
    U = _identity(rows) if want_U else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]
            V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        Ad, As = A[dst], A[src]
        for k in range(cols):
            Ad[k] += q * As[k]
        if U is not None:
            Ud, Us = U[dst], U[src]
            for k in range(rows):
                Ud[k] += q * Us[k]

    def add_col(dst, src, q):
        # col dst += q * col src ; V_inv gets the inverse op on rows
        for r in A:
            r[dst] += q * r[src]
        if V is not None:
            for r in V:
                r[dst] += q * r[src]
            Vs, Vd = V_inv[src], V_inv[dst]
            for k in range(cols):
                Vs[k] -= q * Vd[k]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        if U is not None:
            U[i] = [-x for x in U[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # smallest nonzero |entry| in the trailing block, lowest index first
        p = None
        best = None
        for i in range(t, rows):
            Ai = A[i]
            for j in range(t, cols):
                a = Ai[j]
                if a != 0:
                    a = -a if a < 0 else a
                    if best is None or a < best:
                        best, p = a, (i, j)
                        if a == 1:
                            break
            if best == 1:
                break
        if p is None:
            break
        if p[0] != t:
            swap_rows(t, p[0])
        if p[1] != t:
            swap_cols(t, p[1])
        if A[t][t] < 0:
            negate_row(t)

        clean = True
        for i in range(t + 1, rows):
            if A[i][t] != 0:
                q = A[i][t] // A[t][t]
                add_row(i, t, -q)
                if A[i][t] != 0:
                    clean = False
        for j in range(t + 1, cols):
            if A[t][j] != 0:
                q = A[t][j] // A[t][t]
                add_col(j, t, -q)
                if A[t][j] != 0:
                    clean = False
        if not clean:
            continue  # remainders left: pick a new, smaller pivot

        # pivot must divide the rest of the block
        d = A[t][t]
        offender = None
        for i in range(t + 1, rows):
            Ai = A[i]
            for j in range(t + 1, cols):
                if Ai[j] % d != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1

    factors = [A[i][i] for i in range(t)]
    return SNFResult(factors=factors, rank=t, V=V, V_inv=V_inv, U=U)


# ---------------------------------------------------------------------------
# abelian groups


@dataclass(frozen=True)
class AbGroup:
    """Canonical form of a finitely generated abelian group: free rank plus
    torsion invariant factors t1 | t2 | ..., each >= 2."""

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion factors not a divisibility chain: {self.torsion}")
        if any(t < 2 for t in self.torsion):
            raise ValueError(f"torsion factors must be >= 2: {self.torsion}")

    @property
    def invariant_factors(self):
        return (0,) * self.free_rank + tuple(self.torsion)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def group_from_relations(n_gens, relation_rows):
    """Z^n_gens modulo the row span of ``relation_rows``.

    Returns ``(group, images)`` where ``images[j]`` is the coordinate
    vector of generator j in the normal form: torsion coordinates reduced
    mod their factor, then free coordinates.
    """
    rows = [list(r) for r in relation_rows]
    if not rows:
        rows = [[0] * n_gens]
    res = smith_normal_form(rows, want_V=True)
    factors = res.factors
    torsion_idx = [i for i, d in enumerate(factors) if d > 1]
    free_count = n_gens - res.rank
    group = AbGroup(free_count, tuple(factors[i] for i in torsion_idx))
    images = []
    for j in range(n_gens):
        coords = res.V[j]  # coordinates of e_j in the adapted basis
        tor = tuple(coords[i] % factors[i] for i in torsion_idx)
        free = tuple(coords[i] for i in range(res.rank, n_gens))
        images.append(tor + free)
    return group, images


def lattice_contains(rows, v, _cache=None):
    """Whether v lies in the integer row span of ``rows``."""
    if _cache is not None:
        res = _cache
    else:
        res = smith_normal_form(rows, want_V=True) if rows else None
    if res is None:
        return all(x == 0 for x in v)
    w = vec_mat(list(v), res.V)
    for i, x in enumerate(w):
        if i < res.rank:
            if x % res.factors[i] != 0:
                return False
        elif x != 0:
            return False
    return True


def lattice_membership_oracle(rows):
    """Precompute the SNF once; returns a membership predicate."""
    if not rows:
        return lambda v: all(x == 0 for x in v)
    res = smith_normal_form(rows, want_V=True)
    return lambda v: lattice_contains(rows, v, _cache=res)


def quotient_of_spans(upper_rows, lower_rows, n_cols):
    """Invariant factors of span(upper + lower) / span(lower) -- the image
    of a homomorphism presented by generator images ``upper_rows`` into
    Z^n_cols / span(lower_rows)."""
    stacked = [list(r) for r in upper_rows] + [list(r) for r in lower_rows]
    if not stacked:
        return AbGroup(0, ())
    res = smith_normal_form(stacked, want_V=True)
    if res.rank == 0:
        return AbGroup(0, ())
    # phi maps the big lattice onto Z^rank via x -> (x.V)_i / d_i
    phi_lower = []
    for r in lower_rows:
        w = vec_mat(list(r), res.V)
        phi_lower.append([w[i] // res.factors[i] for i in range(res.rank)])
    sub = smith_normal_form(phi_lower).factors if phi_lower else []
    torsion = tuple(d for d in sub if d > 1)
    free = res.rank - len(sub)
    return AbGroup(free, torsion)


def hom_is_surjective(matrix_rows, target_relations, n_target_gens):
    """Whether generator images + target relations span all of Z^n."""
    stacked = [list(r) for r in matrix_rows] + [list(r) for r in target_relations]
    if n_target_gens == 0:
        return True
    if not stacked:
        return False
    res = smith_normal_form(stacked)
    return res.rank == n_target_gens and all(d == 1 for d in res.factors)


def hom_is_injective(matrix_rows, source_group, target_relations, n_target_gens):
    """Finitely generated abelian groups are Hopfian: the map is injective
    exactly when its image has the same invariant factors as the source."""
    image = quotient_of_spans(matrix_rows, target_relations, n_target_gens)
    return image == source_group

"""Small hand-rolled categories used by tests, fixtures, and the CLI demos."""

from __future__ import annotations

import numpy as np

from .fincat import validate_fincat


def chain_poset(n):
    """The total order 0 < 1 < ... < n as a category: one morphism i -> j
    for every i <= j."""
    mors = [(i, j) for i in range(n + 1) for j in range(i, n + 1)]
    index = {m: k for k, m in enumerate(mors)}
    src = [i for i, _ in mors]
    tgt = [j for _, j in mors]
    ident = [index[(i, i)] for i in range(n + 1)]
    m = len(mors)
    comp = np.full((m, m), -1, dtype=np.int32)
    for g, (b, c) in enumerate(mors):
        for f, (a, b2) in enumerate(mors):
            if b2 == b:
                comp[g, f] = index[(a, c)]
    labels = [f"{i}<={j}" for i, j in mors]
    return validate_fincat(n + 1, src, tgt, ident, comp, mor_labels=labels)


def discrete_category(n):
    """n objects, identities only."""
    comp = np.full((n, n), -1, dtype=np.int32)
    for i in range(n):
        comp[i, i] = i
    return validate_fincat(n, list(range(n)), list(range(n)), list(range(n)), comp)


def monoid_category(table, labels=None):
    """One-object category from a monoid multiplication table.

    ``table[g][f]`` is g after f; element 0 must be the unit.
    """
    m = len(table)
    comp = np.asarray(table, dtype=np.int32)
    return validate_fincat(1, [0] * m, [0] * m, [0], comp, mor_labels=labels)


def terminal_category():
    return discrete_category(1)

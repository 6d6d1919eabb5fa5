"""Shared helpers: cached rule construction across the four families."""

from functools import lru_cache

import quadlsq as q

FAMILIES = (
    q.Family.NEWTON_COTES,
    q.Family.FEJER1,
    q.Family.CLENSHAW_CURTIS,
    q.Family.GAUSS_LEGENDRE,
)

#: smallest node count each family supports
MIN_N = {
    q.Family.NEWTON_COTES: 2,
    q.Family.FEJER1: 1,
    q.Family.CLENSHAW_CURTIS: 2,
    q.Family.GAUSS_LEGENDRE: 1,
}


@lru_cache(maxsize=None)
def nodeset(family, n):
    return q.generate(q.FamilySpec(family, n))


@lru_cache(maxsize=None)
def solved(family, n):
    """(NodeSet, FundamentalSystem, RuleSolution) for one family rule."""
    ns = nodeset(family, n)
    fs = q.build_system(ns)
    return ns, fs, q.solve_rule(fs)


def family_cases(n_lo, n_hi):
    """(family, n) pairs for every family over an n range, skipping
    counts below a family's minimum."""
    return [
        (fam, n)
        for fam in FAMILIES
        for n in range(n_lo, n_hi + 1)
        if n >= MIN_N[fam]
    ]

"""The valuation module of a lattice: Z L modulo the relations
a/\b + a\/b - a - b, rank and basis facts, and the membership theorem for
idempotents of induced subposets.

The relation submodule is presented by one generator row per incomparable
unordered pair; a cached echelon row basis answers repeated membership
queries.  Everything here is exact integer arithmetic.
"""

from functools import lru_cache

import numpy as np

from .errors import (
    HostMismatch,
    MissingJoinIrreducibles,
    NotAValuation,
    NotDistributive,
)
from .incidence import mobius
from .mobius_algebra import GroupVector, induced_subposet
from .zlinalg import RowSpan, invariant_factors


class ValuationRelations:
    """Presentation of the submodule spanned by a/\b + a\/b - a - b.

    One row per incomparable unordered pair {a, b}; comparable pairs give
    the zero vector and are omitted.  Every row sums to zero.
    """

    __slots__ = ("host", "generators", "_span")

    def __init__(self, host):
        self.host = host
        p = host.poset
        n = len(p)
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                if p.leq[i, j] or p.leq[j, i]:
                    continue
                row = [0] * n
                row[host.meet_table[i, j]] += 1
                row[host.join_table[i, j]] += 1
                row[i] -= 1
                row[j] -= 1
                rows.append(row)
        self.generators = tuple(tuple(r) for r in rows)
        span = RowSpan(n)
        for r in rows:
            span.add(r)
        self._span = span

    @property
    def rank(self):
        return self._span.rank

    def contains(self, v):
        """Exact membership of a vector in the relation span."""
        if isinstance(v, GroupVector):
            if v.host is not self.host.poset:
                raise HostMismatch("vector over a different poset")
            v = list(v.coeffs)
        return self._span.contains(v)


@lru_cache(maxsize=64)
def valuation_relations(lattice):
    return ValuationRelations(lattice)


def valuation_invariants(lattice):
    """Free rank and torsion of Z L over the relation span, against the
    irreducible count.  For a distributive lattice the quotient is free of
    rank |ji|; `match` records that comparison (vacuous otherwise)."""
    rel = valuation_relations(lattice)
    n = len(lattice)
    factors = invariant_factors([list(r) for r in rel.generators])
    free_rank = n - len(factors)
    torsion = [f for f in factors if f > 1]
    ji = lattice.join_irreducibles()["ji"]
    match = (free_rank == len(ji) and not torsion) if lattice.is_distributive else True
    return {
        "free_rank": free_rank,
        "torsion": torsion,
        "ji_count": len(ji),
        "match": match,
    }


def _check_subset(lattice, members):
    ji = lattice.join_irreducibles()["ji"]
    members = list(members)
    missing = [a for a in ji if a not in set(members)]
    if missing:
        raise MissingJoinIrreducibles(f"subset omits irreducibles {missing[:4]!r}")
    return ji, members


def subset_idempotent(lattice, members, a):
    """u(a) of the induced subposet on `members`, embedded back into Z L."""
    p = lattice.poset
    members = tuple(members)
    sub = induced_subposet(p, members)
    mu_sub = mobius(sub).values
    k = sub.index(a)
    coeffs = np.zeros(len(p), dtype=object)
    for i, b in enumerate(sub.elements):
        if mu_sub[i, k] != 0:
            coeffs[p.index(b)] = mu_sub[i, k]
    coeffs.flags.writeable = False
    return GroupVector(p, coeffs, _trusted=True)


def zaslavsky_check(lattice, members):
    """For each non-irreducible a in the subset, test whether the induced
    idempotent u_M(a) lies in the relation span.  The host must be
    distributive and the subset must contain every join-irreducible; all
    reported values are then expected to be True.
    """
    if not lattice.is_distributive:
        raise NotDistributive("the membership theorem needs a distributive host")
    ji, members = _check_subset(lattice, members)
    members = tuple(dict.fromkeys(members))
    rel = valuation_relations(lattice)
    ji_set = set(ji)
    out = {}
    for a in members:
        if a in ji_set:
            continue
        out[a] = rel.contains(subset_idempotent(lattice, members, a))
    return out


class ValuationTable:
    """Candidate valuation: element -> int or integer vector."""

    __slots__ = ("host", "values")

    def __init__(self, host, values):
        vals = {}
        for a in host.elements:
            if a not in values:
                raise KeyError(f"no value for element {a!r}")
            v = values[a]
            vals[a] = v if isinstance(v, int) else np.asarray(v, dtype=object)
        self.host = host
        self.values = vals

    @classmethod
    def constant(cls, host, c=1):
        return cls(host, {a: c for a in host.elements})

    @classmethod
    def indicator(cls, host, subset):
        s = set(subset)
        return cls(host, {a: 1 if a in s else 0 for a in host.elements})

    @classmethod
    def from_function(cls, host, fn):
        return cls(host, {a: fn(a) for a in host.elements})

    def __getitem__(self, a):
        return self.values[a]

    def is_valuation(self):
        """f(a/\b) + f(a\/b) == f(a) + f(b) for every pair."""
        l = self.host
        els = l.elements
        for i, a in enumerate(els):
            for b in els[i + 1:]:
                lhs = self.values[l.meet(a, b)] + self.values[l.join(a, b)]
                rhs = self.values[a] + self.values[b]
                if not np.array_equal(lhs, rhs):
                    return False
        return True


def valuation_defect(lattice, members, table, a):
    """The alternating sum of table values against the induced Mobius
    function: sum over b in the subset below a of mu_M(b, a) f(b).

    Zero whenever the table is a valuation and a is a non-irreducible
    member of a subset containing all irreducibles.
    """
    if isinstance(table, ValuationTable):
        if table.host is not lattice:
            raise HostMismatch("table over a different lattice")
        if not table.is_valuation():
            raise NotAValuation("table violates f(meet) + f(join) == f(a) + f(b)")
        get = table.values.__getitem__
    else:
        raise NotAValuation("expected a ValuationTable")
    _, members = _check_subset(lattice, members)
    members = tuple(dict.fromkeys(members))
    p = lattice.poset
    sub = induced_subposet(p, members)
    mu_sub = mobius(sub).values
    k = sub.index(a)
    acc = None
    for i, b in enumerate(sub.elements):
        m = mu_sub[i, k]
        if m == 0:
            continue
        term = get(b) * m
        acc = term if acc is None else acc + term
    return acc if acc is not None else 0


def irreducible_coordinates(lattice, x, check=True):
    """Coefficients over the join-irreducibles expressing x modulo the
    relation span: coefficient of b is the sum of mu_ji(b, a) over
    irreducible a between b and x.  The residual of the combination
    against x is verified to lie in the relation span."""
    if not lattice.is_distributive:
        raise NotDistributive("irreducible coordinates need a distributive host")
    p = lattice.poset
    ji = lattice.join_irreducibles()["ji"]
    sub = induced_subposet(p, tuple(ji))
    mu_ji = mobius(sub).values
    ix = p.index(x)
    coords = {}
    for bi, b in enumerate(sub.elements):
        total = 0
        for ai, a in enumerate(sub.elements):
            if p.leq[p.index(a), ix]:
                total += mu_ji[bi, ai]
        if total:
            coords[b] = total
    if check:
        combo = np.zeros(len(p), dtype=object)
        combo[ix] = 1
        for b, c in coords.items():
            combo[p.index(b)] -= c
        if not valuation_relations(lattice).contains(list(combo)):  # pragma: no cover
            raise AssertionError("irreducible expansion residual escapes the relations")
    return coords


def meet_bilinear(lattice, v, w):
    """Bilinear extension of the meet to vectors in Z L."""
    v._require_same_host(w)
    p = lattice.poset
    out = np.zeros(len(p), dtype=object)
    for i, ci in enumerate(v.coeffs):
        if ci == 0:
            continue
        for j, cj in enumerate(w.coeffs):
            if cj == 0:
                continue
            out[lattice.meet_table[i, j]] += ci * cj
    out.flags.writeable = False
    return GroupVector(p, out, _trusted=True)


def join_bilinear(lattice, v, w):
    """Bilinear extension of the join to vectors in Z L."""
    v._require_same_host(w)
    p = lattice.poset
    out = np.zeros(len(p), dtype=object)
    for i, ci in enumerate(v.coeffs):
        if ci == 0:
            continue
        for j, cj in enumerate(w.coeffs):
            if cj == 0:
                continue
            out[lattice.join_table[i, j]] += ci * cj
    out.flags.writeable = False
    return GroupVector(p, out, _trusted=True)


def valuation_idempotent(lattice, a):
    """e_a: the bottom's unit vector at the bottom, else unit(a) - unit(a*)
    for a join-irreducible with lower cover a*."""
    p = lattice.poset
    ji = lattice.join_irreducibles()
    if a == lattice.bottom:
        return GroupVector.unit(p, a)
    if a not in ji["lower_cover"]:
        raise ValueError(f"{a!r} is not join-irreducible")
    return GroupVector.unit(p, a) - GroupVector.unit(p, ji["lower_cover"][a])

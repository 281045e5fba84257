"""Lattice recognition and structure theory.

A Lattice wraps a Poset with total join/meet index tables, built by the
up-set/down-set fingerprint trick: the least upper bound of {a, b} exists
iff the intersection of their up-sets is itself the up-set of some element.
Structure flags (distributive, modular, cancellation) are exhaustively
checked identities over all triples, vectorized per first argument.
"""

from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from .errors import NoSeparator, NonUniqueCover, NotALattice, NotDistributive
from .poset import Poset, build_poset


class Lattice:
    """Finite lattice: poset plus join/meet tables (index-valued)."""

    __slots__ = ("poset", "join_table", "meet_table", "__dict__")

    def __init__(self, poset, join_table, meet_table):
        self.poset = poset
        self.join_table = join_table
        self.meet_table = meet_table

    def __len__(self):
        return len(self.poset)

    def __repr__(self):
        return f"Lattice({len(self)} elements)"

    @property
    def elements(self):
        return self.poset.elements

    def join(self, a, b):
        p = self.poset
        return p.elements[self.join_table[p.index(a), p.index(b)]]

    def meet(self, a, b):
        p = self.poset
        return p.elements[self.meet_table[p.index(a), p.index(b)]]

    def join_of(self, ids):
        """Join of a subset; the empty join is the bottom element."""
        p = self.poset
        k = p.bottom_index
        for a in ids:
            k = self.join_table[k, p.index(a)] if k is not None else p.index(a)
        return p.elements[k]

    def meet_of(self, ids):
        p = self.poset
        k = p.top_index
        for a in ids:
            k = self.meet_table[k, p.index(a)] if k is not None else p.index(a)
        return p.elements[k]

    @property
    def bottom(self):
        return self.poset.bottom

    @property
    def top(self):
        return self.poset.top

    # -- join-irreducibles --------------------------------------------------

    @cached_property
    def _ji_data(self):
        p = self.poset
        n = len(p)
        leq = p.leq
        ji_idx = []
        lower_cover = {}
        for i in range(n):
            col = leq[:, i].copy()
            col[i] = False
            below = np.flatnonzero(col)
            if len(below) == 0:
                ji_idx.append(i)  # bottom: join-irreducible by convention
                continue
            ub = np.logical_and.reduce(leq[below, :], axis=0)
            j = _lub_index(leq, ub)
            if j == i:
                continue  # i is the join of its strict down-set: reducible
            ji_idx.append(i)
            covs = np.flatnonzero(p.covers[:, i])
            if len(covs) != 1:
                raise NonUniqueCover(
                    f"irreducible {p.elements[i]!r} has {len(covs)} lower covers"
                )
            lower_cover[p.elements[i]] = p.elements[covs[0]]
        # every x must be the join of the irreducibles below it
        ji_mask = np.zeros(n, dtype=bool)
        ji_mask[ji_idx] = True
        for i in range(n):
            gens = np.flatnonzero(leq[:, i] & ji_mask)
            ub = np.logical_and.reduce(leq[gens, :], axis=0)
            if _lub_index(leq, ub) != i:  # pragma: no cover
                raise AssertionError("element is not the join of irreducibles below it")
        return [p.elements[i] for i in ji_idx], lower_cover

    def join_irreducibles(self):
        """Irreducible ids (bottom included) and the lower-cover map on the rest."""
        ji, lower = self._ji_data
        return {"ji": list(ji), "lower_cover": dict(lower)}

    # -- structure flags ----------------------------------------------------

    @cached_property
    def is_distributive(self):
        return self._flags["distributive"]

    @cached_property
    def is_modular(self):
        return self._flags["modular"]

    @cached_property
    def has_cancellation(self):
        return self._flags["cancellation"]

    @cached_property
    def _flags(self):
        n = len(self)
        jn, mt = self.join_table, self.meet_table
        distributive = True
        modular = True
        for a in range(n):
            ma, ja = mt[a], jn[a]
            # a /\ (b \/ c) == (a /\ b) \/ (a /\ c), all b, c
            if distributive:
                lhs = ma[jn]
                rhs = jn[ma[:, None], ma[None, :]]
                if not np.array_equal(lhs, rhs):
                    distributive = False
            # (a \/ z) /\ (a \/ b) == a \/ (z /\ (a \/ b)) and its dual
            if modular:
                lhs1 = mt[ja[:, None], ja[None, :]]
                rhs1 = ja[mt[:, ja]]
                lhs2 = jn[ma[:, None], ma[None, :]]
                rhs2 = ma[jn[:, ma]]
                if not (np.array_equal(lhs1, rhs1) and np.array_equal(lhs2, rhs2)):
                    modular = False
            if not distributive and not modular:
                break
        cancellation = True
        off_diag = ~np.eye(n, dtype=bool)
        for c in range(n):
            same = (jn[c][:, None] == jn[c][None, :]) & (mt[c][:, None] == mt[c][None, :])
            if (same & off_diag).any():
                cancellation = False
                break
        if distributive != cancellation:  # pragma: no cover
            raise AssertionError("distributive and cancellation flags disagree")
        return {"distributive": distributive, "modular": modular, "cancellation": cancellation}

    def structure_check(self):
        """Exhaustive O(n^3) flags; distributive iff cancellation is asserted."""
        return dict(self._flags)

    # -- prime ideals ---------------------------------------------------------

    @cached_property
    def _prime_ideal_generators(self):
        # every ideal of a finite lattice is principal, so scanning the
        # principal ideals finds them all
        n = len(self)
        leq = self.poset.leq
        mt = self.meet_table
        out = []
        for a in range(n):
            inside = leq[:, a]
            if inside.all():
                continue  # not proper
            out_idx = np.flatnonzero(~inside)
            meets = mt[np.ix_(out_idx, out_idx)]
            if inside[meets].any():
                continue  # some x /\ y falls in without x or y
            out.append(a)
        return out

    def prime_ideals(self):
        """All prime ideals, each as a list of ids in element order."""
        p = self.poset
        return [p.down_set(p.elements[a]) for a in self._prime_ideal_generators]

    def separating_prime_ideal(self, a, b):
        """A prime ideal containing exactly one of a, b (host must be distributive)."""
        if not self.is_distributive:
            raise NotDistributive("prime-ideal separation needs a distributive lattice")
        if a == b:
            raise ValueError("elements must differ")
        p = self.poset
        ia, ib = p.index(a), p.index(b)
        for c in self._prime_ideal_generators:
            if bool(p.leq[ia, c]) != bool(p.leq[ib, c]):
                return p.down_set(p.elements[c])
        raise NoSeparator(f"no prime ideal separates {a!r} and {b!r}")  # pragma: no cover


def _lub_index(leq, ub_mask):
    """Index of the least element of the upper-bound mask, or None."""
    cand = np.flatnonzero(ub_mask)
    if len(cand) == 0:
        return None
    sizes = leq[cand, :].sum(axis=1)
    m = cand[int(np.argmax(sizes))]  # the least upper bound has the largest up-set
    if not leq[m, cand].all():
        return None
    return int(m)


def lattice_from_poset(p):
    """Total join/meet tables; raises NotALattice(witness pair) on failure."""
    n = len(p)
    if n == 0:
        raise NotALattice(None, "empty poset is not a lattice")
    leq = p.leq
    up_key = {leq[i, :].tobytes(): i for i in range(n)}
    dn_key = {leq[:, i].tobytes(): i for i in range(n)}
    join = np.zeros((n, n), dtype=np.int64)
    meet = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        join[i, i] = meet[i, i] = i
        for j in range(i + 1, n):
            ub = (leq[i, :] & leq[j, :]).tobytes()
            k = up_key.get(ub)
            if k is None:
                raise NotALattice((p.elements[i], p.elements[j]))
            join[i, j] = join[j, i] = k
            lb = (leq[:, i] & leq[:, j]).tobytes()
            k = dn_key.get(lb)
            if k is None:
                raise NotALattice((p.elements[i], p.elements[j]))
            meet[i, j] = meet[j, i] = k
    join.flags.writeable = False
    meet.flags.writeable = False
    return Lattice(p, join, meet)


def set_lattice(sets, check=True):
    """Lattice of a union/intersection-closed family of frozensets.

    Element ids are the frozensets themselves; join is union, meet is
    intersection, order is inclusion.
    """
    family = sorted({frozenset(s) for s in sets}, key=lambda s: (len(s), sorted(map(repr, s))))
    if not family:
        raise NotALattice(None, "empty family")
    pos = {s: i for i, s in enumerate(family)}
    if check:
        for x, y in combinations(family, 2):
            if x | y not in pos or x & y not in pos:
                raise NotALattice((x, y), f"family not closed at {set(x)} and {set(y)}")
    n = len(family)
    ground = sorted({t for s in family for t in s}, key=repr)
    bit = {t: k for k, t in enumerate(ground)}
    masks = np.array([sum(1 << bit[t] for t in s) for s in family], dtype=object)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    leq = np.asarray(leq, dtype=bool)
    leq.flags.writeable = False
    p = Poset(family, leq)
    join = np.zeros((n, n), dtype=np.int64)
    meet = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(family):
        for j, y in enumerate(family):
            join[i, j] = pos[x | y]
            meet[i, j] = pos[x & y]
    join.flags.writeable = False
    meet.flags.writeable = False
    return Lattice(p, join, meet)


def union_intersection_closure(seeds):
    """Close a family of frozensets under union and intersection."""
    family = {frozenset(s) for s in seeds}
    frontier = list(family)
    while frontier:
        new = []
        for x in frontier:
            for y in list(family):
                for z in (x | y, x & y):
                    if z not in family:
                        family.add(z)
                        new.append(z)
        frontier = new
    return sorted(family, key=lambda s: (len(s), sorted(s)))


@lru_cache(maxsize=None)
def boolean_lattice(n):
    """The lattice of all subsets of {1..n}, ids like '13' ('' for empty)."""
    atoms = list(range(1, n + 1))
    subsets = []
    for mask in range(1 << n):
        subsets.append(frozenset(a for k, a in enumerate(atoms) if mask >> k & 1))
    return set_lattice(subsets, check=False)


def named_lattice(name):
    """Small worked lattices: 'B2', 'B3', 'B4', 'N5', 'M3', 'chain3'..."""
    if name.startswith("B") and name[1:].isdigit():
        return boolean_lattice(int(name[1:]))
    if name.startswith("chain") and name[5:].isdigit():
        k = int(name[5:])
        els = [str(i) for i in range(k)]
        return lattice_from_poset(build_poset(els, list(zip(els, els[1:]))))
    if name == "N5":
        p = build_poset(
            ["0", "x", "z", "y", "1"],
            [("0", "x"), ("x", "z"), ("z", "1"), ("0", "y"), ("y", "1")],
        )
        return lattice_from_poset(p)
    if name == "M3":
        p = build_poset(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        return lattice_from_poset(p)
    raise ValueError(f"unknown lattice name {name!r}")

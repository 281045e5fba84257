"""Finite partially ordered sets.

A Poset is an ordered tuple of opaque element ids plus a dense boolean
relation matrix ``leq`` with ``leq[i, j]`` meaning element i precedes
element j.  Ids are mapped to dense indices 0..n-1 at the boundary; all
algorithms work in index space.  Instances are immutable after
construction and safe for concurrent reads.
"""

from collections import deque
from functools import cached_property

import numpy as np

from .errors import CycleDetected, NotComparable, NotTransitive, UnknownElement


def _bitrow_to_bools(row, n):
    """Unpack a python-int bitset into a length-n boolean array."""
    nbytes = (n + 7) // 8
    raw = row.to_bytes(nbytes, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n].astype(bool)


class Poset:
    """Immutable finite poset over opaque hashable element ids."""

    __slots__ = ("elements", "leq", "_index", "__dict__")

    def __init__(self, elements, leq):
        elements = tuple(elements)
        index = {a: i for i, a in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("element ids must be distinct")
        leq = np.asarray(leq, dtype=bool)
        n = len(elements)
        if leq.shape != (n, n):
            raise ValueError(f"relation matrix must be {n}x{n}, got {leq.shape}")
        if not leq.flags.writeable:
            self.leq = leq
        else:
            self.leq = leq.copy()
            self.leq.flags.writeable = False
        self.elements = elements
        self._index = index

    # -- basic queries ----------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self._index

    def __repr__(self):
        return f"Poset({len(self.elements)} elements)"

    def index(self, a):
        try:
            return self._index[a]
        except KeyError:
            raise UnknownElement(repr(a)) from None

    def le(self, a, b):
        """True iff a precedes b (reflexively)."""
        return bool(self.leq[self.index(a), self.index(b)])

    def lt(self, a, b):
        return a != b and self.le(a, b)

    # -- derived structure (cached) ---------------------------------------

    @cached_property
    def covers(self):
        """Boolean matrix of the cover relation: covers[i, j] iff j covers i."""
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        via = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        out = lt & ~via
        out.flags.writeable = False
        return out

    @cached_property
    def linear_extension(self):
        """Indices in a topological order (smaller elements first).

        i < j strictly implies |up(i)| > |up(j)|, so sorting by up-set size
        descending is a linear extension; ties are incomparable.
        """
        order = np.argsort(-self.leq.sum(axis=1), kind="stable")
        pos = np.empty(len(self), dtype=np.int64)
        pos[order] = np.arange(len(self))
        if (self.leq & (pos[:, None] > pos[None, :])).any():  # pragma: no cover
            raise AssertionError("linear extension broken")
        return order.tolist()

    @cached_property
    def down_indices(self):
        """down_indices[j] = list of i with i <= j, in index order."""
        cols = [np.flatnonzero(self.leq[:, j]).tolist() for j in range(len(self))]
        return cols

    @cached_property
    def up_indices(self):
        """up_indices[i] = list of j with i <= j, in index order."""
        return [np.flatnonzero(self.leq[i, :]).tolist() for i in range(len(self))]

    @cached_property
    def _minimal_mask(self):
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return ~strict.any(axis=0)

    @cached_property
    def _maximal_mask(self):
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return ~strict.any(axis=1)

    @cached_property
    def bottom_index(self):
        """Index of the unique global minimum, or None."""
        full = np.flatnonzero(self.leq.all(axis=1))
        return int(full[0]) if len(full) == 1 else None

    @cached_property
    def top_index(self):
        full = np.flatnonzero(self.leq.all(axis=0))
        return int(full[0]) if len(full) == 1 else None

    @property
    def bottom(self):
        i = self.bottom_index
        return None if i is None else self.elements[i]

    @property
    def top(self):
        i = self.top_index
        return None if i is None else self.elements[i]

    # -- interval and extremal queries --------------------------------------

    def interval(self, a, b):
        """All c with a <= c <= b, in element order.  Raises NotComparable."""
        i, j = self.index(a), self.index(b)
        if not self.leq[i, j]:
            raise NotComparable(f"{a!r} does not precede {b!r}")
        mask = self.leq[i, :] & self.leq[:, j]
        return [self.elements[k] for k in np.flatnonzero(mask)]

    def extremes(self):
        """Maximal/minimal element sets plus top/bottom when unique."""
        return {
            "maximal": [self.elements[i] for i in np.flatnonzero(self._maximal_mask)],
            "minimal": [self.elements[i] for i in np.flatnonzero(self._minimal_mask)],
            "top": self.top,
            "bottom": self.bottom,
        }

    def down_set(self, a):
        """Principal down-set id(a) as a list of ids in element order."""
        return [self.elements[i] for i in self.down_indices[self.index(a)]]

    def up_set(self, a):
        return [self.elements[i] for i in self.up_indices[self.index(a)]]

    def maximal_of(self, ids):
        """Maximal elements of a finite subset, by scan.  Nonempty input
        always yields at least one."""
        idx = [self.index(a) for a in ids]
        keep = []
        for i in idx:
            if not any(j != i and self.leq[i, j] for j in idx):
                keep.append(i)
        return [self.elements[i] for i in sorted(set(keep))]

    def minimal_of(self, ids):
        idx = [self.index(a) for a in ids]
        keep = [i for i in idx if not any(j != i and self.leq[j, i] for j in idx)]
        return [self.elements[i] for i in sorted(set(keep))]

    def subposet(self, ids):
        """Induced subposet on the given ids, kept in the given order."""
        idx = [self.index(a) for a in ids]
        if len(set(idx)) != len(idx):
            raise ValueError("subposet ids must be distinct")
        sub = self.leq[np.ix_(idx, idx)].copy()
        sub.flags.writeable = False
        return Poset([self.elements[i] for i in idx], sub)

    def comparable_pairs(self):
        """Ordered comparable index pairs (i, j) with i <= j, including i == j."""
        ii, jj = np.nonzero(self.leq)
        return list(zip(ii.tolist(), jj.tolist()))

    def check_axioms(self):
        """Verify reflexivity, antisymmetry, transitivity exactly."""
        n = len(self)
        if not self.leq.diagonal().all():
            raise AssertionError("not reflexive")
        sym = self.leq & self.leq.T
        if (sym != np.eye(n, dtype=bool)).any():
            raise AssertionError("not antisymmetric")
        rows = [0] * n
        for i in range(n):
            r = 0
            for j in np.flatnonzero(self.leq[i, :]).tolist():
                r |= 1 << j
            rows[i] = r
        for i in range(n):
            closed = rows[i]
            for j in np.flatnonzero(self.leq[i, :]).tolist():
                closed |= rows[j]
            if closed != rows[i]:
                raise AssertionError("not transitive")
        return True


def build_poset(elements, pairs, mode="covers"):
    """Build a Poset from ids plus order pairs.

    mode="covers": pairs (a, b) assert a < b; the relation is their
    reflexive-transitive closure.  mode="relation": pairs are the full
    relation, which is verified (reflexive pairs optional) instead of closed.

    Raises CycleDetected, UnknownElement, NotTransitive.
    """
    elements = list(elements)
    index = {a: i for i, a in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("element ids must be distinct")
    n = len(elements)
    edges = []
    for a, b in pairs:
        if a not in index:
            raise UnknownElement(repr(a))
        if b not in index:
            raise UnknownElement(repr(b))
        edges.append((index[a], index[b]))

    if mode == "covers":
        down = _closure_from_edges(n, edges, elements)
    elif mode == "relation":
        down = _verified_relation(n, edges, elements)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    cols = np.empty((n, n), dtype=bool)
    for j in range(n):
        cols[j] = _bitrow_to_bools(down[j], n)
    leq = np.ascontiguousarray(cols.T)
    # reflexivity and antisymmetry always re-checked; cheap and loud
    assert leq.diagonal().all()
    if ((leq & leq.T) != np.eye(n, dtype=bool)).any():  # pragma: no cover
        raise CycleDetected("antisymmetry violated")
    leq.flags.writeable = False
    return Poset(elements, leq)


def _closure_from_edges(n, edges, elements):
    """Reflexive-transitive closure of strict edges (a below b), as down-set bitsets."""
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    seen = set()
    for a, b in edges:
        if a == b or (a, b) in seen:
            continue
        seen.add((a, b))
        succ[a].append(b)
        indeg[b] += 1
    queue = deque(i for i in range(n) if indeg[i] == 0)
    done = 0
    order = []
    while queue:
        i = queue.popleft()
        order.append(i)
        done += 1
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    if done != n:
        stuck = [elements[i] for i in range(n) if indeg[i] > 0]
        raise CycleDetected(f"cover cycle through {stuck[:4]!r}")
    down = [1 << i for i in range(n)]
    for i in order:
        # topological order: down[i] is complete when i is reached
        di = down[i]
        for j in succ[i]:
            down[j] |= di
    return down


def _verified_relation(n, edges, elements):
    """Bitset down-sets from a claimed full relation; verify, do not close."""
    down = [1 << i for i in range(n)]
    up = [1 << i for i in range(n)]
    for a, b in edges:
        down[b] |= 1 << a
        up[a] |= 1 << b
    for a in range(n):
        rest = up[a] & ~(1 << a)
        while rest:
            low = rest & -rest
            b = low.bit_length() - 1
            rest ^= low
            if a != b and (up[b] >> a) & 1:
                raise CycleDetected(f"{elements[a]!r} and {elements[b]!r} precede each other")
            if up[b] & ~up[a]:
                extra = (up[b] & ~up[a]).bit_length() - 1
                raise NotTransitive(
                    f"{elements[a]!r} <= {elements[b]!r} <= {elements[extra]!r} "
                    f"but the pair ({elements[a]!r}, {elements[extra]!r}) is missing"
                )
    return down

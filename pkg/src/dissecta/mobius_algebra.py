"""The Mobius algebra of a finite poset with a bottom element.

Vectors in the free module over the poset's elements, the idempotent
generators u(a) = sum of mu(c, a) c over c <= a, their product, and the
restriction homomorphism onto an induced subposet.  Products are computed
in the idempotent basis: the change of basis is the up-set zeta transform,
where the product is pointwise, and the inverse transform is a Mobius
matrix-vector product.
"""

from functools import lru_cache

import numpy as np

from .errors import BottomNotInSubset, HostMismatch, NoBottom
from .incidence import mobius


class GroupVector:
    """Exact integer vector indexed by the elements of a host poset."""

    __slots__ = ("host", "coeffs")

    def __init__(self, host, coeffs, _trusted=False):
        coeffs = np.asarray(coeffs, dtype=object)
        if coeffs.shape != (len(host),):
            raise ValueError("coefficient vector must match the host size")
        if not _trusted:
            coeffs = coeffs.copy()
            coeffs.flags.writeable = False
        self.host = host
        self.coeffs = coeffs

    @classmethod
    def zero(cls, host):
        c = np.zeros(len(host), dtype=object)
        c.flags.writeable = False
        return cls(host, c, _trusted=True)

    @classmethod
    def unit(cls, host, a):
        c = np.zeros(len(host), dtype=object)
        c[host.index(a)] = 1
        c.flags.writeable = False
        return cls(host, c, _trusted=True)

    @classmethod
    def from_dict(cls, host, mapping):
        c = np.zeros(len(host), dtype=object)
        for a, v in mapping.items():
            c[host.index(a)] = int(v)
        c.flags.writeable = False
        return cls(host, c, _trusted=True)

    def __getitem__(self, a):
        return self.coeffs[self.host.index(a)]

    def as_dict(self, keep_zero=False):
        return {
            a: v
            for a, v in zip(self.host.elements, self.coeffs)
            if keep_zero or v != 0
        }

    def _require_same_host(self, other):
        if not isinstance(other, GroupVector):
            raise TypeError("expected a GroupVector")
        if self.host is not other.host:
            raise HostMismatch("vectors over different posets")

    def __add__(self, other):
        self._require_same_host(other)
        c = self.coeffs + other.coeffs
        c.flags.writeable = False
        return GroupVector(self.host, c, _trusted=True)

    def __sub__(self, other):
        self._require_same_host(other)
        c = self.coeffs - other.coeffs
        c.flags.writeable = False
        return GroupVector(self.host, c, _trusted=True)

    def __neg__(self):
        c = -self.coeffs
        c.flags.writeable = False
        return GroupVector(self.host, c, _trusted=True)

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        c = self.coeffs * k
        c.flags.writeable = False
        return GroupVector(self.host, c, _trusted=True)

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, GroupVector):
            return NotImplemented
        return self.host is other.host and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return object.__hash__(self)

    def is_zero(self):
        return all(v == 0 for v in self.coeffs)

    def __repr__(self):
        terms = ", ".join(f"{a!r}: {v}" for a, v in self.as_dict().items())
        return f"GroupVector({{{terms}}})"


def _require_bottom(p):
    if p.bottom_index is None:
        raise NoBottom("poset has no bottom element")


@lru_cache(maxsize=128)
def _leq_object(p):
    out = p.leq.astype(object)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=256)
def induced_subposet(p, members):
    """Induced subposet on a tuple of ids, cached so repeated restrictions
    share one host (and one Mobius cache)."""
    if members == p.elements:
        return p
    return p.subposet(members)


def mobius_idempotent(p, a):
    """u(a) = sum over c <= a of mu(c, a) c.  Summing u over the down-set
    of a recovers the unit vector of a (Mobius inversion)."""
    _require_bottom(p)
    col = mobius(p).values[:, p.index(a)].copy()
    col.flags.writeable = False
    return GroupVector(p, col, _trusted=True)


def to_idempotent_basis(x):
    """Coordinates of x in the u-basis: the up-set sums of its coefficients."""
    return _leq_object(x.host) @ x.coeffs


def from_idempotent_basis(p, xi):
    """Inverse change of basis: coefficients from u-basis coordinates."""
    c = mobius(p).values @ np.asarray(xi, dtype=object)
    c.flags.writeable = False
    return GroupVector(p, c, _trusted=True)


def mobius_product(x, y):
    """Product of the Mobius algebra, extended bilinearly from
    a . b = sum of u(c) over common lower bounds c of a and b.

    On a lattice host the product of two element units is the unit of
    their meet.  Computed as a pointwise product in the u-basis.
    """
    x._require_same_host(y)
    _require_bottom(x.host)
    xi = to_idempotent_basis(x) * to_idempotent_basis(y)
    return from_idempotent_basis(x.host, xi)


def restrict_to_subset(x, members):
    """Restriction homomorphism onto the induced subposet of the given ids.

    x is expanded in the u-basis, coordinates outside the subset are
    dropped, and the result is reassembled in the idempotent basis of the
    induced subposet.  Multiplicative; the bottom must be kept.
    """
    p = x.host
    _require_bottom(p)
    members = tuple(members)
    if p.bottom not in members:
        raise BottomNotInSubset("the restriction subset must contain the bottom element")
    sub = induced_subposet(p, members)
    xi = to_idempotent_basis(x)
    xi_sub = np.array([xi[p.index(a)] for a in members], dtype=object)
    return from_idempotent_basis(sub, xi_sub)

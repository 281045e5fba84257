"""The incidence algebra of a finite poset over the integers.

Functions on ordered comparable pairs with the convention f(a, b) = 0 for
a not below b, stored densely, so convolution is a matrix product.  All
arithmetic is exact: values live in object-dtype arrays of python ints; a
64-bit fast path is taken only when an a-priori bound proves it cannot
overflow.
"""

from functools import lru_cache

import numpy as np

from .errors import HostMismatch

_INT64_SAFE = 1 << 62


def _as_object_ints(arr):
    out = arr.astype(object)
    out.flags.writeable = False
    return out


class IncidenceFunction:
    """Integer function on comparable pairs of a fixed host poset."""

    __slots__ = ("host", "values")

    def __init__(self, host, values, _trusted=False):
        values = np.asarray(values, dtype=object)
        if values.shape != (len(host), len(host)):
            raise ValueError("values must be a square matrix over the host")
        if not _trusted:
            if np.any(values[~host.leq] != 0):
                raise ValueError("nonzero value on a non-comparable pair")
            values = values.copy()
            values.flags.writeable = False
        self.host = host
        self.values = values

    def __call__(self, a, b):
        return self.values[self.host.index(a), self.host.index(b)]

    def __eq__(self, other):
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return self.host is other.host and bool(np.array_equal(self.values, other.values))

    def __hash__(self):
        return object.__hash__(self)

    def __mul__(self, other):
        return convolve(self, other)

    def max_abs(self):
        flat = self.values.ravel()
        return max((abs(v) for v in flat), default=0)


def delta(p):
    """Convolution identity: 1 on the diagonal."""
    vals = np.zeros((len(p), len(p)), dtype=object)
    for i in range(len(p)):
        vals[i, i] = 1
    vals.flags.writeable = False
    return IncidenceFunction(p, vals, _trusted=True)


def zeta(p):
    """1 on every comparable pair."""
    vals = np.where(p.leq, 1, 0).astype(object)
    vals.flags.writeable = False
    return IncidenceFunction(p, vals, _trusted=True)


@lru_cache(maxsize=128)
def mobius(p):
    """Mobius function of the poset: the convolution inverse of zeta.

    mu(a, a) = 1 and mu(a, b) = -sum of mu over [a, b) for a < b.  Computed
    once per comparable pair by a reverse-topological row recursion
    (equivalently mu(a, b) = -sum over c in (a, b] of mu(c, b), the dual
    recursion); results are cached per poset.
    """
    n = len(p)
    vals = np.zeros((n, n), dtype=object)
    strict_up = [
        [j for j in p.up_indices[i] if j != i] for i in range(n)
    ]
    for i in reversed(p.linear_extension):
        ups = strict_up[i]
        if ups:
            row = -vals[ups].sum(axis=0)
        else:
            row = np.zeros(n, dtype=object)
        row[i] = row[i] + 1
        vals[i] = row
    vals.flags.writeable = False
    return IncidenceFunction(p, vals, _trusted=True)


def convolve(f, g):
    """(f*g)(a,b) = sum over c in [a,b] of f(a,c) g(c,b); delta is the identity."""
    if not isinstance(f, IncidenceFunction) or not isinstance(g, IncidenceFunction):
        raise TypeError("convolve expects two incidence functions")
    if f.host is not g.host:
        raise HostMismatch("incidence functions on different posets")
    n = len(f.host)
    mf, mg = f.max_abs(), g.max_abs()
    if mf and mg and n * mf * mg < _INT64_SAFE:
        prod = f.values.astype(np.int64) @ g.values.astype(np.int64)
        vals = prod.astype(object)
    else:
        vals = f.values @ g.values
    vals.flags.writeable = False
    return IncidenceFunction(f.host, vals, _trusted=True)


def zeta_transform(p, f, direction="down"):
    """Accumulate f over down-sets (g(x) = sum_{c<=x} f(c)) or up-sets."""
    sets = p.down_indices if direction == "down" else p.up_indices
    if direction not in ("down", "up"):
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    out = {}
    for k, a in enumerate(p.elements):
        acc = None
        for i in sets[k]:
            v = f[p.elements[i]]
            acc = v if acc is None else acc + v
        out[a] = acc
    return out

def mobius_invert(p, g, direction="down"):
    """Invert the zeta transform.

    direction="down" returns f with g(x) = sum_{c<=x} f(c), i.e.
    f(x) = sum_{c<=x} g(c) mu(c, x); direction="up" is the dual.  Values may
    be ints or anything supporting + and integer scaling (e.g. numpy
    vectors).  Round trip with zeta_transform is the identity.
    """
    if direction not in ("down", "up"):
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    mu = mobius(p).values
    out = {}
    for k, a in enumerate(p.elements):
        if direction == "down":
            terms = ((p.elements[i], mu[i, k]) for i in p.down_indices[k])
        else:
            terms = ((p.elements[i], mu[k, i]) for i in p.up_indices[k])
        acc = None
        for el, m in terms:
            if m == 0:
                continue
            v = g[el] * m
            acc = v if acc is None else acc + v
        out[a] = acc if acc is not None else 0 * g[a]
    return out

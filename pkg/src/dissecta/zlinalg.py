"""Exact integer linear algebra: Hermite and Smith normal forms, subgroup
membership, quotient invariants.

Matrices are lists of rows of python ints, so arithmetic never overflows.
Pivots are chosen by smallest nonzero magnitude to limit entry growth;
correctness does not depend on the choice.  Transform matrices are tracked
as elementary row/column operations, hence unimodular by construction; the
public entry points also re-verify the reconstruction identity.
"""

from dataclasses import dataclass

from .errors import DimensionMismatch


def _copy_matrix(mat):
    return [[int(v) for v in row] for row in mat]


def _freeze(mat):
    return tuple(tuple(row) for row in mat)


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"{len(a[0])} columns vs {len(b)} rows")
    cols = len(b[0]) if b else 0
    return [
        [sum(ra[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for ra in a
    ]


def det(mat):
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = _copy_matrix(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class NormalForm:
    """kind 'hermite': u @ a == d, row echelon, positive pivots, entries
    above each pivot reduced.  kind 'smith': u @ a @ v == d diagonal with
    d1 | d2 | ...  u (and v) have determinant +-1."""

    kind: str
    d: tuple
    u: tuple
    v: tuple = None

    @property
    def diagonal(self):
        return [self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))]


def _pivot_row(a, rows, col):
    """Row index among `rows` minimizing |a[i][col]| over nonzero entries."""
    best = None
    for i in rows:
        v = a[i][col]
        if v and (best is None or abs(v) < abs(a[best][col])):
            best = i
    return best


def hermite_normal_form(mat, transform=True):
    """Row-style HNF.  Returns NormalForm with d in echelon form."""
    a = _copy_matrix(mat)
    m = len(a)
    n = len(a[0]) if m else 0
    u = _identity(m) if transform else None
    r = 0
    for col in range(n):
        while True:
            piv = _pivot_row(a, range(r, m), col)
            if piv is None:
                break
            if piv != r:
                a[r], a[piv] = a[piv], a[r]
                if transform:
                    u[r], u[piv] = u[piv], u[r]
            clean = True
            for i in range(r + 1, m):
                if a[i][col]:
                    q = a[i][col] // a[r][col]
                    _row_sub(a, u, i, r, q)
                    if a[i][col]:
                        clean = False
            if clean:
                break
        if r < m and a[r][col]:
            if a[r][col] < 0:
                a[r] = [-v for v in a[r]]
                if transform:
                    u[r] = [-v for v in u[r]]
            for i in range(r):
                q = a[i][col] // a[r][col]
                _row_sub(a, u, i, r, q)
            r += 1
            if r == m:
                break
    return NormalForm("hermite", _freeze(a), _freeze(u) if transform else None)


def _row_sub(a, u, i, r, q):
    if q == 0:
        return
    ar, ai = a[r], a[i]
    a[i] = [x - q * y for x, y in zip(ai, ar)]
    if u is not None:
        ur, ui = u[r], u[i]
        u[i] = [x - q * y for x, y in zip(ui, ur)]


def smith_normal_form(mat, transform=True):
    """Diagonal d with d1 | d2 | ... and u @ a @ v == d."""
    a = _copy_matrix(mat)
    m = len(a)
    n = len(a[0]) if m else 0
    u = _identity(m) if transform else None
    v = _identity(n) if transform else None
    t = 0
    while True:
        pos = _smallest_entry(a, t, m, n)
        if pos is None:
            break
        i0, j0 = pos
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
            if transform:
                u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            _col_swap(a, v, t, j0)
        while True:
            # clear column t with row ops, re-pivoting on remainders
            again = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    _row_sub(a, u, i, t, q)
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        if transform:
                            u[t], u[i] = u[i], u[t]
                        again = True
            if again:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    _col_sub(a, v, j, t, q)
                    if a[t][j]:
                        _col_swap(a, v, t, j)
                        again = True
            if again:
                continue
            break
        # divisibility: fold any non-divisible remaining entry into column t
        culprit = None
        p = a[t][t]
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % p:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            _row_sub(a, u, t, culprit, -1)  # add culprit row onto row t
            continue
        if p < 0:
            a[t] = [-x for x in a[t]]
            if transform:
                u[t] = [-x for x in u[t]]
        t += 1
        if t == min(m, n):
            break
    return NormalForm("smith", _freeze(a), _freeze(u) if transform else None,
                      _freeze(v) if transform else None)


def _smallest_entry(a, t, m, n):
    best = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            if row[j] and (best is None or abs(row[j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _col_swap(a, v, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]
    if v is not None:
        for row in v:
            row[i], row[j] = row[j], row[i]


def _col_sub(a, v, j, t, q):
    """column j -= q * column t"""
    if q == 0:
        return
    for row in a:
        row[j] -= q * row[t]
    if v is not None:
        for row in v:
            row[j] -= q * row[t]


def normal_form(mat, kind):
    """Public entry point: compute and self-verify the requested form."""
    mat = _copy_matrix(mat)
    if kind == "hermite":
        nf = hermite_normal_form(mat)
        recon = mat_mul([list(r) for r in nf.u], mat) if mat else []
        if _freeze(recon) != nf.d:  # pragma: no cover
            raise AssertionError("hermite reconstruction failed")
        if mat and det([list(r) for r in nf.u]) not in (1, -1):  # pragma: no cover
            raise AssertionError("hermite transform not unimodular")
        return nf
    if kind == "smith":
        nf = smith_normal_form(mat)
        if mat:
            recon = mat_mul(mat_mul([list(r) for r in nf.u], mat), [list(r) for r in nf.v])
            if _freeze(recon) != nf.d:  # pragma: no cover
                raise AssertionError("smith reconstruction failed")
            if det([list(r) for r in nf.u]) not in (1, -1):  # pragma: no cover
                raise AssertionError("smith row transform not unimodular")
            if nf.v and det([list(r) for r in nf.v]) not in (1, -1):  # pragma: no cover
                raise AssertionError("smith column transform not unimodular")
        return nf
    raise ValueError(f"kind must be 'hermite' or 'smith', got {kind!r}")


def invariant_factors(mat):
    """Nonzero Smith diagonal entries (no transforms, rows pre-reduced)."""
    if not mat:
        return []
    span = RowSpan(len(mat[0]))
    for row in mat:
        span.add(row)
    basis = span.rows()
    if not basis:
        return []
    nf = smith_normal_form(basis, transform=False)
    return [x for x in nf.diagonal if x != 0]


def subgroup_membership(generators, vector):
    """Decide whether vector is an integer combination of the generator rows.

    Returns (member, coefficients); when member, coefficients @ generators
    reproduces the vector exactly.
    """
    vector = [int(x) for x in vector]
    n = len(vector)
    gens = _copy_matrix(generators)
    for row in gens:
        if len(row) != n:
            raise DimensionMismatch(f"generator of length {len(row)}, vector of length {n}")
    if not gens:
        return (all(x == 0 for x in vector), [] if all(x == 0 for x in vector) else None)
    nf = hermite_normal_form(gens)
    d = [list(r) for r in nf.d]
    pivots = []
    for r, row in enumerate(d):
        cols = [j for j, x in enumerate(row) if x]
        if cols:
            pivots.append((r, cols[0]))
    x = list(vector)
    qs = [0] * len(d)
    for r, pc in pivots:
        if x[pc] == 0:
            continue
        if x[pc] % d[r][pc]:
            return (False, None)
        q = x[pc] // d[r][pc]
        qs[r] = q
        x = [xv - q * dv for xv, dv in zip(x, d[r])]
    if any(xv != 0 for xv in x):
        return (False, None)
    coeffs = [
        sum(qs[r] * nf.u[r][k] for r in range(len(d)))
        for k in range(len(gens))
    ]
    return (True, coeffs)


def quotient_invariants(generators, ambient_rank):
    """Free rank and torsion of Z^n modulo the row span of the generators."""
    gens = _copy_matrix(generators)
    for row in gens:
        if len(row) != ambient_rank:
            raise DimensionMismatch(
                f"generator of length {len(row)}, ambient rank {ambient_rank}"
            )
    factors = invariant_factors(gens) if gens else []
    return {
        "free_rank": ambient_rank - len(factors),
        "torsion": [f for f in factors if f > 1],
    }


class RowSpan:
    """Incremental echelon basis of an integer row lattice.

    Rows are inserted one at a time and kept triangular, so membership
    tests against the same span reuse the reduced basis.
    """

    __slots__ = ("n", "_rows", "_pivot_of_col")

    def __init__(self, n):
        self.n = n
        self._rows = []
        self._pivot_of_col = {}

    def rows(self):
        return [list(r) for r in self._rows]

    @property
    def rank(self):
        return len(self._rows)

    def _reduce(self, vec):
        vec = list(vec)
        for j in range(self.n):
            if not vec[j]:
                continue
            r = self._pivot_of_col.get(j)
            if r is None:
                return vec
            row = self._rows[r]
            if vec[j] % row[j]:
                return vec
            q = vec[j] // row[j]
            for k in range(j, self.n):
                vec[k] -= q * row[k]
        return vec

    def add(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        vec = [int(x) for x in vec]
        if len(vec) != self.n:
            raise DimensionMismatch(f"vector of length {len(vec)}, span over Z^{self.n}")
        changed = False
        for j in range(self.n):
            if not vec[j]:
                continue
            r = self._pivot_of_col.get(j)
            if r is None:
                self._insert(vec, j)
                return True
            row = self._rows[r]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [x - q * y for x, y in zip(vec, row)]
            else:
                # the gcd becomes the new pivot; carry on with the remainder row
                x, y, g = _xgcd(a, b)
                self._rows[r] = [x * p + y * q2 for p, q2 in zip(row, vec)]
                vec = [(a // g) * q2 - (b // g) * p for p, q2 in zip(row, vec)]
                changed = True
        return changed

    def _insert(self, vec, pivot_col):
        if vec[pivot_col] < 0:
            vec = [-x for x in vec]
        pos = 0
        while pos < len(self._rows) and _pivot_col(self._rows[pos]) < pivot_col:
            pos += 1
        self._rows.insert(pos, vec)
        self._pivot_of_col = {_pivot_col(r): i for i, r in enumerate(self._rows)}

    def contains(self, vec):
        vec = [int(x) for x in vec]
        if len(vec) != self.n:
            raise DimensionMismatch(f"vector of length {len(vec)}, span over Z^{self.n}")
        return all(x == 0 for x in self._reduce(vec))


def _pivot_col(row):
    for j, x in enumerate(row):
        if x:
            return j
    return len(row)


def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g

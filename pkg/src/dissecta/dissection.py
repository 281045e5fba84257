"""Arrangement dissection: chamber statistics from Mobius sums over flat
posets, induced arrangements, face counts, f- and Mobius polynomials, and
a finite set-model oracle for the underlying summation identity.

Euler characteristics are user-supplied data attached to flats; nothing
here computes topology.  All results are exact (ints, Fractions, integer
polynomials).
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    ChambersNotPartition,
    DimNotMonotone,
    InvalidRefinement,
    MissingChi,
    MissingDim,
    NoUniqueTop,
    ProfileMismatch,
    UnknownFlat,
    ZeroChamberChi,
)
from .incidence import mobius
from .polynomial import Poly, Poly2
from .poset import build_poset


class ArrangementPoset:
    """Flat poset with designated top, per-flat Euler characteristic, and
    optional dimension labels."""

    __slots__ = ("poset", "top", "chi", "dim", "hyperplanes")

    def __init__(self, poset, chi, dim=None, hyperplanes=None, top=None):
        computed = poset.top
        if computed is None:
            raise NoUniqueTop("the flat poset needs a unique maximal element")
        if top is not None and top != computed:
            raise NoUniqueTop(f"declared top {top!r} is not the unique maximum {computed!r}")
        missing = [a for a in poset.elements if a not in chi]
        if missing:
            raise MissingChi(f"no Euler characteristic for {missing[:4]!r}")
        bad = [a for a in poset.elements if not isinstance(chi[a], int)]
        if bad:
            raise MissingChi(f"non-integer Euler characteristic at {bad[:4]!r}")
        if dim is not None:
            absent = [a for a in poset.elements if a not in dim]
            if absent:
                raise MissingDim(f"dimension labels present but missing for {absent[:4]!r}")
            neg = [a for a in poset.elements if not isinstance(dim[a], int) or dim[a] < 0]
            if neg:
                raise MissingDim(f"dimensions must be integers >= 0, bad at {neg[:4]!r}")
            dvec = np.array([dim[a] for a in poset.elements], dtype=np.int64)
            bad_pairs = poset.leq & (dvec[:, None] > dvec[None, :])
            if bad_pairs.any():
                i, j = map(int, np.argwhere(bad_pairs)[0])
                a, b = poset.elements[i], poset.elements[j]
                raise DimNotMonotone(f"{a!r} below {b!r} but dim {dim[a]} > {dim[b]}")
        self.poset = poset
        self.top = computed
        self.chi = {a: chi[a] for a in poset.elements}
        self.dim = None if dim is None else {a: dim[a] for a in poset.elements}
        self.hyperplanes = None if hyperplanes is None else frozenset(hyperplanes)

    def __len__(self):
        return len(self.poset)

    def rank_of(self, a):
        if self.dim is None:
            raise MissingDim("rank needs dimension labels")
        return self.dim[self.top] - self.dim[a]

    @property
    def rank(self):
        """Largest flat rank (corank of the lowest-dimensional flat)."""
        if self.dim is None:
            raise MissingDim("rank needs dimension labels")
        return max(self.rank_of(a) for a in self.poset.elements)


def load_arrangement(doc):
    """Validated ArrangementPoset from a parsed arrangement document."""
    mode = "covers" if "covers" in doc else "relation"
    pairs = doc.get("covers", doc.get("relation", []))
    p = build_poset(doc["elements"], pairs, mode=mode)
    attrs = doc.get("attrs", {})
    chi = {a: v["chi"] for a, v in attrs.items() if "chi" in v}
    no_chi = [a for a in p.elements if a not in chi]
    if no_chi:
        raise MissingChi(f"no Euler characteristic for {no_chi[:4]!r}")
    dims = {a: v["dim"] for a, v in attrs.items() if "dim" in v}
    if dims and len(dims) != len(p):
        raise MissingDim(
            f"dimension labels present but missing for "
            f"{[a for a in p.elements if a not in dims][:4]!r}"
        )
    return ArrangementPoset(
        p,
        chi,
        dim=dims or None,
        hyperplanes=doc.get("hyperplanes"),
        top=doc.get("top"),
    )


def chamber_statistic(ap, chamber_chi=None):
    """Mobius-weighted Euler sum over all flats: sum of mu(X, top) chi(X).

    With a uniform chamber characteristic c != 0 the chamber count is
    sum / c, returned as an exact Fraction.
    """
    p = ap.poset
    mu = mobius(p).values
    t = p.index(ap.top)
    total = 0
    for i, a in enumerate(p.elements):
        m = mu[i, t]
        if m:
            total += m * ap.chi[a]
    out = {"sum": int(total)}
    if chamber_chi is not None:
        if chamber_chi == 0:
            raise ZeroChamberChi("chamber Euler characteristic must be nonzero")
        out["count"] = Fraction(total, chamber_chi)
    return out


def induced(ap, flat):
    """Arrangement induced on a flat: the principal down-set with that top.

    Mobius values of the sub-poset agree with the ambient ones on the
    retained pairs, so per-flat dissection sums can also be read off the
    ambient Mobius matrix.
    """
    if flat not in ap.poset:
        raise UnknownFlat(repr(flat))
    ids = ap.poset.down_set(flat)
    sub = ap.poset.subposet(ids)
    chi = {a: ap.chi[a] for a in ids}
    dim = None if ap.dim is None else {a: ap.dim[a] for a in ids}
    hyp = None if ap.hyperplanes is None else ap.hyperplanes & set(ids)
    return ArrangementPoset(sub, chi, dim=dim, hyperplanes=hyp)


@dataclass(frozen=True)
class FaceProfile:
    """Uniform Euler characteristics by dimension: c_i for i-dimensional
    faces (all nonzero), optionally l_k overriding flat characteristics."""

    chamber_chi_by_dim: dict
    flat_chi_by_dim: dict = None

    def __post_init__(self):
        for i, c in self.chamber_chi_by_dim.items():
            if c == 0:
                raise ZeroChamberChi(f"face characteristic for dimension {i} is zero")

    @classmethod
    def alternating(cls, max_dim):
        return cls({i: (-1) ** i for i in range(max_dim + 1)})

    def chamber_chi(self, i):
        c = self.chamber_chi_by_dim.get(i)
        if c is None:
            raise ZeroChamberChi(f"no face characteristic for dimension {i}")
        return c

    def flat_chi(self, ap, a):
        if self.flat_chi_by_dim is None:
            return ap.chi[a]
        k = ap.dim[a]
        if k not in self.flat_chi_by_dim:
            raise MissingChi(f"profile has no flat characteristic for dimension {k}")
        return self.flat_chi_by_dim[k]


def _flat_sums(ap, profile):
    """Per-flat dissection sums: for each flat Y, sum over X <= Y of
    mu(X, Y) chi(X)."""
    if ap.dim is None:
        raise MissingDim("face operations need dimension labels")
    p = ap.poset
    mu = mobius(p).values
    sums = {}
    for j, y in enumerate(p.elements):
        s = 0
        for i in p.down_indices[j]:
            m = mu[i, j]
            if m:
                s += m * profile.flat_chi(ap, p.elements[i])
        sums[y] = s
    return sums


def face_counts(ap, profile):
    """Face numbers by dimension: each flat Y contributes its dissection
    sum divided by the face characteristic of dim Y."""
    sums = _flat_sums(ap, profile)
    out = {}
    for y, s in sums.items():
        i = ap.dim[y]
        out[i] = out.get(i, 0) + Fraction(s, profile.chamber_chi(i))
    return {i: (int(v) if v.denominator == 1 else v) for i, v in sorted(out.items())}


def f_polynomial(ap, profile, convention="dim"):
    """Face-count generating polynomial.

    convention="dim": sum of f_k x^(n-k) over face dimension k.
    convention="codim": sum of f_k x^k.
    convention="literal": the term-by-term double sum attaching x^(n - dim X)
    to the flat X inside each per-flat dissection sum; this is the form the
    polynomial identities hold in.
    """
    if ap.dim is None:
        raise MissingDim("face operations need dimension labels")
    n = ap.dim[ap.top]
    if convention in ("dim", "codim"):
        fc = face_counts(ap, profile)
        terms = {}
        for k, v in fc.items():
            e = n - k if convention == "dim" else k
            terms[e] = terms.get(e, 0) + Fraction(v)
        return Poly(terms)
    if convention == "literal":
        p = ap.poset
        mu = mobius(p).values
        terms = {}
        for j, y in enumerate(p.elements):
            ci = profile.chamber_chi(ap.dim[y])
            for i in p.down_indices[j]:
                m = mu[i, j]
                if m:
                    x = p.elements[i]
                    e = n - ap.dim[x]
                    terms[e] = terms.get(e, 0) + Fraction(m * profile.flat_chi(ap, x), ci)
        return Poly(terms)
    raise ValueError(f"unknown convention {convention!r}")


def mobius_polynomial(ap):
    """Sum over comparable flat pairs of mu(X, Y) x^rk(X) y^(rk A - rk Y)."""
    if ap.dim is None:
        raise MissingDim("the Mobius polynomial needs dimension labels")
    p = ap.poset
    mu = mobius(p).values
    rk_a = ap.rank
    terms = {}
    for j, y in enumerate(p.elements):
        ey = rk_a - ap.rank_of(y)
        for i in p.down_indices[j]:
            m = mu[i, j]
            if m:
                key = (ap.rank_of(p.elements[i]), ey)
                terms[key] = terms.get(key, 0) + m
    return Poly2(terms)


def identity_report(ap, which):
    """Check one of the two closed-form face-polynomial identities.

    which="alternating": requires chi(X) = (-1)^dim X on every flat; the
    literal f-polynomial must equal (-1)^rk * M(-x, -1).
    which="spherical": requires chi(X) = 2 for even-dimensional flats and 0
    otherwise; the literal f-polynomial must equal
    (-1)^(n-rk) * (M(x, -1) + gamma * M(-x, -1)) with gamma = +1 for even
    ambient dimension, -1 otherwise.

    Preconditions are verified, not assumed (ProfileMismatch).  The report
    also carries lhs(1), which must be the total face count.
    """
    if ap.dim is None:
        raise MissingDim("identity checks need dimension labels")
    n = ap.dim[ap.top]
    rk = ap.rank
    if which == "alternating":
        for a in ap.poset.elements:
            want = (-1) ** ap.dim[a]
            if ap.chi[a] != want:
                raise ProfileMismatch(
                    f"chi({a!r}) = {ap.chi[a]} but the alternating pattern needs {want}"
                )
    elif which == "spherical":
        for a in ap.poset.elements:
            want = 2 if ap.dim[a] % 2 == 0 else 0
            if ap.chi[a] != want:
                raise ProfileMismatch(
                    f"chi({a!r}) = {ap.chi[a]} but the spherical pattern needs {want}"
                )
    else:
        raise ValueError(f"which must be 'alternating' or 'spherical', got {which!r}")
    profile = FaceProfile.alternating(n)
    lhs = f_polynomial(ap, profile, "literal")
    mp = mobius_polynomial(ap)
    if which == "alternating":
        rhs = mp.substitute(x_sign=-1, y=-1).scale((-1) ** rk)
    else:
        gamma = 1 if n % 2 == 0 else -1
        rhs = (mp.substitute(x_sign=1, y=-1) + mp.substitute(x_sign=-1, y=-1).scale(gamma))
        rhs = rhs.scale((-1) ** (n - rk))
    fc = face_counts(ap, profile)
    total = sum(fc.values())
    return {
        "which": which,
        "lhs": lhs,
        "rhs": rhs,
        "equal": lhs == rhs,
        "lhs_at_one": lhs(1),
        "total_faces": int(total) if Fraction(total).denominator == 1 else total,
    }


# -- finite set models ------------------------------------------------------


@dataclass(frozen=True)
class SetModel:
    """Concrete finite model: ground set, subspaces, a meet-refinement of
    the intersections (which must include the ground set itself), and the
    chambers partitioning the complement of the subspace union."""

    ground: tuple
    subspaces: tuple
    refinement: tuple
    chambers: tuple

    @classmethod
    def build(cls, ground, subspaces, refinement, chambers):
        return cls(
            tuple(ground),
            tuple(frozenset(s) for s in subspaces),
            tuple(dict.fromkeys(frozenset(s) for s in refinement)),
            tuple(frozenset(s) for s in chambers),
        )


def _is_union_of(target, family):
    acc = frozenset()
    for y in family:
        if y <= target:
            acc |= y
    return acc == target


def validate_set_model(m):
    """Chamber-partition and meet-refinement conditions, checked exactly."""
    ground = frozenset(m.ground)
    if len(m.ground) != len(ground):
        raise ChambersNotPartition("ground points must be distinct")
    union_a = frozenset().union(*m.subspaces) if m.subspaces else frozenset()
    for s in m.subspaces:
        if not s <= ground:
            raise InvalidRefinement(f"subspace {sorted(s, key=repr)} leaves the ground set")
        if s == ground:
            # a subspace covering everything leaves the ground set
            # join-irreducible in the generated lattice and the dissection
            # identity void
            raise InvalidRefinement("a subspace must be a proper subset of the ground set")
    covered = frozenset()
    for c in m.chambers:
        if not c or not c <= ground:
            raise ChambersNotPartition("chambers must be nonempty subsets of the ground set")
        if c & union_a:
            raise ChambersNotPartition("a chamber meets a subspace")
        if c & covered:
            raise ChambersNotPartition("chambers overlap")
        covered |= c
    if covered != ground - union_a:
        raise ChambersNotPartition("chambers must cover the subspace complement")
    ref = list(m.refinement)
    if ground not in ref:
        raise InvalidRefinement("the refinement must contain the ground set")
    for x in ref:
        if not x:
            raise InvalidRefinement("refinement elements must be nonempty")
        if x != ground and not x <= union_a:
            raise InvalidRefinement(
                f"refinement element {sorted(x, key=repr)} leaves the subspace union"
            )
    if union_a and not _is_union_of(union_a, ref):
        raise InvalidRefinement("the refinement does not cover the subspace union")
    # every nonempty intersection of subspaces decomposes into refinement parts
    inters = {ground}
    for s in m.subspaces:
        inters |= {x & s for x in inters}
    for x in inters:
        if x and not _is_union_of(x, ref):
            raise InvalidRefinement(
                f"intersection {sorted(x, key=repr)} is not a union of refinement elements"
            )
    # pairwise suffices: intersections of unions split into pairwise pieces
    for i, x in enumerate(ref):
        for y in ref[i + 1:]:
            z = x & y
            if z and not _is_union_of(z, ref):
                raise InvalidRefinement(
                    f"refinement intersection {sorted(z, key=repr)} is not a union "
                    "of refinement elements"
                )
    return True


def _weight_fn(m, weights):
    if weights is None:
        return len
    table = dict(weights)
    missing = [t for t in m.ground if t not in table]
    if missing:
        raise InvalidRefinement(f"weights missing for points {missing[:4]!r}")
    return lambda s: sum(table[t] for t in s)


def set_oracle_check(m, weights=None, materialize_limit=12):
    """Evaluate both sides of the dissection identity on a set model.

    Left side: the valuation summed over chambers.  Right side: the
    Mobius-weighted sum over the refinement poset with an adjoined empty
    set.  The valuation is cardinality, or the point-weight table given
    (weighted counting; a valuation by construction, vanishing on the
    empty set).

    For ground sets within `materialize_limit`, the distributive lattice
    generated by refinement and chambers is materialized to re-verify that
    every join-irreducible is an original generator or the empty set.
    """
    validate_set_model(m)
    f = _weight_fn(m, weights)
    ground = frozenset(m.ground)
    empty = frozenset()
    lhs = sum(f(c) for c in m.chambers)

    elements = list(m.refinement)
    if empty not in elements:
        elements = elements + [empty]
    pairs = [(x, y) for x in elements for y in elements if x <= y]
    p = build_poset(elements, pairs, mode="relation")
    mu = mobius(p).values
    t = p.index(ground)
    rhs = 0
    for i, x in enumerate(elements):
        mv = mu[i, t]
        if mv and x:
            rhs += mv * f(x)

    report = {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs,
              "d_size": None, "ji_contained": None}
    if len(m.ground) <= materialize_limit:
        d_masks, gen_masks, bit = _distributive_closure(m)
        report["d_size"] = len(d_masks)
        report["ji_contained"] = _irreducibles_among_generators(d_masks, gen_masks)
    return report


def _distributive_closure(m):
    """All unions of refinement elements and chambers (plus the empty set),
    as bitmasks; intersection-closure is re-checked on small instances."""
    bit = {t: k for k, t in enumerate(m.ground)}
    def mask(s):
        return sum(1 << bit[t] for t in s)
    gen_masks = {mask(s) for s in tuple(m.refinement) + tuple(m.chambers)}
    closed = {0} | gen_masks
    frontier = list(closed)
    while frontier:
        new = []
        for x in frontier:
            for g in gen_masks:
                u = x | g
                if u not in closed:
                    closed.add(u)
                    new.append(u)
        frontier = new
    if len(closed) <= 512:
        members = list(closed)
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if x & y not in closed:
                    raise InvalidRefinement(
                        "generated set family is not intersection-closed"
                    )
    return closed, gen_masks, bit


def _irreducibles_among_generators(d_masks, gen_masks):
    """Every member that is not a generator (or empty) must be the union of
    the generators strictly inside it."""
    for x in d_masks:
        if x == 0 or x in gen_masks:
            continue
        acc = 0
        for g in gen_masks:
            if g != x and (g & x) == g:
                acc |= g
        if acc != x:
            return False
    return True

"""Shared builders and seeded random generators for the test suite."""

from dissecta.lattice import (
    lattice_from_poset,
    set_lattice,
    union_intersection_closure,
)
from dissecta.dissection import SetModel
from dissecta.poset import build_poset


def diamond():
    """B2 with readable ids."""
    p = build_poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    return lattice_from_poset(p)


def chain(k):
    els = [str(i) for i in range(k)]
    return lattice_from_poset(build_poset(els, list(zip(els, els[1:]))))


def sphere_doc():
    return {
        "elements": ["S2", "H1", "H2", "H3", "H4", "P13", "P23"],
        "covers": [["P13", "H1"], ["P13", "H3"], ["P23", "H2"], ["P23", "H3"],
                   ["H1", "S2"], ["H2", "S2"], ["H3", "S2"], ["H4", "S2"]],
        "top": "S2",
        "attrs": {"S2": {"chi": 2, "dim": 2}, "H1": {"chi": 0, "dim": 1},
                  "H2": {"chi": 0, "dim": 1}, "H3": {"chi": 0, "dim": 1},
                  "H4": {"chi": 0, "dim": 1}, "P13": {"chi": 2, "dim": 0},
                  "P23": {"chi": 2, "dim": 0}},
    }


def plane_doc():
    return {
        "elements": ["R2", "H1", "H2", "H3", "P12", "P13", "P23"],
        "covers": [["P12", "H1"], ["P12", "H2"], ["P13", "H1"], ["P13", "H3"],
                   ["P23", "H2"], ["P23", "H3"], ["H1", "R2"], ["H2", "R2"],
                   ["H3", "R2"]],
        "top": "R2",
        "attrs": {"R2": {"chi": 1, "dim": 2}, "H1": {"chi": -1, "dim": 1},
                  "H2": {"chi": -1, "dim": 1}, "H3": {"chi": 0, "dim": 1},
                  "P12": {"chi": 3, "dim": 0}, "P13": {"chi": 10, "dim": 0},
                  "P23": {"chi": 2, "dim": 0}},
    }


def two_lines_doc():
    return {
        "elements": ["R2", "L1", "L2", "P"],
        "covers": [["P", "L1"], ["P", "L2"], ["L1", "R2"], ["L2", "R2"]],
        "attrs": {"R2": {"chi": 1, "dim": 2}, "L1": {"chi": -1, "dim": 1},
                  "L2": {"chi": -1, "dim": 1}, "P": {"chi": 1, "dim": 0}},
    }


def two_circles_doc():
    return {
        "elements": ["S2", "C1", "C2", "P"],
        "covers": [["P", "C1"], ["P", "C2"], ["C1", "S2"], ["C2", "S2"]],
        "attrs": {"S2": {"chi": 2, "dim": 2}, "C1": {"chi": 0, "dim": 1},
                  "C2": {"chi": 0, "dim": 1}, "P": {"chi": 2, "dim": 0}},
    }


def generic_lines_doc(k):
    """Intersection poset of k pairwise-crossing lines in the plane with
    all crossing points distinct, chi = (-1)^dim."""
    elements = ["R2"] + [f"L{i}" for i in range(k)]
    covers = [[f"L{i}", "R2"] for i in range(k)]
    attrs = {"R2": {"chi": 1, "dim": 2}}
    for i in range(k):
        attrs[f"L{i}"] = {"chi": -1, "dim": 1}
    for i in range(k):
        for j in range(i + 1, k):
            pid = f"P{i}{j}"
            elements.append(pid)
            covers += [[pid, f"L{i}"], [pid, f"L{j}"]]
            attrs[pid] = {"chi": 1, "dim": 0}
    return {"elements": elements, "covers": covers, "attrs": attrs}


def random_poset(rng, n, density=0.3):
    """Random DAG closed transitively; ids are shuffled strings so the
    element order is not topological."""
    names = [f"e{i}" for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.append((names[perm[i]], names[perm[j]]))
    order = names[:]
    rng.shuffle(order)
    return build_poset(order, pairs, mode="covers")


def random_poset_with_bottom(rng, n, density=0.3):
    p = random_poset(rng, n - 1, density)
    names = list(p.elements)
    pairs = [(a, b) for (i, j) in zip(*p.covers.nonzero())
             for a, b in [(p.elements[i], p.elements[j])]]
    bottom = "bot"
    pairs += [(bottom, m) for m in p.extremes()["minimal"]]
    order = names + [bottom]
    rng.shuffle(order)
    return build_poset(order, pairs, mode="covers")


def random_set_family(rng, ground_size=6, seeds=4, max_subset=None):
    ground = list(range(ground_size))
    cap = max_subset or ground_size
    fam = []
    for _ in range(seeds):
        k = rng.randint(1, cap)
        fam.append(frozenset(rng.sample(ground, k)))
    return union_intersection_closure(fam)


def random_distributive_lattice(rng, max_elements=40, ground_size=6, seeds=None):
    """Union/intersection-closed sublattice of the subsets of a small ground
    set; distributive by construction.  Small seed sets give closures that
    fill out the size budget instead of collapsing to chains."""
    while True:
        k = seeds if seeds is not None else rng.randint(4, 7)
        fam = random_set_family(rng, ground_size, k, max_subset=3)
        if len(fam) <= max_elements:
            return set_lattice(fam, check=False)


def random_members_containing_ji(rng, lattice):
    ji = set(lattice.join_irreducibles()["ji"])
    members = [a for a in lattice.elements if a in ji or rng.random() < 0.5]
    return members


def random_set_model(rng, max_ground=10, max_subspaces=3):
    """Random valid SetModel: subspaces, the intersection-family refinement
    with occasional splits of minimal flats, and a random chamber partition."""
    m = rng.randint(2, max_ground)
    ground = list(range(1, m + 1))
    k = rng.randint(0, max_subspaces)
    subspaces = []
    for _ in range(k):
        size = rng.randint(1, max(1, m - 1))
        subspaces.append(frozenset(rng.sample(ground, size)))
    top = frozenset(ground)
    inters = {top}
    for s in subspaces:
        inters |= {x & s for x in inters}
    refinement = [x for x in inters if x]
    # splitting a minimal flat into disjoint pieces keeps the refinement valid
    minimal = [x for x in refinement
               if x != top and not any(y < x for y in refinement)]
    for x in minimal:
        if len(x) >= 2 and rng.random() < 0.5:
            pts = sorted(x)
            cut = rng.randint(1, len(pts) - 1)
            refinement += [frozenset(pts[:cut]), frozenset(pts[cut:])]
    rest = sorted(top - frozenset().union(*subspaces)) if subspaces else ground
    chambers = []
    if rest:
        blocks = rng.randint(1, min(4, len(rest)))
        assign = [rng.randrange(blocks) for _ in rest]
        for b in range(blocks):
            block = frozenset(t for t, w in zip(rest, assign) if w == b)
            if block:
                chambers.append(block)
    return SetModel.build(ground, subspaces, refinement, chambers)


def random_weights(rng, model, lo=-3, hi=3):
    return {t: rng.randint(lo, hi) for t in model.ground}

import random
from itertools import combinations

import numpy as np
import pytest

from conftest import (
    chain,
    diamond,
    random_distributive_lattice,
    random_members_containing_ji,
)
from dissecta.errors import (
    MissingJoinIrreducibles,
    NotAValuation,
    NotDistributive,
)
from dissecta.lattice import boolean_lattice, named_lattice
from dissecta.mobius_algebra import GroupVector
from dissecta.valuation import (
    ValuationTable,
    irreducible_coordinates,
    join_bilinear,
    meet_bilinear,
    subset_idempotent,
    valuation_defect,
    valuation_idempotent,
    valuation_invariants,
    valuation_relations,
    zaslavsky_check,
)


def test_presentation_frozen():
    d = diamond()
    rel = valuation_relations(d)
    assert rel.generators == ((1, -1, -1, 1),)

    assert valuation_relations(chain(5)).generators == ()

    b3 = boolean_lattice(3)
    rel3 = valuation_relations(b3)
    assert len(rel3.generators) == 9
    assert rel3.rank == 4
    for row in rel3.generators:
        assert sum(row) == 0


def test_invariants_frozen():
    assert valuation_invariants(diamond()) == {
        "free_rank": 3, "torsion": [], "ji_count": 3, "match": True}
    assert valuation_invariants(boolean_lattice(3)) == {
        "free_rank": 4, "torsion": [], "ji_count": 4, "match": True}
    m3 = valuation_invariants(named_lattice("M3"))
    assert m3["match"] is True  # vacuous: no rank claim off the distributive case
    assert m3["free_rank"] == 2


def test_membership_frozen():
    d = diamond()
    rel = valuation_relations(d)
    p = d.poset
    assert rel.contains(GroupVector.from_dict(p, {"0": 1, "a": -1, "b": -1, "1": 1}))
    assert not rel.contains(GroupVector.unit(p, "a"))
    assert rel.contains(GroupVector.zero(p))


def test_zaslavsky_frozen():
    d = diamond()
    assert zaslavsky_check(d, d.elements) == {"1": True}

    b3 = boolean_lattice(3)
    assert all(zaslavsky_check(b3, b3.elements).values())

    ji = b3.join_irreducibles()["ji"]
    out = zaslavsky_check(b3, ji + [b3.top])
    assert out == {b3.top: True}


def test_zaslavsky_random_distributive():
    rng = random.Random(3)
    for _ in range(20):
        l = random_distributive_lattice(rng, max_elements=30)
        members = random_members_containing_ji(rng, l)
        assert all(zaslavsky_check(l, members).values())


def test_zaslavsky_requires_distributive_and_ji():
    with pytest.raises(NotDistributive):
        zaslavsky_check(named_lattice("N5"), named_lattice("N5").elements)
    b3 = boolean_lattice(3)
    ji = b3.join_irreducibles()["ji"]
    with pytest.raises(MissingJoinIrreducibles):
        zaslavsky_check(b3, [a for a in b3.elements if a != ji[1]])


def test_valuation_defect_frozen():
    d = diamond()
    ind = ValuationTable.indicator(d, ["0", "a"])
    assert valuation_defect(d, d.elements, ind, "1") == 0
    const = ValuationTable.constant(d, 1)
    assert valuation_defect(d, d.elements, const, "1") == 0
    b3 = boolean_lattice(3)
    card = ValuationTable.from_function(b3, len)
    ab = frozenset({1, 2})
    assert valuation_defect(b3, b3.elements, card, ab) == 0


def test_valuation_defect_rejects_non_valuation():
    d = diamond()
    broken = ValuationTable(d, {"0": 0, "a": 1, "b": 1, "1": 7})
    assert not broken.is_valuation()
    with pytest.raises(NotAValuation):
        valuation_defect(d, d.elements, broken, "1")


def test_valuation_defect_zero_across_families():
    rng = random.Random(5)
    for _ in range(10):
        l = random_distributive_lattice(rng, max_elements=24)
        members = random_members_containing_ji(rng, l)
        ji = set(l.join_irreducibles()["ji"])
        targets = [a for a in members if a not in ji]
        tables = [ValuationTable.constant(l, rng.randint(-3, 3)),
                  ValuationTable.from_function(l, len)]
        ideals = l.prime_ideals()
        if ideals:
            tables.append(ValuationTable.indicator(l, rng.choice(ideals)))
        # integer linear combinations of valuations are valuations
        w1, w2 = rng.randint(-2, 2), rng.randint(-2, 2)
        combo = {a: w1 * tables[0][a] + w2 * tables[1][a] for a in l.elements}
        tables.append(ValuationTable(l, combo))
        for t in tables:
            assert t.is_valuation()
            for a in targets:
                assert valuation_defect(l, members, t, a) == 0


def test_vector_valued_defect():
    rng = random.Random(7)
    l = random_distributive_lattice(rng, max_elements=20)
    t = ValuationTable.from_function(
        l, lambda s: np.array([len(s), 2 * len(s) + 1], dtype=object))
    # f(S) = (|S|, 2|S|+1): second coordinate is |S| doubled plus a constant,
    # both valuations, so the table is one
    assert t.is_valuation()
    ji = set(l.join_irreducibles()["ji"])
    for a in l.elements:
        if a not in ji:
            d = valuation_defect(l, l.elements, t, a)
            assert np.array_equal(d, np.array([0, 0], dtype=object))


def test_irreducible_coordinates_frozen():
    d = diamond()
    assert irreducible_coordinates(d, "1") == {"0": -1, "a": 1, "b": 1}
    assert irreducible_coordinates(d, "0") == {"0": 1}
    b3 = boolean_lattice(3)
    top = b3.top
    coords = irreducible_coordinates(b3, top)
    assert coords[frozenset()] == -2
    for atom in (frozenset({1}), frozenset({2}), frozenset({3})):
        assert coords[atom] == 1


def test_irreducible_coordinates_random_residual():
    # the residual check runs inside the call; this exercises it broadly
    rng = random.Random(11)
    for _ in range(8):
        l = random_distributive_lattice(rng, max_elements=24)
        for x in l.elements:
            coords = irreducible_coordinates(l, x)
            assert all(isinstance(v, int) for v in coords.values())


def test_irreducible_coordinates_needs_distributive():
    with pytest.raises(NotDistributive):
        irreducible_coordinates(named_lattice("M3"), "1")


def test_valuations_factor_through_irreducible_coordinates():
    # any valuation evaluates on x as the coordinate sum over irreducibles
    rng = random.Random(59)
    for _ in range(6):
        l = random_distributive_lattice(rng, max_elements=24)
        tables = [ValuationTable.constant(l, rng.randint(-3, 3)),
                  ValuationTable.from_function(l, len)]
        ideals = l.prime_ideals()
        if ideals:
            tables.append(ValuationTable.indicator(l, rng.choice(ideals)))
        for x in l.elements:
            coords = irreducible_coordinates(l, x, check=False)
            for t in tables:
                assert t[x] == sum(c * t[b] for b, c in coords.items())


def test_inclusion_exclusion_residual_in_relations():
    rng = random.Random(13)
    lattices = [diamond(), boolean_lattice(3)]
    lattices += [random_distributive_lattice(rng, max_elements=16) for _ in range(4)]
    for l in lattices:
        if len(l) > 16:
            continue
        rel = valuation_relations(l)
        p = l.poset
        for k in (1, 2, 3):
            for subset in combinations(l.elements, k):
                vec = GroupVector.unit(p, l.join_of(subset))
                for r in range(1, k + 1):
                    for idx in combinations(subset, r):
                        vec = vec - (-1) ** (r - 1) * GroupVector.unit(p, l.meet_of(idx))
                assert rel.contains(vec)


def test_e_idempotents_modulo_relations():
    rng = random.Random(17)
    lattices = [diamond(), boolean_lattice(3)] + [
        random_distributive_lattice(rng, max_elements=20) for _ in range(4)]
    for l in lattices:
        rel = valuation_relations(l)
        ji = l.join_irreducibles()["ji"]
        es = {a: valuation_idempotent(l, a) for a in ji}
        for a in ji:
            sq = meet_bilinear(l, es[a], es[a])
            assert rel.contains(sq - es[a])
        for a, b in combinations(ji, 2):
            assert rel.contains(meet_bilinear(l, es[a], es[b]))


def test_injectivity_dichotomy():
    rng = random.Random(19)
    for _ in range(6):
        l = random_distributive_lattice(rng, max_elements=20)
        rel = valuation_relations(l)
        p = l.poset
        for a, b in combinations(l.elements, 2):
            assert not rel.contains(GroupVector.unit(p, a) - GroupVector.unit(p, b))
    for name in ("N5", "M3"):
        l = named_lattice(name)
        rel = valuation_relations(l)
        p = l.poset
        witnesses = [
            (a, b) for a, b in combinations(l.elements, 2)
            if rel.contains(GroupVector.unit(p, a) - GroupVector.unit(p, b))
        ]
        assert witnesses


def test_relations_form_meet_and_join_ideal():
    # holds for distributive hosts (the ideal property needs distributivity)
    rng = random.Random(23)
    lattices = [diamond(), boolean_lattice(3)] + [
        random_distributive_lattice(rng, max_elements=16) for _ in range(3)]
    for l in lattices:
        rel = valuation_relations(l)
        p = l.poset
        for row in rel.generators:
            g = GroupVector(p, np.array(row, dtype=object))
            for c in l.elements:
                unit_c = GroupVector.unit(p, c)
                assert rel.contains(meet_bilinear(l, g, unit_c))
                assert rel.contains(join_bilinear(l, g, unit_c))


def test_elements_expand_as_idempotent_sums_modulo_relations():
    # x is congruent to the sum of e_a over irreducibles a below x
    rng = random.Random(29)
    lattices = [diamond(), boolean_lattice(3)] + [
        random_distributive_lattice(rng, max_elements=20) for _ in range(4)]
    for l in lattices:
        rel = valuation_relations(l)
        p = l.poset
        ji = l.join_irreducibles()["ji"]
        for x in l.elements:
            acc = GroupVector.unit(p, x)
            for a in ji:
                if p.le(a, x):
                    acc = acc - valuation_idempotent(l, a)
            assert rel.contains(acc)


def test_complement_map_swaps_join_and_meet():
    # tau(x) = top + bottom - x satisfies tau(a \/ b) = tau(a) /\ tau(b)
    # inside the quotient, for bounded distributive hosts
    rng = random.Random(61)
    lattices = [diamond(), boolean_lattice(3)] + [
        random_distributive_lattice(rng, max_elements=18) for _ in range(3)]
    for l in lattices:
        rel = valuation_relations(l)
        p = l.poset
        one = GroupVector.unit(p, l.top)
        zero = GroupVector.unit(p, l.bottom)
        for a in l.elements:
            for b in l.elements:
                tau_join = one + zero - GroupVector.unit(p, l.join(a, b))
                ta = one + zero - GroupVector.unit(p, a)
                tb = one + zero - GroupVector.unit(p, b)
                assert rel.contains(tau_join - meet_bilinear(l, ta, tb))


def test_subset_idempotent_against_restriction():
    # computing u over the induced subposet directly agrees with Mobius
    # values of that subposet
    b3 = boolean_lattice(3)
    ji = b3.join_irreducibles()["ji"]
    members = tuple(ji) + (b3.top,)
    v = subset_idempotent(b3, members, b3.top)
    total = sum(v.coeffs)
    assert total == 0  # induced idempotent coefficients always sum to zero
    assert v[b3.top] == 1

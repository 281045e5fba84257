"""The valuation module of a distributive lattice.

Z L modulo the relations a/\\b + a\\/b - a - b is free on the
join-irreducibles.  The central membership fact: for any subset M
containing all irreducibles, the induced idempotent of a reducible
element of M falls inside the relation submodule -- which is why
Mobius-weighted sums of any valuation vanish there.
"""

from dissecta import (
    ValuationTable,
    boolean_lattice,
    irreducible_coordinates,
    mobius_idempotent,
    mobius_product,
    subset_idempotent,
    valuation_defect,
    valuation_invariants,
    valuation_relations,
    zaslavsky_check,
)

b3 = boolean_lattice(3)
rel = valuation_relations(b3)
print("relation generators (one per incomparable pair):", len(rel.generators))
print("invariants:", valuation_invariants(b3))

# the idempotents u(a) of the full lattice are orthogonal
p = b3.poset
atom = frozenset({1})
u = mobius_idempotent(p, atom)
print("\nu(atom) coefficients:", {tuple(sorted(k)): v for k, v in u.as_dict().items()})
print("u is idempotent:", mobius_product(u, u) == u)

# membership theorem on a subset: keep the irreducibles plus the top
ji = b3.join_irreducibles()["ji"]
members = tuple(ji) + (b3.top,)
print("\nmembership of induced idempotents:", zaslavsky_check(b3, members))
u_top = subset_idempotent(b3, members, b3.top)
print("u_M(top) embedded in Z L:", {tuple(sorted(k)): v
                                    for k, v in u_top.as_dict().items()})
print("lies in the relation span:", rel.contains(u_top))

# consequence: the defect sum vanishes for every valuation
card = ValuationTable.from_function(b3, len)
print("\ncardinality defect at the top over M:",
      valuation_defect(b3, members, card, b3.top))

ideal = b3.prime_ideals()[0]
ind = ValuationTable.indicator(b3, ideal)
print("prime-ideal indicator defect:",
      valuation_defect(b3, members, ind, b3.top))

# every element is an integer combination of irreducibles mod relations
coords = irreducible_coordinates(b3, b3.top)
print("\ntop element over the irreducibles:",
      {tuple(sorted(k)): v for k, v in coords.items()})

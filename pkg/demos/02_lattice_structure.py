"""Lattice structure: join/meet tables, join-irreducibles, prime ideals,
and the distributive / modular / cancellation trichotomy on the two
classical minimal counterexamples.
"""

from dissecta import boolean_lattice, named_lattice

b3 = boolean_lattice(3)
print("B3 has", len(b3), "elements")
print("structure:", b3.structure_check())

data = b3.join_irreducibles()
print("join-irreducibles:", sorted(sorted(s) for s in data["ji"]))
print("lower covers:", {tuple(sorted(k)): sorted(v)
                        for k, v in data["lower_cover"].items()})

# The pentagon N5 fails distributivity AND modularity; the diamond M3 is
# modular but not distributive.  Cancellation tracks distributivity exactly.
for name in ("N5", "M3"):
    l = named_lattice(name)
    print(f"\n{name}: {l.structure_check()}")

n5 = named_lattice("N5")
z, y, x = "z", "y", "x"
print("\nN5 witness: z /\\ (y \\/ x) =", n5.meet(z, n5.join(y, x)),
      " but (z /\\ y) \\/ (z /\\ x) =", n5.join(n5.meet(z, y), n5.meet(z, x)))

print("\nprime ideals of B3:")
for ideal in b3.prime_ideals():
    print("  ", sorted(sorted(s) for s in ideal))

a, b = frozenset({1}), frozenset({2, 3})
sep = b3.separating_prime_ideal(a, b)
print("\nprime ideal separating {1} from {2,3}:",
      sorted(sorted(s) for s in sep))

"""Finite posets and the Mobius function.

Builds small posets from cover pairs, inspects intervals and extremes,
and walks through zeta/Mobius convolution and Mobius inversion.
"""

from dissecta import (
    build_poset,
    convolve,
    delta,
    mobius,
    mobius_invert,
    zeta,
    zeta_transform,
)

# The diamond: 0 below a and b, both below 1.
diamond = build_poset(["0", "a", "b", "1"],
                      [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
print("diamond interval [0, 1]:", diamond.interval("0", "1"))
print("extremes:", diamond.extremes())

mu = mobius(diamond)
print("\nMobius values (diamond):")
for a in diamond.elements:
    for b in diamond.elements:
        if diamond.le(a, b):
            print(f"  mu({a}, {b}) = {mu(a, b)}")

# zeta * mu recovers the convolution identity delta
print("\nzeta * mu == delta:", convolve(zeta(diamond), mu) == delta(diamond))
print("mu * zeta == delta:", convolve(mu, zeta(diamond)) == delta(diamond))

# Mobius inversion: accumulate then invert
f = {"0": 1, "a": 1, "b": 1, "1": 1}
g = zeta_transform(diamond, f)
print("\ndown-set sums of the constant function:", g)
print("inverting recovers the constant:", mobius_invert(diamond, g) == f)

# A chain collapses: mu(bottom, top) vanishes past distance one
chain = build_poset(["0", "m", "1"], [("0", "m"), ("m", "1")])
print("\nchain mu(0, 1) =", mobius(chain)("0", "1"))
print("chain zeta*zeta(0, 1) counts the interval:",
      convolve(zeta(chain), zeta(chain))("0", "1"))

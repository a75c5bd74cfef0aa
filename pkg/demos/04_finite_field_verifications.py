"""Exact finite-field verification of the explicit constructions.

Four checks in increasing flavor: a degree-3 point over GF(8) and a
degree-4 point over GF(16) in general position (the blow-up centers for
two of the surface types), the order-five quadratic map underlying the
rank-1 cyclic case, a quartic whose Galois group is pinned to A4 by its
discriminant and two modular factorizations, and the two involution
families generating the automorphism groups of the transposition and
double-transposition types.
"""

import random

from dp5 import finite_geometry as fg

print("== a point of degree 3 over GF(8) ==")
f8 = fg.field(2, 3)
z = f8.gen()
print(f"field: {f8!r}")
orbit = fg.frobenius_orbit(fg.ProjPoint((f8.one(), z, z**4)))
for p in orbit:
    print(f"  {p}")
print(f"orbit length {len(orbit)}, collinear: {fg.collinear(*orbit)}")

print("\n== a point of degree 4 over GF(16) ==")
f16 = fg.field(2, 4)
z = f16.gen()
orbit = fg.frobenius_orbit(fg.ProjPoint((f16.one(), z, z**2)))
for p in orbit:
    print(f"  {p}")
print(f"orbit length {len(orbit)}, general position: {fg.general_position(orbit)}")

print("\n== the quadratic map of order five ==")
for q in (7, 11):
    f = fg.field(q)
    phi = fg.order5_map(f)
    order = fg.map_order(phi, samples=20, rng=random.Random(0))
    print(f"over GF({q}): sampled order {order}, "
          f"base points {[str(p) for p in fg.base_points(phi)]}")
f7 = fg.field(7)
print(f"[1:1:1] maps to {fg.apply_map(fg.order5_map(f7), fg.point(f7, 1, 1, 1))}")

print("\n== the quartic X^4 + 8X + 12 ==")
disc = fg.quartic_discriminant((12, 8, 0, 0, 1))
print(f"discriminant = {disc} = 576^2 (a square, so the Galois group is even)")
for p in (5, 17):
    _, factors = fg.factor_mod_p((12, 8, 0, 0, 1), p)
    print(f"mod {p:>2}: " + " * ".join(f"({fg.poly_str(f)})" for f in factors))
print("an element of order 3 and one of order 2, inside A4 => the group is A4")

print("\n== involution families ==")
for q in (3, 5):
    print("\n".join(fg.verify_plane_involution_pair(q).lines()))
print("\n".join(fg.verify_quadric_twist_involutions(3).lines()))

"""The incidence diagram of the ten (-1)-curves and its 120 symmetries.

A quintic del Pezzo surface carries ten (-1)-curves: four exceptional
curves E1..E4 and six line transforms D_ij.  Two curves meet exactly once
or not at all, and the meeting relation is the Petersen graph.  Labelling
each curve with a 2-subset of {1..5} (E_i <-> {i,5}, D_ij <-> the
complement of {i,j} in {1..4}) turns adjacency into label disjointness and
realizes the full Sym5 symmetry.
"""

from dp5 import galois_groups as gg
from dp5 import petersen as pt
from dp5.picard_lattice import CURVES, canonical_class, curve_class, intersect

graph = pt.build_graph()

print("== the ten (-1)-classes and the intersection form ==")
K = canonical_class()
print(f"canonical class K = {K.coeffs},  K.K = {intersect(K, K)}")
for c in CURVES:
    v = curve_class(c)
    print(f"  {c:<4} {v.coeffs}   self-intersection {intersect(v, v)}, K-degree {intersect(v, K)}")

print("\n== adjacency (curves meeting once) ==")
for c in CURVES:
    print(f"  {c:<4} ~ {' '.join(sorted(graph.neighbors(c)))}")
print(f"edges: {len(graph.edges)} (3-regular on 10 vertices)")

print("\n== the symmetry group ==")
auts = pt.all_graph_automorphisms()
print(f"graph automorphisms found by backtracking: {len(auts)}")
image = {pt.sym5_to_graph_aut(g) for g in gg.all_elements()}
print(f"image of Sym5 under the Kneser action:     {len(image)}")
print(f"the two sets coincide: {image == set(auts)}")

print("\n== the five maximal disjoint quadruples ==")
for i, quad in enumerate(pt.maximal_disjoint_quadruples(), start=1):
    print(f"  M{i} = {{{', '.join(sorted(quad))}}}")

g = gg.parse_cycles("(3 4)")
action = pt.action_on_quadruples(pt.sym5_to_graph_aut(g))
print(f"\n(3 4) permutes the quadruples as {gg.cycle_string(action)} "
      "(M3 and M4 swap, the rest stay)")

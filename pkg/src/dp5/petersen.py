"""The incidence diagram of the ten (-1)-curves: a Petersen graph.

Vertices are the CURVES of picard_lattice; two curves are adjacent exactly
when their classes meet with intersection number 1.  A Kneser labelling
identifies each curve with a 2-subset of {1..5} (E_i <-> {i,5} and
D_ij <-> {1,2,3,4} minus {i,j}); curves are adjacent iff their labels are
disjoint, which realises the full Sym5 symmetry of the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from functools import cache

from .picard_lattice import CURVES, CURVE_INDEX, curve_class, intersect

#: Perm10: tuple of 10 ints, images of curve indices in CURVES order.
Perm10 = tuple

#: Kneser labels as frozensets of {1..5}.
LABELS = {}
for _i in range(1, 5):
    LABELS[f"E{_i}"] = frozenset({_i, 5})
for _i in range(1, 5):
    for _j in range(_i + 1, 5):
        LABELS[f"D{_i}{_j}"] = frozenset({1, 2, 3, 4} - {_i, _j})

LABEL_TO_CURVE = {v: k for k, v in LABELS.items()}


@dataclass(frozen=True)
class PetersenGraph:
    """Symmetric adjacency over the ten curves, in CURVES order."""

    adjacency: tuple[tuple[bool, ...], ...]

    def neighbors(self, curve: str) -> frozenset:
        i = CURVE_INDEX[curve]
        return frozenset(CURVES[j] for j in range(10) if self.adjacency[i][j])

    def adjacent(self, u: str, v: str) -> bool:
        return self.adjacency[CURVE_INDEX[u]][CURVE_INDEX[v]]

    @property
    def edges(self) -> list[tuple[str, str]]:
        return [
            (CURVES[i], CURVES[j])
            for i in range(10)
            for j in range(i + 1, 10)
            if self.adjacency[i][j]
        ]


@cache
def build_graph() -> PetersenGraph:
    adj = tuple(
        tuple(
            i != j and intersect(curve_class(CURVES[i]), curve_class(CURVES[j])) == 1
            for j in range(10)
        )
        for i in range(10)
    )
    return PetersenGraph(adj)


@cache
def sym5_to_graph_aut(g) -> Perm10:
    """Curve permutation induced by g in Sym5 acting on Kneser labels.

    g is a Perm5 (tuple of 5 images, 0-indexed).  The resulting map is a
    graph automorphism, and g -> image is an injective homomorphism.
    """
    images = []
    for c in CURVES:
        moved = frozenset(g[x - 1] + 1 for x in LABELS[c])
        images.append(CURVE_INDEX[LABEL_TO_CURVE[moved]])
    return tuple(images)


def is_graph_automorphism(p: Perm10) -> bool:
    adj = build_graph().adjacency
    return all(
        adj[p[i]][p[j]] == adj[i][j] for i in range(10) for j in range(i + 1, 10)
    )


@cache
def all_graph_automorphisms() -> tuple[Perm10, ...]:
    """Exhaustive backtracking over adjacency-preserving vertex maps.

    Vertices are assigned in CURVES order; each partial image must match
    adjacency against all previously assigned vertices.  Returns the 120
    automorphisms sorted as tuples.
    """
    adj = build_graph().adjacency
    found = []
    images = [-1] * 10
    used = [False] * 10

    def extend(v: int):
        if v == 10:
            found.append(tuple(images))
            return
        for w in range(10):
            if used[w]:
                continue
            ok = all(adj[v][u] == adj[w][images[u]] for u in range(v))
            if ok:
                images[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        images[v] = -1

    extend(0)
    return tuple(sorted(found))


def compose10(p: Perm10, q: Perm10) -> Perm10:
    """p after q."""
    return tuple(p[q[i]] for i in range(10))


@cache
def maximal_disjoint_quadruples() -> tuple[frozenset, ...]:
    """The five 4-element sets of pairwise non-adjacent curves.

    Enumerated by brute force over all 4-subsets; exactly five exist and no
    5-subset is pairwise non-adjacent.  Each quadruple is a Kneser star (all
    labels through one point); the returned order is by that star point, so
    index i holds the star of point i+1 and the last entry is {E1,E2,E3,E4}.
    """
    adj = build_graph().adjacency
    quads = []
    for combo in combinations(range(10), 4):
        if all(not adj[a][b] for a, b in combinations(combo, 2)):
            quads.append(frozenset(CURVES[i] for i in combo))
    for combo in combinations(range(10), 5):
        assert not all(not adj[a][b] for a, b in combinations(combo, 2)), (
            "unexpected 5-element independent set"
        )
    assert len(quads) == 5

    def star_point(q: frozenset) -> int:
        common = frozenset({1, 2, 3, 4, 5})
        for c in q:
            common &= LABELS[c]
        assert len(common) == 1, "quadruple is not a Kneser star"
        return next(iter(common))

    return tuple(sorted(quads, key=star_point))


def action_on_quadruples(p: Perm10):
    """Induced permutation of the five disjoint quadruples, as a Perm5.

    Rejects maps that are not graph automorphisms.  Over all 120
    automorphisms this action is faithful and transitive.
    """
    if not is_graph_automorphism(p):
        raise ValueError("not a graph automorphism")
    quads = maximal_disjoint_quadruples()
    images = []
    for q in quads:
        moved = frozenset(CURVES[p[CURVE_INDEX[c]]] for c in q)
        images.append(quads.index(moved))
    return tuple(images)


def orbit_partition(perms) -> tuple[tuple[str, ...], ...]:
    """Orbits of the curve set under a collection of Perm10 maps.

    Returns orbits as tuples of curve names, each sorted in CURVES order,
    the orbits themselves ordered by their first curve.
    """
    parent = list(range(10))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(10):
            a, b = find(i), find(p[i])
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups: dict[int, list[int]] = {}
    for i in range(10):
        groups.setdefault(find(i), []).append(i)
    orbits = [tuple(CURVES[i] for i in sorted(g)) for g in groups.values()]
    return tuple(sorted(orbits, key=lambda o: CURVE_INDEX[o[0]]))

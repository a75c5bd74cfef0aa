from itertools import combinations

import pytest

from dp5 import galois_groups as gg
from dp5.petersen import (
    LABELS,
    Perm10,
    action_on_quadruples,
    all_graph_automorphisms,
    build_graph,
    compose10,
    is_graph_automorphism,
    maximal_disjoint_quadruples,
    orbit_partition,
    sym5_to_graph_aut,
)
from dp5.picard_lattice import CURVES, CURVE_INDEX


def perm10_of(cycles: str) -> Perm10:
    return sym5_to_graph_aut(gg.parse_cycles(cycles))


def test_graph_shape():
    g = build_graph()
    assert all(len(g.neighbors(c)) == 3 for c in CURVES)
    assert len(g.edges) == 15
    # girth 5: no 3- or 4-cycles
    adj = g.adjacency
    for a, b in combinations(range(10), 2):
        if adj[a][b]:
            common = [c for c in range(10) if adj[a][c] and adj[b][c]]
            assert not common  # triangle-free
        else:
            common = [c for c in range(10) if adj[a][c] and adj[b][c]]
            assert len(common) <= 1  # no 4-cycles


def test_neighbors_match_the_diagram():
    g = build_graph()
    assert g.neighbors("E2") == {"D12", "D23", "D24"}
    assert g.neighbors("D12") == {"E1", "E2", "D34"}


def test_kneser_adjacency_law():
    g = build_graph()
    for u in CURVES:
        for v in CURVES:
            if u == v:
                continue
            assert g.adjacent(u, v) == LABELS[u].isdisjoint(LABELS[v])


def test_sym5_images():
    # (3 4) fixes E1, E2, D12, D34 and swaps the three remaining pairs
    p = perm10_of("(3 4)")
    fixed = [CURVES[i] for i in range(10) if p[i] == i]
    assert fixed == ["E1", "E2", "D12", "D34"]
    assert p[CURVE_INDEX["E3"]] == CURVE_INDEX["E4"]
    assert p[CURVE_INDEX["D13"]] == CURVE_INDEX["D14"]
    assert p[CURVE_INDEX["D23"]] == CURVE_INDEX["D24"]

    # (4 5) exchanges E_i with D_jk across the hexagon
    q = perm10_of("(4 5)")
    moved = {CURVES[i]: CURVES[q[i]] for i in range(10) if q[i] != i}
    assert moved == {
        "E1": "D23", "D23": "E1",
        "E2": "D13", "D13": "E2",
        "E3": "D12", "D12": "E3",
    }

    assert perm10_of("()") == tuple(range(10))


def test_image_is_a_faithful_homomorphism():
    elements = gg.all_elements()
    images = {g: sym5_to_graph_aut(g) for g in elements}
    assert len(set(images.values())) == 120
    for g in elements:
        for h in elements:
            assert images[gg.compose(g, h)] == compose10(images[g], images[h])


def test_all_graph_automorphisms():
    auts = all_graph_automorphisms()
    assert len(auts) == 120
    assert tuple(range(10)) in auts
    aut_set = set(auts)
    assert {sym5_to_graph_aut(g) for g in gg.all_elements()} == aut_set
    for p in auts:
        inv = tuple(sorted(range(10), key=lambda i: p[i]))
        assert inv in aut_set
    # closure on a sample (full closure is 14400 pairs, cheap enough)
    for p in auts[:20]:
        for q in auts:
            assert compose10(p, q) in aut_set


def test_vertex_transitive():
    auts = all_graph_automorphisms()
    for target in range(10):
        assert any(p[0] == target for p in auts)


def test_quadruples():
    quads = maximal_disjoint_quadruples()
    assert len(quads) == 5
    assert quads[0] == frozenset({"E1", "D23", "D24", "D34"})
    assert quads[1] == frozenset({"E2", "D13", "D14", "D34"})
    assert quads[4] == frozenset({"E1", "E2", "E3", "E4"})
    g = build_graph()
    for q in quads:
        for a, b in combinations(sorted(q), 2):
            assert not g.adjacent(a, b)


def test_no_five_disjoint_curves():
    g = build_graph()
    for combo in combinations(CURVES, 5):
        assert any(g.adjacent(a, b) for a, b in combinations(combo, 2))


def test_action_on_quadruples():
    assert action_on_quadruples(perm10_of("()")) == (0, 1, 2, 3, 4)
    # Kneser (3 4): stars of 3 and 4 exchanged, the rest fixed
    assert action_on_quadruples(perm10_of("(3 4)")) == (0, 1, 3, 2, 4)


def test_action_is_faithful_and_transitive():
    images = {action_on_quadruples(sym5_to_graph_aut(g)) for g in gg.all_elements()}
    assert len(images) == 120
    for target in range(5):
        assert any(img[0] == target for img in images)


def test_action_rejects_non_automorphism():
    bogus = list(range(10))
    bogus[0], bogus[1] = 1, 0  # swapping E1,E2 alone is not an automorphism
    assert not is_graph_automorphism(tuple(bogus))
    with pytest.raises(ValueError):
        action_on_quadruples(tuple(bogus))


def test_orbit_partition_ordering():
    part = orbit_partition([perm10_of("(3 4)")])
    assert part == (
        ("E1",), ("E2",), ("E3", "E4"), ("D12",),
        ("D13", "D14"), ("D23", "D24"), ("D34",),
    )

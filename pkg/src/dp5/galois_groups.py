"""Permutation groups on {1..5}: elements, subgroups, conjugacy, recognition.

Perm5 elements are tuples of length 5 holding 0-indexed images, so p[i] is
the image of point i+1 minus 1.  Composition is (p * q)(x) = p(q(x)).
Subgroups are frozensets of Perm5.  Sym5 has 156 subgroups falling into 19
conjugacy classes; representatives are pinned to a fixed generator list so
that reports and golden tables are string-stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from itertools import permutations

from . import petersen

Perm5 = tuple

IDENTITY: Perm5 = (0, 1, 2, 3, 4)


def compose(p: Perm5, q: Perm5) -> Perm5:
    """p after q."""
    return tuple(p[q[i]] for i in range(5))


def inverse(p: Perm5) -> Perm5:
    inv = [0] * 5
    for i, img in enumerate(p):
        inv[img] = i
    return tuple(inv)


def perm_order(p: Perm5) -> int:
    n, q = 1, p
    while q != IDENTITY:
        q = compose(p, q)
        n += 1
    return n


def parse_cycles(text: str) -> Perm5:
    """Parse cycle notation like "(1 2 3)(4 5)"; "()" is the identity."""
    text = text.strip()
    if text in ("()", ""):
        return IDENTITY
    if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\))+", text):
        raise ValueError(f"bad cycle notation: {text!r}")
    images = list(range(5))
    seen = set()
    for cyc in re.findall(r"\(([^()]*)\)", text):
        points = [int(tok) for tok in cyc.split()]
        if any(not 1 <= x <= 5 for x in points):
            raise ValueError(f"cycle point out of range in {text!r}")
        if len(set(points)) != len(points) or seen & set(points):
            raise ValueError(f"repeated point in {text!r}")
        seen |= set(points)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def cycle_string(p: Perm5) -> str:
    """Canonical cycle notation: smallest-first cycles, fixed points omitted."""
    seen = set()
    cycles = []
    for start in range(5):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        cycles.append(cyc)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)


@cache
def all_elements() -> tuple[Perm5, ...]:
    return tuple(sorted(permutations(range(5))))


@cache
def _tables():
    """Index the 120 elements and precompute multiplication and inverses."""
    elements = all_elements()
    index = {p: i for i, p in enumerate(elements)}
    mul = [[index[compose(p, q)] for q in elements] for p in elements]
    inv = [index[inverse(p)] for p in elements]
    return elements, index, mul, inv


def _close_indices(gen_idx, mul) -> frozenset:
    els = {0}  # identity is first in sorted order
    els.update(gen_idx)
    frontier = list(els)
    while frontier:
        new = []
        for g in gen_idx:
            row = mul[g]
            for h in frontier:
                x = row[h]
                if x not in els:
                    els.add(x)
                    new.append(x)
        frontier = new
    return frozenset(els)


@dataclass(frozen=True)
class IsoType:
    label: str
    order: int

    def __str__(self) -> str:
        return self.label


@dataclass
class SubgroupRecord:
    elements: frozenset
    generators: tuple
    class_id: int | None = None
    class_name: str | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Perm5]:
        return sorted(self.elements)

    def generator_strings(self) -> list[str]:
        return [cycle_string(g) for g in self.generators]

    def __repr__(self) -> str:
        gens = " ".join(self.generator_strings()) or "()"
        return f"SubgroupRecord(<{gens}>, order={self.order}, class={self.class_name})"


def _mulclose(gens) -> frozenset:
    elements, index, mul, _ = _tables()
    closed = _close_indices([index[g] for g in gens], mul)
    return frozenset(elements[i] for i in closed)


def generate(gens) -> SubgroupRecord:
    """Closure of a generator list under composition."""
    gens = tuple(gens)
    rec = SubgroupRecord(elements=_mulclose(gens), generators=gens)
    assert 120 % rec.order == 0
    return rec


@cache
def all_subgroups() -> tuple[frozenset, ...]:
    """Every subgroup of Sym5, by breadth-first one-generator extensions.

    Every subgroup is reachable from the trivial group by adjoining one
    element at a time, so the search is complete.  Extending by an element x
    only depends on the cyclic group <x>, which cuts the join count down.
    """
    elements, _, mul, _ = _tables()
    cyclics: dict[frozenset, int] = {}
    for i in range(1, 120):
        c = _close_indices((i,), mul)
        cyclics.setdefault(c, i)

    trivial = frozenset({0})
    found = {trivial}
    frontier = [(trivial, ())]
    while frontier:
        new_frontier = []
        for sub, gens in frontier:
            for cyc, g in cyclics.items():
                if cyc <= sub:
                    continue
                new_gens = gens + (g,)
                bigger = _close_indices(new_gens, mul)
                if bigger not in found:
                    found.add(bigger)
                    new_frontier.append((bigger, new_gens))
        frontier = new_frontier
    as_tuples = [frozenset(elements[i] for i in s) for s in found]
    return tuple(sorted(as_tuples, key=lambda s: (len(s), sorted(s))))


#: Conjugacy-class representatives pinned by generator lists, in the
#: fixed class_id order 1..19 used throughout reports and golden data.
PINNED_REPRESENTATIVES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("trivial", ()),
    ("Z/2 (transposition)", ("(3 4)",)),
    ("Z/2 (double transposition)", ("(1 2)(3 4)",)),
    ("Z/2 x Z/2 (two transpositions)", ("(1 2)", "(3 4)")),
    ("Z/2 x Z/2 (double transpositions)", ("(1 2)(3 4)", "(1 3)(2 4)")),
    ("Z/3", ("(1 2 3)",)),
    ("Z/4", ("(1 2 3 4)",)),
    ("A4", ("(1 2)(3 4)", "(1 2 3)")),
    ("D4", ("(1 2 3 4)", "(1 3)")),
    ("S4", ("(1 2 3 4)", "(1 2)")),
    ("S3 (standard)", ("(1 2 3)", "(1 2)")),
    ("Z/6", ("(1 2 3)(4 5)",)),
    ("S3 x Z/2", ("(1 2 3)", "(1 2)", "(4 5)")),
    ("S3 (twisted)", ("(1 2 3)", "(1 2)(4 5)")),
    ("Z/5", ("(1 2 3 4 5)",)),
    ("D5", ("(1 2 3 4 5)", "(2 5)(3 4)")),
    ("GA(1,5)", ("(1 2 3 4 5)", "(2 3 5 4)")),
    ("A5", ("(1 2 3 4 5)", "(1 2 3)")),
    ("S5", ("(1 2 3 4 5)", "(1 2)")),
)


def _conjugate_subgroup(g: Perm5, sub: frozenset) -> frozenset:
    gi = inverse(g)
    return frozenset(compose(g, compose(h, gi)) for h in sub)


@cache
def subgroup_classification() -> tuple[tuple[SubgroupRecord, ...], dict]:
    """(19 pinned representatives, subgroup -> class_id map over all 156)."""
    elements, index, mul, inv = _tables()
    reps = []
    for class_id, (name, gens) in enumerate(PINNED_REPRESENTATIVES, start=1):
        rec = generate(parse_cycles(s) for s in gens)
        rec.class_id = class_id
        rec.class_name = name
        reps.append(rec)

    class_of: dict[frozenset, int] = {}
    for rep in reps:
        sub_idx = [index[h] for h in rep.elements]
        for g in range(120):
            row, gi = mul[g], inv[g]
            conj = frozenset(elements[mul[row[h]][gi]] for h in sub_idx)
            class_of[conj] = rep.class_id

    subs = all_subgroups()
    unassigned = [s for s in subs if s not in class_of]
    assert not unassigned, f"{len(unassigned)} subgroups not conjugate to any pinned representative"
    assert len({rep.elements for rep in reps}) == 19
    ids = {class_of[s] for s in subs}
    assert ids == set(range(1, 20))
    return tuple(reps), class_of


def all_conjugacy_classes_of_subgroups() -> tuple[SubgroupRecord, ...]:
    """The 19 conjugacy classes of subgroups of Sym5, pinned representatives."""
    return subgroup_classification()[0]


def class_id_of(sub: frozenset) -> int:
    return subgroup_classification()[1][sub]


def minimal_generators(elements: frozenset) -> tuple:
    """Small generating set, greedily: adjoin elements until closure."""
    gens: tuple = ()
    span = frozenset({IDENTITY})
    for g in sorted(elements):
        if g not in span:
            gens = gens + (g,)
            span = _mulclose(gens)
            if span == elements:
                break
    assert span == frozenset(elements) or not gens
    return gens


def centralizer(h: SubgroupRecord | frozenset) -> SubgroupRecord:
    """{g in Sym5 : gx = xg for all x in H}, by brute force over 120 elements."""
    elems = h.elements if isinstance(h, SubgroupRecord) else h
    cent = frozenset(
        g for g in all_elements() if all(compose(g, x) == compose(x, g) for x in elems)
    )
    return SubgroupRecord(elements=cent, generators=minimal_generators(cent))


#: (order, abelian, element-order census) -> label, covering every
#: isomorphism type among subgroups of Sym5.  The census is a sorted tuple
#: of (element order, count) pairs.
_SIGNATURES = {
    (1, True, ((1, 1),)): "trivial",
    (2, True, ((1, 1), (2, 1))): "Z2",
    (3, True, ((1, 1), (3, 2))): "Z3",
    (4, True, ((1, 1), (2, 1), (4, 2))): "Z4",
    (4, True, ((1, 1), (2, 3))): "Z2xZ2",
    (5, True, ((1, 1), (5, 4))): "Z5",
    (6, True, ((1, 1), (2, 1), (3, 2), (6, 2))): "Z6",
    (6, False, ((1, 1), (2, 3), (3, 2))): "S3",
    (8, False, ((1, 1), (2, 5), (4, 2))): "D4",
    (10, False, ((1, 1), (2, 5), (5, 4))): "D5",
    (12, False, ((1, 1), (2, 3), (3, 8))): "A4",
    (12, False, ((1, 1), (2, 7), (3, 2), (6, 2))): "S3xZ2",
    (20, False, ((1, 1), (2, 5), (4, 10), (5, 4))): "GA(1,5)",
    (24, False, ((1, 1), (2, 9), (3, 8), (4, 6))): "S4",
    (60, False, ((1, 1), (2, 15), (3, 20), (5, 24))): "A5",
    (120, False, ((1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20))): "S5",
}


def identify(h: SubgroupRecord | frozenset) -> IsoType:
    """Isomorphism type from (order, abelian flag, element-order census).

    This signature separates every type occurring in Sym5; an unknown
    signature raises LookupError (which must never happen for actual
    subgroups).
    """
    elems = h.elements if isinstance(h, SubgroupRecord) else h
    order = len(elems)
    abelian = all(
        compose(a, b) == compose(b, a) for a in elems for b in elems
    )
    census: dict[int, int] = {}
    for g in elems:
        census[perm_order(g)] = census.get(perm_order(g), 0) + 1
    key = (order, abelian, tuple(sorted(census.items())))
    try:
        return IsoType(label=_SIGNATURES[key], order=order)
    except KeyError:
        raise LookupError(f"unrecognized group signature {key}") from None


def orbits(h: SubgroupRecord | frozenset) -> tuple[tuple[str, ...], ...]:
    """Orbit partition of the ten curves under the induced diagram action."""
    elems = h.elements if isinstance(h, SubgroupRecord) else h
    return petersen.orbit_partition([petersen.sym5_to_graph_aut(g) for g in elems])


def point_orbit_count(elems: frozenset) -> int:
    """Number of orbits on {1..5}; equals the fixed-lattice rank (see tests)."""
    parent = list(range(5))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in elems:
        for i in range(5):
            a, b = find(i), find(g[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return len({find(i) for i in range(5)})

"""Per-Galois-type classification records and the machine-checked table.

For each of the 19 conjugacy classes of subgroups H of Sym5 (the possible
images of the Galois group on the diagram of (-1)-curves) this assembles:
the orbit partition, the curves defined over the ground field, the rank of
the Galois-fixed part of the lattice, the equivariant automorphism group of
the diagram (computed two independent ways), the rank fixed by Galois and
automorphisms together, Mori-fibre-space flags, the Galois-stable
contraction options, and a blow-down model tag.  The computed table is
diffed against a transcribed reference table; mismatches are data, not
faults.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import cache
from importlib import resources

from . import galois_groups as gg
from . import petersen as pt
from .picard_lattice import (
    CURVES,
    CURVE_INDEX,
    L,
    LatticeMap,
    fixed_rank,
    fixed_sublattice_basis,
    intersect,
    lattice_map_from_curve_perm,
)

#: palette for orbit-indexed colorings (the palette itself is arbitrary;
#: only the partition is meaningful)
DOT_PALETTE = (
    "red", "blue", "forestgreen", "cyan", "orange",
    "magenta", "gold", "purple", "brown", "gray",
)


@cache
def lattice_map_of(g) -> LatticeMap:
    """Lattice map induced by g in Sym5 through the curve action."""
    p10 = pt.sym5_to_graph_aut(g)
    sigma = {CURVES[i]: CURVES[p10[i]] for i in range(10)}
    return lattice_map_from_curve_perm(sigma)


def _maps_of(elements) -> list[LatticeMap]:
    return [lattice_map_of(g) for g in sorted(elements)]


def equivariant_automorphisms(elements: frozenset) -> tuple[frozenset, frozenset]:
    """The diagram automorphisms commuting with the given Galois image.

    Returns (subgroup of Sym5, set of Perm10) computed as the centralizer
    pushed through the curve action; classify_case cross-checks this against
    the brute-force filter over all 120 graph automorphisms.
    """
    cent = gg.centralizer(elements)
    induced = frozenset(pt.sym5_to_graph_aut(g) for g in cent.elements)
    return cent.elements, induced


def brute_equivariant_automorphisms(elements: frozenset) -> frozenset:
    """All Perm10 graph automorphisms commuting with every induced element."""
    induced_h = [pt.sym5_to_graph_aut(g) for g in sorted(elements)]
    return frozenset(
        p
        for p in pt.all_graph_automorphisms()
        if all(pt.compose10(p, h) == pt.compose10(h, p) for h in induced_h)
    )


@dataclass(frozen=True)
class CremonaProfile:
    """Degree and base-point multiplicities of the plane map induced by a
    diagram symmetry, with the classical degree/multiplicity relations."""

    degree: int
    multiplicities: tuple

    def __post_init__(self):
        d, m = self.degree, self.multiplicities
        if sum(m) != 3 * (d - 1) or sum(x * x for x in m) != d * d - 1:
            raise ValueError(f"degree/multiplicity relations fail for d={d}, m={m}")


def cremona_profile(g) -> CremonaProfile:
    """Profile of the plane transformation induced by g in Sym5.

    With M the lattice map of g, the line class pulls back along the map as
    M^{-1}(L) = d*L - sum(m_i E_i); the convention d = <M(L), L> reads the
    same degree.  d = 1 exactly when g fixes the fifth Kneser point.
    """
    m = lattice_map_of(g)
    m_inv = lattice_map_of(gg.inverse(g))
    v = m_inv.apply(L).coeffs
    d = v[0]
    mults = tuple(-v[i] for i in range(1, 5))
    assert d == intersect(m.apply(L), L), "degree conventions disagree"
    return CremonaProfile(degree=d, multiplicities=mults)


@dataclass
class GaloisCase:
    """Full classification record for one Galois image H <= Sym5."""

    subgroup: gg.SubgroupRecord
    orbit_partition: tuple
    k_curves: tuple
    rk_ns: int
    equivariant_aut: gg.SubgroupRecord
    aut_type: gg.IsoType
    rk_ns_aut: int
    is_mfs: bool
    is_aut_mfs: bool
    stable_contractions: tuple  # ((curves...), target_degree) pairs
    model_tag: str

    def as_row(self) -> dict:
        return {
            "subgroup": {
                "class_id": self.subgroup.class_id,
                "class_name": self.subgroup.class_name,
                "generators": self.subgroup.generator_strings(),
                "order": self.subgroup.order,
            },
            "orbits": [list(o) for o in self.orbit_partition],
            "rk_ns": self.rk_ns,
            "aut_type": self.aut_type.label,
            "rk_ns_aut": self.rk_ns_aut,
            "mfs": self.is_mfs,
            "aut_mfs": self.is_aut_mfs,
            "contractions": [
                {"curves": list(s), "degree": d} for s, d in self.stable_contractions
            ],
            "model": self.model_tag,
        }


def _independent(curves) -> bool:
    graph = pt.build_graph()
    curves = list(curves)
    return all(
        not graph.adjacent(a, b)
        for i, a in enumerate(curves)
        for b in curves[i + 1 :]
    )


def _stable_contractions(orbit_partition, rk_ns: int):
    """All nonempty unions of Galois orbits that are pairwise disjoint curve
    sets, each with the degree of the blow-down target, plus the model tag.

    A union of t orbits drops the invariant rank by t, so the target of a
    3-curve contraction has invariant rank rk_ns - t; rank 1 there means the
    two rulings of the degree-8 target are exchanged.
    """
    usable = [o for o in orbit_partition if _independent(o)]
    options = []
    quadric_seen = False
    n = len(usable)
    for mask in range(1, 1 << n):
        chosen = [usable[i] for i in range(n) if mask >> i & 1]
        union = [c for o in chosen for c in o]
        if len(union) > 4 or not _independent(union):
            continue
        options.append(
            (tuple(sorted(union, key=CURVE_INDEX.get)), 5 + len(union), len(chosen))
        )
        if len(union) == 3 and rk_ns - len(chosen) == 1:
            quadric_seen = True
    options.sort(key=lambda t: (len(t[0]), [CURVE_INDEX[c] for c in t[0]]))
    sizes = {len(s) for s, _, _ in options}
    if 4 in sizes:
        tag = "-> P^2 (deg 9)"
    elif quadric_seen:
        tag = "-> deg-8 quadric"
    elif 1 in sizes:
        tag = "-> dP6"
    elif options:
        tag = f"-> deg-{5 + max(sizes)}"
    else:
        tag = "minimal"
    return tuple((s, d) for s, d, _ in options), tag


def classify_case(h: gg.SubgroupRecord | frozenset) -> GaloisCase:
    """Assemble the full record for one Galois image; pure and deterministic.

    The equivariant automorphism group is computed both as the centralizer
    image and by brute-force filtering of the 120 graph automorphisms, and
    the two must agree.
    """
    if isinstance(h, gg.SubgroupRecord):
        rec = h
    else:
        elems = frozenset(h)
        rec = gg.SubgroupRecord(elements=elems, generators=gg.minimal_generators(elems))
    if rec.class_id is None:
        rec.class_id = gg.class_id_of(rec.elements)
        rec.class_name = gg.PINNED_REPRESENTATIVES[rec.class_id - 1][0]

    orbit_partition = gg.orbits(rec)
    k_curves = tuple(o[0] for o in orbit_partition if len(o) == 1)

    cent_elements, induced_cent = equivariant_automorphisms(rec.elements)
    brute = brute_equivariant_automorphisms(rec.elements)
    assert brute == induced_cent, "equivariant-group computations disagree"
    aut_rec = gg.SubgroupRecord(
        elements=cent_elements,
        generators=gg.minimal_generators(cent_elements),
        class_id=gg.class_id_of(cent_elements),
    )
    aut_rec.class_name = gg.PINNED_REPRESENTATIVES[aut_rec.class_id - 1][0]
    aut_type = gg.identify(cent_elements)

    rk_ns = fixed_rank(_maps_of(rec.elements))
    combined = rec.elements | cent_elements
    rk_ns_aut = fixed_rank(_maps_of(combined))
    assert 1 <= rk_ns_aut <= rk_ns <= 5

    contractions, tag = _stable_contractions(orbit_partition, rk_ns)
    case = GaloisCase(
        subgroup=rec,
        orbit_partition=orbit_partition,
        k_curves=k_curves,
        rk_ns=rk_ns,
        equivariant_aut=aut_rec,
        aut_type=aut_type,
        rk_ns_aut=rk_ns_aut,
        is_mfs=rk_ns == 1,
        is_aut_mfs=rk_ns_aut == 1,
        stable_contractions=contractions,
        model_tag=tag,
    )
    assert len(case.k_curves) == sum(1 for o in orbit_partition if len(o) == 1)
    return case


@cache
def golden_table() -> tuple[dict, ...]:
    """The transcribed reference classification (not derived by this code)."""
    text = resources.files("dp5.data").joinpath("golden_classification.json").read_text()
    return tuple(json.loads(text))


@cache
def golden_orbit_partitions() -> dict:
    text = resources.files("dp5.data").joinpath("orbit_partitions.json").read_text()
    raw = json.loads(text)
    return {
        int(k): tuple(tuple(orbit) for orbit in v) for k, v in raw.items()
    }


def theorem1_table():
    """Classify all 19 representatives and diff against the reference table.

    Returns (cases, diffs); diffs is a list of {class_id, field, expected,
    computed} dicts and is empty exactly when every compared cell matches.
    """
    cases = [classify_case(rep) for rep in gg.all_conjugacy_classes_of_subgroups()]
    diffs = []
    for case, gold in zip(cases, golden_table()):
        assert case.subgroup.class_id == gold["class_id"]
        compared = [
            ("aut_type", case.aut_type.label, gold["aut_type"]),
            ("rk_ns_aut", case.rk_ns_aut, gold["rk_ns_aut"]),
            ("mfs", case.is_mfs, gold["mfs"]),
            ("aut_mfs", case.is_aut_mfs, gold["aut_mfs"]),
        ]
        if gold["rk_ns"] is not None:
            compared.append(("rk_ns", case.rk_ns, gold["rk_ns"]))
        for fieldname, computed, expected in compared:
            if computed != expected:
                diffs.append(
                    {
                        "class_id": gold["class_id"],
                        "field": fieldname,
                        "expected": expected,
                        "computed": computed,
                    }
                )
    return cases, diffs


def aut_fixes_galois_sublattice(case: GaloisCase) -> bool:
    """Does the equivariant group act trivially on the Galois-fixed lattice?

    rk_ns_aut equals rk_ns exactly in this situation.
    """
    basis = fixed_sublattice_basis(_maps_of(case.subgroup.elements))
    maps = _maps_of(case.equivariant_aut.elements)
    return all(m.apply(v) == v for m in maps for v in basis)


# ---------------------------------------------------------------------------
# report emission


def _orbit_string(partition) -> str:
    return " | ".join(" ".join(o) for o in partition)


def _contraction_string(contractions) -> str:
    return "; ".join(f"{'+'.join(s)} -> deg {d}" for s, d in contractions) or "-"


def emit_report(case: GaloisCase, fmt: str) -> str:
    """Serialize one case; the JSON form round-trips through json.loads."""
    if fmt == "json":
        return json.dumps(case.as_row(), indent=1, sort_keys=False)
    if fmt == "csv":
        return emit_table([case], "csv")
    if fmt == "md":
        return emit_table([case], "md")
    raise ValueError(f"unknown format {fmt!r}")


_CSV_FIELDS = (
    "subgroup", "orbits", "rk_ns", "aut_type", "rk_ns_aut",
    "mfs", "aut_mfs", "contractions", "model",
)


def emit_table(cases, fmt: str, seed: int | None = None) -> str:
    rows = [c.as_row() for c in cases]
    if fmt == "json":
        doc = {"cases": rows}
        if seed is not None:
            doc["seed"] = seed
        return json.dumps(doc, indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for case in cases:
            writer.writerow(
                {
                    "subgroup": " ".join(case.subgroup.generator_strings()) or "()",
                    "orbits": _orbit_string(case.orbit_partition),
                    "rk_ns": case.rk_ns,
                    "aut_type": case.aut_type.label,
                    "rk_ns_aut": case.rk_ns_aut,
                    "mfs": str(case.is_mfs).lower(),
                    "aut_mfs": str(case.is_aut_mfs).lower(),
                    "contractions": _contraction_string(case.stable_contractions),
                    "model": case.model_tag,
                }
            )
        return buf.getvalue()
    if fmt == "md":
        head = (
            "| id | subgroup | generators | orbits | rk NS | Aut | rk NS^Aut "
            "| MFS | Aut-MFS | model |"
        )
        sep = "|" + "---|" * 10
        lines = [head, sep]
        for case in cases:
            gens = " ".join(case.subgroup.generator_strings()) or "()"
            lines.append(
                f"| {case.subgroup.class_id} | {case.subgroup.class_name} | {gens} "
                f"| {_orbit_string(case.orbit_partition)} | {case.rk_ns} "
                f"| {case.aut_type.label} | {case.rk_ns_aut} "
                f"| {'yes' if case.is_mfs else 'no'} "
                f"| {'yes' if case.is_aut_mfs else 'no'} | {case.model_tag} |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def dot_graph(partition) -> str:
    """Graphviz text for the diagram with vertices colored by orbit index."""
    color_of = {}
    for idx, orbit in enumerate(partition):
        for c in orbit:
            color_of[c] = DOT_PALETTE[idx % len(DOT_PALETTE)]
    lines = ["graph petersen {", "  node [style=filled];"]
    for c in CURVES:
        lines.append(f'  {c} [fillcolor="{color_of[c]}"];')
    for a, b in pt.build_graph().edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"

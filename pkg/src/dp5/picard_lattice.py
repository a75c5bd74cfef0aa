"""Rank-5 intersection lattice of a quintic del Pezzo surface.

The geometric Picard group is Z^{1,4} with ordered basis (L, E1, E2, E3, E4)
and intersection form diag(+1, -1, -1, -1, -1).  L is the pullback of a line
of the plane, the E_i are the four exceptional classes.  The ten (-1)-classes
are E1..E4 and D_ij = L - E_i - E_j; the canonical class is K = -3L + sum(E_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

#: The ten (-1)-curves in their fixed global order.  All tie-breaking,
#: adjacency matrices and report columns use this order.
CURVES = ("E1", "E2", "E3", "E4", "D12", "D13", "D14", "D23", "D24", "D34")

CURVE_INDEX = {name: i for i, name in enumerate(CURVES)}


@dataclass(frozen=True)
class DivisorClass:
    """Integer vector (a; b1..b4) = a*L + b1*E1 + ... + b4*E4."""

    coeffs: tuple[int, int, int, int, int]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-x for x in self.coeffs))

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(tuple(n * x for x in self.coeffs))

    def __repr__(self) -> str:
        return f"DivisorClass{self.coeffs}"


L = DivisorClass((1, 0, 0, 0, 0))
E = tuple(DivisorClass(tuple(1 if j == i + 1 else 0 for j in range(5))) for i in range(4))


def intersect(u: DivisorClass, v: DivisorClass) -> int:
    """Intersection number under the diagonal form (+1,-1,-1,-1,-1)."""
    a = u.coeffs
    b = v.coeffs
    return a[0] * b[0] - sum(a[i] * b[i] for i in range(1, 5))


def _build_curve_classes() -> dict[str, DivisorClass]:
    classes = {f"E{i+1}": E[i] for i in range(4)}
    for i in range(1, 5):
        for j in range(i + 1, 5):
            classes[f"D{i}{j}"] = L - E[i - 1] - E[j - 1]
    return classes


CURVE_CLASSES = _build_curve_classes()


def curve_class(name: str) -> DivisorClass:
    """Class of one of the ten (-1)-curves; E_i or D_ij = L - E_i - E_j."""
    return CURVE_CLASSES[name]


def canonical_class() -> DivisorClass:
    return DivisorClass((-3, 1, 1, 1, 1))


@dataclass(frozen=True)
class LatticeMap:
    """5x5 integer matrix acting on column coefficient vectors."""

    rows: tuple[tuple[int, ...], ...]

    def apply(self, v: DivisorClass) -> DivisorClass:
        return DivisorClass(
            tuple(sum(r[j] * v.coeffs[j] for j in range(5)) for r in self.rows)
        )

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """self after other (matrix product self @ other)."""
        cols = list(zip(*other.rows))
        return LatticeMap(
            tuple(
                tuple(sum(r[k] * c[k] for k in range(5)) for c in cols)
                for r in self.rows
            )
        )

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(5))

    @staticmethod
    def identity() -> "LatticeMap":
        return LatticeMap(tuple(tuple(1 if i == j else 0 for j in range(5)) for i in range(5)))


def lattice_map_from_curve_perm(sigma: Mapping[str, str]) -> LatticeMap:
    """Unique linear extension of a permutation of the ten (-1)-curves.

    sigma maps curve names to curve names and must preserve all pairwise
    intersection numbers; otherwise no consistent linear map exists and a
    ValueError is raised.  The matrix is determined by the images of the
    basis E1..E4 together with L = E1 + E2 + D12.
    """
    images = {c: curve_class(sigma[c]) for c in CURVES}
    l_image = images["E1"] + images["E2"] + images["D12"]
    columns = [l_image.coeffs] + [images[f"E{i}"].coeffs for i in range(1, 5)]
    m = LatticeMap(tuple(tuple(col[r] for col in columns) for r in range(5)))

    for c in CURVES:
        if m.apply(curve_class(c)) != images[c]:
            raise ValueError(f"curve permutation has no linear extension at {c}")
    for u in CURVES:
        cu = curve_class(u)
        for v in CURVES:
            cv = curve_class(v)
            if intersect(m.apply(cu), m.apply(cv)) != intersect(cu, cv):
                raise ValueError("curve permutation does not preserve the intersection form")
    k = canonical_class()
    if m.apply(k) != k:
        raise ValueError("curve permutation does not fix the canonical class")
    return m


def _integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    # inputs from curve-permutation maps have entries in [-3, 3]; Bareiss
    # keeps intermediates integral and far below any overflow concern here
    assert all(abs(x) <= 3 for r in m for x in r), "unexpectedly large matrix entry"
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


def fixed_rank(maps: Iterable[LatticeMap]) -> int:
    """Rank of the common fixed sublattice {v : Mv = v for all given maps}."""
    stacked: list[list[int]] = []
    ident = LatticeMap.identity()
    for m in maps:
        for i in range(5):
            stacked.append([m.rows[i][j] - ident.rows[i][j] for j in range(5)])
    if not stacked:
        return 5
    return 5 - _integer_rank(stacked)


def fixed_sublattice_basis(maps: Iterable[LatticeMap]) -> list[DivisorClass]:
    """Primitive basis of the common fixed sublattice, via exact RREF."""
    stacked: list[list[Fraction]] = []
    ident = LatticeMap.identity()
    for m in maps:
        for i in range(5):
            stacked.append([Fraction(m.rows[i][j] - ident.rows[i][j]) for j in range(5)])
    if not stacked:
        return [DivisorClass(tuple(1 if j == i else 0 for j in range(5))) for i in range(5)]

    # reduced row echelon form over Q
    rank = 0
    pivots = []
    for col in range(5):
        pivot = next((r for r in range(rank, len(stacked)) if stacked[r][col] != 0), None)
        if pivot is None:
            continue
        stacked[rank], stacked[pivot] = stacked[pivot], stacked[rank]
        pv = stacked[rank][col]
        stacked[rank] = [x / pv for x in stacked[rank]]
        for r in range(len(stacked)):
            if r != rank and stacked[r][col] != 0:
                f = stacked[r][col]
                stacked[r] = [x - f * y for x, y in zip(stacked[r], stacked[rank])]
        pivots.append(col)
        rank += 1

    free = [c for c in range(5) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * 5
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -stacked[r][fc]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        ints = [int(x * denom) for x in vec]
        g = 0
        for x in ints:
            g = _gcd(g, abs(x))
        if g > 1:
            ints = [x // g for x in ints]
        basis.append(DivisorClass(tuple(ints)))
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1

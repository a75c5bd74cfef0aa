"""Exact arithmetic in small finite fields and projective-plane geometry.

Fields GF(p^k) are represented with a pinned monic irreducible modulus per
(p, k); elements are coefficient vectors over GF(p) printed as polynomials
in "t".  On top of that sit projective points with canonical normalization,
Frobenius orbits, collinearity and general-position tests, conics through
five points, quadratic Cremona maps with sampled order certification, and
the explicit involution pairs used to check the classification's birational
models.  Everything is exact; "random" sampling is via caller-provided
seeded generators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

#: sentinel results, kept as readable strings
INDETERMINATE = "indeterminate"
DEGENERATE = "degenerate"
EXCEEDS_BOUND = "exceeds bound"

DEFAULT_SEED = 2025

_PRIMES = (2, 3, 5, 7, 11, 13, 17)

#: (p, k) -> monic modulus, ascending coefficients.  The degree-3 and
#: degree-4 binary entries are the classical x^3+x+1 and x^4+x+1; the rest
#: only need existence and determinism.  Irreducibility is re-verified at
#: construction time.
PINNED_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (1, 1, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
    (17, 2): (3, 0, 1),
}


# ---------------------------------------------------------------------------
# univariate polynomial helpers over GF(p), coefficients as int tuples
# (ascending degree, normalized mod p, no trailing zeros except for 0 itself)


def _poly_trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_divmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv_lb % p
        q[da - db] = coef
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
        a.pop()
    return _poly_trim(q), _poly_trim(a)


def _poly_is_irreducible(f, p):
    """Brute-force factor scan: no monic divisor of degree 1..deg/2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = tuple(tail) + (1,)
            _, r = _poly_divmod(f, g, p)
            if r == (0,):
                return False
    return True


def _smallest_irreducible(p, k):
    for tail in product(range(p), repeat=k):
        f = tuple(tail) + (1,)
        if _poly_is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible of degree {k} over GF({p})")


def poly_str(coeffs, var="X"):
    """Descending-degree rendering with explicit coefficients."""
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}{var}" + (f"^{d}" if d > 1 else ""))
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# fields and elements


class GF:
    """GF(p^k), p prime <= 17, k <= 4, with a pinned irreducible modulus."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        if p not in _PRIMES:
            raise ValueError(f"p must be a prime <= 17, got {p}")
        if not 1 <= k <= 4:
            raise ValueError(f"extension degree must be 1..4, got {k}")
        if k == 1:
            modulus = (0, 1)  # t itself; elements are constants
        elif modulus is None:
            modulus = PINNED_MODULI.get((p, k)) or _smallest_irreducible(p, k)
        modulus = _poly_trim(tuple(c % p for c in modulus))
        if k > 1 and not _poly_is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        if len(modulus) - 1 != k or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k
        # complete product/inverse caches; fields are tiny, so these stay
        # bounded by order^2 entries and turn hot loops into dict lookups
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.order}; t: {poly_str(self.modulus, 't')}=0)"

    def element(self, coeffs) -> "GFElement":
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = [x % self.p for x in coeffs]
        c += [0] * (self.k - len(c))
        if len(c) > self.k:
            raise ValueError("coefficient vector longer than extension degree")
        return GFElement(self, tuple(c))

    def zero(self) -> "GFElement":
        return self.element(0)

    def one(self) -> "GFElement":
        return self.element(1)

    def gen(self) -> "GFElement":
        """The residue of t (for k = 1 this is just 1)."""
        if self.k == 1:
            return self.one()
        return self.element((0, 1))

    def elements(self):
        """All p^k elements in lexicographic coefficient order."""
        for tail in product(range(self.p), repeat=self.k):
            yield GFElement(self, tail)


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> GF:
    return GF(p, k)


@dataclass(frozen=True)
class GFElement:
    field: GF
    coeffs: tuple

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("elements of different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return GFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return GFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        cache = self.field._mul_cache
        key = (self.coeffs, other.coeffs)
        hit = cache.get(key)
        if hit is not None:
            return hit
        p = self.field.p
        prod = _poly_mul(self.coeffs, other.coeffs, p)
        _, rem = _poly_divmod(prod, self.field.modulus, p)
        rem = list(rem) + [0] * (self.field.k - len(rem))
        result = GFElement(self.field, tuple(rem[: self.field.k]))
        cache[key] = result
        cache[(other.coeffs, self.coeffs)] = result
        return result

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        cache = self.field._inv_cache
        hit = cache.get(self.coeffs)
        if hit is None:
            hit = self ** (self.field.order - 2)
            cache[self.coeffs] = hit
        return hit

    def __truediv__(self, other):
        return self * other.inverse()

    def frobenius(self):
        """x -> x^p, the base-p Frobenius."""
        return self ** self.field.p

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def in_prime_field(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __str__(self):
        return poly_str(self.coeffs, "t")

    def __repr__(self):
        return f"<{self} in {self.field!r}>"


# ---------------------------------------------------------------------------
# projective points


def _normalize(coords):
    lead = next((c for c in coords if not c.is_zero()), None)
    if lead is None:
        raise ValueError("all coordinates zero")
    inv = lead.inverse()
    return tuple(c * inv for c in coords)


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^2, normalized so the first nonzero coordinate is 1."""

    coords: tuple

    def __init__(self, coords):
        object.__setattr__(self, "coords", _normalize(tuple(coords)))

    @property
    def field(self) -> GF:
        return self.coords[0].field

    def frobenius(self) -> "ProjPoint":
        return ProjPoint(tuple(c.frobenius() for c in self.coords))

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"ProjPoint{self.__str__()}"


def point(f: GF, a, b, c) -> ProjPoint:
    return ProjPoint((f.element(a), f.element(b), f.element(c)))


def plane_points(f: GF):
    """All points of P^2(GF(q)) in a fixed deterministic order."""
    one = f.one()
    zero = f.zero()
    pts = []
    for b in f.elements():
        for c in f.elements():
            pts.append(ProjPoint((one, b, c)))
    for c in f.elements():
        pts.append(ProjPoint((zero, one, c)))
    pts.append(ProjPoint((zero, zero, one)))
    return pts


def frobenius_orbit(pt: ProjPoint, base_p: int | None = None):
    """Orbit of a point under coordinate-wise x -> x^p; length divides k."""
    f = pt.field
    if base_p is None:
        base_p = f.p
    if base_p != f.p:
        raise ValueError(f"point lives over characteristic {f.p}, not {base_p}")
    orbit = [pt]
    cur = pt.frobenius()
    while cur != pt:
        orbit.append(cur)
        cur = cur.frobenius()
    assert f.k % len(orbit) == 0, "orbit length must divide the extension degree"
    return orbit


def _det3(rows):
    (a, b, c), (d, e, f_), (g, h, i) = rows
    return a * (e * i - f_ * h) - b * (d * i - f_ * g) + c * (d * h - e * g)


def collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    if not (a.field == b.field == c.field):
        raise ValueError("points of different fields")
    return _det3((a.coords, b.coords, c.coords)).is_zero()


def general_position(points) -> bool:
    """No three collinear; for five points the conic through them must be
    irreducible.  Requires 4 or 5 pairwise-distinct points."""
    pts = list(points)
    if len(pts) not in (4, 5):
        raise ValueError("general position test needs 4 or 5 points")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    from itertools import combinations

    if any(collinear(a, b, c) for a, b, c in combinations(pts, 3)):
        return False
    if len(pts) == 5:
        try:
            conic = conic_through_5(pts)
        except ValueError:
            return False
        if conic == DEGENERATE:
            return False
    return True


# ---------------------------------------------------------------------------
# ternary forms and quadratic maps

#: monomial exponent order for ternary quadratics
QUADRIC_MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


@dataclass(frozen=True)
class TernaryForm:
    """Homogeneous form in x, y, z as a sparse exponent -> coefficient map."""

    field: GF
    degree: int
    coeffs: tuple  # sorted tuple of ((i, j, k), GFElement) with nonzero values

    @staticmethod
    def make(f: GF, degree: int, table: dict) -> "TernaryForm":
        clean = []
        for expo, val in table.items():
            if isinstance(val, int):
                val = f.element(val)
            if sum(expo) != degree:
                raise ValueError(f"monomial {expo} has degree != {degree}")
            if not val.is_zero():
                clean.append((tuple(expo), val))
        return TernaryForm(f, degree, tuple(sorted(clean)))

    def evaluate(self, coords) -> GFElement:
        total = self.field.zero()
        for (i, j, k), val in self.coeffs:
            total = total + val * coords[0] ** i * coords[1] ** j * coords[2] ** k
        return total

    def is_zero(self) -> bool:
        return not self.coeffs

    def scaled_to_monic(self) -> "TernaryForm":
        """Scale so the first coefficient (in monomial order) is 1."""
        if not self.coeffs:
            return self
        inv = self.coeffs[0][1].inverse()
        return TernaryForm(
            self.field, self.degree, tuple((e, v * inv) for e, v in self.coeffs)
        )

    def divisible_by_linear(self, linear) -> bool:
        """Does the linear form a*x + b*y + c*z divide this form?

        Checked exactly by substituting the solved variable and testing that
        the restriction vanishes identically.
        """
        a, b, c = linear
        f = self.field
        # pick the variable with nonzero coefficient to eliminate
        if not a.is_zero():
            var, inv = 0, a.inverse()
            rest = (b, c)
        elif not b.is_zero():
            var, inv = 1, b.inverse()
            rest = (a, c)
        elif not c.is_zero():
            var, inv = 2, c.inverse()
            rest = (a, b)
        else:
            raise ValueError("zero linear form")
        # substitute x_var = -(sum of others)/coeff into the form; the
        # result is a binary form, zero iff the linear form divides
        others = [i for i in range(3) if i != var]
        acc: dict[tuple, GFElement] = {}
        for (i, j, k), val in self.coeffs:
            expo = (i, j, k)
            e_var = expo[var]
            e_rest = [expo[o] for o in others]
            # (-(r0*u + r1*v) * inv)^e_var expanded by binomial
            terms = {(0, 0): f.one()}
            for _ in range(e_var):
                nxt: dict[tuple, GFElement] = {}
                for (eu, ev), cval in terms.items():
                    for idx, r in enumerate(rest):
                        add = cval * (-(r * inv))
                        key = (eu + (1 - idx), ev + idx)
                        nxt[key] = nxt.get(key, f.zero()) + add
                terms = nxt
            for (eu, ev), cval in terms.items():
                key = (e_rest[0] + eu, e_rest[1] + ev)
                acc[key] = acc.get(key, f.zero()) + val * cval
        return all(v.is_zero() for v in acc.values())

    def linear_factors_over(self, f2: GF):
        """All projective linear forms over f2 dividing the form lifted to f2."""
        lifted = self.lift_to(f2)
        found = []
        one, zero = f2.one(), f2.zero()
        for b in f2.elements():
            for c in f2.elements():
                if lifted.divisible_by_linear((one, b, c)):
                    found.append((one, b, c))
        for c in f2.elements():
            if lifted.divisible_by_linear((zero, one, c)):
                found.append((zero, one, c))
        if lifted.divisible_by_linear((zero, zero, one)):
            found.append((zero, zero, one))
        return found

    def lift_to(self, f2: GF) -> "TernaryForm":
        """Reinterpret a prime-field form inside an extension field."""
        if f2 == self.field:
            return self
        if self.field.k != 1 or f2.p != self.field.p:
            raise ValueError("can only lift from the prime field")
        table = {e: f2.element(v.coeffs[0]) for e, v in self.coeffs}
        return TernaryForm.make(f2, self.degree, table)

    def is_degenerate_conic(self) -> bool:
        """Reducibility test for a ternary quadratic.

        Odd characteristic: vanishing of the symmetric-matrix determinant.
        Characteristic 2: scan for a linear factor over GF(q) and GF(q^2).
        """
        if self.degree != 2:
            raise ValueError("not a conic")
        f = self.field
        if f.p != 2:
            d = dict(self.coeffs)
            z = f.zero()

            def g(e):
                return d.get(e, z)

            two = f.element(2)
            m = (
                (two * g((2, 0, 0)), g((1, 1, 0)), g((1, 0, 1))),
                (g((1, 1, 0)), two * g((0, 2, 0)), g((0, 1, 1))),
                (g((1, 0, 1)), g((0, 1, 1)), two * g((0, 0, 2))),
            )
            return _det3(m).is_zero()
        if self.field.k * 2 > 4:
            raise NotImplementedError("char-2 conic degeneracy beyond GF(16) base")
        if self.linear_factors_over(self.field):
            return True
        return bool(self.linear_factors_over(field(f.p, f.k * 2)))

    def __str__(self):
        names = ("x", "y", "z")
        parts = []
        for (i, j, k), val in self.coeffs:
            mono = "".join(
                n + (f"^{e}" if e > 1 else "") for n, e in zip(names, (i, j, k)) if e
            )
            v = str(val)
            if v == "1" and mono:
                parts.append(mono)
            elif mono:
                parts.append(f"({v})*{mono}" if "+" in v else f"{v}*{mono}")
            else:
                parts.append(v)
        return " + ".join(parts) if parts else "0"


def conic_through_5(points):
    """The conic through five points of P^2, by solving the 5x6 system.

    Raises ValueError when the system has rank < 5 (no unique conic);
    returns DEGENERATE when the unique conic is reducible.
    """
    pts = list(points)
    if len(pts) != 5:
        raise ValueError("need exactly 5 points")
    f = pts[0].field
    if any(p.field != f for p in pts):
        raise ValueError("points of different fields")
    rows = [
        [pt.coords[0] ** i * pt.coords[1] ** j * pt.coords[2] ** k for (i, j, k) in QUADRIC_MONOMIALS]
        for pt in pts
    ]
    # Gaussian elimination over the field
    ncols = 6
    rank = 0
    pivots = []
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    if rank < 5:
        raise ValueError("points do not determine a unique conic (rank < 5)")
    free = next(c for c in range(ncols) if c not in pivots)
    sol = [f.zero()] * ncols
    sol[free] = f.one()
    for r, pc in enumerate(pivots):
        sol[pc] = -rows[r][free]
    form = TernaryForm.make(
        f, 2, {mono: sol[i] for i, mono in enumerate(QUADRIC_MONOMIALS)}
    ).scaled_to_monic()
    if form.is_degenerate_conic():
        return DEGENERATE
    return form


@dataclass(frozen=True)
class QuadraticMap:
    """Rational self-map of P^2 given by three forms of equal degree.

    Degree-2 maps are the quadratic Cremona transformations of interest;
    degree-1 maps are admitted as control oracles.  For degree 2 the three
    forms must not share a linear factor (the map would degenerate).
    """

    forms: tuple

    def __post_init__(self):
        f0 = self.forms[0]
        if len(self.forms) != 3 or any(g.degree != f0.degree for g in self.forms):
            raise ValueError("need three forms of equal degree")
        if f0.degree not in (1, 2):
            raise ValueError("only degree 1 or 2 supported")
        if any(g.is_zero() for g in self.forms):
            raise ValueError("zero component form")
        if f0.degree == 2:
            fld = f0.field
            one, zero = fld.one(), fld.zero()
            lines = [(one, b, c) for b in fld.elements() for c in fld.elements()]
            lines += [(zero, one, c) for c in fld.elements()]
            lines.append((zero, zero, one))
            for line in lines:
                if all(g.divisible_by_linear(line) for g in self.forms):
                    raise ValueError("component forms share a linear factor")

    @property
    def field(self) -> GF:
        return self.forms[0].field


def apply_map(m: QuadraticMap, pt: ProjPoint):
    """Evaluate; INDETERMINATE exactly when all three forms vanish."""
    values = tuple(g.evaluate(pt.coords) for g in m.forms)
    if all(v.is_zero() for v in values):
        return INDETERMINATE
    return ProjPoint(values)


def base_points(m: QuadraticMap):
    return [pt for pt in plane_points(m.field) if apply_map(m, pt) == INDETERMINATE]


def map_order(m: QuadraticMap, samples: int = 20, bound: int = 12, rng=None):
    """Smallest n <= bound with m^n = id on every sampled point whose whole
    forward orbit avoids indeterminacy.

    This certifies the order only on samples; it needs at least `samples`
    valid witnesses (ValueError otherwise) and returns EXCEEDS_BOUND when no
    n <= bound works.
    """
    rng = rng or random.Random(DEFAULT_SEED)
    pts = plane_points(m.field)
    rng.shuffle(pts)
    witnesses = []
    for start in pts:
        orbit = [start]
        ok = True
        for _ in range(bound):
            nxt = apply_map(m, orbit[-1])
            if nxt == INDETERMINATE:
                ok = False
                break
            orbit.append(nxt)
        if ok:
            witnesses.append(orbit)
            if len(witnesses) >= samples:
                break
    if len(witnesses) < samples:
        raise ValueError(f"only {len(witnesses)} valid sample points, need {samples}")
    for n in range(1, bound + 1):
        if all(w[n] == w[0] for w in witnesses):
            return n
    return EXCEEDS_BOUND


# ---------------------------------------------------------------------------
# the named maps


def _form(f, degree, table):
    return TernaryForm.make(f, degree, table)


def order5_map(f: GF) -> QuadraticMap:
    """[x:y:z] -> [x(z-y) : z(x-y) : xz], quadratic of sampled order five."""
    return QuadraticMap((
        _form(f, 2, {(1, 0, 1): 1, (1, 1, 0): -1}),
        _form(f, 2, {(1, 0, 1): 1, (0, 1, 1): -1}),
        _form(f, 2, {(1, 0, 1): 1}),
    ))


def order5_map_inverse(f: GF) -> QuadraticMap:
    """[x:y:z] -> [z(z-x) : (z-y)(z-x) : z(z-y)]."""
    return QuadraticMap((
        _form(f, 2, {(0, 0, 2): 1, (1, 0, 1): -1}),
        _form(f, 2, {(0, 0, 2): 1, (1, 0, 1): -1, (0, 1, 1): -1, (1, 1, 0): 1}),
        _form(f, 2, {(0, 0, 2): 1, (0, 1, 1): -1}),
    ))


def standard_involution(f: GF) -> QuadraticMap:
    """[x:y:z] -> [yz:xz:xy], the plain quadratic involution (order 2)."""
    return QuadraticMap((
        _form(f, 2, {(0, 1, 1): 1}),
        _form(f, 2, {(1, 0, 1): 1}),
        _form(f, 2, {(1, 1, 0): 1}),
    ))


def coordinate_swap(f: GF) -> QuadraticMap:
    """Linear control map [x:y:z] -> [y:x:z] (order 2)."""
    return QuadraticMap((
        _form(f, 1, {(0, 1, 0): 1}),
        _form(f, 1, {(1, 0, 0): 1}),
        _form(f, 1, {(0, 0, 1): 1}),
    ))


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class CheckReport:
    name: str
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(flag for _, flag in self.checks)

    def lines(self):
        out = [f"{'PASS' if self.ok else 'FAIL'} {self.name}"]
        for label, flag in self.checks:
            out.append(f"  [{'ok' if flag else 'FAIL'}] {label}")
        return out


def verify_plane_involution_pair(q: int, a1: GFElement | None = None) -> CheckReport:
    """The plane involution pair attached to two conjugate points of degree 2.

    Over GF(q^2)/GF(q) with a1 outside GF(q), a2 = a1^q and t = a1+a2:
    alpha: [x:y:z] -> [x-t*y : -y : z]   has order 2,
    beta:  [x:y:z] -> [x-t*y : z : -y]   has order 4,
    and they satisfy alpha beta alpha = beta^{-1}.  beta swaps the conjugate
    pairs s = {[a_i:1:0]} and r = {[a_i:0:1]}.  All identities are checked
    on every point of P^2(GF(q^2)).
    """
    if q not in _PRIMES:
        raise ValueError(f"q must be a prime <= 17, got {q}")
    f2 = field(q, 2)
    if a1 is None:
        a1 = f2.gen() + f2.one() if q == 3 else f2.gen()
    if a1.in_prime_field():
        raise ValueError("a1 must lie outside the prime field")
    a2 = a1 ** q
    t = a1 + a2
    if not t.in_prime_field():
        raise ValueError("trace escaped the base field")

    one, zero = f2.one(), f2.zero()
    alpha = QuadraticMap((
        _form(f2, 1, {(1, 0, 0): one, (0, 1, 0): -t}),
        _form(f2, 1, {(0, 1, 0): -one}),
        _form(f2, 1, {(0, 0, 1): one}),
    ))
    beta = QuadraticMap((
        _form(f2, 1, {(1, 0, 0): one, (0, 1, 0): -t}),
        _form(f2, 1, {(0, 0, 1): one}),
        _form(f2, 1, {(0, 1, 0): -one}),
    ))

    pts = plane_points(f2)

    def ap(m, p):
        r = apply_map(m, p)
        assert r != INDETERMINATE
        return r

    alpha2 = all(ap(alpha, ap(alpha, p)) == p for p in pts)
    beta2_nontrivial = any(ap(beta, ap(beta, p)) != p for p in pts)
    beta4 = all(ap(beta, ap(beta, ap(beta, ap(beta, p)))) == p for p in pts)
    relation = all(
        ap(alpha, ap(beta, ap(alpha, p))) == ap(beta, ap(beta, ap(beta, p)))
        for p in pts
    )
    s_pts = {ProjPoint((a1, one, zero)), ProjPoint((a2, one, zero))}
    r_pts = {ProjPoint((a1, zero, one)), ProjPoint((a2, zero, one))}
    swap = {ap(beta, p) for p in s_pts} == r_pts and {ap(beta, p) for p in r_pts} == s_pts
    witness = ap(beta, ProjPoint((a1, one, zero))) == ProjPoint((a2, zero, one))

    return CheckReport(
        name=f"plane involution pair over GF({q*q})/GF({q}), a1 = {a1}",
        checks=(
            ("alpha^2 = id on all points", alpha2),
            ("beta^2 != id", beta2_nontrivial),
            ("beta^4 = id on all points", beta4),
            ("alpha beta alpha = beta^-1", relation),
            ("beta exchanges the two conjugate degree-2 points", swap),
            ("beta([a1:1:0]) = [a2:0:1]", witness),
        ),
    )


# -- the twisted quadric: P^1 x P^1 over GF(q^2) with the swap-Frobenius twist


def p1_points(f: GF):
    pts = [(f.one(), b) for b in f.elements()]
    pts.append((f.zero(), f.one()))
    return pts


def _p1_normalize(u):
    if not u[0].is_zero():
        inv = u[0].inverse()
        return (f2_one(u), u[1] * inv)
    return (u[0], f2_one(u))


def f2_one(u):
    return u[0].field.one() if not u[0].is_zero() else u[1].field.one()


def quadric_twist(q: int):
    """tau(x, y) = (y^g, x^g) with g the q-power Frobenius of GF(q^2)."""

    def tau(pt):
        (u0, u1), (v0, v1) = pt
        return (
            _p1_normalize((v0 ** q, v1 ** q)),
            _p1_normalize((u0 ** q, u1 ** q)),
        )

    return tau


def verify_quadric_twist_involutions(q: int) -> CheckReport:
    """Three involutions of the twisted quadric commuting with the twist.

    On P^1 x P^1 over GF(q^2):
    alpha: ([u0:u1],[v0:v1]) -> ([u0:u0-u1],[v0:v0-v1])
    beta:  swaps the factors with a coordinate flip, ([v1:v0],[u1:u0])
    gamma: flips coordinates inside each factor, ([u1:u0],[v1:v0])
    Each is an involution, commutes with the twist tau, and permutes the
    diagonal triple p1=([1:0],[1:0]), p2=([0:1],[0:1]), p3=([1:1],[1:1]).
    All checks run over every point of the quadric.
    """
    if q not in _PRIMES:
        raise ValueError(f"q must be a prime <= 17, got {q}")
    f2 = field(q, 2)

    def alpha(pt):
        (u0, u1), (v0, v1) = pt
        return (_p1_normalize((u0, u0 - u1)), _p1_normalize((v0, v0 - v1)))

    def beta(pt):
        (u0, u1), (v0, v1) = pt
        return (_p1_normalize((v1, v0)), _p1_normalize((u1, u0)))

    def gamma(pt):
        (u0, u1), (v0, v1) = pt
        return (_p1_normalize((u1, u0)), _p1_normalize((v1, v0)))

    tau = quadric_twist(q)
    pts = [(u, v) for u in p1_points(f2) for v in p1_points(f2)]
    one, zero = f2.one(), f2.zero()
    p1 = ((one, zero), (one, zero))
    p2 = (_p1_normalize((zero, one)), _p1_normalize((zero, one)))
    p3 = ((one, one), (one, one))
    triple = {p1, p2, p3}

    checks = []
    for name, m in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        checks.append((f"{name}^2 = id on all points", all(m(m(p)) == p for p in pts)))
        checks.append(
            (f"{name} commutes with the twist", all(m(tau(p)) == tau(m(p)) for p in pts))
        )
        checks.append(
            (f"{name} permutes the diagonal triple", {m(p) for p in triple} == triple)
        )
    checks.append(("gamma(p1) = p2", gamma(p1) == p2))
    checks.append(("gamma(p3) = p3", gamma(p3) == p3))
    checks.append(("tau^2 = id on all points", all(tau(tau(p)) == p for p in pts)))

    return CheckReport(name=f"twisted quadric involutions over GF({q*q})/GF({q})", checks=tuple(checks))


# ---------------------------------------------------------------------------
# integer polynomial utilities: factorization mod p and the quartic
# discriminant via the Sylvester resultant


def factor_mod_p(poly, p: int):
    """Complete factorization over GF(p) by exhaustive monic-divisor scan.

    poly: integer coefficients, ascending degree, degree <= 4.  Returns
    (unit, factors) with unit in GF(p)* and factors a sorted tuple of monic
    irreducible coefficient tuples, repeats included.
    """
    if p not in _PRIMES:
        raise ValueError(f"p must be a prime <= 17, got {p}")
    f = _poly_trim(tuple(c % p for c in poly))
    if f == (0,):
        raise ValueError("zero polynomial")
    if len(f) - 1 > 4:
        raise ValueError("degree must be <= 4")
    unit = f[-1]
    inv = pow(unit, p - 2, p)
    f = tuple(c * inv % p for c in f)
    factors = []
    while len(f) > 1:
        deg = len(f) - 1
        hit = None
        for d in range(1, deg // 2 + 1):
            for tail in product(range(p), repeat=d):
                g = tuple(tail) + (1,)
                quot, rem = _poly_divmod(f, g, p)
                if rem == (0,):
                    hit = (g, quot)
                    break
            if hit:
                break
        if hit is None:
            factors.append(f)  # the smallest-degree divisor is irreducible
            break
        g, quot = hit
        factors.append(g)
        f = quot
    return unit, tuple(sorted(factors))


def _int_det(rows) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(f, g) -> int:
    """Res(f, g) over the integers via the Sylvester determinant."""
    f = _poly_trim(f)
    g = _poly_trim(g)
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    rows = []
    fd = list(reversed(f))  # descending
    gd = list(reversed(g))
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return _int_det(rows)


def quartic_discriminant(poly) -> int:
    """Discriminant of an integer quartic: (-1)^6 Res(P, P')/lc(P)."""
    f = _poly_trim(poly)
    if len(f) - 1 != 4:
        raise ValueError("degree must be exactly 4")
    deriv = tuple(i * f[i] for i in range(1, 5))
    res = resultant(f, deriv)
    assert res % f[-1] == 0
    return res // f[-1]

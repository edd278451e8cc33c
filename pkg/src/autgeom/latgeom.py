"""Exact rational lattice geometry in three dimensions.

Lattices are Z-modules spanned by up to four rational vectors, carried
by a canonical Hermite-style echelon basis.  Voronoi (equivalently
Dirichlet) cells of rank-3 lattices are computed as exact convex
polytopes: candidate bisector halfspaces come from small coefficient
boxes over the basis, vertices from plane triples, and the result is
post-verified by the two authoritative gates -- every vertex minimizes
its distance over the candidate lattice points, and the cell volume
equals the covolume of the lattice (the tiling condition).

Every quantity is a Fraction; lengths are handled as squared values so
no square root is ever taken.  A claimed diagonal ratio of 1:sqrt(2)
therefore appears as a squared ratio of exactly 2.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "Vec3",
    "Lattice",
    "Polytope",
    "OctoReport",
    "FaceShape",
    "Classification",
    "vec3",
    "lattice_from",
    "contains",
    "covolume",
    "voronoi_cell",
    "polytope_volume",
    "classify",
    "octo_check",
    "export_off",
    "rotation_from_quaternion",
    "apply_matrix",
]


@dataclass(frozen=True)
class Vec3:
    """A point or vector with exact rational coordinates."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def scale(self, c) -> "Vec3":
        f = Fraction(c)
        return Vec3(self.x * f, self.y * f, self.z * f)

    def dot(self, other: "Vec3") -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm_sq(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)


def vec3(x, y, z) -> Vec3:
    """Build a Vec3 from ints, Fractions, or rational strings like '1/2'."""
    return Vec3(Fraction(x), Fraction(y), Fraction(z))


ZERO = vec3(0, 0, 0)


@dataclass(frozen=True)
class Lattice:
    """A Z-module in rational 3-space with its canonical echelon basis."""

    generators: tuple[Vec3, ...]
    basis: tuple[Vec3, ...]
    rank: int


def _common_denominator(vectors: Iterable[Vec3]) -> int:
    den = 1
    for v in vectors:
        for c in v.coords():
            den = den * c.denominator // gcd(den, c.denominator)
    return den


def _int_rows(vectors: Sequence[Vec3]) -> tuple[list[list[int]], int]:
    den = _common_denominator(vectors)
    rows = [[int(c * den) for c in v.coords()] for v in vectors]
    return rows, den


def _hnf(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Hermite-style row echelon form over Z with transform tracking.

    Returns (echelon rows without the zero tail, transform rows U) with
    echelon[i] == sum_j U[i][j] * rows[j].  Pivots are positive and the
    entries above each pivot are reduced into [0, pivot).
    """
    m = [r[:] for r in rows]
    n = len(m)
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    h = 0
    for col in range(3):
        while True:
            live = [r for r in range(h, n) if m[r][col] != 0]
            if not live:
                break
            r0 = min(live, key=lambda r: abs(m[r][col]))
            m[h], m[r0] = m[r0], m[h]
            u[h], u[r0] = u[r0], u[h]
            done = True
            for r in range(h + 1, n):
                if m[r][col] != 0:
                    q = m[r][col] // m[h][col]
                    m[r] = [a - q * b for a, b in zip(m[r], m[h])]
                    u[r] = [a - q * b for a, b in zip(u[r], u[h])]
                    if m[r][col] != 0:
                        done = False
            if done:
                break
        if h < n and m[h][col] != 0:
            if m[h][col] < 0:
                m[h] = [-a for a in m[h]]
                u[h] = [-a for a in u[h]]
            for r in range(h):
                q = m[r][col] // m[h][col]
                if q:
                    m[r] = [a - q * b for a, b in zip(m[r], m[h])]
                    u[r] = [a - q * b for a, b in zip(u[r], u[h])]
            h += 1
    return m[:h], u[:h]


def _member_coeffs(basis_rows: list[list[int]], v: list[int]) -> list[int] | None:
    """Integer coefficients of v over echelon basis rows, or None."""
    rest = v[:]
    coeffs = []
    for row in basis_rows:
        col = next(c for c in range(3) if row[c] != 0)
        if rest[col] % row[col] != 0:
            return None
        q = rest[col] // row[col]
        rest = [a - q * b for a, b in zip(rest, row)]
        coeffs.append(q)
    if any(rest):
        return None
    return coeffs


def lattice_from(gens: Sequence[Vec3]) -> Lattice:
    """Build a lattice from 1..4 rational generators.

    The basis is the Hermite-style echelon reduction of the generators;
    both inclusions between the generator module and the basis module
    are verified exactly before returning.
    """
    gens = tuple(gens)
    if not 1 <= len(gens) <= 4:
        raise ValueError(f"need 1..4 generators, got {len(gens)}")
    if all(g.is_zero() for g in gens):
        raise ValueError("all generators are zero")
    rows, den = _int_rows(gens)
    basis_rows, transform = _hnf(rows)
    basis = tuple(
        Vec3(Fraction(r[0], den), Fraction(r[1], den), Fraction(r[2], den))
        for r in basis_rows
    )
    # Two-way membership: each basis vector is the tracked integer
    # combination of the generators, and each generator reduces to zero
    # against the basis.
    for i, coeffs in enumerate(transform):
        acc = ZERO
        for c, g in zip(coeffs, gens):
            acc = acc + g.scale(c)
        if acc != basis[i]:
            raise RuntimeError("echelon transform failed verification")
    for row in rows:
        if _member_coeffs(basis_rows, row) is None:
            raise RuntimeError("generator not contained in echelon basis module")
    return Lattice(gens, basis, len(basis_rows))


def contains(lat: Lattice, v: Vec3) -> bool:
    """Exact membership of a rational point in the lattice."""
    rows, den = _int_rows(lat.basis)
    scaled = [v.x * den, v.y * den, v.z * den]
    if any(c.denominator != 1 for c in scaled):
        return False
    return _member_coeffs(rows, [int(c) for c in scaled]) is not None


def covolume(lat: Lattice) -> Fraction:
    """|det| of the basis for rank-3 lattices."""
    if lat.rank != 3:
        raise ValueError(f"covolume needs rank 3, got rank {lat.rank}")
    b = lat.basis
    return abs(b[0].dot(b[1].cross(b[2])))


# ---------------------------------------------------------------------------
# Voronoi cells.
# ---------------------------------------------------------------------------


def _lll(rows: list[list[int]]) -> list[list[int]]:
    """Exact LLL reduction (delta = 3/4) of independent integer rows."""
    b = [r[:] for r in rows]
    n = len(b)

    def gram_schmidt():
        star: list[list[Fraction]] = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                denom = sum(x * x for x in star[j])
                mu[i][j] = sum(Fraction(b[i][k]) * star[j][k] for k in range(3)) / denom
                v = [v[k] - mu[i][j] * star[j][k] for k in range(3)]
            star.append(v)
        return star, mu

    star, mu = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [a - q * c for a, c in zip(b[k], b[j])]
                star, mu = gram_schmidt()
        lhs = sum(x * x for x in star[k])
        rhs = (Fraction(3, 4) - mu[k][k - 1] ** 2) * sum(x * x for x in star[k - 1])
        if lhs >= rhs:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            star, mu = gram_schmidt()
            k = max(k - 1, 1)
    return b


@dataclass(frozen=True)
class Polytope:
    """An exact convex 3-polytope.

    ``faces[k]`` is the cyclic vertex-index cycle of the face supported
    by ``halfspaces[k]`` (pairs (normal a, offset c) meaning x.a <= c).
    """

    vertices: tuple[Vec3, ...]
    faces: tuple[tuple[int, ...], ...]
    halfspaces: tuple[tuple[Vec3, Fraction], ...]

    def __post_init__(self) -> None:
        if len(self.faces) != len(self.halfspaces):
            raise ValueError("faces and halfspaces must correspond one-to-one")
        edges = set()
        for cycle, (normal, offset) in zip(self.faces, self.halfspaces):
            if len(cycle) < 3:
                raise ValueError("face with fewer than three vertices")
            for idx in cycle:
                if self.vertices[idx].dot(normal) != offset:
                    raise ValueError("face vertex misses its supporting plane")
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                edges.add(frozenset((a, b)))
        v, e, f = len(self.vertices), len(edges), len(self.faces)
        if v - e + f != 2:
            raise ValueError(f"Euler check failed: V={v} E={e} F={f}")

    def edge_count(self) -> int:
        edges = set()
        for cycle in self.faces:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                edges.add(frozenset((a, b)))
        return len(edges)

    def f_vector(self) -> tuple[int, int, int]:
        return (len(self.vertices), self.edge_count(), len(self.faces))


def _solve_planes(p1, p2, p3) -> Vec3 | None:
    """Intersection point of three planes given as (normal, offset)."""
    (a1, d1), (a2, d2), (a3, d3) = p1, p2, p3
    det = a1.dot(a2.cross(a3))
    if det == 0:
        return None
    # Cramer's rule: replace each column of [a1; a2; a3] by the offsets.
    x = Vec3(d1, a1.y, a1.z).dot(Vec3(d2, a2.y, a2.z).cross(Vec3(d3, a3.y, a3.z)))
    y = Vec3(a1.x, d1, a1.z).dot(Vec3(a2.x, d2, a2.z).cross(Vec3(a3.x, d3, a3.z)))
    z = Vec3(a1.x, a1.y, d1).dot(Vec3(a2.x, a2.y, d2).cross(Vec3(a3.x, a3.y, d3)))
    return Vec3(x / det, y / det, z / det)


def _cyclic_order(indices: list[int], points: Sequence[Vec3], normal: Vec3) -> tuple[int, ...]:
    """Order coplanar vertices into a convex cycle, deterministically.

    Coordinates in the plane are taken against the exact frame
    (u, normal x u); cyclic order of rays around the interior centroid
    is invariant under the linear change of frame, and the angular
    comparison itself uses only sign tests on rational cross products.
    """
    centroid = ZERO
    for i in indices:
        centroid = centroid + points[i]
    centroid = centroid.scale(Fraction(1, len(indices)))
    u = points[indices[0]] - centroid
    w = normal.cross(u)

    def angle_key(i: int):
        d = points[i] - centroid
        s, t = d.dot(u), d.dot(w)
        half = 0 if (t > 0 or (t == 0 and s > 0)) else 1
        return half, s, t

    def cmp(i: int, j: int) -> int:
        hi, si, ti = angle_key(i)
        hj, sj, tj = angle_key(j)
        if hi != hj:
            return -1 if hi < hj else 1
        cross = si * tj - ti * sj
        if cross == 0:
            return 0
        return -1 if cross > 0 else 1

    ordered = sorted(indices, key=functools.cmp_to_key(cmp))
    # Canonical form: start at the smallest index, then pick the direction
    # whose next index is smaller.
    start = ordered.index(min(ordered))
    cycle = ordered[start:] + ordered[:start]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[1:][::-1]
    return tuple(cycle)


def polytope_volume(poly: Polytope) -> Fraction:
    """Exact volume via origin-apex pyramids over each face."""
    total = Fraction(0)
    for cycle in poly.faces:
        v0 = poly.vertices[cycle[0]]
        signed = Fraction(0)
        for a, b in zip(cycle[1:], cycle[2:]):
            va, vb = poly.vertices[a], poly.vertices[b]
            signed += v0.dot(va.cross(vb))
        total += abs(signed)
    return total / 6


def _candidate_vectors(lat: Lattice) -> tuple[list[tuple[Vec3, tuple[int, int, int]]], list[Vec3]]:
    """Nonzero lattice vectors from coefficient boxes over two bases.

    Returns (classified, all_candidates): ``classified`` pairs each
    candidate with its coefficient parity class over the echelon basis
    (vectors in twice the lattice are excluded, as they never support a
    facet); ``all_candidates`` is the raw deduplicated box, used by the
    a-posteriori vertex gate.

    The [-2, 2]^3 box over the echelon basis is the primary candidate
    source; the same box over an LLL-reduced basis is added because the
    echelon basis of a rotated lattice can be arbitrarily far from
    reduced, while every facet normal has small coefficients over a
    reduced basis.  The union can only add redundant halfspaces, and the
    post-verification gates remain authoritative.
    """
    rows, den = _int_rows(lat.basis)
    reduced = _lll(rows)
    # Express the reduced basis over the echelon basis (integer change of
    # basis) so parity classes can be computed for both boxes.
    change = []
    for r in reduced:
        coeffs = _member_coeffs(rows, r)
        if coeffs is None:
            raise RuntimeError("LLL basis left the lattice")
        change.append(coeffs)

    by_vector: dict[tuple[int, int, int], tuple[int, int, int]] = {}
    box = [c for c in itertools.product(range(-2, 3), repeat=3) if c != (0, 0, 0)]
    for c in box:
        ints = tuple(
            sum(c[j] * rows[j][k] for j in range(3)) for k in range(3)
        )
        by_vector.setdefault(ints, c)
        ints2 = tuple(
            sum(c[j] * reduced[j][k] for j in range(3)) for k in range(3)
        )
        coeffs2 = tuple(
            sum(c[j] * change[j][k] for j in range(3)) for k in range(3)
        )
        by_vector.setdefault(ints2, coeffs2)

    classified = []
    everything = []
    for ints, coeffs in by_vector.items():
        v = Vec3(Fraction(ints[0], den), Fraction(ints[1], den), Fraction(ints[2], den))
        everything.append(v)
        parity = (coeffs[0] % 2, coeffs[1] % 2, coeffs[2] % 2)
        if parity != (0, 0, 0):
            classified.append((v, parity))
    return classified, everything


def voronoi_cell(lat: Lattice) -> Polytope:
    """The exact Voronoi cell {x : |x| <= |x - a| for all a in the lattice}.

    Candidate bisector halfspaces x.a <= |a|^2/2 are drawn from the
    coefficient boxes described in ``_candidate_vectors`` and pruned to
    the minimal-norm vectors of each nonzero coefficient-parity class
    (a superset of the facet normals).  Vertices are intersections of
    plane triples satisfying every candidate constraint.  Before
    returning, two gates are enforced exactly: each vertex is at minimal
    squared distance from the origin among all candidate lattice points,
    and the cell volume equals |det basis|, i.e. the cell tiles.
    """
    if lat.rank != 3:
        raise ValueError(f"Voronoi cell needs a rank-3 lattice, got rank {lat.rank}")
    classified, everything = _candidate_vectors(lat)

    minima: dict[tuple[int, int, int], list[Vec3]] = {}
    best: dict[tuple[int, int, int], Fraction] = {}
    for v, parity in classified:
        n = v.norm_sq()
        if parity not in best or n < best[parity]:
            best[parity] = n
            minima[parity] = [v]
        elif n == best[parity]:
            minima[parity].append(v)
    kept = [v for group in minima.values() for v in group]
    planes = [(a, a.norm_sq() / 2) for a in kept]

    points: dict[tuple[Fraction, Fraction, Fraction], Vec3] = {}
    for p1, p2, p3 in itertools.combinations(planes, 3):
        pt = _solve_planes(p1, p2, p3)
        if pt is None:
            continue
        if all(pt.dot(a) <= c for a, c in planes):
            points.setdefault(pt.coords(), pt)

    vertices = tuple(sorted(points.values(), key=Vec3.coords))
    if not vertices:
        raise RuntimeError("no Voronoi vertices found")

    # Gate 1: every vertex minimizes its distance over the candidates,
    # equivalently satisfies every candidate halfspace.
    for v in vertices:
        for a in everything:
            if v.dot(a) > a.norm_sq() / 2:
                raise RuntimeError(
                    "vertex fails the minimal-distance gate; candidate box too small"
                )

    faces = []
    halfspaces = []
    for a, c in planes:
        tight = [i for i, v in enumerate(vertices) if v.dot(a) == c]
        if len(tight) < 3:
            continue
        cycle = _cyclic_order(tight, vertices, a)
        faces.append(cycle)
        halfspaces.append((a, c))
    order = sorted(range(len(faces)), key=lambda k: tuple(sorted(faces[k])))
    poly = Polytope(
        vertices,
        tuple(faces[k] for k in order),
        tuple(halfspaces[k] for k in order),
    )

    # Gate 2: the cell tiles, so its volume is exactly the covolume.
    if polytope_volume(poly) != covolume(lat):
        raise RuntimeError("volume gate failed; computed cell does not tile")
    return poly


# ---------------------------------------------------------------------------
# Classification and the four-vector conditions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceShape:
    sides: int
    edge_lengths_sq: tuple[Fraction, ...]
    is_rhombus: bool
    diag_ratio_sq: Fraction | None


@dataclass(frozen=True)
class Classification:
    f_vector: tuple[int, int, int]
    faces: tuple[FaceShape, ...]
    is_rhombic_dodecahedron: bool
    is_cube: bool


def classify(poly: Polytope) -> Classification:
    """f-vector and per-face shape data, with the two named verdicts.

    A rhombic dodecahedron must have f-vector (14, 24, 12) with twelve
    rhombic faces whose squared diagonal ratio is exactly 2; a cube has
    f-vector (8, 12, 6) with six square faces (rhombi with equal
    diagonals).
    """
    shapes = []
    for cycle in poly.faces:
        pts = [poly.vertices[i] for i in cycle]
        edges = tuple(
            (b - a).norm_sq() for a, b in zip(pts, pts[1:] + pts[:1])
        )
        if any(e == 0 for e in edges):
            raise ValueError("degenerate face with a zero-length edge")
        rhombus = len(cycle) == 4 and len(set(edges)) == 1
        ratio = None
        if len(cycle) == 4:
            d1 = (pts[2] - pts[0]).norm_sq()
            d2 = (pts[3] - pts[1]).norm_sq()
            ratio = max(d1, d2) / min(d1, d2)
        shapes.append(FaceShape(len(cycle), edges, rhombus, ratio))
    fv = poly.f_vector()
    all_rhombi = all(s.is_rhombus for s in shapes)
    is_rd = fv == (14, 24, 12) and all_rhombi and all(
        s.diag_ratio_sq == 2 for s in shapes
    )
    is_cube = fv == (8, 12, 6) and all_rhombi and all(
        s.diag_ratio_sq == 1 for s in shapes
    )
    return Classification(fv, tuple(shapes), is_rd, is_cube)


@dataclass(frozen=True)
class OctoReport:
    norms_sq: tuple[Fraction, Fraction, Fraction, Fraction]
    common_norm_sq: Fraction | None
    equal_nonzero_norms: bool
    sums_agree: bool
    pairs_orthogonal: bool
    differences_orthogonal: bool
    lattice_rank: int

    @property
    def all_pass(self) -> bool:
        return (
            self.equal_nonzero_norms
            and self.sums_agree
            and self.pairs_orthogonal
            and self.differences_orthogonal
        )


def octo_check(u1: Vec3, u2: Vec3, v1: Vec3, v2: Vec3) -> OctoReport:
    """The three four-vector conditions guaranteeing a rhombic-dodecahedral
    Dirichlet domain:

        (1) u1 + u2 = v1 + v2,
        (2) u1 . u2 = 0 and v1 . v2 = 0,
        (3) (u1 - u2) . (v1 - v2) = 0,

    together with the requirement that all four vectors share one
    nonzero squared norm (any common scale is accepted and reported;
    exact unit vectors are not representable rationally in general).
    The rank of the generated lattice is included: when every condition
    holds, the four vectors necessarily span all of 3-space.
    """
    norms = (u1.norm_sq(), u2.norm_sq(), v1.norm_sq(), v2.norm_sq())
    equal_norms = len(set(norms)) == 1 and norms[0] != 0
    rank = 0
    if any(not v.is_zero() for v in (u1, u2, v1, v2)):
        rank = lattice_from((u1, u2, v1, v2)).rank
    return OctoReport(
        norms_sq=norms,
        common_norm_sq=norms[0] if equal_norms else None,
        equal_nonzero_norms=equal_norms,
        sums_agree=(u1 + u2) == (v1 + v2),
        pairs_orthogonal=(u1.dot(u2) == 0 and v1.dot(v2) == 0),
        differences_orthogonal=(u1 - u2).dot(v1 - v2) == 0,
        lattice_rank=rank,
    )


# ---------------------------------------------------------------------------
# OFF export and rational rotations.
# ---------------------------------------------------------------------------


def _decimal_str(x: Fraction, digits: int) -> str:
    """Exact decimal rendering with the given number of fraction digits."""
    q = 10 ** digits
    scaled = abs(x.numerator) * q
    t, r = divmod(scaled, x.denominator)
    if 2 * r >= x.denominator:
        t += 1
    sign = "-" if x < 0 and t > 0 else ""
    if digits == 0:
        return f"{sign}{t}"
    return f"{sign}{t // q}.{t % q:0{digits}d}"


def export_off(poly: Polytope, path: str, precision: int = 6) -> tuple[str, str]:
    """Write an OFF file plus an exact JSON sidecar.

    The OFF file renders coordinates as decimal strings with the given
    precision; the sidecar at ``<path>.json`` carries every vertex
    coordinate as an exact [numerator, denominator] pair along with the
    face cycles and the defining halfspaces.
    """
    lines = ["OFF"]
    lines.append(
        f"{len(poly.vertices)} {len(poly.faces)} {poly.edge_count()}"
    )
    for v in poly.vertices:
        lines.append(
            " ".join(_decimal_str(c, precision) for c in v.coords())
        )
    for cycle in poly.faces:
        lines.append(" ".join(str(n) for n in (len(cycle), *cycle)))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")

    sidecar = path + ".json"
    data = {
        "vertices": [
            [[c.numerator, c.denominator] for c in v.coords()]
            for v in poly.vertices
        ],
        "faces": [list(cycle) for cycle in poly.faces],
        "halfspaces": [
            {
                "normal": [[c.numerator, c.denominator] for c in a.coords()],
                "offset": [c.numerator, c.denominator],
            }
            for a, c in poly.halfspaces
        ],
    }
    with open(sidecar, "w", encoding="ascii") as fh:
        json.dump(data, fh, indent=1)
    return path, sidecar


def rotation_from_quaternion(a: int, b: int, c: int, d: int) -> list[list[Fraction]]:
    """The exact rational rotation matrix of an integer quaternion.

    Any nonzero integer quadruple gives an orthogonal matrix with
    rational entries and determinant +1, which is how the test suites
    produce exact rigid motions.
    """
    n = a * a + b * b + c * c + d * d
    if n == 0:
        raise ValueError("zero quaternion")
    rows = [
        [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
        [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
        [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
    ]
    m = [[Fraction(x, n) for x in row] for row in rows]
    for i in range(3):
        for j in range(3):
            expected = Fraction(int(i == j))
            assert sum(m[i][k] * m[j][k] for k in range(3)) == expected
    return m


def apply_matrix(m: Sequence[Sequence[Fraction]], v: Vec3) -> Vec3:
    coords = v.coords()
    out = [sum(Fraction(m[i][k]) * coords[k] for k in range(3)) for i in range(3)]
    return Vec3(out[0], out[1], out[2])

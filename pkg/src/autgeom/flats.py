"""Euclidean model computations: translation actions, affine isometries
with signed block-permutation rotational parts, induced actions on
finite products, the collinear-equidistance degeneracy certificate, and
the canonical flat model for the commuting Nielsen family.

Every length is kept as a squared rational, so the module never takes a
square root and all comparisons are exact.  Orthogonal parts are
restricted to signed block permutations: these cover every isometry the
Euclidean model needs (inductions permute factors, flats carry pure
translations) while keeping the fixed-space projection exact and total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .latgeom import (
    Classification,
    Lattice,
    OctoReport,
    Polytope,
    classify,
    lattice_from,
    octo_check,
    vec3,
    voronoi_cell,
)

__all__ = [
    "TranslationAction",
    "AffineIsometry",
    "TranslationLength",
    "trans_length_sq",
    "induced_action",
    "cyclic_induced",
    "EquidistanceCertificate",
    "equidistant_forces_zero",
    "equidistant_check",
    "NielsenFlatModel",
    "nielsen_flat",
    "NIELSEN_FLAT_GENERATORS",
]


def _fracs(values: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class TranslationAction:
    """A homomorphism Z^r -> (translations of Q^dim), one vector per
    free-abelian generator."""

    dim: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        for v in self.vectors:
            if len(v) != self.dim:
                raise ValueError("translation vector has wrong dimension")

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def translation(self, exponents: Sequence[int]) -> tuple[Fraction, ...]:
        """The translation vector of the group element with these exponents."""
        if len(exponents) != self.rank:
            raise ValueError(f"need {self.rank} exponents, got {len(exponents)}")
        out = [Fraction(0)] * self.dim
        for n, v in zip(exponents, self.vectors):
            for k in range(self.dim):
                out[k] += n * v[k]
        return tuple(out)


@dataclass(frozen=True)
class AffineIsometry:
    """x -> O x + t with O a signed block permutation.

    The space splits into ``len(source)`` blocks of ``block_dim``
    coordinates; output block i is ``signs[i]`` times input block
    ``source[i]``.  That structure makes O orthogonal by construction
    and of finite order, so the isometry is always semisimple.
    """

    block_dim: int
    source: tuple[int, ...]
    signs: tuple[int, ...]
    translation: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        d = len(self.source)
        if sorted(self.source) != list(range(d)):
            raise ValueError("source is not a permutation of the blocks")
        if len(self.signs) != d or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1, one per block")
        if len(self.translation) != d * self.block_dim:
            raise ValueError("translation has wrong dimension")

    @property
    def blocks(self) -> int:
        return len(self.source)

    @property
    def dim(self) -> int:
        return self.block_dim * len(self.source)

    @classmethod
    def pure_translation(cls, vector: Sequence) -> "AffineIsometry":
        v = _fracs(vector)
        return cls(len(v), (0,), (1,), v)

    @classmethod
    def identity(cls, block_dim: int, blocks: int) -> "AffineIsometry":
        return cls(
            block_dim,
            tuple(range(blocks)),
            (1,) * blocks,
            (Fraction(0),) * (block_dim * blocks),
        )

    def _rotate(self, point: Sequence[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        k = self.block_dim
        for i in range(self.blocks):
            src = self.source[i]
            for j in range(k):
                out[i * k + j] = self.signs[i] * point[src * k + j]
        return out

    def apply(self, point: Sequence) -> tuple[Fraction, ...]:
        rotated = self._rotate(_fracs(point))
        return tuple(r + t for r, t in zip(rotated, self.translation))

    def compose(self, other: "AffineIsometry") -> "AffineIsometry":
        """self after other."""
        if self.block_dim != other.block_dim or self.blocks != other.blocks:
            raise ValueError("incompatible block structures")
        source = tuple(other.source[self.source[i]] for i in range(self.blocks))
        signs = tuple(
            self.signs[i] * other.signs[self.source[i]] for i in range(self.blocks)
        )
        translation = tuple(
            r + t for r, t in zip(self._rotate(other.translation), self.translation)
        )
        return AffineIsometry(self.block_dim, source, signs, translation)

    def power(self, k: int) -> "AffineIsometry":
        if k < 0:
            raise ValueError("negative powers are not needed here")
        out = AffineIsometry.identity(self.block_dim, self.blocks)
        for _ in range(k):
            out = out.compose(self)
        return out

    def orthogonal_matrix(self) -> list[list[Fraction]]:
        n = self.dim
        k = self.block_dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for i in range(self.blocks):
            for j in range(k):
                m[i * k + j][self.source[i] * k + j] = Fraction(self.signs[i])
        return m


@dataclass(frozen=True)
class TranslationLength:
    length_sq: Fraction
    min_point: tuple[Fraction, ...]


def trans_length_sq(g: AffineIsometry) -> TranslationLength:
    """Squared translation length and a witness point where it is attained.

    The squared length is the squared norm of the projection of the
    translation part onto the fixed space of the rotational part; the
    witness solves (O - I) x = -(t - proj t), so g moves it by exactly
    proj t.  A zero length means g is elliptic and the witness is a
    fixed point.
    """
    o = g.orthogonal_matrix()
    n = g.dim
    a = [[o[i][j] - Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    fixed = linalg.kernel(a)
    proj = linalg.project_onto_span(fixed, g.translation)
    residual = [-(t - p) for t, p in zip(g.translation, proj)]
    witness = linalg.solve(a, residual)
    assert witness is not None, "fixed-space projection left an unsolvable residual"
    moved = g.apply(witness)
    length_sq = sum((m - w) ** 2 for m, w in zip(moved, witness))
    assert length_sq == linalg.dot(proj, proj)
    return TranslationLength(length_sq, tuple(witness))


def induced_action(
    perm: Sequence[int], base: Sequence[AffineIsometry]
) -> AffineIsometry:
    """Induce one group element through a finite-index subgroup.

    ``perm[i]`` says which coset the element sends coset i to, and
    ``base[i]`` is the isometry of the subgroup element it carries along
    that route; output block perm[i] of the product space receives
    base[i] applied to input block i.  Inducing each element of a group
    this way is functorial, which is what the tests exercise.
    """
    d = len(perm)
    if sorted(perm) != list(range(d)):
        raise ValueError("perm is not a permutation of the cosets")
    if len(base) != d:
        raise ValueError(f"need {d} base isometries, got {len(base)}")
    k = base[0].block_dim
    m = base[0].blocks
    for iso in base:
        if iso.block_dim != k or iso.blocks != m:
            raise ValueError("base isometries have inconsistent block structure")

    source = [0] * (d * m)
    signs = [1] * (d * m)
    translation = [Fraction(0)] * (d * m * k)
    for i in range(d):
        out = perm[i]
        for j in range(m):
            source[out * m + j] = i * m + base[i].source[j]
            signs[out * m + j] = base[i].signs[j]
        for j in range(m * k):
            translation[out * m * k + j] = base[i].translation[j]
    return AffineIsometry(k, tuple(source), tuple(signs), tuple(translation))


def cyclic_induced(d: int, ell) -> AffineIsometry:
    """Induce the generator of Z through its index-d subgroup, where the
    subgroup generator translates the line by ell.

    The result is the d-block cyclic isometry whose squared translation
    length is ell^2 / d.
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    ell = Fraction(ell)
    base = [AffineIsometry.pure_translation([Fraction(0)]) for _ in range(d - 1)]
    base.append(AffineIsometry.pure_translation([ell]))
    perm = tuple((i + 1) % d for i in range(d))
    return induced_action(perm, base)


# ---------------------------------------------------------------------------
# The equidistance degeneracy.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EquidistanceCertificate:
    """Proof object that three equidistant collinear translates collapse.

    If translations by tau, tau + p*a and tau + q*a all have the same
    length, expanding |tau + m a|^2 = |tau|^2 gives

        2 m (tau . a) + m^2 |a|^2 = 0      for m = p and m = q.

    Multiplying by q and p respectively and subtracting eliminates
    tau . a and leaves  p q (p - q) |a|^2 = 0,  so a nonzero eliminant
    coefficient forces a = 0.  The certificate stores that coefficient;
    the degenerate inputs that would void it are refused at
    construction.
    """

    tau: tuple[Fraction, ...]
    p: int
    q: int
    eliminant_coefficient: int

    @property
    def conclusion(self) -> str:
        return "a = 0"

    def combination(self, a: Sequence) -> Fraction:
        """q*(first constraint) - p*(second constraint), evaluated at a.

        Always equals eliminant_coefficient * |a|^2; exposing it lets
        callers re-verify the elimination identity on any vector.
        """
        av = _fracs(a)
        ta = linalg.dot(self.tau, av)
        asq = linalg.dot(av, av)
        first = 2 * self.p * ta + self.p * self.p * asq
        second = 2 * self.q * ta + self.q * self.q * asq
        return self.q * first - self.p * second


def equidistant_forces_zero(tau: Sequence, p: int, q: int) -> EquidistanceCertificate:
    """Certificate that |tau + p a| = |tau + q a| = |tau| forces a = 0.

    Refuses p = q and zero multipliers: with p = q the two constraints
    coincide and nonzero solutions exist, so no such certificate can be
    issued.
    """
    if p == 0 or q == 0:
        raise ValueError("multipliers must be nonzero")
    if p == q:
        raise ValueError(
            "p = q is degenerate: the two constraints coincide and admit "
            "nonzero solutions"
        )
    coefficient = p * q * (p - q)
    assert coefficient != 0
    return EquidistanceCertificate(_fracs(tau), p, q, coefficient)


def equidistant_check(tau: Sequence, p: int, q: int, a: Sequence) -> bool:
    """Evaluate both equidistance constraints at an explicit vector a."""
    tv, av = _fracs(tau), _fracs(a)
    if len(tv) != len(av):
        raise ValueError("tau and a have different dimensions")
    base = linalg.dot(tv, tv)

    def shifted(m: int) -> Fraction:
        w = [t + m * x for t, x in zip(tv, av)]
        return linalg.dot(w, w)

    return shifted(p) == base and shifted(q) == base


# ---------------------------------------------------------------------------
# The canonical flat model for the commuting Nielsen family.
# ---------------------------------------------------------------------------

NIELSEN_FLAT_GENERATORS = ("L21", "R21", "L31", "R31")


@dataclass(frozen=True)
class NielsenFlatModel:
    """A rank-4 translation action on Q^3 realizing the commuting family
    <L21, R21, L31, R31>, together with its Dirichlet-domain report."""

    scale: int
    action: TranslationAction
    lattice: Lattice
    cell: Polytope
    classification: Classification
    octo: OctoReport
    octo_quadruple: tuple[str, str, str, str]
    kernel_exponents: tuple[int, int, int, int]
    kernel_is_zero: bool

    @property
    def lengths_sq(self) -> tuple[Fraction, ...]:
        return tuple(
            sum(c * c for c in v) for v in self.action.vectors
        )


def nielsen_flat(scale: int) -> NielsenFlatModel:
    """Build the canonical flat model at a given integer scale.

    The four generators L21, R21, L31, R31 receive translation vectors

        L21 -> -s(1,1,0), R21 -> s(1,-1,0),
        L31 -> -s(-1,0,1), R31 -> s(-1,0,-1),

    all of squared length 2 s^2 (conjugate generators translate equally
    far).  The signs are fixed so the exponent vector (-1, 1, -1, 1) --
    the combination equal to conjugation by a1, which must act
    elliptically -- maps to the zero translation.  The effective lattice
    generated by the four vectors is the face-centred cubic lattice at
    scale s; its Dirichlet domain is computed and classified, and the
    four-vector conditions are checked on the sign-normalized quadruple
    (-L21, R21, -R31, L31), for which the sum condition becomes exactly
    the kernel relation.
    """
    if scale < 1:
        raise ValueError(f"scale must be a positive integer, got {scale}")
    s = scale
    vectors = (
        vec3(-s, -s, 0),
        vec3(s, -s, 0),
        vec3(s, 0, -s),
        vec3(-s, 0, -s),
    )
    action = TranslationAction(
        3, tuple(tuple(Fraction(c) for c in v.coords()) for v in vectors)
    )
    kernel_exponents = (-1, 1, -1, 1)
    kernel_vec = action.translation(kernel_exponents)
    lattice = lattice_from(vectors)
    cell = voronoi_cell(lattice)
    classification = classify(cell)
    w1, w2, w3, w4 = vectors
    octo = octo_check(-w1, w2, -w4, w3)
    return NielsenFlatModel(
        scale=scale,
        action=action,
        lattice=lattice,
        cell=cell,
        classification=classification,
        octo=octo,
        octo_quadruple=("-L21", "R21", "-R31", "L31"),
        kernel_exponents=kernel_exponents,
        kernel_is_zero=all(c == 0 for c in kernel_vec),
    )

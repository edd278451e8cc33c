"""Automorphisms of free groups and a relation-verification engine.

Two representations are used side by side:

* :class:`AutExpr` -- a formal product of elementary generators (left and
  right Nielsen transformations, generator inversions, transpositions),
  which inverts syntactically, and
* :class:`Endo` -- the concrete generator-image data the expression
  realizes, which supports exact application, composition and equality.

Composition convention, fixed once for the whole package: products act
on the left, ``(phi psi)(x) = phi(psi(x))``, the commutator is
``[x, y] = x y x^-1 y^-1``, and ``inner(g)`` is ``x -> g x g^-1``.
Identities that hold only after inverting an element are reported with
the sign that was actually obtained, never silently accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

from .reports import Check
from .words import (
    RankMismatchError,
    Word,
    conj,
    cyclic_reduce,
    empty,
    format_word,
    gen,
    inv,
    mul,
    power,
    reduce,
    substitute,
)

__all__ = [
    "ElemAut",
    "AutExpr",
    "Endo",
    "AutExprParseError",
    "nielsen_left",
    "nielsen_right",
    "inversion",
    "transposition",
    "commutator",
    "conjugate_expr",
    "identity_endo",
    "endo_of",
    "apply",
    "compose",
    "equal",
    "inner",
    "is_inner",
    "verify_relation",
    "right_multiplier",
    "gpq_check",
    "inner_gpq_check",
    "nielsen_z4_check",
    "identity_suite",
    "parse_autexpr",
]

Mode = Literal["aut", "out"]


class AutExprParseError(ValueError):
    """Malformed automorphism text; ``position`` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"char {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class ElemAut:
    """An elementary automorphism of the free group of the given rank.

    kind "L": a_i -> a_j a_i   (left Nielsen transformation)
    kind "R": a_i -> a_i a_j   (right Nielsen transformation)
    kind "E": a_i -> a_i^-1    (inversion; j unused)
    kind "P": a_i <-> a_j      (transposition)
    """

    kind: str
    i: int
    j: int | None
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in ("L", "R", "E", "P"):
            raise ValueError(f"unknown elementary kind {self.kind!r}")
        if not 1 <= self.i <= self.rank:
            raise ValueError(f"index {self.i} out of range for rank {self.rank}")
        if self.kind == "E":
            if self.j is not None:
                raise ValueError("inversion takes a single index")
        else:
            if self.j is None or not 1 <= self.j <= self.rank:
                raise ValueError(f"index {self.j} out of range for rank {self.rank}")
            if self.i == self.j:
                raise ValueError("indices must differ")

    def token(self) -> str:
        if self.kind == "E":
            return f"E{self.i}"
        return f"{self.kind}{self.i}{self.j}"


def nielsen_left(i: int, j: int, rank: int = 3) -> "AutExpr":
    """lambda_ij: a_i -> a_j a_i."""
    return AutExpr(rank, ((ElemAut("L", i, j, rank), 1),))


def nielsen_right(i: int, j: int, rank: int = 3) -> "AutExpr":
    """rho_ij: a_i -> a_i a_j."""
    return AutExpr(rank, ((ElemAut("R", i, j, rank), 1),))


def inversion(i: int, rank: int = 3) -> "AutExpr":
    """epsilon_i: a_i -> a_i^-1."""
    return AutExpr(rank, ((ElemAut("E", i, None, rank), 1),))


def transposition(i: int, j: int, rank: int = 3) -> "AutExpr":
    return AutExpr(rank, ((ElemAut("P", i, j, rank), 1),))


@dataclass(frozen=True)
class AutExpr:
    """A formal product of elementary automorphisms with integer exponents.

    The factor sequence reads left to right as a composition under the
    package convention, so ``AutExpr`` of factors (f, g) applied to x is
    f(g(x)).  Inversion is syntactic: reverse the sequence and negate
    exponents.
    """

    rank: int
    factors: tuple[tuple[ElemAut, int], ...]

    def __post_init__(self) -> None:
        for elem, exp in self.factors:
            if elem.rank != self.rank:
                raise RankMismatchError("factor rank differs from expression rank")
            if exp == 0:
                raise ValueError("factor exponents must be nonzero")

    def __mul__(self, other: "AutExpr") -> "AutExpr":
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
        return AutExpr(self.rank, self.factors + other.factors)

    def inverse(self) -> "AutExpr":
        return AutExpr(
            self.rank, tuple((elem, -exp) for elem, exp in reversed(self.factors))
        )

    def __pow__(self, k: int) -> "AutExpr":
        if k == 0:
            return AutExpr(self.rank, ())
        base = self if k > 0 else self.inverse()
        if len(base.factors) == 1:
            elem, exp = base.factors[0]
            return AutExpr(self.rank, ((elem, exp * abs(k)),))
        return AutExpr(self.rank, base.factors * abs(k))

    def token_text(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for elem, exp in self.factors:
            parts.append(elem.token() if exp == 1 else f"{elem.token()}^{exp}")
        return " ".join(parts)


def commutator(x: AutExpr, y: AutExpr) -> AutExpr:
    """[x, y] = x y x^-1 y^-1."""
    return x * y * x.inverse() * y.inverse()


def conjugate_expr(x: AutExpr, by: AutExpr) -> AutExpr:
    """by * x * by^-1."""
    return by * x * by.inverse()


@dataclass(frozen=True)
class Endo:
    """An endomorphism given by the reduced images of the basis."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError(f"need {self.rank} images, got {len(self.images)}")
        for img in self.images:
            if img.rank != self.rank:
                raise RankMismatchError("image rank differs from endomorphism rank")


def identity_endo(rank: int) -> Endo:
    return Endo(rank, tuple(gen(rank, i) for i in range(1, rank + 1)))


def _elem_endo(elem: ElemAut, exp: int) -> Endo:
    """Closed form for an elementary automorphism raised to an exponent."""
    rank = elem.rank
    images = [gen(rank, t) for t in range(1, rank + 1)]
    if elem.kind == "L":
        sign = 1 if exp > 0 else -1
        images[elem.i - 1] = reduce(
            rank, [(elem.j, sign)] * abs(exp) + [(elem.i, 1)]
        )
    elif elem.kind == "R":
        sign = 1 if exp > 0 else -1
        images[elem.i - 1] = reduce(
            rank, [(elem.i, 1)] + [(elem.j, sign)] * abs(exp)
        )
    elif elem.kind == "E":
        if exp % 2 == 1:
            images[elem.i - 1] = gen(rank, elem.i, -1)
    else:  # "P"
        if exp % 2 == 1:
            images[elem.i - 1], images[elem.j - 1] = images[elem.j - 1], images[elem.i - 1]
    return Endo(rank, tuple(images))


def endo_of(x: AutExpr) -> Endo:
    """Realize a formal product as generator-image data."""
    out = identity_endo(x.rank)
    for elem, exp in x.factors:
        out = compose(out, _elem_endo(elem, exp))
    return out


def apply(e: Endo, w: Word) -> Word:
    """Homomorphic image of w under e, reduced."""
    if e.rank != w.rank:
        raise RankMismatchError(f"rank {e.rank} vs rank {w.rank}")
    return substitute(w, e.images)


def compose(e1: Endo, e2: Endo) -> Endo:
    """e1 after e2: apply(compose(e1, e2), w) == apply(e1, apply(e2, w))."""
    if e1.rank != e2.rank:
        raise RankMismatchError(f"rank {e1.rank} vs rank {e2.rank}")
    return Endo(e1.rank, tuple(apply(e1, img) for img in e2.images))


def equal(e1: Endo, e2: Endo) -> bool:
    """Exact equality: all basis images agree as reduced words."""
    if e1.rank != e2.rank:
        raise RankMismatchError(f"rank {e1.rank} vs rank {e2.rank}")
    return e1.images == e2.images


def inner(g: Word) -> Endo:
    """The inner automorphism x -> g x g^-1."""
    return Endo(
        g.rank, tuple(conj(gen(g.rank, i), g) for i in range(1, g.rank + 1))
    )


def _leading_a1_run(w: Word) -> int:
    """Signed length of the maximal leading run of a_1 letters."""
    run = 0
    for let in w.letters:
        if let.index != 1:
            break
        run += let.sign
    return run


def is_inner(e: Endo) -> Word | None:
    """The unique conjugator g with e = inner(g), or None.

    Procedure: cyclically reduce e(a1) as u * c * u^-1 and require
    c = a1; any conjugator must then be u * a1^k, where k is read off
    the leading a1-run of u^-1 * e(a2) * u.  The single candidate is
    verified on every generator, so a wrong guess cannot leak through.
    The caller is responsible for e being an automorphism.
    """
    if e.rank == 1:
        # F_1 is abelian: the only inner automorphism is the identity.
        return empty(1) if equal(e, identity_endo(1)) else None
    core, u = cyclic_reduce(e.images[0])
    if core != gen(e.rank, 1):
        return None
    z = mul(mul(inv(u), e.images[1]), u)
    k = _leading_a1_run(z)
    g = mul(u, power(gen(e.rank, 1), k))
    return g if equal(e, inner(g)) else None


def verify_relation(lhs: AutExpr, rhs: AutExpr, mode: Mode = "aut") -> bool:
    """Check lhs = rhs as automorphisms ("aut") or modulo inner ones ("out")."""
    if lhs.rank != rhs.rank:
        raise RankMismatchError(f"rank {lhs.rank} vs rank {rhs.rank}")
    if mode == "aut":
        return equal(endo_of(lhs), endo_of(rhs))
    if mode == "out":
        return is_inner(endo_of(lhs * rhs.inverse())) is not None
    raise ValueError(f"mode must be 'aut' or 'out', got {mode!r}")


# ---------------------------------------------------------------------------
# Relation families built from explicit generator-image data.
# ---------------------------------------------------------------------------


def right_multiplier(rank: int, target: int, w: Word) -> Endo:
    """The automorphism a_target -> a_target * w, fixing all other a_i.

    w must not use a_target, so the map is invertible with inverse
    a_target -> a_target * w^-1.
    """
    if w.rank != rank:
        raise RankMismatchError(f"rank {w.rank} vs rank {rank}")
    for let in w.letters:
        if let.index == target:
            raise ValueError(f"multiplier word must avoid a{target}")
    images = [gen(rank, t) for t in range(1, rank + 1)]
    images[target - 1] = mul(gen(rank, target), w)
    return Endo(rank, tuple(images))


def _image_table(e: Endo) -> dict[str, str]:
    return {
        f"a{i + 1}": format_word(img)
        for i, img in enumerate(e.images)
        if img != gen(e.rank, i + 1)
    }


def gpq_check(n: int, p: int, q: int, w: Word) -> list[Check]:
    """Verify the three defining relations of the two-parameter HNN-style
    group <alpha, beta, gamma, t | [t,alpha], t beta t^-1 = beta alpha^p,
    t gamma t^-1 = gamma alpha^q> under the right-multiplier assignment
    in rank n+1.

    The ambient basis is a_1..a_n plus one extra generator a_0 stored at
    index n+1.  With w a word in a_1..a_{n-2}:

        alpha = [a_0 -> a_0 w],  beta = [a_0 -> a_0 a_{n-1}],
        gamma = [a_0 -> a_0 a_n],
        t = [a_{n-1} -> a_{n-1} w^p, a_n -> a_n w^q].

    Both relations are checked in the inverse-free forms t*x = rhs*t.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if p == 0 or q == 0:
        raise ValueError("p and q must be nonzero")
    free_factor = n - 2
    for let in w.letters:
        if let.index > free_factor:
            raise ValueError(
                f"word uses forbidden generator a{let.index}; "
                f"only a1..a{free_factor} are allowed"
            )
    rank = n + 1
    a0 = rank  # the extra basis element, stored last
    w_up = Word(rank, w.letters)
    alpha = right_multiplier(rank, a0, w_up)
    beta = right_multiplier(rank, a0, gen(rank, n - 1))
    gamma = right_multiplier(rank, a0, gen(rank, n))
    t_images = [gen(rank, i) for i in range(1, rank + 1)]
    t_images[n - 2] = mul(gen(rank, n - 1), power(w_up, p))
    t_images[n - 1] = mul(gen(rank, n), power(w_up, q))
    t = Endo(rank, tuple(t_images))

    alpha_p = right_multiplier(rank, a0, power(w_up, p))
    alpha_q = right_multiplier(rank, a0, power(w_up, q))
    witness = {
        "n": n,
        "p": p,
        "q": q,
        "w": format_word(w),
        "t": _image_table(t),
    }
    return [
        Check(
            "t-commutes-with-alpha",
            "[t, alpha] = 1",
            equal(compose(t, alpha), compose(alpha, t)),
            witness,
        ),
        Check(
            "t-conjugates-beta",
            "t beta t^-1 = beta alpha^p",
            equal(compose(t, beta), compose(compose(beta, alpha_p), t)),
            witness,
        ),
        Check(
            "t-conjugates-gamma",
            "t gamma t^-1 = gamma alpha^q",
            equal(compose(t, gamma), compose(compose(gamma, alpha_q), t)),
            witness,
        ),
    ]


def inner_gpq_check(p: int, q: int) -> list[Check]:
    """Same relations under the rank-3 inner assignment:

        alpha = inner(a1), beta = inner(a2), gamma = inner(a3),
        t = [a2 -> a2 a1^p, a3 -> a3 a1^q].
    """
    if p == 0 or q == 0:
        raise ValueError("p and q must be nonzero")
    rank = 3
    alpha = inner(gen(rank, 1))
    beta = inner(gen(rank, 2))
    gamma = inner(gen(rank, 3))
    t = Endo(
        rank,
        (
            gen(rank, 1),
            mul(gen(rank, 2), power(gen(rank, 1), p)),
            mul(gen(rank, 3), power(gen(rank, 1), q)),
        ),
    )
    alpha_p = inner(power(gen(rank, 1), p))
    alpha_q = inner(power(gen(rank, 1), q))
    witness = {"p": p, "q": q, "t": _image_table(t)}
    return [
        Check(
            "t-commutes-with-inner-a1",
            "[t, inner(a1)] = 1",
            equal(compose(t, alpha), compose(alpha, t)),
            witness,
        ),
        Check(
            "t-conjugates-inner-a2",
            "t inner(a2) t^-1 = inner(a2) inner(a1)^p",
            equal(compose(t, beta), compose(compose(beta, alpha_p), t)),
            witness,
        ),
        Check(
            "t-conjugates-inner-a3",
            "t inner(a3) t^-1 = inner(a3) inner(a1)^q",
            equal(compose(t, gamma), compose(compose(gamma, alpha_q), t)),
            witness,
        ),
    ]


def nielsen_z4_check() -> list[Check]:
    """Checks on the rank-4 commuting family <L21, R21, L31, R31> in rank 3.

    Verifies that the four generators commute pairwise, that the product
    L21^-1 R21 L31^-1 R31 is the inner automorphism of a1^+1 or a1^-1
    (recording which sign the composition convention produces), and that
    the product is therefore trivial modulo inner automorphisms.
    """
    gens = {
        "L21": nielsen_left(2, 1),
        "R21": nielsen_right(2, 1),
        "L31": nielsen_left(3, 1),
        "R31": nielsen_right(3, 1),
    }
    checks: list[Check] = []
    names = list(gens)
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            x, y = names[a], names[b]
            checks.append(
                Check(
                    f"commute-{x}-{y}",
                    f"{x} {y} = {y} {x}",
                    verify_relation(gens[x] * gens[y], gens[y] * gens[x]),
                    None,
                )
            )
    product = (
        gens["L21"].inverse() * gens["R21"] * gens["L31"].inverse() * gens["R31"]
    )
    g = is_inner(endo_of(product))
    sign = None
    if g is not None:
        if g == gen(3, 1):
            sign = 1
        elif g == gen(3, 1, -1):
            sign = -1
    witness = {
        "product": product.token_text(),
        "conjugator": None if g is None else format_word(g),
        "inner_power_of_a1": sign,
    }
    checks.append(
        Check(
            "z4-product-is-inner-a1",
            "L21^-1 R21 L31^-1 R31 = inner(a1^s) for s in {+1, -1}",
            sign is not None,
            witness,
        )
    )
    checks.append(
        Check(
            "z4-product-trivial-mod-inner",
            "L21^-1 R21 L31^-1 R31 is trivial modulo inner automorphisms",
            g is not None,
            witness,
        )
    )
    return checks


def _relation_check(name: str, claim: str, lhs: AutExpr, rhs: AutExpr,
                    mode: Mode = "aut") -> Check:
    return Check(
        name,
        claim,
        verify_relation(lhs, rhs, mode),
        {"lhs": lhs.token_text(), "rhs": rhs.token_text(), "mode": mode},
    )


def identity_suite(mode: Mode = "aut") -> list[Check]:
    """The full identity suite behind the ``verify-relations`` command.

    With mode "out" every identity is additionally verified modulo inner
    automorphisms, plus the vanishing of the commuting-family product.
    """
    L, R, E = nielsen_left, nielsen_right, inversion
    named: list[tuple[str, str, AutExpr, AutExpr]] = [
        (
            "commutator-left-nielsen",
            "[L23^-1, L31^-1] = L21^-1",
            commutator(L(2, 3).inverse(), L(3, 1).inverse()),
            L(2, 1).inverse(),
        ),
        (
            "commutator-right-nielsen",
            "[R23^-1, R31^-1] = R21^-1",
            commutator(R(2, 3).inverse(), R(3, 1).inverse()),
            R(2, 1).inverse(),
        ),
        (
            "inversion-swaps-left-to-right",
            "E2 L21^-1 E2^-1 = R21",
            conjugate_expr(L(2, 1).inverse(), E(2)),
            R(2, 1),
        ),
        (
            "inversion-swaps-right-to-left",
            "E2 R21 E2^-1 = L21^-1",
            conjugate_expr(R(2, 1), E(2)),
            L(2, 1).inverse(),
        ),
        (
            "inversion-fixes-L31",
            "E2 L31 E2^-1 = L31",
            conjugate_expr(L(3, 1), E(2)),
            L(3, 1),
        ),
        (
            "inversion-fixes-R31",
            "E2 R31 E2^-1 = R31",
            conjugate_expr(R(3, 1), E(2)),
            R(3, 1),
        ),
    ]
    checks = [_relation_check(n, c, lhs, rhs) for n, c, lhs, rhs in named]
    checks.extend(nielsen_z4_check())

    # Left and right Nielsen maps on the same index pair are conjugate
    # via the inversion of the moved generator.
    for i in range(1, 4):
        for j in range(1, 4):
            if i == j:
                continue
            checks.append(
                _relation_check(
                    f"left-right-conjugate-{i}{j}",
                    f"E{i} L{i}{j} E{i}^-1 = R{i}{j}^-1",
                    conjugate_expr(L(i, j), E(i)),
                    R(i, j).inverse(),
                )
            )

    # Conjugating an inner automorphism: phi inner(g) phi^-1 = inner(phi(g)),
    # checked in the inverse-free form phi inner(g) = inner(phi(g)) phi.
    samples = [
        ("L12", L(1, 2)),
        ("R31", R(3, 1)),
        ("E2-L21", E(2) * L(2, 1)),
    ]
    sample_words = [
        gen(3, 1),
        mul(gen(3, 1), gen(3, 2, -1)),
        mul(mul(gen(3, 2), gen(3, 3)), gen(3, 1, -1)),
    ]
    for name, phi_expr in samples:
        phi = endo_of(phi_expr)
        for g in sample_words:
            ok = equal(
                compose(phi, inner(g)), compose(inner(apply(phi, g)), phi)
            )
            checks.append(
                Check(
                    f"inner-functorial-{name}-{format_word(g).replace(' ', '')}",
                    "phi inner(g) phi^-1 = inner(phi(g))",
                    ok,
                    {"phi": phi_expr.token_text(), "g": format_word(g)},
                )
            )

    if mode == "out":
        for n, c, lhs, rhs in named:
            checks.append(_relation_check(f"{n}-mod-inner", c, lhs, rhs, "out"))
        product = (
            L(2, 1).inverse() * R(2, 1) * L(3, 1).inverse() * R(3, 1)
        )
        checks.append(
            _relation_check(
                "z4-product-vanishes-mod-inner",
                "L21^-1 R21 L31^-1 R31 = 1 modulo inner automorphisms",
                product,
                AutExpr(3, ()),
                "out",
            )
        )
    return checks


# ---------------------------------------------------------------------------
# Text grammar: tokens like L21, R13^-2, E2, P12^3, separated by whitespace.
# Single-digit indices only, which covers every rank this package targets.
# ---------------------------------------------------------------------------

_EXPR_TOKEN = re.compile(r"([LRP])(\d)(\d)(?:\^(-?\d+))?\Z|E(\d)(?:\^(-?\d+))?\Z")


def parse_autexpr(text: str, rank: int = 3) -> AutExpr:
    factors: list[tuple[ElemAut, int]] = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        if tok == "1":
            continue
        mt = _EXPR_TOKEN.match(tok)
        if mt is None:
            raise AutExprParseError(f"bad token {tok!r}", m.start())
        try:
            if mt.group(5) is not None:
                elem = ElemAut("E", int(mt.group(5)), None, rank)
                exp = 1 if mt.group(6) is None else int(mt.group(6))
            else:
                elem = ElemAut(mt.group(1), int(mt.group(2)), int(mt.group(3)), rank)
                exp = 1 if mt.group(4) is None else int(mt.group(4))
        except ValueError as exc:
            raise AutExprParseError(str(exc), m.start()) from None
        if exp != 0:
            factors.append((elem, exp))
    return AutExpr(rank, tuple(factors))

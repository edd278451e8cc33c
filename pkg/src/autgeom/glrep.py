"""The index-two cover of the rank-3 free group and its 2x2 representation.

The kernel H of the mod-2 map sending a1, a2 to 0 and a3 to 1 is free of
rank 5 with the fixed basis

    x1 = a1,  x2 = a2,  x3 = a3^2,  x4 = a3 a1 a3^-1,  x5 = a3 a2 a3^-1

coming from the Schreier transversal {1, a3}.  Words with even
a3-exponent are rewritten over this basis by the textbook
Reidemeister-Schreier coset scan.  Automorphisms stabilizing H act on
the rank-5 abelianization as 5x5 integer matrices; the deck involution
(conjugation by a3) acts with a 2-dimensional (-1)-eigenspace, and
restriction to that eigenplane yields 2x2 integer matrices of
determinant +-1.  Everything here is a pure function of its input.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .automorphisms import Endo, apply, inner
from .words import Letter, Word, ab_vector, gen, mul, power, reduce, substitute

__all__ = [
    "RANK",
    "COVER_RANK",
    "BASIS",
    "nu",
    "stabilizes",
    "rewrite",
    "expand",
    "ab5",
    "sigma_star",
    "minus_eigenbasis",
    "restrict_to_eigenplane",
    "mu",
    "lk_basis",
    "mat2_mul",
    "mat2_inv",
    "mat2_det",
    "no_short_relation",
]

RANK = 3
COVER_RANK = 5

BASIS: tuple[Word, ...] = (
    gen(3, 1),
    gen(3, 2),
    reduce(3, [(3, 1), (3, 1)]),
    reduce(3, [(3, 1), (1, 1), (3, -1)]),
    reduce(3, [(3, 1), (2, 1), (3, -1)]),
)

# Schreier generator emitted when reading a positive letter a_i at coset
# state s (state 0 <-> transversal rep 1, state 1 <-> rep a3).  None means
# the scan consumed a transversal letter and emits nothing.
_SCHREIER: dict[tuple[int, int], int | None] = {
    (0, 1): 1,  # a1        -> x1
    (0, 2): 2,  # a2        -> x2
    (0, 3): None,
    (1, 1): 4,  # a3 a1 a3^-1 -> x4
    (1, 2): 5,  # a3 a2 a3^-1 -> x5
    (1, 3): 3,  # a3^2      -> x3
}


def nu(w: Word) -> int:
    """Exponent sum of a3 modulo 2 (the coset of w in the 2-sheeted cover)."""
    if w.rank != RANK:
        raise ValueError(f"expected a rank-3 word, got rank {w.rank}")
    return sum(let.sign for let in w.letters if let.index == 3) % 2


def stabilizes(e: Endo) -> bool:
    """True iff e preserves the even-a3 subgroup: nu(e(a_i)) = nu(a_i)."""
    if e.rank != RANK:
        raise ValueError(f"expected a rank-3 endomorphism, got rank {e.rank}")
    return (
        nu(e.images[0]) == 0 and nu(e.images[1]) == 0 and nu(e.images[2]) == 1
    )


def expand(w5: Word) -> Word:
    """Evaluate a rank-5 word back through the subgroup basis into rank 3."""
    return substitute(w5, BASIS)


def rewrite(w: Word) -> Word:
    """Rewrite an even-a3 word over the rank-5 subgroup basis.

    The scan carries the coset state through the word, emitting one
    Schreier generator per letter (or nothing for transversal letters).
    The result is verified by expanding back through the basis, so a
    wrong rewrite can never be returned.
    """
    if nu(w) != 0:
        raise ValueError("word has odd a3-exponent and is not in the subgroup")
    out: list[Letter] = []
    state = 0
    for let in w.letters:
        if let.sign == 1:
            emitted = _SCHREIER[(state, let.index)]
            if let.index == 3:
                state ^= 1
        else:
            if let.index == 3:
                state ^= 1
            emitted = _SCHREIER[(state, let.index)]
        if emitted is not None:
            if out and out[-1].index == emitted and out[-1].sign == -let.sign:
                out.pop()
            else:
                out.append(Letter(emitted, let.sign))
    result = Word(COVER_RANK, tuple(out))
    if expand(result) != w:
        raise RuntimeError("rewrite failed its round-trip self-check")
    return result


IntMat = list[list[int]]


def ab5(e: Endo) -> IntMat:
    """Action of a stabilizing automorphism on the subgroup abelianization.

    Column i is the exponent vector of rewrite(e(x_i)); the matrix acts
    on column vectors, so ab5 is multiplicative under composition.
    """
    if not stabilizes(e):
        raise ValueError("automorphism does not stabilize the even-a3 subgroup")
    columns = [ab_vector(rewrite(apply(e, x))) for x in BASIS]
    return [[columns[j][i] for j in range(COVER_RANK)] for i in range(COVER_RANK)]


def sigma_star() -> IntMat:
    """The deck involution on the abelianization: conjugation by a3."""
    return ab5(inner(gen(3, 3)))


def minus_eigenbasis() -> tuple[tuple[int, ...], ...]:
    """Primitive integer basis of the (-1)-eigenspace of the deck involution.

    Computed as the integer kernel of sigma_star + I and asserted to be
    exactly {x1 - x4, x2 - x5}; any drift in conventions fails loudly
    here rather than corrupting the 2x2 representation downstream.
    """
    sigma = sigma_star()
    m = [
        [Fraction(sigma[i][j] + int(i == j)) for j in range(COVER_RANK)]
        for i in range(COVER_RANK)
    ]
    vectors = sorted(
        tuple(linalg.primitive_integer(v)) for v in linalg.kernel(m)
    )
    expected = sorted([(0, 1, 0, 0, -1), (1, 0, 0, -1, 0)])
    if vectors != expected:
        raise RuntimeError(f"unexpected (-1)-eigenspace basis: {vectors}")
    return ((1, 0, 0, -1, 0), (0, 1, 0, 0, -1))


def restrict_to_eigenplane(m: IntMat) -> IntMat:
    """Restrict a 5x5 integer matrix to the plane spanned by x1-x4, x2-x5.

    Raises ValueError if the matrix does not preserve that plane.
    Returned as a 2x2 matrix acting on column vectors in that basis.
    """
    f1, f2 = minus_eigenbasis()
    cols = []
    for f in (f1, f2):
        g = [sum(m[i][j] * f[j] for j in range(COVER_RANK)) for i in range(COVER_RANK)]
        if g[2] != 0 or g[0] != -g[3] or g[1] != -g[4]:
            raise ValueError("matrix does not preserve the (-1)-eigenplane")
        cols.append((g[0], g[1]))
    return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]


def mu(e: Endo) -> IntMat:
    """The 2x2 integer representation of a stabilizing automorphism."""
    return restrict_to_eigenplane(ab5(e))


def lk_basis(k: int) -> tuple[Word, ...]:
    """Free basis of the index-(k-1) subgroup of F_2 = <a, b> generated by
    conjugates of b and one power of a:

        a^i b a^-i for 0 <= i <= k-2, followed by a^{k-1}.

    Returns k words; each is a conjugate of a power of a basis element.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    a, b = gen(2, 1), gen(2, 2)
    words = [mul(mul(power(a, i), b), power(a, -i)) for i in range(k - 1)]
    words.append(power(a, k - 1))
    return tuple(words)


# ---------------------------------------------------------------------------
# 2x2 integer matrix helpers and the short-relation search.
# ---------------------------------------------------------------------------


def mat2_det(m: IntMat) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat2_mul(a: IntMat, b: IntMat) -> IntMat:
    return [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]


def mat2_inv(m: IntMat) -> IntMat:
    d = mat2_det(m)
    if d not in (1, -1):
        raise ValueError(f"matrix determinant {d} is not +-1")
    return [[d * m[1][1], -d * m[0][1]], [-d * m[1][0], d * m[0][0]]]


_IDENTITY2 = [[1, 0], [0, 1]]


def no_short_relation(m1: IntMat, m2: IntMat, max_len: int) -> bool:
    """True iff no nonempty reduced word of length <= max_len in the two
    matrices and their inverses evaluates to the identity.

    Exhaustive depth-first enumeration over reduced words in two abstract
    letters; desk-scale evidence that the pair generates a free group.
    """
    letters = [m1, mat2_inv(m1), m2, mat2_inv(m2)]

    def search(prod: IntMat, last: int, depth: int) -> bool:
        for idx, m in enumerate(letters):
            if last >= 0 and idx == (last ^ 1):
                continue  # would cancel the previous letter
            nxt = mat2_mul(prod, m)
            if nxt == _IDENTITY2:
                return False
            if depth + 1 < max_len and not search(nxt, idx, depth + 1):
                return False
        return True

    if max_len < 1:
        return True
    return search(_IDENTITY2, -1, 0)

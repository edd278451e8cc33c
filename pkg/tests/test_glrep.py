import pytest

from autgeom import automorphisms as aut
from autgeom import glrep
from autgeom import words as fw
from autgeom.automorphisms import inversion, nielsen_left, nielsen_right, transposition

from conftest import random_a3_even_word

L, R, E, P = nielsen_left, nielsen_right, inversion, transposition

# Elementary automorphisms that preserve the even-a3 subgroup: Nielsen
# maps multiplying by a1 or a2, all inversions, and the a1<->a2 swap.
STABILIZING = [
    L(1, 2), L(2, 1), L(3, 1), L(3, 2),
    R(1, 2), R(2, 1), R(3, 1), R(3, 2),
    E(1), E(2), E(3), P(1, 2),
]


def random_stabilizing_endo(rng, max_len=8):
    x = aut.AutExpr(3, ())
    for _ in range(rng.randint(1, max_len)):
        x = x * rng.choice(STABILIZING) ** rng.choice((-1, 1))
    return aut.endo_of(x)


IDENTITY5 = [[int(i == j) for j in range(5)] for i in range(5)]


class TestNu:
    @pytest.mark.parametrize(
        "text,expected",
        [("a3^2", 0), ("a3", 1), ("a1 a2", 0), ("a3^-1", 1), ("a1 a3 a2 a3", 0)],
    )
    def test_values(self, text, expected):
        assert glrep.nu(fw.parse_word(text, 3)) == expected

    def test_wrong_rank(self):
        with pytest.raises(ValueError):
            glrep.nu(fw.parse_word("a1", 2))


class TestStabilizes:
    def test_examples(self):
        assert glrep.stabilizes(aut.endo_of(L(1, 2)))
        assert glrep.stabilizes(aut.endo_of(L(2, 1)))
        assert not glrep.stabilizes(aut.endo_of(L(1, 3)))
        assert glrep.stabilizes(aut.identity_endo(3))

    def test_all_listed_generators(self):
        for x in STABILIZING:
            assert glrep.stabilizes(aut.endo_of(x))


class TestRewrite:
    def test_basis_elements(self):
        assert glrep.rewrite(fw.parse_word("a3^2", 3)) == fw.gen(5, 3)
        assert glrep.rewrite(fw.parse_word("a3 a1 a3^-1", 3)) == fw.gen(5, 4)
        assert glrep.rewrite(fw.gen(3, 1)) == fw.gen(5, 1)

    def test_derived_example(self):
        # Oracle: whatever the scan outputs must expand back to the input.
        w = fw.parse_word("a1 a3^2 a1^-1", 3)
        out = glrep.rewrite(w)
        assert glrep.expand(out) == w
        assert out == fw.parse_word("a1 a3 a1^-1", 5)  # x1 x3 x1^-1

    def test_rejects_odd_words(self):
        with pytest.raises(ValueError):
            glrep.rewrite(fw.gen(3, 3))

    def test_round_trip_random(self, rng):
        for _ in range(100):
            w = random_a3_even_word(rng, 40)
            assert glrep.expand(glrep.rewrite(w)) == w


class TestAb5:
    def test_identity(self):
        assert glrep.ab5(aut.identity_endo(3)) == IDENTITY5

    def test_deck_involution_is_double_swap(self):
        expected = [
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0],
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
        ]
        assert glrep.sigma_star() == expected

    def test_l12_matrix(self):
        expected = [
            [1, 0, 0, 0, 0],
            [1, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 1, 1],
        ]
        assert glrep.ab5(aut.endo_of(L(1, 2))) == expected

    def test_rejects_non_stabilizing(self):
        with pytest.raises(ValueError):
            glrep.ab5(aut.endo_of(L(1, 3)))

    def test_multiplicative(self, rng):
        from autgeom.linalg import mat_mul

        for _ in range(25):
            e1 = random_stabilizing_endo(rng)
            e2 = random_stabilizing_endo(rng)
            lhs = glrep.ab5(aut.compose(e1, e2))
            rhs = mat_mul(glrep.ab5(e1), glrep.ab5(e2))
            assert [[int(x) for x in row] for row in rhs] == lhs


class TestEigenplane:
    def test_canonical_basis(self):
        assert glrep.minus_eigenbasis() == ((1, 0, 0, -1, 0), (0, 1, 0, 0, -1))

    def test_involution(self):
        from autgeom.linalg import mat_mul

        sigma = glrep.sigma_star()
        square = mat_mul(sigma, sigma)
        assert [[int(x) for x in row] for row in square] == IDENTITY5

    def test_restrict_rejects_non_invariant(self):
        bad = [row[:] for row in IDENTITY5]
        bad[2][0] = 1  # image of x1 - x4 picks up an x3 component
        with pytest.raises(ValueError):
            glrep.restrict_to_eigenplane(bad)


class TestMu:
    def test_identity(self):
        assert glrep.mu(aut.identity_endo(3)) == [[1, 0], [0, 1]]

    def test_elementary_values(self):
        assert glrep.mu(aut.endo_of(L(1, 2))) == [[1, 0], [1, 1]]
        assert glrep.mu(aut.endo_of(L(2, 1))) == [[1, 1], [0, 1]]

    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
    def test_powers_are_elementary(self, p):
        assert glrep.mu(aut.endo_of(L(1, 2) ** p)) == [[1, 0], [p, 1]]
        assert glrep.mu(aut.endo_of(L(2, 1) ** p)) == [[1, p], [0, 1]]

    def test_power_compatibility(self):
        m = glrep.mu(aut.endo_of(L(1, 2)))
        acc = [[1, 0], [0, 1]]
        for p in range(1, 6):
            acc = glrep.mat2_mul(acc, m)
            assert acc == glrep.mu(aut.endo_of(L(1, 2) ** p))

    def test_multiplicative(self, rng):
        for _ in range(25):
            e1 = random_stabilizing_endo(rng)
            e2 = random_stabilizing_endo(rng)
            assert glrep.mu(aut.compose(e1, e2)) == glrep.mat2_mul(
                glrep.mu(e1), glrep.mu(e2)
            )

    def test_unimodular(self, rng):
        for _ in range(25):
            assert glrep.mat2_det(glrep.mu(random_stabilizing_endo(rng))) in (1, -1)


class TestLkBasis:
    def test_k2(self):
        assert glrep.lk_basis(2) == (fw.gen(2, 2), fw.gen(2, 1))

    def test_k3(self):
        words = glrep.lk_basis(3)
        assert [fw.format_word(w) for w in words] == ["a2", "a1 a2 a1^-1", "a1^2"]

    def test_k5_exponent_sum(self):
        words = glrep.lk_basis(5)
        assert len(words) == 5
        total = sum(fw.ab_vector(w)[0] for w in words)
        assert total == 4

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            glrep.lk_basis(1)


class TestNoShortRelation:
    def test_sanov_pair_is_free_to_length_8(self):
        m1 = glrep.mu(aut.endo_of(L(1, 2) ** 2))
        m2 = glrep.mu(aut.endo_of(L(2, 1) ** 2))
        assert m1 == [[1, 0], [2, 1]] and m2 == [[1, 2], [0, 1]]
        assert glrep.no_short_relation(m1, m2, 8)

    def test_identity_generator_fails(self):
        assert not glrep.no_short_relation([[1, 0], [0, 1]], [[1, 2], [0, 1]], 1)

    def test_repeated_generator_fails(self):
        m = [[1, 2], [0, 1]]
        assert not glrep.no_short_relation(m, m, 2)

    def test_power_one_has_relations(self):
        # With exponent 1 the pair is not free: (m1 m2^-1 m1)^4 = I, a
        # relation of length 12, so the search must find something there.
        m1 = glrep.mu(aut.endo_of(L(1, 2)))
        m2 = glrep.mu(aut.endo_of(L(2, 1)))
        assert glrep.no_short_relation(m1, m2, 5)
        assert not glrep.no_short_relation(m1, m2, 12)

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            glrep.no_short_relation([[2, 0], [0, 1]], [[1, 0], [0, 1]], 2)

import math
import random

import pytest

from tripletrep.errors import (
    CapExceeded,
    IndexOrder,
    UnassignedGenerator,
    UnsupportedN,
    UnsupportedPresentation,
    WordParseError,
)
from tripletrep.groups import (
    GroupWord,
    PresentationKind as K,
    RepCandidate,
    check_relations,
    failed_relations,
    image_closure,
    kernel_witness_search,
    pair_reflection_rep,
    presentation_of,
    pure_braid_generator,
    sn_projection,
    word_eval,
)
from tripletrep.linalg import Matrix, block_embed
from tripletrep.reps import lambda_homog, mu_matrix, omega, tits_theta
from tripletrep.scalar import var

s = var("s")
W = GroupWord.parse


class TestPresentations:
    def test_triplet_4(self):
        pres = presentation_of(K.TRIPLET, 4)
        assert pres.generators == ("l1", "l2", "l3")
        assert pres.relation_families() == ["braid_l", "involution_l"]
        assert len(pres.relations) == 3 + 2
        commute = {(r.lhs.letters, r.rhs.letters) for r in pres.relations}
        assert ((("l1", 1), ("l3", 1)), (("l3", 1), ("l1", 1))) not in commute

    def test_virtual_triplet_3(self):
        pres = presentation_of(K.VIRTUAL_TRIPLET, 3)
        assert pres.generators == ("l1", "l2", "r1", "r2")
        assert pres.relation_families() == ["braid_l", "braid_r", "involution_l", "involution_r",
                                            "mixed_rrl"]

    def test_triplet_2(self):
        pres = presentation_of(K.TRIPLET, 2)
        assert pres.generators == ("l1",)
        assert len(pres.relations) == 1 and str(pres.relations[0].lhs) == "l1 l1"

    @pytest.mark.parametrize("kind,families", [
        (K.BRAID, 2), (K.VIRTUAL_BRAID, 7), (K.WELDED_BRAID, 8), (K.TRIPLET, 2),
        (K.VIRTUAL_TRIPLET, 7), (K.WELDED_TRIPLET, 8), (K.SYMMETRIC_COXETER, 3)])
    def test_family_counts(self, kind, families):
        assert len(presentation_of(kind, 6).relation_families()) == families

    def test_welded_relation_shape(self):
        rel = [r for r in presentation_of(K.WELDED_TRIPLET, 3).relations if r.tag.startswith("welded")]
        assert [(str(r.lhs), str(r.rhs)) for r in rel] == [("r1 l2 l1", "l2 l1 r2")]

    def test_n_too_small(self):
        with pytest.raises(UnsupportedN):
            presentation_of(K.TRIPLET, 1)

    def test_parse_kind(self):
        assert K.parse("welded-triplet") is K.WELDED_TRIPLET
        with pytest.raises(UnsupportedPresentation):
            K.parse("nope")


class TestPureBraid:
    def test_adjacent(self):
        assert str(pure_braid_generator(1, 2, 3)) == "s1 s1"

    def test_conjugated(self):
        assert str(pure_braid_generator(1, 3, 3)) == "s2 s1 s1 s2^-1"

    def test_order(self):
        with pytest.raises(IndexOrder):
            pure_braid_generator(2, 1, 3)

    def test_pure_in_permutation_image(self):
        # each A_ij maps to the identity permutation
        perm = {f"s{i}": Matrix.permutation([i if j == i - 1 else i - 1 if j == i else j
                                            for j in range(5)]) for i in range(1, 5)}
        rep = RepCandidate(presentation_of(K.BRAID, 5), perm)
        for i in range(1, 6):
            for j in range(i + 1, 6):
                assert word_eval(rep, pure_braid_generator(i, j, 5)).is_identity()


class TestWords:
    def test_parse_power(self):
        assert str(W("(l1 r2)^3")) == "l1 r2 l1 r2 l1 r2"

    def test_parse_inverse(self):
        assert str(W("l1 (r1 l2)^-1")) == "l1 l2^-1 r1^-1"

    def test_parse_empty(self):
        assert len(W("")) == 0 and len(W("1")) == 0

    @pytest.mark.parametrize("text,pos", [("l1 q", 3), ("(l1", 3), ("l1)", 2), ("^2", 0)])
    def test_parse_errors(self, text, pos):
        with pytest.raises(WordParseError) as info:
            W(text)
        assert info.value.position == pos


class TestWordEval:
    def test_mu_prime_product(self):
        assert word_eval(mu_matrix(3), W("l1 l2")) == Matrix([[0, 0, s ** 2], [s ** -1, 0, 0], [0, s ** -1, 0]])

    def test_empty(self):
        assert word_eval(tits_theta(5), W("")) == Matrix.identity(4)

    def test_omega_n2_power(self):
        b, x = var("b"), var("x")
        for m in range(1, 4):
            r = b * x ** -1
            assert word_eval(omega(2, 1, "b", "x"), GroupWord.of("l1", "r1") ** m) == Matrix.diag(r ** m, r ** -m)

    def test_unassigned(self):
        with pytest.raises(UnassignedGenerator):
            word_eval(tits_theta(3), W("r1"))


class TestCheckRelations:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_tits(self, n):
        assert all(ok for _, ok in check_relations(tits_theta(n)))

    def test_omega2_fails_welded(self):
        assert failed_relations(omega(3, 2, x="x"), presentation_of(K.WELDED_TRIPLET, 3)) == ["welded_rll[1]"]

    def test_diagonal_block_fails_braid(self):
        pres = presentation_of(K.TRIPLET, 3)
        rep = RepCandidate(pres, {f"l{i}": block_embed(3, i, Matrix.diag(1, -1)) for i in (1, 2)})
        assert failed_relations(rep) == ["braid_l[1]"]


class TestClosure:
    def test_mu_prime_n3(self):
        closure = image_closure(mu_matrix(3), 100)
        assert closure.order == 6
        expected = [Matrix.identity(3),
                    Matrix([[0, s, 0], [s ** -1, 0, 0], [0, 0, 1]]),
                    Matrix([[1, 0, 0], [0, 0, s], [0, s ** -1, 0]]),
                    Matrix([[0, 0, s ** 2], [s ** -1, 0, 0], [0, s ** -1, 0]]),
                    Matrix([[0, s, 0], [0, 0, s], [s ** -2, 0, 0]]),
                    Matrix([[0, 0, s ** 2], [0, 1, 0], [s ** -2, 0, 0]])]
        assert set(closure.elements) == set(expected)

    def test_mu_prime_n4(self):
        assert image_closure(mu_matrix(4), 100).order == 24

    def test_trivial(self):
        rep = RepCandidate(presentation_of(K.TRIPLET, 3), {"l1": Matrix.identity(2), "l2": Matrix.identity(2)})
        assert image_closure(rep, 10).order == 1

    def test_cap(self):
        with pytest.raises(CapExceeded):
            image_closure(mu_matrix(4), 10)

    def test_infinite_image_hits_cap(self):
        with pytest.raises(CapExceeded):
            image_closure(tits_theta(4), 500)


class TestKernelSearch:
    def test_mu_prime_n4(self):
        w = kernel_witness_search(mu_matrix(4), tits_theta(4), 8)
        assert str(w) == "l1 l3 l1 l3"

    def test_omega1_n3(self):
        forget = sn_projection("forget_ell", presentation_of(K.VIRTUAL_TRIPLET, 3))
        rep = omega(3, 1, 2, 3)
        w = kernel_witness_search(rep, forget, 6)
        assert w is not None and len(w) == 6
        assert word_eval(rep, w).is_identity() and not word_eval(forget, w).is_identity()

    def test_self_oracle(self):
        assert kernel_witness_search(tits_theta(3), tits_theta(3), 6) is None


class TestProjections:
    def test_standard_transposition(self):
        rep = sn_projection("standard", presentation_of(K.TRIPLET, 3))
        assert rep.image("l1") == Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])

    def test_forget_ell_word(self):
        rep = sn_projection("forget_ell", presentation_of(K.VIRTUAL_TRIPLET, 3))
        assert word_eval(rep, W("(l1 r2)^3")) == Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])

    def test_forget_ell_relations(self):
        assert not failed_relations(sn_projection("forget_ell", presentation_of(K.VIRTUAL_TRIPLET, 4)))

    def test_forget_ell_not_welded(self):
        with pytest.raises(UnsupportedPresentation):
            sn_projection("forget_ell", presentation_of(K.WELDED_TRIPLET, 3))

    def test_braid_rejected(self):
        with pytest.raises(UnsupportedPresentation):
            sn_projection("standard", presentation_of(K.BRAID, 3))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_standard_relations(self, n):
        assert not failed_relations(sn_projection("standard", presentation_of(K.TRIPLET, n)))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_standard_order(self, n):
        assert image_closure(sn_projection("standard", presentation_of(K.TRIPLET, n))).order == math.factorial(n)

    @pytest.mark.parametrize("n", range(3, 6))
    def test_pair_reflection_oracle(self, n):
        oracle = pair_reflection_rep(presentation_of(K.VIRTUAL_TRIPLET, n))
        assert not failed_relations(oracle)
        if n >= 4:
            assert not word_eval(oracle, W("l1 l3 l1 l3")).is_identity()


# -- properties ---------------------------------------------------------------


def _random_word(rng, labels, length):
    return GroupWord(tuple((rng.choice(labels), 1) for _ in range(length)))


def test_word_eval_multiplicative():
    rng = random.Random(11)
    rep = omega(4, 1, 2, -3)
    labels = list(rep.presentation.generators)
    for _ in range(200):
        u = _random_word(rng, labels, rng.randint(0, 6))
        v = _random_word(rng, labels, rng.randint(0, 6))
        assert word_eval(rep, u * v) == word_eval(rep, u) @ word_eval(rep, v)


def test_consequences_of_relations_hold():
    rng = random.Random(5)
    reps = [tits_theta(4), lambda_homog(4, 3), mu_matrix(4, 2)]
    labels = ["l1", "l2", "l3"]
    for rep in reps:
        for _ in range(30):
            for rel in rep.presentation.relations:
                c = _random_word(rng, labels, rng.randint(0, 4))
                lhs = c * rel.lhs * c.inverse()
                rhs = c * rel.rhs * c.inverse()
                assert word_eval(rep, lhs) == word_eval(rep, rhs)

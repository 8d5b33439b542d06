"""Acceptance checks, one test per numbered criterion.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or directly as a script.
"""

import math
import random
import time
from contextlib import contextmanager

import pytest

from tripletrep.analysis import (
    L2_ELEMENTS,
    L3_ELEMENTS,
    classify_homog_2local_fp,
    classify_l3_2local_fp,
    det_a_sequence,
    faithfulness_by_enumeration,
    irreducibility_test,
    root_of_unity_criterion,
)
from tripletrep.freegroup import FreeWord, fox_derivative, magnus_jacobian
from tripletrep.groups import (
    GroupWord,
    PresentationKind as K,
    check_relations,
    failed_relations,
    image_closure,
    kernel_witness_search,
    pair_reflection_rep,
    presentation_of,
    sn_projection,
    word_eval,
)
from tripletrep.linalg import Matrix, algebra_span_dimension, block_embed, common_fixed_vector, conjugate, det_cofactor
from tripletrep.reps import (
    a_matrix,
    extend_standard,
    l3_family,
    lambda_homog,
    mu_automorphisms,
    mu_conjugator,
    mu_doubleprime,
    mu_matrix,
    omega,
    omega_conjugator,
    tits_theta,
)
from tripletrep.scalar import LaurentPoly, var

criterion = pytest.mark.criterion
s = var("s")


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"


def all_pass(rep, pres=None):
    return all(ok for _, ok in check_relations(rep, pres))


@criterion(1, "relation soundness of every constructor")
def test_relation_soundness():
    with within(10):
        for n in range(3, 9):
            assert all_pass(tits_theta(n)), n
        for n in range(2, 7):
            assert all_pass(mu_automorphisms(n))
            assert all_pass(mu_matrix(n))
            assert all_pass(mu_doubleprime(n))
        for n in range(3, 7):
            assert all_pass(lambda_homog(n, "b"))
        for j in (1, 2, 3, 4):
            assert all_pass(l3_family(j, b="b", c="c", e="e", f="f", g="g"))
        for n in range(3, 6):
            welded = presentation_of(K.WELDED_TRIPLET, n)
            for sign in (1, -1):
                ext = extend_standard(lambda_homog(n, "b"), sign)
                assert all_pass(ext) and all_pass(ext, welded)
            assert all_pass(omega(n, 1, "b", "x"), welded)
            assert all_pass(omega(n, 2, x="x"))
            failed = failed_relations(omega(n, 2, x="x"), welded)
            assert failed == [f"welded_rll[{i}]" for i in range(1, n - 1)]


@criterion(2, "Tits representation irreducible, n = 3..7")
def test_tits_irreducible():
    with within(30):
        for n in range(3, 8):
            res = irreducibility_test(tits_theta(n))
            assert res.irreducible and res.span_dimension == (n - 1) ** 2


@criterion(3, "det(A_m) nonzero for m = 1..12")
def test_a_matrix_determinants():
    with within(1):
        seq = dict(det_a_sequence(12))
        assert all(d != 0 for d in seq.values())
        assert (seq[1], seq[2], seq[3]) == (-2, 3, 8)
        assert all(det_cofactor(a_matrix(m)) == seq[m] for m in (1, 2, 3))


@criterion(4, "Jacobian of mu(l_i) equals the block matrix, n = 2..6")
def test_jacobian_blocks():
    with within(1):
        for n in range(2, 7):
            aut = mu_automorphisms(n)
            for i in range(1, n):
                assert magnus_jacobian(aut.image(f"l{i}")) == block_embed(n, i, Matrix.antidiag(s, s ** -1))


@criterion(5, "faithful for n = 2, 3; certified kernel witness for n = 4")
def test_faithfulness():
    with within(10):
        assert faithfulness_by_enumeration(mu_matrix(2), L2_ELEMENTS)
        rep = mu_matrix(3)
        assert faithfulness_by_enumeration(rep, L3_ELEMENTS)
        displayed = {
            Matrix.identity(3),
            Matrix([[0, s, 0], [s ** -1, 0, 0], [0, 0, 1]]),
            Matrix([[1, 0, 0], [0, 0, s], [0, s ** -1, 0]]),
            Matrix([[0, 0, s ** 2], [s ** -1, 0, 0], [0, s ** -1, 0]]),
            Matrix([[0, s, 0], [0, 0, s], [s ** -2, 0, 0]]),
            Matrix([[0, 0, s ** 2], [0, 1, 0], [s ** -2, 0, 0]]),
        }
        assert {word_eval(rep, w) for w in L3_ELEMENTS} == displayed
        witness = kernel_witness_search(mu_matrix(4), tits_theta(4), 8)
        assert witness is not None
        assert word_eval(mu_matrix(4), witness).is_identity()
        assert not word_eval(tits_theta(4), witness).is_identity()


@criterion(6, "image of the matrix form has n! elements, n = 3, 4, 5")
def test_image_order():
    with within(10):
        for n in (3, 4, 5):
            assert image_closure(mu_matrix(n)).order == math.factorial(n)


@criterion(7, "all-ones fixed vector and the conjugation identity")
def test_fixed_vectors():
    with within(5):
        for n in range(2, 7):
            assert common_fixed_vector(mu_doubleprime(n).gens()) == [1] * n
            assert common_fixed_vector(mu_matrix(n, 0).gens()) == [1] * n
            p, base, dd = mu_conjugator(n), mu_matrix(n), mu_doubleprime(n)
            for g in base.images:
                assert conjugate(p, base.image(g)) == dd.image(g)
                assert p.inverse() @ base.image(g) @ p == dd.image(g)


@criterion(8, "homogeneous census for the triplet group over F_5, F_7")
def test_triplet_census():
    with within(5):
        for p in (5, 7):
            census = classify_homog_2local_fp(K.TRIPLET, p)
            assert len(census.solutions) == p - 1
            assert not census.unmatched and census.reverified
            for a, b, c, d in census.solutions:
                assert a == d == 0 and (b * c) % p == 1


@criterion(9, "eight-unknown census for L_3 over F_5, F_7")
def test_l3_census():
    with within(180):
        for j in (1, 2, 3, 4):
            assert all_pass(l3_family(j, b="b", c="c", e="e", f="f", g="g"))
        for p in (5, 7):
            census = classify_l3_2local_fp(p)
            assert census.reverified
            assert census.unmatched == [], f"unmatched solutions over F_{p}: {census.unmatched}"


@criterion(10, "virtual and welded censuses over F_5")
def test_virtual_welded_census():
    with within(60):
        vl = classify_homog_2local_fp(K.VIRTUAL_TRIPLET, 5)
        assert vl.counts() == {"omega1": 16, "omega2": 4} and not vl.unmatched
        wl = classify_homog_2local_fp(K.WELDED_TRIPLET, 5)
        assert wl.counts() == {"omega1": 16} and wl.reverified


@criterion(11, "non-faithfulness of omega_1 for n = 2, 3, 4")
def test_omega_kernels():
    with within(10):
        b, x = var("b"), var("x")
        rep2 = omega(2, 1, "b", "x")
        for m in range(1, 6):
            r = b * x ** -1
            assert word_eval(rep2, GroupWord.of("l1", "r1") ** m) == Matrix.diag(r ** m, r ** -m)
        assert root_of_unity_criterion(2, -2) == 2
        assert word_eval(omega(2, 1, 2, -2), GroupWord.of("l1", "r1") ** 2).is_identity()
        assert root_of_unity_criterion(2, 3, 24) is None

        w = GroupWord.parse("(l1 r2)^3")
        assert word_eval(omega(3, 1, "b", "x"), w).is_identity()
        forget = sn_projection("forget_ell", presentation_of(K.VIRTUAL_TRIPLET, 3))
        assert not word_eval(forget, w).is_identity()

        oracle = pair_reflection_rep(presentation_of(K.VIRTUAL_TRIPLET, 4))
        assert not failed_relations(oracle)
        found = kernel_witness_search(omega(4, 1, 2, 3), oracle, 6)
        assert found is not None
        assert word_eval(omega(4, 1, "b", "x"), found).is_identity()
        assert not word_eval(oracle, found).is_identity()


@criterion(12, "irreducibility of omega_1 exactly when b != x")
def test_omega_irreducibility():
    with within(60):
        for n in (3, 4):
            assert irreducibility_test(omega(n, 1, "b", "x")).irreducible
            eq = omega(n, 1, "b", "b")
            assert not irreducibility_test(eq).irreducible
            normal = [conjugate(omega_conjugator(n, "b"), m) for m in eq.gens()]
            assert common_fixed_vector(normal) == [1] * n
            assert irreducibility_test(omega(n, 1, 2, -2)).irreducible


def _laurent(rng):
    out = LaurentPoly.const(0)
    for _ in range(rng.randint(0, 3)):
        exps = {v: rng.randint(-3, 3) for v in ("t", "s") if rng.random() < 0.7}
        out = out + LaurentPoly.monomial({k: e for k, e in exps.items() if e}, rng.randint(-4, 4))
    return out


def _free_word(rng):
    return FreeWord([(rng.randint(1, 3), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))])


@criterion(13, "property suites")
def test_property_suites():
    rng = random.Random(20261016)
    with within(30):
        zero, one = LaurentPoly.const(0), LaurentPoly.const(1)
        for _ in range(500):
            a, b, c = _laurent(rng), _laurent(rng), _laurent(rng)
            assert (a + b) + c == a + (b + c) and a + b == b + a
            assert (a * b) * c == a * (b * c) and a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + zero == a and a * one == a and a + (-a) == zero

        for _ in range(200):
            u, v = _free_word(rng), _free_word(rng)
            for j in (1, 2, 3):
                assert fox_derivative(u * v, j) == fox_derivative(u, j) + fox_derivative(v, j).left_mul(u)

        rep = omega(4, 1, 2, -3)
        labels = list(rep.presentation.generators)
        for _ in range(200):
            u = GroupWord(tuple((rng.choice(labels), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))))
            v = GroupWord(tuple((rng.choice(labels), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))))
            assert word_eval(rep, u * v) == word_eval(rep, u) @ word_eval(rep, v)

        for _ in range(50):
            size = rng.randint(2, 3)
            gens = [Matrix([[rng.randint(-2, 2) for _ in range(size)] for _ in range(size)])
                    for _ in range(rng.randint(1, 2))]
            d = Matrix.diag(*[rng.choice((1, -1, 2, -3)) for _ in range(size)])
            conj = [conjugate(d, g) for g in gens]
            assert algebra_span_dimension(conj) == algebra_span_dimension(gens)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))

"""Named groups of checks, each producing VerificationReport records."""

from __future__ import annotations

import traceback
from typing import Callable

from . import __version__
from .analysis import (
    L2_ELEMENTS,
    L3_ELEMENTS,
    VerificationReport,
    classify_homog_2local_fp,
    classify_l3_2local_fp,
    det_a_sequence,
    faithfulness_by_enumeration,
    irreducibility_test,
    kernel_is_pure_check,
    report,
    root_of_unity_criterion,
    tits_lemma_checks,
)
from .freegroup import magnus_jacobian
from .groups import (
    GroupWord,
    PresentationKind,
    check_relations,
    failed_relations,
    kernel_witness_search,
    pair_reflection_rep,
    presentation_of,
    sn_projection,
    word_eval,
)
from .linalg import Matrix, block_embed, common_fixed_vector, conjugate, det_cofactor
from .reps import (
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
    t_power,
    tits_theta,
)
from .scalar import var

__all__ = ["SUITES", "DEFAULT_N", "run_suite", "suite_document"]

K = PresentationKind

DEFAULT_N = {"tits": (3, 7), "mu": (2, 6), "two-local": (3, 6), "l3-families": (3, 3),
             "extensions": (3, 5)}


def _relations_report(name, rep, presentation=None, expect_fail=()):
    results = check_relations(rep, presentation)
    failed = sorted(tag for tag, ok in results if not ok)
    expected = sorted(expect_fail)
    return report(name, dict(rep.params, presentation=str(presentation or rep.presentation)),
                  failed == expected, relations=len(results), failed=failed)


# ---------------------------------------------------------------------------
# suites


def tits_suite(ns, **_):
    out = []
    for n in ns:
        out.append(_relations_report("tits_relations", tits_theta(n)))
        res = irreducibility_test(tits_theta(n))
        out.append(report("tits_irreducible", {"n": n}, res.irreducible and res.span_dimension == (n - 1) ** 2,
                          span_dimension=res.span_dimension, size=res.size))
        if n <= 8:
            out.append(tits_lemma_checks(n))
    seq = det_a_sequence(12)
    oracle = {m: det_cofactor(a_matrix(m)) for m in (1, 2, 3)}
    ok = all(d != 0 for _, d in seq) and [seq[m - 1][1] for m in (1, 2, 3)] == [-2, 3, 8] \
        and all(oracle[m] == seq[m - 1][1] for m in oracle)
    out.append(report("det_a_sequence", {"maxN": 12}, ok, determinants=[[m, d] for m, d in seq]))
    return out


def mu_suite(ns, depth=8, cap=10000, **_):
    out = []
    for n in ns:
        out.append(_relations_report("mu_automorphism_relations", mu_automorphisms(n)))
        out.append(_relations_report("mu_prime_relations", mu_matrix(n)))
        out.append(_relations_report("mu_doubleprime_relations", mu_doubleprime(n)))
        aut, mat = mu_automorphisms(n), mu_matrix(n)
        s = t_power(None)
        ok = all(magnus_jacobian(aut.image(f"l{i}")) == mat.image(f"l{i}")
                 == block_embed(n, i, Matrix.antidiag(s, s.inverse())) for i in range(1, n))
        out.append(report("jacobian_equals_block", {"n": n}, ok))
        p = mu_conjugator(n)
        dd = mu_doubleprime(n)
        ok = all(conjugate(p, mat.image(g)) == dd.image(g)
                 == block_embed(n, int(g[1:]), Matrix.antidiag(1, 1)) for g in mat.images)
        out.append(report("mu_conjugation_identity", {"n": n}, ok))
        fv = common_fixed_vector(dd.gens())
        out.append(report("mu_doubleprime_fixed_vector", {"n": n}, fv == [1] * n, vector=fv))
        fv0 = common_fixed_vector(mu_matrix(n, 0).gens())
        out.append(report("mu_k0_fixed_vector", {"n": n}, fv0 == [1] * n, vector=fv0))
        if n == 2:
            out.append(report("mu_faithful", {"n": 2}, faithfulness_by_enumeration(mat, L2_ELEMENTS)))
        if n == 3:
            out.append(report("mu_faithful", {"n": 3}, faithfulness_by_enumeration(mat, L3_ELEMENTS),
                              images=[word_eval(mat, w) for w in L3_ELEMENTS]))
            spec = mu_matrix(3, 1).evaluate({"t": 2})
            res = irreducibility_test(spec)
            out.append(report("mu_reducible", {"n": 3, "k": 1, "t": 2}, not res.irreducible,
                              span_dimension=res.span_dimension, fixed_vector=res.fixed_vector))
        if 3 <= n <= 6:
            out.append(kernel_is_pure_check(n, depth, cap))
    return out


def _census_report(census, expected=None):
    ok = census.reverified and not census.unmatched
    if expected is not None:
        ok = ok and census.counts() == expected
    return report(f"census_{census.kind}", {"p": census.p}, ok, **census.summary())


def two_local_suite(ns, primes=(5, 7), **_):
    out = []
    for n in ns:
        out.append(_relations_report("lambda_relations", lambda_homog(n, "b")))
    for p in primes:
        out.append(_census_report(classify_homog_2local_fp(K.TRIPLET, p), {"lambda": p - 1}))
    return out


def l3_suite(ns=(), primes=(5, 7), **_):
    out = []
    symbols = dict(b="b", c="c", e="e", f="f", g="g")
    for j in (1, 2, 3, 4):
        out.append(_relations_report("l3_family_relations", l3_family(j, **symbols)))
    for p in primes:
        out.append(_census_report(classify_l3_2local_fp(p)))
    return out


def extensions_suite(ns, primes=(5,), depth=8, **_):
    out = []
    for n in ns:
        welded = presentation_of(K.WELDED_TRIPLET, n)
        for sign in (1, -1):
            ext = extend_standard(lambda_homog(n, "b"), sign)
            out.append(_relations_report("extension_relations", ext))
            out.append(_relations_report("extension_relations", ext, welded))
        o1, o2 = omega(n, 1, "b", "x"), omega(n, 2, x="x")
        out.append(_relations_report("omega1_relations", o1))
        out.append(_relations_report("omega1_relations", o1, welded))
        out.append(_relations_report("omega2_relations", o2))
        out.append(_relations_report("omega2_fails_only_welded", o2, welded,
                                     expect_fail=[f"welded_rll[{i}]" for i in range(1, n - 1)]))
    for p in primes:
        for kind, expected in ((K.VIRTUAL_TRIPLET, {"omega1": (p - 1) ** 2, "omega2": p - 1}),
                               (K.WELDED_TRIPLET, {"omega1": (p - 1) ** 2})):
            out.append(_census_report(classify_homog_2local_fp(kind, p), expected))
    out += _omega_faithfulness(depth)
    out += _omega_irreducibility()
    return out


def _omega_faithfulness(depth):
    out = []
    b, x = var("b"), var("x")
    o2 = omega(2, 1, "b", "x")
    ok = True
    for m in range(1, 6):
        ratio = b * x.inverse()
        ok &= word_eval(o2, GroupWord.of("l1", "r1") ** m) == Matrix.diag(ratio ** m, ratio ** -m)
        ok &= word_eval(o2, GroupWord.of("r1", "l1") ** m) == Matrix.diag(ratio ** -m, ratio ** m)
    out.append(report("omega1_n2_power_formula", {"m": "1..5"}, ok))
    m = root_of_unity_criterion(2, -2)
    out.append(report("root_of_unity", {"b": 2, "x": -2}, m == 2, m=m))
    m = root_of_unity_criterion(2, 3)
    out.append(report("root_of_unity", {"b": 2, "x": 3, "maxM": 24}, m is None, m=m))

    w = GroupWord.parse("(l1 r2)^3")
    vl3 = presentation_of(K.VIRTUAL_TRIPLET, 3)
    forget = sn_projection("forget_ell", vl3)
    img = word_eval(omega(3, 1, "b", "x"), w)
    perm = word_eval(forget, w)
    out.append(report("omega1_n3_kernel_word", {"word": str(w)},
                      img.is_identity() and not perm.is_identity(), forget_image=perm))
    found = kernel_witness_search(omega(3, 1, 2, 3), forget, min(depth, 6))
    ok = found is not None and word_eval(omega(3, 1, 2, 3), found).is_identity() \
        and not word_eval(forget, found).is_identity()
    out.append(report("omega1_n3_witness_search", {"b": 2, "x": 3, "maxLen": min(depth, 6)}, ok,
                      witness=found))

    vl4 = presentation_of(K.VIRTUAL_TRIPLET, 4)
    oracle = pair_reflection_rep(vl4)
    comm = GroupWord.parse("l1 l3 l1 l3")
    ok = not failed_relations(oracle) and word_eval(omega(4, 1, "b", "x"), comm).is_identity() \
        and not word_eval(oracle, comm).is_identity()
    out.append(report("omega1_n4_commutator", {"word": str(comm)}, ok))
    return out


def _omega_irreducibility():
    out = []
    for n in (3, 4):
        res = irreducibility_test(omega(n, 1, "b", "x"))
        out.append(report("omega1_irreducible_generic", {"n": n}, res.irreducible,
                          span_dimension=res.span_dimension))
        eq = omega(n, 1, "b", "b")
        res = irreducibility_test(eq)
        prime = eq.map_images(lambda m: conjugate(omega_conjugator(n, "b"), m))
        fv = common_fixed_vector(prime.gens())
        out.append(report("omega1_reducible_b_eq_x", {"n": n},
                          not res.irreducible and fv == [1] * n,
                          span_dimension=res.span_dimension, fixed_vector_conjugated=fv,
                          fixed_vector=res.fixed_vector))
        res = irreducibility_test(omega(n, 1, 2, -2))
        out.append(report("omega1_irreducible_special", {"n": n, "b": 2, "x": -2}, res.irreducible,
                          span_dimension=res.span_dimension))
    return out


SUITES: dict[str, Callable] = {
    "tits": tits_suite,
    "mu": mu_suite,
    "two-local": two_local_suite,
    "l3-families": l3_suite,
    "extensions": extensions_suite,
}


def run_suite(name, n_range=None, primes=None, depth=8, cap=10000):
    """Run one suite (or ``all``) and return its reports in a fixed order."""
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
        lo, hi = n_range or DEFAULT_N[suite]
        kwargs = {"depth": depth, "cap": cap}
        if primes is not None:
            kwargs["primes"] = tuple(primes)
        elif suite == "extensions":
            kwargs["primes"] = (5,)
        try:
            reports += SUITES[suite](range(lo, hi + 1), **kwargs)
        except Exception as exc:  # reported, not raised: exit code 2
            reports.append(VerificationReport(f"{suite}_internal", {}, "error",
                                              {"error": f"{type(exc).__name__}: {exc}",
                                               "trace": traceback.format_exc().splitlines()[-3:]}))
    return reports


def suite_document(name, reports):
    return {"suite": name, "version": __version__, "checks": [r.to_dict() for r in reports]}


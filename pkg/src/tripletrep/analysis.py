"""Verification procedures built on the representation constructors.

The two census functions scan every parameter tuple over F_p with numpy,
then re-check each survivor with exact F_p matrices.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .errors import ZeroParameter
from .groups import (
    GroupWord,
    PresentationKind,
    RepCandidate,
    check_relations,
    image_closure,
    kernel_witness_search,
    presentation_of,
    word_eval,
)
from .linalg import Matrix, algebra_span_dimension, block_embed, common_fixed_vector, det
from .reps import a_matrix, mu_matrix, omega, tits_theta, two_local_blocks
from .scalar import LaurentPoly, PrimeFieldElement, is_prime, render, var

__all__ = [
    "VerificationReport",
    "IrreducibilityResult",
    "ClassificationCensus",
    "L2_ELEMENTS",
    "L3_ELEMENTS",
    "irreducibility_test",
    "det_a_sequence",
    "faithfulness_by_enumeration",
    "kernel_is_pure_check",
    "root_of_unity_criterion",
    "tits_lemma_checks",
    "classify_homog_2local_fp",
    "classify_l3_2local_fp",
    "l3_system",
    "jsonable",
]

L2_ELEMENTS = ("", "l1")
L3_ELEMENTS = ("", "l1", "l2", "l1 l2", "l2 l1", "l1 l2 l1")


def jsonable(value):
    """Convert results into plain JSON types, with scalars rendered exactly."""
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Matrix):
        return value.to_strings()
    if isinstance(value, GroupWord):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, PrimeFieldElement):
        return value.value
    return render(value)


@dataclass
class VerificationReport:
    check_name: str
    parameters: dict
    status: str  # "pass" | "fail" | "error"
    data: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {"checkName": self.check_name, "parameters": jsonable(self.parameters),
                "status": self.status, "data": jsonable(self.data)}


def report(name, params, ok, **data):
    return VerificationReport(name, params, "pass" if ok else "fail", data)


# ---------------------------------------------------------------------------
# irreducibility


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    span_dimension: int
    size: int
    fixed_vector: Any = None

    def __str__(self):
        if self.irreducible:
            return f"irreducible (span {self.span_dimension} = {self.size}^2)"
        fv = "" if self.fixed_vector is None else f", fixed vector {[render(x) for x in self.fixed_vector]}"
        return f"reducible (span {self.span_dimension} < {self.size ** 2}{fv})"


def irreducibility_test(rep, cap=200) -> IrreducibilityResult:
    """Burnside test: irreducible iff the images span the full matrix algebra."""
    gens = rep.gens() if isinstance(rep, RepCandidate) else list(rep)
    n = gens[0].rows
    dim = algebra_span_dimension(gens, cap=cap)
    if dim == n * n:
        return IrreducibilityResult(True, dim, n)
    return IrreducibilityResult(False, dim, n, common_fixed_vector(gens))


# ---------------------------------------------------------------------------
# determinants, faithfulness, kernels


def det_a_sequence(max_n):
    return [(m, det(a_matrix(m))) for m in range(1, max_n + 1)]


def faithfulness_by_enumeration(rep, elements) -> bool:
    """True iff the listed (distinct) group elements have distinct images."""
    images = [word_eval(rep, w) for w in elements]
    return all(a != b for a, b in itertools.combinations(images, 2))


def kernel_is_pure_check(n, depth=8, cap=10000) -> VerificationReport:
    """Image of the matrix form has n! elements; a kernel witness exists
    exactly when n >= 4 (for n = 3 the representation is faithful)."""
    rep = mu_matrix(n)
    closure = image_closure(rep, cap)
    witness = kernel_witness_search(rep, tits_theta(n), depth)
    expect_witness = n >= 4
    certified = None
    if witness is not None:
        certified = word_eval(rep, witness).is_identity() and \
            not word_eval(tits_theta(n), witness).is_identity()
    ok = closure.order == math.factorial(n) and (witness is not None) == expect_witness \
        and certified in (None, True)
    return report("kernel_is_pure", {"n": n, "depth": depth}, ok, order=closure.order,
                  expected_order=math.factorial(n), witness=witness, witness_certified=certified)


def root_of_unity_criterion(b, x, max_m=24):
    """Least m <= max_m with (b/x)^m = 1, or None.

    When m is found, both (l1 r1)^m and (r1 l1)^m are checked to act
    trivially under omega_1 on two strands.
    """
    if b == 0 or x == 0:
        raise ZeroParameter("b and x must be nonzero")
    ratio = (Fraction(b) if isinstance(b, int) else b) / x
    for m in range(1, max_m + 1):
        if ratio ** m == 1:
            rep = omega(2, 1, b, x)
            for w in (GroupWord.of("l1", "r1") ** m, GroupWord.of("r1", "l1") ** m):
                if not word_eval(rep, w).is_identity():
                    raise ArithmeticError(f"(b/x)^{m} = 1 but {w} acts nontrivially")
            return m
    return None


def tits_lemma_checks(n) -> VerificationReport:
    """(a) Theta(l_i) e_1 - e_1 is a multiple of e_1 (i = 1) or e_i (i >= 2);
    (b) the e_i coefficient of Theta(l_i) u - u is row i of A_{n-1} applied to u."""
    rep = tits_theta(n)
    m = n - 1
    e1 = [1] + [0] * (m - 1)
    steps = {}
    ok_a = True
    for i in range(1, n):
        img = rep.image(f"l{i}")
        diff = [a - b for a, b in zip(img.apply(e1), e1)]
        nonzero = [k + 1 for k, v in enumerate(diff) if v != 0]
        steps[f"l{i}"] = {"index": i, "coefficient": diff[i - 1]}
        ok_a &= nonzero == [i]
    u = [var(f"u{k}") for k in range(1, m + 1)]
    amat = a_matrix(m)
    forms = []
    ok_b = True
    for i in range(1, n):
        img = rep.image(f"l{i}")
        coeff = img.apply(u)[i - 1] - u[i - 1]
        expected = sum((amat[i - 1, j] * u[j] for j in range(m)), LaurentPoly.const(0))
        forms.append(str(coeff))
        ok_b &= coeff == expected
    return report("tits_lemma", {"n": n}, ok_a and ok_b, e1_steps=steps, linear_forms=forms,
                  step_a=ok_a, step_b=ok_b)


# ---------------------------------------------------------------------------
# censuses over F_p


def _threads():
    try:
        return max(1, int(os.environ.get("TRIPLETREP_THREADS", "0")) or min(8, os.cpu_count() or 1))
    except ValueError:
        return 1


@dataclass
class ClassificationCensus:
    kind: str
    p: int
    domain_size: int
    solutions: list
    family_matches: dict
    trivial_solutions: int = 0
    reverified: bool = False

    @property
    def unmatched(self):
        return [s for s in self.solutions if self.family_matches[s] == "Unmatched"]

    def counts(self):
        out = {}
        for s in self.solutions:
            out[self.family_matches[s]] = out.get(self.family_matches[s], 0) + 1
        return dict(sorted(out.items()))

    def summary(self):
        return {"kind": self.kind, "p": self.p, "domainSize": self.domain_size,
                "solutions": len(self.solutions), "familyCounts": self.counts(),
                "unmatched": [list(s) for s in self.unmatched],
                "trivialExcluded": self.trivial_solutions, "reverified": self.reverified}


def _embed_batch(block, pos):
    """(N, 2, 2) blocks -> (N, 3, 3) matrices with the block at ``pos``."""
    out = np.zeros((block.shape[0], 3, 3), dtype=np.int64)
    out[:, 0, 0] = out[:, 1, 1] = out[:, 2, 2] = 1
    r = pos - 1
    out[:, r:r + 2, r:r + 2] = block
    return out


def _all_tuples(p, width, prefix):
    """Every tuple in F_p^width starting with ``prefix``, as an int array."""
    rest = width - len(prefix)
    grid = np.indices((p,) * rest).reshape(rest, -1).T if rest else np.zeros((1, 0), np.int64)
    pre = np.broadcast_to(np.array(prefix, dtype=np.int64), (grid.shape[0], len(prefix)))
    return np.hstack([pre, grid]).astype(np.int64)


def _eval_batch(word, mats, p):
    acc = None
    for g, e in word.letters:
        m = mats[g]
        acc = m if acc is None else np.matmul(acc, m) % p
    if acc is None:
        acc = np.broadcast_to(np.eye(3, dtype=np.int64), next(iter(mats.values())).shape)
    return acc


def _scan(p, width, fn):
    """Apply ``fn`` to chunks of F_p^width (first two coordinates fixed per
    chunk) and merge the surviving tuples in sorted order."""
    prefixes = list(itertools.product(range(p), repeat=min(2, width)))
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        parts = list(pool.map(lambda pre: fn(_all_tuples(p, width, pre)), prefixes))
    rows = sorted(tuple(int(v) for v in r) for part in parts for r in part)
    return rows


def _homog_blocks(kind, values, p):
    """Exact F_p representation of the n = 3 presentation for one tuple."""
    F = lambda v: PrimeFieldElement(v, p)  # noqa: E731
    pres = presentation_of(kind, 3)
    ell = Matrix([[F(values[0]), F(values[1])], [F(values[2]), F(values[3])]])
    images = {f"l{i}": block_embed(3, i, ell) for i in (1, 2)}
    if len(values) == 8:
        rho = Matrix([[F(values[4]), F(values[5])], [F(values[6]), F(values[7])]])
        images.update({f"r{i}": block_embed(3, i, rho) for i in (1, 2)})
    return RepCandidate(pres, images, "census_candidate", {"p": p})


def _antidiag_unit(a, b, c, d, p):
    return a == 0 and d == 0 and (b * c) % p == 1


def _identity_block(a, b, c, d):
    return (a, b, c, d) == (1, 0, 0, 1)


def _match_homog(kind, s, p):
    ell = s[:4]
    if kind is PresentationKind.TRIPLET:
        return "lambda" if _antidiag_unit(*ell, p) else "Unmatched"
    rho = s[4:]
    if _antidiag_unit(*ell, p) and _antidiag_unit(*rho, p):
        return "omega1"
    if kind is PresentationKind.VIRTUAL_TRIPLET and _identity_block(*ell) and _antidiag_unit(*rho, p):
        return "omega2"
    return "Unmatched"


def classify_homog_2local_fp(kind, p) -> ClassificationCensus:
    """All invertible nontrivial homogeneous 2-local blocks over F_p whose
    three-strand embeddings satisfy every defining relation of ``kind``."""
    kind = PresentationKind.parse(kind)
    if kind not in (PresentationKind.TRIPLET, PresentationKind.VIRTUAL_TRIPLET,
                    PresentationKind.WELDED_TRIPLET):
        raise ValueError(f"no homogeneous census for {kind.value}")
    if not (is_prime(p) and p > 3):
        raise ValueError(f"need a prime p > 3, got {p}")
    width = 4 if kind is PresentationKind.TRIPLET else 8
    pres = presentation_of(kind, 3)
    trivial = [0]

    def scan(t):
        blocks = [t[:, 0:4].reshape(-1, 2, 2)]
        if width == 8:
            blocks.append(t[:, 4:8].reshape(-1, 2, 2))
        keep = np.ones(t.shape[0], dtype=bool)
        for blk in blocks:
            keep &= (blk[:, 0, 0] * blk[:, 1, 1] - blk[:, 0, 1] * blk[:, 1, 0]) % p != 0
        t = t[keep]
        blocks = [b[keep] for b in blocks]
        mats = {"l1": _embed_batch(blocks[0], 1), "l2": _embed_batch(blocks[0], 2)}
        if width == 8:
            mats.update({"r1": _embed_batch(blocks[1], 1), "r2": _embed_batch(blocks[1], 2)})
        for rel in pres.relations:
            lhs, rhs = _eval_batch(rel.lhs, mats, p), _eval_batch(rel.rhs, mats, p)
            ok = np.all((lhs - rhs) % p == 0, axis=(1, 2))
            t = t[ok]
            mats = {g: m[ok] for g, m in mats.items()}
            if not len(t):
                break
        return t

    rows = _scan(p, width, scan)
    ident = (1, 0, 0, 1) * (width // 4)
    solutions = [r for r in rows if r != ident]
    trivial[0] = len(rows) - len(solutions)
    matches = {s: _match_homog(kind, s, p) for s in solutions}
    reverified = all(all(ok for _, ok in check_relations(_homog_blocks(kind, s, p)))
                     for s in solutions)
    return ClassificationCensus(kind.value, p, p ** width, solutions, matches,
                                trivial[0], reverified)


# -- the eight-unknown system for L_3 -----------------------------------------


def l3_system(v):
    """The fifteen polynomial conditions on (a, ..., h); all must vanish.

    Works elementwise on numpy arrays as well as on scalars.
    """
    a, b, c, d, e, f, g, h = v
    return [
        -1 + a * a + b * c,
        b * (a + d),
        c * (a + d),
        -1 + b * c + d * d,
        -1 + e * e + f * g,
        f * (e + h),
        g * (e + h),
        -1 + f * g + h * h,
        -a + a * a + b * c * e,
        b * (a - e + d * e),
        c * (a - e + d * e),
        b * c + d * d * e - d * e * e - f * g,
        f * (d - d * e - h),
        g * (d - d * e - h),
        -d * f * g + h - h * h,
    ]


def _inv(x, p):
    return pow(x, -1, p)


def _match_l3(s, p):
    a, b, c, d, e, f, g, h = s
    q = lambda num, den: (num * _inv(den % p, p)) % p  # noqa: E731
    if s == (1, 0, 0, p - 1, p - 1, 0, 0, 1):
        return "family4"
    if (a, b, d, e, h) == (1, 0, p - 1, q(1, 2), q(-1, 2)) and f != 0 and g == q(3, 4 * f):
        return "family3"
    if (a, d, e, f, h) == (q(-1, 2), q(1, 2), p - 1, 0, 1) and b != 0 and c == q(3, 4 * b):
        return "family2"
    if b != 0 and f != 0 and e != 1:
        if (a == q(e, 1 - e) and c == q(1 - 2 * e, b * (e - 1) ** 2) and d == q(e, e - 1)
                and g == q(1 - e * e, f) and h == (-e) % p):
            return "family1"
    return "Unmatched"


def classify_l3_2local_fp(p) -> ClassificationCensus:
    """Every (a, ..., h) in F_p^8 solving the fifteen conditions with both
    blocks invertible, excluding the identity pair."""
    if not (is_prime(p) and p > 3):
        raise ValueError(f"need a prime p > 3, got {p}")

    def scan(t):
        cols = [t[:, k] for k in range(8)]
        a, b, c, d, e, f, g, h = cols
        keep = ((a * d - b * c) % p != 0) & ((e * h - f * g) % p != 0)
        for expr in l3_system(cols):
            keep &= expr % p == 0
        return t[keep]

    rows = _scan(p, 8, scan)
    ident = (1, 0, 0, 1, 1, 0, 0, 1)
    solutions = [r for r in rows if r != ident]
    matches = {s: _match_l3(s, p) for s in solutions}
    reverified = all(
        all(ok for _, ok in check_relations(
            two_local_blocks([PrimeFieldElement(v, p) for v in s])))
        for s in solutions)
    return ClassificationCensus("L3TwoLocal", p, p ** 8, solutions, matches,
                                len(rows) - len(solutions), reverified)

"""Constructors for the concrete representations.

Parameters may be given as numbers (int or Fraction), as F_p elements, or
as strings naming a symbolic Laurent variable (``"b"``, ``"x"``, ...).
The exponent ``k`` of ``t^k`` may be an integer or ``None``; ``None`` uses
the variable ``s`` in place of ``t^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainViolation, NotTwoLocal, UnsupportedN, ZeroParameter
from .freegroup import MonomialAutomorphism, ScaledWord
from .groups import PresentationKind, RepCandidate, presentation_of
from .linalg import Matrix, block_embed, conjugate
from .scalar import LaurentPoly, PrimeFieldElement, divide, invert, var

__all__ = [
    "TitsHelperBlocks",
    "param",
    "t_power",
    "tits_theta",
    "mu_automorphisms",
    "mu_matrix",
    "mu_conjugator",
    "mu_doubleprime",
    "lambda_homog",
    "l3_family",
    "l3_tuple",
    "extend_standard",
    "omega",
    "omega_conjugator",
    "a_matrix",
    "two_local_blocks",
]


def param(value, p=None):
    """Normalise a user-supplied parameter."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"unsupported parameter {value!r}")
    if isinstance(value, str):
        value = value.strip()
        try:
            value = Fraction(value)
        except ValueError:
            return var(value)
    if isinstance(value, int):
        value = Fraction(value)
    if p is not None and isinstance(value, Fraction):
        return PrimeFieldElement(value, p)
    return value


def _nonzero(name, value):
    if value == 0:
        raise ZeroParameter(f"{name} must be nonzero")
    return value


def t_power(k):
    """The unit t^k, or the variable s standing for it when k is None."""
    if k is None:
        return var("s")
    if k == 0:
        return LaurentPoly.const(1)
    return var("t") ** int(k)


# ---------------------------------------------------------------------------
# Tits representation


@dataclass(frozen=True)
class TitsHelperBlocks:
    """Blocks used to assemble the Tits matrices.

    ``M`` is 3 x l with a middle row of 2's and zero outer rows; ``N`` is
    its bottom two rows and ``K`` its top two rows.
    """

    l: int

    @property
    def M(self):
        return [[0] * self.l, [2] * self.l, [0] * self.l]

    @property
    def N(self):
        return self.M[1:]

    @property
    def K(self):
        return self.M[:2]


def _place(grid, r0, c0, block):
    for i, row in enumerate(block):
        for j, x in enumerate(row):
            grid[r0 + i][c0 + j] = x


def _ident(m):
    return [[1 if i == j else 0 for j in range(m)] for i in range(m)]


def _tits_generator(n, i):
    m = n - 1
    grid = [[0] * m for _ in range(m)]
    if i == 1:
        _place(grid, 0, 0, [[-1, 1], [0, 1]])
        _place(grid, 0, 2, TitsHelperBlocks(n - 3).N)
        _place(grid, 2, 2, _ident(n - 3))
    elif i == n - 1:
        _place(grid, 0, 0, _ident(n - 3))
        _place(grid, n - 3, 0, TitsHelperBlocks(n - 3).K)
        _place(grid, n - 3, n - 3, [[1, 0], [1, -1]])
    else:
        r = i - 2
        _place(grid, 0, 0, _ident(r))
        _place(grid, r, 0, TitsHelperBlocks(r).M)
        _place(grid, r, r, [[1, 0, 0], [1, -1, 1], [0, 0, 1]])
        _place(grid, r, r + 3, TitsHelperBlocks(n - i - 2).M)
        _place(grid, r + 3, r + 3, _ident(n - i - 2))
    return Matrix(grid)


def tits_theta(n) -> RepCandidate:
    """Tits representation of L_n on Q^(n-1)."""
    if n < 3:
        raise UnsupportedN(f"the Tits representation needs n >= 3, got {n}")
    pres = presentation_of(PresentationKind.TRIPLET, n)
    images = {f"l{i}": _tits_generator(n, i) for i in range(1, n)}
    return RepCandidate(pres, images, "tits", {"n": n})


def a_matrix(m) -> Matrix:
    """-2 on the diagonal, 1 next to it, 2 everywhere else."""
    if m < 1:
        raise UnsupportedN(f"size must be positive, got {m}")
    return Matrix([[-2 if i == j else 1 if abs(i - j) == 1 else 2 for j in range(m)]
                   for i in range(m)])


# ---------------------------------------------------------------------------
# the free-group representation and its matrix forms


def _check_n(n, least=2):
    if n < least:
        raise UnsupportedN(f"need n >= {least}, got {n}")


def mu_automorphisms(n, k=None) -> RepCandidate:
    """l_i acts on F_n by x_i -> t^k x_{i+1}, x_{i+1} -> t^-k x_i."""
    _check_n(n)
    u = t_power(k)
    images = {}
    for i in range(1, n):
        imgs = [ScaledWord.gen(j) for j in range(1, n + 1)]
        imgs[i - 1] = ScaledWord.gen(i + 1, u)
        imgs[i] = ScaledWord.gen(i, u.inverse())
        images[f"l{i}"] = MonomialAutomorphism(imgs)
    return RepCandidate(presentation_of(PresentationKind.TRIPLET, n), images, "mu_aut",
                        {"n": n, "k": "s" if k is None else k})


def _homog(n, upper, lower, name, params, kind=PresentationKind.TRIPLET):
    block = Matrix.antidiag(upper, lower)
    images = {f"l{i}": block_embed(n, i, block) for i in range(1, n)}
    return RepCandidate(presentation_of(kind, n), images, name, params)


def mu_matrix(n, k=None) -> RepCandidate:
    """Matrix form: l_i -> I (+) [[0, t^k], [t^-k, 0]] (+) I."""
    _check_n(n)
    u = t_power(k)
    return _homog(n, u, u.inverse(), "mu_prime", {"n": n, "k": "s" if k is None else k})


def mu_conjugator(n, k=None) -> Matrix:
    """diag(t^{k(n-1)}, ..., t^k, 1)."""
    u = t_power(k)
    return Matrix.diag(*[u ** (n - 1 - j) for j in range(n)])


def mu_doubleprime(n, k=None) -> RepCandidate:
    """P^-1 mu' P; every generator becomes a transposition matrix."""
    base = mu_matrix(n, k)
    p = mu_conjugator(n, k)
    return base.map_images(lambda m: conjugate(p, m), "mu_doubleprime")


def lambda_homog(n, b, p=None) -> RepCandidate:
    """l_i -> I (+) [[0, b], [1/b, 0]] (+) I."""
    _check_n(n, 3)
    b = _nonzero("b", param(b, p))
    return _homog(n, b, invert(b), "lambda", {"n": n, "b": str(b)})


# ---------------------------------------------------------------------------
# 2-local representations of L_3 with independent blocks


def _require(ok, constraint):
    if not ok:
        raise DomainViolation(constraint)


def l3_tuple(j, b=None, c=None, e=None, f=None, g=None, p=None):
    """Entries (a, b, c, d, e, f, g, h) of family ``j``."""
    P = lambda v: None if v is None else param(v, p)  # noqa: E731
    one = P(1)
    if j == 1:
        b, e, f = P(b), P(e), P(f)
        _require(b is not None and b != 0, "b != 0")
        _require(e is not None and e != 1, "e != 1")
        _require(f is not None and f != 0, "f != 0")
        a = divide(e, one - e)
        c = divide(one - 2 * e, b * (e - one) ** 2)
        d = divide(e, e - one)
        return (a, b, c, d, e, f, divide(one - e * e, f), -e)
    if j == 2:
        b, g = P(b), P(g if g is not None else 0)
        _require(b is not None and b != 0, "b != 0")
        return (divide(-one, 2), b, divide(P(3), 4 * b), divide(one, 2), -one, P(0), g, one)
    if j == 3:
        c, f = P(c if c is not None else 0), P(f)
        _require(f is not None and f != 0, "f != 0")
        return (one, P(0), c, -one, divide(one, 2), f, divide(P(3), 4 * f), divide(-one, 2))
    if j == 4:
        return (one, P(0), P(0), -one, -one, P(0), P(0), one)
    raise ValueError(f"family must be 1..4, got {j}")


def two_local_blocks(values, kind=PresentationKind.TRIPLET, n=3, name="two_local", params=None):
    """Representation of L_3 with l_1 -> [[a, b], [c, d]] at position 1 and
    l_2 -> [[e, f], [g, h]] at position 2."""
    a, b, c, d, e, f, g, h = values
    pres = presentation_of(kind, n)
    images = {"l1": block_embed(n, 1, Matrix([[a, b], [c, d]])),
              "l2": block_embed(n, 2, Matrix([[e, f], [g, h]]))}
    return RepCandidate(pres, images, name, params or {})


def l3_family(j, b=None, c=None, e=None, f=None, g=None, p=None) -> RepCandidate:
    """Member of family ``j`` (1..4) of 2-local representations of L_3."""
    values = l3_tuple(j, b=b, c=c, e=e, f=f, g=g, p=p)
    given = {k: str(v) for k, v in dict(b=b, c=c, e=e, f=f, g=g).items() if v is not None}
    return two_local_blocks(values, name=f"l3_family{j}", params=dict(given, family=j))


# ---------------------------------------------------------------------------
# extensions to the virtual and welded groups


def _block_of(m, i):
    """The 2x2 block at position ``i`` if ``m`` is identity elsewhere."""
    n = m.rows
    r = i - 1
    block = Matrix([[m[r, r], m[r, r + 1]], [m[r + 1, r], m[r + 1, r + 1]]])
    return block if block_embed(n, i, block) == m else None


def extend_standard(lam: RepCandidate, sign=1) -> RepCandidate:
    """r_i -> sign * lambda(l_i), l_i unchanged."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = lam.n
    for i in range(1, n):
        m = lam.image(f"l{i}")
        if m.rows != n or _block_of(m, i) is None:
            raise NotTwoLocal(f"image of l{i} is not a 2x2 block at position {i}")
    pres = presentation_of(PresentationKind.VIRTUAL_TRIPLET, n)
    images = dict(lam.images)
    for i in range(1, n):
        m = lam.image(f"l{i}")
        images[f"r{i}"] = m if sign == 1 else -m
    return RepCandidate(pres, images, f"{lam.name}_ext{'+' if sign == 1 else '-'}",
                        dict(lam.params, sign=sign))


def omega(n, variant, b=None, x="x", p=None) -> RepCandidate:
    """Homogeneous 2-local representations of VL_n.

    Variant 1: l_i -> [[0, b], [1/b, 0]], r_i -> [[0, x], [1/x, 0]].
    Variant 2: l_i -> I, r_i -> [[0, x], [1/x, 0]].
    """
    _check_n(n)
    x = _nonzero("x", param(x, p))
    pres = presentation_of(PresentationKind.VIRTUAL_TRIPLET, n)
    rho = Matrix.antidiag(x, invert(x))
    images = {f"r{i}": block_embed(n, i, rho) for i in range(1, n)}
    if variant == 1:
        b = _nonzero("b", param("b" if b is None else b, p))
        ell = Matrix.antidiag(b, invert(b))
        images.update({f"l{i}": block_embed(n, i, ell) for i in range(1, n)})
        params = {"n": n, "b": str(b), "x": str(x)}
    elif variant == 2:
        images.update({f"l{i}": Matrix.identity(n) for i in range(1, n)})
        params = {"n": n, "x": str(x)}
    else:
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    return RepCandidate(pres, {g: images[g] for g in pres.generators}, f"omega{variant}", params)


def omega_conjugator(n, b="b", p=None) -> Matrix:
    """diag(b^(n-1), ..., b, 1)."""
    b = param(b, p)
    return Matrix.diag(*[b ** (n - 1 - j) for j in range(n)])

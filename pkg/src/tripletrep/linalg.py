"""Dense exact matrices over the scalar tower.

Entries are any objects from :mod:`tripletrep.scalar` (plus plain ints).
Matrices are immutable; every operation returns a new one.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from operator import mul

from .errors import (CapExceeded, DimensionMismatch, NotInvertible, NotSquare,
                     NotInvertibleImage, PositionOutOfRange)
from .scalar import LaurentPoly, RationalFunction, invert, render, to_field

__all__ = [
    "Matrix",
    "block_embed",
    "det",
    "det_cofactor",
    "conjugate",
    "diagonal_inverse",
    "nullspace",
    "rank",
    "algebra_span_dimension",
    "common_fixed_vector",
]


class Matrix:
    """Row-major rectangular matrix.

    >>> Matrix([[-1, 1], [0, 1]]) @ Matrix([[-1, 1], [0, 1]]) == Matrix.identity(2)
    True
    """

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, data, cols=None, entries=None):
        if entries is not None:
            rows = data
            if len(entries) != rows * cols:
                raise DimensionMismatch("entry count does not match shape")
            self.rows, self.cols, self.entries = rows, cols, tuple(entries)
        else:
            data = [list(r) for r in data]
            if not data or not data[0]:
                raise DimensionMismatch("matrix must have positive dimensions")
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionMismatch("ragged rows")
            self.rows, self.cols = len(data), width
            self.entries = tuple(x for r in data for x in r)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, *values):
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def antidiag(cls, upper, lower):
        """The 2x2 matrix [[0, upper], [lower, 0]]."""
        return cls([[0, upper], [lower, 0]])

    @classmethod
    def permutation(cls, perm):
        """Permutation matrix sending e_j to e_perm[j] (0-based)."""
        n = len(perm)
        e = [0] * (n * n)
        for j, i in enumerate(perm):
            e[i * n + j] = 1
        return cls(n, n, e)

    # -- access -----------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    # -- arithmetic -------------------------------------------------------
    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(p):
                acc = 0
                for k in range(m):
                    x = arow[k]
                    if x == 0:
                        continue
                    y = b[k * p + j]
                    if y == 0:
                        continue
                    acc = acc + x * y
                out.append(acc)
        return Matrix(n, p, out)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [x - y for x, y in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-x for x in self.entries])

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            return NotImplemented
        return Matrix(self.rows, self.cols, [x * scalar for x in self.entries])

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** -e
        result = Matrix.identity(self.rows)
        for _ in range(e):
            result = result @ self
        return result

    def apply(self, vector):
        if len(vector) != self.cols:
            raise DimensionMismatch("vector length")
        return [sum((self[i, k] * vector[k] for k in range(self.cols)), 0)
                for i in range(self.rows)]

    def map(self, f):
        return Matrix(self.rows, self.cols, [f(x) for x in self.entries])

    def evaluate(self, assignment):
        """Substitute parameter values into every symbolic entry."""
        def sub(x):
            return x.evaluate(assignment) if hasattr(x, "evaluate") else x
        return self.map(sub)

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self):
        return self.transpose()

    # -- predicates -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(x == y for x, y in zip(self.entries, other.entries))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def is_identity(self):
        return self == Matrix.identity(self.rows) if self.is_square() else False

    def is_diagonal(self):
        return self.is_square() and all(
            self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def is_monomial(self):
        """Exactly one nonzero entry in every row and column."""
        if not self.is_square():
            return False
        rows = [sum(1 for j in range(self.cols) if self[i, j] != 0) for i in range(self.rows)]
        cols = [sum(1 for i in range(self.rows) if self[i, j] != 0) for j in range(self.cols)]
        return all(r == 1 for r in rows) and all(c == 1 for c in cols)

    def one_like(self):
        return Matrix.identity(self.rows)

    def inverse(self):
        """Inverse of an involution or of a monomial matrix with unit entries."""
        if not self.is_square():
            raise NotSquare(f"{self.shape}")
        if self @ self == Matrix.identity(self.rows):
            return self
        if self.is_monomial():
            n = self.rows
            out = [0] * (n * n)
            for i in range(n):
                for j in range(n):
                    x = self[i, j]
                    if x != 0:
                        try:
                            out[j * n + i] = invert(x)
                        except ZeroDivisionError as exc:
                            raise NotInvertibleImage(str(exc)) from None
            return Matrix(n, n, out)
        raise NotInvertibleImage("only involutions and monomial matrices are inverted")

    # -- display ----------------------------------------------------------
    def render(self):
        cells = [[render(x) for x in self.row(i)] for i in range(self.rows)]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def to_strings(self):
        return [[render(x) for x in self.row(i)] for i in range(self.rows)]

    def __repr__(self):
        return f"Matrix({self.to_strings()})"

    def __str__(self):
        return self.render()


def block_embed(n, i, block):
    """I_{i-1} (+) block (+) I_{n-i-1}, with ``i`` 1-based."""
    if block.shape != (2, 2):
        raise DimensionMismatch("block must be 2x2")
    if not 1 <= i <= n - 1:
        raise PositionOutOfRange(f"position {i} outside 1..{n - 1}")
    e = list(Matrix.identity(n).entries)
    r = i - 1
    for a in range(2):
        for b in range(2):
            e[(r + a) * n + (r + b)] = block[a, b]
    return Matrix(n, n, e)


# ---------------------------------------------------------------------------
# determinants


def _require_square(a):
    if not a.is_square():
        raise NotSquare(f"determinant of a {a.rows}x{a.cols} matrix")


def _bareiss(rows, exact_div):
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _laurent_exact(a, b):
    if isinstance(b, int) and b == 1:
        return a
    q = LaurentPoly._coerce(a).exact_div(b)
    if q is None:
        raise ArithmeticError("Bareiss division was not exact")
    return q


def _gauss_det(rows):
    n = len(rows)
    m = [[to_field(x) for x in r] for r in rows]
    result = to_field(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0 * result
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            result = -result
        pk = m[k][k]
        result = result * pk
        inv = invert(pk)
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return result


def det(a, method=None):
    """Determinant.

    Integer and Laurent-polynomial matrices use fraction-free Bareiss
    elimination; matrices over fields use Gaussian elimination.  ``method``
    forces ``"bareiss"`` or ``"gauss"``.
    """
    _require_square(a)
    rows = a.tolist()
    kinds = {type(x) for x in a.entries}
    if method is None:
        if kinds <= {int}:
            method = "bareiss-int"
        elif LaurentPoly in kinds and kinds <= {int, Fraction, LaurentPoly}:
            method = "bareiss"
        else:
            method = "gauss"
    if method == "bareiss-int":
        return _bareiss(rows, lambda x, y: x // y)
    if method == "bareiss":
        rows = [[LaurentPoly._coerce(x) for x in r] for r in rows]
        return _bareiss(rows, _laurent_exact)
    if method == "gauss":
        return _gauss_det(rows)
    raise ValueError(f"unknown method {method!r}")


def det_cofactor(a):
    """Determinant by Laplace expansion along the first row (slow, independent)."""
    _require_square(a)
    rows = a.tolist()

    def rec(m):
        if len(m) == 1:
            return m[0][0]
        total = 0
        for j, x in enumerate(m[0]):
            if x == 0:
                continue
            minor = [r[:j] + r[j + 1:] for r in m[1:]]
            term = x * rec(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return rec(rows)


# ---------------------------------------------------------------------------
# conjugation


def diagonal_inverse(p):
    if not p.is_diagonal():
        raise NotInvertible("only diagonal conjugators are supported")
    vals = []
    for i in range(p.rows):
        x = p[i, i]
        if x == 0:
            raise NotInvertible(f"zero diagonal entry at {i}")
        vals.append(invert(x))
    return Matrix.diag(*vals)


def conjugate(p, m):
    """p^-1 m p for a diagonal p with invertible diagonal."""
    if p.shape != m.shape or not m.is_square():
        raise DimensionMismatch(f"{p.shape} vs {m.shape}")
    return diagonal_inverse(p) @ m @ p


# ---------------------------------------------------------------------------
# row reduction


class _FieldEchelon:
    """Incremental echelon basis over a field, pivots normalised to 1."""

    def __init__(self):
        self.rows = {}

    def reduce(self, v):
        v = list(v)
        for col in sorted(self.rows):
            c = v[col]
            if c != 0:
                r = self.rows[col]
                v = [x - c * y for x, y in zip(v, r)]
        return v

    def add(self, v):
        v = self.reduce([to_field(x) for x in v])
        lead = next((i for i, x in enumerate(v) if x != 0), None)
        if lead is None:
            return False
        inv = invert(v[lead])
        v = [x * inv for x in v]
        for col, r in self.rows.items():
            c = r[lead]
            if c != 0:
                self.rows[col] = [x - c * y for x, y in zip(r, v)]
        self.rows[lead] = v
        return True

    def __len__(self):
        return len(self.rows)


def _primitive(v):
    """Divide a Laurent vector by its monomial content and leading coefficient."""
    nz = [x for x in v if x != 0]
    if not nz:
        return v
    variables = sorted({name for x in nz for name in x.variables})
    mins = {}
    for x in nz:
        for mono in x.terms:
            d = dict(mono)
            for name in variables:
                e = d.get(name, 0)
                mins[name] = min(mins.get(name, e), e)
    scale = LaurentPoly.monomial({k: -e for k, e in mins.items() if e})
    lead_coeff = nz[0].sorted_terms()[0][1]
    scale = scale * (1 / lead_coeff)
    if scale == 1:
        return v
    return [x * scale for x in v]


class _DomainEchelon:
    """Fraction-free echelon basis over the Laurent ring.

    Ranks agree with ranks over the fraction field.
    """

    def __init__(self):
        self.rows = {}

    def add(self, v):
        v = [LaurentPoly._coerce(x) for x in v]
        while True:
            lead = next((i for i, x in enumerate(v) if x != 0), None)
            if lead is None:
                return False
            r = self.rows.get(lead)
            if r is None:
                self.rows[lead] = _primitive(v)
                return True
            a, b = r[lead], v[lead]
            v = _primitive([a * x - b * y for x, y in zip(v, r)])

    def __len__(self):
        return len(self.rows)


def _is_symbolic(entries):
    return any(isinstance(x, (LaurentPoly, RationalFunction)) for x in entries)


def rank(vectors):
    vectors = [list(v) for v in vectors]
    ech = _DomainEchelon() if _is_symbolic(x for v in vectors for x in v) else _FieldEchelon()
    return sum(1 for v in vectors if ech.add(v))


def nullspace(m):
    """Basis of {v : m v = 0} over the fraction field of the entries."""
    rows = [[to_field(x) for x in m.row(i)] for i in range(m.rows)]
    ech = _FieldEchelon()
    for r in rows:
        ech.add(r)
    pivots = sorted(ech.rows)
    free = [j for j in range(m.cols) if j not in ech.rows]
    basis = []
    for f in free:
        v = [to_field(0)] * m.cols
        v[f] = to_field(1)
        for p in pivots:
            v[p] = -ech.rows[p][f]
        basis.append([_simplify(x) for x in v])
    return basis


def _simplify(x):
    if isinstance(x, RationalFunction) and x.den == 1:
        x = x.num
    if isinstance(x, LaurentPoly) and x.is_constant():
        x = x.constant_value()
    return x


def _clear_denominators(m):
    dens = []
    for x in m.entries:
        if isinstance(x, RationalFunction) and x.den != 1 and all(x.den != d for d in dens):
            dens.append(x.den)
    if not dens:
        return m.map(lambda x: x.num if isinstance(x, RationalFunction) else x)
    scale = reduce(mul, dens)

    def fix(x):
        y = RationalFunction(x) * scale if not isinstance(x, RationalFunction) else x * scale
        if y.den != 1:
            raise ArithmeticError("denominator clearing failed")
        return y.num
    return m.map(fix)


def algebra_span_dimension(generators, cap=200):
    """Dimension of the unital algebra spanned by all words in ``generators``.

    Seeds the span with the identity and the generators, then keeps
    multiplying every newly independent element by each generator on the
    left and on the right until nothing new appears.  ``cap`` bounds the
    number of rounds.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].rows
    for g in generators:
        if g.shape != (n, n):
            raise DimensionMismatch("generators must share one square shape")
    symbolic = any(_is_symbolic(g.entries) for g in generators)
    if symbolic:
        generators = [_clear_denominators(g) for g in generators]
        ech = _DomainEchelon()
    else:
        ech = _FieldEchelon()
    level = [Matrix.identity(n)] + generators
    seen = set()
    rounds = 0
    while level:
        if len(ech) == n * n:
            break
        rounds += 1
        if rounds > cap:
            raise CapExceeded(f"span still growing after {cap} rounds")
        nxt = []
        for mat in level:
            if mat in seen:
                continue
            seen.add(mat)
            if ech.add(mat.entries):
                for g in generators:
                    nxt.append(mat @ g)
                    nxt.append(g @ mat)
        level = nxt
    return len(ech)


def common_fixed_vector(generators):
    """A nonzero v with g v = v for every generator, or None."""
    generators = list(generators)
    n = generators[0].rows
    eye = Matrix.identity(n)
    stacked = []
    for g in generators:
        stacked.extend((g - eye).tolist())
    basis = nullspace(Matrix(stacked))
    return basis[0] if basis else None

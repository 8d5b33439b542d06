"""Free groups, unit-scaled monomial automorphisms and Fox calculus.

Generators of the free group are numbered ``1..n``.  Coefficients live in
the Laurent ring, where the variable ``t`` (or ``s`` standing for ``t^k``)
is fixed by every automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonMonomialImage
from .linalg import Matrix
from .scalar import LaurentPoly

__all__ = [
    "FreeWord",
    "ScaledWord",
    "GroupRingElement",
    "MonomialAutomorphism",
    "aut_apply",
    "aut_compose",
    "fox_derivative",
    "magnus_jacobian",
]


def _reduce(letters):
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class FreeWord:
    """Freely reduced word, stored as a tuple of ``(generator, ±1)``."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple((int(g), int(e)) for g, e in letters)
        for g, e in letters:
            if g < 1 or e not in (1, -1):
                raise ValueError(f"bad letter {(g, e)}")
        self.letters = _reduce(letters)

    @classmethod
    def gen(cls, i, e=1):
        return cls(((i, e),))

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self.letters + other.letters)

    def inverse(self):
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other):
        return (len(self), self.letters) < (len(other), other.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in self.letters)

    def __repr__(self):
        return f"FreeWord({str(self)!r})"


def _unit(u):
    u = LaurentPoly._coerce(u)
    if u is None or not u.is_monomial():
        raise ValueError(f"{u} is not a Laurent unit")
    return u


@dataclass(frozen=True)
class ScaledWord:
    """``unit * word`` with ``unit`` a Laurent monomial."""

    unit: LaurentPoly
    word: FreeWord

    def __post_init__(self):
        object.__setattr__(self, "unit", _unit(self.unit))

    @classmethod
    def gen(cls, i, unit=1):
        return cls(LaurentPoly._coerce(unit), FreeWord.gen(i))

    def __mul__(self, other):
        if isinstance(other, FreeWord):
            other = ScaledWord(LaurentPoly.const(1), other)
        if not isinstance(other, ScaledWord):
            return NotImplemented
        return ScaledWord(self.unit * other.unit, self.word * other.word)

    def inverse(self):
        return ScaledWord(self.unit.inverse(), self.word.inverse())

    def __str__(self):
        if self.unit == 1:
            return str(self.word)
        return f"{self.unit} {self.word}" if self.word.letters else str(self.unit)


class GroupRingElement:
    """Finite Laurent-linear combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            c = LaurentPoly._coerce(c)
            s = clean.get(w, LaurentPoly.const(0)) + c
            if s.is_zero():
                clean.pop(w, None)
            else:
                clean[w] = s
        self.terms = clean

    @classmethod
    def of(cls, word, coeff=1):
        return cls({word: coeff})

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, LaurentPoly.const(0)) + c
        return GroupRingElement(t)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GroupRingElement({w: c * x for w, x in self.terms.items()})

    def left_mul(self, u):
        """``u * self`` for a FreeWord or ScaledWord ``u``."""
        if isinstance(u, ScaledWord):
            return GroupRingElement({u.word * w: u.unit * c for w, c in self.terms.items()})
        return GroupRingElement({u * w: c for w, c in self.terms.items()})

    def augmentation(self):
        """Send every group element to 1; what is left is a Laurent polynomial."""
        total = LaurentPoly.const(0)
        for c in self.terms.values():
            total = total + c
        return total

    def __eq__(self, other):
        if isinstance(other, GroupRingElement):
            return self.terms == other.terms
        if isinstance(other, (int, LaurentPoly)):
            return self == GroupRingElement.of(FreeWord(), other) if other != 0 else not self.terms
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            if not w.letters:
                parts.append(str(c))
            elif c == 1:
                parts.append(str(w))
            elif c == -1:
                parts.append(f"-{w}")
            else:
                parts.append(f"({c})*{w}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    __repr__ = __str__


class MonomialAutomorphism:
    """Automorphism sending each ``x_i`` to ``unit_i * x_{perm(i)}``.

    ``a @ b`` is the composite "first b, then a".
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        targets = []
        for img in images:
            if not isinstance(img, ScaledWord):
                raise TypeError("images must be ScaledWord")
            if len(img.word.letters) != 1 or img.word.letters[0][1] != 1:
                raise NonMonomialImage(f"image {img} is not unit times a generator")
            targets.append(img.word.letters[0][0])
        if sorted(targets) != list(range(1, len(images) + 1)):
            raise ValueError("generator images must permute x_1..x_n")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(ScaledWord.gen(i) for i in range(1, n + 1))

    @property
    def rank(self):
        return len(self.images)

    def one_like(self):
        return MonomialAutomorphism.identity(self.rank)

    def __call__(self, w):
        return aut_apply(self, w)

    def __matmul__(self, other):
        if not isinstance(other, MonomialAutomorphism):
            return NotImplemented
        return aut_compose(self, other)

    def inverse(self):
        n = self.rank
        imgs = [None] * n
        for i, img in enumerate(self.images, start=1):
            j = img.word.letters[0][0]
            imgs[j - 1] = ScaledWord(img.unit.inverse(), FreeWord.gen(i))
        return MonomialAutomorphism(imgs)

    def __eq__(self, other):
        if not isinstance(other, MonomialAutomorphism):
            return NotImplemented
        return all(a.unit == b.unit and a.word == b.word for a, b in zip(self.images, other.images)) \
            and self.rank == other.rank

    def __hash__(self):
        return hash(tuple((a.unit, a.word) for a in self.images))

    def __str__(self):
        return ", ".join(f"x{i} -> {img}" for i, img in enumerate(self.images, start=1))

    __repr__ = __str__


def aut_apply(a, w):
    """Apply ``a`` letter by letter, collecting units in front."""
    if isinstance(w, FreeWord):
        w = ScaledWord(LaurentPoly.const(1), w)
    unit = w.unit
    letters = []
    for g, e in w.word.letters:
        img = a.images[g - 1]
        if e == 1:
            unit = unit * img.unit
            letters.extend(img.word.letters)
        else:
            unit = unit * img.unit.inverse()
            letters.extend(img.word.inverse().letters)
    return ScaledWord(unit, FreeWord(letters))


def aut_compose(a, b):
    """``(a ∘ b)(x) = a(b(x))``."""
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    return MonomialAutomorphism(aut_apply(a, img) for img in b.images)


def fox_derivative(w, j):
    """Fox derivative D_j of a (scaled) word, as a group-ring element.

    Uses D(x_j) = 1, D(x_j^-1) = -x_j^-1 and D(uv) = D(u) + u D(v); the unit
    of a scaled word is a constant and factors out.
    """
    if isinstance(w, FreeWord):
        w = ScaledWord(LaurentPoly.const(1), w)
    terms = {}
    prefix = FreeWord()
    for g, e in w.word.letters:
        if g == j:
            if e == 1:
                key, c = prefix, w.unit
            else:
                key, c = prefix * FreeWord.gen(g, -1), -w.unit
            terms[key] = terms.get(key, LaurentPoly.const(0)) + c
        prefix = prefix * FreeWord.gen(g, e)
    return GroupRingElement(terms)


def magnus_jacobian(a):
    """n x n matrix whose (r, c) entry is D_c(a(x_r)) with the free
    generators sent to 1.

    ``a`` is a MonomialAutomorphism or any sequence of ScaledWord images.
    """
    images = a.images if isinstance(a, MonomialAutomorphism) else tuple(a)
    n = len(images)
    rows = []
    for img in images:
        if len(img.word.letters) != 1:
            raise NonMonomialImage(f"image {img} has {len(img.word.letters)} letters")
        row = []
        for c in range(1, n + 1):
            d = fox_derivative(img, c).augmentation()
            row.append(d.constant_value() if d.is_constant() and d == 0 else d)
        rows.append(row)
    return Matrix([[0 if x == 0 else x for x in r] for r in rows])

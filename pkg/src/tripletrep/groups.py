"""Group presentations, words, relation checking and kernel searches.

Generator labels are ASCII: ``l<i>`` (triplet involutions), ``r<i>``
(virtual generators), ``s<i>`` (braid generators), ``a<i>`` (Coxeter
generators of S_n) and ``A<i>_<j>`` (pure braid generators).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from .errors import (
    CapExceeded,
    IndexOrder,
    NotInvertibleImage,
    UnassignedGenerator,
    UnsupportedN,
    UnsupportedPresentation,
    WordParseError,
)
from .linalg import Matrix

__all__ = [
    "PresentationKind",
    "GroupWord",
    "Relation",
    "Presentation",
    "RepCandidate",
    "ImageClosure",
    "presentation_of",
    "pure_braid_generator",
    "word_eval",
    "check_relations",
    "failed_relations",
    "image_closure",
    "kernel_witness_search",
    "sn_projection",
    "pair_reflection_rep",
]


class PresentationKind(str, Enum):
    BRAID = "Braid"
    PURE_BRAID_GENS = "PureBraidGens"
    VIRTUAL_BRAID = "VirtualBraid"
    WELDED_BRAID = "WeldedBraid"
    TRIPLET = "Triplet"
    VIRTUAL_TRIPLET = "VirtualTriplet"
    WELDED_TRIPLET = "WeldedTriplet"
    SYMMETRIC_COXETER = "SymmetricCoxeter"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).replace("-", "").replace("_", "").lower()
        for member in cls:
            if member.value.lower() == key or member.name.replace("_", "").lower() == key:
                return member
        raise UnsupportedPresentation(f"unknown presentation kind {value!r}")


# ---------------------------------------------------------------------------
# words

_TOKEN = re.compile(r"(?:(?P<gen>[lrsa]\d+|A\d+_\d+)|(?P<open>\()|(?P<close>\))"
                    r"|(?P<pow>\^\s*(?P<exp>-?\d+))|(?P<one>1(?![\d_])))")


@dataclass(frozen=True)
class GroupWord:
    """A literal word: tuple of ``(label, ±1)``, not reduced."""

    letters: tuple = ()

    def __post_init__(self):
        letters = tuple((str(g), int(e)) for g, e in self.letters)
        for _, e in letters:
            if e not in (1, -1):
                raise ValueError("exponents must be +1 or -1")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *labels):
        return cls(tuple((g, 1) for g in labels))

    @classmethod
    def parse(cls, text):
        """Parse e.g. ``"l1 r2 l1^-1"`` or ``"(l1 r2)^3"``."""
        pos = 0
        stack = [[]]
        last = None  # letters of the most recent item in the current group
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m:
                raise WordParseError(f"unexpected character {text[pos]!r}", pos)
            start = pos
            if m.group("gen"):
                last = [(m.group("gen"), 1)]
                stack[-1].extend(last)
            elif m.group("one"):
                last = []
            elif m.group("open"):
                stack.append([])
                last = None
            elif m.group("close"):
                if len(stack) == 1:
                    raise WordParseError("unbalanced ')'", start)
                last = stack.pop()
                stack[-1].extend(last)
            else:
                if last is None:
                    raise WordParseError("exponent without a base", start)
                k = int(m.group("exp"))
                base = last if k >= 0 else [(g, -e) for g, e in reversed(last)]
                del stack[-1][len(stack[-1]) - len(last):]
                repeated = base * abs(k)
                stack[-1].extend(repeated)
                last = repeated
            pos = m.end()
        if len(stack) != 1:
            raise WordParseError("unbalanced '('", len(text))
        return cls(tuple(stack[0]))

    def __mul__(self, other):
        return GroupWord(self.letters + other.letters)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return GroupWord(self.letters * k)

    def inverse(self):
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def labels(self):
        return {g for g, _ in self.letters}

    def __str__(self):
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


def _w(*items):
    """Build a word from labels; a leading '-' marks an inverse letter."""
    return GroupWord(tuple((x[1:], -1) if x.startswith("-") else (x, 1) for x in items))


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Relation:
    lhs: GroupWord
    rhs: GroupWord
    tag: str


@dataclass(frozen=True)
class Presentation:
    kind: PresentationKind
    n: int
    generators: tuple
    relations: tuple
    involutions: frozenset = frozenset()

    @property
    def name(self):
        return self.kind.value

    def tags(self):
        return [r.tag for r in self.relations]

    def relation_families(self):
        return sorted({r.tag.split("[")[0] for r in self.relations})

    def __str__(self):
        return f"{self.name}({self.n})"


def _involution(g, family):
    return Relation(_w(g, g), GroupWord(), f"{family}[{g[1:]}]")


def _braid(x, i, family):
    a, b = f"{x}{i}", f"{x}{i + 1}"
    return Relation(_w(a, b, a), _w(b, a, b), f"{family}[{i}]")


def _far_pairs(n):
    return [(i, j) for i in range(1, n) for j in range(i + 2, n)]


def _commute(a, b, family, idx):
    return Relation(_w(a, b), _w(b, a), f"{family}[{idx}]")


def _coxeter_like(x, n, *, involutive, far_commute):
    rels = []
    if involutive:
        rels += [_involution(f"{x}{i}", f"involution_{x}") for i in range(1, n)]
    if far_commute:
        rels += [_commute(f"{x}{i}", f"{x}{j}", f"far_commute_{x}", f"{i},{j}")
                 for i, j in _far_pairs(n)]
    rels += [_braid(x, i, f"braid_{x}") for i in range(1, n - 1)]
    return rels


def _virtual_part(x, n):
    """Relations tying the virtual generators r_i to the x_i family."""
    rels = _coxeter_like("r", n, involutive=True, far_commute=True)
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                rels.append(_commute(f"{x}{i}", f"r{j}", f"far_commute_{x}r", f"{i},{j}"))
    for i in range(1, n - 1):
        rels.append(Relation(_w(f"r{i}", f"r{i + 1}", f"{x}{i}"),
                             _w(f"{x}{i + 1}", f"r{i}", f"r{i + 1}"), f"mixed_rr{x}[{i}]"))
    return rels


def _welded_part(x, n):
    return [Relation(_w(f"r{i}", f"{x}{i + 1}", f"{x}{i}"),
                     _w(f"{x}{i + 1}", f"{x}{i}", f"r{i + 1}"), f"welded_r{x}{x}[{i}]")
            for i in range(1, n - 1)]


def presentation_of(kind, n) -> Presentation:
    """Generators and defining relations of the named family on ``n`` strands."""
    kind = PresentationKind.parse(kind)
    if n < 2:
        raise UnsupportedN(f"n must be at least 2, got {n}")
    gens_x = lambda x: tuple(f"{x}{i}" for i in range(1, n))  # noqa: E731
    K = PresentationKind
    if kind is K.TRIPLET:
        rels = _coxeter_like("l", n, involutive=True, far_commute=False)
        return Presentation(kind, n, gens_x("l"), tuple(rels), frozenset(gens_x("l")))
    if kind in (K.VIRTUAL_TRIPLET, K.WELDED_TRIPLET):
        rels = _coxeter_like("l", n, involutive=True, far_commute=False) + _virtual_part("l", n)
        if kind is K.WELDED_TRIPLET:
            rels += _welded_part("l", n)
        gens = gens_x("l") + gens_x("r")
        return Presentation(kind, n, gens, tuple(rels), frozenset(gens))
    if kind is K.BRAID:
        rels = _coxeter_like("s", n, involutive=False, far_commute=True)
        return Presentation(kind, n, gens_x("s"), tuple(rels))
    if kind in (K.VIRTUAL_BRAID, K.WELDED_BRAID):
        rels = _coxeter_like("s", n, involutive=False, far_commute=True) + _virtual_part("s", n)
        if kind is K.WELDED_BRAID:
            rels += _welded_part("s", n)
        return Presentation(kind, n, gens_x("s") + gens_x("r"), tuple(rels), frozenset(gens_x("r")))
    if kind is K.SYMMETRIC_COXETER:
        rels = _coxeter_like("a", n, involutive=True, far_commute=True)
        return Presentation(kind, n, gens_x("a"), tuple(rels), frozenset(gens_x("a")))
    gens = tuple(f"A{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return Presentation(kind, n, gens, ())


def pure_braid_generator(i, j, n) -> GroupWord:
    """A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1."""
    if not i < j:
        raise IndexOrder(f"need i < j, got i={i}, j={j}")
    if i < 1 or j > n:
        raise UnsupportedN(f"indices {i}, {j} outside 1..{n}")
    prefix = [f"s{k}" for k in range(j - 1, i, -1)]
    return _w(*prefix, f"s{i}", f"s{i}", *[f"-{g}" for g in reversed(prefix)])


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class RepCandidate:
    """Assignment of an image (matrix or automorphism) to every generator."""

    presentation: Presentation
    images: dict
    name: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        missing = [g for g in self.presentation.generators if g not in self.images]
        if missing:
            raise UnassignedGenerator(f"no image for {', '.join(missing)}")
        imgs = list(self.images.values())
        if imgs and isinstance(imgs[0], Matrix):
            shapes = {m.shape for m in imgs}
            if len(shapes) != 1 or not imgs[0].is_square():
                raise ValueError(f"images must be square of one size, got {sorted(shapes)}")

    def __hash__(self):
        return id(self)

    @property
    def n(self):
        return self.presentation.n

    def identity(self):
        return next(iter(self.images.values())).one_like()

    @property
    def dim(self):
        img = next(iter(self.images.values()))
        return img.rows if isinstance(img, Matrix) else img.rank

    def image(self, label):
        try:
            return self.images[label]
        except KeyError:
            raise UnassignedGenerator(f"generator {label!r} has no image in {self.name}") from None

    def gens(self):
        return [self.images[g] for g in self.presentation.generators]

    def map_images(self, f, name=None, **extra):
        params = dict(self.params, **extra)
        return RepCandidate(self.presentation, {g: f(m) for g, m in self.images.items()},
                            name or self.name, params)

    def evaluate(self, assignment, name=None):
        """Specialise symbolic parameters."""
        return self.map_images(lambda m: m.evaluate(assignment), name,
                               **{k: str(v) for k, v in assignment.items()})

    def with_presentation(self, presentation):
        return RepCandidate(presentation, self.images, self.name, self.params)


def _inverse_image(rep, label):
    img = rep.image(label)
    if label in rep.presentation.involutions:
        return img
    try:
        return img.inverse()
    except NotInvertibleImage:
        raise
    except ZeroDivisionError as exc:
        raise NotInvertibleImage(str(exc)) from None


def word_eval(rep: RepCandidate, w) -> Any:
    """Ordered product of the images of the letters of ``w``."""
    if isinstance(w, str):
        w = GroupWord.parse(w)
    acc = None
    for g, e in w.letters:
        m = rep.image(g) if e == 1 else _inverse_image(rep, g)
        acc = m if acc is None else acc @ m
    return rep.identity() if acc is None else acc


def check_relations(rep: RepCandidate, presentation=None):
    """List of ``(tag, passed)`` for every defining relation."""
    pres = presentation or rep.presentation
    out = []
    for rel in pres.relations:
        out.append((rel.tag, word_eval(rep, rel.lhs) == word_eval(rep, rel.rhs)))
    return out


def failed_relations(rep, presentation=None):
    return [tag for tag, ok in check_relations(rep, presentation) if not ok]


@dataclass(frozen=True)
class ImageClosure:
    elements: tuple
    order: int


def image_closure(rep: RepCandidate, cap=10000) -> ImageClosure:
    """All distinct products of generator images (finite image groups only)."""
    gens = []
    for g in rep.presentation.generators:
        gens.append(rep.image(g))
        if g not in rep.presentation.involutions:
            gens.append(_inverse_image(rep, g))
    ident = rep.identity()
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            p = m @ g
            if p not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"image group has more than {cap} elements")
                seen.add(p)
                order.append(p)
                queue.append(p)
    return ImageClosure(tuple(order), len(order))


def _alphabet(pres):
    out = []
    for g in pres.generators:
        out.append((g, 1))
        if g not in pres.involutions:
            out.append((g, -1))
    return out


def kernel_witness_search(rep: RepCandidate, oracle: RepCandidate, max_len=8):
    """Shortest word (label order, then lexicographic) that ``rep`` sends to
    the identity while ``oracle`` does not; ``None`` if there is none up to
    ``max_len`` letters.
    """
    pres = rep.presentation
    alphabet = _alphabet(pres)
    rep_gen = {a: (rep.image(a[0]) if a[1] == 1 else _inverse_image(rep, a[0])) for a in alphabet}
    ora_gen = {a: (oracle.image(a[0]) if a[1] == 1 else _inverse_image(oracle, a[0]))
               for a in alphabet}
    invol = pres.involutions
    frontier = [((), rep.identity(), oracle.identity())]
    for _ in range(max_len):
        nxt = []
        for letters, rm, om in frontier:
            for a in alphabet:
                if letters:
                    g, e = letters[-1]
                    if g == a[0] and (e == -a[1] or g in invol):
                        continue
                rm2 = rm @ rep_gen[a]
                om2 = om @ ora_gen[a]
                word = letters + (a,)
                if rm2.is_identity() and not om2.is_identity():
                    return GroupWord(word)
                nxt.append((word, rm2, om2))
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# permutation images and the pair-reflection oracle

_TRIPLET_KINDS = (PresentationKind.TRIPLET, PresentationKind.VIRTUAL_TRIPLET,
                  PresentationKind.WELDED_TRIPLET)


def _transposition(n, i):
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return Matrix.permutation(perm)


def sn_projection(kind, presentation: Presentation) -> RepCandidate:
    """Permutation images in S_n.

    ``standard`` sends every l_i and r_i to the transposition (i i+1);
    ``forget_ell`` sends l_i to the identity and r_i to (i i+1).
    """
    if presentation.kind not in _TRIPLET_KINDS:
        raise UnsupportedPresentation(f"no S_n projection for {presentation}")
    if kind not in ("standard", "forget_ell"):
        raise ValueError(f"unknown projection {kind!r}")
    if kind == "forget_ell" and presentation.kind is PresentationKind.WELDED_TRIPLET:
        # the welded relation would force r_i = r_{i+1}
        raise UnsupportedPresentation("forget_ell does not respect the welded relation")
    n = presentation.n
    images = {}
    for g in presentation.generators:
        i = int(g[1:])
        if g.startswith("l") and kind == "forget_ell":
            images[g] = Matrix.identity(n)
        else:
            images[g] = _transposition(n, i)
    return RepCandidate(presentation, images, f"sn_{kind}", {"n": n})


def pair_reflection_rep(presentation: Presentation) -> RepCandidate:
    """Oracle on the space spanned by unordered pairs {a, b} of strands.

    The form is 1 on a pair with itself, -1/2 on pairs sharing one strand
    and -1 on disjoint pairs.  l_i is the reflection in e_{i,i+1}; r_i
    permutes the pairs by the transposition (i i+1).  Two l's with disjoint
    supports do not commute here, so this separates far commutators.  The
    welded relation fails, so welded presentations are rejected.
    """
    if presentation.kind not in _TRIPLET_KINDS[:2]:
        raise UnsupportedPresentation(f"no pair-reflection oracle for {presentation}")
    n = presentation.n
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    index = {p: k for k, p in enumerate(pairs)}
    dim = len(pairs)

    def form(p, q):
        shared = len(set(p) & set(q))
        return Fraction(1) if shared == 2 else Fraction(-1, 2) if shared == 1 else Fraction(-1)

    images = {}
    for g in presentation.generators:
        i = int(g[1:])
        if g.startswith("l"):
            e = (i, i + 1)
            cols = []
            for q in pairs:
                col = [Fraction(0)] * dim
                col[index[q]] += 1
                col[index[e]] -= 2 * form(e, q)
                cols.append(col)
            images[g] = Matrix([[cols[c][r] for c in range(dim)] for r in range(dim)])
        else:
            swap = {i: i + 1, i + 1: i}
            perm = [index[tuple(sorted(swap.get(x, x) for x in q))] for q in pairs]
            images[g] = Matrix.permutation(perm)
    return RepCandidate(presentation, images, "pair_reflection", {"n": n})

"""Exact scalars: rationals, multivariate Laurent polynomials, rational
functions and prime-field elements.

Rationals are :class:`fractions.Fraction`.  Every other type here coerces
``int`` and ``Fraction`` operands, so plain ``0`` and ``1`` can sit in a
matrix next to any of them.

    >>> t = var("t")
    >>> (2*t + 1) * t**-1
    LaurentPoly('2 + t^-1')
    >>> PrimeFieldElement(3, 7) / 4
    PrimeFieldElement(6, 7)
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, ModulusMismatch, ZeroAtNegativeExponent

Rational = Fraction

__all__ = [
    "Rational",
    "LaurentPoly",
    "RationalFunction",
    "PrimeFieldElement",
    "var",
    "is_prime",
    "invert",
    "divide",
    "to_field",
    "is_unit",
    "render",
    "laurent_arith",
    "laurent_eval",
    "ratfun_eq",
    "prime_field_arith",
]


def _is_number(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# monomials: sorted tuples of (variable, nonzero exponent)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for k, v in m2:
        d[k] = d.get(k, 0) + v
    return tuple(sorted((k, v) for k, v in d.items() if v))


def _mono_inv(m):
    return tuple((k, -v) for k, v in m)


def _mono_pow(m, e):
    if e == 0:
        return ()
    return tuple((k, v * e) for k, v in m)


def _mono_str(m):
    parts = []
    for k, v in m:
        parts.append(k if v == 1 else f"{k}^{v}")
    return "*".join(parts)


def _coeff_str(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Polynomial in finitely many named variables with integer (possibly
    negative) exponents and rational coefficients.

    Terms are kept in a dict keyed by monomials; zero coefficients are never
    stored, so two polynomials are equal exactly when their dicts are.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    mono = tuple(sorted((k, int(v)) for k, v in mono if v))
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name):
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def monomial(cls, exponents, coeff=1):
        """``LaurentPoly.monomial({"t": -2}, 3)`` is ``3*t^-2``."""
        return cls({tuple(exponents.items()): coeff})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    @property
    def variables(self):
        return tuple(sorted({k for m in self._terms for k, _ in m}))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def exponent_vector(self, mono, variables):
        d = dict(mono)
        return tuple(d.get(v, 0) for v in variables)

    def sorted_terms(self, variables=None):
        """Terms in descending graded lexicographic order."""
        variables = variables or self.variables

        def key(item):
            ev = self.exponent_vector(item[0], variables)
            return (sum(ev), ev)

        return sorted(self._terms.items(), key=key, reverse=True)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if _is_number(other):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in o._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return LaurentPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return LaurentPoly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if not self.is_monomial():
                return RationalFunction(LaurentPoly.const(1), self ** (-e))
            (m, c), = self._terms.items()
            return LaurentPoly._raw({_mono_pow(m, e): Fraction(c) ** e})
        if self.is_monomial():
            (m, c), = self._terms.items()
            return LaurentPoly._raw({_mono_pow(m, e): c ** e})
        result = LaurentPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Inverse in the Laurent ring (monomials) or as a rational function."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero polynomial")
        return self ** -1

    def __truediv__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by zero polynomial")
        if o.is_monomial():
            return self * o.inverse()
        return RationalFunction(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if _is_number(other):
            return self._terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get((), Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- substitution -----------------------------------------------------
    def evaluate(self, assignment):
        """Substitute values for variables.

        Values may be any ring element (Fraction, PrimeFieldElement,
        LaurentPoly...).  Unassigned variables are kept, so a partial
        assignment returns a LaurentPoly.
        """
        total = 0
        for mono, c in self._terms.items():
            term = c
            rest = []
            for name, e in mono:
                if name in assignment:
                    v = assignment[name]
                    if e < 0 and v == 0:
                        raise ZeroAtNegativeExponent(
                            f"variable {name} assigned 0 but appears with exponent {e}")
                    term = term * _power(v, e)
                else:
                    rest.append((name, e))
            if rest:
                term = term * LaurentPoly._raw({tuple(rest): Fraction(1)})
            total = total + term
        if isinstance(total, LaurentPoly) and total.is_constant():
            return total.constant_value()
        return total

    # -- exact division ---------------------------------------------------
    def _shifted(self, variables):
        """Exponent-vector dict with every minimum exponent moved to zero."""
        vecs = {self.exponent_vector(m, variables): c for m, c in self._terms.items()}
        mins = tuple(min(v[i] for v in vecs) for i in range(len(variables)))
        shifted = {tuple(a - b for a, b in zip(v, mins)): c for v, c in vecs.items()}
        return shifted, mins

    def exact_div(self, other):
        """Quotient ``self / other`` if it exists in the Laurent ring, else None."""
        o = self._coerce(other)
        if o.is_zero():
            raise DivisionByZero("division by zero polynomial")
        if self.is_zero():
            return self
        if o.is_monomial():
            return self * o.inverse()
        variables = tuple(sorted(set(self.variables) | set(o.variables)))
        f, fmin = self._shifted(variables)
        g, gmin = o._shifted(variables)
        glead = max(g)
        gc = g[glead]
        quotient = {}
        r = dict(f)
        while r:
            rlead = max(r)
            shift = tuple(a - b for a, b in zip(rlead, glead))
            if any(s < 0 for s in shift):
                return None
            qc = r[rlead] / gc
            quotient[shift] = qc
            for gv, c in g.items():
                mv = tuple(a + b for a, b in zip(gv, shift))
                s = r.get(mv, 0) - qc * c
                if s:
                    r[mv] = s
                else:
                    r.pop(mv, None)
        offset = tuple(a - b for a, b in zip(fmin, gmin))
        terms = {}
        for v, c in quotient.items():
            mono = tuple((name, a + b) for name, a, b in zip(variables, v, offset) if a + b)
            terms[mono] = c
        return LaurentPoly._raw(terms)

    def monomial_content(self):
        """The monomial ``x^m`` with ``m`` the componentwise minimum exponent."""
        variables = self.variables
        if not self._terms:
            return LaurentPoly.const(1)
        _, mins = self._shifted(variables)
        return LaurentPoly._raw({tuple((v, e) for v, e in zip(variables, mins) if e): Fraction(1)})

    # -- display ----------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = _coeff_str(a)
            elif a == 1:
                body = _mono_str(mono)
            else:
                body = f"{_coeff_str(a)}*{_mono_str(mono)}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def var(name):
    """The Laurent variable called ``name``."""
    return LaurentPoly.var(name)


def _power(v, e):
    if e >= 0:
        return v ** e
    if _is_number(v):
        return Fraction(v) ** e
    return v ** e


class RationalFunction:
    """Quotient of two Laurent polynomials.

    No gcd is computed.  Equality is decided by cross-multiplication, and
    construction only cancels what is cheap to detect: monomial factors
    and exact divisibility of one side by the other.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=None):
        num = _as_laurent(num)
        den = LaurentPoly.const(1) if den is None else _as_laurent(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, LaurentPoly.const(1)
            return
        if den.is_monomial():
            self.num, self.den = num * den.inverse(), LaurentPoly.const(1)
            return
        q = num.exact_div(den)
        if q is not None:
            self.num, self.den = q, LaurentPoly.const(1)
            return
        if num.is_monomial():
            # move num's monomial into the denominator
            (m, c), = num._terms.items()
            den = den * LaurentPoly._raw({_mono_inv(m): Fraction(1)})
            num = LaurentPoly.const(c)
        else:
            r = den.exact_div(num)
            if r is not None:
                num, den = LaurentPoly.const(1), r
        content = den.monomial_content()
        if content != 1:
            inv = content.inverse()
            num, den = num * inv, den * inv
        lead = den.sorted_terms()[0][1]
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        self.num, self.den = num, den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly) or _is_number(other):
            return RationalFunction(other)
        return None

    def is_polynomial(self):
        return self.den == 1

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return RationalFunction(self.den ** -e, self.num ** -e)
        return RationalFunction(self.num ** e, self.den ** e)

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __bool__(self):
        return not self.num.is_zero()

    def evaluate(self, assignment):
        d = self.den.evaluate(assignment)
        if d == 0:
            raise DivisionByZero("denominator vanishes at this assignment")
        return divide(self.num.evaluate(assignment), d)

    @property
    def variables(self):
        return tuple(sorted(set(self.num.variables) | set(self.den.variables)))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if _is_number(x):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeFieldElement:
    """Element of F_p for a prime p > 3."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        if not (isinstance(p, int) and p > 3 and is_prime(p)):
            raise ValueError(f"modulus must be a prime > 3, got {p}")
        self.p = p
        if isinstance(value, PrimeFieldElement):
            if value.p != p:
                raise ModulusMismatch(f"F_{value.p} element used as F_{p}")
            value = value.value
        elif isinstance(value, Fraction):
            num, den = value.numerator % p, value.denominator % p
            if den == 0:
                raise DivisionByZero(f"{value} has no image in F_{p}")
            value = num * pow(den, -1, p)
        self.value = int(value) % p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ModulusMismatch(f"F_{self.p} and F_{other.p}")
            return other
        if _is_number(other):
            return PrimeFieldElement(other, self.p)
        return None

    def _new(self, v):
        obj = PrimeFieldElement.__new__(PrimeFieldElement)
        obj.p = self.p
        obj.value = v % self.p
        return obj

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(o.value - self.value)

    def __neg__(self):
        return self._new(-self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value * o.value)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return self._new(pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** -e
        return self._new(pow(self.value, e, self.p))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if _is_number(other):
            if isinstance(other, Fraction) and other.denominator % self.p == 0:
                return False
            return self.value == PrimeFieldElement(other, self.p).value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, {self.p})"


# ---------------------------------------------------------------------------
# domain-generic helpers


def invert(x):
    """Multiplicative inverse in the smallest convenient domain."""
    if isinstance(x, float):
        raise TypeError("floating-point scalars are not supported")
    if _is_number(x):
        if x == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / Fraction(x)
    if x == 0:
        raise DivisionByZero(f"inverse of zero {type(x).__name__}")
    return x.inverse()


def divide(a, b):
    if _is_number(a) and _is_number(b):
        if b == 0:
            raise DivisionByZero("division by 0")
        return Fraction(a) / b
    if _is_number(b) and b == 0:
        raise DivisionByZero("division by 0")
    return a * invert(b)


def to_field(x):
    """Lift a ring element into a field containing it."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, LaurentPoly):
        return RationalFunction(x)
    return x


def is_unit(x):
    """True when ``x`` is invertible in its own ring."""
    if isinstance(x, LaurentPoly):
        return x.is_monomial()
    if isinstance(x, RationalFunction):
        return bool(x)
    return x != 0


def render(x):
    if isinstance(x, Fraction):
        return _coeff_str(x)
    return str(x)


# ---------------------------------------------------------------------------
# operation-level entry points


def laurent_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def laurent_eval(a, assignment):
    assignment = {k: Fraction(v) if _is_number(v) else v for k, v in assignment.items()}
    return a.evaluate(assignment)


def ratfun_eq(f, g):
    f, g = RationalFunction._coerce(f), RationalFunction._coerce(g)
    return f.num * g.den == g.num * f.den


def prime_field_arith(a, b, op):
    if a.p != b.p:
        raise ModulusMismatch(f"F_{a.p} and F_{b.p}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")

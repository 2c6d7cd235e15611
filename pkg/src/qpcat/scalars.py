"""Exact scalars: rationals and rational functions in one parameter.

Coefficients live in the field Q(L), where L is a formal parameter
(written as the letter L in text form). Plain rationals are the
degree-zero elements. Values are kept normalized (fraction reduced,
denominator monic), so equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    """Dense univariate polynomial over Q, coefficients listed low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, c):
        c = Fraction(c)
        return Poly([a * c for a in self.coeffs])

    def divmod(self, other):
        """Exact polynomial division with remainder; divisor must be nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = other.coeffs, other.degree
        lead = dn[-1]
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            q[i - dd] = f
            for j, b in enumerate(dn):
                rem[i - dd + j] -= f * b
        return Poly(q), Poly(rem)

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())

    @staticmethod
    def gcd(a, b):
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x):
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return "Poly(%r)" % (list(self.coeffs),)


P_ZERO = Poly()
P_ONE = Poly([1])
P_LAM = Poly([0, 1])


class RatFunc:
    """Element of Q(L): quotient of two polynomials, reduced, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE):
        if not isinstance(num, Poly):
            num = Poly([num])
        if not isinstance(den, Poly):
            den = Poly([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = P_ONE
        else:
            g = Poly.gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = den.lead()
            if lc != 1:
                num = num.scale(1 / lc)
                den = den.scale(1 / lc)
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == P_ONE and self.den == P_ONE

    def is_constant(self):
        return self.num.degree <= 0 and self.den == P_ONE

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    @property
    def complexity(self):
        """Total degree, used to pick small pivots in elimination."""
        return max(self.num.degree, 0) + max(self.den.degree, 0)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(Poly([other]))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if self.den == P_ONE and other.den == P_ONE:
            return RatFunc(self.num + other.num)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.den == P_ONE and other.den == P_ONE:
            return RatFunc(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inv(self):
        return RF_ONE / self

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = RF_ONE
        for _ in range(n):
            out = out * self
        return out

    def specialize(self, value):
        """Evaluate at L = value (a Fraction); raises if the denominator vanishes."""
        value = Fraction(value)
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at L=%s" % value)
        return self.num(value) / d

    def __repr__(self):
        return "RatFunc(%s)" % (format_scalar(self),)

    def __str__(self):
        return format_scalar(self)


RF_ZERO = RatFunc(P_ZERO)
RF_ONE = RatFunc(P_ONE)
RF_LAM = RatFunc(P_LAM)


def rf(x):
    """Coerce an int, Fraction or RatFunc into a RatFunc."""
    if isinstance(x, RatFunc):
        return x
    return RatFunc(Poly([Fraction(x)]))


def _format_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if c == 0:
            continue
        if d == 0:
            body = str(abs(c))
        elif d == 1:
            body = "L" if abs(c) == 1 else "%s*L" % abs(c)
        else:
            body = "L^%d" % d if abs(c) == 1 else "%s*L^%d" % (abs(c), d)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def format_scalar(s):
    """Render a RatFunc in the text grammar (parseable by jsonio.parse_scalar)."""
    num = _format_poly(s.num)
    if s.den == P_ONE:
        return num
    den = _format_poly(s.den)
    if " " in num or "/" in num:
        num = "(%s)" % num
    if " " in den or "/" in den:
        den = "(%s)" % den
    return "%s/%s" % (num, den)

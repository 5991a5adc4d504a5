"""Exact arithmetic in Q(beta): univariate polynomials and rational functions.

Coefficients are Python ints or fractions.Fraction (arbitrary precision, always
exact).  BetaPoly is a dense univariate polynomial in the coupling beta;
BetaRatFunc is a quotient of two BetaPolys kept fully reduced with a monic
denominator, so equality is plain structural comparison.
"""

from fractions import Fraction


class PoleError(ArithmeticError):
    """Evaluation of a rational function at a pole.  Carries the pole order."""

    def __init__(self, order, point=None):
        self.order = order
        self.point = point
        super().__init__("pole of order %d at beta=%s" % (order, point))


def _as_rat(x):
    # accepted scalar coefficient types; ints stay ints so integer
    # polynomials keep native int arithmetic
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x
    raise TypeError("expected int or Fraction, got %r" % (type(x).__name__,))


def rat_to_obj(q):
    """Serialize an exact rational as decimal strings."""
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rat_from_obj(obj):
    return Fraction(int(obj["num"]), int(obj["den"]))


class BetaPoly:
    """Polynomial in beta over Q, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [_as_rat(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BetaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (() if other == 0 else (other,))
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __neg__(self):
        return BetaPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BetaPoly((other,))
        if not isinstance(other, BetaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BetaPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, BetaPoly) else -_coerce_poly(other))

    def __rsub__(self, other):
        return _coerce_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return BetaPoly()
            return BetaPoly([c * other for c in self.coeffs])
        if not isinstance(other, BetaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BetaPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return BetaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = BetaPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        """Polynomial long division over Q."""
        if isinstance(other, (int, Fraction)):
            other = BetaPoly((other,))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.coeffs[-1]
        if len(rem) - 1 < db:
            return BetaPoly(), self
        quo = [0] * (len(rem) - db)
        inv = Fraction(1, 1) / lb
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                q = c * inv
                quo[i - db] = q
                for j, cb in enumerate(other.coeffs):
                    rem[i - db + j] -= q * cb
        return BetaPoly(quo), BetaPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        # lands in the fraction field
        if isinstance(other, (int, Fraction)):
            other = BetaPoly((other,))
        return BetaRatFunc(self, other)

    def __rtruediv__(self, other):
        return BetaRatFunc(_coerce_poly(other), self)

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def __call__(self, beta0):
        """Evaluate by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * beta0 + c
        return Fraction(acc)

    def int_normalized(self):
        """Same polynomial with integral Fraction coefficients demoted to
        int (native arithmetic is much faster downstream)."""
        if all(isinstance(c, int) for c in self.coeffs):
            return self
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction) and c.denominator == 1:
                c = int(c)
            out.append(c)
        return BetaPoly(out)

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        inv = Fraction(1, 1) / lead
        return BetaPoly([c * inv for c in self.coeffs])

    def root_multiplicity(self, beta0):
        """Multiplicity of beta0 as a root, by repeated exact division."""
        if self.is_zero():
            raise ValueError("zero polynomial has no root multiplicity")
        lin = BetaPoly((-Fraction(beta0), 1))
        mult, p = 0, self
        while not p.is_zero() and p(beta0) == 0:
            p = p.exact_div(lin)
            mult += 1
        return mult

    def __repr__(self):
        return "BetaPoly(%r)" % (list(self.coeffs),)

    def __str__(self):
        if self.is_zero():
            return "0"
        bits = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                bits.append(str(c))
            elif i == 1:
                bits.append("%s*beta" % (c,) if c != 1 else "beta")
            else:
                bits.append("%s*beta^%d" % (c, i) if c != 1 else "beta^%d" % i)
        return " + ".join(bits).replace("+ -", "- ")

    def to_obj(self):
        return [rat_to_obj(c) for c in self.coeffs]

    @classmethod
    def from_obj(cls, obj):
        return cls([rat_from_obj(c) for c in obj])


def _coerce_poly(x):
    if isinstance(x, BetaPoly):
        return x
    return BetaPoly((_as_rat(x),))


BETA = BetaPoly((0, 1))
ONE = BetaPoly((1,))


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm over Q."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return BetaPoly()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class BetaRatFunc:
    """Element of Q(beta), stored as num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = ONE if den is None else _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(beta)")
        if num.is_zero():
            num, den = BetaPoly(), ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lead = den.coeffs[-1]
            if lead != 1:
                inv = Fraction(1, 1) / lead
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, c):
        return cls(_coerce_poly(c))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, BetaRatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, BetaPoly)):
            return self.den == ONE and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __neg__(self):
        out = object.__new__(BetaRatFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            other = BetaRatFunc(other)
        if not isinstance(other, BetaRatFunc):
            return NotImplemented
        if self.den == other.den:
            return BetaRatFunc(self.num + other.num, self.den)
        return BetaRatFunc(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            other = BetaRatFunc(other)
        if not isinstance(other, BetaRatFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return BetaRatFunc(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            other = BetaRatFunc(other)
        if not isinstance(other, BetaRatFunc):
            return NotImplemented
        return BetaRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            other = BetaRatFunc(other)
        if not isinstance(other, BetaRatFunc):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(beta)")
        return BetaRatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return BetaRatFunc(other) / self

    def pole_order(self, beta0):
        """Order of the pole at beta0 (negative for a zero, None for f = 0).

        Returns root multiplicity of the denominator minus that of the
        numerator; the stored form is reduced so at most one side is nonzero.
        """
        if self.is_zero():
            return None
        return (self.den.root_multiplicity(beta0)
                - self.num.root_multiplicity(beta0))

    def __call__(self, beta0):
        """Exact value at beta0; raises PoleError at a pole."""
        dv = self.den(beta0)
        if dv == 0:
            raise PoleError(self.den.root_multiplicity(beta0), beta0)
        return self.num(beta0) / dv

    def __repr__(self):
        return "BetaRatFunc(%r, %r)" % (list(self.num.coeffs), list(self.den.coeffs))

    def __str__(self):
        if self.den == ONE:
            return str(self.num) if self.num.degree <= 0 else "(%s)" % self.num
        return "(%s)/(%s)" % (self.num, self.den)

    def to_obj(self):
        return {"num": self.num.to_obj(), "den": self.den.to_obj()}

    @classmethod
    def from_obj(cls, obj):
        return cls(BetaPoly.from_obj(obj["num"]), BetaPoly.from_obj(obj["den"]))


BETA_FUNC = BetaRatFunc(BETA)


def coeff_to_obj(c):
    """Serialize a coefficient from Q, Q[beta] or Q(beta)."""
    if isinstance(c, (int, Fraction)):
        return rat_to_obj(c)
    if isinstance(c, BetaPoly):
        return BetaRatFunc(c).to_obj()
    if isinstance(c, BetaRatFunc):
        return c.to_obj()
    raise TypeError("cannot serialize coefficient %r" % (type(c).__name__,))


def coeff_from_obj(obj):
    """Read a coefficient; shape distinguishes Q from Q(beta)."""
    if isinstance(obj["num"], str):
        return rat_from_obj(obj)
    f = BetaRatFunc.from_obj(obj)
    if f.den == ONE and f.num.degree <= 0:
        return f.num(0) if f.num.coeffs else Fraction(0)
    return f

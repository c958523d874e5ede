"""Exact rational functions p(x)/q(x) over arbitrary-precision rationals.

The field is ordered by eventual behavior as x -> +infinity, which makes x
larger than every integer.  Everything is exact; there is no floating point.
"""

from __future__ import annotations

from fractions import Fraction as _Fraction

try:
    from gmpy2 import mpq as Q  # noqa: N811  (drop-in for Fraction, much faster)
except ImportError:
    Q = _Fraction

__all__ = ["Q", "NEG_INF", "Poly", "RatFun", "X", "x_power"]

# Degree of the zero polynomial / zero rational function.  float("-inf")
# is absorbing under + with ints, which is exactly the contract we need.
NEG_INF = float("-inf")

_Q0 = Q(0)
_Q1 = Q(1)


class Poly:
    """Univariate polynomial; coeffs[i] is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            self.coeffs = coeffs.coeffs
            return
        cs = [c if type(c) is type(_Q0) else Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic queries ---------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else _Q0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, _Fraction)) or type(other) is type(_Q0):
            return Poly((other,))
        return None

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _P_ZERO
        out = [_Q0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Exact polynomial long division (coefficients are rationals)."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dc = other.coeffs
        dd = len(dc) - 1
        inv_lead = _Q1 / dc[-1]
        quo = [_Q0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c *= inv_lead
            quo[i - dd] = c
            for j in range(dd + 1):
                rem[i - dd + j] -= c * dc[j]
        return Poly(quo), Poly(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k (k >= 0)."""
        if not self or k == 0:
            return self
        return Poly((_Q0,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if not self or self.lead == 1:
            return self
        inv = _Q1 / self.lead
        return Poly(tuple(c * inv for c in self.coeffs))

    @staticmethod
    def gcd(a: "Poly", b: "Poly") -> "Poly":
        while b:
            a, b = b, a % b
        return a.monic()

    def is_monomial(self) -> bool:
        return bool(self) and all(c == 0 for c in self.coeffs[:-1])

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        return _render_terms([(i, c) for i, c in enumerate(self.coeffs) if c != 0])


_P_ZERO = Poly()
_P_ONE = Poly((1,))


def _render_one_term(exp: int, coeff) -> str:
    """One Laurent term, without sign, grammar-compatible (e.g. '3/4*x^-2')."""
    c = str(coeff)
    if exp == 0:
        return c
    xs = "x" if exp == 1 else f"x^{exp}"
    return xs if c == "1" else f"{c}*{xs}"


def _render_terms(terms) -> str:
    """Render (exponent, coefficient) pairs, highest exponent first."""
    if not terms:
        return "0"
    parts = []
    for exp, c in sorted(terms, reverse=True):
        if not parts:
            parts.append(("-" if c < 0 else "") + _render_one_term(exp, abs(c)))
        else:
            parts.append((" - " if c < 0 else " + ") + _render_one_term(exp, abs(c)))
    return "".join(parts)


class RatFun:
    """Canonical rational function: reduced fraction with monic denominator.

    Equality and hashing are structural; the canonical form makes that
    coincide with mathematical equality.  Zero is Poly()/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P_ONE):
        if not isinstance(num, Poly):
            c = Poly._coerce(num)
            num = c if c is not None else Poly(num)
        if not isinstance(den, Poly):
            c = Poly._coerce(den)
            den = c if c is not None else Poly(den)
        if not den:
            raise ZeroDivisionError("division by zero polynomial")
        if not num:
            self.num, self.den = _P_ZERO, _P_ONE
            return
        if den == _P_ONE:
            self.num, self.den = num, den
            return
        g = Poly.gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead
        if lead != 1:
            inv = _Q1 / lead
            num = Poly(tuple(c * inv for c in num.coeffs))
            den = den.monic()
        self.num, self.den = num, den

    # -- coercion ----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (Poly, int)) or type(other) is type(_Q0):
            return RatFun(Poly._coerce(other))
        return None

    # -- queries -----------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    @property
    def degree(self):
        """deg(num) - deg(den); NEG_INF iff zero.  The valuation of the field."""
        if not self.num:
            return NEG_INF
        return self.num.degree - self.den.degree

    def sign(self) -> int:
        """Sign at +infinity: sign of the leading numerator coefficient."""
        lc = self.num.lead
        return 0 if lc == 0 else (1 if lc > 0 else -1)

    def __eq__(self, other):
        other = RatFun._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = RatFun._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatFun)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = RatFun._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RatFun._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFun._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = RatFun._coerce(other)
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return (_RF_ONE / self) ** (-k)
        out = _RF_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- order (eventual order at +infinity) ---------------------------------

    def __lt__(self, other):
        other = RatFun._coerce(other)
        if other is None:
            return NotImplemented
        return (other - self).sign() > 0

    def __le__(self, other):
        other = RatFun._coerce(other)
        if other is None:
            return NotImplemented
        return (other - self).sign() >= 0

    def __gt__(self, other):
        return RatFun._coerce(other).__lt__(self)

    def __ge__(self, other):
        return RatFun._coerce(other).__le__(self)

    # -- truncation ------------------------------------------------------------

    def truncate_above(self, n) -> "RatFun":
        """Terms of the expansion at +infinity with exponent > n.

        The result is a Laurent polynomial and deg(self - result) <= n.
        n = NEG_INF returns self unchanged.
        """
        if n == NEG_INF:
            return self
        if self.degree <= n:
            return _RF_ZERO
        terms = self.laurent_terms()
        if terms is not None:
            # already a Laurent polynomial: just drop the absorbed terms
            kept = [(e, c) for e, c in terms if e > n]
            return self if len(kept) == len(terms) else _from_terms(kept)
        s = max(0, -int(n) - 1)
        quo, _ = divmod(self.num.shift(s), self.den)
        return _from_terms(
            [(i - s, c) for i, c in enumerate(quo.coeffs) if c != 0 and i - s > n]
        )

    def laurent_terms(self):
        """(exponent, coefficient) pairs when the denominator is x**k, else None."""
        if not self.den.is_monomial():
            return None
        k = self.den.degree
        return [(i - k, c) for i, c in enumerate(self.num.coeffs) if c != 0]

    # -- rendering ----------------------------------------------------------------

    def __str__(self):
        """Grammar-compatible text: 'x^2 + 1', '3*x^-1 - x^-2', '(x + 1)/(x + 2)'."""
        if self.den == _P_ONE:
            return str(self.num)
        terms = self.laurent_terms()
        if terms is not None:
            return _render_terms(terms)
        num_s = str(self.num)
        if len([c for c in self.num.coeffs if c != 0]) > 1:
            num_s = f"({num_s})"
        return f"{num_s}/({self.den})"

    def __repr__(self):
        return f"RatFun({self})"


def _from_terms(terms) -> "RatFun":
    """Build a Laurent polynomial from (exponent, coefficient) pairs."""
    if not terms:
        return _RF_ZERO
    shift = max(0, -min(e for e, _ in terms))
    out = [_Q0] * (max(e for e, _ in terms) + shift + 1)
    for e, c in terms:
        out[e + shift] = c
    return RatFun(Poly(out), _P_ONE.shift(shift))


_RF_ZERO = RatFun(_P_ZERO)
_RF_ONE = RatFun(_P_ONE)

#: The independent variable as a rational function (an infinitely large element).
X = RatFun(Poly((0, 1)))


def x_power(k: int) -> RatFun:
    """x**k for any integer k (negative exponents give 1/x**-k)."""
    if k >= 0:
        return RatFun(_P_ONE.shift(k))
    return RatFun(_P_ONE, _P_ONE.shift(-k))

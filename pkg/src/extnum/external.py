"""External numbers: cosets a + A of a magnitude A, with Minkowski arithmetic.

Construction canonicalizes eagerly (representative truncated above the
magnitude's index, magnitudes carry representative 0), so structural
equality and hashing coincide with coset equality.
"""

from __future__ import annotations

import enum

from .magnitude import MAG_ZERO, Magnitude
from .ratfun import RatFun

__all__ = [
    "ExternalNumber",
    "RelationClass",
    "EN_ZERO",
    "EN_ONE",
    "precise",
    "magnitude_coset",
    "distributivity_defect",
]

_RF_ZERO = RatFun(0)


class RelationClass(enum.Enum):
    """How two cosets sit relative to each other: separated, equal, or nested.

    Exactly one case holds for any pair (two cosets are either disjoint or
    one contains the other).
    """

    LESS_SEPARATED = "<"
    GREATER_SEPARATED = ">"
    EQUAL = "="
    PROPER_SUBSET = "⊂"
    PROPER_SUPERSET = "⊃"

    @property
    def symbol(self) -> str:
        return self.value


class ExternalNumber:
    """A coset rep + mag of the rational-function field.

    The constructor accepts any representative and canonicalizes: if the
    representative belongs to the magnitude the coset *is* the magnitude
    (rep 0); otherwise the representative keeps exactly its expansion terms
    that the magnitude cannot absorb.  Two pairs (a, A), (a', A) with
    a - a' in A therefore construct identical objects.
    """

    __slots__ = ("rep", "mag")

    def __init__(self, rep, mag: Magnitude = MAG_ZERO):
        rep = rep if isinstance(rep, RatFun) else RatFun(rep)
        if not mag.is_zero:
            rep = rep.truncate_above(mag.rank)
        self.rep = rep
        self.mag = mag

    # -- queries -------------------------------------------------------------

    @property
    def is_magnitude(self) -> bool:
        """True iff the coset is one of the convex subgroups (contains 0)."""
        return not self.rep

    @property
    def is_zeroless(self) -> bool:
        return bool(self.rep)

    @property
    def magnitude(self) -> Magnitude:
        """The unique magnitude the coset is a translate of."""
        return self.mag

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.mag == other.mag and self.rep == other.rep

    def __hash__(self):
        return hash((self.rep, self.mag))

    # -- additive structure -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExternalNumber(self.rep + other.rep, self.mag + other.mag)

    __radd__ = __add__

    def __neg__(self):
        return ExternalNumber(-self.rep, self.mag)

    def __sub__(self, other):
        """self + (-other).  Note self - self = the magnitude of self, not {0}."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    # -- multiplicative structure -------------------------------------------------

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        m = self.mag.scale(other.rep) + other.mag.scale(self.rep) + self.mag * other.mag
        return ExternalNumber(self.rep * other.rep, m)

    __rmul__ = __mul__

    def unity(self) -> "ExternalNumber":
        """The individualized multiplicative neutral 1 + mag/self.

        Defined for zeroless cosets only; self * self.unity() == self.
        """
        if self.is_magnitude:
            raise ValueError("unity undefined for magnitudes")
        return ExternalNumber(1, self.mag.div_by(self))

    def inverse(self) -> "ExternalNumber":
        """The weak inverse 1/rep + mag/rep^2.

        Defined for zeroless cosets only; self * self.inverse() == self.unity().
        """
        if self.is_magnitude:
            raise ValueError("inverse undefined for magnitudes")
        inv = 1 / self.rep
        return ExternalNumber(inv, self.mag.scale(inv * inv))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = EN_ONE
        for _ in range(k):
            out = out * self
        return out

    # -- order ----------------------------------------------------------------------

    def classify(self, other: "ExternalNumber") -> RelationClass:
        """Separated (with direction), equal, or properly nested."""
        other = _coerce(other)
        delta = other.rep - self.rep
        if delta in (self.mag + other.mag):
            if self.mag == other.mag:
                return RelationClass.EQUAL
            if self.mag < other.mag:
                return RelationClass.PROPER_SUBSET
            return RelationClass.PROPER_SUPERSET
        if delta.sign() > 0:
            return RelationClass.LESS_SEPARATED
        return RelationClass.GREATER_SEPARATED

    def __le__(self, other):
        """Total order: every element of self lies below some element of other."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.classify(other) in (
            RelationClass.EQUAL,
            RelationClass.LESS_SEPARATED,
            RelationClass.PROPER_SUBSET,
        )

    def __lt__(self, other):
        """Weak-strict order: <= and not equal (nested cosets may compare <)."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self != other and self <= other

    def __ge__(self, other):
        return _coerce(other).__le__(self)

    def __gt__(self, other):
        return _coerce(other).__lt__(self)

    def lt_separated(self, other) -> bool:
        """Strict order in the separated sense: below and disjoint."""
        return self.classify(_coerce(other)) is RelationClass.LESS_SEPARATED

    # -- rendering --------------------------------------------------------------------

    def __str__(self):
        if self.is_magnitude:
            if self.mag.is_zero:
                return "0"
            if self.mag.is_all:
                return "all"
            return str(self.mag)
        if self.mag.is_zero:
            return str(self.rep)
        return f"{self.rep} + {self.mag}"

    def __repr__(self):
        return f"ExternalNumber({self})"

    def to_json(self) -> dict:
        return {"rep": str(self.rep), "mag": self.mag.to_json()}


def _coerce(value):
    if isinstance(value, ExternalNumber):
        return value
    if isinstance(value, Magnitude):
        return ExternalNumber(_RF_ZERO, value)
    try:
        return ExternalNumber(RatFun(value))
    except (TypeError, ValueError):
        return None


def precise(f) -> ExternalNumber:
    """The singleton coset {f} (magnitude {0})."""
    return ExternalNumber(f, MAG_ZERO)


def magnitude_coset(mag: Magnitude) -> ExternalNumber:
    """A magnitude viewed as an element of the quotient class."""
    return ExternalNumber(_RF_ZERO, mag)


def distributivity_defect(alpha, beta, gamma) -> Magnitude:
    """The magnitude-valued correction in the adapted distributive law:

        alpha*beta + alpha*gamma = alpha*(beta + gamma) + defect

    where defect = e(alpha)*beta + e(alpha)*gamma, always a magnitude.
    """
    a = magnitude_coset(alpha.mag)
    defect = a * beta + a * gamma
    return defect.mag


EN_ZERO = precise(0)
EN_ONE = precise(1)

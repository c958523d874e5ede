"""Convex additive subgroups of the rational-function field.

For this field every such subgroup is {0}, O(x^n) for an integer n, or the
whole field, so a magnitude is just a rank on a totally ordered ladder:
membership, joins and Minkowski products all reduce to degree arithmetic.
"""

from __future__ import annotations

from .ratfun import NEG_INF, RatFun

__all__ = ["Magnitude", "MAG_ZERO", "MAG_ALL", "ox", "INFINITESIMALS", "BOUNDED"]

_POS_INF = float("inf")


class Magnitude:
    """One of {0}, O(x^n), F, identified by rank -inf, n, +inf.

    f is a member iff deg(f) <= rank, uniformly across all three kinds.
    The inclusion order is the rank order and is total.
    """

    __slots__ = ("rank",)

    def __init__(self, rank):
        self.rank = rank

    @property
    def is_zero(self) -> bool:
        return self.rank == NEG_INF

    @property
    def is_all(self) -> bool:
        return self.rank == _POS_INF

    @property
    def is_ox(self) -> bool:
        return not (self.is_zero or self.is_all)

    @property
    def index(self) -> int:
        if not self.is_ox:
            raise ValueError(f"{self} has no finite index")
        return self.rank

    def __eq__(self, other):
        if isinstance(other, Magnitude):
            return self.rank == other.rank
        return NotImplemented

    def __hash__(self):
        return hash(("Magnitude", self.rank))

    # inclusion order (total on this ladder)
    def __le__(self, other):
        return self.rank <= other.rank

    def __lt__(self, other):
        return self.rank < other.rank

    def __ge__(self, other):
        return self.rank >= other.rank

    def __gt__(self, other):
        return self.rank > other.rank

    def __contains__(self, f: RatFun) -> bool:
        return f.degree <= self.rank

    def __add__(self, other: "Magnitude") -> "Magnitude":
        """Minkowski sum: by convexity the larger group absorbs the smaller."""
        if not isinstance(other, Magnitude):
            return NotImplemented
        return self if self.rank >= other.rank else other

    def scale(self, f: RatFun) -> "Magnitude":
        """The set {f*g : g in self}, which is again a magnitude."""
        if not f or self.is_zero:
            return MAG_ZERO
        if self.is_all:
            return MAG_ALL
        return Magnitude(self.rank + f.degree)

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        """Minkowski product.  {0} annihilates even F (set semantics)."""
        if not isinstance(other, Magnitude):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return MAG_ZERO
        if self.is_all or other.is_all:
            return MAG_ALL
        return Magnitude(self.rank + other.rank)

    def div_by(self, alpha) -> "Magnitude":
        """self / alpha for a zeroless coset alpha; independent of the
        representative because self/a + self^2/a^2 = self/a."""
        if alpha.is_magnitude:
            raise ValueError("division by non-zeroless element")
        return self.scale(1 / alpha.rep)

    def __str__(self):
        if self.is_zero:
            return "{0}"
        if self.is_all:
            return "F"
        n = self.rank
        return "O(1)" if n == 0 else f"O(x^{n})"

    def __repr__(self):
        return f"Magnitude({self})"

    def to_json(self) -> dict:
        if self.is_zero:
            return {"kind": "zero"}
        if self.is_all:
            return {"kind": "all"}
        return {"kind": "ox", "n": self.rank}


def ox(n: int) -> Magnitude:
    """O(x^n): the rational functions eventually dominated by x^n."""
    if not isinstance(n, int):
        raise TypeError("O(x^n) index must be an integer")
    return Magnitude(n)


MAG_ZERO = Magnitude(NEG_INF)
MAG_ALL = Magnitude(_POS_INF)

#: All infinitesimals of the field; equals O(x^-1) in this model.
INFINITESIMALS = ox(-1)
#: The eventually bounded elements, O(1).
BOUNDED = ox(0)

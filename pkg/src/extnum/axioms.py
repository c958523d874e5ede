"""Executable catalogue of the coset-algebra axioms, with randomized auditing.

Every axiom of the ordered structure (addition, multiplication, order, the
mixed laws and the existence postulates) is a checkable item A1..A29; the
derived theorems T1..T8 cover representative independence, trichotomy,
order compatibility, product magnitudes, the distributivity defect and the
precise subfield.  The audit is deterministic in its seed, counterexamples
are shrunk, and the whole operation table can be swapped out, which is how
the fault-injection tests drive mutated arithmetic through the catalogue.
"""

from __future__ import annotations

import json
import operator
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .external import (
    EN_ONE,
    EN_ZERO,
    ExternalNumber,
    RelationClass,
    distributivity_defect,
    magnitude_coset,
    precise,
)
from .magnitude import INFINITESIMALS, MAG_ALL, MAG_ZERO, Magnitude, ox
from .ratfun import Poly, Q, RatFun, x_power

__all__ = [
    "GenParams",
    "Ops",
    "DEFAULT_OPS",
    "CheckResult",
    "AxiomOutcome",
    "AuditReport",
    "AXIOMS",
    "axiom_ids",
    "gen_external",
    "gen_zeroless",
    "sample_member",
    "check_axiom",
    "audit",
    "shrink",
    "existence_witnesses",
]


# -- generation --------------------------------------------------------------


@dataclass(frozen=True)
class GenParams:
    """Shape of the random instances fed to the axiom checks."""

    max_degree: int = 4
    coeff_bound: int = 10
    mag_index_min: int = -6
    mag_index_max: int = 6
    p_zero: Fraction = Fraction(1, 5)
    p_ox: Fraction = Fraction(7, 10)
    p_all: Fraction = Fraction(1, 10)

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be >= 1")
        if self.mag_index_min > self.mag_index_max:
            raise ValueError("empty magnitude index range")
        probs = (self.p_zero, self.p_ox, self.p_all)
        if any(p < 0 or p > 1 for p in probs) or sum(probs) != 1:
            raise ValueError("tag probabilities must lie in [0,1] and sum to 1")


DEFAULT_PARAMS = GenParams()


def _random_coeff(rng: random.Random, params: GenParams):
    num = rng.randint(-params.coeff_bound, params.coeff_bound)
    return Q(num, rng.randint(1, params.coeff_bound))


def _random_poly(rng: random.Random, params: GenParams) -> Poly:
    degree = rng.randint(0, params.max_degree)
    coeffs = [_random_coeff(rng, params) for _ in range(degree + 1)]
    while coeffs[-1] == 0:
        coeffs[-1] = _random_coeff(rng, params)
    return Poly(coeffs)


def random_ratfun(rng: random.Random, params: GenParams = DEFAULT_PARAMS, allow_zero: bool = True) -> RatFun:
    if allow_zero and rng.random() < 0.1:
        return RatFun(0)
    num = _random_poly(rng, params)
    if rng.random() < 0.5:
        return RatFun(num)
    return RatFun(num, _random_poly(rng, params))


def random_magnitude(rng: random.Random, params: GenParams = DEFAULT_PARAMS) -> Magnitude:
    tag = rng.choices(("zero", "ox", "all"), weights=(params.p_zero, params.p_ox, params.p_all))[0]
    if tag == "zero":
        return MAG_ZERO
    if tag == "all":
        return MAG_ALL
    return ox(rng.randint(params.mag_index_min, params.mag_index_max))


def gen_external(rng: random.Random, params: GenParams = DEFAULT_PARAMS) -> ExternalNumber:
    """One random coset; covers magnitudes, precise and zeroless values."""
    return ExternalNumber(random_ratfun(rng, params), random_magnitude(rng, params))


def gen_zeroless(rng: random.Random, params: GenParams = DEFAULT_PARAMS) -> ExternalNumber:
    """Regenerate until the coset does not contain 0."""
    while True:
        value = gen_external(rng, params)
        if value.is_zeroless:
            return value


def sample_member(rng: random.Random, mag: Magnitude, params: GenParams = DEFAULT_PARAMS) -> RatFun:
    """A random field element belonging to the magnitude."""
    if mag.is_zero or rng.random() < 0.15:
        return RatFun(0)
    f = random_ratfun(rng, params, allow_zero=False)
    if mag.is_all:
        return f
    return f * x_power(mag.index - int(f.degree) - rng.randint(0, 2))


def _sub_magnitude(rng: random.Random, mag: Magnitude, params: GenParams) -> Magnitude:
    """A random magnitude included in the given one."""
    if mag.is_zero or rng.random() < 0.2:
        return MAG_ZERO
    if mag.is_all:
        return random_magnitude(rng, params)
    return ox(mag.index - rng.randint(0, 3))


# -- the operation table under audit ------------------------------------------


@dataclass(frozen=True)
class Ops:
    """The operations the checks are allowed to use.

    Swapping a field for a mutated implementation turns the audit into a
    sensitivity test: the mutation must surface as a counterexample.
    """

    add: Callable = operator.add
    neg: Callable = operator.neg
    mul: Callable = operator.mul
    magnitude_of: Callable = lambda a: a.mag
    unity: Callable = ExternalNumber.unity
    inverse: Callable = ExternalNumber.inverse
    classify: Callable = ExternalNumber.classify
    leq: Callable = operator.le
    eq: Callable = operator.eq
    dist_defect: Callable = distributivity_defect

    def e_coset(self, a: ExternalNumber) -> ExternalNumber:
        return magnitude_coset(self.magnitude_of(a))

    def lt_weak(self, a, b) -> bool:
        return self.leq(a, b) and not self.eq(a, b)

    def lt_separated(self, a, b) -> bool:
        return self.classify(a, b) is RelationClass.LESS_SEPARATED

    def nonneg(self, a: ExternalNumber) -> ExternalNumber:
        """a or -a, whichever lies above its own magnitude."""
        return a if self.leq(self.e_coset(a), a) else self.neg(a)


DEFAULT_OPS = Ops()


# -- results -------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    axiom: str
    passed: bool
    binding: tuple[ExternalNumber, ...]
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "binding": [value.to_json() for value in self.binding],
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Axiom:
    id: str
    name: str
    group: str
    arity: int
    generate: Callable  # (rng, params, ops) -> binding tuple
    check: Callable  # (binding, ops, rng, params) -> (bool, detail)


# -- binding generators ----------------------------------------------------------


def _gen_plain(arity: int):
    def gen(rng, params, ops):
        return tuple(gen_external(rng, params) for _ in range(arity))

    return gen


def _gen_zeroless(arity: int):
    def gen(rng, params, ops):
        return tuple(gen_zeroless(rng, params) for _ in range(arity))

    return gen


def _gen_sorted_pair_last(arity: int):
    """Random binding whose last two entries are put in increasing order."""

    def gen(rng, params, ops):
        vals = [gen_external(rng, params) for _ in range(arity)]
        if not ops.leq(vals[-2], vals[-1]):
            vals[-2], vals[-1] = vals[-1], vals[-2]
        return tuple(vals)

    return gen


def _gen_chain(rng, params, ops):
    vals = sorted((gen_external(rng, params) for _ in range(3)))
    return tuple(vals)


def _gen_equalish_pair(rng, params, ops):
    a = gen_external(rng, params)
    if rng.random() < 0.3:
        return (a, a)
    return (a, gen_external(rng, params))


def _gen_absorbed_pair(rng, params, ops):
    a = gen_external(rng, params)
    if rng.random() < 0.5:
        b = ExternalNumber(sample_member(rng, a.mag, params), _sub_magnitude(rng, a.mag, params))
    else:
        b = gen_external(rng, params)
    return (a, b)


def _gen_positive_zeroless_then_sorted(rng, params, ops):
    a = gen_zeroless(rng, params)
    if not ops.lt_separated(ops.e_coset(a), a):
        a = ops.neg(a)
    b, c = gen_external(rng, params), gen_external(rng, params)
    if not ops.leq(b, c):
        b, c = c, b
    return (a, b, c)


def _gen_amplification(rng, params, ops):
    a = gen_external(rng, params)
    b = ops.nonneg(gen_external(rng, params))
    c = ops.add(b, ops.nonneg(gen_external(rng, params)))
    return (a, b, c)


def _gen_magnitude_pair(rng, params, ops):
    lo = random_magnitude(rng, params)
    hi = random_magnitude(rng, params)
    while hi == lo:
        hi = random_magnitude(rng, params)
    if hi < lo:
        lo, hi = hi, lo
    return (magnitude_coset(lo), magnitude_coset(hi))


def _gen_precise(arity: int):
    def gen(rng, params, ops):
        return tuple(
            precise(random_ratfun(rng, params, allow_zero=False)) for _ in range(arity)
        )

    return gen


# -- check bodies -------------------------------------------------------------------


def _chk_add_assoc(b, ops, rng, params):
    lhs = ops.add(b[0], ops.add(b[1], b[2]))
    rhs = ops.add(ops.add(b[0], b[1]), b[2])
    return ops.eq(lhs, rhs), f"x+(y+z) = {lhs}, (x+y)+z = {rhs}"


def _chk_add_comm(b, ops, rng, params):
    lhs, rhs = ops.add(b[0], b[1]), ops.add(b[1], b[0])
    return ops.eq(lhs, rhs), f"x+y = {lhs}, y+x = {rhs}"


def _chk_add_neutral(b, ops, rng, params):
    x = b[0]
    e = ops.e_coset(x)
    if not ops.eq(ops.add(x, e), x):
        return False, f"x + e(x) = {ops.add(x, e)} differs from x = {x}"
    challengers = [e, EN_ZERO]
    for _ in range(2):
        challengers.append(gen_external(rng, params))
    for _ in range(2):
        challengers.append(
            ExternalNumber(sample_member(rng, x.mag, params), _sub_magnitude(rng, x.mag, params))
        )
    for f in challengers:
        if ops.eq(ops.add(x, f), x) and not ops.eq(ops.add(e, f), e):
            return False, f"f = {f} leaves x fixed but e(x) + f = {ops.add(e, f)} != e(x)"
    return True, ""


def _chk_add_symmetric(b, ops, rng, params):
    x = b[0]
    s = ops.neg(x)
    ok = ops.eq(ops.add(x, s), ops.e_coset(x)) and ops.magnitude_of(s) == ops.magnitude_of(x)
    return ok, f"x + (-x) = {ops.add(x, s)}, e(-x) = {ops.magnitude_of(s)}"


def _chk_mag_sum_dichotomy(b, ops, rng, params):
    m = ops.magnitude_of(ops.add(b[0], b[1]))
    ok = m == ops.magnitude_of(b[0]) or m == ops.magnitude_of(b[1])
    return ok, f"e(x+y) = {m}"


def _chk_mul_assoc(b, ops, rng, params):
    lhs = ops.mul(b[0], ops.mul(b[1], b[2]))
    rhs = ops.mul(ops.mul(b[0], b[1]), b[2])
    return ops.eq(lhs, rhs), f"x(yz) = {lhs}, (xy)z = {rhs}"


def _chk_mul_comm(b, ops, rng, params):
    lhs, rhs = ops.mul(b[0], b[1]), ops.mul(b[1], b[0])
    return ops.eq(lhs, rhs), f"xy = {lhs}, yx = {rhs}"


def _chk_unity_neutral(b, ops, rng, params):
    x = b[0]
    u = ops.unity(x)
    if not ops.eq(ops.mul(x, u), x):
        return False, f"x*u(x) = {ops.mul(x, u)} differs from x = {x}"
    challengers = [u, EN_ONE]
    for _ in range(2):
        challengers.append(gen_external(rng, params))
    u_mag = ops.magnitude_of(u)
    for _ in range(2):
        challengers.append(ExternalNumber(RatFun(1), _sub_magnitude(rng, u_mag, params)))
    for v in challengers:
        if ops.eq(ops.mul(x, v), x) and not ops.eq(ops.mul(u, v), u):
            return False, f"v = {v} leaves x fixed but u(x)*v = {ops.mul(u, v)} != u(x)"
    return True, ""


def _chk_inverse(b, ops, rng, params):
    x = b[0]
    d = ops.inverse(x)
    u = ops.unity(x)
    ok = ops.eq(ops.mul(x, d), u) and ops.eq(ops.unity(d), u)
    return ok, f"x*d(x) = {ops.mul(x, d)}, u(d(x)) = {ops.unity(d)}, u(x) = {u}"


def _chk_unity_dichotomy(b, ops, rng, params):
    prod = ops.mul(b[0], b[1])
    if prod.is_magnitude:
        return False, f"product of zeroless elements is the magnitude {prod}"
    u = ops.unity(prod)
    ok = ops.eq(u, ops.unity(b[0])) or ops.eq(u, ops.unity(b[1]))
    return ok, f"u(xy) = {u}, u(x) = {ops.unity(b[0])}, u(y) = {ops.unity(b[1])}"


def _chk_reflexive(b, ops, rng, params):
    return ops.leq(b[0], b[0]), f"x = {b[0]}"


def _chk_antisymmetric(b, ops, rng, params):
    if ops.leq(b[0], b[1]) and ops.leq(b[1], b[0]):
        return ops.eq(b[0], b[1]), f"x <= y and y <= x but x = {b[0]} != y = {b[1]}"
    return True, ""


def _chk_transitive(b, ops, rng, params):
    if ops.leq(b[0], b[1]) and ops.leq(b[1], b[2]):
        return ops.leq(b[0], b[2]), f"x <= y <= z but not x <= z for x = {b[0]}, z = {b[2]}"
    return True, ""


def _chk_total(b, ops, rng, params):
    return ops.leq(b[0], b[1]) or ops.leq(b[1], b[0]), "neither x <= y nor y <= x"


def _chk_add_monotone(b, ops, rng, params):
    if ops.leq(b[0], b[1]):
        lhs, rhs = ops.add(b[0], b[2]), ops.add(b[1], b[2])
        return ops.leq(lhs, rhs), f"x+z = {lhs} not <= y+z = {rhs}"
    return True, ""


def _chk_absorbed_below(b, ops, rng, params):
    x, y = b
    e = ops.e_coset(x)
    if ops.eq(ops.add(y, e), e):
        ok = ops.leq(y, e) and ops.leq(ops.neg(y), e)
        return ok, f"y = {y} absorbed by e(x) = {e} but not below it"
    return True, ""


def _chk_mul_monotone(b, ops, rng, params):
    x, y, z = b
    if ops.lt_separated(ops.e_coset(x), x) and ops.leq(y, z):
        lhs, rhs = ops.mul(x, y), ops.mul(x, z)
        return ops.leq(lhs, rhs), f"xy = {lhs} not <= xz = {rhs}"
    return True, ""


def _chk_amplification(b, ops, rng, params):
    x, y, z = b
    if ops.leq(ops.e_coset(y), y) and ops.leq(y, z):
        e = ops.e_coset(x)
        lhs, rhs = ops.mul(e, y), ops.mul(e, z)
        return ops.leq(lhs, rhs), f"e(x)y = {lhs} not <= e(x)z = {rhs}"
    return True, ""


def _chk_scale_is_magnitude(b, ops, rng, params):
    w = ops.mul(ops.e_coset(b[0]), b[1])
    ok = ops.eq(w, magnitude_coset(ops.magnitude_of(w)))
    return ok, f"e(x)y = {w} is not a magnitude"


def _chk_product_magnitude(b, ops, rng, params):
    x, y = b
    lhs = magnitude_coset(ops.magnitude_of(ops.mul(x, y)))
    rhs = ops.add(ops.mul(x, ops.e_coset(y)), ops.mul(y, ops.e_coset(x)))
    return ops.eq(lhs, rhs), f"e(xy) = {lhs}, x e(y) + y e(x) = {rhs}"


def _chk_unity_magnitude(b, ops, rng, params):
    x = b[0]
    lhs = ops.magnitude_of(ops.unity(x))
    rhs = ops.magnitude_of(x).div_by(x)
    return lhs == rhs, f"e(u(x)) = {lhs}, e(x)/x = {rhs}"


def _chk_distributivity(b, ops, rng, params):
    x, y, z = b
    lhs = ops.add(ops.mul(x, y), ops.mul(x, z))
    defect = ops.dist_defect(x, y, z)
    rhs = ops.add(ops.mul(x, ops.add(y, z)), magnitude_coset(defect))
    return ops.eq(lhs, rhs), f"xy+xz = {lhs}, x(y+z) + defect = {rhs} (defect {defect})"


def _chk_neg_of_product(b, ops, rng, params):
    lhs = ops.neg(ops.mul(b[0], b[1]))
    rhs = ops.mul(ops.neg(b[0]), b[1])
    return ops.eq(lhs, rhs), f"-(xy) = {lhs}, (-x)y = {rhs}"


def _chk_zero_neutral(b, ops, rng, params):
    out = ops.add(EN_ZERO, b[0])
    return ops.eq(out, b[0]), f"{{0}} + x = {out} differs from x = {b[0]}"


def _chk_one_neutral(b, ops, rng, params):
    out = ops.mul(EN_ONE, b[0])
    return ops.eq(out, b[0]), f"{{1}}x = {out} differs from x = {b[0]}"


def _chk_max_absorbing(b, ops, rng, params):
    top = magnitude_coset(MAG_ALL)
    out = ops.add(ops.e_coset(b[0]), top)
    return ops.eq(out, top), f"e(x) + F = {out}"


def _chk_nontrivial_magnitude(b, ops, rng, params):
    w = magnitude_coset(INFINITESIMALS)
    m = ops.magnitude_of(w)
    return m != MAG_ZERO and m != MAG_ALL, f"witness {w} has magnitude {m}"


def _chk_decomposition(b, ops, rng, params):
    x = b[0]
    a = precise(x.rep)
    ok = ops.eq(ops.add(a, ops.e_coset(x)), x) and ops.magnitude_of(a) == MAG_ZERO
    return ok, f"a = {a}, a + e(x) = {ops.add(a, ops.e_coset(x))}"


def _separator(lo: Magnitude, hi: Magnitude) -> ExternalNumber:
    """A zeroless element strictly between two nested magnitudes."""
    if hi.is_ox:
        return precise(x_power(hi.index))
    if lo.is_ox:
        return precise(x_power(lo.index + 1))
    return EN_ONE


def _chk_separation(b, ops, rng, params):
    lo, hi = b
    if not (lo.is_magnitude and hi.is_magnitude and ops.lt_weak(lo, hi)):
        return True, ""
    z = _separator(lo.mag, hi.mag)
    if z.is_magnitude:
        return False, f"witness {z} is a magnitude"
    ok = ops.lt_weak(lo, z) and ops.lt_weak(z, hi)
    return ok, f"witness {z} does not satisfy {lo} < {z} < {hi}"


def _chk_representative_independence(b, ops, rng, params):
    x, y = b
    p = sample_member(rng, x.mag, params)
    q = sample_member(rng, y.mag, params)
    x2 = ExternalNumber(x.rep + p, x.mag)
    y2 = ExternalNumber(y.rep + q, y.mag)
    if not (ops.eq(x2, x) and ops.eq(y2, y)):
        return False, f"perturbed copies differ: {x2} vs {x}, {y2} vs {y}"
    if not ops.eq(ops.add(x2, y2), ops.add(x, y)):
        return False, f"sum changed under perturbation by ({p}, {q})"
    if not ops.eq(ops.mul(x2, y2), ops.mul(x, y)):
        return False, f"product changed under perturbation by ({p}, {q})"
    return True, ""


_MIRROR = {
    RelationClass.LESS_SEPARATED: RelationClass.GREATER_SEPARATED,
    RelationClass.GREATER_SEPARATED: RelationClass.LESS_SEPARATED,
    RelationClass.EQUAL: RelationClass.EQUAL,
    RelationClass.PROPER_SUBSET: RelationClass.PROPER_SUPERSET,
    RelationClass.PROPER_SUPERSET: RelationClass.PROPER_SUBSET,
}

_LEQ_CLASSES = (
    RelationClass.EQUAL,
    RelationClass.LESS_SEPARATED,
    RelationClass.PROPER_SUBSET,
)


def _chk_trichotomy(b, ops, rng, params):
    x, y = b
    rel = ops.classify(x, y)
    back = ops.classify(y, x)
    if back is not _MIRROR[rel]:
        return False, f"classify(x,y) = {rel.name} but classify(y,x) = {back.name}"
    if ops.leq(x, y) != (rel in _LEQ_CLASSES):
        return False, f"leq(x,y) inconsistent with {rel.name}"
    if ops.leq(y, x) != (back in _LEQ_CLASSES):
        return False, f"leq(y,x) inconsistent with {back.name}"
    # sampled set semantics: members confirm separation / containment
    for _ in range(3):
        xm = x.rep + sample_member(rng, x.mag, params)
        ym = y.rep + sample_member(rng, y.mag, params)
        if rel is RelationClass.LESS_SEPARATED and not xm < ym:
            return False, f"sampled members {xm} >= {ym} contradict separation"
        if rel is RelationClass.GREATER_SEPARATED and not ym < xm:
            return False, f"sampled members {ym} >= {xm} contradict separation"
        if rel in (RelationClass.EQUAL, RelationClass.PROPER_SUBSET) and (xm - y.rep) not in y.mag:
            return False, f"sampled member {xm} of x escapes y"
        if rel in (RelationClass.EQUAL, RelationClass.PROPER_SUPERSET) and (ym - x.rep) not in x.mag:
            return False, f"sampled member {ym} of y escapes x"
    return True, ""


def _chk_defect_is_magnitude(b, ops, rng, params):
    x, y, z = b
    e = ops.e_coset(x)
    defect_coset = ops.add(ops.mul(e, y), ops.mul(e, z))
    if not ops.eq(defect_coset, magnitude_coset(ops.magnitude_of(defect_coset))):
        return False, f"defect {defect_coset} is not a magnitude"
    if ops.dist_defect(x, y, z) != ops.magnitude_of(defect_coset):
        return False, "reported defect differs from e(x)y + e(x)z"
    lhs = ops.add(ops.mul(x, y), ops.mul(x, z))
    rhs = ops.add(ops.mul(x, ops.add(y, z)), defect_coset)
    return ops.eq(lhs, rhs), f"identity fails: {lhs} vs {rhs}"


def _chk_subfield(b, ops, rng, params):
    x, y, z = b
    if not ops.eq(ops.add(x, y), precise(x.rep + y.rep)):
        return False, "sum of precise elements is not the field sum"
    if not ops.eq(ops.mul(x, y), precise(x.rep * y.rep)):
        return False, "product of precise elements is not the field product"
    if not ops.eq(ops.inverse(x), precise(1 / x.rep)):
        return False, "inverse of a precise element is not the field inverse"
    lhs = ops.mul(x, ops.add(y, z))
    rhs = ops.add(ops.mul(x, y), ops.mul(x, z))
    return ops.eq(lhs, rhs), f"precise distributivity fails: {lhs} vs {rhs}"


# -- the catalogue ---------------------------------------------------------------


def _axiom(id, name, group, arity, check, generate=None):
    return Axiom(id, name, group, arity, generate or _gen_plain(arity), check)


AXIOMS: tuple[Axiom, ...] = (
    _axiom("A1", "add_associative", "addition", 3, _chk_add_assoc),
    _axiom("A2", "add_commutative", "addition", 2, _chk_add_comm),
    _axiom("A3", "add_neutral_unique", "addition", 1, _chk_add_neutral),
    _axiom("A4", "add_symmetric_element", "addition", 1, _chk_add_symmetric),
    _axiom("A5", "magnitude_of_sum_dichotomy", "addition", 2, _chk_mag_sum_dichotomy),
    _axiom("A6", "mul_associative", "multiplication", 3, _chk_mul_assoc),
    _axiom("A7", "mul_commutative", "multiplication", 2, _chk_mul_comm),
    _axiom("A8", "unity_unique", "multiplication", 1, _chk_unity_neutral, _gen_zeroless(1)),
    _axiom("A9", "inverse_element", "multiplication", 1, _chk_inverse, _gen_zeroless(1)),
    _axiom(
        "A10", "unity_of_product_dichotomy", "multiplication", 2,
        _chk_unity_dichotomy, _gen_zeroless(2),
    ),
    _axiom("A11", "order_reflexive", "order", 1, _chk_reflexive),
    _axiom("A12", "order_antisymmetric", "order", 2, _chk_antisymmetric, _gen_equalish_pair),
    _axiom("A13", "order_transitive", "order", 3, _chk_transitive, _gen_chain),
    _axiom("A14", "order_total", "order", 2, _chk_total),
    _axiom("A15", "order_add_compatible", "order", 3, _chk_add_monotone, _gen_sorted_pair_last(3)),
    _axiom("A16", "absorbed_below_magnitude", "order", 2, _chk_absorbed_below, _gen_absorbed_pair),
    _axiom(
        "A17", "order_mul_compatible", "order", 3,
        _chk_mul_monotone, _gen_positive_zeroless_then_sorted,
    ),
    _axiom("A18", "order_magnitude_scale_compatible", "order", 3, _chk_amplification, _gen_amplification),
    _axiom("A19", "magnitude_scale_is_magnitude", "mixed", 2, _chk_scale_is_magnitude),
    _axiom("A20", "magnitude_of_product", "mixed", 2, _chk_product_magnitude),
    _axiom("A21", "unity_magnitude", "mixed", 1, _chk_unity_magnitude, _gen_zeroless(1)),
    _axiom("A22", "distributivity", "mixed", 3, _chk_distributivity),
    _axiom("A23", "negation_of_product", "mixed", 2, _chk_neg_of_product),
    _axiom("A24", "exists_zero_neutral", "existence", 1, _chk_zero_neutral),
    _axiom("A25", "exists_one_unity", "existence", 1, _chk_one_neutral),
    _axiom("A26", "exists_absorbing_magnitude", "existence", 1, _chk_max_absorbing),
    _axiom("A27", "exists_nontrivial_magnitude", "existence", 0, _chk_nontrivial_magnitude),
    _axiom("A28", "exists_precise_decomposition", "existence", 1, _chk_decomposition),
    _axiom(
        "A29", "magnitudes_separated_by_element", "existence", 2,
        _chk_separation, _gen_magnitude_pair,
    ),
    _axiom(
        "T1", "representative_independence", "derived", 2, _chk_representative_independence,
    ),
    _axiom("T2", "coset_trichotomy", "derived", 2, _chk_trichotomy),
    _axiom("T3", "order_compat_addition", "derived", 3, _chk_add_monotone, _gen_sorted_pair_last(3)),
    _axiom(
        "T4", "order_compat_mul_zeroless", "derived", 3,
        _chk_mul_monotone, _gen_positive_zeroless_then_sorted,
    ),
    _axiom("T5", "order_compat_mul_magnitude", "derived", 3, _chk_amplification, _gen_amplification),
    _axiom("T6", "product_magnitude_identity", "derived", 2, _chk_product_magnitude),
    _axiom("T7", "distributivity_defect_is_magnitude", "derived", 3, _chk_defect_is_magnitude),
    _axiom("T8", "precise_subfield", "derived", 3, _chk_subfield, _gen_precise(3)),
)

_BY_ID = {ax.id: ax for ax in AXIOMS}
APPENDIX_IDS = tuple(ax.id for ax in AXIOMS if ax.id.startswith("A"))


def axiom_ids(include_derived: bool = False) -> tuple[str, ...]:
    if include_derived:
        return tuple(ax.id for ax in AXIOMS)
    return APPENDIX_IDS


# -- checking, auditing, shrinking ---------------------------------------------------


def _binding_key(axiom_id: str, binding) -> str:
    return f"check:{axiom_id}:" + "|".join(str(v) for v in binding)


def check_axiom(
    axiom_id: str,
    binding,
    ops: Ops = DEFAULT_OPS,
    params: GenParams = DEFAULT_PARAMS,
) -> CheckResult:
    """Evaluate one axiom on a concrete binding.

    Any internal sampling (challengers for uniqueness clauses, member
    samples) is seeded from the binding itself, so failing results
    re-evaluate deterministically.
    """
    try:
        axiom = _BY_ID[axiom_id]
    except KeyError:
        raise ValueError(f"unknown axiom id {axiom_id!r}") from None
    binding = tuple(binding)
    if len(binding) != axiom.arity:
        raise ValueError(f"{axiom_id} needs {axiom.arity} values, got {len(binding)}")
    rng = random.Random(_binding_key(axiom_id, binding))
    passed, detail = axiom.check(binding, ops, rng, params)
    return CheckResult(axiom_id, passed, binding, "" if passed else detail)


@dataclass(frozen=True)
class AxiomOutcome:
    axiom_id: str
    name: str
    passed: int
    failed: int
    counterexample: Optional[CheckResult]

    def to_json(self) -> dict:
        return {
            "id": self.axiom_id,
            "name": self.name,
            "pass": self.passed,
            "fail": self.failed,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }


@dataclass(frozen=True)
class AuditReport:
    seed: int
    trials: int
    outcomes: tuple[AxiomOutcome, ...]

    @property
    def all_passed(self) -> bool:
        return all(o.failed == 0 for o in self.outcomes)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "axioms": [o.to_json() for o in self.outcomes],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def audit(
    seed: int = 0,
    trials: int = 100,
    params: GenParams = DEFAULT_PARAMS,
    axioms: Optional[list[str]] = None,
    ops: Ops = DEFAULT_OPS,
) -> AuditReport:
    """Run every selected axiom on `trials` random bindings.

    Deterministic in (seed, trials, params, selection): each trial draws
    from its own generator split off the master seed, so the report does
    not depend on evaluation order.  The first failing binding per axiom
    is shrunk and reported.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    selected = list(APPENDIX_IDS) if axioms is None else list(axioms)
    outcomes = []
    for axiom_id in selected:
        try:
            axiom = _BY_ID[axiom_id]
        except KeyError:
            raise ValueError(f"unknown axiom id {axiom_id!r}") from None
        passed = failed = 0
        counterexample = None
        for trial in range(trials):
            rng = random.Random(f"{seed}:{axiom.id}:{trial}")
            binding = axiom.generate(rng, params, ops)
            result = check_axiom(axiom.id, binding, ops, params)
            if result.passed:
                passed += 1
            else:
                failed += 1
                if counterexample is None:
                    counterexample = shrink(result, ops, params)
        outcomes.append(AxiomOutcome(axiom.id, axiom.name, passed, failed, counterexample))
    return AuditReport(seed, trials, tuple(outcomes))


# -- shrinking ------------------------------------------------------------------------


def _rf_size(f: RatFun) -> int:
    bits = 0
    for c in f.num.coeffs + f.den.coeffs:
        if c != 0:
            bits += 1 + abs(int(c.numerator)).bit_length() + int(c.denominator).bit_length()
    return bits + len(f.num.coeffs) + len(f.den.coeffs)


def _mag_size(m: Magnitude) -> int:
    if m.is_zero:
        return 0
    if m.is_all:
        return 1000
    return 1 + abs(m.index)


def _en_size(a: ExternalNumber) -> int:
    return _rf_size(a.rep) + _mag_size(a.mag)


_SIMPLE_VALUES = (
    EN_ZERO,
    EN_ONE,
    precise(-1),
    magnitude_coset(INFINITESIMALS),
    magnitude_coset(ox(0)),
    ExternalNumber(RatFun(1), INFINITESIMALS),
    precise(x_power(1)),
)


def _shrink_candidates(a: ExternalNumber):
    yield from _SIMPLE_VALUES
    mag = a.mag
    if mag.is_all:
        yield ExternalNumber(a.rep, ox(0))
    elif mag.is_ox:
        n = mag.index
        if n != 0:
            yield ExternalNumber(a.rep, ox(n - (1 if n > 0 else -1)))
        yield ExternalNumber(a.rep, MAG_ZERO)
    num, den = a.rep.num, a.rep.den
    nonzero = [i for i, c in enumerate(num.coeffs) if c != 0]
    if len(nonzero) > 1:
        for i in nonzero:
            coeffs = list(num.coeffs)
            coeffs[i] = Q(0)
            yield ExternalNumber(RatFun(Poly(coeffs), den), mag)
    if den.degree > 0:
        yield ExternalNumber(RatFun(num), mag)
    for i in nonzero:
        c = num.coeffs[i]
        if c != 1 and c != -1:
            coeffs = list(num.coeffs)
            coeffs[i] = Q(1) if c > 0 else Q(-1)
            yield ExternalNumber(RatFun(Poly(coeffs), den), mag)


def _moves(binding):
    """Candidate simplifications: per-position replacements plus paired
    (v, -v) substitutions, which preserve cancellation-style failures."""
    for i, current in enumerate(binding):
        for candidate in _shrink_candidates(current):
            if candidate == current:
                continue
            trial = list(binding)
            trial[i] = candidate
            yield trial
    for i in range(len(binding)):
        for j in range(len(binding)):
            if i == j:
                continue
            for v in (EN_ONE, precise(x_power(1))):
                trial = list(binding)
                trial[i], trial[j] = v, -v
                yield trial


def shrink(
    result: CheckResult,
    ops: Ops = DEFAULT_OPS,
    params: GenParams = DEFAULT_PARAMS,
) -> CheckResult:
    """Greedily simplify a failing binding while it keeps failing.

    Moves lower polynomial degrees, shrink coefficients and bring magnitude
    indices toward 0; each accepted step strictly decreases a size measure,
    so the loop terminates at a locally minimal counterexample.
    """
    if result.passed:
        raise ValueError("shrink requires a failing check result")
    binding = list(result.binding)
    total = sum(_en_size(v) for v in binding)
    improved = True
    while improved:
        improved = False
        for trial in _moves(binding):
            trial_size = sum(_en_size(v) for v in trial)
            if trial_size >= total:
                continue
            if not check_axiom(result.axiom, trial, ops, params).passed:
                binding, total = trial, trial_size
                improved = True
                break
    return check_axiom(result.axiom, binding, ops, params)


def existence_witnesses() -> dict:
    """The canonical witnesses for the existence axioms A24..A27."""
    return {
        "additive_neutral": EN_ZERO,
        "multiplicative_neutral": EN_ONE,
        "maximal_magnitude": MAG_ALL,
        "nontrivial_magnitude": INFINITESIMALS,
    }

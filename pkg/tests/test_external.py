"""Cosets: canonical construction, Minkowski arithmetic, operators, order."""

import random

import pytest
from hypothesis import given, settings

from extnum import (
    BOUNDED,
    EN_ONE,
    EN_ZERO,
    INFINITESIMALS,
    MAG_ALL,
    MAG_ZERO,
    ExternalNumber,
    Q,
    RatFun,
    RelationClass,
    X,
    distributivity_defect,
    magnitude_coset,
    ox,
    precise,
    x_power,
)
from extnum.axioms import gen_external, gen_zeroless, sample_member

from strategies import externals, zeroless_externals

OSLASH = magnitude_coset(INFINITESIMALS)


def en(rep, mag=MAG_ZERO):
    return ExternalNumber(rep, mag)


# -- construction -------------------------------------------------------------


def test_make_truncates_representative():
    a = en(3 + 1 / X, ox(-1))
    assert a.rep == RatFun(3) and a.mag == ox(-1)


def test_make_absorbs_members():
    a = en(1 / X ** 2, ox(-1))
    assert a.is_magnitude and a.rep == RatFun(0)


def test_make_precise():
    a = en(X)
    assert a.rep == X and a.mag == MAG_ZERO and a.is_zeroless


def test_make_all_forces_zero_rep():
    a = en(X ** 3 + 2, MAG_ALL)
    assert a.is_magnitude and a.rep == RatFun(0)


def test_representative_independence_of_construction():
    rng = random.Random(23)
    for _ in range(300):
        a = gen_external(rng)
        p = sample_member(rng, a.mag)
        assert en(a.rep + p, a.mag) == a


def test_zeroless_consistency():
    rng = random.Random(29)
    for _ in range(300):
        a = gen_external(rng)
        if a.is_zeroless:
            assert a.rep not in a.mag
            if a.mag.is_ox:
                # the gap between coset and magnitude is at least one degree
                assert a.mag.index - a.rep.degree <= -1


# -- equality ------------------------------------------------------------------


def test_eq_examples():
    assert en(1, ox(-1)) == en(1 + 1 / X ** 2, ox(-1))
    assert magnitude_coset(BOUNDED) != OSLASH
    assert en(X) == en(X)


# -- addition -------------------------------------------------------------------


def test_add_absorbs_small_parts():
    assert en(X, BOUNDED) + en(1, ox(-1)) == en(X, BOUNDED)


def test_add_zero_neutral():
    rng = random.Random(31)
    for _ in range(100):
        a = gen_external(rng)
        assert a + EN_ZERO == a


def test_self_minus_self_is_magnitude():
    assert en(1, ox(-1)) + (-en(1, ox(-1))) == OSLASH
    rng = random.Random(37)
    for _ in range(100):
        a = gen_external(rng)
        assert a - a == magnitude_coset(a.mag)


def test_negation():
    assert -en(X, BOUNDED) == en(-X, BOUNDED)
    assert -magnitude_coset(ox(2)) == magnitude_coset(ox(2))
    rng = random.Random(41)
    for _ in range(100):
        a = gen_external(rng)
        assert -(-a) == a
        assert (-a).mag == a.mag


def test_additive_assembly_laws():
    rng = random.Random(43)
    for _ in range(200):
        a, b, c = (gen_external(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + magnitude_coset(a.mag) == a
        assert a + (-a) == magnitude_coset(a.mag)
        assert (a + b).mag in (a.mag, b.mag)
        assert (a + b).mag == a.mag + b.mag  # the magnitude operator is linear


# -- multiplication ----------------------------------------------------------------


def test_mul_examples():
    assert en(X, BOUNDED) * en(X, BOUNDED) == en(X ** 2, ox(1))
    assert OSLASH * EN_ONE == OSLASH
    rng = random.Random(47)
    for _ in range(50):
        b = gen_external(rng)
        assert EN_ZERO * b == EN_ZERO  # {0} annihilates, even against F
    assert EN_ZERO * magnitude_coset(MAG_ALL) == EN_ZERO


def test_mul_minkowski_soundness():
    rng = random.Random(53)
    for _ in range(200):
        a, b = gen_external(rng), gen_external(rng)
        s, p = a + b, a * b
        for _ in range(5):
            xa = a.rep + sample_member(rng, a.mag)
            xb = b.rep + sample_member(rng, b.mag)
            assert (xa + xb - s.rep) in s.mag
            assert (xa * xb - p.rep) in p.mag


def test_mul_representative_independence():
    rng = random.Random(59)
    for _ in range(200):
        a, b = gen_external(rng), gen_external(rng)
        a2 = en(a.rep + sample_member(rng, a.mag), a.mag)
        b2 = en(b.rep + sample_member(rng, b.mag), b.mag)
        assert a2 * b2 == a * b
        assert a2 + b2 == a + b


def test_magnitude_of_product_identity():
    alpha = en(X, BOUNDED)
    prod = alpha * alpha
    assert prod.mag == ox(1)
    assert alpha * magnitude_coset(alpha.mag) + alpha * magnitude_coset(alpha.mag) == magnitude_coset(ox(1))
    rng = random.Random(61)
    for _ in range(200):
        a, b = gen_external(rng), gen_external(rng)
        rhs = a * magnitude_coset(b.mag) + b * magnitude_coset(a.mag)
        assert rhs.is_magnitude
        assert (a * b).mag == rhs.mag


def test_negation_commutes_with_product():
    rng = random.Random(67)
    for _ in range(200):
        a, b = gen_external(rng), gen_external(rng)
        assert -(a * b) == (-a) * b == a * (-b)


# -- the magnitude operator ------------------------------------------------------------


def test_magnitude_operator_examples():
    assert en(X, BOUNDED).mag == BOUNDED
    assert magnitude_coset(MAG_ZERO).mag == MAG_ZERO
    assert EN_ZERO == magnitude_coset(MAG_ZERO)


# -- unity and inverse ------------------------------------------------------------------


def test_unity_examples():
    assert en(X, BOUNDED).unity() == en(1, ox(-1))
    assert en(5).unity() == EN_ONE
    alpha, beta = en(X, BOUNDED), en(1, ox(-2))
    assert (alpha * beta).unity() == alpha.unity() == en(1, ox(-1))


def test_unity_undefined_for_magnitudes():
    with pytest.raises(ValueError, match="unity"):
        magnitude_coset(BOUNDED).unity()


def test_inverse_examples():
    assert en(X, BOUNDED).inverse() == en(1 / X, ox(-2))
    assert en(1, ox(-1)).inverse() == en(1, ox(-1))
    assert en(2).inverse() == precise(Q(1, 2))


def test_inverse_undefined_for_magnitudes():
    with pytest.raises(ValueError, match="inverse"):
        EN_ZERO.inverse()


@settings(max_examples=100)
@given(zeroless_externals)
def test_multiplicative_operator_laws(a):
    u = a.unity()
    d = a.inverse()
    assert a * u == a
    assert a * d == u
    assert d.inverse() == a
    assert u.is_zeroless and d.is_zeroless
    assert u.mag == a.mag.div_by(a)  # e(u(x)) = e(x)/x
    assert d.mag == a.mag.scale(1 / (a.rep * a.rep))  # e(d(x)) = e(x)/x^2


def test_multiplicative_assembly_laws():
    rng = random.Random(71)
    for _ in range(200):
        a, b, c = (gen_zeroless(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        prod = a * b
        assert prod.is_zeroless
        assert prod.unity() in (a.unity(), b.unity())


def test_not_a_group():
    one_oslash = en(1, ox(-1))
    for n in range(-5, 6):
        assert en(1, ox(-1)) + en(-1, ox(n)) != EN_ZERO
        assert en(1, ox(n)) * one_oslash.inverse() != EN_ONE
    assert magnitude_coset(MAG_ALL) + en(-1, MAG_ZERO) != EN_ZERO


# -- order ---------------------------------------------------------------------------------


def test_classify_examples():
    assert en(1, ox(-1)).classify(en(2, ox(-1))) is RelationClass.LESS_SEPARATED
    assert en(1, ox(-1)).classify(magnitude_coset(BOUNDED)) is RelationClass.PROPER_SUBSET
    a = en(X, ox(2))
    assert a.classify(a) is RelationClass.EQUAL


def test_leq_examples():
    assert not magnitude_coset(BOUNDED) <= en(1, ox(-1))
    assert en(1, ox(-1)) <= magnitude_coset(BOUNDED)
    a = en(X + 1, ox(-3))
    assert a <= a


def test_lt_separated_examples():
    assert en(1, ox(-1)).lt_separated(en(2, ox(-1)))
    assert not en(1, ox(-1)).lt_separated(magnitude_coset(BOUNDED))
    assert not en(1, ox(-1)).lt_separated(en(1, ox(-1)))


def test_order_reverses_under_scaling_by_magnitude():
    # -omega < -1, while the infinitesimals send both to magnitudes:
    # oslash*(-1) <= oslash*(-omega)
    omega = en(X)
    assert precise(-X) <= precise(-1)
    lhs = OSLASH * precise(-1)
    rhs = OSLASH * (-omega)
    assert lhs == OSLASH and rhs == magnitude_coset(BOUNDED)
    assert lhs <= rhs


def test_order_laws_random():
    rng = random.Random(73)
    for _ in range(300):
        a, b, c = (gen_external(rng) for _ in range(3))
        assert a <= a
        assert a <= b or b <= a
        if a <= b and b <= a:
            assert a == b
        lo, mid, hi = sorted((a, b, c))
        assert lo <= mid <= hi and lo <= hi
        if a <= b:
            assert a + c <= b + c


def test_order_compat_with_multiplication():
    rng = random.Random(79)
    for _ in range(300):
        a = gen_zeroless(rng)
        if not magnitude_coset(a.mag).lt_separated(a):
            a = -a
        b, c = sorted((gen_external(rng), gen_external(rng)))
        assert a * b <= a * c


def test_order_compat_with_magnitude_factor():
    rng = random.Random(83)
    for _ in range(300):
        e = magnitude_coset(gen_external(rng).mag)
        b = gen_external(rng)
        if not magnitude_coset(b.mag) <= b:
            b = -b
        c = b + abs_nonneg(gen_external(rng))
        assert e * b <= e * c


def abs_nonneg(v):
    return v if magnitude_coset(v.mag) <= v else -v


def test_magnitudes_are_nonnegative_and_absorb_below():
    rng = random.Random(89)
    for _ in range(200):
        x, y = gen_external(rng), gen_external(rng)
        e = magnitude_coset(x.mag)
        assert EN_ZERO <= e
        if y + e == e:
            assert y <= e and -y <= e


# -- adapted distributivity ----------------------------------------------------------------


def test_dist_defect_examples():
    assert distributivity_defect(OSLASH, EN_ONE, -EN_ONE) == INFINITESIMALS
    assert distributivity_defect(en(X), en(X ** 2), en(5)) == MAG_ZERO
    assert distributivity_defect(en(1, ox(-1)), en(X), en(X ** 2)) == ox(1)


def test_plain_distributivity_fails():
    # oslash*(1 - 1) = {0} but oslash*1 - oslash*1 = oslash
    assert OSLASH * (EN_ONE - EN_ONE) == EN_ZERO
    assert OSLASH * EN_ONE - OSLASH * EN_ONE == OSLASH


def test_adapted_distributivity_random():
    rng = random.Random(97)
    for _ in range(300):
        a, b, c = (gen_external(rng) for _ in range(3))
        defect = distributivity_defect(a, b, c)
        assert isinstance(defect.rank, (int, float))
        assert a * b + a * c == a * (b + c) + magnitude_coset(defect)


# -- subgroup structure ----------------------------------------------------------------------


def test_fixed_magnitude_cosets_form_group():
    rng = random.Random(101)
    for mag in (MAG_ZERO, INFINITESIMALS, ox(3)):
        e = magnitude_coset(mag)
        for _ in range(50):
            a = en(sample_random(rng), mag)
            b = en(sample_random(rng), mag)
            assert (a + b).mag == mag
            assert a + e == a
            assert a + (-a) == e


def sample_random(rng):
    from extnum.axioms import random_ratfun

    return random_ratfun(rng, allow_zero=True)


def test_fixed_unity_zeroless_form_group():
    rng = random.Random(103)
    for rel in (-1, -3):
        for _ in range(50):
            f = nonzero(rng)
            g = nonzero(rng)
            a = en(f, ox(int(f.degree) + rel))
            b = en(g, ox(int(g.degree) + rel))
            u = a.unity()
            assert b.unity() == u
            assert (a * b).unity() == u
            assert a * u == a
            assert a * a.inverse() == u
            assert a.inverse().unity() == u


def nonzero(rng):
    from extnum.axioms import random_ratfun

    return random_ratfun(rng, allow_zero=False)


def test_precise_subfield_matches_field_arithmetic():
    rng = random.Random(107)
    for _ in range(200):
        f, g = nonzero(rng), nonzero(rng)
        assert precise(f) + precise(g) == precise(f + g)
        assert precise(f) * precise(g) == precise(f * g)
        assert precise(f).inverse() == precise(1 / f)
        assert precise(f) / precise(g) == precise(f / g)
        h = nonzero(rng)
        assert precise(f) * (precise(g) + precise(h)) == precise(f) * precise(g) + precise(f) * precise(h)


# -- rendering and JSON --------------------------------------------------------------------------


def test_display_examples():
    assert str(en(3 + 1 / X, ox(-1))) == "3 + O(x^-1)"
    assert str(magnitude_coset(BOUNDED)) == "O(1)"
    assert str(en(X)) == "x"
    assert str(EN_ZERO) == "0"
    assert str(magnitude_coset(MAG_ALL)) == "all"
    assert str(en(X + 1, ox(-1))) == "x + 1 + O(x^-1)"


def test_json_form():
    assert en(3 + 1 / X, ox(-1)).to_json() == {"rep": "3", "mag": {"kind": "ox", "n": -1}}
    assert en(X).to_json() == {"rep": "x", "mag": {"kind": "zero"}}
    assert magnitude_coset(MAG_ALL).to_json() == {"rep": "0", "mag": {"kind": "all"}}


@settings(max_examples=100)
@given(externals)
def test_hash_consistent_with_eq(a):
    assert hash(a) == hash(ExternalNumber(a.rep, a.mag))

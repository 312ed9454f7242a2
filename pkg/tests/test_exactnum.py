"""Contracts of the exact-scalar layer: soundness, width, refinement, round trips."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lpiso.exactnum import (
    BudgetExceeded,
    ComplexInterval,
    Dyadic,
    DyadicInterval,
    Exponent,
    GaussianRational,
    NoSurvivorError,
    abs_pow,
    abs_pow_box,
    arctan_interval,
    format_fraction,
    format_gaussian,
    format_interval,
    integer_root_floor,
    interval_div,
    parse_fraction,
    parse_gaussian,
    parse_interval,
    pi_interval,
    pow_fraction,
    pow_interval,
    zero_find,
)

P1 = Exponent(1)
P32 = Exponent(F(3, 2))
P2 = Exponent(2)
P3 = Exponent(3)


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def root_bounds(x: F, c: int, k: int):
    """x^(1/c) bracketed to 2^-k by integer Newton roots (no exp/ln involved)."""
    scaled = x * F(2) ** (c * k)
    lo = F(integer_root_floor(scaled.numerator // scaled.denominator, c), 2**k)
    hi = F(integer_root_floor(scaled.numerator // scaled.denominator + 1, c) + 1, 2**k)
    return lo, hi


def oracle_pow_bounds(x: F, alpha: F, k: int):
    """Bracket x^alpha via x^a then a c-th root, all integer arithmetic."""
    y = x ** alpha.numerator
    return root_bounds(y, alpha.denominator, k)


def oracle_arctan_bounds(x: F, k: int):
    """arctan by alternating partial sums with the first-omitted-term bound.

    Only valid for |x| <= 1/2 (used for the pi/4 value via the 1/5, 1/239
    decomposition would be overkill; tests needing arctan(1) freeze spec
    bounds instead).
    """
    assert abs(x) <= F(1, 2)
    total = F(0)
    term = x
    j = 0
    while abs(term) / (2 * j + 1) > F(1, 2) ** (k + 2):
        total += (-1) ** j * term / (2 * j + 1)
        j += 1
        term *= x * x
    bound = abs(term) / (2 * j + 1)
    return total - bound, total + bound


# ---------------------------------------------------------------------------
# scalars and serialization
# ---------------------------------------------------------------------------

def test_gaussian_arithmetic():
    z = GaussianRational(F(1, 2), F(3, 4))
    w = GaussianRational(F(-2), F(1, 3))
    assert (z + w) - w == z
    assert z * w == GaussianRational(F(1, 2) * F(-2) - F(3, 4) * F(1, 3),
                                     F(1, 2) * F(1, 3) + F(3, 4) * F(-2))
    assert (z / w) * w == z
    assert z.conjugate().conjugate() == z
    assert z.abs_sq() == F(1, 4) + F(9, 16)


def test_unit_modulus_detection():
    assert GaussianRational(F(3, 5), F(4, 5)).is_unit_modulus()
    assert GaussianRational(0, -1).is_unit_modulus()
    assert not GaussianRational(F(1, 2), F(1, 2)).is_unit_modulus()


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_gaussian_round_trip(re, im):
    z = GaussianRational(re, im)
    assert parse_gaussian(format_gaussian(z)) == z


@given(st.fractions(max_denominator=1000))
def test_fraction_round_trip(x):
    assert parse_fraction(format_fraction(x)) == x


def test_exponent_conjugate():
    assert Exponent(1).q is None
    assert Exponent(2).q == 2
    assert Exponent(F(3, 2)).q == 3
    assert Exponent(3).q == F(3, 2)
    assert Exponent(2).is_two and not Exponent(F(3, 2)).is_two
    with pytest.raises(ValueError):
        Exponent(F(1, 2))


# ---------------------------------------------------------------------------
# dyadics and intervals
# ---------------------------------------------------------------------------

@given(st.fractions(max_denominator=10**6), st.integers(min_value=0, max_value=40))
def test_dyadic_directed_rounding(x, k):
    lo = Dyadic.from_fraction_floor(x, k)
    hi = Dyadic.from_fraction_ceil(x, k)
    assert lo.to_fraction() <= x <= hi.to_fraction()
    assert hi.to_fraction() - lo.to_fraction() <= F(1, 2**k)


@given(st.integers(min_value=-10**9, max_value=10**9),
       st.integers(min_value=-40, max_value=20))
def test_dyadic_decimal_round_trip(m, e):
    d = Dyadic(m, e)
    assert Dyadic.from_decimal(d.to_decimal()).to_fraction() == d.to_fraction()


def test_interval_serialization_round_trip():
    iv = DyadicInterval(Dyadic(-5, -3), Dyadic(7, -2))
    parsed = parse_interval(format_interval(iv))
    assert parsed.to_fractions() == iv.to_fractions()


_small_fr = st.fractions(min_value=-8, max_value=8, max_denominator=64)


@given(_small_fr, _small_fr, _small_fr, _small_fr, _small_fr, _small_fr)
def test_interval_mul_soundness(a, b, c, d, x, y):
    lo1, hi1 = min(a, b), max(a, b)
    lo2, hi2 = min(c, d), max(c, d)
    x = min(max(x, lo1), hi1)
    y = min(max(y, lo2), hi2)
    iv1 = DyadicInterval(Dyadic.from_fraction_floor(lo1, 20), Dyadic.from_fraction_ceil(hi1, 20))
    iv2 = DyadicInterval(Dyadic.from_fraction_floor(lo2, 20), Dyadic.from_fraction_ceil(hi2, 20))
    assert (iv1 * iv2).contains(x * y)
    assert (iv1 + iv2).contains(x + y)
    assert (iv1 - iv2).contains(x - y)


def test_interval_div():
    num = DyadicInterval.from_fraction(F(1))
    den = DyadicInterval(Dyadic.from_fraction_floor(F(1, 3), 30), Dyadic.from_fraction_ceil(F(1, 3), 30))
    q = interval_div(num, den, 30)
    assert q.contains(F(3))
    with pytest.raises(ZeroDivisionError):
        interval_div(num, DyadicInterval(Dyadic(-1, -4), Dyadic(1, -4)), 10)


def test_checked_constructor_rejects_disorder():
    with pytest.raises(ValueError):
        DyadicInterval.checked(Dyadic(1), Dyadic(0))


# ---------------------------------------------------------------------------
# abs_pow
# ---------------------------------------------------------------------------

def test_abs_pow_trivial_exact():
    one = abs_pow(GaussianRational(1), P1, 10)
    assert one.contains(F(1)) and one.width() == 0
    two = abs_pow(GaussianRational(1, 1), P2, 10)
    assert two.contains(F(2)) and two.width() == 0


def test_abs_pow_sqrt2_frozen_bounds():
    iv = abs_pow(GaussianRational(1, 1), P1, 20)
    lo, hi = root_bounds(F(2), 2, 30)
    assert iv.contains(lo) or iv.lo.to_fraction() >= lo
    assert lo <= iv.lo.to_fraction() and iv.hi.to_fraction() <= hi or iv.width_leq(20)
    # frozen decimal window
    assert F("1.41421") < iv.lo.to_fraction() and iv.hi.to_fraction() < F("1.41422")
    assert iv.width_leq(20)


@given(st.fractions(min_value=-9, max_value=9, max_denominator=9),
       st.fractions(min_value=-9, max_value=9, max_denominator=9),
       st.sampled_from([F(1), F(3, 2), F(2), F(3), F(5, 2)]),
       st.integers(min_value=4, max_value=28))
@settings(max_examples=60, deadline=None)
def test_abs_pow_soundness_and_width(re, im, p, k):
    z = GaussianRational(re, im)
    iv = abs_pow(z, Exponent(p), k)
    assert iv.width_leq(k)
    lo, hi = oracle_pow_bounds(z.abs_sq(), p / 2, 40)
    assert iv.lo.to_fraction() <= hi and lo <= iv.hi.to_fraction()
    # the true value sits in both enclosures, so they must overlap around it
    assert iv.contains(lo) or iv.contains(hi) or (lo <= iv.lo.to_fraction() and iv.hi.to_fraction() <= hi) \
        or (iv.lo.to_fraction() <= lo and hi <= iv.hi.to_fraction())


@given(st.fractions(min_value=-6, max_value=6, max_denominator=8),
       st.fractions(min_value=-6, max_value=6, max_denominator=8),
       st.integers(min_value=4, max_value=20), st.integers(min_value=4, max_value=20))
@settings(max_examples=40, deadline=None)
def test_abs_pow_monotone_refinement(re, im, k1, k2):
    z = GaussianRational(re, im)
    a = abs_pow(z, P32, k1)
    b = abs_pow(z, P32, k2)
    assert a.intersects(b)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=6),
       st.fractions(min_value=-5, max_value=5, max_denominator=6),
       st.fractions(min_value=-5, max_value=5, max_denominator=6),
       st.fractions(min_value=-5, max_value=5, max_denominator=6))
@settings(max_examples=30, deadline=None)
def test_abs_pow_multiplicativity(re1, im1, re2, im2):
    z, w = GaussianRational(re1, im1), GaussianRational(re2, im2)
    k = 16
    prod = abs_pow(z * w, P32, k)
    parts = abs_pow(z, P32, k) * abs_pow(w, P32, k)
    assert prod.intersects(parts)


# ---------------------------------------------------------------------------
# arctan
# ---------------------------------------------------------------------------

def test_arctan_zero_exact():
    iv = arctan_interval(F(0), 30)
    assert iv.width() == 0 and iv.contains(F(0))


def test_arctan_one_frozen_bounds():
    iv = arctan_interval(F(1), 20)
    assert iv.width_leq(20)
    assert F("0.785397") < iv.lo.to_fraction() and iv.hi.to_fraction() < F("0.785399")


def test_arctan_odd_symmetry():
    a = arctan_interval(F(1), 20)
    b = arctan_interval(F(-1), 20)
    assert b.lo.to_fraction() == -a.hi.to_fraction()
    assert b.hi.to_fraction() == -a.lo.to_fraction()


@given(st.fractions(min_value=-F(1, 2), max_value=F(1, 2), max_denominator=100),
       st.integers(min_value=6, max_value=30))
@settings(max_examples=50, deadline=None)
def test_arctan_soundness_small_args(x, k):
    iv = arctan_interval(x, k)
    assert iv.width_leq(k)
    lo, hi = oracle_arctan_bounds(x, k + 6)
    assert iv.lo.to_fraction() <= hi and lo <= iv.hi.to_fraction()


def test_arctan_monotone_in_argument():
    values = [arctan_interval(F(n, 7), 24) for n in range(-20, 21, 3)]
    for a, b in zip(values, values[1:]):
        assert a.lo.to_fraction() < b.hi.to_fraction()


def test_pi_interval():
    iv = pi_interval(40)
    assert F("3.14159265358") < iv.lo.to_fraction()
    assert iv.hi.to_fraction() < F("3.14159265359")


# ---------------------------------------------------------------------------
# pow on intervals
# ---------------------------------------------------------------------------

def test_pow_fraction_exact_rational_root():
    iv = pow_fraction(F(8), F(2, 3), 20)
    assert iv.contains(F(4)) and iv.width() == 0
    iv = pow_fraction(F(9, 4), F(1, 2), 20)
    assert iv.contains(F(3, 2)) and iv.width() == 0


def test_pow_interval_monotone_envelope():
    X = DyadicInterval(Dyadic(1), Dyadic(4))
    iv = pow_interval(X, F(1, 2), 20)
    assert iv.contains(F(1)) and iv.contains(F(2)) and iv.contains(F(3, 2))
    assert not iv.contains(F(5, 2))


def test_abs_pow_box_contains_pointwise_values():
    box = ComplexInterval(
        DyadicInterval(Dyadic(1), Dyadic(3, -1)),  # re in [1, 1.5]
        DyadicInterval(Dyadic(0), Dyadic(1, -1)),  # im in [0, 0.5]
    )
    iv = abs_pow_box(box, P32, 16)
    for z in (GaussianRational(1), GaussianRational(F(3, 2), F(1, 2))):
        lo, hi = oracle_pow_bounds(z.abs_sq(), F(3, 4), 30)
        assert iv.lo.to_fraction() <= hi and lo <= iv.hi.to_fraction()


# ---------------------------------------------------------------------------
# zero_find
# ---------------------------------------------------------------------------

def affine(shift: GaussianRational):
    def func(box, prec):
        return box - ComplexInterval.point(shift)
    return func


def test_zero_find_affine():
    z = zero_find(affine(GaussianRational(1)), F(2), 10)
    assert (z - GaussianRational(1)).abs_sq() <= F(1, 2**20)


def test_zero_find_center():
    z = zero_find(affine(GaussianRational(0)), F(1), 10)
    assert z.abs_sq() <= F(1, 2**20)


def test_zero_find_complex_target():
    target = GaussianRational(F(-3, 4), F(5, 8))
    z = zero_find(affine(target), F(2), 12)
    assert (z - target).abs_sq() <= F(1, 2**24)


def test_zero_find_no_survivor():
    def never_zero(box, prec):
        return DyadicInterval(Dyadic(1), Dyadic(2))
    with pytest.raises(NoSurvivorError):
        zero_find(never_zero, F(1), 8)


def test_zero_find_budget_exceeded():
    def always_ambiguous(box, prec):
        return DyadicInterval(Dyadic(-1), Dyadic(1))
    with pytest.raises(BudgetExceeded):
        zero_find(always_ambiguous, F(1), 8, depth_budget=5)


def test_integer_root_floor():
    assert integer_root_floor(0, 3) == 0
    assert integer_root_floor(26, 3) == 2
    assert integer_root_floor(27, 3) == 3
    assert integer_root_floor(2**60, 2) == 2**30
    big = 12345678901234567890
    r = integer_root_floor(big, 5)
    assert r**5 <= big < (r + 1) ** 5

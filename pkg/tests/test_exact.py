"""Exact surd arithmetic: ordering, rationality, and integer cutoffs."""

from fractions import Fraction

import pytest

from chroma.exact import Surd, max_int_le, min_int_ge


def test_rational_surd_roundtrip():
    s = Surd.rational(Fraction(7, 3))
    assert s.is_rational()
    assert s.exact_rational() == Fraction(7, 3)
    assert s.cmp(Fraction(7, 3)) == 0
    assert s > 2 and s < 3


def test_float_threshold_uses_decimal_reading():
    # 0.1 must mean exactly 1/10, not the binary double nearest to it.
    assert Surd.rational(0.1).exact_rational() == Fraction(1, 10)


def test_sqrt2_ordering_is_exact():
    s = Surd.sqrt(1, 2)  # sqrt(2) = 1.41421356...
    assert s > Fraction(141421356, 10**8)
    assert s < Fraction(141421357, 10**8)
    assert not s.is_rational()
    with pytest.raises(ValueError):
        s.exact_rational()


def test_negative_coefficient_branch():
    s = Surd.sqrt(-1, 2, shift=2)  # 2 - sqrt(2) = 0.58578...
    assert s > Fraction(58578, 10**5)
    assert s < Fraction(58579, 10**5)
    assert s.cmp(1) < 0 and s.cmp(0) > 0


def test_perfect_square_collapses_to_rational():
    s = Surd.sqrt(3, 4)  # 3*sqrt(4) = 6
    assert s.is_rational()
    assert s.exact_rational() == 6
    assert s.cmp(6) == 0


def test_scaled_and_shifted():
    s = Surd.sqrt(2, 3, shift=1)          # 1 + 2*sqrt(3)
    t = s.scaled(Fraction(1, 2)).shifted(-1)  # sqrt(3) - 1/2 = 1.2320508...
    assert t > Fraction(12320, 10**4)
    assert t < Fraction(12321, 10**4)


def test_min_int_ge_and_max_int_le():
    root2 = Surd.sqrt(1, 2)
    assert min_int_ge(root2, 0, 10) == 2
    assert max_int_le(root2, 0, 10) == 1
    exact6 = Surd.sqrt(3, 4)
    assert min_int_ge(exact6, 0, 10) == 6
    assert max_int_le(exact6, 0, 10) == 6
    neg = Surd.rational(Fraction(-3, 2))
    assert min_int_ge(neg, 0, 10) == 0     # clamped to the range floor
    assert max_int_le(neg, 0, 10) == -1    # nothing in range: lo - 1
    big = Surd.rational(11)
    assert min_int_ge(big, 0, 10) == 11    # nothing in range: hi + 1
    assert max_int_le(big, 0, 10) == 10


def test_cmp_matches_float_on_random_surds(rng):
    for _ in range(500):
        a = Fraction(int(rng.integers(-50, 50)), int(rng.integers(1, 20)))
        b = Fraction(int(rng.integers(-50, 50)), int(rng.integers(1, 20)))
        u = int(rng.integers(0, 60))
        x = Fraction(int(rng.integers(-200, 200)), int(rng.integers(1, 20)))
        s = Surd(a, b, u)
        want = float(a) + float(b) * u**0.5 - float(x)
        if abs(want) < 1e-9:
            continue  # skip float ties; exactness is checked elsewhere
        assert s.cmp(x) == (1 if want > 0 else -1)

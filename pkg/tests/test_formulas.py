from fractions import Fraction

import pytest

from sturmian.exact import GOLDEN_ANGLE, SQRT5, convergent_denominators, convergents, frac_part
from sturmian.exceptions import ArithmeticDomainError, ConvergentError, PreconditionError
from sturmian.formulas import (
    CaseTag,
    guaranteed_exponent,
    k_max,
    k_mn,
    k_prime,
    period_for_exponent,
    power_exists_at,
    power_positions,
    repetition_extension,
    three_distance_lengths,
    unique_extreme_factor,
)
from sturmian.oracle import has_abelian_period, max_power_at
from sturmian.words import Convention, SturmianSpec, Weight, partition, prefix
from tests.conftest import SQRT3_ANGLE

TABLE_KM = [2, 4, 6, 2, 11, 3, 3, 17, 2, 5, 4, 2, 29, 2, 3, 8, 2, 8, 3, 2, 46]
TABLE_K3N = [4, 1, 5, 3, 1, 4, 2, 6, 3, 1, 5, 2, 1, 4, 1, 6, 3, 1, 5, 2, 6]
TABLE_K10N = [2, 4, 1, 2, 5, 1, 3, 1, 2, 4, 1, 3, 5, 1, 4, 1, 2, 4, 1, 3, 1]
TABLE_KMI = [1, 2, 3, 3, 4, 4, 4, 4, 4, 4]


def _oracle_specs(alpha):
    return [
        SturmianSpec.characteristic(alpha),
        SturmianSpec(alpha, 0, 0, Convention.ZERO_IN_B),
        SturmianSpec(alpha, 0, 0, Convention.ZERO_IN_A),
        SturmianSpec(alpha, Fraction(1, 3), 0),
        SturmianSpec(alpha, 0, -12, Convention.ZERO_IN_B),
        SturmianSpec(alpha, 0, -12, Convention.ZERO_IN_A),
    ]


def test_k_max_table():
    """Test maximum exponents for m = 1..21 on the golden angle"""
    assert [k_max(GOLDEN_ANGLE, m) for m in range(1, 22)] == TABLE_KM


def test_k_max_sqrt3():
    """Test k_max at a convergent denominator of (sqrt(3) - 1)/2"""
    assert k_max(SQRT3_ANGLE, 8) == 13


def test_k_max_rejects_rational_angle():
    """Test the angle check on closed forms"""
    with pytest.raises(ArithmeticDomainError, match=r"irrational"):
        k_max(Fraction(1, 2), 3)


def test_power_positions(fib_spec):
    """Test the first starting positions of 4-powers of period 2 and 6-powers of period 3"""
    assert power_positions(fib_spec, 2, 4, 5) == [12, 33, 46, 67, 88]
    assert power_positions(fib_spec, 3, 6, 9) == [7, 15, 20, 28, 41, 49, 54, 62, 70]


def test_power_exists_at_zero_point():
    """Test the x = 0 case where 2*{alpha} > 1 rules out a square"""
    spec = SturmianSpec(GOLDEN_ANGLE, 0, 0, Convention.ZERO_IN_B)
    assert prefix(spec, 2) == "ba"
    assert not power_exists_at(spec, 0, 1, 2)


def test_power_exists_at_needs_exponent_two(fib_spec):
    """Test the exponent precondition"""
    with pytest.raises(PreconditionError, match=r"at least 2"):
        power_exists_at(fib_spec, 0, 2, 1)


def test_k_mn_table(fib_spec):
    """Test maximum exponents by position for m = 3 and m = 10"""
    assert [k_mn(fib_spec, 3, n).k for n in range(21)] == TABLE_K3N
    assert [k_mn(fib_spec, 10, n).k for n in range(21)] == TABLE_K10N


def test_k_mn_report_fields(fib_spec):
    """Test the generic case bookkeeping"""
    report = k_mn(fib_spec, 3, 1)
    assert report.k == 1
    assert report.case_tag is CaseTag.GENERIC
    assert report.k == max(report.A, report.B)
    assert report.gamma == 1
    assert report.r is None
    assert k_mn(SturmianSpec(GOLDEN_ANGLE, 0, 0, Convention.ZERO_IN_A), 3, 0).gamma == 0


def test_k_mn_case_tags():
    """Test the zero-point and exceptional tags"""
    spec = SturmianSpec(GOLDEN_ANGLE, 0, -12)
    assert k_mn(spec, 3, 12).case_tag is CaseTag.ZERO_POINT
    tags = {k_mn(spec, m, 0).case_tag for m in (1, 2, 3, 4, 6, 12)}
    assert tags <= {CaseTag.EXCEPTIONAL_BELOW, CaseTag.EXCEPTIONAL_AT_OR_ABOVE}


@pytest.mark.parametrize("alpha", [GOLDEN_ANGLE, SQRT3_ANGLE], ids=["golden", "sqrt3"])
def test_k_mn_matches_oracle(alpha):
    """Test k_mn against a direct block scan, both conventions and exceptional points"""
    for spec in _oracle_specs(alpha):
        for m in range(1, 13):
            for n in range(0, 40):
                report = k_mn(spec, m, n)
                assert report.k >= 1
                word = prefix(spec, m * (report.k + 2), start=n)
                assert max_power_at(word, 0, m) == report.k, (spec.describe(), m, n)


@pytest.mark.parametrize("alpha", [GOLDEN_ANGLE, SQRT3_ANGLE], ids=["golden", "sqrt3"])
def test_power_exists_at_agrees_with_k_mn(alpha):
    """Test that a k-power starts at n exactly when k <= k_mn"""
    for spec in _oracle_specs(alpha):
        for m in range(1, 9):
            for n in range(0, 30):
                k = k_mn(spec, m, n).k
                for exponent in range(2, k + 3):
                    assert power_exists_at(spec, n, m, exponent) == (exponent <= k), (spec.describe(), m, n)


def test_ordering_of_block_points(fib_spec):
    """Test that the block starting points of a power are naturally ordered"""
    for spec in (fib_spec, SturmianSpec(GOLDEN_ANGLE, Fraction(1, 3), 0)):
        for m in range(1, 13):
            delta = frac_part(m * GOLDEN_ANGLE)
            threshold = 1 - delta
            for n in range(60):
                k = k_mn(spec, m, n).k
                if k < 2:
                    continue
                points = [spec.point(n + i * m).value for i in range(k)]
                if delta < Fraction(1, 2):
                    assert points == sorted(points)
                    assert all(p < threshold for p in points)
                else:
                    assert points == sorted(points, reverse=True)
                    assert all(p > threshold for p in points)


def test_guaranteed_exponent_table():
    """Test guaranteed exponents of period 10"""
    assert [guaranteed_exponent(GOLDEN_ANGLE, 10, i) for i in range(10)] == TABLE_KMI


def test_guaranteed_exponent_bounds():
    """Test the anticipation range"""
    assert guaranteed_exponent(SQRT3_ANGLE, 7, 0) == 1
    with pytest.raises(PreconditionError, match=r"anticipation"):
        guaranteed_exponent(GOLDEN_ANGLE, 3, 4)


@pytest.mark.parametrize("alpha", [GOLDEN_ANGLE, SQRT3_ANGLE], ids=["golden", "sqrt3"])
def test_three_distance_lengths(alpha):
    """Test the predicted interval lengths at m_k - 1"""
    dens = [m for _, m in convergents(alpha, 13)]
    first = 3 if alpha == GOLDEN_ANGLE else 2
    for k in range(first, 12):
        assert three_distance_lengths(alpha, k) == partition(alpha, dens[k] - 1).lengths


def test_three_distance_precondition():
    """Test that m_(k-1) = 1 is rejected"""
    with pytest.raises(PreconditionError, match=r"m_\(k-1\) > 1"):
        three_distance_lengths(GOLDEN_ANGLE, 2)
    with pytest.raises(PreconditionError):
        three_distance_lengths(GOLDEN_ANGLE, 1)


def test_unique_extreme_factor():
    """Test the unique heavy or light factor at convergent denominators"""
    assert unique_extreme_factor(GOLDEN_ANGLE, 2) == ("aa", Weight.HEAVY)
    assert unique_extreme_factor(GOLDEN_ANGLE, 3) == ("bab", Weight.LIGHT)
    assert unique_extreme_factor(GOLDEN_ANGLE, 5) == ("aabaa", Weight.HEAVY)
    with pytest.raises(ConvergentError):
        unique_extreme_factor(GOLDEN_ANGLE, 4)


@pytest.mark.parametrize("alpha", [GOLDEN_ANGLE, SQRT3_ANGLE], ids=["golden", "sqrt3"])
def test_unique_extreme_factor_letters(alpha):
    """Test that heavy factors start and end with a and light ones with b"""
    for m in convergent_denominators(alpha, 60):
        word, weight = unique_extreme_factor(alpha, m)
        letter = "a" if weight is Weight.HEAVY else "b"
        assert word[0] == letter and word[-1] == letter


def test_k_prime_values():
    """Test repetition exponents at convergent denominators"""
    assert k_prime(GOLDEN_ANGLE, 2) == 5
    assert k_prime(GOLDEN_ANGLE, 3) == Fraction(22, 3)
    assert k_prime(GOLDEN_ANGLE, 5) == Fraction(63, 5)
    assert k_prime(GOLDEN_ANGLE, 8) * 8 == 150
    with pytest.raises(ConvergentError):
        k_prime(GOLDEN_ANGLE, 4)


def test_k_prime_bounds():
    """Test k_m <= k'_m < k_m + 2 along convergent denominators"""
    for m in convergent_denominators(GOLDEN_ANGLE, 1000):
        k = k_max(GOLDEN_ANGLE, m)
        assert k <= k_prime(GOLDEN_ANGLE, m) < k + 2


def test_repetition_length_exceeds_sqrt5_bound():
    """Test that repetitions at convergents are longer than (sqrt(5) - 1/10) m^2"""
    for m in convergent_denominators(GOLDEN_ANGLE, 89)[1:]:
        assert k_prime(GOLDEN_ANGLE, m) * m > (SQRT5 - Fraction(1, 10)) * m * m


def test_k_max_increases_along_convergents():
    """Test strict growth of k_max on convergent denominators"""
    values = [k_max(GOLDEN_ANGLE, m) for m in convergent_denominators(GOLDEN_ANGLE, 233)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_repetition_extension(fib_spec):
    """Test the repetition around the 4-power of period 2 at position 12"""
    report = repetition_extension(fib_spec, 12, 2)
    assert (report.start, report.length) == (11, 10)
    assert (report.head_len, report.tail_len, report.block_count) == (1, 1, 4)
    assert report.exponent == 5
    window = prefix(fib_spec, report.length, start=report.start)
    assert has_abelian_period(window, 2)


def test_repetition_extension_errors(fib_spec):
    """Test the repetition preconditions"""
    with pytest.raises(ConvergentError):
        repetition_extension(fib_spec, 12, 4)
    with pytest.raises(PreconditionError, match=r"no room"):
        repetition_extension(fib_spec, 0, 2)
    with pytest.raises(PreconditionError, match=r"no abelian power"):
        repetition_extension(fib_spec, 4, 3)


def test_period_for_exponent(fib_spec):
    """Test that arbitrarily large exponents start at every position"""
    for n in range(0, 51, 10):
        for k in (2, 5, 10, 20):
            m = period_for_exponent(fib_spec, n, k)
            assert m is not None
            assert k_mn(fib_spec, m, n).k >= k

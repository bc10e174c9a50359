import random

import pytest

from pdvp import checks
from pdvp.dsl import parse_pattern
from pdvp.exhaustive import word_distribution
from pdvp.pattern import Mode
from pdvp.transfer import (
    ONE,
    Q,
    RationalGF,
    StatPattern,
    Z,
    ZERO,
    BivarPoly,
    det_bareiss,
    dp_series,
    exact_div,
    expand_rational,
    gf_equal_series,
    solve_transfer_system,
)


def test_ring_basics():
    assert (ONE + Q) * (ONE - Q) == ONE - Q**2
    p = 3 * Q * Z - Q**2
    assert p + ZERO == p
    assert p - p == ZERO
    assert (Q + Z) ** 2 == Q**2 + 2 * Q * Z + Z**2


def test_evaluate_at_z():
    p = ONE - 4 * Q - 2 * Q**2 * (Z - ONE)
    assert p.evaluate_at_z(0) == ONE - 4 * Q + 2 * Q**2
    assert p.evaluate_at_z(1) == ONE - 4 * Q


def _random_poly(rng):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        terms[(rng.randrange(4), rng.randrange(4))] = rng.randint(-5, 5)
    return BivarPoly(terms)


def test_exact_division_inverts_multiplication():
    rng = random.Random(7)
    for _ in range(200):
        a = _random_poly(rng)
        b = _random_poly(rng)
        if not b:
            continue
        assert exact_div(a * b, b) == a


def test_exact_division_rejects_inexact():
    with pytest.raises(ArithmeticError):
        exact_div(Q + ONE, Q * 2)


def _naive_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _naive_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(11)
    for size in (2, 3, 4):
        for _ in range(15):
            rows = [[_random_poly(rng) for _ in range(size)] for _ in range(size)]
            assert det_bareiss(rows) == _naive_det(rows)


def test_bareiss_zero_column():
    rows = [[ZERO, ONE], [ZERO, Q]]
    assert det_bareiss(rows) == ZERO


def test_expand_rational_fixtures():
    fib_even = expand_rational(checks.fib_even_gf(), 6)
    assert fib_even.z0_series() == [1, 3, 8, 21, 55, 144, 377]
    fib = expand_rational(checks.fib_series_gf(), 5)
    assert fib.z0_series() == [1, 2, 3, 5, 8, 13]
    trivial = expand_rational(RationalGF(ONE, ONE), 4)
    assert trivial.z0_series() == [1, 0, 0, 0, 0]


def test_expand_requires_unit_constant():
    with pytest.raises(ValueError):
        RationalGF(ONE, 2 * ONE)
    gf = RationalGF(-ONE, -ONE + Q)
    assert gf.den.constant_term() == 1
    assert gf.num == ONE


def test_gf_equal_series():
    a = RationalGF(ONE, ONE - Q)
    b = RationalGF(ONE + Q, ONE - Q**2)
    assert gf_equal_series(a, b, 20)
    c = RationalGF(ONE, ONE - 2 * Q)
    assert not gf_equal_series(a, c, 20)
    assert gf_equal_series(a, a, 5)


def test_stat_pattern_validation():
    with pytest.raises(ValueError):
        StatPattern(parse_pattern("12|{1},{2},P|-|P,P", Mode.WORD))
    with pytest.raises(ValueError):
        StatPattern(parse_pattern("12|P,P,P|-|P,P", Mode.WORD))
    with pytest.raises(ValueError):
        StatPattern(parse_pattern("12|P,{2},P|(0,1,{2})|P,P", Mode.WORD))
    with pytest.raises(ValueError):
        StatPattern(parse_pattern("12|P,{2},P|(1,2,{2})|P,P", Mode.PERMUTATION))
    sp = StatPattern(parse_pattern("12|P,{1,2},P|(1,2,{2})|P,P", Mode.WORD))
    assert sp.window_width == 3


def test_dp_series_published_slices():
    assert checks._dp_table("a3", 4).coefficient(4, 0) == 64
    assert checks._dp_table("a4", 6).coefficient(6, 0) == 2304
    assert checks._dp_table("d3", 6).coefficient(6, 0) == 288
    assert checks._dp_table("e4", 5).coefficient(5, 0) == 688


def test_dp_matches_word_scan_bivariately():
    sp = checks.stat_pattern("d4")
    dp = dp_series(sp, 4, 5)
    for n in range(6):
        brute = word_distribution(sp.pattern, 4, n)
        assert dp.z_poly(n) == dict(brute.counts)


def test_dp_state_budget():
    sp = checks.stat_pattern("a4")
    with pytest.raises(ValueError):
        dp_series(sp, 4, 5, state_budget=8)


def test_totals_conserved():
    for name in ("a3", "b4", "d3", "e4"):
        _, t = checks.STAT_ALPHABETS[name]
        table = checks._dp_table(name, 9)
        assert table.totals() == [t**n for n in range(10)]


def test_solver_matches_reference_forms():
    for name in ("a3", "b3", "e4"):
        assert gf_equal_series(checks._solver_gf(name), checks.reference_gf(name), 34)


def test_solver_matches_dp_for_all_fixtures():
    for name in checks.STAT_ALPHABETS:
        assert expand_rational(checks._solver_gf(name), 14) == checks._dp_table(name, 14)


def test_single_letter_statistic_window():
    # degenerate window: statistic counts letters equal to 2
    sp = StatPattern(parse_pattern("1|P,P|-|{2}", Mode.WORD))
    assert sp.window_width == 1
    table = dp_series(sp, 2, 6)
    assert table.coefficient(6, 2) == 15  # C(6,2) words with exactly two 2s
    gf = solve_transfer_system(sp, 2)
    assert expand_rational(gf, 8) == dp_series(sp, 2, 8)


def test_rational_gf_json_terms():
    gf = checks.fib_even_gf()
    obj = gf.to_json_obj()
    assert obj["numerator"] == [["1", 0, 0]]
    assert ["-3", 1, 0] in obj["denominator"]

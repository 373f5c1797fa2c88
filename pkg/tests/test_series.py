import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from ctverify.series import (
    CTProblem,
    GeometricFactor,
    TruncatedSeries,
    coefficient_of,
    diophantine_coefficient,
    geometric_expand,
    partial_sum_transform,
    series_mul_truncated,
)


def first_differences(y_exps):
    prev = 0
    out = []
    for y in y_exps:
        out.append(y - prev)
        prev = y
    return tuple(out)


def test_partial_sum_transform_small():
    assert partial_sum_transform(()) == ()
    assert partial_sum_transform((5,)) == (5,)
    assert partial_sum_transform((1, 2, 3)) == (1, 3, 6)
    assert partial_sum_transform((0, 1, 2)) == (0, 1, 3)


@given(st.lists(st.integers(min_value=-50, max_value=50), max_size=8))
def test_partial_sum_transform_inverts(x_exps):
    x_exps = tuple(x_exps)
    assert first_differences(partial_sum_transform(x_exps)) == x_exps


@given(st.lists(st.integers(min_value=0, max_value=50), min_size=1, max_size=8))
def test_partial_sums_of_nonnegatives_are_monotone(x_exps):
    y = partial_sum_transform(tuple(x_exps))
    assert all(y[t] <= y[t + 1] for t in range(len(y) - 1))
    assert y[-1] == sum(x_exps)


def test_factor_validation():
    with pytest.raises(ValueError):
        GeometricFactor((0, 0), 1)
    with pytest.raises(ValueError):
        GeometricFactor((1, -1), 1)
    with pytest.raises(ValueError):
        GeometricFactor((1, 0), 0)


def test_problem_validation():
    f = GeometricFactor((1,), 1)
    with pytest.raises(ValueError):
        CTProblem(0, (), ())
    with pytest.raises(ValueError):
        CTProblem(2, (1,), ())
    with pytest.raises(ValueError):
        CTProblem(2, (1, 1), (f,))


def test_geometric_expand_single_variable():
    # 1/(1-y) has coefficient 1 everywhere, 1/(1-y)^2 has k+1
    s = geometric_expand(GeometricFactor((1,), 1), (3,))
    assert s.terms == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    s = geometric_expand(GeometricFactor((1,), 2), (3,))
    assert s.terms == {(0,): 1, (1,): 2, (2,): 3, (3,): 4}


def test_geometric_expand_joint_monomial():
    # powers of y1*y2 land on the diagonal with multiset coefficients
    s = geometric_expand(GeometricFactor((1, 1), 3), (2, 2))
    assert s.terms == {(0, 0): 1, (1, 1): 3, (2, 2): 6}


def test_geometric_expand_respects_cap():
    s = geometric_expand(GeometricFactor((2, 1), 4), (5, 5))
    assert all(e[0] <= 5 and e[1] <= 5 for e in s.terms)
    assert (4, 2) in s.terms and (6, 3) not in s.terms


def test_series_one_is_identity():
    cap = (3, 3)
    s = geometric_expand(GeometricFactor((1, 1), 2), cap)
    product = series_mul_truncated(s, TruncatedSeries.one(cap), cap)
    assert product.terms == s.terms


def test_series_mul_commutes():
    cap = (4, 4)
    a = geometric_expand(GeometricFactor((1, 0), 2), cap)
    b = geometric_expand(GeometricFactor((1, 1), 3), cap)
    ab = series_mul_truncated(a, b, cap)
    ba = series_mul_truncated(b, a, cap)
    assert ab.terms == ba.terms


def test_series_mul_matches_hand_expansion():
    # 1/((1-y)(1-y)^2) = 1/(1-y)^3, coefficients C(k+2, 2)
    cap = (6,)
    a = geometric_expand(GeometricFactor((1,), 1), cap)
    b = geometric_expand(GeometricFactor((1,), 2), cap)
    c = geometric_expand(GeometricFactor((1,), 3), cap)
    assert series_mul_truncated(a, b, cap).terms == c.terms


def test_truncation_is_sound():
    # computing under a generous cap and restricting equals computing under
    # the tight cap directly: dropped terms never influence kept ones
    tight = (3, 2)
    wide = (9, 8)
    f1 = GeometricFactor((1, 0), 2)
    f2 = GeometricFactor((1, 1), 1)
    f3 = GeometricFactor((0, 1), 3)
    small = series_mul_truncated(
        series_mul_truncated(geometric_expand(f1, tight), geometric_expand(f2, tight), tight),
        geometric_expand(f3, tight),
        tight,
    )
    big = series_mul_truncated(
        series_mul_truncated(geometric_expand(f1, wide), geometric_expand(f2, wide), wide),
        geometric_expand(f3, wide),
        wide,
    )
    restricted = {
        e: c for e, c in big.terms.items() if all(x <= t for x, t in zip(e, tight))
    }
    assert small.terms == restricted


def random_problem(rng, max_vars=3, max_factors=4, max_target=6):
    n = rng.randint(1, max_vars)
    target = tuple(rng.randint(0, max_target) for _ in range(n))
    factors = []
    for _ in range(rng.randint(1, max_factors)):
        base = tuple(rng.randint(0, 2) for _ in range(n))
        if not any(base):
            base = base[:-1] + (1,)
        factors.append(GeometricFactor(base, rng.randint(1, 3)))
    return CTProblem(n, target, tuple(factors))


def test_kernel_agrees_with_enumeration_randomized():
    rng = random.Random(1737)
    for _ in range(300):
        p = random_problem(rng)
        assert coefficient_of(p) == diophantine_coefficient(p), p


def test_kernel_agrees_with_enumeration_hypothesis():
    # hypothesis drives the same comparison through a different generator
    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def run(data):
        n = data.draw(st.integers(min_value=1, max_value=3))
        target = tuple(
            data.draw(st.integers(min_value=-1, max_value=5)) for _ in range(n)
        )
        n_factors = data.draw(st.integers(min_value=1, max_value=3))
        factors = []
        for _ in range(n_factors):
            base = tuple(
                data.draw(st.integers(min_value=0, max_value=2)) for _ in range(n)
            )
            if not any(base):
                base = (1,) * n
            factors.append(
                GeometricFactor(base, data.draw(st.integers(min_value=1, max_value=3)))
            )
        p = CTProblem(n, target, tuple(factors))
        assert coefficient_of(p) == diophantine_coefficient(p)

    run()


def test_coefficient_order_independent():
    factors = (
        GeometricFactor((1, 1, 1), 2),
        GeometricFactor((0, 1, 1), 2),
        GeometricFactor((0, 0, 1), 2),
        GeometricFactor((1, 0, 0), 1),
        GeometricFactor((1, 1, 0), 1),
        GeometricFactor((0, 1, 0), 1),
    )
    target = (0, 1, 3)
    values = {
        coefficient_of(CTProblem(3, target, perm)) for perm in permutations(factors)
    }
    assert values == {10}


def test_negative_target_is_zero():
    p = CTProblem(2, (-1, 3), (GeometricFactor((1, 1), 2),))
    assert coefficient_of(p) == 0
    assert diophantine_coefficient(p) == 0


def test_coefficients_are_nonnegative():
    # every factor has nonnegative coefficients, so products do too
    rng = random.Random(92)
    for _ in range(50):
        p = random_problem(rng)
        assert coefficient_of(p) >= 0


def test_empty_factor_list_is_the_unit_series():
    assert coefficient_of(CTProblem(2, (0, 0), ())) == 1
    assert coefficient_of(CTProblem(2, (0, 1), ())) == 0

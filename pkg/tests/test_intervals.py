import math
import random

import pytest

from fastcloud.intervals import (
    IntervalNumber,
    add,
    possibility_degree,
    scale,
    separation,
)


def random_interval(rng, lo=-100.0, hi=100.0, allow_point=True):
    a, b = rng.uniform(lo, hi), rng.uniform(lo, hi)
    if allow_point and rng.random() < 0.1:
        return IntervalNumber(a, a)
    return IntervalNumber(min(a, b), max(a, b))


class TestConstruction:
    def test_orders_endpoints_strictly(self):
        with pytest.raises(ValueError):
            IntervalNumber(1.0, 0.5)

    def test_rejects_non_finite_endpoints(self):
        for bad in (math.inf, -math.inf, math.nan):
            with pytest.raises(ValueError):
                IntervalNumber(bad, 1.0)
            with pytest.raises(ValueError):
                IntervalNumber(0.0, bad)

    def test_point_interval_allowed(self):
        x = IntervalNumber(3, 3)
        assert x.width == 0

    def test_immutable(self):
        x = IntervalNumber(1, 2)
        with pytest.raises(AttributeError):
            x.lower = 0  # type: ignore[misc]


class TestScale:
    def test_halving(self):
        assert scale(IntervalNumber(80, 100), 0.5) == IntervalNumber(40, 50)

    def test_identity(self):
        assert scale(IntervalNumber(87, 96), 1.0) == IntervalNumber(87, 96)

    def test_annihilator(self):
        assert scale(IntervalNumber(6, 23), 0) == IntervalNumber(0, 0)

    def test_negative_factor_rejected(self):
        with pytest.raises(ValueError):
            scale(IntervalNumber(1, 2), -0.1)

    def test_preserves_ordering_invariant(self):
        rng = random.Random(11)
        for _ in range(300):
            x = random_interval(rng)
            c = rng.uniform(0, 10)
            y = scale(x, c)
            assert y.lower <= y.upper


class TestAdd:
    def test_identity(self):
        assert add(IntervalNumber(0, 0), IntervalNumber(1, 2)) == IntervalNumber(1, 2)

    def test_endpoint_sums(self):
        assert add(IntervalNumber(1, 2), IntervalNumber(3, 4)) == IntervalNumber(4, 6)
        got = add(IntervalNumber(0.1, 0.2), IntervalNumber(0.3, 0.5))
        assert got.lower == pytest.approx(0.4) and got.upper == pytest.approx(0.7)

    def test_preserves_ordering_invariant(self):
        rng = random.Random(12)
        for _ in range(300):
            y = add(random_interval(rng), random_interval(rng))
            assert y.lower <= y.upper


class TestSeparation:
    def test_worked_value(self):
        got = separation(IntervalNumber(0.196, 0.274), IntervalNumber(0.14, 0.276))
        assert got == pytest.approx(0.058)

    def test_identical_intervals(self):
        x = IntervalNumber(2.5, 7.5)
        assert separation(x, x) == 0

    def test_is_a_metric(self):
        rng = random.Random(13)
        for _ in range(300):
            x, y, z = (random_interval(rng) for _ in range(3))
            dxy = separation(x, y)
            assert dxy >= 0
            assert dxy == separation(y, x)
            assert (dxy == 0) == (x == y)
            assert separation(x, z) <= dxy + separation(y, z) + 1e-12


class TestPossibilityDegree:
    def test_worked_value(self):
        got = possibility_degree(
            IntervalNumber(0.109, 0.474), IntervalNumber(0.0953, 0.477)
        )
        assert got == pytest.approx(0.508, abs=1e-3)

    def test_self_comparison_is_half(self):
        a = IntervalNumber(1, 4)
        assert possibility_degree(a, a) == 0.5

    def test_point_interval_conventions(self):
        assert possibility_degree(IntervalNumber(3, 3), IntervalNumber(1, 1)) == 1
        assert possibility_degree(IntervalNumber(1, 1), IntervalNumber(3, 3)) == 0
        assert possibility_degree(IntervalNumber(2, 2), IntervalNumber(2, 2)) == 0.5

    def test_range(self):
        rng = random.Random(14)
        for _ in range(400):
            p = possibility_degree(random_interval(rng), random_interval(rng))
            assert 0.0 <= p <= 1.0

    def test_complementarity(self):
        rng = random.Random(15)
        for _ in range(400):
            a, b = random_interval(rng), random_interval(rng)
            assert possibility_degree(a, b) + possibility_degree(b, a) == pytest.approx(
                1.0, abs=1e-12
            )

    def test_upward_shift_never_decreases(self):
        rng = random.Random(16)
        for _ in range(300):
            a, b = random_interval(rng), random_interval(rng)
            delta = rng.uniform(0, 5)
            shifted = IntervalNumber(a.lower + delta, a.upper + delta)
            assert possibility_degree(shifted, b) >= possibility_degree(a, b) - 1e-12

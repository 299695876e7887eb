import numpy as np
import pytest

from rlab import (LEBESGUE, IntervalSet, MeasureDensity, StepFunction,
                  characteristic, integrate, level_measure, make_step,
                  measure_from_json, measure_to_json, pointwise,
                  step_from_json, step_to_json)
from rlab.stepfn import merge_segment_grids


def test_construction_validates_grid():
    with pytest.raises(ValueError):
        make_step([0.0, 1.0], [1.0, 2.0])  # one value too many
    with pytest.raises(ValueError):
        make_step([0.0, 0.5], [1.0])  # must end at 1
    with pytest.raises(ValueError):
        make_step([0.1, 0.5, 1.0], [1.0, 2.0])  # must start at 0
    with pytest.raises(ValueError):
        make_step([0.0, 0.5, 0.5, 1.0], [1.0, 2.0, 3.0])  # not increasing
    with pytest.raises(ValueError):
        make_step([0.0, 0.5, 1.0], [1.0, np.nan])


def test_canonical_merge_of_equal_neighbors():
    f = make_step([0.0, 0.3, 0.6, 1.0], [2.0, 2.0, 5.0])
    assert f.breakpoints.tolist() == [0.0, 0.6, 1.0]
    assert f.values.tolist() == [2.0, 5.0]
    g = make_step([0.0, 0.25, 0.5, 1.0], [1.0, 1.0, 1.0])
    assert len(g.values) == 1


def test_equality_is_canonical():
    a = make_step([0.0, 0.5, 1.0], [1.0, 1.0])
    b = make_step([0.0, 1.0], [1.0])
    assert a == b
    assert a != make_step([0.0, 1.0], [2.0])


def test_evaluation_right_continuous_zero_outside():
    f = make_step([0.0, 0.4, 1.0], [3.0, 7.0])
    assert f(0.2) == 3.0
    assert f(0.4) == 7.0  # right-hand value at the jump
    assert f(0.0) == 3.0
    assert f(-0.1) == 0.0
    assert f(1.0) == 7.0
    assert f(1.5) == 0.0
    got = f(np.array([-1.0, 0.1, 0.4, 0.9, 2.0]))
    assert got.tolist() == [0.0, 3.0, 7.0, 7.0, 0.0]


def test_values_are_immutable():
    f = make_step([0.0, 1.0], [2.0])
    with pytest.raises(ValueError):
        f.values[0] = 5.0


def test_pointwise_algebra_on_merged_grid():
    f = make_step([0.0, 0.5, 1.0], [1.0, 3.0])
    g = make_step([0.0, 0.25, 1.0], [2.0, 4.0])
    s = pointwise("add", f, g)
    assert s.breakpoints.tolist() == [0.0, 0.25, 0.5, 1.0]
    assert s.values.tolist() == [3.0, 5.0, 7.0]
    assert pointwise("sub", f, g).values.tolist() == [-1.0, -3.0, -1.0]
    assert pointwise("mul", f, g).values.tolist() == [2.0, 4.0, 12.0]
    # max is 4 on (0.25, 1): the two cells merge canonically
    assert pointwise("max", f, g) == make_step([0.0, 0.25, 1.0], [2.0, 4.0])
    assert pointwise("scale", f, -2.0).values.tolist() == [-2.0, -6.0]
    assert pointwise("abs", pointwise("scale", f, -1.0)) == f
    with pytest.raises(ValueError):
        pointwise("div", f, g)


def test_operator_sugar_matches_pointwise():
    f = make_step([0.0, 0.5, 1.0], [1.0, 3.0])
    g = make_step([0.0, 0.25, 1.0], [2.0, 4.0])
    assert (f + g) == pointwise("add", f, g)
    assert (f - g) == pointwise("sub", f, g)
    assert (2.0 * f) == pointwise("scale", f, 2.0)
    assert abs(-f) == f


def test_merge_segment_grids_midpoint_lookup():
    bk, fv, gv = merge_segment_grids(np.array([0.0, 0.5, 1.0]), np.array([1.0, 2.0]),
                                     np.array([0.0, 0.2, 1.0]), np.array([5.0, 6.0]))
    assert bk.tolist() == [0.0, 0.2, 0.5, 1.0]
    assert fv.tolist() == [1.0, 1.0, 2.0]
    assert gv.tolist() == [5.0, 6.0, 6.0]


def test_level_measure_exact():
    f = make_step([0.0, 0.2, 0.5, 1.0], [3.0, 1.0, 2.0])
    assert level_measure(f, 0.5) == 1.0
    assert level_measure(f, 1.0) == 0.7  # strict: the value-1 segment drops out
    assert level_measure(f, 2.0) == pytest.approx(0.2, abs=0)
    assert level_measure(f, 3.0) == 0.0
    mu = MeasureDensity(make_step([0.0, 0.5, 1.0], [2.0, 0.0]))
    assert level_measure(f, 1.5, mu) == 0.4  # only (0,0.2) both high and charged


def test_integrate_with_and_without_measure():
    f = make_step([0.0, 0.5, 1.0], [1.0, 3.0])
    assert integrate(f) == 2.0
    mu = MeasureDensity(make_step([0.0, 0.5, 1.0], [0.0, 2.0]))
    assert integrate(f, mu) == 3.0


def test_characteristic_and_interval_set():
    s = IntervalSet(((0.1, 0.3), (0.5, 0.6)))
    assert s.measure(LEBESGUE) == pytest.approx(0.3, abs=1e-15)
    chi = characteristic(s)
    assert chi(0.2) == 1.0 and chi(0.4) == 0.0 and chi(0.55) == 1.0
    assert characteristic([]) == make_step([0.0, 1.0], [0.0])
    with pytest.raises(ValueError):
        IntervalSet(((0.3, 0.1),))
    with pytest.raises(ValueError):
        IntervalSet(((0.1, 0.5), (0.4, 0.6)))  # overlap


def test_measure_density_validation_and_mass():
    with pytest.raises(ValueError):
        MeasureDensity(make_step([0.0, 1.0], [-1.0]))
    mu = MeasureDensity(make_step([0.0, 0.25, 1.0], [4.0, 0.0]))
    assert mu.total == 1.0
    assert mu.interval_mass(0.0, 0.5) == 1.0
    assert mu.interval_mass(0.25, 0.9) == 0.0
    assert LEBESGUE.total == 1.0


def test_json_round_trips():
    f = make_step([0.0, 0.3, 1.0], [2.5, -1.0])
    assert step_from_json(step_to_json(f)) == f
    mu = MeasureDensity(make_step([0.0, 0.5, 1.0], [1.0, 3.0]))
    back = measure_from_json(measure_to_json(mu))
    assert back.density == mu.density
    with pytest.raises(ValueError):
        step_from_json({"breakpoints": [0.0, 1.0]})


def test_random_functions_evaluate_on_own_segments():
    # seeded spot-check: value at any interior point equals its segment value
    rng = np.random.default_rng(42)
    for _ in range(50):
        n = int(rng.integers(1, 8))
        bk = np.concatenate(([0.0], np.sort(rng.uniform(0.1, 0.9, n)), [1.0]))
        vals = rng.normal(size=n + 1)
        f = StepFunction(bk, vals)
        mids = 0.5 * (f.breakpoints[:-1] + f.breakpoints[1:])
        assert np.array_equal(f(mids), f.values)

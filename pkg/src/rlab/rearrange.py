"""Distribution functions, decreasing rearrangements, and their averages.

Everything in this module rearranges |f|: the absolute value is taken
before any superlevel measure is computed, so signed inputs and their
absolute values share one rearrangement.

For a step function f and a step-density measure mu the distribution
function lambda(y) = mu{|f| > y} is an exact, right-continuous,
nonincreasing step in y, and the decreasing rearrangement

    f*(t) = inf{ y > 0 : lambda(y) <= t }

is again a step function, obtained by sorting the segments of |f| by value
and accumulating their mu-lengths.  f* lives on (0, mu(X)); when the total
mass is below 1 it is extended by 0 up to 1 so that integrals over (0, 1)
are always defined, and when the mass exceeds 1 the breakpoints simply run
past 1.

The running average f**(t) = (1/t) * integral of f* over (0, t) is exact
piecewise a + b/t.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .stepfn import LEBESGUE, MeasureDensity, StepFunction, merge_segment_grids

__all__ = [
    "DistributionFunction",
    "Rearrangement",
    "AverageFunction",
    "distribution",
    "rearrangement",
    "average",
    "measure_gap",
]


def _abs_segments(f: StepFunction, mu: MeasureDensity):
    """Merged segments of |f| with their mu-lengths."""
    bk, fv, wv = merge_segment_grids(
        f.breakpoints, f.values, mu.density.breakpoints, mu.density.values
    )
    return np.abs(fv), wv * np.diff(bk)


@dataclass(frozen=True, eq=False)
class DistributionFunction:
    """lambda(y) = mu{|f| > y} as a right-continuous step in y >= 0.

    knots are the distinct values of |f| (0 prepended), measures[k] is the
    value of lambda on [knots[k], knots[k+1]); beyond the largest value
    lambda is 0.
    """

    knots: np.ndarray
    measures: np.ndarray

    def __call__(self, y):
        ya = np.asarray(y, dtype=float)
        scalar = ya.ndim == 0
        ya = np.atleast_1d(ya)
        if np.any(ya < 0):
            raise ValueError("distribution function is defined for y >= 0")
        idx = np.searchsorted(self.knots, ya, side="right") - 1
        out = self.measures[np.clip(idx, 0, len(self.measures) - 1)]
        return float(out[0]) if scalar else out


def distribution(f: StepFunction, mu: Optional[MeasureDensity] = None) -> DistributionFunction:
    """Exact distribution function of |f| with respect to mu."""
    mu = mu or LEBESGUE
    vals, lens = _abs_segments(f, mu)
    knots = np.unique(np.concatenate(([0.0], vals)))
    # lambda at each knot: mass strictly above it
    order = np.argsort(vals, kind="stable")
    sv = vals[order]
    suffix = np.concatenate((np.cumsum(lens[order][::-1])[::-1], [0.0]))
    lam = suffix[np.searchsorted(sv, knots, side="right")]
    return DistributionFunction(knots, lam)


@dataclass(frozen=True, eq=False)
class Rearrangement:
    """Decreasing rearrangement f* of |f| onto (0, mu(X)).

    breakpoints run from 0 to max(1, total); values are nonincreasing and
    nonnegative, with the zero extension up to 1 made explicit when the
    total mass is below 1.  Right-continuous: the value at a breakpoint is
    the right segment's.
    """

    breakpoints: np.ndarray
    values: np.ndarray
    total: float

    def __call__(self, t):
        ta = np.asarray(t, dtype=float)
        scalar = ta.ndim == 0
        ta = np.atleast_1d(ta)
        idx = np.searchsorted(self.breakpoints, ta, side="right") - 1
        out = np.where(
            ta >= self.breakpoints[-1],
            0.0,
            self.values[np.clip(idx, 0, len(self.values) - 1)],
        )
        out = np.where(ta < 0.0, self.values[0], out)
        return float(out[0]) if scalar else out

    def segments(self, upper: Optional[float] = None):
        """(breakpoints, values) clipped to (0, upper)."""
        if upper is None or upper >= self.breakpoints[-1]:
            return self.breakpoints, self.values
        cut = np.searchsorted(self.breakpoints, upper, side="left")
        bk = np.concatenate((self.breakpoints[:cut], [upper]))
        return bk, self.values[: len(bk) - 1]

    def is_zero(self) -> bool:
        return bool(np.all(self.values == 0.0))


def rearrangement(f: StepFunction, mu: Optional[MeasureDensity] = None) -> Rearrangement:
    """Sort the segments of |f| by value and accumulate their mu-lengths."""
    mu = mu or LEBESGUE
    vals, lens = _abs_segments(f, mu)
    total = float(lens.sum())
    keep = lens > 0
    vals, lens = vals[keep], lens[keep]
    if len(vals) == 0 or np.all(vals == 0.0):
        return Rearrangement(np.array([0.0, max(1.0, total)]), np.array([0.0]), total)
    order = np.argsort(-vals, kind="stable")
    vals, lens = vals[order], lens[order]
    # merge ties so the representation is canonical
    first = np.concatenate(([True], np.diff(vals) != 0))
    group = np.cumsum(first) - 1
    gvals = vals[first]
    glens = np.bincount(group, weights=lens)
    bk = np.concatenate(([0.0], np.cumsum(glens)))
    bk[-1] = total  # guard against cumsum drift
    if gvals[-1] == 0.0:
        gvals = gvals[:-1]
        bk = bk[:-1]
    end = max(1.0, total)
    if bk[-1] < end:
        bk = np.concatenate((bk, [end]))
        gvals = np.concatenate((gvals, [0.0]))
    return Rearrangement(bk, gvals, total)


@dataclass(frozen=True, eq=False)
class AverageFunction:
    """f**(t) = (1/t) * integral of f* over (0, t), stored per segment as
    a + b/t.

    Segment i covers (breakpoints[i], breakpoints[i+1]) with coefficients
    (a[i], b[i]); beyond the last breakpoint f**(t) = tail_mass / t where
    tail_mass is the total integral of f*.  Continuous and nonincreasing
    on (0, infinity).
    """

    breakpoints: np.ndarray
    a: np.ndarray
    b: np.ndarray
    tail_mass: float

    def __call__(self, t):
        ta = np.asarray(t, dtype=float)
        scalar = ta.ndim == 0
        ta = np.atleast_1d(ta)
        if np.any(ta <= 0):
            raise ValueError("average function is defined for t > 0")
        idx = np.clip(np.searchsorted(self.breakpoints, ta, side="right") - 1, 0, len(self.a) - 1)
        out = np.where(
            ta >= self.breakpoints[-1],
            self.tail_mass / ta,
            self.a[idx] + self.b[idx] / ta,
        )
        return float(out[0]) if scalar else out


def average(fstar: Rearrangement) -> AverageFunction:
    """Exact running average of a rearrangement."""
    bk = fstar.breakpoints
    vals = fstar.values
    cum = np.concatenate(([0.0], np.cumsum(vals * np.diff(bk))))
    a = vals
    b = cum[:-1] - vals * bk[:-1]
    return AverageFunction(bk, a, b, float(cum[-1]))


def measure_gap(fn: StepFunction, f: StepFunction, y: float,
                mu: Optional[MeasureDensity] = None) -> float:
    """mu{ |fn - f| > y } for y > 0: convergence-in-measure gauge."""
    from .stepfn import level_measure, pointwise

    if not y > 0:
        raise ValueError("measure_gap needs y > 0")
    return level_measure(pointwise("abs", pointwise("sub", fn, f)), y, mu)

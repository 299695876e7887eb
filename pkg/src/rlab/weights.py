"""Weight functions on (0, 1): step densities and analytic power weights.

Power weights coeff * t**alpha with alpha > -1 are kept symbolic so their
integrals use the exact power rule rather than a step approximation; step
weights ride on the same segment calculus as everything else.  A
WeightPrimitive wraps W(t) = integral of the weight over (0, t).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .stepfn import MeasureDensity, StepFunction, measure_from_json, step_from_json

__all__ = ["PowerWeight", "Weight", "WeightPrimitive", "w_primitive", "weight_from_json",
           "weight_to_json"]


@dataclass(frozen=True)
class PowerWeight:
    """w(t) = coeff * t**alpha on (0, 1); integrable iff alpha > -1."""

    alpha: float
    coeff: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.alpha) or not np.isfinite(self.coeff):
            raise ValueError("power weight parameters must be finite")
        if self.alpha <= -1.0:
            raise ValueError("power weight needs alpha > -1 to be integrable")
        if self.coeff < 0:
            raise ValueError("power weight coefficient must be nonnegative")

    def __call__(self, t):
        return self.coeff * np.asarray(t, dtype=float) ** self.alpha

    def segment_integrals(self, bk: np.ndarray) -> np.ndarray:
        """Exact integral of the weight over each segment of the grid bk."""
        return self.coeff * np.diff(bk ** (self.alpha + 1.0)) / (self.alpha + 1.0)


Weight = Union[PowerWeight, MeasureDensity, StepFunction]


def _as_step_weight(w: Weight) -> StepFunction:
    if isinstance(w, MeasureDensity):
        return w.density
    if isinstance(w, StepFunction):
        if np.any(w.values < 0):
            raise ValueError("weights must be nonnegative")
        return w
    raise ValueError("weight must be a PowerWeight, MeasureDensity, or StepFunction")


def segment_weight_integrals(w: Weight, bk: np.ndarray) -> np.ndarray:
    """Integral of the weight over each segment (bk[i], bk[i+1]) of a grid
    inside [0, 1]; exact for both weight kinds."""
    if isinstance(w, PowerWeight):
        return w.segment_integrals(bk)
    step = _as_step_weight(w)
    cum = np.concatenate(([0.0], np.cumsum(step.values * np.diff(step.breakpoints))))
    return np.diff(np.interp(bk, step.breakpoints, cum))


@dataclass(frozen=True)
class WeightPrimitive:
    """W(t) = integral of the weight over (0, t), evaluable on (0, 1]."""

    weight: Weight

    def __call__(self, t):
        ta = np.asarray(t, dtype=float)
        if isinstance(self.weight, PowerWeight):
            wgt = self.weight
            return wgt.coeff * ta ** (wgt.alpha + 1.0) / (wgt.alpha + 1.0)
        step = _as_step_weight(self.weight)
        cum = np.concatenate(([0.0], np.cumsum(step.values * np.diff(step.breakpoints))))
        return np.interp(ta, step.breakpoints, cum)

    @property
    def at_one(self) -> float:
        return float(self(1.0))


def w_primitive(w: Weight) -> WeightPrimitive:
    """Primitive W of a nonnegative weight; errors on non-integrable powers."""
    if isinstance(w, PowerWeight):
        return WeightPrimitive(w)  # PowerWeight validated alpha > -1 already
    _as_step_weight(w)
    return WeightPrimitive(w)


def weight_from_json(obj) -> Weight:
    """Parse a weight: either {"power_weight": {"alpha": a, "coeff": c}} or a
    step density in StepFunction / MeasureDensity JSON form."""
    if not isinstance(obj, dict):
        raise ValueError("weight JSON must be an object")
    if "power_weight" in obj:
        pw = obj["power_weight"]
        if not isinstance(pw, dict) or "alpha" not in pw:
            raise ValueError('power weight JSON needs an "alpha" field')
        return PowerWeight(float(pw["alpha"]), float(pw.get("coeff", 1.0)))
    if "density" in obj:
        return measure_from_json(obj)
    if "breakpoints" in obj:
        step = step_from_json(obj)
        return MeasureDensity(step)
    raise ValueError("unrecognized weight JSON (expected power_weight, density, or breakpoints)")


def weight_to_json(w: Weight) -> dict:
    if isinstance(w, PowerWeight):
        return {"power_weight": {"alpha": w.alpha, "coeff": w.coeff}}
    step = _as_step_weight(w)
    return {"breakpoints": step.breakpoints.tolist(), "values": step.values.tolist()}

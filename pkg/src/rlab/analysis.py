"""Centered maximal averages and mollifier convolutions on (0, 1).

Functions are zero-extended to the whole line.  The centered maximal
operator of a step function is computed exactly: between consecutive
candidate radii |x - b| (b a breakpoint) the sliding average is
c/(2r) + m/2, monotone in r, so the supremum over all radii is attained
either at a candidate radius or in the r -> 0 limit.

Mollifier kernels phi are scaled as phi_t(x) = phi(x/t)/t.  Convolutions
phi_t * f are assembled from the kernel's exact antiderivative: the result
is piecewise linear for step kernels, piecewise quadratic for the triangle
kernel, and a sampled piecewise-linear approximation on a documented
uniform grid for the smooth bump (whose own normalization constant is
computed by quadrature at build time, never hard-coded).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np

from .norms import SpaceSpec, norm_value
from .stepfn import StepFunction, make_step

__all__ = [
    "Kernel",
    "ScaledKernel",
    "PiecewisePoly",
    "PotentialType",
    "MaximalFunction",
    "DominationReport",
    "SweepRow",
    "SweepResult",
    "box_kernel",
    "triangle_kernel",
    "bump_kernel",
    "custom_step_kernel",
    "kernel_from_json",
    "kernel_to_json",
    "maximal",
    "radial_majorant",
    "is_potential_type",
    "convolve",
    "convolution_values",
    "step_approximate",
    "domination_check",
    "convergence_sweep",
]

_KERNEL_KINDS = ("box", "triangle", "smooth_bump", "custom_step")
_BUMP_PANELS = 8192  # cumulative Simpson panels for the bump's tables
_BUMP_SAMPLES = 2048  # default sampling cells for bump convolutions


@dataclass(frozen=True, eq=False)
class Kernel:
    """Mollifier kernel on (-half_width, half_width), nonnegative.

    box and triangle integrate to 1 by construction; smooth_bump is
    normalized by a quadrature-derived constant; custom_step kernels carry
    whatever values they were built with (see custom_step_kernel).
    """

    kind: str
    half_width: float = 1.0
    breakpoints: Optional[tuple] = None
    values: Optional[tuple] = None

    def __post_init__(self):
        if self.kind not in _KERNEL_KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        hw = float(self.half_width)
        if not (np.isfinite(hw) and hw > 0):
            raise ValueError("kernel half_width must be finite and positive")
        object.__setattr__(self, "half_width", hw)
        if self.kind == "custom_step":
            if self.breakpoints is None or self.values is None:
                raise ValueError("custom_step kernel needs breakpoints and values")
            bk = np.asarray(self.breakpoints, dtype=float)
            vals = np.asarray(self.values, dtype=float)
            if len(vals) != len(bk) - 1 or len(bk) < 2:
                raise ValueError("custom_step needs one value per segment")
            if not np.all(np.diff(bk) > 0):
                raise ValueError("custom_step breakpoints must be strictly increasing")
            if bk[0] != -hw or bk[-1] != hw:
                raise ValueError("custom_step breakpoints must span (-half_width, half_width)")
            if np.any(vals < 0) or not np.all(np.isfinite(vals)):
                raise ValueError("kernel values must be finite and nonnegative")
            object.__setattr__(self, "breakpoints", tuple(bk.tolist()))
            object.__setattr__(self, "values", tuple(vals.tolist()))
        elif self.breakpoints is not None or self.values is not None:
            raise ValueError(f"{self.kind} kernel takes no breakpoints/values")

    # -- cached geometry -------------------------------------------------

    @cached_property
    def _custom_arrays(self):
        bk = np.asarray(self.breakpoints, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        cum = np.concatenate(([0.0], np.cumsum(vals * np.diff(bk))))
        return bk, vals, cum

    @cached_property
    def _bump_table(self):
        # base profile exp(1/(z^2 - 1)) on (-1, 1); cumulative composite
        # Simpson on a fixed grid provides both the normalizing mass and
        # the antiderivative table
        n = _BUMP_PANELS
        z = np.linspace(-1.0, 1.0, 2 * n + 1)
        vals = np.zeros_like(z)
        interior = np.abs(z) < 1.0
        vals[interior] = np.exp(1.0 / (z[interior] ** 2 - 1.0))
        h = z[1] - z[0]
        panel = (h / 3.0) * (vals[0:-2:2] + 4.0 * vals[1:-1:2] + vals[2::2])
        cum = np.concatenate(([0.0], np.cumsum(panel)))
        raw_mass = float(cum[-1])
        return z[::2], cum / raw_mass, raw_mass

    @property
    def mass(self) -> float:
        """Integral of the kernel over the line."""
        if self.kind == "custom_step":
            return float(self._custom_arrays[2][-1])
        return 1.0

    @property
    def support_knots(self) -> np.ndarray:
        """Points where the kernel's piecewise description changes."""
        hw = self.half_width
        if self.kind == "box" or self.kind == "smooth_bump":
            return np.array([-hw, hw])
        if self.kind == "triangle":
            return np.array([-hw, 0.0, hw])
        return np.asarray(self.breakpoints, dtype=float)

    @property
    def cdf_degree(self) -> Optional[int]:
        """Polynomial degree of the antiderivative between knots
        (None: not polynomial, convolve by sampling)."""
        if self.kind in ("box", "custom_step"):
            return 1
        if self.kind == "triangle":
            return 2
        return None

    # -- evaluation --------------------------------------------------------

    def density(self, z):
        za = np.asarray(z, dtype=float)
        hw = self.half_width
        if self.kind == "box":
            return np.where(np.abs(za) < hw, 0.5 / hw, 0.0)
        if self.kind == "triangle":
            return np.maximum(0.0, hw - np.abs(za)) / hw**2
        if self.kind == "smooth_bump":
            _, _, raw_mass = self._bump_table
            u = za / hw
            out = np.zeros_like(u)
            inside = np.abs(u) < 1.0
            out[inside] = np.exp(1.0 / (u[inside] ** 2 - 1.0)) / (raw_mass * hw)
            return out
        bk, vals, _ = self._custom_arrays
        idx = np.clip(np.searchsorted(bk, za, side="right") - 1, 0, len(vals) - 1)
        return np.where((za < bk[0]) | (za >= bk[-1]), 0.0, vals[idx])

    def cdf(self, z):
        """Exact antiderivative: integral of the kernel over (-inf, z]."""
        za = np.asarray(z, dtype=float)
        hw = self.half_width
        if self.kind == "box":
            return np.clip((za + hw) / (2.0 * hw), 0.0, 1.0)
        if self.kind == "triangle":
            zc = np.clip(za, -hw, hw)
            lower = (zc + hw) ** 2 / (2.0 * hw**2)
            upper = 1.0 - (hw - zc) ** 2 / (2.0 * hw**2)
            return np.where(zc <= 0.0, lower, upper)
        if self.kind == "smooth_bump":
            grid, cdf, _ = self._bump_table
            return np.interp(za / hw, grid, cdf)
        bk, _, cum = self._custom_arrays
        return np.interp(za, bk, cum)

    def scaled(self, t: float) -> "ScaledKernel":
        return ScaledKernel(self, t)


def box_kernel(half_width: float = 1.0) -> Kernel:
    return Kernel("box", half_width)


def triangle_kernel(half_width: float = 1.0) -> Kernel:
    return Kernel("triangle", half_width)


def bump_kernel(half_width: float = 1.0) -> Kernel:
    return Kernel("smooth_bump", half_width)


def custom_step_kernel(breakpoints, values, normalize: bool = True) -> Kernel:
    """Step kernel from explicit breakpoints spanning (-h, h).

    With normalize=True (default) the values are scaled to unit mass; with
    normalize=False they are kept verbatim (then the kernel need not be an
    approximate identity and mass may differ from 1).
    """
    bk = np.asarray(breakpoints, dtype=float)
    vals = np.asarray(values, dtype=float)
    if len(bk) < 2:
        raise ValueError("custom_step needs at least two breakpoints")
    hw = float(bk[-1])
    if bk[0] != -hw or hw <= 0:
        raise ValueError("custom_step support must be symmetric: breakpoints from -h to h")
    if normalize:
        mass = float(np.sum(vals * np.diff(bk)))
        if mass <= 0:
            raise ValueError("cannot normalize a kernel with zero mass")
        vals = vals / mass
    # canonical merge of equal adjacent values
    if len(vals) > 1:
        keep = np.concatenate(([True], np.diff(vals) != 0))
        if not np.all(keep):
            idx = np.flatnonzero(keep)
            bk = np.concatenate((bk[idx], bk[-1:]))
            vals = vals[keep]
    return Kernel("custom_step", hw, tuple(bk.tolist()), tuple(vals.tolist()))


@dataclass(frozen=True, eq=False)
class ScaledKernel:
    """phi_t(x) = phi(x/t)/t: same mass, support shrunk to (-t h, t h)."""

    base: Kernel
    t: float

    def __post_init__(self):
        if not (np.isfinite(self.t) and self.t > 0):
            raise ValueError("kernel scale t must be finite and positive")

    def density(self, x):
        return self.base.density(np.asarray(x, dtype=float) / self.t) / self.t

    def cdf(self, x):
        return self.base.cdf(np.asarray(x, dtype=float) / self.t)

    @property
    def mass(self) -> float:
        return self.base.mass

    @property
    def support_knots(self) -> np.ndarray:
        return self.t * self.base.support_knots


def radial_majorant(phi: Kernel) -> Kernel:
    """Least even nonincreasing envelope sup_{|y| >= |x|} phi(y).

    The built-in kernels are already even and nonincreasing in |x| and are
    returned as-is; custom step kernels get an explicit envelope (kept
    unnormalized: the envelope of a unit-mass kernel may have mass > 1).
    """
    if phi.kind != "custom_step":
        return phi
    bk, vals, _ = phi._custom_arrays
    u = np.unique(np.concatenate(([0.0], np.abs(bk))))
    seg_hi = np.maximum(np.abs(bk[:-1]), np.abs(bk[1:]))
    env = np.array([vals[seg_hi > lo].max() for lo in u[:-1]])
    mirrored_bk = np.concatenate((-u[::-1], u[1:]))
    mirrored_vals = np.concatenate((env[::-1], env))
    return custom_step_kernel(mirrored_bk, mirrored_vals, normalize=False)


@dataclass(frozen=True)
class PotentialType:
    """Truthy iff the kernel has an integrable radial majorant; carries the
    majorant's mass."""

    is_potential: bool
    majorant_mass: float

    def __bool__(self) -> bool:
        return self.is_potential


def is_potential_type(phi: Kernel) -> PotentialType:
    """Bounded kernels with bounded support always qualify; the interesting
    output is the majorant mass (1 for the symmetric built-ins, possibly
    larger for asymmetric custom kernels)."""
    env = radial_majorant(phi)
    mass = env.mass
    return PotentialType(bool(np.isfinite(mass)), float(mass))


# -- centered maximal operator ---------------------------------------------


class MaximalFunction:
    """Exact centered Hardy-Littlewood maximal function of |f|.

    Callable at arbitrary points (vectorized); also provides sampled and
    cell-averaged step representations for norm evaluation.  Radii beyond
    the outermost candidate |x - b| give averages total/(2r), strictly
    decreasing, so restricting the sup to r <= 2 loses nothing on (0, 1).
    """

    def __init__(self, f: StepFunction):
        self.source = f
        self._bk = f.breakpoints
        self._absv = np.abs(f.values)
        self._cum = np.concatenate(([0.0], np.cumsum(self._absv * np.diff(f.breakpoints))))

    def _sided_values(self, x: np.ndarray):
        bk, av = self._bk, self._absv
        ir = np.clip(np.searchsorted(bk, x, side="right") - 1, 0, len(av) - 1)
        right = np.where((x < 0.0) | (x >= 1.0), 0.0, av[ir])
        il = np.clip(np.searchsorted(bk, x, side="left") - 1, 0, len(av) - 1)
        left = np.where((x <= 0.0) | (x > 1.0), 0.0, av[il])
        return left, right

    def __call__(self, x):
        xa = np.asarray(x, dtype=float)
        scalar = xa.ndim == 0
        xa = np.atleast_1d(xa).astype(float)
        r = np.abs(xa[:, None] - self._bk[None, :])
        hi = np.interp(xa[:, None] + r, self._bk, self._cum)
        lo = np.interp(xa[:, None] - r, self._bk, self._cum)
        with np.errstate(divide="ignore", invalid="ignore"):
            avgs = np.where(r > 0.0, (hi - lo) / (2.0 * r), 0.0)
        best = avgs.max(axis=1)
        left, right = self._sided_values(xa)
        out = np.maximum(best, 0.5 * (left + right))
        return float(out[0]) if scalar else out

    def sample(self, n: int):
        """Midpoint sampling on an n-cell uniform grid over (0, 1)."""
        x = (np.arange(n) + 0.5) / n
        return x, self(x)

    def cell_average_step(self, n: int, panels: int = 4) -> StepFunction:
        """Step function of per-cell averages (composite Simpson per cell),
        accurate enough that pointwise domination survives cell averaging."""
        edges = np.linspace(0.0, 1.0, n + 1)
        m = 2 * panels
        offs = np.linspace(0.0, 1.0, m + 1)
        pts = edges[:-1, None] + (1.0 / n) * offs[None, :]
        vals = self(pts.ravel()).reshape(n, m + 1)
        w = np.ones(m + 1)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        avgs = (vals @ w) / (3.0 * m)
        return make_step(edges, avgs)


def maximal(f: StepFunction) -> MaximalFunction:
    """Centered maximal function sup_{r>0} (1/2r) int_{x-r}^{x+r} |f|."""
    return MaximalFunction(f)


# -- convolution --------------------------------------------------------


def convolution_values(phi_t: ScaledKernel, f: StepFunction, x) -> np.ndarray:
    """(phi_t * f)(x) via the kernel antiderivative: exact for box,
    triangle, and custom step kernels; table-backed for the smooth bump."""
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    cdfs = phi_t.cdf(xa[:, None] - f.breakpoints[None, :])
    return (cdfs[:, :-1] - cdfs[:, 1:]) @ f.values


@dataclass(eq=False)
class PiecewisePoly:
    """Piecewise polynomial of degree <= 2 with local coefficients.

    On cell i the value is c0 + c1*u + c2*u^2 with u = x - breakpoints[i];
    outside the breakpoint range the function is 0.
    """

    breakpoints: np.ndarray
    coeffs: np.ndarray  # shape (n_cells, 3)

    @classmethod
    def from_step(cls, f: StepFunction) -> "PiecewisePoly":
        n = len(f.values)
        coeffs = np.zeros((n, 3))
        coeffs[:, 0] = f.values
        return cls(f.breakpoints.copy(), coeffs)

    def __call__(self, x):
        xa = np.asarray(x, dtype=float)
        scalar = xa.ndim == 0
        xa = np.atleast_1d(xa)
        bk = self.breakpoints
        idx = np.clip(np.searchsorted(bk, xa, side="right") - 1, 0, len(self.coeffs) - 1)
        u = xa - bk[idx]
        c = self.coeffs[idx]
        out = c[:, 0] + u * (c[:, 1] + u * c[:, 2])
        out = np.where((xa < bk[0]) | (xa > bk[-1]), 0.0, out)
        return float(out[0]) if scalar else out

    @cached_property
    def _cell_integrals(self) -> np.ndarray:
        w = np.diff(self.breakpoints)
        c = self.coeffs
        return c[:, 0] * w + c[:, 1] * w**2 / 2.0 + c[:, 2] * w**3 / 3.0

    def cumulative(self, x) -> np.ndarray:
        """Integral from the left end of the domain up to x (vectorized)."""
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        bk = self.breakpoints
        cum = np.concatenate(([0.0], np.cumsum(self._cell_integrals)))
        idx = np.clip(np.searchsorted(bk, xa, side="right") - 1, 0, len(self.coeffs) - 1)
        u = np.clip(xa - bk[idx], 0.0, None)
        c = self.coeffs[idx]
        partial = u * (c[:, 0] + u * (c[:, 1] / 2.0 + u * c[:, 2] / 3.0))
        out = cum[idx] + partial
        out = np.where(xa <= bk[0], 0.0, out)
        out = np.where(xa >= bk[-1], cum[-1], out)
        return out

    def integral(self, a: float, b: float) -> float:
        lo, hi = self.cumulative(np.array([a, b]))
        return float(hi - lo)

    def _resampled_coeffs(self, new_bk: np.ndarray) -> np.ndarray:
        """Coefficients on a refinement grid (must contain all own
        breakpoints that lie inside [new_bk[0], new_bk[-1]])."""
        bk = self.breakpoints
        left = new_bk[:-1]
        idx = np.searchsorted(bk, left, side="right") - 1
        inside = (idx >= 0) & (left < bk[-1])
        idx = np.clip(idx, 0, len(self.coeffs) - 1)
        u0 = left - bk[idx]
        c = self.coeffs[idx]
        out = np.zeros((len(left), 3))
        out[:, 0] = c[:, 0] + u0 * (c[:, 1] + u0 * c[:, 2])
        out[:, 1] = c[:, 1] + 2.0 * c[:, 2] * u0
        out[:, 2] = c[:, 2]
        out[~inside] = 0.0
        return out

    def _combine(self, other: "PiecewisePoly", sign: float) -> "PiecewisePoly":
        new_bk = np.union1d(self.breakpoints, other.breakpoints)
        ca = self._resampled_coeffs(new_bk)
        cb = other._resampled_coeffs(new_bk)
        return PiecewisePoly(new_bk, ca + sign * cb)

    def __add__(self, other):
        return self._combine(_as_poly(other), 1.0)

    def __sub__(self, other):
        return self._combine(_as_poly(other), -1.0)


def _as_poly(g) -> PiecewisePoly:
    if isinstance(g, PiecewisePoly):
        return g
    if isinstance(g, StepFunction):
        return PiecewisePoly.from_step(g)
    raise ValueError("expected a PiecewisePoly or StepFunction")


def convolve(phi_t: ScaledKernel, f: StepFunction,
             samples: int = _BUMP_SAMPLES) -> PiecewisePoly:
    """phi_t * f with f zero-extended.

    Exact piecewise polynomial (degree 1 for step kernels, 2 for the
    triangle) on the grid of all sums breakpoint + t*knot; the smooth bump
    is sampled on a uniform grid of `samples` cells and returned as a
    piecewise-linear interpolant.
    """
    if not isinstance(phi_t, ScaledKernel):
        raise ValueError("convolve needs a ScaledKernel (use kernel.scaled(t))")
    deg = phi_t.base.cdf_degree
    if deg is None:
        lo = f.breakpoints[0] + phi_t.support_knots[0]
        hi = f.breakpoints[-1] + phi_t.support_knots[-1]
        bkps = np.linspace(lo, hi, samples + 1)
        deg = 1
    else:
        bkps = np.unique((f.breakpoints[:, None] + phi_t.support_knots[None, :]).ravel())
    vals = convolution_values(phi_t, f, bkps)
    w = np.diff(bkps)
    n = len(w)
    coeffs = np.zeros((n, 3))
    coeffs[:, 0] = vals[:-1]
    if deg == 1:
        coeffs[:, 1] = np.diff(vals) / w
    else:
        mids = 0.5 * (bkps[:-1] + bkps[1:])
        vm = convolution_values(phi_t, f, mids)
        vl, vr = vals[:-1], vals[1:]
        coeffs[:, 2] = (2.0 * vl + 2.0 * vr - 4.0 * vm) / w**2
        coeffs[:, 1] = (vr - vl) / w - coeffs[:, 2] * w
    return PiecewisePoly(bkps, coeffs)


def step_approximate(g: Union[PiecewisePoly, StepFunction], n: int = 4096) -> StepFunction:
    """n-cell uniform partition of (0, 1) with exact cell averages of g.

    Refinement contract: norms evaluated at n and 2n differ by a small
    drift that shrinks as n grows; convergence_sweep reports it.
    """
    if n < 2:
        raise ValueError("need at least two cells")
    g = _as_poly(g)
    edges = np.linspace(0.0, 1.0, n + 1)
    cums = g.cumulative(edges)
    return make_step(edges, np.diff(cums) * n)


# -- domination and convergence reports -------------------------------------


@dataclass
class DominationReport:
    """Grid check of |phi_t * f| <= Mf."""

    min_slack: float
    max_violation: float
    worst_x: float
    worst_t: float
    n_points: int
    tolerance: float

    @property
    def holds(self) -> bool:
        return self.min_slack >= -self.tolerance


def domination_check(phi: Kernel, f: StepFunction, x_grid, t_grid,
                     tolerance: float = 1e-9) -> DominationReport:
    """Evaluate Mf - |phi_t * f| on the grid and report the worst slack."""
    x = np.asarray(x_grid, dtype=float)
    M = maximal(f)(x)
    min_slack = math.inf
    worst = (float("nan"), float("nan"))
    for t in np.asarray(t_grid, dtype=float):
        conv = convolution_values(phi.scaled(float(t)), f, x)
        slack = M - np.abs(conv)
        i = int(np.argmin(slack))
        if slack[i] < min_slack:
            min_slack = float(slack[i])
            worst = (float(x[i]), float(t))
    return DominationReport(
        min_slack=min_slack,
        max_violation=max(0.0, -min_slack),
        worst_x=worst[0],
        worst_t=worst[1],
        n_points=len(x) * len(np.atleast_1d(t_grid)),
        tolerance=tolerance,
    )


@dataclass
class SweepRow:
    t: float
    err: float
    conv_norm: float
    maximal_norm: float
    ratio: float
    err_drift: float


@dataclass
class SweepResult:
    rows: list
    cells: int

    def to_csv(self, fh, header_note: str = "") -> None:
        if header_note:
            fh.write(f"# {header_note}\n")
        drift = max((r.err_drift for r in self.rows), default=0.0)
        fh.write(f"# cells={self.cells} max_err_drift={drift:.17g}\n")
        fh.write("t,err,conv_norm,maximal_norm,ratio\n")
        for r in self.rows:
            fh.write(
                f"{r.t:.17g},{r.err:.17g},{r.conv_norm:.17g},"
                f"{r.maximal_norm:.17g},{r.ratio:.17g}\n"
            )


def convergence_sweep(f: StepFunction, phi: Kernel, t_list: Sequence[float],
                      spec: SpaceSpec, cells: int = 4096,
                      grid_size: Optional[int] = None) -> SweepResult:
    """Approximate-identity sweep: for each scale t record the norm of
    phi_t * f - f, the norm of phi_t * f, and its ratio to the maximal
    function's norm.

    t_list must be positive and strictly decreasing.  Norms of convolution
    outputs go through step_approximate at `cells`; the reported err_drift
    is the relative change when recomputed at 2*cells.
    """
    ts = [float(t) for t in t_list]
    if not ts or any(t <= 0 for t in ts) or any(b >= a for a, b in zip(ts, ts[1:])):
        raise ValueError("t_list must be positive and strictly decreasing")
    mf_step = maximal(f).cell_average_step(cells)
    mnorm = norm_value(mf_step, spec, grid_size)
    rows = []
    for t in ts:
        conv = convolve(phi.scaled(t), f)
        diff = conv - f
        err = norm_value(step_approximate(diff, cells), spec, grid_size)
        err_fine = norm_value(step_approximate(diff, 2 * cells), spec, grid_size)
        drift = abs(err - err_fine) / max(err, 1e-300)
        cnorm = norm_value(step_approximate(conv, cells), spec, grid_size)
        rows.append(SweepRow(
            t=t, err=err, conv_norm=cnorm, maximal_norm=mnorm,
            ratio=cnorm / mnorm if mnorm > 0 else math.inf,
            err_drift=drift,
        ))
    return SweepResult(rows=rows, cells=cells)


# -- JSON ------------------------------------------------------------------


def kernel_from_json(obj: dict) -> Kernel:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError('kernel JSON needs a "kind" field')
    kind = obj["kind"]
    hw = float(obj.get("half_width", 1.0))
    if kind == "custom_step":
        if "breakpoints" not in obj or "values" not in obj:
            raise ValueError("custom_step kernel JSON needs breakpoints and values")
        return custom_step_kernel(obj["breakpoints"], obj["values"],
                                  normalize=bool(obj.get("normalize", True)))
    if kind not in _KERNEL_KINDS:
        raise ValueError(f"unknown kernel kind {kind!r}")
    return Kernel(kind, hw)


def kernel_to_json(k: Kernel) -> dict:
    out = {"kind": k.kind, "half_width": k.half_width}
    if k.kind == "custom_step":
        out["breakpoints"] = list(k.breakpoints)
        out["values"] = list(k.values)
        out["normalize"] = False
    return out

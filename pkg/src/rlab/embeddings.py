"""Inclusion conditions between grand Lorentz spaces and measures.

Condition checks evaluate their defining quantity on the clustered eps
grid and report the grid supremum; "if and only if" statements are probed
one-sidedly (condition implies a norm inequality on a seeded corpus, and
non-embedding is witnessed by shrinking indicator sets) since universal
quantification over all functions is not decidable numerically.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .corpus import random_step_function
from .norms import (SpaceSpec, eps_grid, grand_lorentz_pq_norm,
                    grand_lorentz_slice_values, norm_value)
from .quadrature import integrate_adaptive
from .stepfn import MeasureDensity, StepFunction, characteristic, merge_segment_grids, step_to_json
from .weights import PowerWeight, Weight, WeightPrimitive, w_primitive

__all__ = [
    "EmbeddingVerdict",
    "ProbeRow",
    "ProbeReport",
    "SliceDominationReport",
    "WeightPrimitive",
    "w_primitive",
    "wholds_check",
    "cross_weight_check",
    "downward_check",
    "domination_constant",
    "mutual_ac",
    "empirical_constant",
    "atom_bound",
    "shrinking_probe",
    "domination_slice_check",
]


@dataclass
class EmbeddingVerdict:
    """Outcome of an inclusion check.

    condition_value is the checked quantity (sup over the eps grid, or an
    empirical max ratio); for condition checks holds is its finiteness.
    """

    condition_value: float
    holds: bool
    witness: Optional[str] = None
    empirical_constant: Optional[float] = None
    seed: Optional[int] = None

    def to_json(self) -> dict:
        cv = self.condition_value
        return {
            "condition_value": cv if math.isfinite(cv) else "inf",
            "holds": self.holds,
            "empirical_constant": self.empirical_constant,
            "witness": self.witness,
            "seed": self.seed,
        }


def _ordered_pair(lo: float, hi: float, lo_name: str, hi_name: str,
                  strict: bool):
    """Validate 1 < lo <= hi (or lo < hi when strict), both finite."""
    lo, hi = float(lo), float(hi)
    if not (lo > 1 and math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError(f"need finite exponents with {lo_name} > 1")
    if strict and not lo < hi:
        raise ValueError(f"need {lo_name} < {hi_name}")
    if not strict and not lo <= hi:
        raise ValueError(f"need {lo_name} <= {hi_name}")
    return lo, hi


def wholds_check(p: float, q: float, w: Weight,
                 grid_size: Optional[int] = None) -> EmbeddingVerdict:
    """Same-weight inclusion condition: sup over the eps grid in (0, p-1)
    of W(1)^(1/(q-eps) - 1/(p-eps)), finite iff the inclusion constant is.

    Needs 1 < p <= q.
    """
    p, q = _ordered_pair(p, q, "p", "q", strict=False)
    w1 = w_primitive(w).at_one
    eps = eps_grid(p - 1.0, grid_size)
    expo = 1.0 / (q - eps) - 1.0 / (p - eps)
    if w1 == 0.0:
        vals = np.where(expo < 0, math.inf, np.where(expo == 0, 1.0, 0.0))
    else:
        vals = w1**expo
    i = int(np.argmax(vals))
    value = float(vals[i])
    return EmbeddingVerdict(
        condition_value=value,
        holds=math.isfinite(value),
        witness=f"eps={eps[i]:.17g}",
    )


def cross_weight_check(p: float, q: float, w: Weight, v: Weight,
                       grid_size: Optional[int] = None) -> EmbeddingVerdict:
    """Two-weight inclusion condition: sup over the eps grid in (0, p-1)
    of W(1)^(1/(q-eps)) * V(1)^(-1/(p-eps)).

    Needs 1 < p <= q and V(1) > 0.
    """
    p, q = _ordered_pair(p, q, "p", "q", strict=False)
    w1 = w_primitive(w).at_one
    v1 = w_primitive(v).at_one
    if v1 <= 0.0:
        raise ValueError("degenerate target weight: V(1) = 0")
    eps = eps_grid(p - 1.0, grid_size)
    vals = w1 ** (1.0 / (q - eps)) * v1 ** (-1.0 / (p - eps))
    i = int(np.argmax(vals))
    value = float(vals[i])
    return EmbeddingVerdict(
        condition_value=value,
        holds=math.isfinite(value),
        witness=f"eps={eps[i]:.17g}",
    )


class _ExtendedWeight:
    """Weight with density and primitive on (0, upper]; beyond t = 1 the
    density continues with its value at 1 (constant extension)."""

    def __init__(self, w: Weight):
        self.weight = w
        self.prim = w_primitive(w)
        self.w1 = self.prim.at_one
        if isinstance(w, PowerWeight):
            self.last = w.coeff
            self.interior = np.empty(0)
            self.positive_near_zero = w.coeff > 0
        else:
            step = w.density if isinstance(w, MeasureDensity) else w
            self._step = step
            self.last = float(step.values[-1])
            self.interior = step.breakpoints[1:-1].copy()
            self.positive_near_zero = step.values[0] > 0

    def density(self, t: np.ndarray) -> np.ndarray:
        ta = np.asarray(t, dtype=float)
        if isinstance(self.weight, PowerWeight):
            inner = self.weight(np.minimum(ta, 1.0))
        else:
            step = self._step
            idx = np.clip(np.searchsorted(step.breakpoints, ta, side="right") - 1,
                          0, len(step.values) - 1)
            inner = step.values[idx]
        return np.where(ta > 1.0, self.last, inner)

    def primitive(self, t: np.ndarray) -> np.ndarray:
        ta = np.asarray(t, dtype=float)
        base = self.prim(np.minimum(ta, 1.0))
        return np.where(ta > 1.0, self.w1 + self.last * (ta - 1.0), base)


def downward_check(p: float, q: float, w: Weight, v: Weight,
                   upper: float = 1.0, grid_size: Optional[int] = None,
                   rel_tol: float = 1e-10) -> EmbeddingVerdict:
    """Downward inclusion condition for 1 < q < p, with r from
    1/r = 1/q - 1/p: for each grid eps in (0, q-1) the quantity

        (int_0^upper (W(t)/V(t))^((r-eps)/(p-eps)) w(t) dt)^(1/(r-eps))

    by adaptive quadrature on the weight segments; holds iff every value is
    finite.  upper defaults to 1 (the ambient interval); larger values
    extend both weights beyond 1 by their density at 1.
    """
    q, p = _ordered_pair(q, p, "q", "p", strict=True)
    r = p * q / (p - q)
    if not (np.isfinite(upper) and upper >= 1.0):
        raise ValueError("upper must be >= 1")
    ew, ev = _ExtendedWeight(w), _ExtendedWeight(v)
    if not ev.positive_near_zero:
        raise ValueError("target weight primitive vanishes near 0")
    knots = np.unique(np.concatenate((
        [0.0, 1.0, upper], ew.interior, ev.interior)))
    knots = knots[(knots >= 0.0) & (knots <= upper)]
    eps = eps_grid(q - 1.0, grid_size)
    values = np.empty(len(eps))
    for k, e in enumerate(eps):
        beta = (r - e) / (p - e)

        def integrand(t, beta=beta):
            return (ew.primitive(t) / ev.primitive(t)) ** beta * ew.density(t)

        total = 0.0
        for a, b in zip(knots[:-1], knots[1:]):
            total += integrate_adaptive(integrand, a, b, rel_tol=rel_tol).value
        values[k] = total ** (1.0 / (r - e))
    i = int(np.argmax(values))
    value = float(values[i])
    return EmbeddingVerdict(
        condition_value=value,
        holds=bool(np.all(np.isfinite(values))),
        witness=f"eps={eps[i]:.17g}",
    )


def domination_constant(mu: MeasureDensity, nu: MeasureDensity) -> float:
    """Least C with nu(A) <= C mu(A) for every measurable A: the essential
    sup of the density ratio, +inf where nu lives off mu."""
    _, dm, dn = merge_segment_grids(mu.density.breakpoints, mu.density.values,
                                    nu.density.breakpoints, nu.density.values)
    if np.any((dn > 0) & (dm == 0)):
        return math.inf
    live = dm > 0
    if not np.any(live):
        return 0.0
    return float(np.max(dn[live] / dm[live]))


def mutual_ac(mu: MeasureDensity, nu: MeasureDensity) -> bool:
    """Mutual absolute continuity: the step densities vanish on exactly the
    same segments."""
    _, dm, dn = merge_segment_grids(mu.density.breakpoints, mu.density.values,
                                    nu.density.breakpoints, nu.density.values)
    return bool(np.all((dm == 0) == (dn == 0)))


def empirical_constant(source: SpaceSpec, target: SpaceSpec, corpus_size: int,
                       seed: int, grid_size: Optional[int] = None) -> EmbeddingVerdict:
    """Max ratio target-norm/source-norm over a seeded random corpus
    (generator: corpus.random_step_function, version 1); the witness is the
    maximizing function."""
    if corpus_size < 1:
        raise ValueError("corpus_size must be positive")
    rng = np.random.default_rng(seed)
    best = 0.0
    best_fn: Optional[StepFunction] = None
    best_idx = -1
    for i in range(corpus_size):
        f = random_step_function(rng)
        sn = norm_value(f, source, grid_size)
        tn = norm_value(f, target, grid_size)
        if sn == 0.0:
            if tn > 0.0:
                return EmbeddingVerdict(
                    condition_value=math.inf,
                    holds=False,
                    witness=f"corpus[{i}] has source norm 0, target norm {tn:.17g}: "
                            + json.dumps(step_to_json(f)),
                    empirical_constant=None,
                    seed=seed,
                )
            continue
        ratio = tn / sn
        if ratio > best:
            best, best_fn, best_idx = ratio, f, i
    witness = None
    if best_fn is not None:
        witness = f"corpus[{best_idx}]: " + json.dumps(step_to_json(best_fn))
    return EmbeddingVerdict(
        condition_value=best,
        holds=math.isfinite(best),
        witness=witness,
        empirical_constant=best,
        seed=seed,
    )


def _check_probe_exponents(p: float, q: float, r: float, s: float):
    p, q, r, s = (float(x) for x in (p, q, r, s))
    if not (1 < q <= p < r <= s and math.isfinite(s)):
        raise ValueError("need 1 < q <= p < r <= s")
    return p, q, r, s


def atom_bound(p: float, q: float, r: float, s: float, C: float) -> float:
    """Smallest admissible measure of a non-null set if an embedding
    L^{p,q)} -> L^{r,s)} held with constant C:
    M = ((s-1)/(C(q-1)))^(rp/(r-p))."""
    p, q, r, s = _check_probe_exponents(p, q, r, s)
    if not C > 0:
        raise ValueError("constant C must be positive")
    return float(((s - 1.0) / (C * (q - 1.0))) ** (r * p / (r - p)))


@dataclass
class ProbeRow:
    a: float
    source_norm: float
    target_norm: float
    ratio: float


@dataclass
class ProbeReport:
    """Norm ratios of shrinking indicators chi_(0,a); divergence as a -> 0
    witnesses non-embedding over Lebesgue measure."""

    p: float
    q: float
    r: float
    s: float
    rows: list

    def decade_growth(self) -> list:
        """Ratio growth factors normalized per decade of shrink, for each
        consecutive pair of rows."""
        out = []
        for lo, hi in zip(self.rows[:-1], self.rows[1:]):
            decades = math.log10(lo.a / hi.a)
            if decades <= 0 or hi.ratio <= 0 or lo.ratio <= 0:
                out.append(math.nan)
            else:
                out.append((hi.ratio / lo.ratio) ** (1.0 / decades))
        return out

    def to_csv(self, fh, header_note: str = "") -> None:
        if header_note:
            fh.write(f"# {header_note}\n")
        fh.write("a,source_norm,target_norm,ratio\n")
        for row in self.rows:
            fh.write(f"{row.a:.17g},{row.source_norm:.17g},"
                     f"{row.target_norm:.17g},{row.ratio:.17g}\n")


def shrinking_probe(p: float, q: float, r: float, s: float,
                    a_list: Sequence[float],
                    grid_size: Optional[int] = None) -> ProbeReport:
    """Grand Lorentz norms of chi_(0,a) in the source (p,q) and target
    (r,s) spaces over Lebesgue measure, for each a in a_list."""
    p, q, r, s = _check_probe_exponents(p, q, r, s)
    rows = []
    for a in a_list:
        a = float(a)
        if not 0.0 < a <= 1.0:
            raise ValueError("probe sets need a in (0, 1]")
        f = characteristic([(0.0, a)])
        src = grand_lorentz_pq_norm(f, p, q, grid_size=grid_size).value
        tgt = grand_lorentz_pq_norm(f, r, s, grid_size=grid_size).value
        rows.append(ProbeRow(a=a, source_norm=src, target_norm=tgt,
                             ratio=tgt / src if src > 0 else math.inf))
    return ProbeReport(p=p, q=q, r=r, s=s, rows=rows)


@dataclass
class SliceDominationReport:
    """Fixed-eps comparison of grand Lorentz slices under two measures
    weighting the t-integral (shared Lebesgue rearrangement):
    slice_nu(eps) <= C^(1/(q-eps)) * slice_mu(eps)."""

    constant: float
    min_slack: float
    worst_eps: float
    tolerance: float

    @property
    def holds(self) -> bool:
        return math.isfinite(self.constant) and self.min_slack >= -self.tolerance


def domination_slice_check(f: StepFunction, p: float, q: float,
                           mu: MeasureDensity, nu: MeasureDensity,
                           grid_size: Optional[int] = None,
                           tolerance: float = 1e-10) -> SliceDominationReport:
    """If nu <= C mu then each eps slice of the nu-weighted grand Lorentz
    functional is at most C^(1/(q-eps)) times the mu-weighted one; reports
    the worst slack over the eps grid."""
    C = domination_constant(mu, nu)
    if not math.isfinite(C):
        return SliceDominationReport(constant=math.inf, min_slack=-math.inf,
                                     worst_eps=math.nan, tolerance=tolerance)
    eps = eps_grid(float(q) - 1.0, grid_size)
    slice_nu = grand_lorentz_slice_values(f, p, q, eps, t_weight=nu)
    slice_mu = grand_lorentz_slice_values(f, p, q, eps, t_weight=mu)
    slack = C ** (1.0 / (float(q) - eps)) * slice_mu - slice_nu
    i = int(np.argmin(slack))
    return SliceDominationReport(constant=C, min_slack=float(slack[i]),
                                 worst_eps=float(eps[i]), tolerance=tolerance)

"""
Decreasing rearrangement of a step function
===========================================

Builds a small step function, looks at its distribution function, its
decreasing rearrangement, and the running-average function, then checks
equimeasurability numerically.
"""

import numpy as np

from rlab import (average, distribution, integrate, make_step, pointwise,
                  rearrangement)

# a step function on (0, 1) with three plateaus
f = make_step([0.0, 0.2, 0.5, 1.0], [3.0, 1.0, 2.0])
print("f breakpoints:", f.breakpoints.tolist())
print("f values:     ", f.values.tolist())

# the distribution function lambda(y) = |{ |f| > y }| is a right-continuous
# step function of the level y
lam = distribution(f)
for y in (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0):
    print(f"  lambda({y:3.1f}) = {lam(y):.4f}")

# the rearrangement sorts the plateaus by value, largest first
fstar = rearrangement(f)
print("f* breakpoints:", fstar.breakpoints.tolist())
print("f* values:     ", fstar.values.tolist())

# same total integral: rearrangement preserves every L^p mass
print("integral of f :", integrate(f))
print("integral of f*:", integrate(fstar))
for r in (1.0, 2.0, 3.0):
    fr = make_step(f.breakpoints, np.abs(f.values) ** r)
    sr = make_step(fstar.breakpoints, fstar.values**r)
    print(f"  r={r}: int |f|^r = {integrate(fr):.6f}, int (f*)^r = {integrate(sr):.6f}")

# the average function f**(t) = (1/t) int_0^t f* dominates f*
favg = average(fstar)
print("f**(t) vs f*(t):")
for t in (0.1, 0.2, 0.5, 0.75, 1.0):
    print(f"  t={t:4.2f}: f**={favg(t):.4f} >= f*={fstar(t):.4f}")

# rearrangement also works against a non-uniform measure: doubling the
# density on the left half stretches the high plateau
mu_density = make_step([0.0, 0.5, 1.0], [2.0, 1.0])
from rlab import MeasureDensity

g = rearrangement(f, MeasureDensity(mu_density))
print("f* under the weighted measure:")
print("  breakpoints:", g.breakpoints.tolist())
print("  values:     ", g.values.tolist())

# pointwise calculus stays available on the results
h = pointwise("max", fstar, make_step([0.0, 1.0], [1.5]))
print("max(f*, 1.5) values:", h.values.tolist())

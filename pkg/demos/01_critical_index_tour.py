"""Tour of the measure catalog: masses, tails, critical indices, trichotomy.

Every downstream estimate in the package is steered by one scalar of the
measure: the critical index c in [1, 2] (equivalently s0 = 2 - 2/c, the
largest s with integral (1-r)^-s d nu finite). This script prints the catalog
alongside the quantities the boundedness classification consumes.
"""

import numpy as np

from shimorin_lab.classify import standard_estimate
from shimorin_lab.measure import (
    catalog,
    carleson_constant,
    critical_index,
    hyperbolic_integral,
    singular_moment,
    tail_mass,
    total_mass,
)

cat = catalog()

print(f"{'measure':22s} {'mass':>8s} {'c':>7s} {'s0':>5s} {'attained':>8s}")
for name, mu in cat.items():
    ci = critical_index(mu)
    print(f"{name:22s} {total_mass(mu):8.4f} {ci.c:7.4f} {ci.s0:5.2f} {ci.attained:>8s}")

# ---------------------------------------------------------------------------
# tails and singular moments for one measure from each regime
# ---------------------------------------------------------------------------
print("\ntail masses nu([1-t, 1)) at dyadic t:")
for name in ("lebesgue", "power_-0.5", "nu_alpha_1.5", "delta1"):
    tails = [tail_mass(cat[name], 2.0 ** -j) for j in (1, 4, 8, 12)]
    print(f"  {name:14s}", "  ".join(f"{v:.3e}" for v in tails))

print("\nsingular moments integral (1-r)^-s d nu across s:")
for name in ("delta0", "power_-0.5", "nu_alpha_1.5"):
    row = []
    for s in (0.25, 0.5, 0.75):
        v = singular_moment(cat[name], s)
        row.append(f"s={s}: {v.value:.4f}" if v.is_finite else f"s={s}: divergent")
    print(f"  {name:14s}", "   ".join(row))

# ---------------------------------------------------------------------------
# the trichotomy deciding behaviour ON the critical line
# ---------------------------------------------------------------------------
print("\nstandard-estimate trichotomy (the critical-line package):")
for name in ("delta1", "power_-0.5", "power_0.5", "lebesgue"):
    est = standard_estimate(cat[name])
    witness = f"{est.witness.value:.4f}" if est.witness.is_finite else "divergent"
    print(f"  {name:14s} c={est.c_nu:.4f}  branch={est.branch:14s} "
          f"holds={str(est.holds):5s} witness={witness}")

# the Carleson constant behind the power_-0.5 verdict is exactly 2:
# tail(t)/t^(1/2) = (2 sqrt(t))/sqrt(t) for every t
v = carleson_constant(cat["power_-0.5"], 0.5)
print(f"\npower_-0.5 Carleson constant at exponent 1/2: {v.value:.12f}")
h = hyperbolic_integral(cat["power_0.5"])
print(f"power_0.5 hyperbolic integral: {h.value:.12f} (finite, so the c=2 package holds)")

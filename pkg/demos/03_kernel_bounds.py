"""Kernel evaluation and every explicit bound: identity, envelopes, CZ margins.

The kernel K(z, lam) = (1 - z conj(lam))^-1 integral (1 - r z conj(lam))^-1 d nu
interpolates between the Hardy kernel (atom at 0) and the Bergman kernel (atom
at 1), and for the normalized fractional family it IS (1 - z conj(lam))^-alpha.
This script exercises that identity, the L^p-norm envelope, the sup-norm
sandwich, and the predicted Calderon-Zygmund constants with their margins.
"""

import numpy as np

from shimorin_lab.kernel import (
    cz_constants,
    cz_pointwise_reports,
    eval_kernel,
    kernel_lp_norm,
    pnorm_envelope,
    supnorm_sandwich,
)
from shimorin_lab.measure import RadialMeasure, catalog

cat = catalog()

# ---------------------------------------------------------------------------
# the fractional-kernel identity, spot-checked
# ---------------------------------------------------------------------------
print("fractional family realizes (1 - z conj(lam))^-alpha:")
for alpha in (1.25, 1.5, 1.75):
    mu = RadialMeasure.nu_alpha(alpha)
    z, lam = 0.7, 0.55 + 0.6j
    got = eval_kernel(mu, z, lam)
    exact = (1.0 - z * np.conj(lam)) ** -alpha
    print(f"  alpha={alpha}: |K - exact|/|exact| = {abs(got - exact)/abs(exact):.2e}")

# ---------------------------------------------------------------------------
# norm envelope: lower <= ||K(z,.)||_p <= upper on the asserted band
# ---------------------------------------------------------------------------
print("\nkernel L^p norms inside their envelope (p in the asserted band [1.5, 3]):")
print(f"{'measure':14s} {'|z|':>5s} {'p':>4s} {'lower':>9s} {'norm':>9s} {'upper':>9s}")
for name in ("delta0", "lebesgue", "power_-0.5", "nu_alpha_1.5"):
    for z, p in ((0.6, 1.5), (0.95, 2.0), (0.99, 3.0)):
        norm = kernel_lp_norm(cat[name], z, p)
        lo, up = pnorm_envelope(cat[name], z, p)
        print(f"{name:14s} {z:5.2f} {p:4.1f} {lo:9.4f} {norm:9.4f} {up:9.4f}")

# ---------------------------------------------------------------------------
# sup-norm sandwich for 1 < p < 2 (hypothesis beta > 2 - 2/p)
# ---------------------------------------------------------------------------
print("\nsup-norm sandwich over the radial sweep:")
for p, beta in ((1.5, 1.0), (1.2, 0.5)):
    mx, lo, up = supnorm_sandwich(RadialMeasure.power(1.0, beta), p)
    print(f"  p={p}, beta={beta}: {lo:.4f} <= max_z ||K||_p = {mx:.4f} <= {up:.4f}")

# ---------------------------------------------------------------------------
# Calderon-Zygmund constants per the trichotomy, with observed margins
# ---------------------------------------------------------------------------
print("\npredicted CZ constants and worst sampled margins (1000 boundary pairs):")
for name in ("delta1", "power_-0.5", "power_0.5"):
    pred = cz_constants(cat[name])
    reps = cz_pointwise_reports(cat[name], seed=1, n=1000)
    print(f"  {name:12s} order={pred.order:.3f} size={pred.size:.4f} "
          f"smooth={pred.smooth:.4f}  margins: "
          + ", ".join(f"{r.worst_margin:.3f}" for r in reps))
print("  (margin = min (rhs-lhs)/rhs over the cloud; positive = bound held)")

pred = cz_constants(cat["lebesgue"])
print(f"  lebesgue     not applicable: {pred.reason}")

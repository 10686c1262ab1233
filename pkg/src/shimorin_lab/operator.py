"""Apply the disk operator to functions by three independent routes.

For an analytic f = sum a_n z^n the operator multiplies Taylor coefficients by
the moment sequence m_n. Two further routes exist for cross-checking and for
non-analytic inputs: direct disk quadrature of the kernel-weighted integral,
and the nested radial formula (measures with no atom at 1)

    T f(z) = integral (1-r)^-1 integral_r^1 f(t z) dt d nu(r).

Route agreement on polynomials is one of the package's acceptance gates.
The module also houses the coefficient criterion for Bergman-space membership:
for a_n >= 0 monotone (or dyadically block-comparable), f is in the p-Bergman
space iff sum (n+1)^(p-3) a_n^p converges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._gridquad import gauss_rule
from .diskquad import DiskRule, SampledFunction
from .kernel import eval_kernel
from .measure import RadialMeasure
from .multiplier import dyadic_block_verdict, moment_prefix

__all__ = [
    "TaylorFunction",
    "apply_multiplier",
    "apply_quadrature",
    "apply_radial",
    "bergman_membership",
    "HypothesisViolation",
]


@dataclass(frozen=True)
class TaylorFunction:
    """Analytic function represented by a finite Taylor coefficient sequence."""

    coefficients: tuple[complex, ...]

    @classmethod
    def from_array(cls, coeffs) -> "TaylorFunction":
        arr = np.asarray(coeffs, dtype=complex).ravel()
        if arr.size == 0 or not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be a non-empty finite sequence")
        return cls(tuple(arr.tolist()))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coeff_array(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=complex)

    def __call__(self, z) -> np.ndarray | complex:
        z = np.asarray(z, dtype=complex)
        c = self.coeff_array()
        out = np.full(z.shape, c[-1], dtype=complex)
        for a in c[-2::-1]:
            out = out * z + a
        return complex(out) if out.ndim == 0 else out

    def derivative(self) -> "TaylorFunction":
        c = self.coeff_array()
        if c.size == 1:
            return TaylorFunction((0.0 + 0.0j,))
        return TaylorFunction.from_array(c[1:] * np.arange(1, c.size))

    def as_sampled(self) -> SampledFunction:
        return SampledFunction(self.__call__, self.derivative().__call__)

    @classmethod
    def truncate_series(cls, coeff_fn, radius: float, tol: float = 1e-12,
                        max_terms: int = 200_000) -> "TaylorFunction":
        """Truncate a_n = coeff_fn(n) so the geometric tail at ``radius`` is < tol."""
        if not (0.0 < radius < 1.0):
            raise ValueError("truncation radius must lie in (0, 1)")
        block, coeffs, n0 = 256, [], 0
        while n0 < max_terms:
            n = np.arange(n0, n0 + block)
            a = np.asarray(coeff_fn(n), dtype=complex)
            coeffs.append(a)
            bound = np.abs(a[-1]) * radius ** n[-1] / (1.0 - radius)
            if bound < tol:
                break
            n0 += block
        return cls.from_array(np.concatenate(coeffs))


def apply_multiplier(mu: RadialMeasure, f: TaylorFunction) -> TaylorFunction:
    """Coefficient route: a_n -> m_n a_n."""
    m = moment_prefix(mu, f.degree).values
    return TaylorFunction.from_array(m * f.coeff_array())


def apply_quadrature(mu: RadialMeasure, f, z, rule: DiskRule) -> complex:
    """Kernel route: quadrature of integral K(z, lam) f(lam) dA(lam).

    Declared budget: uniform-angular rules resolve the kernel's angular
    concentration only for moderate |z| (see the rule's angular count), so
    route-agreement checks cap |z| at 0.9.
    """
    z = complex(z)
    total = 0.0 + 0.0j
    for nodes, weights in rule.iter_blocks():
        vals = np.asarray(f(nodes), dtype=complex)
        total += np.dot(weights * vals, eval_kernel(mu, np.full(nodes.shape, z), nodes))
    return complex(total)


def apply_radial(mu: RadialMeasure, f, z, inner_order: int = 12,
                 inner_panels: int = 8) -> complex:
    """Radial route for analytic f: nested 1-D quadrature of the gap-averaged dilates.

    Inner integral (1/u) integral over t in [1-u, 1] of f(t z) via composite
    Gauss; requires nu({1}) = 0.
    """
    if mu.mass_at_one:
        raise ValueError("radial formula requires no atom at 1")
    z = complex(z)
    u_outer, w_outer = mu.pushforward_rule()
    pairs = list(zip(u_outer, w_outer)) + [(1.0 - a.x, a.mass) for a in mu.atoms]
    x, gw = gauss_rule(inner_order)
    edges = np.linspace(0.0, 1.0, inner_panels + 1)
    half = 0.5 * np.diff(edges)
    mid = edges[:-1] + half
    s = (mid[:, None] + half[:, None] * x[None, :]).ravel()   # composite nodes on [0, 1]
    sw = (half[:, None] * gw[None, :]).ravel()                # weights summing to 1
    total = 0.0 + 0.0j
    for u, wt in pairs:
        t = 1.0 - u * (1.0 - s)                               # maps [0, 1] -> [1-u, 1]
        # dt = u ds cancels the 1/u prefactor, leaving a plain average
        avg = np.dot(sw, np.asarray(f(t * z), dtype=complex))
        total += wt * avg
    return complex(total)


class HypothesisViolation(ValueError):
    """Coefficient sequence fails both the monotone and block-comparable hypotheses."""


def _blocks(N: int):
    k = 0
    while 2 ** k <= N:
        yield np.arange(2 ** k, min(2 ** (k + 1), N + 1))
        k += 1


def bergman_membership(a, p: float, N: int | None = None,
                       block_constant: float = 16.0) -> tuple[float, str]:
    """Partial sum of sum (n+1)^(p-3) a_n^p plus a dyadic-block growth verdict.

    ``a`` is a non-negative coefficient array (or callable n -> a_n with N
    given). The hypothesis of the test — monotone, or per-dyadic-block
    monotone with in-block ratios bounded — is checked on the computed range
    and a HypothesisViolation is raised when neither form holds.
    """
    if not (1.0 < p < np.inf):
        raise ValueError(f"p must lie in (1, inf), got {p}")
    if callable(a):
        if N is None:
            raise ValueError("N is required when a is a callable")
        a = np.asarray(a(np.arange(N + 1)), dtype=float)
    else:
        a = np.asarray(a, dtype=float)
        N = a.size - 1
    if np.any(a < 0.0):
        raise HypothesisViolation("coefficients must be non-negative")
    d = np.diff(a)
    monotone = bool(np.all(d >= 0.0) or np.all(d <= 0.0))
    if not monotone:
        for blk in _blocks(N):
            if blk.size < 2:
                continue
            sub = a[blk]
            db = np.diff(sub)
            if not (np.all(db >= 0.0) or np.all(db <= 0.0)):
                raise HypothesisViolation(f"block [{blk[0]}, {blk[-1]}] not monotone")
            pos = sub[sub > 0.0]
            if pos.size and pos.max() > block_constant * pos.min():
                raise HypothesisViolation(
                    f"block [{blk[0]}, {blk[-1]}] ratio exceeds {block_constant}")
    n = np.arange(N + 1)
    terms = (n + 1.0) ** (p - 3.0) * a ** p
    # complete blocks [2^k, 2^(k+1)) only
    sums = [terms[blk].sum() for blk in _blocks(N) if blk[-1] == 2 * blk[0] - 1]
    return float(terms.sum()), dyadic_block_verdict(np.array(sums))

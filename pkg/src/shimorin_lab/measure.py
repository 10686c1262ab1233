"""Finite positive radial measures on [0, 1] and their scalar functionals.

A measure is a finite sum of point masses and density components from a small
catalog (power-type densities kappa*(1-r)^beta, the normalized family
r^(alpha-2) (1-r)^(1-alpha) / (Gamma(alpha-1) Gamma(2-alpha)) dr for
alpha in (1, 2), and user-tabulated densities). The functionals computed here

    total mass            nu([0, 1])
    tail mass             nu([1-t, 1))
    singular moments      integral (1-r)^-s  and  (1-r^2)^-s  d nu
    critical index        c = sup{ 1 <= c < 2 : (1-r^2)^(-2/c') moment finite }
    Carleson constant     sup_t nu([1-t, 1]) / t^a
    hyperbolic integral   integral_[0,1) (1-r^2)^-1 d nu

use closed forms wherever the catalog permits and graded quadrature in
u = 1 - r (with a truncation ladder for divergence detection) otherwise.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np
from scipy.special import betainc, gammaln

from . import constants as cns
from ._gridquad import (
    geometric_breaks,
    graded_unit_rule,
    ladder_decision,
    panel_rule,
)

__all__ = [
    "Atom",
    "PowerDensity",
    "NuAlphaDensity",
    "TabulatedDensity",
    "RadialMeasure",
    "DivergibleValue",
    "CriticalIndex",
    "total_mass",
    "tail_mass",
    "singular_moment",
    "critical_index",
    "carleson_constant",
    "hyperbolic_integral",
    "reciprocal_gap_integral",
    "catalog",
    "random_catalog_measure",
]


# ---------------------------------------------------------------------------
# value carrier for integrals that may be +infinity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivergibleValue:
    """Either a finite non-negative value or divergence with a fitted rate.

    ``growth_exponent`` is the log-log slope of the truncated integrals
    against 1/eps (0.0 for logarithmic blow-up).
    """

    kind: str  # "finite" | "divergent"
    value: float | None = None
    growth_exponent: float | None = None

    @classmethod
    def finite(cls, value: float) -> "DivergibleValue":
        if not (value >= 0.0):
            raise ValueError(f"finite DivergibleValue must be >= 0, got {value}")
        return cls("finite", float(value), None)

    @classmethod
    def divergent(cls, growth_exponent: float) -> "DivergibleValue":
        return cls("divergent", None, float(growth_exponent))

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @staticmethod
    def combine(parts: Iterable["DivergibleValue"]) -> "DivergibleValue":
        total, worst = 0.0, None
        for p in parts:
            if p.is_finite:
                total += p.value
            else:
                g = p.growth_exponent or 0.0
                worst = g if worst is None else max(worst, g)
        if worst is not None:
            return DivergibleValue.divergent(worst)
        return DivergibleValue.finite(total)


# ---------------------------------------------------------------------------
# measure components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    """Point mass at x in [0, 1]."""

    x: float
    mass: float

    def validate(self) -> None:
        if not (0.0 <= self.x <= 1.0):
            raise ValueError(f"atom location must lie in [0, 1], got {self.x}")
        if not (self.mass > 0.0):
            raise ValueError(f"atom mass must be positive, got {self.mass}")


@dataclass(frozen=True)
class PowerDensity:
    """Density kappa * (1 - r)^beta on [0, 1); integrable requires beta > -1."""

    kappa: float
    beta: float

    def validate(self) -> None:
        if not (self.kappa > 0.0):
            raise ValueError(f"kappa must be positive, got {self.kappa}")
        if not (self.beta > -1.0):
            raise ValueError(f"beta must exceed -1, got {self.beta}")

    def mass(self) -> float:
        return self.kappa / (self.beta + 1.0)

    def tail(self, t: float) -> float:
        return self.kappa * t ** (self.beta + 1.0) / (self.beta + 1.0)

    def s0(self) -> float:
        return min(self.beta + 1.0, 1.0)

    def gap_moment(self, s: float) -> DivergibleValue:
        # integral (1-r)^(beta-s) dr over [0,1)
        e = self.beta - s
        if e > -1.0:
            return DivergibleValue.finite(self.kappa / (e + 1.0))
        return DivergibleValue.divergent(max(-(e + 1.0), 0.0))

    def u_rule(self, depth_zero: int, depth_one: int, order: int,
               per_octave: int = 1) -> tuple[np.ndarray, np.ndarray]:
        # grading toward u = 0 only; the density is smooth at u = 1
        u, g = graded_unit_rule(depth_zero, 0, order, per_octave)
        w = g * self.kappa * u ** self.beta
        # analytic sub-mesh tail, carried as a pseudo-atom at its centroid
        umin = 2.0 ** (-depth_zero)
        tail = self.kappa * umin ** (self.beta + 1.0) / (self.beta + 1.0)
        u_t = umin * (self.beta + 1.0) / (self.beta + 2.0)
        return np.concatenate(([u_t], u)), np.concatenate(([tail], w))


@dataclass(frozen=True)
class NuAlphaDensity:
    """Normalized density r^(alpha-2) (1-r)^(1-alpha) / B(alpha-1, 2-alpha), alpha in (1, 2).

    Realizes the fractional kernel (1 - z conj(lambda))^-alpha; unit total mass
    by the Beta integral.
    """

    alpha: float

    def validate(self) -> None:
        if not (1.0 < self.alpha < 2.0):
            raise ValueError(f"alpha must lie in (1, 2), got {self.alpha}")

    @property
    def lognorm(self) -> float:
        # log B(alpha-1, 2-alpha)
        return gammaln(self.alpha - 1.0) + gammaln(2.0 - self.alpha)

    def mass(self) -> float:
        return 1.0

    def tail(self, t: float) -> float:
        # pushforward density in u is u^(1-alpha) (1-u)^(alpha-2) / B
        return float(betainc(2.0 - self.alpha, self.alpha - 1.0, t))

    def s0(self) -> float:
        return 2.0 - self.alpha

    def gap_moment(self, s: float) -> DivergibleValue:
        if s < 2.0 - self.alpha:
            logv = gammaln(2.0 - self.alpha - s) - gammaln(1.0 - s) - gammaln(2.0 - self.alpha)
            return DivergibleValue.finite(math.exp(logv))
        return DivergibleValue.divergent(s - (2.0 - self.alpha))

    def u_rule(self, depth_zero: int, depth_one: int, order: int,
               per_octave: int = 1) -> tuple[np.ndarray, np.ndarray]:
        # two pieces: u-panels toward 0 and v = 1-u panels toward 1, so the
        # singular factors u^(1-a) and (1-u)^(a-2) are both evaluated without
        # cancellation; sub-mesh slivers enter as analytic pseudo-atoms
        a = self.alpha
        u_l, g_l = panel_rule(geometric_breaks(2.0 ** (-depth_zero), 0.5, per_octave), order)
        w_l = g_l * np.exp((1.0 - a) * np.log(u_l) + (a - 2.0) * np.log1p(-u_l)
                           - self.lognorm)
        v_r, g_r = panel_rule(geometric_breaks(2.0 ** (-depth_one), 0.5, per_octave), order)
        w_r = g_r * np.exp((a - 2.0) * np.log(v_r) + (1.0 - a) * np.log1p(-v_r)
                           - self.lognorm)
        umin = 2.0 ** (-depth_zero)
        dmin = 2.0 ** (-depth_one)
        norm = math.exp(-self.lognorm)
        tail0 = norm * umin ** (2.0 - a) / (2.0 - a)
        tail1 = norm * dmin ** (a - 1.0) / (a - 1.0)
        u = np.concatenate(([umin * (2.0 - a) / (3.0 - a)], u_l, 1.0 - v_r,
                            [1.0 - dmin * (a - 1.0) / a]))
        w = np.concatenate(([tail0], w_l, w_r, [tail1]))
        return u, w


@dataclass(frozen=True)
class TabulatedDensity:
    """User-supplied density sampled on an increasing r-grid; trapezoid rule.

    Lower accuracy than the closed catalog: every functional of this component
    goes through the grid (or the truncation ladder for divergence questions).
    """

    r: tuple[float, ...]
    values: tuple[float, ...]

    def validate(self) -> None:
        r = np.asarray(self.r)
        v = np.asarray(self.values)
        if r.ndim != 1 or r.size < 2 or v.shape != r.shape:
            raise ValueError("tabulated density needs matching 1-D r/value grids")
        if np.any(np.diff(r) <= 0) or r[0] < 0.0 or r[-1] > 1.0:
            raise ValueError("r grid must be increasing inside [0, 1]")
        if np.any(v < 0.0) or not np.any(v > 0.0):
            raise ValueError("tabulated values must be non-negative, not all zero")

    def mass(self) -> float:
        return float(np.trapz(self.values, self.r))

    def tail(self, t: float) -> float:
        r = np.asarray(self.r)
        v = np.asarray(self.values)
        lo = 1.0 - t
        if lo <= r[0]:
            return self.mass()
        if lo >= r[-1]:
            return 0.0
        vlo = float(np.interp(lo, r, v))
        keep = r > lo
        rr = np.concatenate(([lo], r[keep]))
        vv = np.concatenate(([vlo], v[keep]))
        return float(np.trapz(vv, rr))

    def s0(self) -> None:
        return None  # no closed form; caller falls back to bisection

    def gap_moment(self, s: float) -> DivergibleValue:
        return _ladder(self, lambda u: u ** (-s))

    def u_rule(self, depth_zero: int, depth_one: int, order: int,
               per_octave: int = 1) -> tuple[np.ndarray, np.ndarray]:
        r = np.asarray(self.r)
        v = np.asarray(self.values)
        u = (1.0 - r)[::-1]
        f = v[::-1]
        # trapezoid weights on the pushforward grid
        w = np.zeros_like(u)
        du = np.diff(u)
        w[:-1] += 0.5 * du
        w[1:] += 0.5 * du
        return u, w * f


Density = Union[PowerDensity, NuAlphaDensity, TabulatedDensity]
Component = Union[Atom, Density]


def _ladder(density: Density, integrand: Callable[[np.ndarray], np.ndarray],
            order: int = 16, depth_one: int = 40) -> DivergibleValue:
    """Truncation-ladder verdict for integral integrand(u) d(pushforward)(u).

    Integrates over u in [eps, 1] at the ladder levels with panels graded
    toward both ends (densities may be singular at u = 1, i.e. r = 0, as well);
    the integrand itself may only be singular at u = 0.
    """
    eps = np.array(cns.LADDER_EPS)
    vals = []
    for e in eps:
        if isinstance(density, TabulatedDensity):
            u, w = density.u_rule(0, 0, order)
            keep = u >= e
            vals.append(float(np.dot(w[keep], integrand(u[keep]))))
            continue
        if isinstance(density, PowerDensity):
            u, g = panel_rule(geometric_breaks(e, 1.0), order)
            vals.append(float(np.dot(g * density.kappa * u ** density.beta,
                                     integrand(u))))
            continue
        a = density.alpha
        u_l, g_l = panel_rule(geometric_breaks(e, 0.5), order)
        w_l = g_l * np.exp((1.0 - a) * np.log(u_l) + (a - 2.0) * np.log1p(-u_l)
                           - density.lognorm)
        dmin = 2.0 ** (-depth_one)
        v_r, g_r = panel_rule(geometric_breaks(dmin, 0.5), order)
        w_r = g_r * np.exp((a - 2.0) * np.log(v_r) + (1.0 - a) * np.log1p(-v_r)
                           - density.lognorm)
        # analytic mass of the unresolved (1-u)^(alpha-2) sliver at u = 1
        tail = (math.exp(-density.lognorm) * dmin ** (a - 1.0) / (a - 1.0)
                * float(integrand(np.array([1.0 - dmin * (a - 1.0) / a]))[0]))
        vals.append(float(np.dot(w_l, integrand(u_l))
                          + np.dot(w_r, integrand(1.0 - v_r))) + tail)
    divergent, x = ladder_decision(np.array(vals), eps,
                                   cns.LADDER_GROWTH_FACTOR, cns.LADDER_GROWTH_LEVELS)
    return DivergibleValue.divergent(x) if divergent else DivergibleValue.finite(max(x, 0.0))


# ---------------------------------------------------------------------------
# the measure itself
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadialMeasure:
    """Finite positive Borel measure on [0, 1]: atoms plus catalog densities."""

    atoms: tuple[Atom, ...] = ()
    densities: tuple[Density, ...] = ()

    def __post_init__(self):
        if not self.atoms and not self.densities:
            raise ValueError("measure must have at least one component")
        for a in self.atoms:
            a.validate()
        for d in self.densities:
            d.validate()

    # -- constructors -------------------------------------------------------

    @classmethod
    def dirac(cls, x: float, mass: float = 1.0) -> "RadialMeasure":
        return cls(atoms=(Atom(x, mass),))

    @classmethod
    def lebesgue(cls) -> "RadialMeasure":
        return cls(densities=(PowerDensity(1.0, 0.0),))

    @classmethod
    def power(cls, kappa: float, beta: float) -> "RadialMeasure":
        return cls(densities=(PowerDensity(kappa, beta),))

    @classmethod
    def nu_alpha(cls, alpha: float) -> "RadialMeasure":
        return cls(densities=(NuAlphaDensity(alpha),))

    def __add__(self, other: "RadialMeasure") -> "RadialMeasure":
        return RadialMeasure(self.atoms + other.atoms, self.densities + other.densities)

    # -- JSON wire format ----------------------------------------------------

    @classmethod
    def from_spec(cls, spec: dict) -> "RadialMeasure":
        """Parse {"atoms": [{"x":..,"mass":..}], "densities": [{"kind":..}, ...]}."""
        atoms = tuple(Atom(float(a["x"]), float(a["mass"])) for a in spec.get("atoms", []))
        dens = []
        for d in spec.get("densities", []):
            kind = d.get("kind")
            if kind == "power":
                dens.append(PowerDensity(float(d["kappa"]), float(d["beta"])))
            elif kind == "nu_alpha":
                dens.append(NuAlphaDensity(float(d["alpha"])))
            elif kind == "lebesgue":
                dens.append(PowerDensity(1.0, 0.0))
            elif kind == "tabulated":
                dens.append(TabulatedDensity(tuple(map(float, d["r"])),
                                             tuple(map(float, d["values"]))))
            else:
                raise ValueError(f"unknown density kind: {kind!r}")
        return cls(atoms, tuple(dens))

    @classmethod
    def from_json(cls, text: str) -> "RadialMeasure":
        return cls.from_spec(json.loads(text))

    def to_spec(self) -> dict:
        dens = []
        for d in self.densities:
            if isinstance(d, PowerDensity):
                dens.append({"kind": "power", "kappa": d.kappa, "beta": d.beta})
            elif isinstance(d, NuAlphaDensity):
                dens.append({"kind": "nu_alpha", "alpha": d.alpha})
            else:
                dens.append({"kind": "tabulated", "r": list(d.r), "values": list(d.values)})
        return {"atoms": [{"x": a.x, "mass": a.mass} for a in self.atoms],
                "densities": dens}

    # -- convenience ---------------------------------------------------------

    @property
    def mass_at_one(self) -> float:
        return sum(a.mass for a in self.atoms if a.x == 1.0)

    def without_atom_at_one(self) -> "RadialMeasure":
        kept = tuple(a for a in self.atoms if a.x != 1.0)
        if not kept and not self.densities:
            raise ValueError("removing the atom at 1 leaves the zero measure")
        return RadialMeasure(kept, self.densities)

    def pushforward_rule(self, depth_zero: int = cns.MEASURE_DEPTH_ZERO,
                         depth_one: int = cns.MEASURE_DEPTH_ONE,
                         order: int = cns.MEASURE_ORDER,
                         per_octave: int = 1) -> tuple[np.ndarray, np.ndarray]:
        """Quadrature nodes/weights in u = 1 - r for the density part only.

        Atoms are not included; functionals handle them in closed form.
        """
        us, ws = [], []
        for d in self.densities:
            u, w = d.u_rule(depth_zero, depth_one, order, per_octave)
            us.append(u)
            ws.append(w)
        if not us:
            return np.empty(0), np.empty(0)
        return np.concatenate(us), np.concatenate(ws)


# ---------------------------------------------------------------------------
# scalar functionals
# ---------------------------------------------------------------------------

def total_mass(mu: RadialMeasure) -> float:
    """nu([0, 1]), closed form per component."""
    return sum(a.mass for a in mu.atoms) + sum(d.mass() for d in mu.densities)


def tail_mass(mu: RadialMeasure, t: float) -> float:
    """nu([1-t, 1)); the half-open interval excludes an atom at exactly 1."""
    if not (0.0 < t <= 1.0):
        raise ValueError(f"t must lie in (0, 1], got {t}")
    lo = 1.0 - t
    out = sum(a.mass for a in mu.atoms if lo <= a.x < 1.0)
    return out + sum(d.tail(t) for d in mu.densities)


def singular_moment(mu: RadialMeasure, s: float, variant: str = "gap") -> DivergibleValue:
    """integral (1-r)^-s d nu  (variant="gap")  or  (1-r^2)^-s d nu (variant="disk").

    The two differ by a factor in [1, 2^s] and share the same convergence set.
    An atom at 1 forces divergence for s > 0 in either variant.
    """
    if not (0.0 <= s < 1.0):
        raise ValueError(f"s must lie in [0, 1), got {s}")
    if variant not in ("gap", "disk"):
        raise ValueError(f"unknown variant {variant!r}")
    parts = []
    for a in mu.atoms:
        if a.x == 1.0:
            parts.append(DivergibleValue.finite(a.mass) if s == 0.0
                         else DivergibleValue.divergent(s))
        else:
            gap = 1.0 - a.x if variant == "gap" else 1.0 - a.x * a.x
            parts.append(DivergibleValue.finite(a.mass * gap ** (-s)))
    for d in mu.densities:
        if variant == "gap":
            parts.append(d.gap_moment(s))
        else:
            parts.append(_ladder(d, lambda u: (u * (2.0 - u)) ** (-s)))
    return DivergibleValue.combine(parts)


@dataclass(frozen=True)
class CriticalIndex:
    """c in [1, 2] with s0 = 2/c' and an attainment flag for the sup itself."""

    c: float
    attained: str  # "yes" | "no" | "unknown"
    s0: float
    interval: tuple[float, float] | None = None  # bisection bracket on s0, when used


def _bisect_s0(mu: RadialMeasure, tol: float = 1e-3) -> tuple[float, float]:
    lo, hi = 0.0, 1.0  # finite at s=0 (finite measure); treat 1 as divergent cap
    if not singular_moment(mu, 0.0).is_finite:
        return 0.0, 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if singular_moment(mu, mid).is_finite:
            lo = mid
        else:
            hi = mid
    return lo, hi


def critical_index(mu: RadialMeasure) -> CriticalIndex:
    """Critical index c = sup{1 <= c < 2 : integral (1-r^2)^(-2/c') d nu < infinity}.

    Closed forms for the catalog: an atom at 1 gives c = 1 exactly; a power
    component gives s0 = min(beta+1, 1); the nu_alpha family gives s0 = 2-alpha;
    mixtures take the smallest component s0 (equivalently the smallest c). A
    tabulated component switches to bisection on s with tolerance 1e-3.
    """
    interval = None
    if any(a.x == 1.0 for a in mu.atoms):
        s0 = 0.0
    elif any(isinstance(d, TabulatedDensity) for d in mu.densities):
        lo, hi = _bisect_s0(mu)
        s0 = 0.5 * (lo + hi)
        interval = (lo, hi)
    else:
        s0s = [1.0] * bool(mu.atoms)
        s0s += [d.s0() for d in mu.densities]
        s0 = min(s0s)
    c = 2.0 / (2.0 - s0)
    if s0 == 0.0:
        attained = "yes"  # the moment at s=0 is the total mass, finite
    elif s0 == 1.0:
        attained = "yes" if hyperbolic_integral(mu).is_finite else "no"
    else:
        at = singular_moment(mu, s0, variant="disk")
        attained = "yes" if at.is_finite else "no"
    if interval is not None:
        attained = "unknown"
    return CriticalIndex(c, attained, s0, interval)


def carleson_constant(mu: RadialMeasure, a: float) -> DivergibleValue:
    """sup over 0 < t <= 1 of nu([1-t, 1]) / t^a.

    Evaluated as the max of the dyadic-grid supremum (t = 2^-j, j <= 40) and
    the closed-form suprema of the catalog components; the dyadic grid alone
    under-estimates the continuous sup by at most a factor 2^a for the
    monotone tails arising here. At a = 0 the condition reads "nu is a finite
    measure", so the constant reported is nu([0, 1]). The closed interval makes an atom at 1 divergent
    for every a > 0.
    """
    if a < 0.0:
        raise ValueError(f"a must be >= 0, got {a}")
    if a == 0.0:
        return DivergibleValue.finite(total_mass(mu))
    best = 0.0
    for atom in mu.atoms:
        if atom.x == 1.0:
            return DivergibleValue.divergent(a)
        best = max(best, atom.mass * (1.0 - atom.x) ** (-a))
    for d in mu.densities:
        if isinstance(d, PowerDensity):
            if a > d.beta + 1.0:
                return DivergibleValue.divergent(a - d.beta - 1.0)
            best = max(best, d.kappa / (d.beta + 1.0))
        elif isinstance(d, NuAlphaDensity):
            if a > 2.0 - d.alpha:
                return DivergibleValue.divergent(a - (2.0 - d.alpha))
    t = 2.0 ** (-np.arange(cns.CARLESON_DEPTH + 1, dtype=float))
    vals = np.array([tail_mass(mu, tj) + mu.mass_at_one for tj in t]) / t ** a
    k = cns.LADDER_GROWTH_LEVELS
    tail = vals[-(k + 1):]
    if np.all(tail[:-1] > 0) and np.all(tail[1:] / tail[:-1] > cns.LADDER_GROWTH_FACTOR):
        slope = np.polyfit(np.log(1.0 / t[-(k + 1):]), np.log(tail), 1)[0]
        return DivergibleValue.divergent(max(float(slope), 0.0))
    return DivergibleValue.finite(max(best, float(vals.max())))


def _gap_weighted_integral(mu: RadialMeasure, integrand: Callable[[np.ndarray], np.ndarray],
                           power_growth: Callable[[PowerDensity], DivergibleValue],
                           atom_value: Callable[[Atom], float]) -> DivergibleValue:
    """Shared skeleton for integrals over [0, 1) singular like u^-1 at u = 0."""
    parts = []
    for atom in mu.atoms:
        if atom.x == 1.0:
            continue  # domain [0, 1)
        parts.append(DivergibleValue.finite(atom_value(atom)))
    for d in mu.densities:
        if isinstance(d, PowerDensity):
            parts.append(power_growth(d))
        elif isinstance(d, NuAlphaDensity):
            parts.append(DivergibleValue.divergent(d.alpha - 1.0))
        else:
            parts.append(_ladder(d, integrand))
    return DivergibleValue.combine(parts)


def hyperbolic_integral(mu: RadialMeasure) -> DivergibleValue:
    """integral over [0, 1) of (1 - r^2)^-1 d nu; atoms at 1 contribute nothing."""
    def for_power(d: PowerDensity) -> DivergibleValue:
        if d.beta <= 0.0:
            return DivergibleValue.divergent(-d.beta)
        u, g = graded_unit_rule(cns.MEASURE_DEPTH_ZERO, 0, cns.MEASURE_ORDER)
        val = float(np.dot(g * d.kappa * u ** (d.beta - 1.0), 1.0 / (2.0 - u)))
        umin = 2.0 ** (-cns.MEASURE_DEPTH_ZERO)
        val += d.kappa * umin ** d.beta / (2.0 * d.beta)
        return DivergibleValue.finite(val)

    return _gap_weighted_integral(
        mu,
        integrand=lambda u: 1.0 / (u * (2.0 - u)),
        power_growth=for_power,
        atom_value=lambda a: a.mass / (1.0 - a.x * a.x),
    )


def reciprocal_gap_integral(mu: RadialMeasure) -> DivergibleValue:
    """integral over [0, 1) of (1 - r)^-1 d nu (enters the c = 2 kernel constants)."""
    def for_power(d: PowerDensity) -> DivergibleValue:
        if d.beta <= 0.0:
            return DivergibleValue.divergent(-d.beta)
        return DivergibleValue.finite(d.kappa / d.beta)

    return _gap_weighted_integral(
        mu,
        integrand=lambda u: 1.0 / u,
        power_growth=for_power,
        atom_value=lambda a: a.mass / (1.0 - a.x),
    )


# ---------------------------------------------------------------------------
# named catalog and seeded generator (shared by tests and verify suites)
# ---------------------------------------------------------------------------

def catalog() -> dict[str, RadialMeasure]:
    """The measures every cross-module check runs against."""
    return {
        "delta0": RadialMeasure.dirac(0.0),
        "delta1": RadialMeasure.dirac(1.0),
        "delta_half": RadialMeasure.dirac(0.5),
        "lebesgue": RadialMeasure.lebesgue(),
        "nu_alpha_1.5": RadialMeasure.nu_alpha(1.5),
        "power_-0.5": RadialMeasure.power(1.0, -0.5),
        "power_0.5": RadialMeasure.power(1.0, 0.5),
        "lebesgue_plus_atom1": RadialMeasure.lebesgue() + RadialMeasure.dirac(1.0, 0.5),
    }


def random_catalog_measure(rng: np.random.Generator, allow_atom_at_one: bool = True) -> RadialMeasure:
    """Random mixture of catalog components for property-style sweeps."""
    atoms, densities = [], []
    n = rng.integers(1, 4)
    for _ in range(n):
        kind = rng.integers(0, 3)
        if kind == 0:
            x = float(rng.uniform(0.0, 1.0))
            if allow_atom_at_one and rng.random() < 0.15:
                x = 1.0
            atoms.append(Atom(x, float(rng.lognormal(0.0, 0.5))))
        elif kind == 1:
            densities.append(PowerDensity(float(rng.lognormal(0.0, 0.5)),
                                          float(rng.uniform(-0.9, 1.5))))
        else:
            densities.append(NuAlphaDensity(float(rng.uniform(1.05, 1.95))))
    return RadialMeasure(tuple(atoms), tuple(densities))

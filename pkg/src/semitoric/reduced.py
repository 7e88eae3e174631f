"""Reduced one-degree-of-freedom models around the NS and SN singularities.

Everything here lives in r1-scaled units: the level offset l and the fibre
coordinate p2 are dimensionless multiples of r1 and the only geometric
parameter is the ratio R = r2/r1.  The reduced Hamiltonian on a level
splits as A_l(p2) + sqrt(B_l(p2)) cos(q2); B >= 0 defines the physical
region.  The SN model uses the reflected coordinates (q2 -> -q2,
p2 -> 2R - p2), so both labels share the convention that the physical
interval starts at p2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import numerics
from .model import ModelParams

LABELS = ("NS", "SN")


def _check_label(label: str):
    if label not in LABELS:
        raise ValueError(f"label must be 'NS' or 'SN', got {label!r}")


def reduced_A(label: str, l: float, p2: float, params: ModelParams) -> float:
    """Polynomial part A_l(p2) of the reduced Hamiltonian."""
    _check_label(label)
    R, s1, s2 = params.R, params.s1, params.s2
    if label == "NS":
        return (1.0 / R) * (1 - 2 * s1) * (
            R * (1 + l - 2 * s2 - l * s2) + p2 * (s2 - R + R * s2))
    return (1.0 / R) * (1 - 2 * s1) * (
        R * (-1 + l + 2 * s2 - l * s2) + p2 * (s2 - R + R * s2))


def reduced_B(label: str, l: float, p2: float, params: ModelParams) -> float:
    """Radicand B_l(p2); non-negative exactly on the physical region."""
    _check_label(label)
    R = params.R
    c = params.coupling
    if label == "NS":
        return (4 * c * c / R ** 2) * p2 * (p2 - l) * (p2 - 2 * R) * (p2 - l - 2)
    return (4 * c * c / R ** 2) * p2 * (p2 + l) * (p2 - 2 * R) * (p2 + l - 2)


def critical_h(label: str, params: ModelParams) -> float:
    """Value of H at the corresponding focus-focus candidate point."""
    _check_label(label)
    v = (1 - 2 * params.s1) * (1 - 2 * params.s2)
    return v if label == "NS" else -v


def physical_interval(label: str, l: float, R: float):
    """p2-interval of the physical region at level offset ``l``."""
    _check_label(label)
    if label == "NS":
        if not -2.0 <= l <= 2.0 * R:
            raise ValueError(f"l = {l} outside [-2, 2R] for NS")
        lo, hi = max(0.0, l), min(2.0 * R, l + 2.0)
    else:
        if not -2.0 * R <= l <= 2.0:
            raise ValueError(f"l = {l} outside [-2R, 2] for SN")
        lo, hi = max(0.0, -l), min(2.0 * R, -l + 2.0)
    if lo > hi:
        raise ValueError("empty physical interval")
    return lo, hi


def poly_P(label: str, l: float, h: float, p2: float,
           params: ModelParams) -> float:
    """Quartic P_l(p2) = B_l(p2) - (h +/- crit - A_l(p2))^2.

    The offset sign is + for NS and - for SN, so that the singularity sits
    at (l, h) = (0, 0) in both charts.
    """
    _check_label(label)
    off = critical_h("NS", params)  # (1-2s1)(1-2s2)
    sign = 1.0 if label == "NS" else -1.0
    d = h + sign * off - reduced_A(label, l, p2, params)
    return reduced_B(label, l, p2, params) - d * d


def p0_coefficients(label: str, params: ModelParams) -> np.ndarray:
    """Coefficients of P_0 (l = h = 0), highest degree first.

    Expanded from the factored form: both labels give the same quartic
    (4c^2/R^2) p2^2 (p2 - 2R)(p2 - 2) - (k^2/R^2) p2^2 with
    k = (1-2s1)(s2(1+R) - R).
    """
    _check_label(label)
    R, s1, s2 = params.R, params.s1, params.s2
    c = params.coupling
    a4 = 4 * c * c / R ** 2
    k = (1 - 2 * s1) * (s2 * (1 + R) - R)
    # a4 * p2^2 * (p2^2 - 2(R+1) p2 + 4R) - (k/R)^2 p2^2
    return np.array([
        a4,
        -2 * (R + 1) * a4,
        4 * R * a4 - (k / R) ** 2,
        0.0,
        0.0,
    ])


@dataclass(frozen=True)
class QuarticRoots:
    z1: complex
    z2: complex
    z3: complex
    z4: complex
    all_real: bool

    def as_array(self) -> np.ndarray:
        return np.array([self.z1, self.z2, self.z3, self.z4])


def roots_P0(label: str, params: ModelParams) -> QuarticRoots:
    """Roots (0, 0, zeta3, zeta4) of P_0 in closed form.

    zeta_{3,4} = 1 + R -/+ sqrt(gamma_B) / (2 c), cross-checked against the
    companion-matrix quartic solver to 1e-9.
    """
    from .height import gamma_B  # local import to avoid a module cycle

    _check_label(label)
    R, s1, s2 = params.R, params.s1, params.s2
    c = params.coupling
    if c == 0.0:
        raise ValueError("coupling vanishes at (s1, s2) corners; P0 is degenerate")
    gb = gamma_B(s1, s2, R)
    if gb < 0:
        raise ValueError(f"gamma_B = {gb:.3e} < 0: closed-form roots not real")
    half_span = np.sqrt(gb) / (2 * c)
    z3 = 1 + R - half_span
    z4 = 1 + R + half_span
    numeric = numerics.quartic_roots(p0_coefficients(label, params))
    closed = np.sort(np.array([0.0, 0.0, z3, z4]))
    if np.max(np.abs(numeric.real - closed)) > 1e-9 or \
            np.max(np.abs(numeric.imag)) > 1e-9:
        raise AssertionError(
            f"closed-form roots {closed} disagree with quartic solver {numeric}")
    return QuarticRoots(0.0, 0.0, z3, z4, all_real=True)


@dataclass(frozen=True)
class DHFunction:
    """Piecewise-linear Duistermaat-Heckman profile in scaled NS units.

    ``breakpoints`` is a list of (l, slope-after) pairs; the profile is zero
    at both ends of ``domain`` and the slope drops by one at each interior
    breakpoint (the focus-focus levels).
    """

    breakpoints: tuple
    domain: tuple

    def rho(self, l: float) -> float:
        lo, hi = self.domain
        if not lo <= l <= hi:
            raise ValueError(f"l = {l} outside domain {self.domain}")
        pts = [bp[0] for bp in self.breakpoints] + [hi]
        slopes = [bp[1] for bp in self.breakpoints]
        value, x = 0.0, lo
        for seg_end, slope in zip(pts[1:], slopes):
            if l <= seg_end:
                return value + slope * (l - x)
            value += slope * (seg_end - x)
            x = seg_end
        return value

    def slope_jump(self, l: float) -> float:
        """Change of slope at an interior breakpoint."""
        for i, (bl, slope_after) in enumerate(self.breakpoints):
            if bl == l and i > 0:
                return slope_after - self.breakpoints[i - 1][1]
        raise ValueError(f"no interior breakpoint at l = {l}")


def dh_function(R: float) -> DHFunction:
    """DH profile rho(l) = min(2R, l+2) - max(0, l) on [-2, 2R] for R > 1."""
    if R <= 1.0:
        raise ValueError("dh_function requires R > 1 (apply the sphere-swap "
                         "symmetry for R < 1)")
    dh = DHFunction(
        breakpoints=((-2.0, 1.0), (0.0, 0.0), (2.0 * R - 2.0, -1.0)),
        domain=(-2.0, 2.0 * R),
    )
    # Verify against the physical-interval length on a coarse grid.
    for l in np.linspace(-2.0, 2.0 * R, 33):
        lo, hi = physical_interval("NS", float(l), R)
        if abs(dh.rho(float(l)) - (hi - lo)) > 1e-12:
            raise AssertionError("DH profile disagrees with interval length")
    return dh


def ff_levels(R: float):
    """Scaled NS-chart l-values of the two focus-focus levels."""
    return (0.0, 2.0 * R - 2.0)

"""Momentum-map image boundaries and polygon-invariant representatives.

The image of (L, H) is a band bounded by the envelope of A_l +/- sqrt(B_l)
over each level; the polygon invariant straightens that band into a convex
rational polygon whose vertical widths reproduce the Duistermaat-Heckman
profile.  Representatives are normalized to a canonical anchor (left corner
at (-2, 0), initial bottom slope 0, scaled units); the shear and cut-flip
actions relate all other choices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import reduced
from .errors import DegenerateSystemError
from .model import FIXED_POINTS, ModelParams, momentum_map
from .numerics import minimize_golden
from .singularity import discriminant_E, n_ff

WIDTH_TOL = 1e-12


def _ns_frame(params: ModelParams) -> ModelParams:
    """Parameters with R > 1 via the sphere-swap symmetry when needed."""
    if params.R > 1.0:
        return params
    return ModelParams(params.r2, params.r1, params.s1, 1.0 - params.s2)


@dataclass(frozen=True)
class ImageBoundary:
    """Sampled envelope of the momentum-map image, in unscaled (L, H) units.

    ``samples`` is an ordered list of (l, h_min, h_max); ``ff_values`` holds
    the focus-focus critical values (empty when there are none) and
    ``corner_values`` the four pole-product values NN, NS, SN, SS.
    """

    samples: tuple
    ff_values: tuple
    corner_values: tuple


def _envelope_at(l: float, params: ModelParams):
    """(h_min, h_max) over the reduced fiber at scaled level l."""
    lo, hi = reduced.physical_interval("NS", l, params.R)
    if hi - lo < 1e-12:
        a = reduced.reduced_A("NS", l, lo, params)
        return a, a

    def lower(p2):
        b = max(0.0, reduced.reduced_B("NS", l, p2, params))
        return reduced.reduced_A("NS", l, p2, params) - np.sqrt(b)

    def upper_neg(p2):
        b = max(0.0, reduced.reduced_B("NS", l, p2, params))
        return -(reduced.reduced_A("NS", l, p2, params) + np.sqrt(b))

    h_min = minimize_golden(lower, lo, hi).fx
    h_max = -minimize_golden(upper_neg, lo, hi).fx
    return h_min, h_max


def image_boundary(params: ModelParams, n: int = 64) -> ImageBoundary:
    """Envelope of the momentum-map image on n+1 evenly spaced levels.

    The reduced chart is exact: on the level with scaled offset l, H ranges
    over [min(A - sqrt(B)), max(A + sqrt(B))] across the physical interval.
    Output is converted to unscaled L = r1 (l + 1 - R); H is dimensionless
    and needs no rescaling.
    """
    if n < 16:
        raise ValueError("n must be >= 16")
    r1, R = params.r1, params.R
    samples = []
    for l in np.linspace(-2.0, 2.0 * R, n + 1):
        h_min, h_max = _envelope_at(float(l), params)
        samples.append((r1 * (float(l) + 1.0 - R), h_min, h_max))
    try:
        two_ff = n_ff(params) == 2
    except DegenerateSystemError:
        two_ff = False
    ff_values = ()
    if two_ff:
        ff_values = tuple(
            (mv.l_val, mv.h_val)
            for mv in (momentum_map(FIXED_POINTS["NS"], params),
                       momentum_map(FIXED_POINTS["SN"], params)))
    corner_values = tuple(
        (mv.l_val, mv.h_val)
        for mv in (momentum_map(FIXED_POINTS[k], params)
                   for k in ("NN", "NS", "SN", "SS")))
    return ImageBoundary(tuple(samples), ff_values, corner_values)


def _chain_eval(chain, l: float) -> float:
    """Evaluate a piecewise-linear breakpoint chain at l."""
    ls = [v[0] for v in chain]
    if not ls[0] <= l <= ls[-1]:
        raise ValueError(f"l = {l} outside [{ls[0]}, {ls[-1]}]")
    for (l0, y0), (l1, y1) in zip(chain[:-1], chain[1:]):
        if l <= l1:
            if l1 == l0:
                return y0
            return y0 + (y1 - y0) * (l - l0) / (l1 - l0)
    return chain[-1][1]


@dataclass(frozen=True)
class Polygon:
    """Convex rational polygon representative in scaled (l, y) units.

    ``vertices`` runs counterclockwise from the left corner: bottom chain
    left to right, then top chain right to left.  ``cuts`` records the cut
    direction at each focus-focus level in ``ff_l`` (empty ``ff_l`` for
    systems of toric type, whose shape is still reported through ``cuts``).
    """

    vertices: tuple
    cuts: tuple
    ff_l: tuple
    bottom: tuple
    top: tuple

    def width(self, l: float) -> float:
        return _chain_eval(self.top, l) - _chain_eval(self.bottom, l)

    @property
    def domain(self):
        return self.bottom[0][0], self.bottom[-1][0]


def _build_polygon(cuts, ff_l, R: float) -> Polygon:
    """Assemble the canonical representative from cut signs and ff levels."""
    la, lb = 0.0, 2.0 * R - 2.0
    breaks = [-2.0, la, lb, 2.0 * R]
    dh = reduced.dh_function(R)

    bottom_slopes = []
    slope = 0.0
    for left in breaks[:-1]:
        if left == la and cuts[0] == -1:
            slope += 1.0
        if left == lb and cuts[1] == -1:
            slope += 1.0
        bottom_slopes.append(slope)

    bottom, y = [(-2.0, 0.0)], 0.0
    for (l0, l1), s in zip(zip(breaks[:-1], breaks[1:]), bottom_slopes):
        y += s * (l1 - l0)
        bottom.append((l1, y))
    top = [(l, yb + dh.rho(l)) for l, yb in bottom]

    def dedupe(chain):
        # Keep only genuine kinks (and both endpoints).
        out = [chain[0]]
        for prev, cur, nxt in zip(chain[:-2], chain[1:-1], chain[2:]):
            s_in = (cur[1] - prev[1]) / (cur[0] - prev[0])
            s_out = (nxt[1] - cur[1]) / (nxt[0] - cur[0])
            if abs(s_in - s_out) > 1e-12:
                out.append(cur)
        out.append(chain[-1])
        return out

    bottom, top = dedupe(bottom), dedupe(top)
    vertices = tuple(bottom) + tuple(reversed(top[1:-1]))

    poly = Polygon(vertices, tuple(cuts), tuple(ff_l),
                   tuple(bottom), tuple(top))
    _assert_polygon(poly, dh)
    return poly


def _assert_polygon(poly: Polygon, dh: reduced.DHFunction):
    for chain, sense in ((poly.bottom, 1.0), (poly.top, -1.0)):
        slopes = [(y1 - y0) / (l1 - l0)
                  for (l0, y0), (l1, y1) in zip(chain[:-1], chain[1:])]
        for s in slopes:
            if abs(s - round(s)) > 1e-9:
                raise AssertionError(f"non-integer edge slope {s}")
        # Bottom slopes non-decreasing, top slopes non-increasing: convexity.
        for s0, s1 in zip(slopes[:-1], slopes[1:]):
            if sense * (s1 - s0) < -1e-9:
                raise AssertionError("polygon is not convex")
    lo, hi = poly.domain
    for l in np.linspace(lo, hi, 41):
        if abs(poly.width(float(l)) - dh.rho(float(l))) > WIDTH_TOL:
            raise AssertionError("polygon width disagrees with the "
                                 "Duistermaat-Heckman profile")


def _toric_type_cuts(params: ModelParams, grid_n: int = 257):
    """Effective cut shape for a system of toric type (no focus-focus points).

    The positive-discriminant region of the (s1, s2) square splits into
    connected components; the component containing (0,0) or (1,1) yields the
    (+1,-1) shape and the one containing (1,0) or (0,1) the (-1,+1) shape.
    Membership is decided by flood fill on a grid.
    """
    s = np.linspace(0.0, 1.0, grid_n)
    s1g, s2g = np.meshgrid(s, s, indexing="ij")
    r1, r2 = params.r1, params.r2
    e = (r2 ** 2 * (1 - 2 * s1g) ** 2 * (s2g - 1) ** 2
         + r1 ** 2 * (1 - 2 * s1g) ** 2 * s2g ** 2
         - 2 * r1 * r2 * (8 * (s1g - 1) ** 2 * s1g ** 2 + s2g
                          - 12 * (s1g - 1) * s1g * s2g
                          + (7 + 12 * (s1g - 1) * s1g) * s2g ** 2
                          - 16 * s2g ** 3 + 8 * s2g ** 4))
    mask = e > 0
    i = int(round(params.s1 * (grid_n - 1)))
    j = int(round(params.s2 * (grid_n - 1)))
    if not mask[i, j]:
        raise DegenerateSystemError(
            "parameters too close to the discriminant-zero boundary for the "
            "component rule")
    comp = np.zeros_like(mask)
    comp[i, j] = True
    while True:
        grown = comp.copy()
        grown[1:, :] |= comp[:-1, :]
        grown[:-1, :] |= comp[1:, :]
        grown[:, 1:] |= comp[:, :-1]
        grown[:, :-1] |= comp[:, 1:]
        grown &= mask
        if (grown == comp).all():
            break
        comp = grown
    plus_minus = comp[0, 0] or comp[-1, -1]
    minus_plus = comp[-1, 0] or comp[0, -1]
    if plus_minus == minus_plus:
        raise AssertionError(
            f"component rule is ambiguous at (s1, s2) = "
            f"({params.s1}, {params.s2})")
    return (1, -1) if plus_minus else (-1, 1)


def polygon_representative(params: ModelParams, cuts=(1, 1)) -> Polygon:
    """Canonical polygon representative for the given cut directions.

    With two focus-focus points, each of the four sign choices gives a
    distinct representative.  For systems of toric type the image itself is
    a polygon; ``cuts`` is ignored and the shape follows the connected
    component of the parameter square that (s1, s2) lies in.
    """
    work = _ns_frame(params)
    R = work.R
    nff = n_ff(work)  # raises on the degenerate band
    if nff == 2:
        if tuple(cuts) not in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            raise ValueError(f"cuts must be signs, got {cuts!r}")
        return _build_polygon(tuple(cuts), reduced.ff_levels(R), R)
    eff = _toric_type_cuts(work)
    return _build_polygon(eff, (), R)


def act_shear(poly: Polygon, k: int) -> Polygon:
    """Integer shear (l, y) -> (l, y + k (l + 2)) about the left corner."""
    if k != int(k):
        raise ValueError("shear parameter must be an integer")

    def sheared(chain):
        return tuple((l, y + k * (l + 2.0)) for l, y in chain)

    return Polygon(sheared(poly.vertices), poly.cuts, poly.ff_l,
                   sheared(poly.bottom), sheared(poly.top))


def act_flip_cut(poly: Polygon, which: int, params: ModelParams) -> Polygon:
    """Representative with the cut direction at focus-focus point ``which``
    (1 or 2) negated."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if not poly.ff_l:
        raise ValueError("polygon has no cuts to flip")
    new_cuts = list(poly.cuts)
    new_cuts[which - 1] = -new_cuts[which - 1]
    return polygon_representative(params, tuple(new_cuts))

"""Classification of the rank-0 fixed points, the discriminant E deciding the
number of focus-focus points, and the rank-1 non-degeneracy criterion.

The four rank-0 singularities are the products of poles NN, NS, SN, SS.
NN and SS are always elliptic-elliptic.  NS and SN are focus-focus exactly
when E < 0 and elliptic-elliptic when E > 0; on E = 0 they are degenerate
and the system fails to be semitoric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSystemError
from .model import ModelParams

# |E| below DEGENERACY_BAND * r1 * r2 is treated as degenerate.
DEGENERACY_BAND = 1e-10

POINT_IDS = ("NN", "NS", "SN", "SS")


def discriminant_E(params: ModelParams) -> float:
    """Discriminant deciding the type of the NS and SN singularities."""
    r1, r2, s1, s2 = params.r1, params.r2, params.s1, params.s2
    return (r2 ** 2 * (1 - 2 * s1) ** 2 * (s2 - 1) ** 2
            + r1 ** 2 * (1 - 2 * s1) ** 2 * s2 ** 2
            - 2 * r1 * r2 * (8 * (s1 - 1) ** 2 * s1 ** 2 + s2
                             - 12 * (s1 - 1) * s1 * s2
                             + (7 + 12 * (s1 - 1) * s1) * s2 ** 2
                             - 16 * s2 ** 3 + 8 * s2 ** 4))


def _is_degenerate(e: float, params: ModelParams) -> bool:
    return abs(e) <= DEGENERACY_BAND * params.r1 * params.r2


def _aux_quartic(s2: float) -> float:
    """Quartic appearing in the s1 = 1/2 auxiliary discriminant."""
    return 1 + 8 * s2 + 8 * s2 ** 2 - 32 * s2 ** 3 + 16 * s2 ** 4


@dataclass(frozen=True)
class SingularityReport:
    point_id: str             # NN | NS | SN | SS
    kind: str                 # elliptic-elliptic | focus-focus | degenerate
    e_value: float
    d_sign: int               # sign of the discriminant branch actually used
    rank: int = 0


def classify_fixed_points(params: ModelParams) -> list[SingularityReport]:
    """Reports for the four rank-0 fixed points, in order NN, NS, SN, SS.

    For s1 != 1/2 the sign of the quartic discriminant reduces to the sign
    of E (its remaining factors are strictly positive); at s1 = 1/2 that
    discriminant vanishes and the auxiliary quartic takes over, with
    opposite signs for the NN/SS and NS/SN pairs.
    """
    e = discriminant_E(params)
    s1 = params.s1
    reports = []
    for pid in POINT_IDS:
        if pid in ("NN", "SS"):
            d_sign = int(np.sign(_aux_quartic(params.s2))) if s1 == 0.5 else 1
            kind = "elliptic-elliptic"
        else:
            if s1 == 0.5:
                d_sign = int(np.sign(-_aux_quartic(params.s2)))
            else:
                d_sign = 0 if _is_degenerate(e, params) else int(np.sign(e))
            if _is_degenerate(e, params):
                kind = "degenerate"
            elif e < 0:
                kind = "focus-focus"
            else:
                kind = "elliptic-elliptic"
        reports.append(SingularityReport(pid, kind, e, d_sign))
    return reports


def n_ff(params: ModelParams) -> int:
    """Number of focus-focus points: 0 if E > 0, 2 if E < 0."""
    e = discriminant_E(params)
    if _is_degenerate(e, params):
        raise DegenerateSystemError(
            f"E = {e:.3e} inside the degeneracy band; system is not semitoric")
    return 2 if e < 0 else 0


def rank1_margin(z1: float, l: float, params: ModelParams) -> float:
    """Right-hand side of the rank-1 non-degeneracy criterion.

    The left-hand side vanishes for this family, so rank-1 singularities are
    non-degenerate elliptic-regular exactly when the returned value is
    negative.  ``l`` is the unscaled L-level; z2 is induced by the level
    constraint.
    """
    r1, r2 = params.r1, params.r2
    if not -1.0 < z1 < 1.0:
        raise ValueError("z1 must lie in (-1, 1)")
    z2 = (l - r1 * z1) / r2
    if not -1.0 < z2 < 1.0:
        raise ValueError("induced z2 lies outside (-1, 1)")
    a = 1.0 - z1 * z1
    b = 1.0 - z2 * z2
    if a * b <= 0.0:
        raise ValueError("B(z1) must be positive")
    num = r1 ** 2 * a ** 2 + 2 * z1 * z2 * r1 * r2 * a * b + r2 ** 2 * b ** 2
    return -num / (r2 ** 2 * a ** 1.5 * b ** 1.5)


@dataclass(frozen=True)
class SemitoricVerdict:
    is_semitoric: bool
    n_ff: int
    degenerate: bool
    rank1_margin_min: float  # most pessimistic (largest) margin over the grid


# Grid margin away from the strip boundary where the criterion's
# denominator vanishes.
_STRIP_MARGIN = 1e-6


def check_semitoric(params: ModelParams, grid_n: int = 50) -> SemitoricVerdict:
    """Aggregate verdict: n_ff, degeneracy, and a rank-1 criterion sweep."""
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    try:
        nff = n_ff(params)
        degenerate = False
    except DegenerateSystemError:
        nff = 0
        degenerate = True
    r1, r2 = params.r1, params.r2
    worst = -np.inf
    for z1 in np.linspace(-1 + _STRIP_MARGIN, 1 - _STRIP_MARGIN, grid_n):
        l_lo = r1 * z1 - r2 * (1 - _STRIP_MARGIN)
        l_hi = r1 * z1 + r2 * (1 - _STRIP_MARGIN)
        for l in np.linspace(l_lo, l_hi, grid_n):
            worst = max(worst, rank1_margin(float(z1), float(l), params))
    return SemitoricVerdict(
        is_semitoric=not degenerate,
        n_ff=nff,
        degenerate=degenerate,
        rank1_margin_min=worst,
    )

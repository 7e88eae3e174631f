"""Reduced one-degree-of-freedom models, their quartic and the DH profile."""

import numpy as np
import pytest

from semitoric import reduced
from semitoric.model import FIXED_POINTS, ModelParams, momentum_map


@pytest.fixture
def params():
    return ModelParams(1.0, 2.0, 0.3, 0.6)


class TestReducedModel:
    def test_chart_value_at_singularity(self, params):
        # A_0(0) in the NS chart equals H at the NS fixed point.
        a = reduced.reduced_A("NS", 0.0, 0.0, params)
        assert abs(a - momentum_map(FIXED_POINTS["NS"], params).h_val) < 1e-14
        a = reduced.reduced_A("SN", 0.0, 0.0, params)
        assert abs(a - (-momentum_map(FIXED_POINTS["NS"], params).h_val)) < 1e-14

    def test_chart_value_at_lateral_corner(self, params):
        # At l = 2R the NS fiber degenerates to the N x N point.
        R = params.R
        a = reduced.reduced_A("NS", 2.0 * R, 2.0 * R, params)
        assert abs(a - momentum_map(FIXED_POINTS["NN"], params).h_val) < 1e-13

    def test_b_vanishes_on_interval_ends(self, params):
        for label in reduced.LABELS:
            for l in (-0.5, 0.0, 0.7):
                lo, hi = reduced.physical_interval(label, l, params.R)
                assert abs(reduced.reduced_B(label, l, lo, params)) < 1e-13
                assert abs(reduced.reduced_B(label, l, hi, params)) < 1e-13

    def test_b_positive_inside(self, params):
        lo, hi = reduced.physical_interval("NS", 0.3, params.R)
        for p2 in np.linspace(lo, hi, 33)[1:-1]:
            assert reduced.reduced_B("NS", 0.3, float(p2), params) > 0

    def test_rejects_unknown_label(self, params):
        with pytest.raises(ValueError):
            reduced.reduced_A("XX", 0.0, 0.0, params)

    def test_interval_bounds_validated(self, params):
        with pytest.raises(ValueError):
            reduced.physical_interval("NS", -3.0, params.R)
        with pytest.raises(ValueError):
            reduced.physical_interval("SN", 3.0, params.R)


class TestQuarticP0:
    def test_coefficients_match_direct_evaluation(self, params):
        coeffs = reduced.p0_coefficients("NS", params)
        for p2 in np.linspace(-1.0, 5.0, 13):
            direct = reduced.poly_P("NS", 0.0, 0.0, float(p2), params)
            assert abs(np.polyval(coeffs, p2) - direct) < 1e-12

    def test_labels_share_the_quartic(self, params):
        a = reduced.p0_coefficients("NS", params)
        b = reduced.p0_coefficients("SN", params)
        assert np.max(np.abs(a - b)) == 0.0

    def test_closed_roots(self, params):
        r = reduced.roots_P0("NS", params)
        assert r.z1 == r.z2 == 0.0
        assert 0.0 < r.z3 < r.z4
        assert r.all_real

    def test_roots_at_half(self):
        for R in (1.5, 2.0, 4.0):
            r = reduced.roots_P0("NS", ModelParams(1.0, R, 0.5, 0.3))
            assert abs(r.z3 - 2.0) < 1e-12
            assert abs(r.z4 - 2.0 * R) < 1e-12

    def test_rejects_vanishing_coupling(self):
        with pytest.raises(ValueError):
            reduced.roots_P0("NS", ModelParams(1.0, 2.0, 0.0, 0.0))


class TestDHProfile:
    def test_matches_interval_length(self):
        for R in (1.5, 2.0, 3.0, 8.0):
            dh = reduced.dh_function(R)
            for l in np.linspace(-2.0, 2.0 * R, 101):
                lo, hi = reduced.physical_interval("NS", float(l), R)
                assert abs(dh.rho(float(l)) - (hi - lo)) < 1e-12

    def test_slope_jumps_at_ff_levels(self):
        dh = reduced.dh_function(2.0)
        for l in reduced.ff_levels(2.0):
            assert dh.slope_jump(l) == -1.0

    def test_no_jump_elsewhere(self):
        dh = reduced.dh_function(2.0)
        with pytest.raises(ValueError):
            dh.slope_jump(1.0)

    def test_requires_r_above_one(self):
        with pytest.raises(ValueError):
            reduced.dh_function(0.5)

    def test_domain_enforced(self):
        dh = reduced.dh_function(2.0)
        with pytest.raises(ValueError):
            dh.rho(5.0)

    def test_ff_levels(self):
        assert reduced.ff_levels(2.0) == (0.0, 2.0)
        assert reduced.ff_levels(3.0) == (0.0, 4.0)

"""Momentum-map image envelope and polygon representatives."""

import numpy as np
import pytest

from semitoric.cartography import (ImageBoundary, Polygon, act_flip_cut,
                                   act_shear, image_boundary,
                                   polygon_representative)
from semitoric.model import FIXED_POINTS, ModelParams, momentum_map
from semitoric.reduced import dh_function


FF_PARAMS = ModelParams(1.0, 2.0, 0.5, 0.5)


class TestPolygonVertices:
    def test_canonical_representatives(self):
        expect = {
            (1, 1): ((-2.0, 0.0), (4.0, 0.0), (2.0, 2.0), (0.0, 2.0)),
            (1, -1): ((-2.0, 0.0), (2.0, 0.0), (4.0, 2.0), (0.0, 2.0)),
            (-1, 1): ((-2.0, 0.0), (0.0, 0.0), (4.0, 4.0), (2.0, 4.0)),
            (-1, -1): ((-2.0, 0.0), (0.0, 0.0), (2.0, 2.0), (4.0, 6.0)),
        }
        for cuts, verts in expect.items():
            poly = polygon_representative(FF_PARAMS, cuts)
            assert poly.vertices == verts
            assert poly.cuts == cuts
            assert poly.ff_l == (0.0, 2.0)

    def test_anchor_and_domain(self):
        poly = polygon_representative(ModelParams(1.0, 3.0, 0.5, 0.5))
        assert poly.vertices[0] == (-2.0, 0.0)
        assert poly.domain == (-2.0, 6.0)

    def test_width_matches_dh_profile(self):
        for R in (1.5, 2.0, 4.0):
            dh = dh_function(R)
            for cuts in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
                poly = polygon_representative(
                    ModelParams(1.0, R, 0.5, 0.5), cuts)
                for l in np.linspace(-2.0, 2.0 * R, 37):
                    assert abs(poly.width(float(l))
                               - dh.rho(float(l))) < 1e-12

    def test_rejects_bad_cuts(self):
        with pytest.raises(ValueError):
            polygon_representative(FF_PARAMS, (0, 1))


class TestToricType:
    def test_component_shapes(self):
        # Corners of the parameter square, sorted by connected component.
        assert polygon_representative(ModelParams(1, 2, 0.0, 0.0)).cuts == (1, -1)
        assert polygon_representative(ModelParams(1, 2, 1.0, 1.0)).cuts == (1, -1)
        assert polygon_representative(ModelParams(1, 2, 1.0, 0.0)).cuts == (-1, 1)
        assert polygon_representative(ModelParams(1, 2, 0.0, 1.0)).cuts == (-1, 1)

    def test_no_cut_levels(self):
        poly = polygon_representative(ModelParams(1, 2, 0.0, 0.0))
        assert poly.ff_l == ()

    def test_product_height_range(self):
        # At (s1, s2) = (0, 0) the map is (z1 + 2 z2, z1): the h-range on
        # each level is the physical z1-interval.
        p = ModelParams(1.0, 2.0, 0.0, 0.0)
        bnd = image_boundary(p, n=32)
        for l, h_min, h_max in bnd.samples:
            lo = max(-1.0, (l - 2.0) / 1.0)
            hi = min(1.0, (l + 2.0) / 1.0)
            assert abs(h_min - lo) < 1e-8
            assert abs(h_max - hi) < 1e-8


class TestGroupActions:
    def test_shear_zero_is_identity(self):
        poly = polygon_representative(FF_PARAMS)
        assert act_shear(poly, 0) == poly

    def test_shear_inverse(self):
        poly = polygon_representative(FF_PARAMS)
        assert act_shear(act_shear(poly, 3), -3) == poly

    def test_shear_preserves_width(self):
        poly = act_shear(polygon_representative(FF_PARAMS), 2)
        dh = dh_function(2.0)
        for l in np.linspace(-2.0, 4.0, 25):
            assert abs(poly.width(float(l)) - dh.rho(float(l))) < 1e-12

    def test_flip_changes_one_sign(self):
        poly = polygon_representative(FF_PARAMS, (1, 1))
        assert act_flip_cut(poly, 1, FF_PARAMS).cuts == (-1, 1)
        assert act_flip_cut(poly, 2, FF_PARAMS).cuts == (1, -1)

    def test_double_flip_is_identity(self):
        poly = polygon_representative(FF_PARAMS, (1, -1))
        back = act_flip_cut(act_flip_cut(poly, 1, FF_PARAMS), 1, FF_PARAMS)
        assert back == poly

    def test_flip_requires_cuts(self):
        poly = polygon_representative(ModelParams(1, 2, 0.0, 0.0))
        with pytest.raises(ValueError):
            act_flip_cut(poly, 1, ModelParams(1, 2, 0.0, 0.0))


class TestImageBoundary:
    def test_corner_values_on_envelope(self):
        p = ModelParams(1.0, 2.0, 0.4, 0.5)
        bnd = image_boundary(p, n=64)
        ls = np.array([s[0] for s in bnd.samples])
        for name in ("NN", "SS"):
            mv = momentum_map(FIXED_POINTS[name], p)
            k = int(np.argmin(np.abs(ls - mv.l_val)))
            _, h_min, h_max = bnd.samples[k]
            assert h_min - 1e-9 <= mv.h_val <= h_max + 1e-9

    def test_ff_values_strictly_interior(self):
        p = ModelParams(1.0, 2.0, 0.4, 0.5)
        bnd = image_boundary(p, n=64)
        assert len(bnd.ff_values) == 2
        samples = np.array(bnd.samples)
        for l, h in bnd.ff_values:
            h_min = np.interp(l, samples[:, 0], samples[:, 1])
            h_max = np.interp(l, samples[:, 0], samples[:, 2])
            assert h_min + 1e-3 < h < h_max - 1e-3

    def test_no_ff_values_for_toric_type(self):
        bnd = image_boundary(ModelParams(1, 2, 0.0, 0.0), n=16)
        assert bnd.ff_values == ()
        assert len(bnd.corner_values) == 4

    def test_sample_count_guard(self):
        with pytest.raises(ValueError):
            image_boundary(FF_PARAMS, n=8)

    def test_small_ratio_equivalent(self):
        # Swapping the spheres leaves the envelope of the image unchanged up
        # to the symmetry itself; widths h_max - h_min agree per level.
        a = image_boundary(ModelParams(2.0, 1.0, 0.3, 0.4), n=32)
        b = image_boundary(ModelParams(1.0, 2.0, 0.3, 0.6), n=32)
        wa = sorted(s[2] - s[1] for s in a.samples)
        wb = sorted(s[2] - s[1] for s in b.samples)
        assert np.max(np.abs(np.array(wa) - np.array(wb))) < 1e-7

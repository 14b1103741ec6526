import math

import numpy as np
import pytest
from scipy.integrate import quad

from kerov_lab.diagram import sup_distance
from kerov_lab.errors import AlphaOutOfRange, EdgeSingularity
from kerov_lab.shapes import (
    density_mass,
    edge_atom,
    omega,
    omega_alpha,
    omega_alpha_density,
    reconstruct_from_density,
    support,
    vkls_shape,
    wishart_shape,
)

ALPHAS = [1.0, 1.5, 2.25, 4.0]


def test_omega_values():
    assert omega(0.0) == pytest.approx(4 / math.pi, abs=1e-15)
    assert omega(2.0) == 2 and omega(-2.0) == 2
    assert omega(3.0) == 3
    assert omega(1.999999999) == pytest.approx(2.0, abs=1e-8)


def test_omega_even_and_above_abs():
    rng = np.random.default_rng(0)
    t = rng.uniform(-3, 3, 5000)
    np.testing.assert_allclose(omega(t), omega(-t), atol=1e-15, rtol=0)
    assert np.all(omega(t) >= np.abs(t) - 1e-15)


def test_support():
    assert support(1) == (0, 4)
    assert support(2.25) == pytest.approx((0.25, 6.25))
    assert support(4) == (1, 9)
    with pytest.raises(AlphaOutOfRange):
        support(0.5)


def test_omega_alpha_values():
    assert omega_alpha(0.25, 2.25) == pytest.approx(2.0)
    assert omega_alpha(4.0, 1.0) == pytest.approx(3.0)
    assert omega_alpha(10.0, 2.25) == pytest.approx(7.75)
    with pytest.raises(AlphaOutOfRange):
        omega_alpha(1.0, 0.9)


def test_omega_one_formula_on_zero_four():
    # (1/pi)((x-2) arcsin(x/2-1) + sqrt(4-(x-2)^2)) + x/2 at x=2 and x=4
    assert omega_alpha(2.0, 1.0) == pytest.approx(1 + 2 / math.pi, abs=1e-15)
    assert omega_alpha(4.0 - 1e-12, 1.0) == pytest.approx(3.0, abs=1e-6)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_shape_properties(alpha):
    lo, hi = support(alpha)
    t = np.linspace(lo - 1, hi + 1, 20001)
    v = omega_alpha(t, alpha)
    assert np.all(v >= np.abs(t - alpha) - 1e-12)
    assert np.all(np.abs(np.diff(v)) <= np.diff(t) + 1e-12)
    for edge in (lo, hi):
        for eps in (1e-6, 1e-9):
            for x in (edge - eps, edge + eps):
                assert abs(omega_alpha(x, alpha) - abs(x - alpha)) <= 2 * eps


def test_vkls_lipschitz_and_edges():
    t = np.linspace(-3, 3, 20001)
    assert np.all(np.abs(np.diff(omega(t))) <= np.diff(t) + 1e-12)
    for eps in (1e-6, 1e-9):
        assert abs(omega(2 - eps) - (2 - eps)) <= 2 * eps


class TestDensity:
    def test_values(self):
        assert omega_alpha_density(3.25, 2.25) == pytest.approx(4.5 / (9.75 * math.pi))
        assert omega_alpha_density(2.0, 1.0) == pytest.approx(1 / (2 * math.pi))
        assert omega_alpha_density(0.1, 2.25) == 0

    def test_edge(self):
        with pytest.raises(EdgeSingularity):
            omega_alpha_density(0.25, 2.25)
        with pytest.raises(EdgeSingularity):
            omega_alpha_density(6.25, 2.25)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_normalization(self, alpha):
        assert density_mass(alpha) + edge_atom(alpha) == pytest.approx(2.0, abs=1e-8)

    @pytest.mark.parametrize("alpha", [1.5, 2.25, 4.0])
    def test_normalization_against_direct_quadrature(self, alpha):
        # independent route: 4a - (x-a-1)^2 = (x-lo)(hi-x), handled by quad's
        # algebraic endpoint weight in the original variable
        lo, hi = support(alpha)
        value, _ = quad(lambda x: (x + alpha - 1) / (math.pi * x), lo, hi,
                        weight="alg", wvar=(-0.5, -0.5), epsabs=1e-12)
        assert value == pytest.approx(2.0 - edge_atom(alpha), abs=1e-8)

    @pytest.mark.parametrize("alpha", [1.5, 2.25, 4.0])
    def test_density_is_second_derivative(self, alpha):
        lo, hi = support(alpha)
        h = 1e-4
        for x in np.linspace(lo + 0.1, hi - 0.1, 7):
            fd = (omega_alpha(x + h, alpha) - 2 * omega_alpha(x, alpha) + omega_alpha(x - h, alpha)) / h**2
            assert fd == pytest.approx(omega_alpha_density(x, alpha), rel=1e-5)


class TestReconstruction:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_matches_closed_form(self, alpha):
        rec = reconstruct_from_density(alpha)
        lo, hi = support(alpha)
        t = np.arange(lo - 0.5, hi + 0.5, 1e-3)
        assert np.max(np.abs(rec(t) - omega_alpha(t, alpha))) <= 1e-5

    def test_right_edge_value(self):
        rec = reconstruct_from_density(2.25)
        assert rec.right_edge_value == pytest.approx(4.0, abs=1e-5)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_slope_change(self, alpha):
        assert reconstruct_from_density(alpha).slope_change == pytest.approx(2.0, abs=1e-6)

    def test_grid_minimum(self):
        with pytest.raises(ValueError):
            reconstruct_from_density(2.0, grid_n=50)


def test_limit_shape_objects():
    v = vkls_shape()
    assert v.center == 0 and v.support == (-2, 2)
    w = wishart_shape(2.25)
    assert w.center == 2.25 and w.support == pytest.approx((0.25, 6.25))
    assert w(3.0) == omega_alpha(3.0, 2.25)
    assert v(5.0) == 5.0


def test_sup_distance_grid_bound_on_curved_shape():
    fine = sup_distance(vkls_shape(), wishart_shape(1.0), grid_step=1e-4)
    coarse = sup_distance(vkls_shape(), wishart_shape(1.0), grid_step=0.25)
    assert fine - 0.25 <= coarse <= fine + 1e-12

import math

import numpy as np
import pytest

from coneh import Circle, ConeHarmonic, InvalidArgument, Mode, circle_mode
from coneh import gridcheck, harmonics

TWO_PI = 2.0 * math.pi


def harmonic_pair(L=TWO_PI):
    return ConeHarmonic(2, (circle_mode(L, 1, "cos", 1.0),
                            circle_mode(L, 2, "sin", 0.5)))


class TestConeGrid:
    def test_node_layout(self):
        grid = gridcheck.sample_function(lambda r, t: r + 0.0 * t,
                                         TWO_PI, 0.5, 1.5, 5, 8)
        assert grid.r_nodes[0] == 0.5 and grid.r_nodes[-1] == 1.5
        assert grid.theta_nodes[0] == 0.0
        assert grid.theta_nodes[-1] == pytest.approx(TWO_PI * 7 / 8)
        assert grid.values.shape == (5, 8)

    def test_rejects_tip(self):
        with pytest.raises(InvalidArgument):
            gridcheck.ConeGrid(TWO_PI, 0.0, 1.0, np.zeros((4, 4)))

    def test_sample_matches_pointwise_evaluation(self):
        u = harmonic_pair()
        grid = gridcheck.sample_harmonic(u, TWO_PI, 0.5, 1.5, 7, 9)
        X = Circle(TWO_PI)
        for i, r in enumerate(grid.r_nodes):
            for j, t in enumerate(grid.theta_nodes):
                assert grid.values[i, j] == pytest.approx(
                    harmonics.evaluate(u, X, t, r), rel=1e-13, abs=1e-13)


class TestLaplacianResidual:
    def test_harmonic_has_small_residual(self):
        grid = gridcheck.sample_harmonic(harmonic_pair(), TWO_PI,
                                         0.5, 1.5, 128, 128)
        res_max, res_rms = gridcheck.laplacian_residual(grid)
        assert res_rms <= res_max < 1e-2

    def test_negative_control_r_squared(self):
        # Laplacian of r^2 on the cone is 4, nowhere small
        for m in (32, 64, 128):
            grid = gridcheck.sample_function(lambda r, t: r ** 2 + 0.0 * t,
                                             TWO_PI, 0.5, 1.5, m, m)
            res_max, _ = gridcheck.laplacian_residual(grid)
            assert res_max >= 0.1

    def test_negative_control_wrong_exponent(self):
        # r^(alpha') phi_j with alpha' != 2 pi j / L is not harmonic
        u = ConeHarmonic(2, (circle_mode(TWO_PI, 2, "cos", 1.0)
                             ._replace(alpha=1.5),))
        grid = gridcheck.sample_harmonic(u, TWO_PI, 0.5, 1.5, 64, 64)
        res_max, _ = gridcheck.laplacian_residual(grid)
        assert res_max > 0.1

    def test_slit_cone_modes(self):
        # fractional exponents on the short circle are still harmonic
        L = math.pi
        u = ConeHarmonic(2, (circle_mode(L, 1, "cos", 1.0),))
        grid = gridcheck.sample_harmonic(u, L, 0.5, 1.5, 128, 128)
        res_max, _ = gridcheck.laplacian_residual(grid)
        assert res_max < 1e-2


class TestConvergenceOrder:
    def test_second_order_for_harmonic_mode(self):
        order, residuals = gridcheck.convergence_order(
            (1.0, 1, 1.0), TWO_PI, (0.5, 1.5), [32, 64, 128])
        assert 1.8 <= order <= 2.2
        assert residuals[0] > residuals[1] > residuals[2]

    def test_rejects_non_doubling_resolutions(self):
        with pytest.raises(InvalidArgument):
            gridcheck.convergence_order((1.0, 1, 1.0), TWO_PI,
                                        (0.5, 1.5), [32, 48, 64])

    def test_rejects_too_few_resolutions(self):
        with pytest.raises(InvalidArgument):
            gridcheck.convergence_order((1.0, 1, 1.0), TWO_PI,
                                        (0.5, 1.5), [32, 64])


class TestGridJ:
    def test_matches_closed_form(self):
        u = harmonic_pair()
        grid = gridcheck.sample_harmonic(u, TWO_PI, 0.005, 1.1, 2048, 256)
        got = gridcheck.grid_J(grid, 1.0)
        assert got == pytest.approx(harmonics.J(u, 1.0), rel=1e-4)

    def test_single_mode_reference_value(self):
        # one unit mode at alpha = 1: J(1) = 1 / (2 * 1 + 2) = 1/4
        u = ConeHarmonic(2, (circle_mode(TWO_PI, 1, "cos", 1.0),))
        grid = gridcheck.sample_harmonic(u, TWO_PI, 0.005, 1.1, 2048, 128)
        assert gridcheck.grid_J(grid, 1.0) == pytest.approx(0.25, rel=1e-3)

    def test_partial_cell_interpolation(self):
        u = ConeHarmonic(2, (circle_mode(TWO_PI, 1, "cos", 1.0),))
        grid = gridcheck.sample_harmonic(u, TWO_PI, 0.005, 1.3, 2048, 128)
        # s strictly between radial nodes
        s = 0.9871
        assert gridcheck.grid_J(grid, s) == pytest.approx(
            harmonics.J(u, s), rel=1e-3)

    def test_rejects_uncontrolled_tip_truncation(self):
        grid = gridcheck.sample_function(lambda r, t: r + 0.0 * t,
                                         TWO_PI, 0.5, 1.5, 16, 16)
        with pytest.raises(InvalidArgument, match="r_min"):
            gridcheck.grid_J(grid, 1.0)

    def test_rejects_s_outside_window(self):
        grid = gridcheck.sample_function(lambda r, t: r + 0.0 * t,
                                         TWO_PI, 0.005, 1.0, 16, 16)
        with pytest.raises(InvalidArgument, match="window"):
            gridcheck.grid_J(grid, 2.0)


class TestCsvDump:
    def test_rows_round_trip(self, tmp_path):
        grid = gridcheck.sample_function(lambda r, t: r * np.cos(t),
                                         TWO_PI, 0.5, 1.0, 3, 4)
        path = tmp_path / "grid.csv"
        gridcheck.grid_dump_csv(grid, str(path))
        lines = path.read_text().strip().split("\n")
        assert lines[0] == "r,theta,value"
        assert len(lines) == 1 + 3 * 4
        r, theta, val = (float(x) for x in lines[1].split(","))
        assert (r, theta) == (0.5, 0.0)
        assert val == pytest.approx(0.5)

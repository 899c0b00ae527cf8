"""Independent finite-difference verification of cone harmonics.

Everything else in the library manipulates closed forms; here the claimed
harmonics are sampled on an (r, theta) annulus and pushed through a
centered-difference cone Laplacian.  A genuine cone harmonic shows the
O(h^2) truncation signature (residual order near 2 under grid doubling);
a non-harmonic function does not, and the trapezoid ball average matches
the closed-form J.
"""

import math

from coneh import ConeHarmonic, circle_mode, gridcheck, harmonics

TWO_PI = 2.0 * math.pi


def main():
    print("residual convergence order for r^alpha * cos modes:")
    for L, j in ((TWO_PI, 1), (TWO_PI, 3), (math.pi, 1), (math.pi, 2)):
        alpha = TWO_PI * j / L
        order, residuals = gridcheck.convergence_order(
            (alpha, j, 1.0), L, (0.5, 1.5), [32, 64, 128])
        print(f"  L = {L:6.4f}, j = {j} (alpha = {alpha:4.1f}):  "
              f"order = {order:5.3f},  residuals = "
              + ", ".join(f"{r:.2e}" for r in residuals))

    print("\nnegative control u = r^2 (cone Laplacian is 4, not 0):")
    for m in (32, 64, 128):
        grid = gridcheck.sample_function(lambda r, t: r ** 2 + 0.0 * t,
                                         TWO_PI, 0.5, 1.5, m, m)
        res_max, res_rms = gridcheck.laplacian_residual(grid)
        print(f"  m = {m:4d}:  max residual = {res_max:.3f}  "
              f"(rms {res_rms:.3f})")

    u = ConeHarmonic(2, (circle_mode(TWO_PI, 1, "cos", 1.0),
                         circle_mode(TWO_PI, 2, "sin", 0.5)))
    grid = gridcheck.sample_harmonic(u, TWO_PI, 0.005, 1.1, 2048, 256)
    got = gridcheck.grid_J(grid, 1.0)
    want = harmonics.J(u, 1.0)
    print(f"\nball average by grid quadrature: {got:.8f}")
    print(f"closed-form J(1):                {want:.8f}")
    print(f"relative difference:             {abs(got - want) / want:.2e}")


if __name__ == "__main__":
    main()

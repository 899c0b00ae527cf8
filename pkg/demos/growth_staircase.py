"""Walk through the growth-dimension staircase on a few cones.

The dimension h_k of harmonic functions of polynomial growth order k on a
cone C(X) is piecewise constant in k and jumps exactly at the resonant
orders, where k(k+n-2) hits an eigenvalue of the cross-section X.  This
script prints the staircase for the flat plane, a slit cone, and flat R^3,
and checks the flat cases against the harmonic-polynomial dimensions.
"""

import math

from coneh import (Circle, RoundSphere, euclidean_hk, hk_bounds, hk_staircase)


def show_staircase(name, X, n, k_max):
    print(f"\n== {name} (n = {n}) ==")
    print(f"{'interval':>22}  {'h_k':>5}  {'jump':>4}")
    for s in hk_staircase(X, n, k_max):
        print(f"  [{s.k_lo:7.4f}, {s.k_hi:7.4f})  {s.h:5d}  {s.jump:4d}")


def main():
    # The cone over the full circle is the flat plane: h_k = 2k + 1.
    show_staircase("flat plane = cone over Circle(2*pi)",
                   Circle(2.0 * math.pi), 2, 5.5)
    for k in range(1, 6):
        assert hk_bounds(Circle(2.0 * math.pi), 2, k).upper == 2 * k + 1

    # Shrinking the circle stretches the resonances apart: fewer harmonic
    # functions at every growth order.  Circle(pi) is a "slit" cone whose
    # resonances sit at the even integers.
    show_staircase("slit cone = cone over Circle(pi)", Circle(math.pi), 2, 5.5)

    # Flat R^3 via the round 2-sphere; jumps are the spherical-harmonic
    # multiplicities 2l + 1.
    show_staircase("flat R^3 = cone over RoundSphere(2)", RoundSphere(2), 3, 4.5)
    for k in range(1, 5):
        assert hk_bounds(RoundSphere(2), 3, k).upper == euclidean_hk(3, k)

    # Between resonances the bounds are exact; at a resonance only the
    # two-sided bracket survives.
    X = Circle(2.0 * math.pi)
    for k in (2.5, 3.0):
        rep = hk_bounds(X, 2, k)
        tag = "resonant" if rep.resonant else "exact"
        print(f"\nk = {k}: lower = {rep.lower}, upper = {rep.upper} ({tag})")


if __name__ == "__main__":
    main()

"""Convergence of the growth-dimension ratios to their volume limits.

Three ratios attached to a cone C(X) converge to constants determined by
the measure of the cross-section alone:

  * pointwise:  k^(1-n) h_k            ->  2*alpha / ((n-1)! omega_n)
  * Cesaro:     k^(-n) sum_i h_(i-1)   ->  2*alpha / (n! omega_n)
  * Weyl:       N_X(t) t^(-(n-1)/2)    ->  n omega_(n-1) alpha / (2 pi)^(n-1)

with alpha = measure(X)/n and omega_n the unit-ball volume.  The tables
below show all three marching toward their limits on a circle cone and on
the round sphere.
"""

import math

from coneh import (Circle, RoundSphere, asymptotic_ratio, cesaro_limit,
                   empirical_ratio_convergence, weyl_ratio)


def ratio_table(name, X, n, ks):
    print(f"\n== {name} ==")
    print(f"pointwise limit: {asymptotic_ratio(X, n):.6f}   "
          f"Cesaro limit: {cesaro_limit(X, n):.6f}")
    print(f"{'k':>8}  {'pointwise':>10}  {'dev':>9}  {'Cesaro':>10}  {'dev':>9}")
    for row in empirical_ratio_convergence(X, n, ks):
        print(f"{row.k:8.1f}  {row.pointwise_ratio:10.6f}  "
              f"{row.pointwise_deviation:9.2e}  {row.cesaro_ratio:10.6f}  "
              f"{row.cesaro_deviation:9.2e}")


def weyl_table(name, X, n, lams):
    print(f"\n== Weyl ratio, {name} ==")
    print(f"{'lambda':>10}  {'ratio':>10}  {'limit':>10}  {'rel dev':>9}")
    for lam in lams:
        r = weyl_ratio(X, n, lam)
        print(f"{lam:10.0f}  {r.ratio:10.6f}  {r.limit:10.6f}  "
              f"{r.deviation:9.2e}")


def main():
    ratio_table("cone over Circle(pi)", Circle(math.pi), 2,
                [10.3, 100.3, 1000.3, 10000.3])
    ratio_table("flat R^3 (RoundSphere(2))", RoundSphere(2), 3,
                [10.5, 100.5, 1000.5])
    weyl_table("Circle(pi)", Circle(math.pi), 2, [1e2, 1e4, 1e6])
    weyl_table("RoundSphere(2)", RoundSphere(2), 3, [1e2, 1e4, 5e4])


if __name__ == "__main__":
    main()

"""Growth dimensions of polynomial-growth harmonic functions on cones.

Everything here is driven by the cross-section counting function N_X:
the upper bound h_k <= N_X(k(k+n-2)), the effective lower bound (the
supremum of N_X(beta(beta+n-2)) over beta < k, i.e. the left limit),
exactness away from resonances, the large-k asymptotics and their Cesaro
variant, Weyl ratios, and the collapsed-case bounds where the cone
dimension m is smaller than the manifold dimension n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidArgument
from .exponents import eigenvalue_from_exponent, exponent_from_eigenvalue
from .spectra import RESONANCE_TOL, CrossSection

__all__ = [
    "GrowthReport", "CollapsedReport", "StaircaseStep", "EmpiricalRatio",
    "WeylRatio", "exponent_from_eigenvalue", "eigenvalue_from_exponent",
    "ball_volume", "hk_bounds", "hk_staircase", "asymptotic_ratio", "cesaro_limit",
    "empirical_ratio_convergence", "weyl_ratio", "collapsed_bounds",
    "euclidean_hk",
]


def ball_volume(n: int) -> float:
    """Volume of the unit ball in R^n (exact at half-integer Gamma values)."""
    if n < 1:
        raise InvalidArgument(f"dimension must be >= 1, got {n}")
    return math.pi ** (n / 2.0) / math.gamma(n / 2.0 + 1.0)


def euclidean_hk(n: int, k: int) -> int:
    """Dimension of harmonic polynomials of degree <= k in R^n.

    Sum over degrees l of C(n+l-1, l) - C(n+l-3, l-2); the sharpness
    oracle for the counting-function bounds on round spheres.
    """
    if n < 2 or k < 0:
        raise InvalidArgument(f"need n >= 2 and k >= 0, got n={n}, k={k}")
    total = 0
    for l in range(k + 1):
        total += math.comb(n + l - 1, l)
        if l >= 2:
            total -= math.comb(n + l - 3, l - 2)
    return total


@dataclass(frozen=True)
class GrowthReport:
    """h_k bounds for one (X, n, k): lower/upper, exactness, resonance info."""

    k: float
    n: int
    lower: int
    upper: int
    exact: int | None
    resonant: bool
    nearest_resonance: float

    def to_json(self) -> dict:
        return {
            "k": self.k, "n": self.n, "lower": self.lower,
            "upper": self.upper, "exact": self.exact,
            "resonant": self.resonant,
            "nearest_resonance": self.nearest_resonance,
        }


@dataclass(frozen=True)
class CollapsedReport:
    """h_k bounds when the cone has Hausdorff dimension m <= n."""

    k: float
    n: int
    m: int
    V: float
    lower: int
    upper: int
    limit_ratio: float

    def to_json(self) -> dict:
        return {
            "k": self.k, "n": self.n, "m": self.m, "V": self.V,
            "lower": self.lower, "upper": self.upper,
            "limit_ratio": self.limit_ratio,
        }


class StaircaseStep(NamedTuple):
    k_lo: float
    k_hi: float
    h: int
    jump: int  # multiplicity entering at k_lo (0 for the first step)


class WeylRatio(NamedTuple):
    ratio: float
    limit: float
    deviation: float


class EmpiricalRatio(NamedTuple):
    k: float
    pointwise_ratio: float
    pointwise_deviation: float
    cesaro_ratio: float
    cesaro_deviation: float


def _check_dim(X: CrossSection, n: int):
    if n < 2:
        raise InvalidArgument(f"cone dimension must be >= 2, got {n}")
    if n != X.ambient_dim:
        raise InvalidArgument(
            f"cross-section has ambient dimension {X.ambient_dim}, got n = {n}")


def hk_bounds(X: CrossSection, n: int, k: float,
              tol: float = RESONANCE_TOL) -> GrowthReport:
    """Lower/upper/exact h_k from the counting function of X.

    upper = N_X(k(k+n-2)); lower = the strict count below k(k+n-2)
    (the supremum of the lower bound over beta < k), clamped to 1 since
    constants always qualify; exact = upper whenever k is non-resonant.
    In the Liouville regime k(k+n-2) < lambda_1 this gives h_k = 1.
    """
    _check_dim(X, n)
    if k <= 0:
        raise InvalidArgument(f"k must be positive, got {k}")
    lam = eigenvalue_from_exponent(k, n)
    upper = X.counting(lam)
    lower = max(1, X.counting_left(lam))
    resonant, beta, _dist = X.is_resonant(k, tol)
    return GrowthReport(
        k=k, n=n, lower=lower, upper=upper,
        exact=None if resonant else upper,
        resonant=resonant, nearest_resonance=beta)


def hk_staircase(X: CrossSection, n: int, k_max: float,
                 ) -> list[StaircaseStep]:
    """The exact h_k staircase on (0, k_max], partitioned at resonances.

    Each step carries the constant counting value on its interval; at a
    resonant left endpoint the step reports the full counting value
    (resonant eigenspace included) and the size of the jump.
    """
    _check_dim(X, n)
    if k_max <= 0:
        raise InvalidArgument(f"k_max must be positive, got {k_max}")
    res = [b for b in X.resonant_set_upto(k_max).exponents if b > 0]
    steps: list[StaircaseStep] = []
    prev_h = 1
    lo = 0.0
    prev_jump = 0
    for beta in res:
        if beta > lo:
            steps.append(StaircaseStep(lo, beta, prev_h, prev_jump))
        h = X.counting(eigenvalue_from_exponent(beta, n))
        prev_jump = h - prev_h
        prev_h = h
        lo = beta
    steps.append(StaircaseStep(lo, k_max, prev_h, prev_jump))
    return steps


def asymptotic_ratio(X: CrossSection, n: int) -> float:
    """The limit of k^(1-n) h_k: 2*alpha / ((n-1)! * omega_n)."""
    _check_dim(X, n)
    alpha = X.measure() / n
    return 2.0 * alpha / (math.factorial(n - 1) * ball_volume(n))


def cesaro_limit(X: CrossSection, n: int) -> float:
    """The limit of k^(-n) * sum of h_(i-1): 2*alpha / (n! * omega_n)."""
    _check_dim(X, n)
    alpha = X.measure() / n
    return 2.0 * alpha / (math.factorial(n) * ball_volume(n))


def _cesaro_offset(X: CrossSection, k: float) -> float:
    """A fixed non-resonant sampling offset: half the minimal resonance gap,
    capped at 0.25."""
    res = X.resonant_set_upto(max(k, 1.0)).exponents
    gaps = [b2 - b1 for b1, b2 in zip(res, res[1:]) if b2 > b1]
    delta = min(0.25, min(gaps) / 2.0) if gaps else 0.25
    return delta


def empirical_ratio_convergence(X: CrossSection, n: int, k_list,
                                tol: float = RESONANCE_TOL
                                ) -> list[EmpiricalRatio]:
    """Pointwise and Cesaro ratios with deviations from their limits.

    Resonant k are perturbed by +tol so every sample is non-resonant; the
    Cesaro sum samples growth orders i-1+delta with a fixed non-resonant
    offset delta.
    """
    _check_dim(X, n)
    limit_p = asymptotic_ratio(X, n)
    limit_c = cesaro_limit(X, n)
    out = []
    for k in k_list:
        if k <= 0:
            raise InvalidArgument(f"k must be positive, got {k}")
        resonant, _, _ = X.is_resonant(k, tol)
        k_eff = k + tol if resonant else k
        h = X.counting(eigenvalue_from_exponent(k_eff, n))
        ratio_p = k_eff ** (1 - n) * h
        delta = _cesaro_offset(X, k)
        total = 0
        for i in range(1, int(k) + 1):
            total += X.counting(eigenvalue_from_exponent(i - 1 + delta, n))
        ratio_c = k ** (-n) * total
        out.append(EmpiricalRatio(
            k=k, pointwise_ratio=ratio_p,
            pointwise_deviation=abs(ratio_p - limit_p),
            cesaro_ratio=ratio_c,
            cesaro_deviation=abs(ratio_c - limit_c)))
    return out


def weyl_ratio(X: CrossSection, n: int, lam: float) -> WeylRatio:
    """N_X(lam) * lam^(-(n-1)/2) against its Weyl limit.

    The limit is n * omega_(n-1) * alpha / (2*pi)^(n-1) with
    alpha = measure(X) / n.
    """
    _check_dim(X, n)
    if lam <= 0:
        raise InvalidArgument(f"lambda must be positive, got {lam}")
    alpha = X.measure() / n
    ratio = X.counting(lam) * lam ** (-(n - 1) / 2.0)
    limit = n * ball_volume(n - 1) * alpha / (2.0 * math.pi) ** (n - 1)
    return WeylRatio(ratio, limit, abs(ratio - limit) / limit)


def collapsed_bounds(X: CrossSection, n: int, m: int, k: float
                     ) -> CollapsedReport:
    """h_k bounds when the cone over X has Hausdorff dimension m <= n.

    X is the (m-1)-dimensional cross-section.  The lower bound uses the
    exponent relation with m; the upper bound's argument is shifted by
    (n-m)/2 on both factors.  With m = n this reduces to hk_bounds.
    """
    if not 2 <= m <= n:
        raise InvalidArgument(f"need 2 <= m <= n, got m={m}, n={n}")
    if m != X.ambient_dim:
        raise InvalidArgument(
            f"cross-section has ambient dimension {X.ambient_dim}, "
            f"expected the cone dimension m = {m}")
    if k <= 0:
        raise InvalidArgument(f"k must be positive, got {k}")
    lower = max(1, X.counting_left(k * (k + m - 2)))
    upper = X.counting((k + (n - m) / 2.0) * (k + (n + m) / 2.0 - 2.0))
    V = X.measure()
    limit_ratio = 2.0 * V / (math.factorial(m) * ball_volume(m))
    return CollapsedReport(k=k, n=n, m=m, V=V, lower=lower, upper=upper,
                           limit_ratio=limit_ratio)

"""Conversion between homogeneity exponents and cross-section eigenvalues.

A mode r^alpha * phi is harmonic on an n-dimensional cone exactly when the
eigenvalue of phi equals alpha * (alpha + n - 2); these two functions invert
that relation on the nonnegative branch.
"""

import math

from .errors import InvalidArgument


def exponent_from_eigenvalue(lam: float, n: int) -> float:
    """Return the unique alpha >= 0 with alpha * (alpha + n - 2) = lam.

    Strictly increasing in lam, with alpha(0) = 0.  For n = 2 this is
    simply sqrt(lam).
    """
    if lam < 0:
        raise InvalidArgument(f"eigenvalue must be nonnegative, got {lam}")
    if n < 2:
        raise InvalidArgument(f"ambient dimension must be >= 2, got {n}")
    return ((2.0 - n) + math.sqrt((n - 2.0) ** 2 + 4.0 * lam)) / 2.0


def eigenvalue_from_exponent(alpha: float, n: int) -> float:
    """Return alpha * (alpha + n - 2), the eigenvalue of a mode of growth alpha."""
    if alpha < 0:
        raise InvalidArgument(f"exponent must be nonnegative, got {alpha}")
    if n < 2:
        raise InvalidArgument(f"ambient dimension must be >= 2, got {n}")
    return alpha * (alpha + n - 2.0)

"""Growth dimensions and frequency checks for harmonic functions on cones."""

import os as _os

# CONEH_THREADS caps the BLAS/OpenMP parallelism of the dense eigensolver;
# it must be applied before numpy loads its backend.
if "CONEH_THREADS" in _os.environ:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        _os.environ.setdefault(_var, _os.environ["CONEH_THREADS"])

from .errors import (ConehError, DegenerateInput, InvalidArgument,
                     NumericFailure, PreconditionViolation,
                     ResolutionInsufficient, UnsupportedCrossSection)
from .exponents import eigenvalue_from_exponent, exponent_from_eigenvalue
from .spectra import (Circle, CrossSection, ExplicitSpectrum,
                      MetricCircleNumeric, ResonantSet, RoundSphere,
                      Spectrum, load_spectrum, spectrum_from_json)
from .eigensolver import (DiscreteOperator, MetricCircle, assemble,
                          certified_spectrum, eigenvalues, load_density)
from .growth import (CollapsedReport, EmpiricalRatio, GrowthReport,
                     StaircaseStep, WeylRatio, asymptotic_ratio, ball_volume,
                     cesaro_limit, collapsed_bounds,
                     empirical_ratio_convergence, euclidean_hk, hk_bounds,
                     hk_staircase, weyl_ratio)
from .harmonics import (ConeHarmonic, Mode, circle_mode,
                        cone_harmonic_from_json, evaluate,
                        frequency_identity_check, sharp_growth_order,
                        three_circles_ratio)
from .harmonics import I, D, U, J  # noqa: E741 - standard functional names
from .gridcheck import (ConeGrid, convergence_order, grid_J,
                        laplacian_residual, sample_function, sample_harmonic)

__version__ = "0.1.0"

"""Spectral Bayesian inference.

Densities are represented by their coefficients in an orthonormal basis
(Fourier, cosine or Hermite functions).  In the Fourier and cosine bases
the product ``prior * likelihood`` becomes a convolution of coefficient
vectors, computed with an FFT in ``O(N log N)``; its zeroth coefficient
yields the evidence and a rescaling yields the posterior.
"""

from .basis import (
    BasisAdvice,
    BasisKind,
    BasisSpec,
    CoefficientVector,
    Domain,
    DomainKind,
    ImaginaryResidualWarning,
    Moments,
    QuadratureRule,
    advise_basis,
    basis_matrix,
    eval_basis,
    gauss_hermite,
    hermite_functions,
    moments,
    project,
    quadrature_for,
    reconstruct,
    reconstruct_uniform,
)
from .diagnostics import (
    DecayClass,
    DecayReport,
    SuitabilityVerdict,
    Verdict,
    fit_decay,
    recommend_K,
    suitability,
    tail_energy,
)
from .errors import (
    BasisMismatchError,
    CoefficientFileError,
    DomainError,
    HarmonicBayesError,
    InputContractError,
    InvalidPosteriorError,
    NumericalDegeneracyError,
    UnsupportedBasisError,
)
from .fft import (
    center_to_standard,
    circular_convolve_centered,
    dft,
    fast_circular_convolve,
    fast_linear_convolve,
    idft,
    standard_to_center,
)
from .oracles import (
    GridPosterior,
    conjugate_gaussian_posterior,
    conjugate_gaussian_sequence,
    grid_posterior,
    truncated_gaussian_posterior,
    truncated_normal_moments,
)
from .sequential import FilterState, SeparableModel, init, joint_evidence, run, separable_update, step
from .spectral import (
    Engine,
    Mode,
    UpdateResult,
    bayes_update,
    circular_convolve_direct,
    convolve,
    evidence,
    l2_norm,
    linear_convolve_direct,
    unnormalized_product,
)

__version__ = "0.1.0"

__all__ = [
    "BasisAdvice",
    "BasisKind",
    "BasisSpec",
    "CoefficientVector",
    "Domain",
    "DomainKind",
    "ImaginaryResidualWarning",
    "Moments",
    "QuadratureRule",
    "advise_basis",
    "basis_matrix",
    "eval_basis",
    "gauss_hermite",
    "hermite_functions",
    "moments",
    "project",
    "quadrature_for",
    "reconstruct",
    "reconstruct_uniform",
    "DecayClass",
    "DecayReport",
    "SuitabilityVerdict",
    "Verdict",
    "fit_decay",
    "recommend_K",
    "suitability",
    "tail_energy",
    "BasisMismatchError",
    "CoefficientFileError",
    "DomainError",
    "HarmonicBayesError",
    "InputContractError",
    "InvalidPosteriorError",
    "NumericalDegeneracyError",
    "UnsupportedBasisError",
    "center_to_standard",
    "circular_convolve_centered",
    "dft",
    "fast_circular_convolve",
    "fast_linear_convolve",
    "idft",
    "standard_to_center",
    "GridPosterior",
    "conjugate_gaussian_posterior",
    "conjugate_gaussian_sequence",
    "grid_posterior",
    "truncated_gaussian_posterior",
    "truncated_normal_moments",
    "FilterState",
    "SeparableModel",
    "init",
    "joint_evidence",
    "run",
    "separable_update",
    "step",
    "Engine",
    "Mode",
    "UpdateResult",
    "bayes_update",
    "circular_convolve_direct",
    "convolve",
    "evidence",
    "l2_norm",
    "linear_convolve_direct",
    "unnormalized_product",
]

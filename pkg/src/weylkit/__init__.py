"""Discrete time-frequency analysis on centered self-dual grids.

Phase-space transforms (short-time Fourier, Wigner, tau-Wigner), weighted
modulation and Wiener amalgam norms, Weyl / tau / Kohn-Nirenberg
quantization, and a randomized harness for empirical boundedness ratios.
"""

from .grid import (
    Field2,
    SampleGrid,
    Signal1,
    dft,
    dft2,
    gaussian,
    gaussian_field,
    idft,
    idft2,
    make_grid,
    modulate,
    oversample2,
    reflect,
    spike,
    subsample2,
    translate,
)
from .norms import (
    NormSpec,
    Weight,
    amalgam_norm,
    amalgam_norm_signal,
    check_inclusion,
    conjugate_exponent,
    mixed_norm,
    modulation_norm,
    stft2_mixed_norm,
    symplectic_apply,
)
from .quantization import (
    OperatorMatrix,
    apply,
    convert_symbol,
    kn_from_weyl,
    tau_matrix,
    weyl_from_kn,
    weyl_matrix,
    weyl_matrix_weak,
)
from .transforms import (
    Stft2Result,
    ambiguity,
    stft1,
    stft1_fine,
    stft2,
    stft2_wigner_fine,
    tau_wigner,
    wigner,
    wigner_factorization_sides,
    wigner_fine,
)
from .verify import (
    AdmissibilityVerdict,
    Ensemble,
    ExponentTuple,
    RatioReport,
    check_exponents,
    emit_report,
    lemma31_ratio,
    lemma31_sides,
    lemma32_ratio,
    lemma32_sides,
    lemma_experiment,
    sample_signal,
    sample_symbol,
    theorem_ratio_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityVerdict",
    "Ensemble",
    "ExponentTuple",
    "Field2",
    "NormSpec",
    "OperatorMatrix",
    "RatioReport",
    "SampleGrid",
    "Signal1",
    "Stft2Result",
    "Weight",
    "amalgam_norm",
    "amalgam_norm_signal",
    "ambiguity",
    "apply",
    "check_exponents",
    "check_inclusion",
    "conjugate_exponent",
    "convert_symbol",
    "dft",
    "dft2",
    "emit_report",
    "gaussian",
    "gaussian_field",
    "idft",
    "idft2",
    "kn_from_weyl",
    "lemma31_ratio",
    "lemma31_sides",
    "lemma32_ratio",
    "lemma32_sides",
    "lemma_experiment",
    "make_grid",
    "mixed_norm",
    "modulate",
    "modulation_norm",
    "oversample2",
    "reflect",
    "sample_signal",
    "sample_symbol",
    "spike",
    "stft1",
    "stft1_fine",
    "stft2",
    "stft2_mixed_norm",
    "stft2_wigner_fine",
    "subsample2",
    "symplectic_apply",
    "tau_matrix",
    "tau_wigner",
    "theorem_ratio_experiment",
    "translate",
    "weyl_from_kn",
    "weyl_matrix",
    "weyl_matrix_weak",
    "wigner",
    "wigner_factorization_sides",
    "wigner_fine",
]

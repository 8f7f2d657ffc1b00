"""Closed-form single-exponential unitaries mapping one pure state to another.

>>> import numpy as np
>>> from unimap import map_state
>>> res = map_state([1, 0], [0, 1])
>>> np.allclose(res([1, 0]), res.scale * np.array([0, 1]))
True
"""

from .exponential import (
    Branch,
    MappingResult,
    UnitaryApplicator,
    exp_apply,
    exp_matrix,
    map_state,
    predicted_scale,
    rodrigues_apply,
    solve_angle,
)
from .generator import (
    CaseTag,
    Generator,
    apply_generator,
    classify,
    commutator_residual,
    generator_matrix,
    make_generator,
)
from .hilbert import InputError, InvariantSet, inner_product, invariants, vec_add, vec_norm, vec_scale
from .oracle import dense_expm, frobenius_distance, gram_schmidt_unitary, matrix_apply, matrix_multiply
from .spectral import SpectralData, UnsupportedCaseError, apply_projector, min_poly_residual, spectral_data

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CaseTag",
    "Generator",
    "InputError",
    "InvariantSet",
    "MappingResult",
    "SpectralData",
    "UnitaryApplicator",
    "UnsupportedCaseError",
    "apply_generator",
    "apply_projector",
    "classify",
    "commutator_residual",
    "dense_expm",
    "exp_apply",
    "exp_matrix",
    "frobenius_distance",
    "generator_matrix",
    "gram_schmidt_unitary",
    "inner_product",
    "invariants",
    "make_generator",
    "map_state",
    "matrix_apply",
    "matrix_multiply",
    "min_poly_residual",
    "predicted_scale",
    "rodrigues_apply",
    "solve_angle",
    "spectral_data",
    "vec_add",
    "vec_norm",
    "vec_scale",
]

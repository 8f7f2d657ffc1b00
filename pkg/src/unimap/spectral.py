"""Eigenvalues and algebraic eigenprojectors of a generator.

Projectors are polynomials in ``T`` divided by products of eigenvalue
differences, evaluated on a vector with at most two generator
applications. No eigenvectors are computed and no matrix is formed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .generator import CaseTag, Generator
from .hilbert import _check_dims, as_state

__all__ = [
    "SpectralData",
    "UnsupportedCaseError",
    "apply_projector",
    "min_poly_residual",
    "spectral_data",
]


class UnsupportedCaseError(ValueError):
    """The operation is undefined for a generator that is identically zero."""


@dataclass(frozen=True)
class SpectralData:
    case_tag: CaseTag
    eigenvalues: tuple[complex, ...]

    @property
    def projector_count(self) -> int:
        return len(self.eigenvalues)


def spectral_data(gen: Generator) -> SpectralData:
    inv = gen.inv
    if gen.case_tag is CaseTag.GENERIC:
        lam1 = complex(0.0, -(inv.Gamma + inv.sigma))
        lam2 = complex(0.0, inv.Gamma - inv.sigma)
        return SpectralData(gen.case_tag, (0j, lam1, lam2))
    if gen.case_tag is CaseTag.PHASE_COLLINEAR:
        return SpectralData(gen.case_tag, (0j, complex(0.0, -2.0 * inv.sigma)))
    raise UnsupportedCaseError("T[a,b] = 0 for real-collinear pairs; it has no nontrivial spectrum")


def apply_projector(gen: Generator, k: int, c: ArrayLike) -> NDArray[np.complex128]:
    """Project ``c`` onto the eigenspace of the ``k``-th eigenvalue."""
    c = as_state(c, "c")
    _check_dims(gen.a, c)
    lam = spectral_data(gen).eigenvalues
    if not 0 <= k < len(lam):
        raise IndexError(f"projector index {k} out of range for {len(lam)} projectors")
    tc = gen(c)
    if gen.case_tag is CaseTag.PHASE_COLLINEAR:
        two_i_sigma = 2j * gen.inv.sigma
        if k == 0:
            return (tc + two_i_sigma * c) / two_i_sigma
        return tc / -two_i_sigma
    _, l1, l2 = lam
    if k == 0:
        # (T - l1)(T - l2) = T^2 - (l1 + l2) T + l1 l2
        return (gen(tc) - (l1 + l2) * tc + (l1 * l2) * c) / (l1 * l2)
    other, denom = (l2, l1 * (l1 - l2)) if k == 1 else (l1, l2 * (l2 - l1))
    return (gen(tc) - other * tc) / denom


def min_poly_residual(gen: Generator, c: ArrayLike) -> float:
    """Relative norm of the minimal polynomial of ``T`` applied to ``c``.

    Generic pairs use ``x (x^2 + 2 i sigma x + G^2)`` normalised by
    ``|c| Gamma^3``; phase-collinear pairs use ``x (x + 2 i sigma)``
    normalised by ``|c| sigma^2``; real-collinear pairs use ``x`` and
    return ``|T c| / |c|``.
    """
    c = as_state(c, "c")
    _check_dims(gen.a, c)
    cn = float(np.linalg.norm(c))
    if cn == 0.0:
        return 0.0
    inv = gen.inv
    tc = gen(c)
    if gen.case_tag is CaseTag.REAL_COLLINEAR:
        return float(np.linalg.norm(tc)) / cn
    ttc = gen(tc)
    if gen.case_tag is CaseTag.PHASE_COLLINEAR:
        return float(np.linalg.norm(ttc + 2j * inv.sigma * tc)) / (cn * inv.sigma**2)
    tttc = gen(ttc)
    r = tttc + 2j * inv.sigma * ttc + inv.G_sq * tc
    return float(np.linalg.norm(r)) / (cn * inv.Gamma**3)

"""Complex vector arithmetic and the invariants of a state pair.

The inner product is conjugate-linear in its first argument and linear in
its second, ``<x, y> = sum(conj(x_i) * y_i)``, which is ``np.vdot``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

__all__ = [
    "InputError",
    "InvariantSet",
    "as_state",
    "inner_product",
    "invariants",
    "vec_add",
    "vec_norm",
    "vec_scale",
]

# |G^2| below this fraction of <a,a><b,b> is rounding noise
GRAM_CLAMP_RTOL = 1e-12


class InputError(ValueError):
    """Raised for malformed input: wrong shape, non-finite entries, zero states."""


def as_state(x: ArrayLike, name: str = "state") -> NDArray[np.complex128]:
    """Validate ``x`` and return it as a 1-D complex128 array."""
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim != 1:
        raise InputError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InputError(f"{name} must have dimension >= 1")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} has non-finite amplitudes")
    return arr


def _check_dims(x: NDArray, y: NDArray) -> None:
    if x.shape[0] != y.shape[0]:
        raise InputError(f"dimension mismatch: {x.shape[0]} != {y.shape[0]}")


def inner_product(x: ArrayLike, y: ArrayLike) -> complex:
    x = as_state(x, "x")
    y = as_state(y, "y")
    _check_dims(x, y)
    return complex(np.vdot(x, y))


def vec_add(x: ArrayLike, y: ArrayLike) -> NDArray[np.complex128]:
    x = as_state(x, "x")
    y = as_state(y, "y")
    _check_dims(x, y)
    return x + y


def vec_scale(alpha: complex, x: ArrayLike) -> NDArray[np.complex128]:
    return complex(alpha) * as_state(x, "x")


def vec_norm(x: ArrayLike) -> float:
    x = as_state(x, "x")
    return float(np.sqrt(np.vdot(x, x).real))


@dataclass(frozen=True)
class InvariantSet:
    """Real scalars characterising a pair: ``<b,a> = g + i*sigma``,
    ``G_sq`` the Gram determinant and ``Gamma = sqrt(G_sq + sigma**2)``."""

    g: float
    sigma: float
    G_sq: float
    Gamma: float


def _invariants_from_products(aa: float, bb: float, ba: complex, G_sq: float) -> InvariantSet:
    scale = aa * bb
    if G_sq < 0.0:
        if -G_sq > GRAM_CLAMP_RTOL * scale:
            raise ArithmeticError(f"negative Gram determinant {G_sq!r} (scale {scale!r})")
        G_sq = 0.0
    g = ba.real
    sigma = ba.imag
    return InvariantSet(g=g, sigma=sigma, G_sq=G_sq, Gamma=float(np.sqrt(G_sq + sigma * sigma)))


def gram_determinant(a: NDArray, b: NDArray, bb: float, ba: complex) -> float:
    """``<a,a><b,b> - |<a,b>|^2`` evaluated as ``<b,b> * |a - (<b,a>/<b,b>) b|^2``.

    The residual form keeps full relative accuracy when a and b are nearly
    collinear, where the textbook difference cancels catastrophically.
    """
    r = a - (ba / bb) * b
    return float(bb * np.vdot(r, r).real)


def invariants(a: ArrayLike, b: ArrayLike) -> InvariantSet:
    a = as_state(a, "a")
    b = as_state(b, "b")
    _check_dims(a, b)
    aa = np.vdot(a, a).real
    bb = np.vdot(b, b).real
    if aa == 0.0 or bb == 0.0:
        raise InputError("zero input vector")
    ba = complex(np.vdot(b, a))
    return _invariants_from_products(aa, bb, ba, gram_determinant(a, b, bb, ba))

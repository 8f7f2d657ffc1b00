"""Dense brute-force references.

``dense_expm`` is a scaling-and-squaring Padé exponential (Higham 2005) and
``gram_schmidt_unitary`` builds the basis-pairing unitary from two
orthonormal bases. Both cost O(d^3) and exist to check the closed forms and
to time against them.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .hilbert import InputError, _check_dims, as_state

__all__ = [
    "dense_expm",
    "frobenius_distance",
    "gram_schmidt_unitary",
    "matrix_apply",
    "matrix_multiply",
    "orthonormal_completion",
]

_PADE = {
    3: (120.0, 60.0, 12.0, 1.0),
    5: (30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0),
    7: (17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0),
    9: (17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
        2162160.0, 110880.0, 3960.0, 90.0, 1.0),
    13: (64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
         1187353796428800.0, 129060195264000.0, 10559470521600.0,
         670442572800.0, 33522128640.0, 1323241920.0, 40840800.0, 960960.0,
         16380.0, 182.0, 1.0),
}
# largest 1-norm for which the degree-m approximant is accurate to unit roundoff
_THETA = {
    3: 1.495585217958292e-2,
    5: 2.539398330063230e-1,
    7: 9.504178996162932e-1,
    9: 2.097847961257068e0,
    13: 5.371920351148152e0,
}


def _square(M: ArrayLike, name: str = "M") -> NDArray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputError(f"{name} must be a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InputError(f"{name} has non-finite entries")
    return M


def _pade_uv(A: NDArray, m: int) -> tuple[NDArray, NDArray]:
    b = _PADE[m]
    ident = np.eye(A.shape[0], dtype=A.dtype)
    A2 = A @ A
    if m == 13:
        A4 = A2 @ A2
        A6 = A4 @ A2
        U = A @ (A6 @ (b[13] * A6 + b[11] * A4 + b[9] * A2)
                 + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * ident)
        V = (A6 @ (b[12] * A6 + b[10] * A4 + b[8] * A2)
             + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * ident)
        return U, V
    U = b[1] * ident
    V = b[0] * ident
    P = ident
    for j in range(1, m // 2 + 1):
        P = P @ A2
        U = U + b[2 * j + 1] * P
        V = V + b[2 * j] * P
    return A @ U, V


def dense_expm(M: ArrayLike) -> NDArray:
    """Matrix exponential by scaling and squaring with a diagonal Padé approximant."""
    A = _square(M)
    A = A.astype(np.result_type(A.dtype, np.float64))
    n = A.shape[0]
    if n == 0:
        return A.copy()
    norm = float(np.linalg.norm(A, 1))
    for m in (3, 5, 7, 9):
        if norm <= _THETA[m]:
            U, V = _pade_uv(A, m)
            return np.linalg.solve(V - U, V + U)
    s = max(0, math.ceil(math.log2(norm / _THETA[13])))
    A = A / 2.0**s
    U, V = _pade_uv(A, 13)
    R = np.linalg.solve(V - U, V + U)
    for _ in range(s):
        R = R @ R
    return R


def orthonormal_completion(first: ArrayLike, drop_rtol: float = 1e-10) -> NDArray[np.complex128]:
    """Unitary matrix whose first column is ``first / |first|``.

    The candidates ``first, e_0, ..., e_{d-1}`` are orthonormalised by
    modified Gram-Schmidt; a candidate whose residual falls to
    ``drop_rtol`` of its original norm is skipped. A second MGS sweep over
    the accepted columns restores orthogonality lost to rounding.
    """
    v = as_state(first, "first")
    d = v.shape[0]
    nv = np.linalg.norm(v)
    if nv == 0.0:
        raise InputError("zero input vector")
    cand = np.empty((d, d + 1), dtype=np.complex128)
    cand[:, 0] = v / nv
    cand[:, 1:] = np.eye(d)
    Q = _mgs(cand, d, drop_rtol)
    return _mgs(Q, d, drop_rtol)


def _mgs(V: NDArray, limit: int, drop_rtol: float) -> NDArray[np.complex128]:
    # right-looking MGS: each accepted column is removed from all later ones
    V = V.copy()
    norms0 = np.linalg.norm(V, axis=0)
    keep = []
    for j in range(V.shape[1]):
        r = np.linalg.norm(V[:, j])
        if r <= drop_rtol * norms0[j]:
            continue
        q = V[:, j] / r
        V[:, j] = q
        keep.append(j)
        if len(keep) == limit:
            break
        rest = V[:, j + 1:]
        rest -= np.outer(q, q.conj() @ rest)
    if len(keep) != limit:
        raise ArithmeticError(f"Gram-Schmidt produced {len(keep)} of {limit} basis vectors")
    return V[:, keep]


def gram_schmidt_unitary(a: ArrayLike, b: ArrayLike) -> NDArray[np.complex128]:
    """``sum_i |phi_i><psi_i|`` for orthonormal bases seeded with a and b.

    ``psi_0 = a/|a|`` and ``phi_0 = b/|b|``, so the result sends the
    normalised initial state to the normalised final one.
    """
    a = as_state(a, "a")
    b = as_state(b, "b")
    _check_dims(a, b)
    psi = orthonormal_completion(a)
    phi = orthonormal_completion(b)
    return phi @ psi.conj().T


def matrix_apply(M: ArrayLike, c: ArrayLike) -> NDArray:
    M = _square(M)
    c = as_state(c, "c")
    if M.shape[1] != c.shape[0]:
        raise InputError(f"dimension mismatch: {M.shape[1]} != {c.shape[0]}")
    return M @ c


def matrix_multiply(A: ArrayLike, B: ArrayLike) -> NDArray:
    A = _square(A, "A")
    B = _square(B, "B")
    if A.shape != B.shape:
        raise InputError(f"dimension mismatch: {A.shape} != {B.shape}")
    return A @ B


def frobenius_distance(A: ArrayLike, B: ArrayLike) -> float:
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise InputError(f"shape mismatch: {A.shape} != {B.shape}")
    return float(np.linalg.norm(A - B))

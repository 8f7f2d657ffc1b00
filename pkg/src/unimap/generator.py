"""The anti-Hermitian generator ``T[a,b](c) = <a,c> b - <b,c> a``."""

from __future__ import annotations

import enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .hilbert import (
    InputError,
    InvariantSet,
    _check_dims,
    _invariants_from_products,
    as_state,
    gram_determinant,
)

__all__ = [
    "CLASSIFY_EPS",
    "CaseTag",
    "Generator",
    "apply_generator",
    "classify",
    "commutator_residual",
    "generator_matrix",
    "make_generator",
]

# relative threshold on squared quantities (1e-10 per amplitude)
CLASSIFY_EPS = 1e-20
# an eigenvalue this small relative to Gamma hands the pair over to the collinear formulas
EIGEN_HANDOFF_RTOL = 1e-12


class CaseTag(enum.Enum):
    GENERIC = "generic"
    PHASE_COLLINEAR = "phase_collinear"
    REAL_COLLINEAR = "real_collinear"


def classify(inv: InvariantSet, scale: float, eps: float = CLASSIFY_EPS) -> CaseTag:
    """Assign the case of a pair from its invariants.

    ``scale`` is ``<a,a><b,b>``. A pair whose Gram determinant is nonzero
    but so small that one of the eigenvalues ``-i(Gamma+sigma)``,
    ``i(Gamma-sigma)`` vanishes relative to Gamma is treated as
    phase-collinear.
    """
    if inv.G_sq > eps * scale:
        # Gamma - |sigma| without cancellation
        gap = inv.G_sq / (inv.Gamma + abs(inv.sigma))
        if gap > EIGEN_HANDOFF_RTOL * inv.Gamma:
            return CaseTag.GENERIC
    if inv.sigma * inv.sigma > eps * scale:
        return CaseTag.PHASE_COLLINEAR
    return CaseTag.REAL_COLLINEAR


class Generator:
    """Matrix-free ``T[a,b]`` with the pair's inner products cached.

    Calling the generator applies it to a vector of shape ``(d,)`` or to
    each column of a ``(d, k)`` array.
    """

    __slots__ = ("a", "b", "aa", "bb", "ab", "inv", "case_tag")

    def __init__(self, a: ArrayLike, b: ArrayLike, eps: float = CLASSIFY_EPS):
        a = as_state(a, "a").copy()
        b = as_state(b, "b").copy()
        _check_dims(a, b)
        aa = float(np.vdot(a, a).real)
        bb = float(np.vdot(b, b).real)
        if aa == 0.0 or bb == 0.0:
            raise InputError("zero input vector")
        ab = complex(np.vdot(a, b))
        a.flags.writeable = False
        b.flags.writeable = False
        self.a = a
        self.b = b
        self.aa = aa
        self.bb = bb
        self.ab = ab
        self.inv = _invariants_from_products(aa, bb, ab.conjugate(), gram_determinant(a, b, bb, ab.conjugate()))
        self.case_tag = classify(self.inv, aa * bb, eps)

    @property
    def dimension(self) -> int:
        return self.a.shape[0]

    @property
    def ba(self) -> complex:
        return self.ab.conjugate()

    def __call__(self, c: ArrayLike) -> NDArray[np.complex128]:
        c = np.asarray(c, dtype=np.complex128)
        if c.ndim not in (1, 2) or c.shape[0] != self.dimension:
            raise InputError(f"expected leading dimension {self.dimension}, got shape {c.shape}")
        ac = self.a.conj() @ c
        bc = self.b.conj() @ c
        if c.ndim == 1:
            return ac * self.b - bc * self.a
        return np.outer(self.b, ac) - np.outer(self.a, bc)

    def matrix(self) -> NDArray[np.complex128]:
        """Dense form ``b a^H - a b^H``."""
        return np.outer(self.b, self.a.conj()) - np.outer(self.a, self.b.conj())

    def __repr__(self) -> str:
        return f"Generator(dimension={self.dimension}, case={self.case_tag.value}, inv={self.inv})"


def make_generator(a: ArrayLike, b: ArrayLike, eps: float = CLASSIFY_EPS) -> Generator:
    return Generator(a, b, eps)


def apply_generator(gen: Generator, c: ArrayLike) -> NDArray[np.complex128]:
    c = as_state(c, "c")
    _check_dims(gen.a, c)
    return gen(c)


def generator_matrix(gen: Generator) -> NDArray[np.complex128]:
    return gen.matrix()


def commutator_residual(p: Generator, q: Generator, v: ArrayLike) -> float:
    """Norm of ``([p, q] - T[p(c), d] - T[c, p(d)])(v)`` where ``q = T[c, d]``.

    Everything is evaluated by successive applications; no matrix is formed.
    """
    v = as_state(v, "v")
    _check_dims(p.a, q.a)
    _check_dims(p.a, v)
    c, d = q.a, q.b
    lhs = p(q(v)) - q(p(v))
    pc, pd = p(c), p(d)
    # T[x, y](v) = <x,v> y - <y,v> x, inlined since p(c) or p(d) may vanish
    rhs = (np.vdot(pc, v) * d - np.vdot(d, v) * pc) + (np.vdot(c, v) * pd - np.vdot(pd, v) * c)
    return float(np.linalg.norm(lhs - rhs))

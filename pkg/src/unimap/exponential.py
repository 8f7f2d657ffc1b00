"""Closed-form exponentials of a single generator and state mapping.

For a generic pair the exponent is normalised by Gamma, ``exp(theta T / Gamma)``;
for a phase-collinear pair by sigma, ``exp(theta T / sigma)``. A
real-collinear pair has ``T = 0`` and its exponential is the identity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .generator import CLASSIFY_EPS, CaseTag, Generator
from .hilbert import InputError, as_state

__all__ = [
    "Branch",
    "MappingResult",
    "UnitaryApplicator",
    "exp_apply",
    "exp_matrix",
    "map_state",
    "predicted_scale",
    "rodrigues_apply",
    "solve_angle",
]


class Branch(enum.Enum):
    SHORT = "short"
    LONG = "long"


def exponent_normalizer(gen: Generator) -> float | None:
    if gen.case_tag is CaseTag.GENERIC:
        return gen.inv.Gamma
    if gen.case_tag is CaseTag.PHASE_COLLINEAR:
        return gen.inv.sigma
    return None


class UnitaryApplicator:
    """``exp(theta T / normalizer)`` with its two scalar coefficients precomputed.

    Each call costs two generator applications for a generic pair, one for
    a phase-collinear pair and none for a real-collinear pair.
    """

    __slots__ = ("gen", "theta", "c1", "c2")

    def __init__(self, gen: Generator, theta: float):
        self.gen = gen
        self.theta = theta = float(theta)
        inv = gen.inv
        if gen.case_tag is CaseTag.GENERIC:
            gam, sig = inv.Gamma, inv.sigma
            s, c = math.sin(theta), math.cos(theta)
            phase = complex(math.cos(theta * sig / gam), -math.sin(theta * sig / gam))
            self.c1 = (2j * sig + phase * ((gam + sig * sig / gam) * s - 2j * sig * c)) / inv.G_sq
            self.c2 = (1.0 - phase * (c + 1j * (sig / gam) * s)) / inv.G_sq
        elif gen.case_tag is CaseTag.PHASE_COLLINEAR:
            self.c1 = complex(math.cos(theta), -math.sin(theta)) * math.sin(theta) / inv.sigma
            self.c2 = 0j
        else:
            self.c1 = self.c2 = 0j

    @property
    def dimension(self) -> int:
        return self.gen.dimension

    def __call__(self, c: ArrayLike) -> NDArray[np.complex128]:
        c = np.asarray(c, dtype=np.complex128)
        if c.ndim not in (1, 2) or c.shape[0] != self.dimension:
            raise InputError(f"expected leading dimension {self.dimension}, got shape {c.shape}")
        case = self.gen.case_tag
        if case is CaseTag.REAL_COLLINEAR:
            return c.copy()
        tc = self.gen(c)
        if case is CaseTag.PHASE_COLLINEAR:
            return c + self.c1 * tc
        return c + self.c1 * tc + self.c2 * self.gen(tc)

    def matrix(self) -> NDArray[np.complex128]:
        return self(np.eye(self.dimension, dtype=np.complex128))


def exp_apply(gen: Generator, theta: float, c: ArrayLike) -> NDArray[np.complex128]:
    c = as_state(c, "c")
    return UnitaryApplicator(gen, theta)(c)


def exp_matrix(gen: Generator, theta: float) -> NDArray[np.complex128]:
    """Dense unitary obtained by applying the closed form to the standard basis."""
    return UnitaryApplicator(gen, theta).matrix()


def rodrigues_apply(gen: Generator, theta: float, c: ArrayLike) -> NDArray[np.complex128]:
    """``c + sin(theta) T c / Gamma + (1 - cos(theta)) T^2 c / Gamma^2``.

    This equals ``exp(theta T / Gamma) c`` only when sigma is zero, i.e. when
    ``<a,b>`` is real. It is evaluated as written for any pair so it can be
    compared against the general formula.
    """
    c = as_state(c, "c")
    gam = gen.inv.Gamma
    if gam == 0.0:
        return c.copy()
    tc = gen(c)
    return c + (math.sin(theta) / gam) * tc + ((1.0 - math.cos(theta)) / gam**2) * gen(tc)


def _phase_collinear_scale(gen: Generator, theta: float) -> complex:
    return gen.ba / gen.bb * complex(math.cos(2 * theta), -math.sin(2 * theta))


def solve_angle(gen: Generator, branch: Branch = Branch.SHORT) -> float:
    """Angle for which the exponential sends ``a`` onto the ray of ``b``.

    Generic pairs solve ``cot(theta) = g / Gamma`` with the short solution in
    ``(0, pi)``. Phase-collinear pairs solve ``tan(2 theta) = sigma / g``
    (``theta = sgn(sigma) pi / 4`` when g vanishes), picking the root for
    which no extra phase appears. The long branch adds pi.
    """
    inv = gen.inv
    if gen.case_tag is CaseTag.REAL_COLLINEAR:
        return 0.0
    if gen.case_tag is CaseTag.GENERIC:
        theta = math.atan2(inv.Gamma, inv.g)
    elif inv.g == 0.0:
        theta = math.copysign(math.pi / 4, inv.sigma)
    else:
        base = 0.5 * math.atan(inv.sigma / inv.g)
        # roots repeat every pi/2; keep the one whose scale is real positive
        theta = max((base, base + math.pi / 2), key=lambda t: _phase_collinear_scale(gen, t).real)
    if branch is Branch.LONG:
        theta += math.pi
    return theta


def predicted_scale(gen: Generator, theta_prime: float) -> complex:
    """The complex ``s`` with ``U(a) = s b`` at a mapping angle.

    For generic pairs this is ``sqrt(<a,a>/<b,b>) exp(-i theta sigma / Gamma)``
    times the sign of ``sin(theta)``, which is valid only at solutions of the
    angle equation. For phase-collinear pairs ``(<b,a>/<b,b>) exp(-2 i theta)``
    holds for every angle.
    """
    if gen.case_tag is CaseTag.REAL_COLLINEAR:
        return complex(gen.ba.real / gen.bb, 0.0)
    if gen.case_tag is CaseTag.PHASE_COLLINEAR:
        return _phase_collinear_scale(gen, theta_prime)
    inv = gen.inv
    mag = math.sqrt(gen.aa / gen.bb) * math.copysign(1.0, math.sin(theta_prime))
    phi = theta_prime * inv.sigma / inv.Gamma
    return complex(mag * math.cos(phi), -mag * math.sin(phi))


@dataclass(frozen=True)
class MappingResult:
    case_tag: CaseTag
    theta_prime: float
    branch: Branch
    scale: complex
    exponent_normalizer: float | None
    applicator: UnitaryApplicator = field(repr=False, compare=False)

    def __call__(self, c: ArrayLike) -> NDArray[np.complex128]:
        return self.applicator(c)


def map_state(
    a: ArrayLike,
    b: ArrayLike,
    branch: Branch = Branch.SHORT,
    eps: float = CLASSIFY_EPS,
) -> MappingResult:
    """Build the single exponential ``U`` with ``U(a) = s b``.

    The returned result is callable and applies ``U`` to any further vector.
    """
    gen = Generator(a, b, eps)
    theta = solve_angle(gen, branch)
    return MappingResult(
        case_tag=gen.case_tag,
        theta_prime=theta,
        branch=branch,
        scale=predicted_scale(gen, theta),
        exponent_normalizer=exponent_normalizer(gen),
        applicator=UnitaryApplicator(gen, theta),
    )

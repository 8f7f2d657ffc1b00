"""Property suite run by ``unimap verify``.

Each property is measured as a relative residual on many instances and the
largest one is compared with its tolerance.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .exponential import Branch, UnitaryApplicator, exponent_normalizer, map_state, rodrigues_apply
from .generator import CaseTag, Generator, commutator_residual
from .oracle import dense_expm, gram_schmidt_unitary
from .spectral import apply_projector, min_poly_residual, spectral_data

__all__ = [
    "PROPERTIES",
    "PropertyResult",
    "orthogonal_complement_vector",
    "random_pair",
    "random_state",
    "ray_defect",
    "run_suite",
]

# name -> (case it applies to, default tolerance)
PROPERTIES: dict[str, tuple[str, float]] = {
    "antisymmetry": ("all", 1e-12),
    "middle_conjugate_linearity": ("all", 1e-12),
    "anti_hermiticity": ("all", 1e-12),
    "commutator_closure": ("all", 1e-12),
    "range_confinement": ("all", 1e-12),
    "mapping_residual": ("all", 1e-10),
    "two_branch": ("all", 1e-10),
    "unitarity_norm": ("all", 1e-11),
    "unitarity_inner_product": ("all", 1e-10),
    "group_law": ("all", 1e-10),
    "inverse": ("all", 1e-10),
    "fixed_space": ("all", 1e-12),
    "oracle_equivalence": ("all", 1e-9),
    "baseline_agreement": ("all", 1e-10),
    "annihilation": ("generic", 1e-10),
    "projector_idempotency": ("generic", 1e-10),
    "projector_mutual_annihilation": ("generic", 1e-10),
    "resolution_of_identity": ("generic", 1e-12),
    "eigenspace": ("generic", 1e-10),
    "spectral_reconstruction": ("generic", 1e-10),
    "eigenvalue_oracle": ("generic", 1e-9),
    "rodrigues_reduction": ("generic", 1e-12),
    "annihilation_ii": ("phase_collinear", 1e-10),
    "projector_idempotency_ii": ("phase_collinear", 1e-10),
    "projector_mutual_annihilation_ii": ("phase_collinear", 1e-10),
    "resolution_of_identity_ii": ("phase_collinear", 1e-12),
    "eigenspace_ii": ("phase_collinear", 1e-10),
    "spectral_reconstruction_ii": ("phase_collinear", 1e-10),
    "phase_factor_law": ("phase_collinear", 1e-11),
}

ORACLE_MAX_DIM = 64
BASELINE_MAX_DIM = 32
EIGVALS_MAX_DIM = 8


@dataclass
class PropertyResult:
    name: str
    case: str
    tolerance: float
    count: int = 0
    max_residual: float = 0.0

    @property
    def skipped(self) -> bool:
        return self.count == 0

    @property
    def passed(self) -> bool:
        # NaN compares false, so it fails
        return self.skipped or self.max_residual <= self.tolerance

    def record(self, value: float) -> None:
        self.count += 1
        value = float(value)
        if not value <= self.max_residual:
            self.max_residual = value

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "case": self.case,
            "count": self.count,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "status": "skipped" if self.skipped else ("pass" if self.passed else "fail"),
        }


def random_state(rng: np.random.Generator, d: int) -> NDArray[np.complex128]:
    return rng.standard_normal(d) + 1j * rng.standard_normal(d)


def random_pair(rng: np.random.Generator, d: int, kind: str = "generic"):
    """Random ``(a, b)`` of a given kind.

    ``generic``: independent complex Gaussians. ``real_overlap``: generic
    with ``<a,b>`` rotated onto the real axis. ``phase_collinear``: ``b = alpha a``
    with non-real alpha. ``real_collinear``: ``b = k a`` with real nonzero k.
    """
    a = random_state(rng, d)
    if kind == "generic":
        return a, random_state(rng, d)
    if kind == "real_overlap":
        b = random_state(rng, d)
        ba = np.vdot(b, a)
        return a, b * (ba / abs(ba))
    if kind == "phase_collinear":
        alpha = complex(rng.standard_normal(), 0.0)
        alpha += 1j * (0.2 + abs(rng.standard_normal())) * rng.choice([-1.0, 1.0])
        return a, alpha * a
    if kind == "real_collinear":
        k = rng.standard_normal()
        k = k if abs(k) > 0.1 else 1.0
        return a, k * a
    raise ValueError(f"unknown pair kind {kind!r}")


def ray_defect(x: NDArray, y: NDArray) -> float:
    """Distance of ``x`` from the complex line through ``y``, relative to ``|x|``."""
    r = x - (np.vdot(y, x) / np.vdot(y, y)) * y
    return float(np.linalg.norm(r) / np.linalg.norm(x))


def orthogonal_complement_vector(rng: np.random.Generator, a: NDArray, b: NDArray) -> NDArray | None:
    """Random vector orthogonal to span{a, b}, or None when the span is everything."""
    q, r = np.linalg.qr(np.stack([a, b], axis=1))
    rank = int(np.sum(np.abs(r.diagonal()) > 1e-10 * np.abs(r).max()))
    basis = q[:, :rank]
    if rank >= a.shape[0]:
        return None
    c = random_state(rng, a.shape[0])
    for _ in range(2):
        c = c - basis @ (basis.conj().T @ c)
    return c


def _nrm(x) -> float:
    return float(np.linalg.norm(x))


def check_pair(a: NDArray, b: NDArray, rng: np.random.Generator, results: dict[str, PropertyResult], probes: int = 4) -> None:
    """Measure every applicable property on one pair, ``probes`` random vectors each."""
    d = a.shape[0]
    gen = Generator(a, b)
    case = gen.case_tag
    na, nb = _nrm(a), _nrm(b)
    scale_t = na * nb
    rev = Generator(b, a)
    suffix = "_ii" if case is CaseTag.PHASE_COLLINEAR else ""

    for _ in range(probes):
        c = random_state(rng, d)
        nc = _nrm(c)
        results["antisymmetry"].record(_nrm(gen(c) + rev(c)) / (scale_t * nc))
        alpha = complex(*rng.standard_normal(2))
        lhs = Generator(alpha * a, b)(c) if alpha != 0 else 0 * c
        rhs = Generator(a, np.conj(alpha) * b)(c) if alpha != 0 else 0 * c
        results["middle_conjugate_linearity"].record(_nrm(lhs - rhs) / (abs(alpha) * scale_t * nc))
        x, y = random_state(rng, d), random_state(rng, d)
        results["anti_hermiticity"].record(
            abs(np.vdot(gen(x), y) + np.vdot(x, gen(y))) / (scale_t * _nrm(x) * _nrm(y))
        )
        cc, dd, v = random_state(rng, d), random_state(rng, d), random_state(rng, d)
        q = Generator(cc, dd)
        results["commutator_closure"].record(
            commutator_residual(gen, q, v) / (scale_t * _nrm(cc) * _nrm(dd) * _nrm(v))
        )

    perp = orthogonal_complement_vector(rng, a, b)
    if perp is not None:
        results["range_confinement"].record(_nrm(gen(perp)) / (scale_t * _nrm(perp)))

    short = map_state(a, b, Branch.SHORT)
    long_ = map_state(a, b, Branch.LONG)
    results["mapping_residual"].record(_nrm(short(a) - short.scale * b) / na)
    results["mapping_residual"].record(_nrm(long_(a) - long_.scale * b) / na)
    if case is not CaseTag.REAL_COLLINEAR:
        results["two_branch"].record(max(ray_defect(short(a), b), ray_defect(long_(a), b)))

    norm = exponent_normalizer(gen)
    for _ in range(probes):
        theta, theta2 = rng.uniform(-2 * np.pi, 2 * np.pi, size=2)
        u = UnitaryApplicator(gen, theta)
        x, y = random_state(rng, d), random_state(rng, d)
        ux, uy = u(x), u(y)
        nx, ny = _nrm(x), _nrm(y)
        results["unitarity_norm"].record(abs(_nrm(ux) - nx) / nx)
        results["unitarity_inner_product"].record(abs(np.vdot(ux, uy) - np.vdot(x, y)) / (nx * ny))
        both = UnitaryApplicator(gen, theta + theta2)(x)
        results["group_law"].record(_nrm(u(UnitaryApplicator(gen, theta2)(x)) - both) / nx)
        results["inverse"].record(_nrm(UnitaryApplicator(gen, -theta)(ux) - x) / nx)
        if perp is not None:
            results["fixed_space"].record(_nrm(u(perp) - perp) / _nrm(perp))
        if case is CaseTag.PHASE_COLLINEAR:
            expect = (gen.ba / gen.bb) * np.exp(-2j * theta) * b
            results["phase_factor_law"].record(_nrm(u(a) - expect) / na)
        if case is CaseTag.GENERIC and abs(gen.inv.sigma) <= 1e-14 * gen.inv.Gamma:
            results["rodrigues_reduction"].record(_nrm(u(x) - rodrigues_apply(gen, theta, x)) / nx)

    if d <= ORACLE_MAX_DIM and norm is not None:
        theta = float(rng.uniform(-2 * np.pi, 2 * np.pi))
        dense = dense_expm(theta * gen.matrix() / norm)
        results["oracle_equivalence"].record(_nrm(UnitaryApplicator(gen, theta).matrix() - dense))

    if d <= BASELINE_MAX_DIM:
        ugs = gram_schmidt_unitary(a, b)
        results["baseline_agreement"].record(ray_defect(short(a), ugs @ a))

    if case is CaseTag.REAL_COLLINEAR:
        return

    lam = spectral_data(gen).eigenvalues
    gamma = gen.inv.Gamma
    for _ in range(probes):
        c = random_state(rng, d)
        nc = _nrm(c)
        results["annihilation" + suffix].record(min_poly_residual(gen, c))
        parts = [apply_projector(gen, k, c) for k in range(len(lam))]
        results["resolution_of_identity" + suffix].record(_nrm(sum(parts) - c) / nc)
        tc = gen(c)
        results["spectral_reconstruction" + suffix].record(
            _nrm(sum(l * p for l, p in zip(lam, parts)) - tc) / (nc * gamma)
        )
        for k, p in enumerate(parts):
            results["projector_idempotency" + suffix].record(_nrm(apply_projector(gen, k, p) - p) / nc)
            results["eigenspace" + suffix].record(_nrm(gen(p) - lam[k] * p) / (nc * gamma))
            for j in range(len(lam)):
                if j != k:
                    results["projector_mutual_annihilation" + suffix].record(
                        _nrm(apply_projector(gen, j, p)) / nc
                    )

    if case is CaseTag.GENERIC and d <= EIGVALS_MAX_DIM:
        ev = np.linalg.eigvals(gen.matrix())
        # each predicted eigenvalue appears, and zero fills the other d - 2 slots
        expected = np.array(list(lam[1:]) + [0.0] * (d - 2))
        rest = list(ev)
        worst = 0.0
        for mu in expected:
            i = int(np.argmin([abs(z - mu) for z in rest]))
            worst = max(worst, abs(rest.pop(i) - mu))
        results["eigenvalue_oracle"].record(worst / max(1.0, gamma))


def new_results(tolerance: float | None = None) -> dict[str, PropertyResult]:
    return {
        name: PropertyResult(name, case, tol if tolerance is None else tolerance)
        for name, (case, tol) in PROPERTIES.items()
    }


def _kind_for(i: int) -> str:
    return ("generic", "generic", "phase_collinear", "real_overlap", "generic", "real_collinear")[i % 6]


def run_suite(
    pairs: Iterable[tuple[NDArray, NDArray]] | None = None,
    *,
    dims: Sequence[int] = (),
    trials: int = 0,
    seed: int = 0,
    tolerance: float | None = None,
    probes: int = 4,
) -> list[PropertyResult]:
    """Run the suite on explicit pairs and/or ``trials`` seeded random pairs per dimension.

    Random pairs cycle through generic, phase-collinear, real-overlap and
    real-collinear kinds so every case sub-suite is exercised.
    """
    rng = np.random.default_rng(seed)
    results = new_results(tolerance)
    for a, b in pairs or ():
        check_pair(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128), rng, results, probes)
    for d in dims:
        for i in range(trials):
            a, b = random_pair(rng, d, _kind_for(i))
            check_pair(a, b, rng, results, probes)
    return list(results.values())

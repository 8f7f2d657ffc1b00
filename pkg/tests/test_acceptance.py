"""Acceptance criteria, each run at its stated tolerance.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""

import math
import statistics
import time

import numpy as np
import pytest

from unimap import (
    Branch,
    CaseTag,
    UnitaryApplicator,
    apply_projector,
    commutator_residual,
    dense_expm,
    exp_apply,
    exp_matrix,
    gram_schmidt_unitary,
    make_generator,
    map_state,
    min_poly_residual,
    rodrigues_apply,
    spectral_data,
)

from conftest import ACCEPTANCE_LINES

MAP_DIMS = (2, 3, 4, 8, 16, 64)
ORACLE_DIMS = (2, 3, 4, 8, 16, 32, 64)


def cvec(rng, d):
    return rng.standard_normal(d) + 1j * rng.standard_normal(d)


def generic_pair(rng, d):
    return cvec(rng, d), cvec(rng, d)


def phase_pair(rng, d):
    a = cvec(rng, d)
    alpha = complex(rng.standard_normal(), (0.2 + abs(rng.standard_normal())) * rng.choice([-1, 1]))
    return a, alpha * a


def real_pair(rng, d):
    a = cvec(rng, d)
    k = rng.standard_normal()
    return a, (k if abs(k) > 0.1 else 1.5) * a


def sigma_zero_pair(rng, d):
    a, b = generic_pair(rng, d)
    ba = np.vdot(b, a)
    return a, b * ba / abs(ba)


PAIRS = {"generic": generic_pair, "phase_collinear": phase_pair}


def nrm(x):
    return float(np.linalg.norm(x))


def record(number, title, worst, tol, extra=""):
    ok = bool(worst <= tol)
    ACCEPTANCE_LINES.append(
        f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: max={worst:.3e} tol={tol:.0e}{extra}"
    )
    return ok


def test_01_mapping_correctness():
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    worst = 0.0
    seen = set()
    for d in MAP_DIMS:
        for i in range(1000):
            # 70% generic, 20% phase-collinear, 10% real-collinear
            make = generic_pair if i % 10 < 7 else (phase_pair if i % 10 < 9 else real_pair)
            a, b = make(rng, d)
            res = map_state(a, b)
            seen.add(res.case_tag)
            worst = max(worst, nrm(res(a) - res.scale * b) / nrm(a))
    elapsed = time.perf_counter() - t0
    assert seen == set(CaseTag)
    ok = record(1, "mapping correctness |U(a) - s b| / |a|", worst, 1e-10, f" runtime={elapsed:.1f}s (<30s)")
    assert ok and elapsed < 30


def test_02_oracle_equivalence():
    rng = np.random.default_rng(2)
    worst = 0.0
    for d in ORACLE_DIMS:
        for i in range(100):
            a, b = (generic_pair if i % 4 else phase_pair)(rng, d)
            gen = make_generator(a, b)
            norm = gen.inv.Gamma if gen.case_tag is CaseTag.GENERIC else gen.inv.sigma
            theta = rng.uniform(-2 * math.pi, 2 * math.pi)
            dense = dense_expm(theta * gen.matrix() / norm)
            worst = max(worst, nrm(exp_matrix(gen, theta) - dense))
    assert record(2, "oracle equivalence |exp_matrix - dense_expm|_F", worst, 1e-9)


def test_03_annihilation():
    rng = np.random.default_rng(3)
    worst = 0.0
    for kind, make in PAIRS.items():
        for i in range(1000):
            d = MAP_DIMS[i % len(MAP_DIMS)]
            gen = make_generator(*make(rng, d))
            assert gen.case_tag.value == kind
            worst = max(worst, min_poly_residual(gen, cvec(rng, d)))
    assert record(3, "minimal-polynomial annihilation (both cases)", worst, 1e-10)


def test_04_projector_algebra():
    rng = np.random.default_rng(4)
    worst = dict.fromkeys(
        ["idempotency", "mutual annihilation", "resolution", "eigenspace", "reconstruction"], 0.0
    )
    for make in PAIRS.values():
        for i in range(500):
            d = MAP_DIMS[i % len(MAP_DIMS)]
            gen = make_generator(*make(rng, d))
            lam = spectral_data(gen).eigenvalues
            c = cvec(rng, d)
            nc, gamma = nrm(c), gen.inv.Gamma
            parts = [apply_projector(gen, k, c) for k in range(len(lam))]
            worst["resolution"] = max(worst["resolution"], nrm(sum(parts) - c) / nc)
            recon = sum(l * p for l, p in zip(lam, parts))
            worst["reconstruction"] = max(worst["reconstruction"], nrm(recon - gen(c)) / (nc * gamma))
            for k, p in enumerate(parts):
                worst["idempotency"] = max(worst["idempotency"], nrm(apply_projector(gen, k, p) - p) / nc)
                worst["eigenspace"] = max(worst["eigenspace"], nrm(gen(p) - lam[k] * p) / (nc * gamma))
                for j in range(len(lam)):
                    if j != k:
                        worst["mutual annihilation"] = max(
                            worst["mutual annihilation"], nrm(apply_projector(gen, j, p)) / nc
                        )
    oks = [record(4, f"projector {name}", w, 1e-10) for name, w in worst.items()]
    assert all(oks)


def test_05_rodrigues_reduction():
    rng = np.random.default_rng(5)
    worst = 0.0
    for i in range(200):
        d = MAP_DIMS[i % len(MAP_DIMS)]
        gen = make_generator(*sigma_zero_pair(rng, d))
        assert abs(gen.inv.sigma) <= 1e-14 * gen.inv.Gamma
        theta = rng.uniform(-2 * math.pi, 2 * math.pi)
        c = cvec(rng, d)
        worst = max(worst, nrm(exp_apply(gen, theta, c) - rodrigues_apply(gen, theta, c)) / nrm(c))
    assert record(5, "Rodrigues reduction at sigma = 0", worst, 1e-12)


def test_06_unitarity_and_group_law():
    rng = np.random.default_rng(6)
    w_norm = w_inner = w_group = w_inv = 0.0
    for make in PAIRS.values():
        for i in range(300):
            d = MAP_DIMS[i % len(MAP_DIMS)]
            gen = make_generator(*make(rng, d))
            t1, t2 = rng.uniform(-2 * math.pi, 2 * math.pi, size=2)
            u = UnitaryApplicator(gen, t1)
            x, y = cvec(rng, d), cvec(rng, d)
            ux, uy = u(x), u(y)
            nx, ny = nrm(x), nrm(y)
            w_norm = max(w_norm, abs(nrm(ux) - nx) / nx)
            w_inner = max(w_inner, abs(np.vdot(ux, uy) - np.vdot(x, y)) / (nx * ny))
            w_group = max(w_group, nrm(u(exp_apply(gen, t2, x)) - exp_apply(gen, t1 + t2, x)) / nx)
            w_inv = max(w_inv, nrm(exp_apply(gen, -t1, ux) - x) / nx)
    oks = [
        record(6, "norm preservation", w_norm, 1e-11),
        record(6, "inner-product preservation", w_inner, 1e-10),
        record(6, "group law exp(t1) exp(t2) = exp(t1 + t2)", w_group, 1e-10),
        record(6, "inverse exp(-t) exp(t) = I", w_inv, 1e-10),
    ]
    assert all(oks)


def test_07_algebraic_identities():
    rng = np.random.default_rng(7)
    w = dict.fromkeys(["antisymmetry", "middle conjugate-linearity", "anti-Hermiticity", "commutator closure"], 0.0)
    for i in range(500):
        d = MAP_DIMS[i % len(MAP_DIMS)]
        a, b, c = cvec(rng, d), cvec(rng, d), cvec(rng, d)
        t = make_generator(a, b)
        s = nrm(a) * nrm(b)
        w["antisymmetry"] = max(w["antisymmetry"], nrm(t(c) + make_generator(b, a)(c)) / (s * nrm(c)))
        alpha = complex(*rng.standard_normal(2))
        diff = make_generator(alpha * a, b)(c) - make_generator(a, np.conj(alpha) * b)(c)
        w["middle conjugate-linearity"] = max(w["middle conjugate-linearity"], nrm(diff) / (abs(alpha) * s * nrm(c)))
        x, y = cvec(rng, d), cvec(rng, d)
        herm = abs(np.vdot(t(x), y) + np.vdot(x, t(y))) / (s * nrm(x) * nrm(y))
        w["anti-Hermiticity"] = max(w["anti-Hermiticity"], herm)
        cc, dd, v = cvec(rng, d), cvec(rng, d), cvec(rng, d)
        comm = commutator_residual(t, make_generator(cc, dd), v) / (s * nrm(cc) * nrm(dd) * nrm(v))
        w["commutator closure"] = max(w["commutator closure"], comm)
    oks = [record(7, name, val, 1e-12) for name, val in w.items()]
    assert all(oks)


def test_08_two_branches():
    rng = np.random.default_rng(8)
    worst = 0.0
    for make in PAIRS.values():
        for i in range(500):
            d = MAP_DIMS[i % len(MAP_DIMS)]
            a, b = make(rng, d)
            for branch in Branch:
                ua = map_state(a, b, branch)(a)
                # distance of U(a) from the complex line through b, relative to |U(a)|
                perp = ua - (np.vdot(b, ua) / np.vdot(b, b)) * b
                worst = max(worst, nrm(perp) / nrm(ua))
                cs = abs(abs(np.vdot(b, ua)) - nrm(b) * nrm(ua)) / (nrm(b) * nrm(ua))
                worst = max(worst, cs)
    assert record(8, "short and long branch both reach the ray of b", worst, 1e-10)


def test_09_baseline_agreement():
    rng = np.random.default_rng(9)
    worst = 0.0
    dims = (2, 3, 4, 8, 16, 32)
    for i in range(200):
        d = dims[i % len(dims)]
        a, b = generic_pair(rng, d) if i % 5 else phase_pair(rng, d)
        x = gram_schmidt_unitary(a, b) @ a
        y = map_state(a, b)(a)
        worst = max(worst, abs(abs(np.vdot(x, y)) - nrm(x) * nrm(y)) / (nrm(x) * nrm(y)))
        worst = max(worst, nrm(y - (np.vdot(x, y) / np.vdot(x, x)) * x) / nrm(y))
    assert record(9, "Gram-Schmidt baseline and closed form share the ray", worst, 1e-10)


def test_10_performance_contract():
    rng = np.random.default_rng(10)
    d, trials = 1024, 3
    t_start = time.perf_counter()
    closed, dense = [], []
    for _ in range(trials):
        a, b = generic_pair(rng, d)
        t0 = time.perf_counter_ns()
        res = map_state(a, b)
        res(a)
        closed.append(time.perf_counter_ns() - t0)
        t0 = time.perf_counter_ns()
        gen = make_generator(a, b)
        dense_expm(res.theta_prime * gen.matrix() / gen.inv.Gamma)
        dense.append(time.perf_counter_ns() - t0)
    ratio = statistics.median(dense) / statistics.median(closed)
    elapsed = time.perf_counter() - t_start
    ACCEPTANCE_LINES.append(
        f"[{'PASS' if ratio >= 50 and elapsed < 120 else 'FAIL'}] 10. closed form vs dense_expm at d=1024: "
        f"speedup={ratio:.0f}x (>=50x) runtime={elapsed:.1f}s (<120s)"
    )
    assert ratio >= 50 and elapsed < 120

import numpy as np
import pytest

from unimap.bench import run_bench
from unimap.generator import CaseTag, make_generator
from unimap.verify import PROPERTIES, orthogonal_complement_vector, random_pair, ray_defect, run_suite


@pytest.mark.parametrize(
    "kind, case",
    [
        ("generic", CaseTag.GENERIC),
        ("real_overlap", CaseTag.GENERIC),
        ("phase_collinear", CaseTag.PHASE_COLLINEAR),
        ("real_collinear", CaseTag.REAL_COLLINEAR),
    ],
)
def test_random_pair_kinds(rng, kind, case):
    for d in (1, 2, 9):
        if d == 1 and case is CaseTag.GENERIC:
            continue
        assert make_generator(*random_pair(rng, d, kind)).case_tag is case


def test_ray_defect():
    assert ray_defect(np.array([2j, 0]), np.array([1, 0])) == 0
    assert ray_defect(np.array([1, 1]), np.array([1, 0])) == pytest.approx(1 / np.sqrt(2))


def test_orthogonal_complement_vector(rng):
    a, b = random_pair(rng, 5)
    c = orthogonal_complement_vector(rng, a, b)
    assert abs(np.vdot(a, c)) <= 1e-13 * np.linalg.norm(a) * np.linalg.norm(c)
    assert abs(np.vdot(b, c)) <= 1e-13 * np.linalg.norm(b) * np.linalg.norm(c)
    assert orthogonal_complement_vector(rng, *random_pair(rng, 2)) is None
    assert orthogonal_complement_vector(rng, *random_pair(rng, 2, "phase_collinear")) is not None


def test_suite_exercises_every_property():
    results = run_suite(dims=[2, 5], trials=12, seed=3)
    assert {r.name for r in results} == set(PROPERTIES)
    assert all(r.count > 0 and r.passed for r in results)


def test_suite_detects_failure():
    results = run_suite([(np.array([1.0, 0.2]), np.array([0.1, 1j]))], tolerance=0.0)
    assert not all(r.passed for r in results)


def test_run_bench_records(rng):
    recs = run_bench([8, 2], trials=2, seed=1)
    assert [r.dimension for r in recs] == [2, 8]
    for r in recs:
        assert min(r.closed_form_construct_ns, r.closed_form_apply_ns, r.dense_expm_ns, r.gram_schmidt_ns) > 0
        assert r.speedup_apply > 0
    with pytest.raises(ValueError):
        run_bench([], trials=1)

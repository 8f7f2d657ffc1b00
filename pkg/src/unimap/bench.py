"""Timing of the closed-form mapping against the dense O(d^3) routes."""

from __future__ import annotations

import statistics
import time
from collections.abc import Sequence
from dataclasses import asdict, dataclass

import numpy as np

from .exponential import map_state
from .generator import Generator
from .oracle import dense_expm, gram_schmidt_unitary
from .verify import random_pair

__all__ = ["BENCH_FIELDS", "BenchRecord", "run_bench", "time_dimension"]

BENCH_FIELDS = (
    "dimension",
    "closed_form_construct_ns",
    "closed_form_apply_ns",
    "dense_expm_ns",
    "gram_schmidt_ns",
    "speedup_apply",
)


@dataclass(frozen=True)
class BenchRecord:
    dimension: int
    closed_form_construct_ns: int
    closed_form_apply_ns: int
    dense_expm_ns: int
    gram_schmidt_ns: int | None
    speedup_apply: float

    def to_dict(self) -> dict:
        return asdict(self)


def _elapsed(t0: int) -> int:
    return max(1, time.perf_counter_ns() - t0)


def time_dimension(d: int, trials: int, rng: np.random.Generator, gram_schmidt: bool = True) -> BenchRecord:
    """Median timings over ``trials`` fresh random pairs of dimension ``d``.

    ``speedup_apply`` is the dense exponential time divided by the
    closed-form construct-plus-apply time.
    """
    construct, apply, dense, gs = [], [], [], []
    for _ in range(trials):
        a, b = random_pair(rng, d)
        t0 = time.perf_counter_ns()
        res = map_state(a, b)
        construct.append(_elapsed(t0))
        t0 = time.perf_counter_ns()
        res(a)
        apply.append(_elapsed(t0))

        t0 = time.perf_counter_ns()
        gen = Generator(a, b)
        dense_expm(res.theta_prime * gen.matrix() / gen.inv.Gamma)
        dense.append(_elapsed(t0))

        if gram_schmidt:
            t0 = time.perf_counter_ns()
            gram_schmidt_unitary(a, b)
            gs.append(_elapsed(t0))
    c_ns = int(statistics.median(construct))
    a_ns = int(statistics.median(apply))
    e_ns = int(statistics.median(dense))
    return BenchRecord(
        dimension=d,
        closed_form_construct_ns=c_ns,
        closed_form_apply_ns=a_ns,
        dense_expm_ns=e_ns,
        gram_schmidt_ns=int(statistics.median(gs)) if gs else None,
        speedup_apply=e_ns / (c_ns + a_ns),
    )


def run_bench(dims: Sequence[int], trials: int = 5, seed: int = 0, gram_schmidt: bool = True) -> list[BenchRecord]:
    if not dims:
        raise ValueError("no dimensions given")
    if any(d < 2 for d in dims):
        raise ValueError("benchmark dimensions must be >= 2")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    return [time_dimension(d, trials, rng, gram_schmidt) for d in sorted(dims)]

# The closed form against the basis-building baselines
#
# The classical way to map a onto b completes each to an orthonormal basis by
# Gram-Schmidt and pairs the basis vectors up. Both that unitary and the dense
# matrix exponential cost O(d^3); the closed form costs O(d).

import time

import numpy as np

from unimap import dense_expm, gram_schmidt_unitary, make_generator, map_state
from unimap.bench import run_bench

rng = np.random.default_rng(3)
d = 32
a = rng.standard_normal(d) + 1j * rng.standard_normal(d)
b = rng.standard_normal(d) + 1j * rng.standard_normal(d)

U_gs = gram_schmidt_unitary(a, b)
res = map_state(a, b)
x, y = U_gs @ a, res(a)
print("both land on the ray of b: |<x,y>| / (|x||y|) =", abs(np.vdot(x, y)) / (np.linalg.norm(x) * np.linalg.norm(y)))

# The two unitaries agree on a but not elsewhere: each is one of many maps a -> b.
c = rng.standard_normal(d) + 1j * rng.standard_normal(d)
print("they differ on other vectors:", np.linalg.norm(U_gs @ c - res(c)))

# Dense check of the closed form
T = make_generator(a, b)
U_dense = dense_expm(res.theta_prime * T.matrix() / T.inv.Gamma)
print("|U_closed - U_dense|_F =", np.linalg.norm(res.applicator.matrix() - U_dense))

print()
print(f"{'d':>6} {'closed (us)':>12} {'expm (us)':>12} {'gram-schmidt (us)':>18} {'speedup':>9}")
for rec in run_bench([8, 32, 128, 256], trials=3, seed=0):
    closed = (rec.closed_form_construct_ns + rec.closed_form_apply_ns) / 1e3
    print(f"{rec.dimension:>6} {closed:>12.1f} {rec.dense_expm_ns / 1e3:>12.1f} "
          f"{rec.gram_schmidt_ns / 1e3:>18.1f} {rec.speedup_apply:>9.1f}")

t0 = time.perf_counter()
big = 100_000
a = rng.standard_normal(big) + 1j * rng.standard_normal(big)
b = rng.standard_normal(big) + 1j * rng.standard_normal(big)
res = map_state(a, b)
err = np.linalg.norm(res(a) - res.scale * b) / np.linalg.norm(a)
print(f"\nd={big}: mapped in {time.perf_counter() - t0:.3f}s, relative residual {err:.2e}")

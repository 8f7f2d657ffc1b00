# Rotations versus phase-twisted rotations
#
# When <a,b> is real (sigma = 0) the closed form is Rodrigues' formula and the
# map is a true rotation in the plane of a and b. Otherwise the phase of
# <a,b> twists the action. Collinear pairs only pick up a phase.

import math

import numpy as np

from unimap import exp_apply, make_generator, map_state, rodrigues_apply

a = np.array([1.0, 0.0, 0.0])
b = np.array([0.0, 1.0, 0.0])
T = make_generator(a, b)
for theta in (0.0, math.pi / 6, math.pi / 3, math.pi / 2):
    print(f"theta={theta:.4f}  U(a) = {np.round(exp_apply(T, theta, a).real, 5)}")

rng = np.random.default_rng(2)
a = rng.standard_normal(4) + 1j * rng.standard_normal(4)
b = rng.standard_normal(4) + 1j * rng.standard_normal(4)
b_real = b * np.vdot(b, a) / abs(np.vdot(b, a))  # rotate so <a,b> is real
c = rng.standard_normal(4) + 1j * rng.standard_normal(4)
for label, bb in (("real overlap", b_real), ("complex overlap", b)):
    T = make_generator(a, bb)
    gap = np.linalg.norm(exp_apply(T, 1.0, c) - rodrigues_apply(T, 1.0, c))
    print(f"{label:16s} sigma={T.inv.sigma:+.3e}  |general - Rodrigues| = {gap:.3e}")

# b = alpha a with complex alpha: the exponential only multiplies a by a phase,
# and the chosen angle cancels the phase of alpha.
alpha = 2.0 - 1.5j
res = map_state(a, alpha * a)
print(res.case_tag.value, "theta' =", res.theta_prime, "scale =", res.scale, "1/|alpha| =", 1 / abs(alpha))
print("|U(a) - s b| =", np.linalg.norm(res(a) - res.scale * alpha * a))

# Mapping one pure state onto another with a single exponential
#
# Given two states a and b of the same dimension, map_state returns the angle
# theta' and the complex factor s such that exp(theta' T[a,b] / Gamma) a = s b.
# No basis is built: the unitary is applied through two inner products and a
# couple of vector updates.

import numpy as np

from unimap import Branch, map_state

rng = np.random.default_rng(0)
d = 16
a = rng.standard_normal(d) + 1j * rng.standard_normal(d)
b = rng.standard_normal(d) + 1j * rng.standard_normal(d)

res = map_state(a, b)
print("case:         ", res.case_tag.value)
print("theta'        ", res.theta_prime)
print("scale s       ", res.scale)
print("|s|           ", abs(res.scale), "=", np.linalg.norm(a) / np.linalg.norm(b))

ua = res(a)
print("|U(a) - s b|  ", np.linalg.norm(ua - res.scale * b))

# The same unitary can be applied to any other vector. It is norm preserving.
c = rng.standard_normal(d) + 1j * rng.standard_normal(d)
print("|U(c)| - |c|  ", np.linalg.norm(res(c)) - np.linalg.norm(c))

# Going the long way round (theta' + pi) also lands on the ray of b, with the
# opposite sign on the scale.
long_way = map_state(a, b, Branch.LONG)
print("long theta'   ", long_way.theta_prime)
print("long scale    ", long_way.scale)
print("|U(a) - s b|  ", np.linalg.norm(long_way(a) - long_way.scale * b))

# Normalised states map exactly up to a phase.
a1, b1 = a / np.linalg.norm(a), b / np.linalg.norm(b)
res = map_state(a1, b1)
print("phase of s    ", np.angle(res.scale), " |s| =", abs(res.scale))

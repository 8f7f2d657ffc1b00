# Eigenprojectors of T[a,b] without eigenvectors
#
# T[a,b] c = <a,c> b - <b,c> a is anti-Hermitian and satisfies the cubic
# T (T^2 + 2i sigma T + G^2) = 0. Its eigenvalues are 0, -i(Gamma + sigma) and
# i(Gamma - sigma), and each eigenprojector is a quadratic polynomial in T.

import numpy as np

from unimap import apply_projector, make_generator, min_poly_residual, spectral_data

rng = np.random.default_rng(1)
d = 6
a = rng.standard_normal(d) + 1j * rng.standard_normal(d)
b = rng.standard_normal(d) + 1j * rng.standard_normal(d)
T = make_generator(a, b)
print(T)

sd = spectral_data(T)
print("eigenvalues from the invariants:", np.round(sd.eigenvalues, 6))
print("dense eigenvalues:              ", np.round(np.sort_complex(np.linalg.eigvals(T.matrix())), 6))

c = rng.standard_normal(d) + 1j * rng.standard_normal(d)
print("minimal polynomial residual:", min_poly_residual(T, c))

parts = [apply_projector(T, k, c) for k in range(sd.projector_count)]
print("sum of projections - c:     ", np.linalg.norm(sum(parts) - c))
for k, (lam, p) in enumerate(zip(sd.eigenvalues, parts)):
    print(f"k={k}  |T p - lam p| = {np.linalg.norm(T(p) - lam * p):.2e}   |p| = {np.linalg.norm(p):.4f}")

# When b is a complex (non-real) multiple of a the cubic degenerates to
# x (x + 2i sigma) and there are only two projectors.
T2 = make_generator(a, (0.3 + 0.8j) * a)
sd2 = spectral_data(T2)
print(T2.case_tag.value, "eigenvalues:", sd2.eigenvalues)
parts = [apply_projector(T2, k, c) for k in range(sd2.projector_count)]
print("sum of projections - c:     ", np.linalg.norm(sum(parts) - c))

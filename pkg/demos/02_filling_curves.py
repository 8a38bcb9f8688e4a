"""The curves F_A = (x, y, z) A (U, V, W)^t and why they fill the plane.

U, V, W vanish at every F_q-point of P^2, so every F_A does too.  A change
of coordinates B turns (U, V, W) into (det B) B^{-t} (U, V, W).
"""

import random

from fillcurve.ffield import field_of_order
from fillcurve.forms import build_FA, canonical_form, covariance_holds, format_form, uvw
from fillcurve.linalg import Mat, proj_points
from fillcurve.smooth import cubic_companion

q = 3
K = field_of_order(q)
U, V, W = uvw(q, K)
print("U =", format_form(U))

# %% every F_A passes through all 13 points of P^2(F_3)
A = cubic_companion((0, 1, 1), K)                  # t^3 - t - 1
F = build_FA(A)
print("F_A =", format_form(F))
print("vanishes on P^2(F_3):", all(not F.eval(P) for P in proj_points(3, K)))
print("companion form gives y U + z V + (a x + b y + c z) W:",
      F == canonical_form((0, 1, 1), K))

# %% covariance under random coordinate changes
rng = random.Random(1)
checked = 0
while checked < 20:
    B = Mat([[rng.choice(K.enumerate()) for _ in range(3)] for _ in range(3)], K)
    if B.det():
        assert covariance_holds(B)
        checked += 1
print("covariance verified for", checked, "random B")

"""Automorphism groups inside PGL(3, q).

Aut(C_A) contains the Singer cycle <B0> of order q^2+q+1 as a normal
subgroup; the quotient is trivial or Z/3.  At q = 3 the harmonic curve has
39 automorphisms.
"""

from fillcurve.autgroup import b0_generator, enumerate_aut, fixed_points, pi_map
from fillcurve.classify import irreducible_cubics
from fillcurve.ffield import field_of_order
from fillcurve.linalg import eigen_points
from fillcurve.smooth import cubic_companion

for q in (2, 3, 4, 5):
    K = field_of_order(q)
    orders = {}
    for f in irreducible_cubics(q):
        rep = enumerate_aut(cubic_companion(f.astuple(), K))
        orders.setdefault((rep.order, rep.quotient, rep.case_detected), 0)
        orders[(rep.order, rep.quotient, rep.case_detected)] += 1
    print(f"q={q}:", {f"|Aut|={o} quotient={qt} case={c}": n for (o, qt, c), n in orders.items()})

# %% the permutation action on the eigen-points for t^3 - w over F_4
K = field_of_order(4)
A = cubic_companion((K.zero, K.zero, K.gen), K)
pts = eigen_points(A)
perms = sorted({pi_map(B, A, pts) for B in enumerate_aut(A).elements})
print("images of pi:", perms)

# %% B0^s fixes exactly the three eigen-points
A = cubic_companion((0, 1, 1), field_of_order(2))
print("B0 =", b0_generator(A))
print("fixed points of B0:", sorted(map(repr, fixed_points(A, 1))))

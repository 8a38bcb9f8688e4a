"""Centralizers of a matrix with irreducible characteristic polynomial.

In GL(n, q) the centralizer is F_q[A0]^x, cyclic of order q^n - 1.  In PGL
it can grow by a factor k, the number of rho with A0 B = rho B A0
solvable, and k > 1 exactly when f has the support shape.
"""

from fillcurve.centralizer import centralizer_report
from fillcurve.ffield import field_of_order
from fillcurve.linalg import MonicPoly

K3, K4 = field_of_order(3), field_of_order(4)
examples = [
    MonicPoly([1, 1, 0], field_of_order(2)),        # t^3 + t + 1
    MonicPoly([1, 0], K3),                          # t^2 + 1
    MonicPoly([1, 2], K3),                          # (t + 1)^2, reducible
    MonicPoly([K4.gen, 0, 0], K4),                  # t^3 + w
]
for f in examples:
    if not f.is_irreducible():
        print(f"{f!r} over F_{f.ctx.order} is reducible, skipped")
        continue
    d = centralizer_report(f).to_dict()
    print(f"{d['poly']} over F_{d['q']}: |Z_GL| = {d['z_gl_order']}, image in PGL "
          f"{d['pgl_image_order']}, k = {d['pi_image_order']}, |Z_PGL| = {d['z_pgl_order']}, "
          f"support k = {d['support_k']}")

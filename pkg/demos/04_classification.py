"""Projective classification via the cubic.

Curves C_A and C_B are equivalent iff f_A(t) = rho^3 f_B((t - mu)/rho).
Each class is labelled by the normal forms it contains.
"""

from fillcurve.classify import Cubic, classes, equivalent
from fillcurve.ffield import field_of_order

for q in (2, 3, 4, 5, 7, 9):
    rep = classes(q)
    parts = ", ".join(f"{r!r} x{s} {'/'.join(sorted(l))}"
                      for r, s, l in zip(rep.representatives, rep.class_sizes,
                                         rep.tallini_labels))
    print(f"q={q}: {len(rep.class_sizes)} classes: {parts}")

# %% over F_4 the two pure cubics t^3 - w and t^3 - w^2 are not equivalent
K = field_of_order(4)
w = K.gen
witness = equivalent(Cubic.of((0, 0, w), K), Cubic.of((0, 0, w * w), K))
print("t^3 - w and t^3 - w^2 equivalent:", witness is not None)
shifted = Cubic.of((w, w + K.one, w + K.one), K)
print(f"t^3 - w and {shifted!r} equivalent via (rho, mu) =",
      equivalent(Cubic.of((0, 0, w), K), shifted))

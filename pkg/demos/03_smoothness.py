"""Smoothness: C_A is nonsingular exactly when f_A has no root in F_q.

The criterion is checked against an exhaustive search for singular points
over F_{q^m}, m in {1, 2, 3, 6}.
"""

from fillcurve.ffield import field_of_order
from fillcurve.smooth import min_degree_certificate, smoothness_report

for q, cubic in [(2, (0, 1, 1)), (2, (0, 0, 1)), (3, (0, 1, 1))]:
    rep = smoothness_report(q, cubic, degrees=(1, 2, 3, 6) if q == 2 else (1, 2, 3))
    pts = {m: [repr(P) for P in v] for m, v in rep.scan_results.items() if v}
    print(f"q={q} {rep.to_dict()['cubic']}: criterion={rep.criterion_result} "
          f"singular points={pts or 'none'} consistent={rep.consistent}")

# %% local identities behind the proof, at the eigen-point of a smooth curve
rep = smoothness_report(4, (0, 0, field_of_order(4).gen), degrees=(1, 2, 3))
print("q=4 identities all hold:", all(rep.identity_results.values()))

# %% q + 2 is the least degree of a smooth plane filling curve
for q in (2, 3, 4):
    cert = min_degree_certificate(q, (1, 2, 3))
    print(f"q={q}: no form of degree <= q vanishes: {cert['no_low_degree_form']}, "
          f"{cert['pencil_members_singular']}/{cert['pencil_members']} degree q+1 members "
          f"singular, smooth witness {cert['smooth_witness']}")

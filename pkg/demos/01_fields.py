"""Finite fields and extension towers.

Elements of F_{p^d} are packed integers; F_{q^m} is built over F_p with a
recorded embedding of F_q, so elements move up the tower with ``embed``.
"""

from fillcurve.ffield import GF, embed, extension, field_of_order, frobenius, norm, trace

# %% F_4 = F_2[t]/(t^2 + t + 1); the generator is usually called omega
F4 = field_of_order(4)
w = F4.gen
print("F_4 elements:", F4.enumerate())
print("w^2 =", w * w, " w^3 =", w ** 3)

# %% F_64 as a cubic extension of F_4
F64 = extension(F4, 3)
print("F_64 modulus (low degree first):", F64.modulus)
w_up = embed(w, F64)
print("omega is fixed by the 4-Frobenius:", frobenius(w_up, 4) == w_up)

# %% norm and trace of a root of t^3 + t + 1 over F_2
F8 = extension(GF(2), 3)
lam = next(x for x in F8.enumerate() if x ** 3 + x + 1 == F8.zero)
print("lambda =", lam, " N(lambda) =", norm(lam, 2), " Tr(lambda) =", trace(lam, 2))
print("multiplicative order of lambda:", lam.multiplicative_order())

# %% parsing
F9 = field_of_order(9)
print("in F_9, t^2 =", F9.parse("t^2"), " and 2*t+1 =", F9.parse("2*t+1"))

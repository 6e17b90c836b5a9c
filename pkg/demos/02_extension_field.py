# %% [markdown]
# # Testing irreducibility over L instead of GF(2)
#
# When f_T is irreducible, L = GF(2)[x]/(f_T) is a field with 2^m elements
# and alpha (the class of x) plays the role of T.  Q is irreducible over
# GF(2) exactly when the degree-n polynomial h = x^n + alpha f_S is
# irreducible over L.  That replaces one test of degree mn by one of degree n.

# %%
from tsrgen import TsrSpec, make_field, tsr_charpoly
from tsrgen.extfield import norm_poly, poly_ext_irreducible
from tsrgen.mat2 import companion
from tsrgen.poly2 import is_irreducible
from tsrgen.tsr import candidate_irreducible, candidate_poly_ext

L = make_field(0x11D)  # x^8 + x^4 + x^3 + x^2 + 1
a = L.alpha
print(L, 'has', L.order, 'elements')
print('alpha^255 == 1:', a ** 255 == L.one)
print('alpha * alpha^-1 =', (a * a.inv()).hex())

# %% [markdown]
# Frobenius x -> x^2 is a field automorphism and has order m.

# %%
b = a ** 37 + a
print('frob(a+b) == frob(a)+frob(b):', (a + b).frobenius() == a.frobenius() + b.frobenius())
print('frob^8 is the identity:', b.frobenius(8) == b)

# %% [markdown]
# Build a candidate and look at h.

# %%
for S in (0b001, 0b011):
    spec = TsrSpec(8, 3, companion(0x11D), S)
    h = candidate_poly_ext(spec)
    print(f'S={S:#05b}  h = {h}')
    print('    irreducible over L:', poly_ext_irreducible(h))
    print('    Q irreducible over GF(2):', is_irreducible(tsr_charpoly(spec)))
    print('    candidate_irreducible:', candidate_irreducible(spec))

# %% [markdown]
# Multiplying the m Frobenius conjugates of h gives a polynomial with
# GF(2) coefficients: Q again.

# %%
print('norm(h) == Q:', norm_poly(h) == tsr_charpoly(spec))

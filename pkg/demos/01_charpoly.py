# %% [markdown]
# # Characteristic polynomial of a word-oriented TSR
#
# A TSR holds n words of m bits.  Each step drops v_0, shifts the rest
# down, and appends T (a_0 v_0 + ... + a_{n-1} v_{n-1}).  The tap bits a_i
# give f_S = a_0 + a_1 x + ... + a_{n-1} x^{n-1}.  The characteristic
# polynomial of the whole register is sum_i q_i x^{ni} f_S^{m-i}, where
# the q_i are the coefficients of f_T.

# %%
from tsrgen import TsrSpec, mat2, tsr_charpoly
from tsrgen.mat2 import block_tsr_matrix, companion

spec = TsrSpec(m=4, n=3, T=companion(0x13), S=0b101)
print('f_T =', spec.fT)
print('f_S =', spec.fS)

# %%
Q = tsr_charpoly(spec)
print('Q   =', Q)

# %% [markdown]
# The same polynomial from the full mn x mn block matrix:

# %%
B = block_tsr_matrix(spec.T, spec.S, spec.n)
print(B.ncols, 'x', B.ncols, 'matrix')
print('agrees:', mat2.charpoly(B) == Q)

# %% [markdown]
# A random T rather than a companion matrix changes nothing as long as
# its characteristic polynomial stays the same.

# %%
import random

P = mat2.random_invertible(4, random.Random(3))
spec2 = TsrSpec(4, 3, mat2.conjugate(spec.T, P), spec.S)
print('conjugated T, same Q:', tsr_charpoly(spec2) == Q)

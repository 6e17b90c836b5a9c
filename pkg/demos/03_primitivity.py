# %% [markdown]
# # Primitivity, and the primes that need no check
#
# Q is primitive when x has order 2^mn - 1 modulo Q.  For each prime p of
# 2^mn - 1 the usual test computes x^((2^mn - 1)/p).  If f_T is primitive,
# every p that also divides 2^m - 1 passes automatically, so only the
# remaining primes need a power computation.

# %%
import math

from tsrgen import (
      TsrSpec,
      candidate_irreducible,
      candidate_primitive,
      factor_mersenne,
      tsr_charpoly,
)
from tsrgen.extfield import index_of, make_field
from tsrgen.mat2 import companion
from tsrgen.poly2 import is_primitive

K, L = factor_mersenne(12), factor_mersenne(4)
print(K)
print(L)

# %%
spec = TsrSpec(4, 3, companion(0x13), 0b101)
print('irreducible:', candidate_irreducible(spec))
rep = candidate_primitive(spec, K, L)
print('primitive:', rep.primitive)
print('skipped primes:', rep.skipped_primes, ' tested primes:', rep.tested_primes)
print('full test agrees:', is_primitive(rep.Q, K) == rep.primitive)

# %% [markdown]
# Primitivity of f_T is necessary.  x^4+x^3+x^2+x+1 is irreducible but
# alpha has order 5, and every irreducible Q built on it fails too.

# %%
bad = TsrSpec(4, 2, companion(0x1F), 0b11)
rep = candidate_primitive(bad, factor_mersenne(8), L)
print('irreducible:', candidate_irreducible(bad), ' primitive:', rep.primitive,
      ' powerings done:', len(rep.tested_primes))

# %% [markdown]
# The index of alpha in L* is gcd(2^m - 1, index of a root of Q).

# %%
Kb = factor_mersenne(8)
d_alpha = index_of(make_field(0x1F).alpha, L)
d_mu = index_of(make_field(tsr_charpoly(bad)).alpha, Kb)
print('index of alpha:', d_alpha, ' index of mu:', d_mu, ' gcd:', math.gcd(L.value, d_mu))

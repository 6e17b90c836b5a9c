# %% [markdown]
# # Running a TSR
#
# The external-xor form collects the taps into one word; the internal-xor
# form xors the fed-back word into every tapped cell.  Both have the same
# characteristic polynomial, so both reach the full period.

# %%
import random

from tsrgen import TsrState, brute_period, generate, keystream, mat2, tsr_charpoly
from tsrgen.tsr import Stepper, galois_matrix

spec, _ = generate(4, 4, random.Random(8))
start = TsrState.from_flat(1, 4, 4)
print('period:', brute_period(spec, start), ' expected:', 2 ** 16 - 1)
print('internal-xor charpoly equal:', mat2.charpoly(galois_matrix(spec)) == tsr_charpoly(spec))

# %%
data, state = keystream(spec, start, 16)
print(data.hex(' '))

# %% [markdown]
# The byte-table stepper works on the flattened state and is the fast path.

# %%
import time

big, _ = generate(32, 2, random.Random(0))
for galois in (False, True):
    st = Stepper(big, galois=galois)
    t0 = time.perf_counter()
    st.run(1, 100_000)
    dt = time.perf_counter() - t0
    print('internal' if galois else 'external', f'{100_000 / dt:,.0f} steps/s')

import random

from tsrgen.mat2 import MatF2, companion, conjugate, random_invertible
from tsrgen.poly2 import PolyF2, is_irreducible
from tsrgen.tsr import TsrSpec


def random_matrix(rng, m):
    return MatF2(tuple(rng.getrandbits(m) for _ in range(m)), m)


def random_S(rng, n, a0=True):
    S = rng.getrandbits(n)
    return S | 1 if a0 else S


def random_irreducible(rng, m):
    while True:
        f = PolyF2((1 << m) | rng.getrandbits(m))
        if is_irreducible(f):
            return f


def irreducible_T(rng, m):
    """A random matrix whose characteristic polynomial is irreducible."""
    f = random_irreducible(rng, m)
    return conjugate(companion(f), random_invertible(m, rng))


def random_spec(rng, m, n, a0=True):
    return TsrSpec(m, n, random_matrix(rng, m), random_S(rng, n, a0))


def candidate_spec(rng, m, n):
    return TsrSpec(m, n, irreducible_T(rng, m), random_S(rng, n))


def seeded(seed):
    return random.Random(seed)

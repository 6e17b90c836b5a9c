"""Brute-force reference computations, written without the library kernels."""

from itertools import permutations, product


def coeffs(v):
    return [(v >> i) & 1 for i in range(v.bit_length())]


def from_coeffs(cs):
    return sum(c << i for i, c in enumerate(cs) if c % 2)


def schoolbook_mul(a, b):
    ca, cb = coeffs(a), coeffs(b)
    out = [0] * (len(ca) + len(cb))
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            out[i + j] += x * y
    return from_coeffs([c % 2 for c in out])


def long_divide(a, b):
    ca, cb = coeffs(a), coeffs(b)
    q = [0] * max(len(ca) - len(cb) + 1, 1)
    while len(ca) >= len(cb) and any(ca):
        s = len(ca) - len(cb)
        q[s] = 1
        for i, c in enumerate(cb):
            ca[i + s] ^= c
        while ca and ca[-1] == 0:
            ca.pop()
    return from_coeffs(q), from_coeffs(ca)


def is_irreducible_trial(f):
    d = f.bit_length() - 1
    for g in range(2, 1 << (d // 2 + 1)):
        if g.bit_length() - 1 > d // 2:
            break
        if long_divide(f, g)[1] == 0:
            return False
    return True


def factor_trial(f):
    """Irreducible factorization over GF(2) by trial division: {factor: exp}."""
    out = {}
    g = 2
    while f.bit_length() > 1:
        while True:
            q, r = long_divide(f, g)
            if r:
                break
            out[g] = out.get(g, 0) + 1
            f = q
        g += 1
        if (g.bit_length() - 1) * 2 > f.bit_length() - 1 and f.bit_length() > 1:
            out[f] = out.get(f, 0) + 1
            break
    return out


def order_of_x(f):
    """Order of x in GF(2)[x]/f by repeated multiplication (f(0) = 1)."""
    x = long_divide(2, f)[1]
    one = long_divide(1, f)[1]
    y, t = x, 1
    while y != one:
        y = long_divide(schoolbook_mul(y, x), f)[1]
        t += 1
        if t > (1 << f.bit_length()):
            raise ValueError('x is not invertible')
    return t


def polys_of_degree(d):
    return range(1 << d, 1 << (d + 1))


def det_leibniz_charpoly(M):
    """det(xI - M) over GF(2)[x] by permutation expansion; M as 0/1 lists."""
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            entry = M[i][j] ^ (2 if i == j else 0)
            term = schoolbook_mul(term, entry)
            if term == 0:
                break
        total ^= term
    return total


def field_mul_table(mod):
    d = mod.bit_length() - 1
    els = range(1 << d)
    return {(a, b): long_divide(schoolbook_mul(a, b), mod)[1] for a, b in product(els, els)}


def int_trial_factor(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def galois_lfsr_bits(taps, state, nbits, steps):
    """Classical internal-xor LFSR: shift up, xor taps when the top bit falls out.

    ``taps`` holds the low coefficients of the feedback polynomial.
    """
    seq = []
    for _ in range(steps):
        seq.append(state)
        top = (state >> (nbits - 1)) & 1
        state = (state << 1) & ((1 << nbits) - 1)
        if top:
            state ^= taps
    return seq

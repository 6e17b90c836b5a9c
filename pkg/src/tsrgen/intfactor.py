"""Factoring numbers of the form 2**d - 1, and Euler phi ratios.

``factor`` is general (trial division, then Brent's variant of Pollard rho),
but ``factor_mersenne`` first splits ``2**d - 1`` into cyclotomic values
``Phi_k(2)`` for ``k | d``, which keeps every piece small for d <= 96.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache

__all__ = [
    'MAX_MERSENNE_EXPONENT',
    'FactoringError',
    'Factorization',
    'coprime_part',
    'factor',
    'factor_mersenne',
    'is_probable_prime',
    'parse_factorization',
    'phi_ratio',
    'primitivity_prob',
]

TRIAL_BOUND = 10**6
# Largest d for which factor_mersenne is guaranteed to finish quickly.
MAX_MERSENNE_EXPONENT = 96


class FactoringError(ArithmeticError):
    """A composite could not be split, or a factorization is inconsistent."""


def _primes_below(n):
    sieve = bytearray([1]) * n
    sieve[0:2] = b'\x00\x00'
    for i in range(2, math.isqrt(n - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, n, i)))
    return [i for i in range(n) if sieve[i]]


_SMALL_PRIMES = None


def _small_primes():
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = _primes_below(TRIAL_BOUND)
    return _SMALL_PRIMES


# Deterministic for n < 3.3e24 (covers 2**64 with room).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _mr_round(n, d, s, a):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n, extra_rounds=20):
    """Miller-Rabin; deterministic below 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, d, s, a) for a in _MR_BASES):
        return False
    if n < 3_317_044_064_679_887_385_961_981:
        return True
    rng = random.Random(n)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(extra_rounds))


def _brent(n, c, max_iter=1 << 22):
    """One run of Brent's cycle-finding rho with f(x) = x^2 + c."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    it = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        it += r
        if it > max_iter:
            return None
    if g == n:
        # backtrack one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n):
    for c in range(1, 64):
        g = _brent(n, c)
        if g is not None:
            return g
    raise FactoringError(f'failed to split composite {n}')


def _factor_into(n, out):
    stack = [n]
    while stack:
        n = stack.pop()
        if n == 1:
            continue
        if is_probable_prime(n):
            out[n] = out.get(n, 0) + 1
            continue
        d = _split(n)
        stack.extend((d, n // d))


@dataclass(frozen=True)
class Factorization:
    """``value = prod(p**e for p, e in factors)``, primes increasing."""

    value: int
    factors: tuple = ()

    @property
    def primes(self):
        return [p for p, _ in self.factors]

    def check(self):
        """Raise FactoringError unless the factorization is complete and prime."""
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise FactoringError(f'malformed factor list {self.factors}')
            if not is_probable_prime(p):
                raise FactoringError(f'{p} is not prime')
            prod *= p**e
            last = p
        if prod != self.value:
            raise FactoringError(f'factors multiply to {prod}, expected {self.value}')
        return self

    def __str__(self):
        body = ' * '.join(f'{p}^{e}' for p, e in self.factors) or '1'
        return f'{self.value} = {body}'

    @classmethod
    def from_dict(cls, value, d):
        return cls(value, tuple(sorted(d.items())))


def factor(N):
    """Complete prime factorization of a positive integer."""
    if N < 1:
        raise ValueError(f'cannot factor {N}')
    out = {}
    n = N
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        _factor_into(n, out)
    return Factorization.from_dict(N, out).check()


@cache
def _cyclotomic_at_2(k):
    v = (1 << k) - 1
    for j in range(1, k):
        if k % j == 0:
            v //= _cyclotomic_at_2(j)
    return v


@lru_cache(maxsize=256)
def factor_mersenne(d):
    """Factor ``2**d - 1`` via its cyclotomic pieces ``Phi_k(2)``, k | d."""
    if d < 0:
        raise ValueError('negative exponent')
    if d > MAX_MERSENNE_EXPONENT:
        raise FactoringError(
            f'2^{d} - 1 is beyond the supported bound 2^{MAX_MERSENNE_EXPONENT} - 1; '
            'supply its factorization instead')
    out = {}
    for k in range(1, d + 1):
        if d % k == 0:
            for p, e in factor(_cyclotomic_at_2(k)).factors:
                out[p] = out.get(p, 0) + e
    return Factorization.from_dict((1 << d) - 1, out).check()


def phi_ratio(fact):
    """Exact phi(N)/N = prod over distinct primes of (1 - 1/p)."""
    r = Fraction(1)
    for p in fact.primes:
        r *= Fraction(p - 1, p)
    return r


def primitivity_prob(m, n, k_fact=None, l_fact=None):
    """Heuristic probability that an irreducible candidate with primitive T
    is primitive: ``phi_ratio(2^mn - 1) / phi_ratio(2^m - 1)``."""
    if m < 1 or n < 1:
        raise ValueError('m and n must be positive')
    k_fact = k_fact or factor_mersenne(m * n)
    l_fact = l_fact or factor_mersenne(m)
    return float(phi_ratio(k_fact) / phi_ratio(l_fact))


def coprime_part(k_fact, l_fact):
    """Split ``|K*| = k_L * a`` where k_L collects the primes dividing ``|L*|``."""
    k_l = 1
    for p, e in k_fact.factors:
        if l_fact.value % p == 0:
            k_l *= p**e
    return k_l, k_fact.value // k_l


_TERM = re.compile(r'^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$')


def parse_factorization(text):
    """Parse ``N = p1^e1 * p2^e2 * ...`` and verify it."""
    try:
        lhs, rhs = text.split('=')
        value = int(lhs.strip())
        out = {}
        if rhs.strip() != '1':
            for term in rhs.split('*'):
                mt = _TERM.match(term)
                if not mt:
                    raise ValueError(term)
                p, e = int(mt.group(1)), int(mt.group(2) or 1)
                out[p] = out.get(p, 0) + e
    except ValueError as exc:
        raise FactoringError(f'malformed factorization {text!r}') from exc
    return Factorization.from_dict(value, out).check()

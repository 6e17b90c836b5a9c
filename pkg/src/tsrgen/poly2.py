"""Polynomials over GF(2).

A polynomial is stored as a nonnegative integer whose bit ``i`` is the
coefficient of ``x**i``, so ``x**4 + x + 1`` is ``0x13``.  The raw integer
helpers (``_mul``, ``_mod`` ...) do the work; :class:`PolyF2` wraps them with
operators and the canonical hex text encoding.
"""

from __future__ import annotations

import math
from functools import reduce

__all__ = [
    'DEG_ZERO',
    'ONE',
    'ZERO',
    'PolyF2',
    'X',
    'add',
    'count_distinct_irreducible_factors',
    'divrem',
    'gcd',
    'homogeneous_compose',
    'is_irreducible',
    'is_primitive',
    'mul',
    'parse',
    'powmod',
    'prod',
    'small_prime_divisors',
]

# Degree of the zero polynomial.  Behaves correctly under +, < and max.
DEG_ZERO = -math.inf


class PolyF2:
    """Immutable polynomial over GF(2)."""

    __slots__ = ('value',)

    def __init__(self, value=0):
        if isinstance(value, PolyF2):
            value = value.value
        if not isinstance(value, int) or value < 0:
            raise ValueError(f'invalid GF(2) polynomial {value!r}')
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, value):
        raise AttributeError('PolyF2 is immutable')

    def __reduce__(self):
        return PolyF2, (self.value,)

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from a coefficient sequence, lowest degree first."""
        v = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                v |= 1 << i
        return cls(v)

    @property
    def degree(self):
        return self.value.bit_length() - 1 if self.value else DEG_ZERO

    def coeffs(self):
        return [(self.value >> i) & 1 for i in range(self.value.bit_length())]

    def __getitem__(self, i):
        return (self.value >> i) & 1

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, PolyF2):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(('PolyF2', self.value))

    def __add__(self, other):
        return PolyF2(self.value ^ _val(other))

    __radd__ = __sub__ = __rsub__ = __add__

    def __mul__(self, other):
        return PolyF2(_mul(self.value, _val(other)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        q, r = _divmod(self.value, _val(other))
        return PolyF2(q), PolyF2(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return PolyF2(_mod(self.value, _val(other)))

    def __pow__(self, e):
        if e < 0:
            raise ValueError('negative exponent')
        return PolyF2(_pow(self.value, e))

    def __call__(self, x):
        """Evaluate (compose) at another polynomial."""
        return PolyF2(_compose(self.value, _val(x)))

    def hex(self):
        return hex(self.value)

    def __str__(self):
        if not self.value:
            return '0'
        terms = []
        for i in range(self.value.bit_length() - 1, -1, -1):
            if (self.value >> i) & 1:
                terms.append('1' if i == 0 else 'x' if i == 1 else f'x^{i}')
        return ' + '.join(terms)

    def __repr__(self):
        return f'PolyF2({self.hex()})'


def _val(a):
    if isinstance(a, PolyF2):
        return a.value
    if isinstance(a, int) and a >= 0:
        return a
    raise TypeError(f'not a GF(2) polynomial: {a!r}')


X = PolyF2(2)
ONE = PolyF2(1)
ZERO = PolyF2(0)


def parse(text):
    """Parse the hex encoding (``0x13`` or ``13``) of a polynomial."""
    return PolyF2(int(text.strip(), 16))


# -- raw integer kernels ------------------------------------------------------

def _mul(a, b):
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _sqr(a):
    # spread bits: coefficient i moves to position 2i
    c = 0
    i = 0
    while a:
        if a & 1:
            c |= 1 << (2 * i)
        a >>= 1
        i += 1
    return c


def _divmod(a, b):
    if b == 0:
        raise ZeroDivisionError('division by zero polynomial')
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def _mod(a, b):
    if b == 0:
        raise ZeroDivisionError('division by zero polynomial')
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _mulmod(a, b, m):
    return _mod(_mul(a, b), m)


def _powmod(a, e, m):
    a = _mod(a, m)
    r = _mod(1, m)
    while e:
        if e & 1:
            r = _mulmod(r, a, m)
        e >>= 1
        if e:
            a = _mod(_sqr(a), m)
    return r


def _pow(a, e):
    r = 1
    while e:
        if e & 1:
            r = _mul(r, a)
        e >>= 1
        if e:
            a = _sqr(a)
    return r


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


def _compose(q, f):
    # Horner: q(f)
    r = 0
    for i in range(q.bit_length() - 1, -1, -1):
        r = _mul(r, f) ^ ((q >> i) & 1)
    return r


# -- public operations --------------------------------------------------------

def add(a, b):
    return PolyF2(_val(a) ^ _val(b))


def mul(a, b):
    return PolyF2(_mul(_val(a), _val(b)))


def divrem(a, b):
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``."""
    q, r = _divmod(_val(a), _val(b))
    return PolyF2(q), PolyF2(r)


def gcd(a, b):
    a, b = _val(a), _val(b)
    if a == 0 and b == 0:
        raise ValueError('gcd(0, 0) is undefined')
    return PolyF2(_gcd(a, b))


def powmod(base, e, modulus):
    """``base**e mod modulus`` by square-and-multiply; ``e`` may be huge."""
    m = _val(modulus)
    if m.bit_length() < 2:
        raise ValueError('modulus must have degree >= 1')
    if e < 0:
        raise ValueError('negative exponent')
    return PolyF2(_powmod(_val(base), e, m))


def small_prime_divisors(d):
    """Distinct primes dividing a small positive integer, increasing."""
    ps = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            ps.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        ps.append(d)
    return ps


def _frobenius_powers(f, k):
    """x**(2**j) mod f for j = 0..k."""
    out = [_mod(2, f)]
    for _ in range(k):
        out.append(_mod(_sqr(out[-1]), f))
    return out


def _is_irreducible(f):
    d = f.bit_length() - 1
    if d == 1:
        return True
    if not f & 1:
        return False
    xs = _frobenius_powers(f, d)
    x = _mod(2, f)
    if xs[d] != x:
        return False
    for p in small_prime_divisors(d):
        if _gcd(f, xs[d // p] ^ x) != 1:
            return False
    return True


def is_irreducible(f):
    """Rabin's test: x^(2^d) = x mod f and gcd(x^(2^(d/p)) - x, f) = 1."""
    f = _val(f)
    if f.bit_length() < 2:
        raise ValueError('irreducibility of a constant polynomial is undefined')
    return _is_irreducible(f)


def is_primitive(f, fact):
    """True iff ``x`` generates the multiplicative group of GF(2)[x]/f.

    ``fact`` is a :class:`~tsrgen.intfactor.Factorization` of ``2**deg f - 1``.
    """
    f = _val(f)
    if f.bit_length() < 2:
        raise ValueError('primitivity of a constant polynomial is undefined')
    if not _is_irreducible(f):
        raise ValueError(f'{hex(f)} is reducible')
    d = f.bit_length() - 1
    order = (1 << d) - 1
    if fact.value != order:
        raise ValueError(f'factorization of {fact.value} does not match 2^{d} - 1')
    fact.check()
    if f == 2:
        # x itself: the root is 0
        return False
    return all(_powmod(2, order // p, f) != 1 for p in fact.primes)


def homogeneous_compose(q, g, f):
    """``sum(q_i * f**i * g**(deg q - i))``, i.e. ``g**deg(q) * q(f/g)``."""
    q, g, f = _val(q), _val(g), _val(f)
    if q == 0:
        raise ValueError('q must be nonzero')
    m = q.bit_length() - 1
    # Horner in the homogeneous form: r <- r*f + q_i*g^(m-i)
    gpow = [1]
    for _ in range(m):
        gpow.append(_mul(gpow[-1], g))
    r = 0
    for i in range(m, -1, -1):
        r = _mul(r, f)
        if (q >> i) & 1:
            r ^= gpow[m - i]
    return PolyF2(r)


def _rank_rows(rows, ncols):
    """Rank over GF(2) of a list of row bitmasks."""
    rank = 0
    rows = list(rows)
    for c in range(ncols):
        bit = 1 << c
        piv = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def count_distinct_irreducible_factors(f):
    """Number of distinct irreducible factors, multiplicity ignored.

    Equal to the dimension of the fixed space of the Frobenius map
    ``u -> u**2`` on GF(2)[x]/f (the Berlekamp subalgebra).
    """
    f = _val(f)
    if f == 0:
        raise ValueError('zero polynomial has no factorization')
    d = f.bit_length() - 1
    if d == 0:
        return 0
    # row j of (Frob - I): image of x^j
    rows = []
    x2 = _mod(4, f)
    img = 1
    for j in range(d):
        rows.append(img ^ (1 << j))
        img = _mulmod(img, x2, f)
    return d - _rank_rows(rows, d)


def prod(polys):
    return reduce(mul, polys, ONE)

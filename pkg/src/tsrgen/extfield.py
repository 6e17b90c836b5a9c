"""The field L = GF(2)[x]/(f) for irreducible f, and polynomials over L.

Elements are represented by their reduced GF(2) polynomial (an int); the
distinguished element ``alpha`` is the class of ``x``, a root of ``f``.
:class:`PolyExt` holds polynomials with coefficients in L as a tuple of
those ints, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly2 import (
    DEG_ZERO,
    PolyF2,
    _is_irreducible,
    _mod,
    _mulmod,
    _sqr,
    small_prime_divisors,
)

__all__ = [
    'ExtElem',
    'ExtField',
    'FieldMismatchError',
    'PolyExt',
    'count_distinct_irreducible_factors_ext',
    'index_of',
    'make_field',
    'norm_poly',
    'order_of',
    'poly_ext_irreducible',
]


class FieldMismatchError(ValueError):
    pass


class ExtField:
    """GF(2^m) as GF(2)[x]/(modulus); immutable."""

    __slots__ = ('_mod', 'm', 'modulus', 'order_star')

    def __init__(self, modulus):
        modulus = PolyF2(modulus)
        if modulus.degree < 1 or not _is_irreducible(modulus.value):
            raise ValueError(f'modulus {modulus.hex()} is not irreducible')
        self.modulus = modulus
        self.m = modulus.degree
        self.order_star = (1 << self.m) - 1
        self._mod = modulus.value

    @property
    def order(self):
        return 1 << self.m

    def __eq__(self, other):
        return isinstance(other, ExtField) and self._mod == other._mod

    def __hash__(self):
        return hash(('ExtField', self._mod))

    def __repr__(self):
        return f'ExtField({self.modulus.hex()})'

    def __reduce__(self):
        return ExtField, (self.modulus,)

    def __call__(self, rep):
        return ExtElem(_mod(PolyF2(rep).value, self._mod), self)

    @property
    def zero(self):
        return ExtElem(0, self)

    @property
    def one(self):
        return ExtElem(1 if self.m else 0, self)

    @property
    def alpha(self):
        return ExtElem(_mod(2, self._mod), self)

    def elements(self):
        return [ExtElem(r, self) for r in range(self.order)]

    # raw kernels on reps
    def _mul(self, a, b):
        return _mulmod(a, b, self._mod)

    def _sqr(self, a):
        return _mod(_sqr(a), self._mod)

    def _pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul(r, a)
            e >>= 1
            if e:
                a = self._sqr(a)
        return r

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError('inverse of zero')
        # extended Euclid over GF(2)[x]
        r0, r1, s0, s1 = self._mod, a, 0, 1
        while r1:
            shift = r0.bit_length() - r1.bit_length()
            if shift < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << shift
            s0 ^= s1 << shift
        # r0 == 1 here
        return _mod(s0, self._mod)

    def _frob(self, a, k=1):
        for _ in range(k % self.m if self.m else 0):
            a = self._sqr(a)
        return a


def make_field(fT):
    return ExtField(fT)


@dataclass(frozen=True)
class ExtElem:
    rep: int
    field: ExtField

    def _other(self, other):
        if isinstance(other, ExtElem):
            if other.field != self.field:
                raise FieldMismatchError('elements of different fields')
            return other.rep
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ExtElem(self.rep ^ o, self.field)

    __radd__ = __sub__ = __rsub__ = __add__

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ExtElem(self.field._mul(self.rep, o), self.field)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        return ExtElem(self.field._pow(self.rep, e), self.field)

    def inv(self):
        return ExtElem(self.field._inv(self.rep), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        return self * ExtElem(self.field._inv(o), self.field)

    def frobenius(self, k=1):
        """``x -> x**(2**k)``."""
        return ExtElem(self.field._frob(self.rep, k), self.field)

    def __bool__(self):
        return self.rep != 0

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == other
        return NotImplemented

    def __hash__(self):
        return hash((self.rep, self.field))

    def hex(self):
        return hex(self.rep)

    def __repr__(self):
        return f'ExtElem({self.hex()} mod {self.field.modulus.hex()})'


def order_of(x, fact):
    """Multiplicative order of ``x``, given the factorization of ``|L*|``."""
    if not x:
        raise ZeroDivisionError('zero has no multiplicative order')
    F = x.field
    if fact.value != F.order_star:
        raise ValueError(f'factorization of {fact.value} does not match |L*| = {F.order_star}')
    e = F.order_star
    for p, k in fact.factors:
        for _ in range(k):
            if F._pow(x.rep, e // p) == 1:
                e //= p
            else:
                break
    return e


def index_of(x, fact):
    """``|L*| / |<x>|``; index 1 means ``x`` generates ``L*``."""
    return x.field.order_star // order_of(x, fact)


# -- polynomials over L ---------------------------------------------------------

def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class PolyExt:
    """Polynomial with coefficients in an :class:`ExtField`; immutable."""

    __slots__ = ('c', 'field')

    def __init__(self, field, coeffs):
        reps = []
        for a in coeffs:
            if isinstance(a, ExtElem):
                if a.field != field:
                    raise FieldMismatchError('coefficient from a different field')
                a = a.rep
            reps.append(_mod(a, field._mod))
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'c', _trim(reps))

    def __setattr__(self, name, value):
        raise AttributeError('PolyExt is immutable')

    def __reduce__(self):
        return PolyExt._raw, (self.field, self.c)

    @classmethod
    def _raw(cls, field, reps):
        p = object.__new__(cls)
        object.__setattr__(p, 'field', field)
        object.__setattr__(p, 'c', _trim(reps))
        return p

    @classmethod
    def embed(cls, field, f):
        """A GF(2) polynomial viewed over L."""
        f = PolyF2(f)
        return cls._raw(field, f.coeffs())

    @classmethod
    def x(cls, field):
        return cls._raw(field, (0, 1))

    @property
    def coeffs(self):
        return tuple(ExtElem(a, self.field) for a in self.c)

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else DEG_ZERO

    def __getitem__(self, i):
        return ExtElem(self.c[i] if i < len(self.c) else 0, self.field)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, PolyExt):
            return NotImplemented
        return self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field, self.c))

    def _check(self, other):
        if not isinstance(other, PolyExt):
            raise TypeError('expected PolyExt')
        if other.field != self.field:
            raise FieldMismatchError('polynomials over different fields')

    def __add__(self, other):
        self._check(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] ^= v
        return PolyExt._raw(self.field, out)

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, ExtElem):
            other = PolyExt._raw(self.field, (other.rep,))
        self._check(other)
        return PolyExt._raw(self.field, _pmul(self.field, self.c, other.c))

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        q, r = _pdivmod(self.field, self.c, other.c)
        return PolyExt._raw(self.field, q), PolyExt._raw(self.field, r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if not self.c:
            return self
        lead_inv = self.field._inv(self.c[-1])
        return PolyExt._raw(self.field, [self.field._mul(a, lead_inv) for a in self.c])

    def conjugate(self, k=1):
        """Apply the Frobenius ``a -> a**(2**k)`` to every coefficient."""
        F = self.field
        return PolyExt._raw(F, [F._frob(a, k) for a in self.c])

    def __call__(self, x):
        """Evaluate at an element of L."""
        F = self.field
        xr = x.rep if isinstance(x, ExtElem) else x
        acc = 0
        for a in reversed(self.c):
            acc = F._mul(acc, xr) ^ a
        return ExtElem(acc, F)

    def to_f2(self):
        """Back to GF(2)[x]; every coefficient must lie in {0, 1}."""
        v = 0
        for i, a in enumerate(self.c):
            if a not in (0, 1):
                raise ValueError('coefficient outside GF(2)')
            v |= a << i
        return PolyF2(v)

    def __repr__(self):
        return f'PolyExt({self.field!r}, [{", ".join(hex(a) for a in self.c)}])'


def _pmul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= F._mul(x, y)
    return out


def _pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError('division by zero polynomial')
    r = list(a)
    db = len(b) - 1
    inv = F._inv(b[-1])
    if len(r) - 1 < db:
        return (), r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = F._mul(c, inv)
        q[k - db] = c
        for j in range(db + 1):
            if b[j]:
                r[k - db + j] ^= F._mul(c, b[j])
    return q, _trim(r[:db])


def _pmod(F, a, b):
    return _pdivmod(F, a, b)[1]


def _pgcd(F, a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(F, a, b)
    return a


def _psqr(F, a):
    out = [0] * (2 * len(a) - 1) if a else []
    for i, x in enumerate(a):
        out[2 * i] = F._sqr(x)
    return out


def poly_ext_powmod(base, e, modulus):
    """``base**e mod modulus`` in L[x]."""
    F = base.field
    b = _pmod(F, base.c, modulus.c)
    r = _pmod(F, (1,), modulus.c)
    while e:
        if e & 1:
            r = _pmod(F, _pmul(F, r, b), modulus.c)
        e >>= 1
        if e:
            b = _pmod(F, _psqr(F, b), modulus.c)
    return PolyExt._raw(F, r)


def _frobenius_images(h):
    """Images of the basis x^j, j < deg h, under ``u -> u**q`` mod h, q = |L|.

    The map fixes L, so it is L-linear on L[x]/h.
    """
    F = h.field
    xq = _pmod(F, (0, 1), h.c)
    for _ in range(F.m):
        xq = _pmod(F, _psqr(F, xq), h.c)
    n = len(h.c) - 1
    images = [_pmod(F, (1,), h.c)]
    for _ in range(1, n):
        images.append(_pmod(F, _pmul(F, images[-1], xq), h.c))
    return images


def _apply_images(F, images, u, n):
    out = [0] * n
    for j, a in enumerate(u):
        if a:
            for i, b in enumerate(images[j]):
                if b:
                    out[i] ^= F._mul(a, b)
    return _trim(out)


def poly_ext_irreducible(h):
    """Rabin's test over L = GF(q): ``x^(q^n) = x mod h`` and
    ``gcd(x^(q^(n/p)) - x, h) = 1`` for each prime ``p | n``."""
    n = h.degree
    if n < 1:
        raise ValueError('irreducibility of a constant polynomial is undefined')
    if n == 1:
        return True
    F = h.field
    if h.c[0] == 0:
        return False
    images = _frobenius_images(h)
    x = _pmod(F, (0, 1), h.c)
    pows = [x]
    for _ in range(n):
        pows.append(_apply_images(F, images, pows[-1], n))
    if _trim(pows[n]) != _trim(x):
        return False
    for p in small_prime_divisors(n):
        diff = list(pows[n // p]) + [0] * 2
        diff[1] ^= 1
        if len(_pgcd(F, h.c, diff)) != 1:
            return False
    return True


def _rank_over(F, rows, ncols):
    rows = [list(r) + [0] * (ncols - len(r)) for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F._inv(rows[rank][c])
        prow = [F._mul(a, inv) for a in rows[rank]]
        rows[rank] = prow
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                k = rows[i][c]
                rows[i] = [a ^ F._mul(k, b) for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


def count_distinct_irreducible_factors_ext(h):
    """Distinct irreducible factors of ``h`` over L, multiplicity ignored."""
    if not h:
        raise ValueError('zero polynomial has no factorization')
    n = h.degree
    if n == 0:
        return 0
    F = h.field
    rows = []
    for j, img in enumerate(_frobenius_images(h)):
        row = list(img) + [0] * (n - len(img))
        row[j] ^= 1
        rows.append(row)
    return n - _rank_over(F, rows, n)


def norm_poly(h):
    """N(h) = product of the m Frobenius conjugates of h; lands in GF(2)[x]."""
    if not h:
        raise ValueError('norm of the zero polynomial')
    F = h.field
    acc = (1,)
    conj = h.c
    for _ in range(F.m):
        acc = _pmul(F, acc, conj)
        conj = [F._sqr(a) for a in conj]
    return PolyExt._raw(F, acc).to_f2()

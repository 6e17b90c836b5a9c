"""Square matrices over GF(2) with bit-packed rows.

Row ``r`` is an integer whose bit ``c`` is entry ``(r, c)``.  Vectors are
integers too (bit ``c`` is component ``c``) and matrices act on column
vectors, so ``(M v)_r = parity(row_r & v)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly2 import PolyF2, _mul

__all__ = [
    'MatF2',
    'SingularMatrixError',
    'apply',
    'block_tsr_matrix',
    'charpoly',
    'companion',
    'conjugate',
    'random_invertible',
]


class SingularMatrixError(ArithmeticError):
    pass


def _parity(x):
    return x.bit_count() & 1


@dataclass(frozen=True)
class MatF2:
    rows: tuple
    ncols: int

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, 'rows', rows)
        limit = 1 << self.ncols
        for r in rows:
            if not 0 <= r < limit:
                raise ValueError(f'row {r:#x} does not fit in {self.ncols} columns')

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    @classmethod
    def identity(cls, m):
        return cls(tuple(1 << i for i in range(m)), m)

    @classmethod
    def zero(cls, m):
        return cls((0,) * m, m)

    @classmethod
    def from_lists(cls, entries):
        """From a list of 0/1 rows, ``entries[r][c]``."""
        ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError('ragged matrix')
            rows.append(sum((b & 1) << c for c, b in enumerate(row)))
        return cls(tuple(rows), ncols)

    def to_lists(self):
        return [[(r >> c) & 1 for c in range(self.ncols)] for r in self.rows]

    def __getitem__(self, rc):
        r, c = rc
        return (self.rows[r] >> c) & 1

    def transpose(self):
        out = []
        for c in range(self.ncols):
            bit = 1 << c
            out.append(sum(1 << r for r, row in enumerate(self.rows) if row & bit))
        return MatF2(tuple(out), self.nrows)

    def __matmul__(self, other):
        if isinstance(other, MatF2):
            if self.ncols != other.nrows:
                raise ValueError(f'shape mismatch {self.shape} @ {other.shape}')
            # row r of the product = xor of other's rows selected by row r
            out = []
            for row in self.rows:
                acc = 0
                c = 0
                while row:
                    if row & 1:
                        acc ^= other.rows[c]
                    row >>= 1
                    c += 1
                out.append(acc)
            return MatF2(tuple(out), other.ncols)
        return apply(self, other)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError('shape mismatch')
        return MatF2(tuple(a ^ b for a, b in zip(self.rows, other.rows)), self.ncols)

    def rank(self):
        rows = list(self.rows)
        rank = 0
        for c in range(self.ncols):
            bit = 1 << c
            piv = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for i in range(rank + 1, len(rows)):
                if rows[i] & bit:
                    rows[i] ^= rows[rank]
            rank += 1
        return rank

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError('determinant of a non-square matrix')
        return 1 if self.rank() == self.nrows else 0

    def inverse(self):
        m = self.nrows
        if m != self.ncols:
            raise ValueError('inverse of a non-square matrix')
        # augmented rows: low m bits = self, high m bits = identity
        rows = [r | (1 << (m + i)) for i, r in enumerate(self.rows)]
        for c in range(m):
            bit = 1 << c
            piv = next((i for i in range(c, m) if rows[i] & bit), None)
            if piv is None:
                raise SingularMatrixError('matrix is singular')
            rows[c], rows[piv] = rows[piv], rows[c]
            for i in range(m):
                if i != c and rows[i] & bit:
                    rows[i] ^= rows[c]
        return MatF2(tuple(r >> m for r in rows), m)

    def to_hex(self):
        return ','.join(hex(r) for r in self.rows)

    @classmethod
    def from_hex(cls, text, m):
        words = [w for w in text.split(',') if w.strip()]
        if len(words) != m:
            raise ValueError(f'expected {m} row words, got {len(words)}')
        return cls(tuple(int(w.strip(), 16) for w in words), m)

    def __str__(self):
        return '\n'.join(''.join(str(b) for b in row) for row in self.to_lists())


def apply(M, v):
    """Matrix-vector product over GF(2)."""
    if v < 0 or v.bit_length() > M.ncols:
        raise ValueError(f'vector {v:#x} does not have length {M.ncols}')
    out = 0
    for r, row in enumerate(M.rows):
        if _parity(row & v):
            out |= 1 << r
    return out


def companion(f):
    """Companion matrix: ones on the superdiagonal, coefficients on the last row.

    With this layout ``e_0 -> e_{m-1}`` picks up ``f_0`` and the matrix has
    the same shape as the TSR block matrix with ``m = 1``.
    """
    f = PolyF2(f)
    m = f.degree
    if m < 1:
        raise ValueError('companion matrix of a constant polynomial')
    rows = [1 << (r + 1) for r in range(m - 1)]
    rows.append(f.value & ((1 << m) - 1))
    return MatF2(tuple(rows), m)


def _hessenberg(M):
    """Reduce to upper Hessenberg form by GF(2) similarity transforms."""
    n = M.nrows
    h = [list(r) for r in M.to_lists()]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        for i in range(j + 2, n):
            if h[i][j]:
                # row_i -= row_{j+1}; then col_{j+1} += col_i to keep similarity
                h[i] = [a ^ b for a, b in zip(h[i], h[j + 1])]
                for row in h:
                    row[j + 1] ^= row[i]
    return h


def charpoly(M):
    """det(x I - M) over GF(2), via Hessenberg reduction.

    Independent of the TSR closed form; used as its oracle.
    """
    n = M.nrows
    if n != M.ncols:
        raise ValueError('characteristic polynomial of a non-square matrix')
    h = _hessenberg(M)
    # p[k] = charpoly of the leading k x k block
    p = [1]
    for k in range(1, n + 1):
        kk = k - 1
        acc = _mul(0b10 ^ h[kk][kk], p[k - 1])
        sub = 1
        for i in range(1, k):
            sub &= h[kk - i + 1][kk - i]
            if not sub:
                break
            if h[kk - i][kk]:
                acc ^= p[k - i - 1]
        p.append(acc)
    return PolyF2(p[n])


def block_tsr_matrix(T, S, n):
    """The nm x nm matrix of one TSR step on the flattened state.

    Identity blocks on the block superdiagonal, last block row
    ``(a_0 T, ..., a_{n-1} T)``.  Word ``i`` occupies coordinates
    ``i*m .. i*m + m - 1``.  ``S`` is a bitmask, bit ``i`` = ``a_i``.
    """
    if n < 1:
        raise ValueError('n must be at least 1')
    m = T.nrows
    if T.ncols != m:
        raise ValueError('T must be square')
    if S.bit_length() > n:
        raise ValueError(f'S={S:#x} has more than {n} taps')
    rows = []
    for i in range(n - 1):
        for r in range(m):
            rows.append(1 << ((i + 1) * m + r))
    for r in range(m):
        row = 0
        for j in range(n):
            if (S >> j) & 1:
                row |= T.rows[r] << (j * m)
        rows.append(row)
    return MatF2(tuple(rows), n * m)


def random_invertible(m, rng):
    """Uniform invertible m x m matrix by rejection sampling."""
    if m < 1:
        raise ValueError('m must be at least 1')
    while True:
        M = MatF2(tuple(rng.getrandbits(m) for _ in range(m)), m)
        if M.det():
            return M


def conjugate(M, P):
    """``P M P^-1``."""
    if P.shape != M.shape:
        raise ValueError('shape mismatch')
    return P @ M @ P.inverse()

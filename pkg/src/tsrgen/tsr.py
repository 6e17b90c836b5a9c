"""Word-oriented linear transformation shift registers (TSRs) over GF(2).

A TSR with word size ``m`` and ``n`` words holds ``(v_0, ..., v_{n-1})`` and
steps to ``(v_1, ..., v_{n-1}, T(a_0 v_0 + ... + a_{n-1} v_{n-1}))``.  Words
are ``m``-bit ints; ``S`` is an ``n``-bit int with bit ``i`` equal to ``a_i``.
The flattened state puts word ``i`` at bits ``i*m .. i*m + m - 1``.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from . import mat2
from .extfield import PolyExt, make_field, poly_ext_irreducible
from .intfactor import FactoringError, factor_mersenne
from .mat2 import MatF2
from .poly2 import PolyF2, _powmod, homogeneous_compose, is_irreducible, is_primitive

__all__ = [
    'PERIOD_GUARD_BITS',
    'CandidateReport',
    'GenerationError',
    'GuardError',
    'NotACandidateError',
    'Stepper',
    'TsrSpec',
    'TsrState',
    'brute_period',
    'candidate_irreducible',
    'candidate_poly_ext',
    'candidate_primitive',
    'galois_matrix',
    'galois_step',
    'generate',
    'generate_seeded',
    'keystream',
    'random_primitive_T',
    'search_attempt',
    'tsr_charpoly',
    'tsr_step',
]

PERIOD_GUARD_BITS = 28


class NotACandidateError(ValueError):
    """a_0 = 0: f_S and x^n share the factor x."""


class GuardError(RuntimeError):
    """A cost guard would be exceeded."""


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class TsrSpec:
    m: int
    n: int
    T: MatF2
    S: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError('m and n must be positive')
        if self.T.shape != (self.m, self.m):
            raise ValueError(f'T has shape {self.T.shape}, expected {(self.m, self.m)}')
        if not 0 <= self.S < (1 << self.n):
            raise ValueError(f'S={self.S:#x} does not fit in {self.n} bits')

    @cached_property
    def fT(self):
        return mat2.charpoly(self.T)

    @property
    def fS(self):
        return PolyF2(self.S)

    @property
    def taps(self):
        return [i for i in range(self.n) if (self.S >> i) & 1]

    @cached_property
    def T_transpose(self):
        return self.T.transpose()

    @property
    def nbits(self):
        return self.m * self.n


@dataclass(frozen=True)
class TsrState:
    words: tuple
    m: int

    def __post_init__(self):
        words = tuple(self.words)
        object.__setattr__(self, 'words', words)
        for w in words:
            if not 0 <= w < (1 << self.m):
                raise ValueError(f'word {w:#x} does not fit in {self.m} bits')

    @property
    def n(self):
        return len(self.words)

    def flatten(self):
        x = 0
        for i, w in enumerate(self.words):
            x |= w << (i * self.m)
        return x

    @classmethod
    def from_flat(cls, x, m, n):
        if not 0 <= x < (1 << (m * n)):
            raise ValueError(f'state {x:#x} does not fit in {m * n} bits')
        mask = (1 << m) - 1
        return cls(tuple((x >> (i * m)) & mask for i in range(n)), m)

    def __bool__(self):
        return any(self.words)


def _check_dims(spec, state):
    if state.m != spec.m or state.n != spec.n:
        raise ValueError(
            f'state is {state.n} words of {state.m} bits, spec wants {spec.n} x {spec.m}')


def tsr_step(spec, state):
    """One external-xor step; the evicted word is ``state.words[0]``."""
    _check_dims(spec, state)
    acc = 0
    for i in spec.taps:
        acc ^= state.words[i]
    return TsrState(state.words[1:] + (mat2.apply(spec.T, acc),), spec.m)


def galois_step(spec, state):
    """One internal-xor step: the transpose of the external-xor step matrix.

    ``w_0 = a_0 T' v_{n-1}`` and ``w_j = v_{j-1} + a_j T' v_{n-1}``, where
    ``T'`` is the transpose of ``T``.  The fed-back word is xored into every
    tapped position instead of collecting the taps into one sum.
    """
    _check_dims(spec, state)
    fb = mat2.apply(spec.T_transpose, state.words[-1])
    out = (0,) + state.words[:-1]
    out = tuple(w ^ fb if (spec.S >> j) & 1 else w for j, w in enumerate(out))
    return TsrState(out, spec.m)


def galois_matrix(spec):
    return mat2.block_tsr_matrix(spec.T, spec.S, spec.n).transpose()


def tsr_charpoly(spec):
    """``f_S**m * f_T(x**n / f_S)`` computed as a homogeneous composition."""
    return homogeneous_compose(spec.fT, spec.fS, PolyF2(1 << spec.n))


# -- fast stepping ------------------------------------------------------------

def _byte_tables(images, nbits):
    """Tables for a GF(2)-linear map given the images of the unit vectors."""
    tables = []
    for k in range(0, nbits, 8):
        chunk = images[k:k + 8]
        tbl = [0] * (1 << len(chunk))
        for b in range(1, len(tbl)):
            low = (b & -b).bit_length() - 1
            tbl[b] = tbl[b & (b - 1)] ^ chunk[low]
        tables.append(tbl)
    return tables


class Stepper:
    """Table-driven stepping on the flattened state.

    ``galois=False`` steps the external-xor register, ``galois=True`` the
    internal-xor one.  Results agree with :func:`tsr_step` and
    :func:`galois_step`.
    """

    def __init__(self, spec, galois=False):
        self.spec = spec
        self.galois = galois
        m, n = spec.m, spec.n
        self._shift = m
        self._top = (n - 1) * m
        self._wmask = (1 << m) - 1
        if galois:
            M = galois_matrix(spec)
            cols = M.transpose().rows
            self._tables = _byte_tables(list(cols), m * n)
        else:
            # feedback word as a linear function of the whole flattened state
            tcols = spec.T.transpose().rows
            images = []
            for i in range(n):
                a = (spec.S >> i) & 1
                images.extend(tcols[r] if a else 0 for r in range(m))
            self._tables = _byte_tables(images, m * n)

    def _lin(self, x):
        acc = 0
        for tbl in self._tables:
            acc ^= tbl[x & 0xFF]
            x >>= 8
        return acc

    def step(self, x):
        if self.galois:
            return self._lin(x)
        return (x >> self._shift) | (self._lin(x) << self._top)

    def run(self, x, count, emit=None):
        """Advance ``count`` steps; ``emit`` receives each evicted word."""
        if self.galois:
            for _ in range(count):
                x = self._lin(x)
            return x
        shift, top, wmask, lin = self._shift, self._top, self._wmask, self._lin
        for _ in range(count):
            if emit is not None:
                emit(x & wmask)
            x = (x >> shift) | (lin(x) << top)
        return x


def brute_period(spec, start, force=False, guard_bits=PERIOD_GUARD_BITS):
    """Least ``t >= 1`` with ``step**t(start) == start``, by stepping."""
    _check_dims(spec, start)
    if not start:
        raise ValueError('the zero state is a fixed point')
    if spec.nbits > guard_bits and not force:
        raise GuardError(f'm*n = {spec.nbits} exceeds the period guard {guard_bits}')
    stepper = Stepper(spec)
    x0 = start.flatten()
    bound = 1 << spec.nbits
    x = stepper.step(x0)
    t = 1
    step = stepper.step
    while x != x0:
        x = step(x)
        t += 1
        if t >= bound:
            # the start state is not on a cycle (singular step matrix)
            raise ValueError('start state is not periodic')
    return t


def keystream(spec, state, count):
    """Emit ``count`` evicted words, ``ceil(m/8)`` little-endian bytes each.

    Returns ``(bytes, final_state)``.
    """
    _check_dims(spec, state)
    nbytes = (spec.m + 7) // 8
    out = bytearray()
    stepper = Stepper(spec)
    x = stepper.run(state.flatten(), count,
                    emit=lambda w: out.extend(w.to_bytes(nbytes, 'little')))
    return bytes(out), TsrState.from_flat(x, spec.m, spec.n)


# -- candidates ---------------------------------------------------------------

@dataclass
class CandidateReport:
    fS: PolyF2
    fT: PolyF2
    Q: PolyF2
    irreducible: bool
    primitive: bool | None = None
    skipped_primes: list = field(default_factory=list)
    tested_primes: list = field(default_factory=list)


def candidate_poly_ext(spec, L=None):
    """``x**n - alpha * f_S`` over L = GF(2)[x]/(f_T), alpha the class of x."""
    L = L or make_field(spec.fT)
    alpha = L.alpha.rep
    coeffs = [alpha if (spec.S >> i) & 1 else 0 for i in range(spec.n)] + [1]
    return PolyExt(L, coeffs)


def candidate_irreducible(spec):
    """Irreducibility of the TSR characteristic polynomial, decided over L.

    Reducible ``f_T`` answers False at once: every factor of ``f_T`` gives a
    factor of the composition.
    """
    if not is_irreducible(spec.fT):
        return False
    if not spec.S & 1:
        raise NotACandidateError('a_0 = 0: f_S and x^n are not coprime, not a candidate')
    return poly_ext_irreducible(candidate_poly_ext(spec))


def candidate_primitive(spec, k_fact, l_fact, skip_l_primes=True):
    """Primitivity of ``Q`` for an irreducible candidate.

    Primes dividing ``|L*| = 2^m - 1`` are skipped when ``f_T`` is
    primitive: the root of ``Q`` then already has full order on that part.
    A non-primitive ``f_T`` gives a non-primitive ``Q`` with no powering.
    """
    m, n = spec.m, spec.n
    if k_fact.value != (1 << (m * n)) - 1:
        raise FactoringError(f'K factorization is for {k_fact.value}, not 2^{m * n} - 1')
    if l_fact.value != (1 << m) - 1:
        raise FactoringError(f'L factorization is for {l_fact.value}, not 2^{m} - 1')
    k_fact.check()
    if not candidate_irreducible(spec):
        raise ValueError('candidate is not irreducible')
    Q = tsr_charpoly(spec)
    report = CandidateReport(spec.fS, spec.fT, Q, irreducible=True)
    if not is_primitive(spec.fT, l_fact):
        report.primitive = False
        return report
    order = k_fact.value
    for p in k_fact.primes:
        if skip_l_primes and l_fact.value % p == 0:
            report.skipped_primes.append(p)
        else:
            report.tested_primes.append(p)
    report.primitive = all(_powmod(2, order // p, Q.value) != 1 for p in report.tested_primes)
    return report


# -- generation ---------------------------------------------------------------

def random_primitive_T(m, rng, fact_m=None, max_trials=10_000):
    """Companion matrix of a random primitive polynomial, randomly conjugated.

    Not uniform over primitive matrices; only primitivity is guaranteed.
    """
    fact_m = fact_m or factor_mersenne(m)
    for _ in range(max_trials):
        f = PolyF2((1 << m) | (rng.getrandbits(m - 1) << 1 if m > 1 else 0) | 1)
        if is_irreducible(f) and is_primitive(f, fact_m):
            P = mat2.random_invertible(m, rng)
            T = mat2.conjugate(mat2.companion(f), P)
            assert mat2.charpoly(T) == f
            return T
    raise GenerationError(f'no primitive polynomial of degree {m} in {max_trials} trials')


def _random_S(n, rng):
    return 1 | (rng.getrandbits(n - 1) << 1 if n > 1 else 0)


def _try_T(m, n, T, rng, retries, k_fact, l_fact):
    for _ in range(retries):
        spec = TsrSpec(m, n, T, _random_S(n, rng))
        if not candidate_irreducible(spec):
            continue
        report = candidate_primitive(spec, k_fact, l_fact)
        if report.primitive:
            return spec, report
    return None


def _facts(m, n, k_fact, l_fact):
    return (k_fact or factor_mersenne(m * n)), (l_fact or factor_mersenne(m))


def generate(m, n, rng, retries_per_T=None, k_fact=None, l_fact=None, max_T=10_000):
    """Search for a TSR whose characteristic polynomial is primitive.

    Draw a primitive ``T``, then try ``retries_per_T`` random ``S`` (with
    ``a_0 = 1``) against it before drawing a new ``T``.  Returns
    ``(spec, report)``.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    k_fact, l_fact = _facts(m, n, k_fact, l_fact)
    retries = retries_per_T or 4 * m
    for _ in range(max_T):
        T = random_primitive_T(m, rng, l_fact)
        found = _try_T(m, n, T, rng, retries, k_fact, l_fact)
        if found:
            return found
    raise GenerationError(f'no primitive TSR found for m={m}, n={n} after {max_T} transformations')


def search_attempt(m, n, seed, index, retries_per_T=None, k_fact=None, l_fact=None):
    """Attempt ``index`` of the seeded search: one T, several S.

    The attempt's PRNG is ``random.Random(f'{seed}:{index}')``, so each
    attempt is reproducible on its own.  Returns ``(spec, report)`` or None.
    """
    k_fact, l_fact = _facts(m, n, k_fact, l_fact)
    rng = random.Random(f'{seed}:{index}')
    T = random_primitive_T(m, rng, l_fact)
    return _try_T(m, n, T, rng, retries_per_T or 4 * m, k_fact, l_fact)


def _attempt_star(args):
    return search_attempt(*args)


def generate_seeded(m, n, seed, jobs=1, retries_per_T=None, k_fact=None, l_fact=None,
                    max_attempts=10_000):
    """Seeded search whose result does not depend on ``jobs``.

    Attempts run in rounds of ``jobs``; attempt ``k`` goes to worker
    ``k mod jobs`` and the lowest-numbered successful attempt wins.
    """
    k_fact, l_fact = _facts(m, n, k_fact, l_fact)
    args = lambda k: (m, n, seed, k, retries_per_T, k_fact, l_fact)
    if jobs <= 1:
        for k in range(max_attempts):
            found = search_attempt(*args(k))
            if found:
                return found
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for base in range(0, max_attempts, jobs):
                batch = [args(k) for k in range(base, min(base + jobs, max_attempts))]
                for found in pool.map(_attempt_star, batch):
                    if found:
                        return found
    raise GenerationError(f'no primitive TSR found for m={m}, n={n} in {max_attempts} attempts')

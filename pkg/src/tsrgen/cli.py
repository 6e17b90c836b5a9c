"""Command-line front end: ``tsrgen <command> ...``.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 internal limit (factoring or cost guard).
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import mat2, specfile
from .intfactor import (
    FactoringError,
    factor_mersenne,
    parse_factorization,
    phi_ratio,
    primitivity_prob,
)
from .poly2 import is_irreducible, is_primitive
from .tsr import (
    GenerationError,
    GuardError,
    NotACandidateError,
    Stepper,
    TsrSpec,
    TsrState,
    brute_period,
    candidate_irreducible,
    candidate_primitive,
    generate_seeded,
    keystream,
    random_primitive_T,
    tsr_charpoly,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
ORACLE_MAX_BITS = 24


class UsageError(Exception):
    pass


def _facts(args, m, n):
    k_fact = parse_factorization(args.factor_k) if args.factor_k else factor_mersenne(m * n)
    l_fact = parse_factorization(args.factor_l) if args.factor_l else factor_mersenne(m)
    if k_fact.value != (1 << (m * n)) - 1:
        raise UsageError(f'--factor-k must factor 2^{m * n} - 1')
    if l_fact.value != (1 << m) - 1:
        raise UsageError(f'--factor-l must factor 2^{m} - 1')
    return k_fact, l_fact


def _start_state(args, spec):
    x = int(args.start, 16) if args.start else 1
    try:
        return TsrState.from_flat(x, spec.m, spec.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_generate(args, out):
    if args.m < 1 or args.n < 1:
        raise UsageError('-m and -n must be positive')
    k_fact, l_fact = _facts(args, args.m, args.n)
    spec, report = generate_seeded(args.m, args.n, args.seed, jobs=args.jobs,
                                   retries_per_T=args.retries, k_fact=k_fact, l_fact=l_fact)
    text = specfile.dumps(spec)
    if args.out:
        with open(args.out, 'w') as fh:
            fh.write(text)
    else:
        out.write(text)
    out.write(f'# Q={report.Q.hex()}\n')
    out.write(f'# skipped primes: {" ".join(map(str, report.skipped_primes)) or "none"}\n')
    return EXIT_OK


def cmd_verify(args, out):
    with open(args.file) as fh:
        spec, stored_q = specfile.loads_unchecked(fh.read())
    results = []
    if stored_q is not None:
        results.append(('Q matches stored value', stored_q == tsr_charpoly(spec)))
    fT = spec.fT
    results.append(('f_T irreducible', is_irreducible(fT)))
    try:
        irreducible = candidate_irreducible(spec)
    except NotACandidateError as exc:
        results.append((f'candidate ({exc})', False))
        irreducible = False
    else:
        results.append(('candidate (a_0 = 1)', True))
        results.append(('Q irreducible', irreducible))
    if irreducible:
        k_fact, l_fact = _facts(args, spec.m, spec.n)
        results.append(('f_T primitive', is_primitive(fT, l_fact)))
        report = candidate_primitive(spec, k_fact, l_fact)
        results.append(('Q primitive', bool(report.primitive)))
    for name, ok in results:
        out.write(f'{"PASS" if ok else "FAIL"}  {name}\n')
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def cmd_period(args, out):
    spec = specfile.load(args.file)
    out.write(f'{brute_period(spec, _start_state(args, spec), force=args.force)}\n')
    return EXIT_OK


def cmd_stream(args, out):
    spec = specfile.load(args.file)
    if args.words < 0:
        raise UsageError('--words must be nonnegative')
    data, _ = keystream(spec, _start_state(args, spec), args.words)
    if args.out:
        with open(args.out, 'wb') as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_charpoly(args, out):
    spec = specfile.load(args.file)
    Q = tsr_charpoly(spec)
    out.write(f'{Q.hex()}\n')
    if spec.nbits <= ORACLE_MAX_BITS:
        oracle = mat2.charpoly(mat2.block_tsr_matrix(spec.T, spec.S, spec.n))
        if oracle != Q:
            out.write(f'matrix oracle DISAGREES: {oracle.hex()}\n')
            return EXIT_FAIL
        out.write('matrix oracle agrees\n')
    return EXIT_OK


def cmd_prob(args, out):
    k_fact, l_fact = _facts(args, args.m, args.n)
    p = primitivity_prob(args.m, args.n, k_fact, l_fact)
    out.write(f'{p:.3f}\n')
    out.write(f'phi(2^{args.m * args.n}-1)/(2^{args.m * args.n}-1) = {float(phi_ratio(k_fact)):.3f}\n')
    out.write(f'phi(2^{args.m}-1)/(2^{args.m}-1) = {float(phi_ratio(l_fact)):.3f}\n')
    return EXIT_OK


def cmd_bench(args, out):
    rng = random.Random(args.seed)
    T = random_primitive_T(args.m, rng)
    spec = TsrSpec(args.m, args.n, T, 1 | (rng.getrandbits(args.n - 1) << 1 if args.n > 1 else 0))
    for name, galois in (('external-xor', False), ('internal-xor', True)):
        stepper = Stepper(spec, galois=galois)
        t0 = time.perf_counter()
        stepper.run(1, args.steps)
        dt = time.perf_counter() - t0
        out.write(f'{name}: {args.steps / dt if dt else float("inf"):.0f} steps/s\n')
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog='tsrgen', description='Primitive word-oriented TSRs over GF(2).')
    sub = p.add_subparsers(dest='command', required=True)

    def factor_opts(sp):
        sp.add_argument('--factor-k', help='factorization of 2^(mn)-1, "N = p^e * ..."')
        sp.add_argument('--factor-l', help='factorization of 2^m-1, "N = p^e * ..."')

    g = sub.add_parser('generate', help='search for a primitive TSR')
    g.add_argument('-m', type=int, required=True)
    g.add_argument('-n', type=int, required=True)
    g.add_argument('--seed', type=int, required=True)
    g.add_argument('--out')
    g.add_argument('--jobs', type=int, default=1)
    g.add_argument('--retries', type=int, default=None, help='S draws per T (default 4m)')
    factor_opts(g)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser('verify', help='recheck irreducibility and primitivity')
    v.add_argument('file')
    factor_opts(v)
    v.set_defaults(func=cmd_verify)

    pe = sub.add_parser('period', help='brute-force period')
    pe.add_argument('file')
    pe.add_argument('--start', help='flattened start state in hex (default 0x1)')
    pe.add_argument('--force', action='store_true')
    pe.set_defaults(func=cmd_period)

    s = sub.add_parser('stream', help='emit keystream bytes')
    s.add_argument('file')
    s.add_argument('--words', type=int, required=True)
    s.add_argument('--start')
    s.add_argument('--out')
    s.set_defaults(func=cmd_stream)

    c = sub.add_parser('charpoly', help='print the characteristic polynomial')
    c.add_argument('file')
    c.set_defaults(func=cmd_charpoly)

    pr = sub.add_parser('prob', help='heuristic primitivity probability')
    pr.add_argument('-m', type=int, required=True)
    pr.add_argument('-n', type=int, required=True)
    factor_opts(pr)
    pr.set_defaults(func=cmd_prob)

    b = sub.add_parser('bench', help='stepping throughput')
    b.add_argument('-m', type=int, required=True)
    b.add_argument('-n', type=int, required=True)
    b.add_argument('--steps', type=int, default=100_000)
    b.add_argument('--seed', type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BrokenPipeError:
        sys.stderr.close()
        return EXIT_OK
    except (GuardError, FactoringError, GenerationError) as exc:
        print(f'tsrgen: limit: {exc}', file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, ValueError, OSError) as exc:
        print(f'tsrgen: error: {exc}', file=sys.stderr)
        return EXIT_USAGE


run = main

if __name__ == '__main__':
    sys.exit(main())

"""Text encoding of a TSR spec.

One ``key=value`` per line::

    m=8
    n=2
    T=0x2,0x4,...          # m hex row words, bit c of row r = T[r][c]
    S=0x3                  # bit i = a_i
    Q=0x1...               # optional; recomputed and checked on load

``T=companion:<hex poly>`` is accepted in place of the row list.  Blank
lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from . import mat2
from .mat2 import MatF2
from .poly2 import parse as parse_poly
from .tsr import TsrSpec, tsr_charpoly

__all__ = ['SpecFormatError', 'dump', 'dumps', 'load', 'loads', 'loads_unchecked']


class SpecFormatError(ValueError):
    pass


def dumps(spec, include_q=True):
    lines = [f'm={spec.m}', f'n={spec.n}', f'T={spec.T.to_hex()}', f'S={spec.S:#x}']
    if include_q:
        lines.append(f'Q={tsr_charpoly(spec).hex()}')
    return '\n'.join(lines) + '\n'


def loads(text):
    spec, stored_q = loads_unchecked(text)
    if stored_q is not None:
        actual = tsr_charpoly(spec)
        if stored_q != actual:
            raise SpecFormatError(f'stored Q={stored_q.hex()} but the spec gives {actual.hex()}')
    return spec


def loads_unchecked(text):
    """Parse without checking Q; returns ``(spec, stored Q or None)``."""
    kv = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        key = key.strip()
        if not sep or key not in ('m', 'n', 'T', 'S', 'Q'):
            raise SpecFormatError(f'line {lineno}: expected m=, n=, T=, S= or Q=, got {raw!r}')
        if key in kv:
            raise SpecFormatError(f'line {lineno}: duplicate key {key}')
        kv[key] = value.strip()
    missing = [k for k in ('m', 'n', 'T', 'S') if k not in kv]
    if missing:
        raise SpecFormatError(f'missing keys: {", ".join(missing)}')
    try:
        m, n = int(kv['m']), int(kv['n'])
        tval = kv['T']
        if tval.startswith('companion:'):
            f = parse_poly(tval[len('companion:'):])
            if f.degree != m:
                raise SpecFormatError(f'companion polynomial has degree {f.degree}, expected m={m}')
            T = mat2.companion(f)
        else:
            T = MatF2.from_hex(tval, m)
        spec = TsrSpec(m, n, T, int(kv['S'], 16))
    except SpecFormatError:
        raise
    except ValueError as exc:
        raise SpecFormatError(str(exc)) from exc
    q = None
    if 'Q' in kv:
        try:
            q = parse_poly(kv['Q'])
        except ValueError as exc:
            raise SpecFormatError(f'bad Q: {exc}') from exc
    return spec, q


def load(path):
    with open(path) as fh:
        return loads(fh.read())


def dump(spec, path, include_q=True):
    with open(path, 'w') as fh:
        fh.write(dumps(spec, include_q))


"""Maximal-period word-oriented linear transformation shift registers over GF(2)."""

from .extfield import ExtElem, ExtField, PolyExt, make_field
from .intfactor import (
    Factorization,
    factor,
    factor_mersenne,
    phi_ratio,
    primitivity_prob,
)
from .mat2 import MatF2
from .poly2 import PolyF2
from .tsr import (
    CandidateReport,
    TsrSpec,
    TsrState,
    brute_period,
    candidate_irreducible,
    candidate_primitive,
    galois_step,
    generate,
    generate_seeded,
    keystream,
    tsr_charpoly,
    tsr_step,
)

__all__ = [
    'CandidateReport', 'ExtElem', 'ExtField', 'Factorization', 'MatF2', 'PolyExt', 'PolyF2',
    'TsrSpec', 'TsrState', 'brute_period', 'candidate_irreducible', 'candidate_primitive',
    'factor', 'factor_mersenne', 'galois_step', 'generate', 'generate_seeded', 'keystream',
    'make_field', 'phi_ratio', 'primitivity_prob', 'tsr_charpoly', 'tsr_step',
]

__version__ = '0.1.0'

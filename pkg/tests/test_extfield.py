import random

import pytest
from oracles import field_mul_table, order_of_x

from tsrgen.extfield import (
    FieldMismatchError,
    PolyExt,
    count_distinct_irreducible_factors_ext,
    index_of,
    make_field,
    norm_poly,
    order_of,
    poly_ext_irreducible,
    poly_ext_powmod,
)
from tsrgen.intfactor import factor_mersenne
from tsrgen.poly2 import PolyF2, count_distinct_irreducible_factors, is_irreducible

F4 = make_field(0b111)
W = F4.alpha
# one irreducible modulus per small degree
MODULI = {2: 0b111, 3: 0b1011, 4: 0x13}


def rand_poly_ext(rng, L, deg, monic=True):
    cs = [rng.randrange(L.order) for _ in range(deg)] + [1 if monic else rng.randrange(1, L.order)]
    return PolyExt(L, cs)


def test_make_field():
    assert W * W == W + 1
    F16 = make_field(0x13)
    assert F16.order_star == 15 and F16.m == 4
    with pytest.raises(ValueError):
        make_field(0b101)


def test_f4_arithmetic():
    assert W * W == F4(0b11)
    assert W ** 3 == 1
    table = field_mul_table(0b111)
    assert [b for b in range(4) if table[(W.rep, b)] == 1] == [0b11]
    assert W.inv() == F4(0b11)
    with pytest.raises(ZeroDivisionError):
        F4.zero.inv()
    with pytest.raises(FieldMismatchError):
        W * make_field(0b1011).alpha


@pytest.mark.parametrize('mod', [0b111, 0b1011, 0b1101, 0x13, 0x1F, 0x11B])
def test_mul_matches_table_and_lagrange(mod):
    L = make_field(mod)
    table = field_mul_table(mod) if L.m <= 4 else None
    for x in L.elements():
        if table:
            for y in L.elements():
                assert (x * y).rep == table[(x.rep, y.rep)]
        if x:
            assert x ** L.order_star == 1
            assert x * x.inv() == 1


def test_index_of():
    fact2 = factor_mersenne(2)
    assert index_of(F4.one, fact2) == 3
    assert index_of(W, fact2) == 1
    L = make_field(0x1F)
    assert order_of_x(0x1F) == 5
    assert index_of(L.alpha, factor_mersenne(4)) == 3
    with pytest.raises(ZeroDivisionError):
        index_of(F4.zero, fact2)


def test_order_matches_brute_force():
    L = make_field(0x11D)
    fact = factor_mersenne(8)
    for x in L.elements()[1:]:
        y, t = x, 1
        while y != 1:
            y, t = y * x, t + 1
        assert order_of(x, fact) == t


def test_frobenius_fixes_exactly_prime_subfield():
    for mod in (0b111, 0b1011):
        L = make_field(mod)
        fixed = [x.rep for x in L.elements() if x.frobenius() == x]
        assert fixed == [0, 1]


def test_poly_ext_irreducible_examples():
    # no root in F4, degree 2
    h = PolyExt(F4, [W, W, 1])
    assert all(h(x) != 0 for x in F4.elements())
    assert poly_ext_irreducible(h)
    assert not poly_ext_irreducible(PolyExt(F4, [1, 0, 1]))
    for c in F4.elements():
        assert poly_ext_irreducible(PolyExt(F4, [c, 1]))
    with pytest.raises(ValueError):
        poly_ext_irreducible(PolyExt(F4, [W]))


def test_poly_ext_irreducible_degree_2_3_by_roots():
    # degree <= 3 over L: irreducible iff no root in L
    rng = random.Random(1)
    for mod in MODULI.values():
        L = make_field(mod)
        for _ in range(150):
            h = rand_poly_ext(rng, L, rng.choice([2, 3]))
            has_root = any(h(x) == 0 for x in L.elements())
            assert poly_ext_irreducible(h) == (not has_root)


def test_norm_examples():
    assert norm_poly(PolyExt(F4, [W, 1])) == 0b111
    assert norm_poly(PolyExt(F4, [W, W, 1])) == 0b11001
    for mod in MODULI.values():
        L = make_field(mod)
        h = PolyF2(0b1101)
        assert norm_poly(PolyExt.embed(L, h)) == h ** L.m


def test_norm_multiplicative():
    rng = random.Random(2)
    for mod in MODULI.values():
        L = make_field(mod)
        for _ in range(40):
            a = rand_poly_ext(rng, L, rng.randint(0, 4), monic=False)
            b = rand_poly_ext(rng, L, rng.randint(0, 4), monic=False)
            na, nb = norm_poly(a), norm_poly(b)
            assert norm_poly(a * b) == na * nb
            assert na.degree == L.m * a.degree


def test_norm_of_irreducible():
    # coefficients generating L: norm irreducible; coefficients in GF(2): norm = h^m
    rng = random.Random(3)
    for m, mod in MODULI.items():
        L = make_field(mod)
        hits = 0
        while hits < 20:
            h = rand_poly_ext(rng, L, rng.randint(1, 4))
            if not poly_ext_irreducible(h):
                continue
            if any(c.rep > 1 for c in h.coeffs):
                gen = any(_generates(c, L) for c in h.coeffs)
                if gen:
                    assert is_irreducible(norm_poly(h))
                    hits += 1
            else:
                assert norm_poly(h) == h.to_f2() ** m


def _generates(c, L):
    # not in any proper subfield
    return all(c.frobenius(d) != c for d in range(1, L.m) if L.m % d == 0)


def test_norm_of_gf2_irreducible_stays_power():
    for m, mod in MODULI.items():
        L = make_field(mod)
        h = PolyExt.embed(L, 0b1011)  # x^3 + x + 1
        if poly_ext_irreducible(h):
            assert norm_poly(h) == PolyF2(0b1011) ** m


def test_count_distinct_ext():
    assert count_distinct_irreducible_factors_ext(PolyExt(F4, [W, W, 1])) == 1
    assert count_distinct_irreducible_factors_ext(PolyExt(F4, [1, 0, 1])) == 1
    assert count_distinct_irreducible_factors_ext(PolyExt(F4, [0, 1, 1])) == 2
    with pytest.raises(ValueError):
        count_distinct_irreducible_factors_ext(PolyExt(F4, []))


def test_count_distinct_ext_against_roots():
    # products of linear factors: count = number of distinct roots
    rng = random.Random(4)
    for mod in MODULI.values():
        L = make_field(mod)
        for _ in range(30):
            roots = [rng.randrange(L.order) for _ in range(rng.randint(1, 5))]
            h = PolyExt(L, [1])
            for r in roots:
                h = h * PolyExt(L, [r, 1])
            assert count_distinct_irreducible_factors_ext(h) == len(set(roots))


def test_frobenius_power_identity():
    """mu^((q^n - 1)/(q - 1)) equals h(0) in L[x]/h, for irreducible monic h."""
    rng = random.Random(6)
    checked = 0
    for m, mod in MODULI.items():
        L = make_field(mod)
        q = L.order
        for n in range(1, 16 // m + 1):
            found = 0
            for _ in range(200):
                h = rand_poly_ext(rng, L, n)
                if not poly_ext_irreducible(h):
                    continue
                e = (q**n - 1) // (q - 1)
                r = poly_ext_powmod(PolyExt.x(L), e, h)
                assert r == PolyExt(L, [h.c[0]])
                found += 1
                if found == 5:
                    break
            checked += found
    assert checked > 20


def test_root_choice_invariance():
    """Irreducibility of x^n - beta f_S is the same for every conjugate beta."""
    rng = random.Random(7)
    for m, mod in MODULI.items():
        L = make_field(mod)
        for _ in range(20):
            n = rng.randint(2, 4)
            S = 1 | (rng.getrandbits(n - 1) << 1)
            verdicts = set()
            for k in range(m):
                beta = L.alpha.frobenius(k)
                cs = [beta.rep if (S >> i) & 1 else 0 for i in range(n)] + [1]
                verdicts.add(poly_ext_irreducible(PolyExt(L, cs)))
            assert len(verdicts) == 1


def test_f2_side_count_consistency():
    assert count_distinct_irreducible_factors(norm_poly(PolyExt(F4, [0, 1, 1]))) == 2

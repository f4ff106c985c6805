import random

import pytest

from qmds3 import gf
from qmds3.errors import (
    BadNormTarget,
    DimensionMismatch,
    DivisionByZero,
    EvenCharacteristic,
    NotPrime,
    TooLarge,
)

SMALL_Q = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)]


def field(p, r):
    return gf.make_field(p, r)


# -- construction -----------------------------------------------------------


def test_gf9_uses_smallest_primitive_modulus(gf9):
    # x^2 + x + 2 is the first monic primitive quadratic in encoding order
    assert gf9.modulus == (2, 1, 1)
    assert gf9.p == 3 and gf9.r == 1 and gf9.q == 3 and gf9.order == 9
    assert gf9.alpha == 3


def test_gf9_power_table(gf9):
    # alpha^2 = 2a+1, alpha^3 = 2a+2, alpha^4 = 2, alpha^5 = 2a,
    # alpha^6 = a+2, alpha^7 = a+1
    assert [gf9.alpha_pow(k) for k in range(8)] == [1, 3, 7, 8, 2, 6, 5, 4]


def test_even_characteristic_rejected():
    with pytest.raises(EvenCharacteristic):
        gf.make_field(2, 1)


def test_even_characteristic_allowed_when_requested():
    ctx = gf.make_field(2, 2, allow_even=True)
    assert ctx.order == 16 and ctx.q == 4


def test_not_prime_rejected():
    with pytest.raises(NotPrime):
        gf.make_field(9, 1)
    with pytest.raises(NotPrime):
        gf.make_field(1, 1)


def test_too_large_rejected():
    with pytest.raises(TooLarge):
        gf.make_field(3, 20)


def test_bad_exponent_rejected():
    with pytest.raises(ValueError):
        gf.make_field(3, 0)


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_alpha_order_is_exactly_group_order(p, r):
    ctx = field(p, r)
    order = next(k for k in range(1, ctx.order + 1) if ctx.pow(ctx.alpha, k) == 1)
    assert order == ctx.order - 1


def test_gf25_alpha_order_24(gf25):
    seen = set()
    x = 1
    for _ in range(24):
        seen.add(x)
        x = gf25.mul(x, gf25.alpha)
    assert x == 1 and len(seen) == 24


# -- arithmetic -------------------------------------------------------------


def test_mul_and_pow_match_gf9_presentation(gf9):
    assert gf9.mul(3, 3) == 7  # alpha * alpha = 2a + 1
    assert gf9.pow(3, 4) == 2  # alpha^4 = 2


def test_additive_inverses(gf9):
    for x in gf9.elements():
        assert gf9.add(x, gf9.neg(x)) == 0


def test_field_axioms_exhaustive_gf9(gf9):
    els = list(gf9.elements())
    for a in els:
        for b in els:
            assert gf9.add(a, b) == gf9.add(b, a)
            assert gf9.mul(a, b) == gf9.mul(b, a)
            for c in els[::2]:
                assert gf9.mul(a, gf9.add(b, c)) == gf9.add(gf9.mul(a, b), gf9.mul(a, c))
                assert gf9.add(a, gf9.add(b, c)) == gf9.add(gf9.add(a, b), c)


def test_inverse_and_division(gf25):
    for x in gf25.nonzero_elements():
        assert gf25.mul(x, gf25.inv(x)) == 1
    with pytest.raises(DivisionByZero):
        gf25.inv(0)


def test_pow_conventions(gf9):
    assert gf9.pow(0, 0) == 1
    assert gf9.pow(0, 5) == 0
    with pytest.raises(DivisionByZero):
        gf9.pow(0, -1)
    # exponents reduce mod q^2 - 1 for nonzero bases
    assert gf9.pow(3, 9) == gf9.pow(3, 1)
    assert gf9.pow(3, -1) == gf9.inv(3)


def test_coeffs_roundtrip(gf81):
    for x in gf81.elements():
        assert gf81.from_coeffs(gf81.coeffs(x)) == x
    assert gf81.from_int(-1) == 2
    assert gf81.from_int(7) == 1


# -- conjugation and norm ---------------------------------------------------


def test_conj_examples(gf9):
    assert gf9.conj(3) == 8  # alpha^3 = 2a + 2: the cube map on GF(9)
    assert gf9.conj(0) == 0
    assert gf9.conj(1) == 1


def test_conj_involution_gf25(gf25):
    for x in gf25.elements():
        assert gf25.conj(gf25.conj(x)) == x


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_conj_is_field_automorphism(p, r):
    ctx = field(p, r)
    els = list(ctx.elements())
    for a in els:
        for b in els:
            assert ctx.conj(ctx.mul(a, b)) == ctx.mul(ctx.conj(a), ctx.conj(b))
            assert ctx.conj(ctx.add(a, b)) == ctx.add(ctx.conj(a), ctx.conj(b))
        assert ctx.conj(ctx.conj(a)) == a


def test_norm_examples(gf9):
    assert gf9.norm(3) == 2  # alpha^4 = 2
    assert gf9.norm(1) == 1
    s = gf9.alpha_pow((gf9.q - 1) // 2)
    assert gf9.norm(s) == gf9.from_int(-1)


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_norm_lands_in_base_and_is_multiplicative(p, r):
    ctx = field(p, r)
    for x in ctx.elements():
        assert ctx.is_in_base(ctx.norm(x))
    rng = random.Random(7)
    for _ in range(200):
        a = rng.randrange(ctx.order)
        b = rng.randrange(ctx.order)
        assert ctx.norm(ctx.mul(a, b)) == ctx.mul(ctx.norm(a), ctx.norm(b))


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_norm_sum_over_nonzero_elements_is_zero(p, r):
    ctx = field(p, r)
    acc = 0
    for x in ctx.nonzero_elements():
        acc = ctx.add(acc, ctx.norm(x))
    assert acc == 0


def test_is_in_base(gf9, gf25):
    assert gf9.is_in_base(2)
    assert not gf9.is_in_base(3)
    assert sum(1 for x in gf25.elements() if gf25.is_in_base(x)) == 5


# -- norm preimages ---------------------------------------------------------


def test_norm_preimages_gf9_beta2(gf9):
    # oracle: exhaustive scan over the whole field
    expected = sorted(x for x in gf9.elements() if gf9.norm(x) == 2)
    got = gf9.norm_preimages(2)
    assert got == expected == [3, 4, 6, 8]


def test_norm_preimages_of_one_contains_plus_minus_one(gf25):
    pre = gf25.norm_preimages(1)
    assert 1 in pre and gf25.neg(1) in pre


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_norm_preimage_counts(p, r):
    ctx = field(p, r)
    for beta in ctx.nonzero_elements():
        if not ctx.is_in_base(beta):
            continue
        pre = ctx.norm_preimages(beta)
        assert len(pre) == ctx.q + 1
        assert pre == sorted(pre)
        assert all(ctx.norm(x) == beta for x in pre)
        assert len(pre) == sum(1 for x in ctx.elements() if ctx.norm(x) == beta)


def test_norm_preimages_rejects_bad_targets(gf9):
    with pytest.raises(BadNormTarget):
        gf9.norm_preimages(0)
    with pytest.raises(BadNormTarget):
        gf9.norm_preimages(3)  # alpha is outside GF(3)


# -- the Hermitian inner product --------------------------------------------


def test_hermitian_examples(gf9):
    assert gf.hermitian_ip(gf9, (1, 1, 1, 0), (0, 1, gf9.neg(1), 1)) == 0
    assert gf.hermitian_ip(gf9, (1,), (1,)) == 1
    vec = (1, 1, 3, 3, 0)
    assert gf.hermitian_ip(gf9, vec, vec) == 0


def test_hermitian_conjugate_symmetry(gf25):
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randrange(1, 9)
        xs = [rng.randrange(gf25.order) for _ in range(n)]
        ys = [rng.randrange(gf25.order) for _ in range(n)]
        assert gf.hermitian_ip(gf25, xs, ys) == gf25.conj(gf.hermitian_ip(gf25, ys, xs))


def test_hermitian_dimension_mismatch(gf9):
    with pytest.raises(DimensionMismatch):
        gf.hermitian_ip(gf9, (1, 2), (1,))


# -- display ----------------------------------------------------------------


def test_pretty_forms(gf9):
    assert gf9.pow_str(0) == "0"
    assert gf9.pow_str(1) == "1"
    assert gf9.pow_str(3) == "a"
    assert gf9.pow_str(7) == "a^2"
    assert gf9.poly_str(0) == "0"
    assert gf9.poly_str(7) == "1+2*x"

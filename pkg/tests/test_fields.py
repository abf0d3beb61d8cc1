"""Exact field arithmetic: axioms, root orders, specialization, parsing."""

from fractions import Fraction

import pytest

from orepi import FieldCtx, coeff_to_str, parse_coeff
from orepi.errors import (
    CtxMismatch,
    DenominatorVanishes,
    DivisionByZero,
    ParseError,
    UnassignedParameter,
    ZeroInput,
)
from orepi.fields import cyclotomic_polynomial, field_arith, root_of_unity_order

from conftest import random_coeff

N_AXIOM_CASES = 1000


def test_cyclotomic_polynomials_known_values():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]
    # prime p: all-ones of degree p-1
    assert cyclotomic_polynomial(7) == [1] * 7


def test_zeta4_squares_to_minus_one():
    c4 = FieldCtx.cyclotomic(4)
    z = c4.generator()
    assert z * z == -1


def test_rational_function_cross_multiplication_equality(rat_pq):
    q = rat_pq.param("q")
    assert (q ** 2 - 1) / (q - 1) == q + 1
    assert not (q ** 2 - 1) / (q - 1) == q - 1


def test_inverse_of_rational(QQ):
    v = QQ.from_fraction(Fraction(2, 3))
    assert v.inv() == QQ.from_fraction(Fraction(3, 2))
    assert field_arith("inv", v) == QQ.from_fraction(Fraction(3, 2))


def test_inv_zero_raises(QQ):
    with pytest.raises(DivisionByZero):
        QQ.zero().inv()


def test_ctx_mismatch(QQ, cyclo3):
    with pytest.raises(CtxMismatch):
        QQ.one() + cyclo3.one()


@pytest.mark.parametrize("make_ctx", [
    lambda: FieldCtx.rational(),
    lambda: FieldCtx.cyclotomic(5),
    lambda: FieldCtx.rational_functions(("p", "q")),
    lambda: FieldCtx.galois(7, (3, 1, 1)),  # x^2 + x + 3 over GF(7)
])
def test_field_axioms_randomized(make_ctx, rng):
    ctx = make_ctx()
    one = ctx.one()
    zero = ctx.zero()
    for _ in range(N_AXIOM_CASES):
        a = random_coeff(ctx, rng)
        b = random_coeff(ctx, rng)
        c = random_coeff(ctx, rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a and a * one == a
        assert a - a == zero
        if not a.is_zero():
            assert a * a.inv() == one


def test_root_of_unity_orders():
    c6 = FieldCtx.cyclotomic(6)
    z6 = c6.generator()
    assert root_of_unity_order(z6 ** 3) == 2
    assert root_of_unity_order(FieldCtx.rational().from_int(2)) is None
    assert root_of_unity_order(FieldCtx.rational().from_int(-1)) == 2
    c3 = FieldCtx.cyclotomic(3)
    # brute-force oracle: the least m <= 12 with (-z3)^m == 1
    mz3 = -c3.generator()
    orders = [m for m in range(1, 13) if (mz3 ** m).is_one()]
    assert orders[0] == 6
    assert root_of_unity_order(mz3) == 6


def test_root_of_unity_order_zero_input(QQ):
    with pytest.raises(ZeroInput):
        root_of_unity_order(QQ.zero())


def test_order_divisor_property(rng):
    ctx = FieldCtx.cyclotomic(12)
    for _ in range(40):
        k = rng.randrange(1, 13)
        a = ctx.root_of_unity(12) ** k
        m = root_of_unity_order(a)
        assert (a ** m).is_one()
        for d in range(1, m):
            if m % d == 0:
                assert not (a ** d).is_one()


def test_ratfunc_roots_of_unity_only_constants(rat_q):
    q = rat_q.param("q")
    assert root_of_unity_order(q) is None
    assert root_of_unity_order(rat_q.one()) == 1
    assert root_of_unity_order(-rat_q.one()) == 2
    assert root_of_unity_order((q + 1) / (q + 1)) == 1


def test_galois_every_nonzero_is_root_of_unity(rng):
    ctx = FieldCtx.galois(5, (2, 0, 1))  # x^2 + 2 irreducible over GF(5)
    for _ in range(30):
        a = random_coeff(ctx, rng)
        if a.is_zero():
            continue
        m = root_of_unity_order(a)
        assert m is not None and 24 % m == 0


def test_galois_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        FieldCtx.galois(3, (-1, 0, 1))  # x^2 - 1 = (x-1)(x+1)
    with pytest.raises(ValueError):
        FieldCtx.galois(2, (1, 1, 1, 1))  # x^3+x^2+x+1 has root 1


def test_galois_degree_bounds():
    with pytest.raises(ValueError):
        FieldCtx.galois(3, (1,) * 8)  # degree 7 > 6
    FieldCtx.galois(2, (1, 1, 0, 0, 0, 0, 1))  # x^6+x+1, irreducible


def test_specialize_examples(rat_pq, cyclo3):
    q = rat_pq.param("q")
    p = rat_pq.param("p")
    z3 = cyclo3.generator()
    expr = (q ** 2 - 1) / (q - 1)
    assert expr.specialize({"q": z3, "p": cyclo3.one()}, cyclo3) == z3 + 1
    assert q.specialize({"q": cyclo3.from_int(2), "p": cyclo3.one()},
                        cyclo3) == 2
    with pytest.raises(DenominatorVanishes):
        (rat_pq.one() / (q - p.inv())).specialize(
            {"q": z3, "p": z3.inv()}, cyclo3)
    with pytest.raises(UnassignedParameter):
        q.specialize({"q": z3}, cyclo3)


def test_specialize_is_homomorphism(rat_pq, cyclo12, rng):
    assign = {"p": cyclo12.root_of_unity(4), "q": cyclo12.root_of_unity(3)}
    for _ in range(60):
        a = random_coeff(rat_pq, rng)
        b = random_coeff(rat_pq, rng)
        try:
            sa = a.specialize(assign, cyclo12)
            sb = b.specialize(assign, cyclo12)
            sab = (a * b).specialize(assign, cyclo12)
            s_sum = (a + b).specialize(assign, cyclo12)
        except DenominatorVanishes:
            continue
        assert sab == sa * sb
        assert s_sum == sa + sb


def test_parser_examples(rat_q, cyclo3):
    assert parse_coeff("(q^2-1)/(q+1)", rat_q) == \
        (rat_q.param("q") ** 2 - 1) / (rat_q.param("q") + 1)
    assert parse_coeff("-1", cyclo3) == -cyclo3.one()
    assert parse_coeff("z3^2", cyclo3) == cyclo3.generator() ** 2
    c5 = FieldCtx.cyclotomic(5)
    assert parse_coeff("z5^2", c5) == c5.generator() ** 2
    with pytest.raises(ParseError):
        parse_coeff("q + ", rat_q)
    with pytest.raises(ParseError):
        parse_coeff("unknown_name", rat_q)


def test_parse_print_roundtrip(rng):
    for ctx in (FieldCtx.rational(), FieldCtx.cyclotomic(5),
                FieldCtx.rational_functions(("p", "q")),
                FieldCtx.galois(7, (3, 1, 1))):
        for _ in range(40):
            v = random_coeff(ctx, rng)
            assert parse_coeff(coeff_to_str(v), ctx) == v


def test_cyclotomic_embedded_roots():
    c6 = FieldCtx.cyclotomic(6)
    z3 = c6.root_of_unity(3)
    assert root_of_unity_order(z3) == 3
    assert root_of_unity_order(c6.root_of_unity(2)) == 2
    c5 = FieldCtx.cyclotomic(5)  # odd level: 10th roots exist
    z10 = c5.root_of_unity(10)
    assert root_of_unity_order(z10) == 10


def test_power_negative_exponent(rat_q):
    q = rat_q.param("q")
    assert q ** -2 == (q * q).inv()
    assert q ** 0 == rat_q.one()

"""q-calculus and the straightening-identity oracle corpus."""

import pytest

from orepi import (
    FieldCtx,
    NCPoly,
    build_family,
    check_paper_identity,
    gauss_binomial,
    multiply,
    normal_form,
    oracle_rhs,
    pq_number,
    q_factorial,
    q_number,
    spec_bh,
    spec_bqf,
    spec_hpq,
    spec_m2,
    spec_three_cyclic,
    spec_uqb2,
    spec_weyl,
)
from orepi.errors import FamilyMismatch, LemmaRangeError, QFactorialVanishes
from orepi.identities import (
    b_coeff,
    bqf_delta,
    c_a,
    c_coeff,
    cyc3_e,
    d_a,
    theta_element,
    weyl_z,
)

SMOKE_N = 4


def test_q_number_examples(rat_q, cyclo3, QQ):
    q = rat_q.param("q")
    assert q_number(0, q).is_zero()
    assert q_number(3, cyclo3.generator()).is_zero()
    assert q_number(4, QQ.one()) == QQ.from_int(4)
    assert q_number(3, q) == 1 + q + q * q


def test_q_number_recurrence(rat_q):
    q = rat_q.param("q")
    for k in range(8):
        assert q_number(k + 1, q) == 1 + q * q_number(k, q)


def test_pq_number_base_and_recurrence(rat_pq):
    p, q = rat_pq.param("p"), rat_pq.param("q")
    assert pq_number(1, p, q).is_one()
    for n in range(1, 9):
        assert pq_number(n + 1, p, q) == q ** n + p.inv() * pq_number(n, p, q)
    # fraction form agreement away from the singular locus
    for n in range(1, 7):
        assert pq_number(n, p, q) * (q - p.inv()) == q ** n - p.inv() ** n


def test_pq_number_at_p_equal_q_inverse(rat_q):
    # the q = p^-1 degeneration: [n] = n p^-(n-1) = n q^(n-1)
    q = rat_q.param("q")
    assert pq_number(3, q.inv(), q) == 3 * q ** 2


def test_pq_vanishing_lemma(cyclo12):
    p = cyclo12.root_of_unity(2)
    q = cyclo12.root_of_unity(3)
    assert pq_number(6, p, q).is_zero()
    # orders 4 and 6 divide 12
    assert pq_number(12, cyclo12.root_of_unity(4),
                     cyclo12.root_of_unity(6)).is_zero()


def test_q_factorial_and_binomial(rat_q, cyclo3):
    q = rat_q.param("q")
    assert q_factorial(3, q) == (1 + q) * (1 + q + q * q)
    assert gauss_binomial(2, 1, q) == \
        q_factorial(2, q) / (q_factorial(1, q) * q_factorial(1, q))
    assert gauss_binomial(2, 1, q) == 1 + q
    assert gauss_binomial(5, 0, q).is_one()
    # at q = z3 the numerator [3]! vanishes but the denominator does not
    assert gauss_binomial(3, 1, cyclo3.generator()).is_zero()
    # denominator [3]! [1]! vanishes at z3
    with pytest.raises(QFactorialVanishes):
        gauss_binomial(4, 3, cyclo3.generator())
    with pytest.raises(LemmaRangeError):
        gauss_binomial(2, 3, q)


def test_bc_coefficient_recurrences(rat_q):
    q = rat_q.param("q")
    q2, q2i = q * q, (q * q).inv()
    assert b_coeff(1, q).is_one()
    assert c_coeff(1, q).is_zero()
    for k in range(1, 7):
        assert b_coeff(k + 1, q) == q2 * b_coeff(k, q) + q2i ** k
        assert c_coeff(k + 1, q) == q2i * b_coeff(k, q) + c_coeff(k, q)
    # closed fraction forms away from roots of unity
    for k in range(1, 6):
        assert b_coeff(k, q) * (q ** 2 - q ** -2) == q ** (2 * k) - q ** (-2 * k)
    assert c_coeff(2, q) == q ** -2


def test_ca_da_recurrences(rat_q):
    q = rat_q.param("q")
    for a in range(1, 7):
        assert c_a(a + 1, q) == q ** (2 * a) + c_a(a, q)
        assert d_a(a + 1, q) == q ** (-2 * a) + d_a(a, q)


@pytest.fixture
def H(rat_pq):
    return build_family(spec_hpq(rat_pq, rat_pq.param("p"), rat_pq.param("q")))


def test_oracle_h_yxn_base_case(H, rat_pq):
    checks = oracle_rhs("H.yxn", H, 1)
    label, lhs, rhs = checks[0]
    assert normal_form(H, lhs) == rhs
    assert rhs == NCPoly({H.word("x", "y"): rat_pq.param("q"),
                          H.word("t"): rat_pq.one()})


def test_oracle_cyc3_display_form(rat_q):
    # a = 1 of the first 3-cyclic identity in its displayed orientation:
    # x y = q^2 y x + alpha
    ctx = FieldCtx.rational_functions(("q", "al", "be", "ga"))
    p = build_family(spec_three_cyclic(ctx, ctx.param("q"), ctx.param("al"),
                                       ctx.param("be"), ctx.param("ga")))
    q2 = ctx.param("q") ** 2
    lhs = normal_form(p, [(ctx.one(), p.word("x", "y"))])
    rhs = normal_form(p, [(q2, p.word("y", "x")), (ctx.param("al"), ())])
    assert lhs == rhs


def test_theta_element_closed_form(H, rat_pq):
    p_, q_ = rat_pq.param("p"), rat_pq.param("q")
    th = theta_element(H)
    assert th == NCPoly({H.word("x", "y"): q_ * (1 - p_ * q_),
                         H.word("t"): -(p_ * q_)})


def test_weyl_z_closed_form(rat_pq):
    lam = ((rat_pq.one(), rat_pq.param("p")),
           (rat_pq.param("p").inv(), rat_pq.one()))
    W = build_family(spec_weyl(rat_pq, (rat_pq.param("q"), rat_pq.param("q")),
                               lam))
    z1 = weyl_z(W, 1)
    assert z1 == NCPoly({(): rat_pq.one(),
                         W.word("y1", "x1"): rat_pq.param("q") - 1})


def test_bqf_delta_base_cases(rat_q):
    f = (rat_q.from_int(2), rat_q.one())  # f = 2 + t
    B = build_family(spec_bqf(rat_q, rat_q.param("q"), f))
    fv = NCPoly({(): rat_q.from_int(2), B.word("v"): rat_q.one()})
    fu = NCPoly({(): rat_q.from_int(2), B.word("u"): rat_q.one()})
    assert bqf_delta(B, B.word("u")) == fv
    assert bqf_delta(B, B.word("v")) == fu
    # derivation property on a product: delta(uv) = sigma(u) delta(v) + delta(u) v
    q = rat_q.param("q")
    lhs = bqf_delta(B, B.word("u", "v"))
    rhs = multiply(B, NCPoly.monomial(q, B.word("u")), fu) + \
        multiply(B, fv, NCPoly.monomial(rat_q.one(), B.word("v")))
    assert lhs == rhs


def test_uqb2_iv_range_guard(rat_q):
    U = build_family(spec_uqb2(rat_q, rat_q.param("q")))
    with pytest.raises(LemmaRangeError):
        check_paper_identity("UqB2.iv", U, 1)


def test_family_mismatch(H):
    with pytest.raises(FamilyMismatch):
        check_paper_identity("M2.k1", H, 3)
    with pytest.raises(FamilyMismatch):
        check_paper_identity("no.such", H, 3)


CORPUS = [
    ("H.yxn", "Hpq"), ("H.ynx", "Hpq"), ("H.theta_rel", "Hpq"),
    ("M2.k1", "M2"), ("M2.k2", "M2"), ("M2.power_table", "M2"),
    ("UqB2.i", "UqB2"), ("UqB2.ii", "UqB2"), ("UqB2.iii", "UqB2"),
    ("UqB2.iv", "UqB2"),
    ("Weyl.xky", "WeylMalt"), ("Weyl.xyk", "WeylMalt"),
    ("Weyl.zi_normal", "WeylMalt"),
    ("Cyc3.i", "ThreeCyclic"), ("Cyc3.ii", "ThreeCyclic"),
    ("Cyc3.iii", "ThreeCyclic"), ("Cyc3.iv", "ThreeCyclic"),
    ("Cyc3.v", "ThreeCyclic"), ("Cyc3.vi", "ThreeCyclic"),
    ("Cyc3.e_rel", "ThreeCyclic"),
    ("Bh.commute", "Bh"),
    ("Bqf.delta_uk", "Bqf"), ("Bqf.delta_vk", "Bqf"),
    ("Bqf.wuk", "Bqf"), ("Bqf.wvk", "Bqf"), ("Bqf.wku", "Bqf"),
]


def _presentation_for(family):
    if family == "Hpq":
        ctx = FieldCtx.rational_functions(("p", "q"))
        return build_family(spec_hpq(ctx, ctx.param("p"), ctx.param("q")))
    if family == "M2":
        ctx = FieldCtx.rational_functions(("alpha", "beta"))
        return build_family(spec_m2(ctx, ctx.param("alpha"),
                                    ctx.param("beta")))
    if family == "UqB2":
        ctx = FieldCtx.rational_functions(("q",))
        return build_family(spec_uqb2(ctx, ctx.param("q")))
    if family == "WeylMalt":
        ctx = FieldCtx.rational_functions(("q1", "q2", "l12"))
        lam = ((ctx.one(), ctx.param("l12")),
               (ctx.param("l12").inv(), ctx.one()))
        return build_family(spec_weyl(ctx, (ctx.param("q1"),
                                            ctx.param("q2")), lam))
    if family == "ThreeCyclic":
        ctx = FieldCtx.rational_functions(("q", "al", "be", "ga"))
        return build_family(spec_three_cyclic(ctx, ctx.param("q"),
                                              ctx.param("al"),
                                              ctx.param("be"),
                                              ctx.param("ga")))
    if family == "Bh":
        ctx = FieldCtx.rational_functions(("h",))
        return build_family(spec_bh(ctx, ctx.param("h")))
    ctx = FieldCtx.rational_functions(("q",))
    return build_family(spec_bqf(ctx, ctx.param("q"),
                                 (ctx.zero(), ctx.one(), ctx.one())))


@pytest.mark.parametrize("lemma,family", CORPUS)
def test_identity_corpus_smoke(lemma, family):
    p = _presentation_for(family)
    rep = check_paper_identity(lemma, p, SMOKE_N)
    assert rep.all_pass, [c for c in rep.checks if not c.ok]


def test_cyc3_e_relation(rat_q):
    ctx = FieldCtx.rational_functions(("q", "al", "be", "ga"))
    p = build_family(spec_three_cyclic(ctx, ctx.param("q"), ctx.param("al"),
                                       ctx.param("be"), ctx.param("ga")))
    e = cyc3_e(p)
    from orepi import q_commutator
    z = NCPoly.monomial(ctx.one(), p.word("z"))
    assert q_commutator(p, e, z, ctx.param("q") ** -2).is_zero()


def test_biquad3_instance_generation(cyclo12, rng):
    from orepi.identities import (biquad3_consistent_instance,
                                  biquad3_violating_instance)
    from orepi.presentations import biquad3_conditions
    for _ in range(5):
        spec = biquad3_consistent_instance(cyclo12, rng)
        assert all(v.is_zero() for _, v in biquad3_conditions(spec))
        bad = biquad3_violating_instance(cyclo12, rng)
        assert any(not v.is_zero() for _, v in biquad3_conditions(bad))

"""Family constructors, orientations, and the presentation data model."""

import pytest

from orepi import (
    FieldCtx,
    Presentation,
    RewriteRule,
    build_family,
    spec_bh,
    spec_biquad3,
    spec_bqf,
    spec_downup,
    spec_hpq,
    spec_m2,
    spec_quantum_plane,
    spec_three_cyclic,
    spec_uqb2,
    spec_weyl,
    validate_orientation,
)
from orepi.cli import presentation_from_json, presentation_to_json
from orepi.errors import (
    DownUpNotNoetherian,
    NonAntisymmetricLambda,
    ZeroParameter,
)
from orepi.presentations import biquad3_conditions


def lam2(ctx, l12):
    return ((ctx.one(), l12), (l12.inv(), ctx.one()))


def test_hpq_shape(rat_pq):
    p = build_family(spec_hpq(rat_pq, rat_pq.param("p"), rat_pq.param("q")))
    assert p.names == ("t", "x", "y")
    assert len(p.rules) == 3
    by_lhs = {r.lhs: r for r in p.rules}
    # x*t -> p t x ; y*t -> p^-1 t y ; y*x -> q x y + t
    assert by_lhs[p.word("x", "t")].rhs == ((rat_pq.param("p"), p.word("t", "x")),)
    assert by_lhs[p.word("y", "t")].rhs == ((rat_pq.param("p").inv(),
                                             p.word("t", "y")),)
    rhs = dict((w, c) for c, w in by_lhs[p.word("y", "x")].rhs)
    assert rhs[p.word("x", "y")] == rat_pq.param("q")
    assert rhs[p.word("t")] == rat_pq.one()


def test_m2_shape(rat_pq):
    a, b = rat_pq.param("p"), rat_pq.param("q")
    p = build_family(spec_m2(rat_pq, a, b))
    assert len(p.names) == 4 and len(p.rules) == 6


def test_uqb2_shape(rat_q):
    p = build_family(spec_uqb2(rat_q, rat_q.param("q")))
    assert p.names == ("z", "e3", "e1", "e2")
    assert len(p.rules) == 6


def test_downup_beta_zero_rejected(QQ):
    with pytest.raises(DownUpNotNoetherian):
        build_family(spec_downup(QQ, QQ.from_int(1), QQ.zero(), QQ.one()))


def test_downup_word_rules(QQ):
    p = build_family(spec_downup(QQ, QQ.from_int(2), QQ.from_int(-1),
                                 QQ.one()))
    assert sorted(r.lhs for r in p.rules) == \
        sorted([p.word("d", "u", "u"), p.word("d", "d", "u")])


def test_zero_parameter_rejected(QQ):
    with pytest.raises(ZeroParameter):
        build_family(spec_hpq(QQ, QQ.zero(), QQ.one()))


def test_lambda_antisymmetry_checked(QQ):
    bad = ((QQ.one(), QQ.from_int(2)), (QQ.from_int(3), QQ.one()))
    with pytest.raises(NonAntisymmetricLambda):
        build_family(spec_weyl(QQ, (QQ.from_int(2), QQ.from_int(3)), bad))


def test_validate_orientation_quantum_plane(rat_q):
    p = build_family(spec_quantum_plane(rat_q, rat_q.param("q")))
    assert all(ok for _, ok, _ in validate_orientation(p))


def test_validate_orientation_bqf_weights(rat_q):
    # weight(w) = deg f keeps the f-tails strictly below w*u
    f = (rat_q.zero(), rat_q.zero(), rat_q.zero(), rat_q.one())  # t^3
    p = build_family(spec_bqf(rat_q, rat_q.param("q"), f))
    assert p.weights == (1, 1, 3)
    assert all(ok for _, ok, _ in validate_orientation(p))


def test_validate_orientation_degree_raising_rule_fails(QQ):
    # x*y -> y*x*x has a degree-3 term above the degree-2 lhs
    names = ("x", "y")
    rule = RewriteRule((0, 1), [(QQ.one(), (1, 0, 0))])
    p = Presentation(QQ, names, (1, 1), names, [rule])
    report = validate_orientation(p)
    assert report[0][1] is False
    assert report[0][2] == (1, 0, 0)


def test_build_family_deterministic(rat_pq):
    s = spec_hpq(rat_pq, rat_pq.param("p"), rat_pq.param("q"))
    assert build_family(s) == build_family(s)


def quad_descent_lhss(p):
    """Expected rule left sides for a quadratic family: all descents."""
    rank = {i: p.precedence.index(p.names[i]) for i in range(len(p.names))}
    return sorted((b, a) for a in range(len(p.names))
                  for b in range(len(p.names)) if rank[b] > rank[a])


@pytest.mark.parametrize("builder", [
    lambda ctx: spec_bh(ctx, ctx.param("p")),
    lambda ctx: spec_hpq(ctx, ctx.param("p"), ctx.param("q")),
    lambda ctx: spec_m2(ctx, ctx.param("p"), ctx.param("q")),
    lambda ctx: spec_uqb2(ctx, ctx.param("q")),
    lambda ctx: spec_three_cyclic(ctx, ctx.param("q"), ctx.one(), ctx.one(),
                                  ctx.one()),
])
def test_quadratic_rule_sets_are_exactly_the_descents(builder, rat_pq):
    p = build_family(builder(rat_pq))
    assert sorted(r.lhs for r in p.rules) == quad_descent_lhss(p)


def test_weyl_rule_set_descents(rat_pq):
    lam = lam2(rat_pq, rat_pq.param("p"))
    p = build_family(spec_weyl(rat_pq, (rat_pq.param("q"), rat_pq.param("q")),
                               lam))
    assert sorted(r.lhs for r in p.rules) == quad_descent_lhss(p)


@pytest.mark.parametrize("make", [
    lambda: build_family(spec_hpq(FieldCtx.rational_functions(("p", "q")),
                                  FieldCtx.rational_functions(("p", "q")).param("p"),
                                  FieldCtx.rational_functions(("p", "q")).param("q"))),
    lambda: build_family(spec_uqb2(FieldCtx.cyclotomic(5),
                                   FieldCtx.cyclotomic(5).generator())),
    lambda: build_family(spec_downup(FieldCtx.rational(),
                                     FieldCtx.rational().from_int(2),
                                     FieldCtx.rational().from_int(-1),
                                     FieldCtx.rational().one())),
    lambda: build_family(spec_bqf(FieldCtx.galois(3, (1, 0, 1)),
                                  FieldCtx.galois(3, (1, 0, 1)).from_int(-1),
                                  (FieldCtx.galois(3, (1, 0, 1)).zero(),
                                   FieldCtx.galois(3, (1, 0, 1)).one()))),
])
def test_presentation_json_roundtrip(make):
    p = make()
    doc = presentation_to_json(p)
    assert presentation_from_json(doc) == p


def test_biquad3_condition_violation_example(QQ):
    # q1=2, q2=3, lambda=1, everything else zero: (1 - q1 q2) lambda != 0
    z = QQ.zero()
    spec = spec_biquad3(QQ, (QQ.from_int(2), QQ.from_int(3), QQ.from_int(5)),
                        ((z, z, z), (z, z, z), (QQ.one(), z, z)), (z, z, z))
    conds = dict(biquad3_conditions(spec))
    assert conds["C4"] == QQ.from_int(-5)
    assert any(not v.is_zero() for v in conds.values())


def test_family_spec_echo_roundtrip(rat_q):
    from orepi.presentations import family_spec_of
    s = spec_bqf(rat_q, rat_q.param("q"), (rat_q.zero(), rat_q.one()))
    p = build_family(s)
    s2 = family_spec_of(p)
    assert s2.family == "Bqf"
    assert build_family(s2) == p

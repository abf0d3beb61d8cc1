"""CLI contract: subcommands, JSON report schema, exit codes, determinism."""

import json

import pytest

from orepi.cli import (
    parse_f,
    parse_field,
    parse_ncpoly,
    presentation_from_json,
    presentation_to_json,
    run_command,
    validate_report,
)
from orepi import FieldCtx, build_family, normal_form, spec_hpq


def run(args):
    code, doc = run_command(args)
    validate_report(doc)
    return code, doc


def test_families_lists_all():
    code, doc = run(["families"])
    assert code == 0
    assert len(doc["checks"]) == 11


def test_identity_check_hpq():
    code, doc = run(["identity-check", "--family", "Hpq",
                     "--field", "ratfunc:p,q", "--params", "p=p,q=q",
                     "--lemma", "H.yxn", "--n-max", "8"])
    assert code == 0
    assert len(doc["checks"]) == 8
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_pi_decide_bqf_unknown():
    code, doc = run(["pi-decide", "--family", "Bqf", "--field", "cyclo:3",
                     "--f", "t^8", "--q", "z3"])
    assert code == 0
    assert "Unknown" in doc["checks"][0]["detail"]


def test_field_autopromotion():
    # bare parameter identifiers promote Q to a rational-function field
    code, doc = run(["identity-check", "--family", "Hpq",
                     "--params", "p=p,q=q", "--lemma", "H.yxn",
                     "--n-max", "3"])
    assert code == 0 and len(doc["checks"]) == 3
    # zN promotes Q to the cyclotomic field containing it
    code, doc = run(["pi-decide", "--family", "Bqf", "--f", "t^8",
                     "--q", "z3"])
    assert code == 0
    assert "Unknown" in doc["checks"][0]["detail"]


def test_pi_decide_witness_record():
    code, doc = run(["pi-decide", "--family", "Hpq", "--field", "cyclo:3",
                     "--params", "p=2,q=z3"])
    assert code == 0
    names = [c["name"] for c in doc["checks"]]
    assert "witness-verify" in names
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_confluence_exit_one_on_violation(tmp_path):
    # a biquadratic instance violating (1 - q1 q2) lambda = 0
    code, doc = run(["confluence", "--family", "BiQuad3", "--field", "Q",
                     "--params", "q1=2,q2=3,q3=5,la=1"])
    assert code == 1
    failing = [c for c in doc["checks"] if c["status"] == "fail"]
    assert failing and "residual" in failing[0]["detail"]


def test_confluence_from_file(tmp_path):
    code, doc = run(["build", "--family", "Hpq", "--field", "ratfunc:p,q",
                     "--params", "p=p,q=q",
                     "--out", str(tmp_path / "h.json")])
    assert code == 0
    code2, doc2 = run(["confluence", "--file", str(tmp_path / "h.json")])
    assert code2 == 0
    assert all(c["status"] == "pass" for c in doc2["checks"])


def test_normalize():
    code, doc = run(["normalize", "--family", "Hpq", "--field", "ratfunc:p,q",
                     "--params", "p=p,q=q", "--poly", "y*x^2"])
    assert code == 0
    assert "x*x*y" in doc["checks"][0]["detail"]


def test_normalize_matches_engine(rat_pq):
    H = build_family(spec_hpq(rat_pq, rat_pq.param("p"), rat_pq.param("q")))
    terms = parse_ncpoly("(p^2-1)*y*x - 3*t^2 + x*y", H)
    nf = normal_form(H, terms)
    direct = normal_form(H, [
        (rat_pq.param("p") ** 2 - 1, H.word("y", "x")),
        (rat_pq.from_int(-3), H.word("t", "t")),
        (rat_pq.one(), H.word("x", "y")),
    ])
    assert nf == direct


def test_central_check():
    code, doc = run(["central-check", "--family", "UqB2", "--field",
                     "cyclo:5", "--q", "z5"])
    assert code == 0
    assert {c["name"] for c in doc["checks"]} == \
        {"central:z", "central:e1^5", "central:e2^5", "central:e3^5"}


def test_central_check_hypothesis_error():
    code, doc = run(["central-check", "--family", "UqB2", "--field",
                     "cyclo:3", "--q", "z3"])
    assert code == 1
    assert doc["checks"][0]["status"] == "error"


def test_spanning_subcommand():
    code, doc = run(["spanning", "--family", "Hpq", "--field", "cyclo:3",
                     "--params", "p=-1,q=z3", "--caps", "x=6,y=6,t=2",
                     "--degree", "8"])
    assert code == 0


def test_matrep_and_identity_search():
    code, doc = run(["matrep", "--order", "3", "--field", "cyclo:3",
                     "--q", "z3"])
    assert code == 0
    code, doc = run(["identity-search", "--algebra", "m2", "--degree", "3"])
    assert code == 0
    assert "dimension 0" in doc["checks"][0]["detail"]
    code, doc = run(["identity-search", "--algebra", "m2", "--degree", "4"])
    assert "contains standard s_4: True" in doc["checks"][0]["detail"]


def test_reports_deterministic():
    args = ["identity-check", "--family", "Hpq", "--field", "ratfunc:p,q",
            "--params", "p=p,q=q", "--lemma", "H.ynx", "--n-max", "3"]
    _, a = run(args)
    _, b = run(args)
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        run_command(["no-such-command"])
    assert exc.value.code == 2


def test_internal_error_reported():
    code, doc = run(["build", "--family", "Hpq", "--field", "Q",
                     "--params", "p=0,q=1"])
    assert code == 1
    assert doc["checks"][0]["status"] == "error"
    assert "ZeroParameter" in doc["checks"][0]["detail"]


def test_parse_f_polynomials():
    ctx = FieldCtx.cyclotomic(3)
    f = parse_f("t + t^5", ctx)
    assert len(f) == 6
    assert f[1].is_one() and f[5].is_one() and f[0].is_zero()
    f2 = parse_f("(z3+1)*t^2 - 2", ctx)
    assert f2[2] == ctx.generator() + 1
    assert f2[0] == ctx.from_int(-2)


def test_parse_field_variants():
    assert parse_field("Q").kind == "rational"
    assert parse_field("cyclo:6").level == 6
    assert parse_field("ratfunc:p,q").params == ("p", "q")
    g = parse_field("gf:3:1,0,1")
    assert g.char == 3 and len(g.modulus) == 3


def test_presentation_json_schema_fields():
    ctx = FieldCtx.rational_functions(("p", "q"))
    p = build_family(spec_hpq(ctx, ctx.param("p"), ctx.param("q")))
    doc = presentation_to_json(p)
    assert set(doc) == {"field", "generators", "weights", "precedence",
                        "rules", "family"}
    rule = doc["rules"][0]
    assert set(rule) == {"lhs", "rhs"}
    assert all(set(t) == {"coeff", "word"} for t in rule["rhs"])
    assert presentation_from_json(json.loads(json.dumps(doc))) == p

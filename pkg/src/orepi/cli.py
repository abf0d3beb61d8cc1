"""Command-line front end: build presentations, run checks, emit JSON reports.

The report on standard output is the only machine-readable channel:
{"command": [...], "checks": [{"name", "status", "detail", "witness"?}],
"elapsed_ms": int}.  Exit code 0 iff no check has status fail or error;
2 on usage errors.
"""

import argparse
import json
import sys
import time

from .center import CentralSet, central_candidates, is_central, spanning_check
from .errors import OrepiError, ParseError, ZeroInput
from .fields import FieldCtx, coeff_to_str, parse_coeff
from .identities import LEMMA_IDS, check_paper_identity
from .matrep import multilinear_identity_search, quantum_plane_rep
from .pidecide import QPlaneWitness, pi_decide, verify_witness
from .presentations import (
    FAMILIES,
    FamilySpec,
    Presentation,
    RewriteRule,
    build_family,
    validate_orientation,
)
from .rewrite import normal_form, overlap_check

FAMILY_PARAMS = {
    "Bh": ("h",),
    "Hpq": ("p", "q"),
    "M2": ("alpha", "beta"),
    "UqB2": ("q",),
    "WeylMalt": ("n", "q1..qn", "l12.."),
    "WeylAJ": ("n", "q1..qn", "l12.."),
    "BiQuad3": ("q1", "q2", "q3", "a", "b", "c", "al", "be", "ga",
                "la", "mu", "nu", "b1", "b2", "b3"),
    "ThreeCyclic": ("q", "alpha", "beta", "gamma"),
    "DownUp": ("alpha", "beta", "gamma"),
    "Bqf": ("q", "f (via --f)"),
    "QuantumPlane": ("q",),
}


# ---------------------------------------------------------------------------
# field / parameter / polynomial parsing
# ---------------------------------------------------------------------------


def parse_field(text):
    if text in ("Q", "q", "rational"):
        return FieldCtx.rational()
    if text.startswith("cyclo:"):
        return FieldCtx.cyclotomic(int(text.split(":", 1)[1]))
    if text.startswith("ratfunc:"):
        names = [s for s in text.split(":", 1)[1].split(",") if s]
        return FieldCtx.rational_functions(names)
    if text.startswith("gf:"):
        parts = text.split(":")
        p = int(parts[1])
        if len(parts) > 2 and parts[2]:
            modulus = [int(c) for c in parts[2].split(",")]
        else:
            modulus = [0, 1]
        return FieldCtx.galois(p, modulus)
    raise ParseError(f"unknown field spec {text!r}")


def parse_params(text, ctx):
    out = {}
    if not text:
        return out
    for pair in text.split(","):
        if not pair.strip():
            continue
        if "=" not in pair:
            raise ParseError(f"expected name=expr, got {pair!r}")
        name, expr = pair.split("=", 1)
        out[name.strip()] = parse_coeff(expr.strip(), ctx)
    return out


class _FPoly:
    """Dense polynomial in t over a coefficient field (for parsing f)."""

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = list(coeffs)
        while self.coeffs and self.coeffs[-1].is_zero():
            self.coeffs.pop()

    def __add__(self, o):
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.ctx.zero()
        out = [(self.coeffs[i] if i < len(self.coeffs) else z) +
               (o.coeffs[i] if i < len(o.coeffs) else z) for i in range(n)]
        return _FPoly(self.ctx, out)

    def __neg__(self):
        return _FPoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if not self.coeffs or not o.coeffs:
            return _FPoly(self.ctx, [])
        z = self.ctx.zero()
        out = [z] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return _FPoly(self.ctx, out)

    def __truediv__(self, o):
        if len(o.coeffs) > 1:
            raise ParseError("can only divide f by a constant")
        if not o.coeffs:
            raise ParseError("division by zero in f")
        inv = o.coeffs[0].inv()
        return _FPoly(self.ctx, [c * inv for c in self.coeffs])

    def __pow__(self, e):
        out = _FPoly(self.ctx, [self.ctx.one()])
        for _ in range(e):
            out = out * self
        return out


def parse_f(text, ctx):
    """Parse a polynomial in t (coefficient grammar plus the identifier t)."""
    from .fields import _CoeffParser

    class _FParser(_CoeffParser):
        def atom(self):
            t = self.peek()
            if t.kind == "ident" and t.text == "t":
                self.eat()
                return _FPoly(ctx, [ctx.zero(), ctx.one()])
            v = super().atom()
            if not isinstance(v, _FPoly):
                v = _FPoly(ctx, [v])
            return v

    poly = _FParser(text, ctx).parse()
    if not isinstance(poly, _FPoly):
        poly = _FPoly(ctx, [poly])
    return tuple(poly.coeffs)


def build_spec(family, ctx, params, f_text=None):
    if family not in FAMILIES:
        raise ParseError(f"unknown family {family!r}; see `orepi families`")
    if family in ("WeylMalt", "WeylAJ"):
        n = int(params.pop("n").val) if "n" in params else \
            max(int(k[1:]) for k in params if k.startswith("q"))
        qs = [params[f"q{i + 1}"] for i in range(n)]
        one = ctx.one()
        lam = [[one for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                lij = params.get(f"l{i + 1}{j + 1}", one)
                lam[i][j] = lij
                lam[j][i] = lij.inv()
        variant = "maltsiniotis" if family == "WeylMalt" else "aj"
        from .presentations import spec_weyl
        return spec_weyl(ctx, qs, lam, variant=variant)
    if family == "BiQuad3":
        from .presentations import spec_biquad3
        z = ctx.zero()
        g = lambda k: params.get(k, z)
        return spec_biquad3(
            ctx, (params["q1"], params["q2"], params["q3"]),
            ((g("a"), g("b"), g("c")), (g("al"), g("be"), g("ga")),
             (g("la"), g("mu"), g("nu"))),
            (g("b1"), g("b2"), g("b3")))
    if family == "Bqf":
        f = parse_f(f_text, ctx) if f_text else ()
        from .presentations import spec_bqf
        return spec_bqf(ctx, params["q"], f)
    return FamilySpec(family, ctx, scalars=params)


# ---------------------------------------------------------------------------
# presentation JSON
# ---------------------------------------------------------------------------


def field_to_json(ctx):
    if ctx.kind == "rational":
        return {"kind": "rational"}
    if ctx.kind == "cyclotomic":
        return {"kind": "cyclotomic", "n": ctx.level}
    if ctx.kind == "ratfunc":
        return {"kind": "ratfunc", "params": list(ctx.params)}
    return {"kind": "galois", "p": ctx.char, "modulus": list(ctx.modulus)}


def field_from_json(doc):
    kind = doc["kind"]
    if kind == "rational":
        return FieldCtx.rational()
    if kind == "cyclotomic":
        return FieldCtx.cyclotomic(doc["n"])
    if kind == "ratfunc":
        return FieldCtx.rational_functions(doc["params"])
    return FieldCtx.galois(doc["p"], doc["modulus"])


def presentation_to_json(p):
    doc = {
        "field": field_to_json(p.ctx),
        "generators": list(p.names),
        "weights": list(p.weights),
        "precedence": list(p.precedence),
        "rules": [],
    }
    if p.family:
        doc["family"] = p.family
    for rule in p.rules:
        doc["rules"].append({
            "lhs": [p.names[g] for g in rule.lhs],
            "rhs": [{"coeff": coeff_to_str(c),
                     "word": [p.names[g] for g in w]}
                    for c, w in sorted(rule.rhs, key=lambda t: t[1])],
        })
    return doc


def presentation_from_json(doc):
    ctx = field_from_json(doc["field"])
    names = list(doc["generators"])
    index = {n: i for i, n in enumerate(names)}
    rules = []
    for r in doc["rules"]:
        lhs = tuple(index[n] for n in r["lhs"])
        rhs = [(parse_coeff(t["coeff"], ctx),
                tuple(index[n] for n in t["word"])) for t in r["rhs"]]
        rules.append(RewriteRule(lhs, rhs))
    return Presentation(ctx, names, doc["weights"], doc["precedence"], rules,
                        family=doc.get("family"))


# ---------------------------------------------------------------------------
# noncommutative polynomial expressions (for `normalize`)
# ---------------------------------------------------------------------------


def parse_ncpoly(text, p):
    """Terms of coefficient factors and generator powers, e.g. 'y*x^2 - 2*t'."""
    from .fields import _tokenize

    toks = _tokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]]

    def eat(kind=None):
        t = toks[pos[0]]
        if kind and t.kind != kind:
            raise ParseError(f"expected {kind}, got {t.text!r}")
        pos[0] += 1
        return t

    gen_names = set(p.names)

    def parse_term():
        coeff = p.ctx.one()
        word = []
        expect_factor = True
        while expect_factor:
            t = peek()
            if t.kind == "int":
                eat()
                c = p.ctx.from_int(int(t.text))
                exp = maybe_power()
                coeff = coeff * c ** exp
            elif t.kind == "(":
                depth, j = 0, pos[0]
                # find matching paren, parse inside as coefficient expr
                expr_toks = []
                eat("(")
                depth = 1
                while depth:
                    tt = eat()
                    if tt.kind == "(":
                        depth += 1
                    elif tt.kind == ")":
                        depth -= 1
                    if depth:
                        expr_toks.append(tt.text)
                c = parse_coeff("".join(expr_toks), p.ctx)
                exp = maybe_power()
                coeff = coeff * c ** exp
            elif t.kind == "ident":
                eat()
                if t.text in gen_names:
                    exp = maybe_power()
                    if exp < 0:
                        raise ParseError("generators cannot carry negative "
                                         "exponents")
                    word.extend([p.gen(t.text)] * exp)
                else:
                    c = parse_coeff(t.text, p.ctx)
                    exp = maybe_power()
                    coeff = coeff * c ** exp
            else:
                raise ParseError(f"unexpected token {t.text!r}")
            if peek().kind == "*":
                eat()
            elif peek().kind == "/":
                eat()
                nxt = eat()
                if nxt.kind == "int":
                    c = p.ctx.from_int(int(nxt.text))
                elif nxt.kind == "ident" and nxt.text not in gen_names:
                    c = parse_coeff(nxt.text, p.ctx)
                else:
                    raise ParseError("can only divide by a coefficient")
                exp = maybe_power()
                coeff = coeff * (c ** exp).inv()
            else:
                expect_factor = False
        return coeff, tuple(word)

    def maybe_power():
        if peek().kind == "^":
            eat()
            sign = 1
            if peek().kind == "-":
                eat()
                sign = -1
            return sign * int(eat("int").text)
        return 1

    terms = []
    sign = 1
    if peek().kind == "-":
        eat()
        sign = -1
    while True:
        c, w = parse_term()
        terms.append((c if sign > 0 else -c, w))
        t = peek()
        if t.kind == "end":
            break
        if t.kind == "+":
            eat()
            sign = 1
        elif t.kind == "-":
            eat()
            sign = -1
        else:
            raise ParseError(f"unexpected token {t.text!r}")
    return terms


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------


class Report:
    def __init__(self, argv):
        self.command = list(argv)
        self.checks = []
        self.t0 = time.monotonic()

    def add(self, name, status, detail="", witness=None):
        rec = {"name": name, "status": status, "detail": detail}
        if witness is not None:
            rec["witness"] = witness
        self.checks.append(rec)

    def finish(self):
        doc = {
            "command": self.command,
            "checks": self.checks,
            "elapsed_ms": int((time.monotonic() - self.t0) * 1000),
        }
        code = 0 if all(c["status"] == "pass" for c in self.checks) else 1
        return code, doc


def validate_report(doc):
    """Schema check for the report JSON; raises ValueError on violations."""
    if set(doc) != {"command", "checks", "elapsed_ms"}:
        raise ValueError("report keys must be command/checks/elapsed_ms")
    if not isinstance(doc["command"], list) or \
            not all(isinstance(s, str) for s in doc["command"]):
        raise ValueError("command must be a list of strings")
    if not isinstance(doc["elapsed_ms"], int):
        raise ValueError("elapsed_ms must be an integer")
    for rec in doc["checks"]:
        if not {"name", "status", "detail"} <= set(rec):
            raise ValueError("check must have name/status/detail")
        if set(rec) - {"name", "status", "detail", "witness"}:
            raise ValueError("unexpected check keys")
        if rec["status"] not in ("pass", "fail", "error"):
            raise ValueError("status must be pass/fail/error")
    return True


def _witness_json(w):
    if w is None:
        return None
    if isinstance(w, CentralSet):
        return {"kind": "central-set", "elements": w.names(),
                "condition": w.condition}
    if isinstance(w, QPlaneWitness):
        return {"kind": w.kind, "parameter": coeff_to_str(w.param),
                "label": w.label}
    return str(w)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _free_identifiers(*texts):
    # "t" stays reserved for the f-polynomial variable
    import re
    names, levels = [], []
    for text in texts:
        if not text:
            continue
        for name in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text):
            m = re.fullmatch(r"z(\d+)", name)
            if m:
                levels.append(int(m.group(1)))
                continue
            if name == "t":
                continue
            if name not in names:
                names.append(name)
    return names, levels


def _get_presentation(args, report):
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            return presentation_from_json(json.load(fh)), None
    ctx = parse_field(args.field)
    try:
        params = parse_params(args.params, ctx)
        if getattr(args, "q", None):
            params["q"] = parse_coeff(args.q, ctx)
    except (ParseError, ZeroInput):
        if args.field != "Q":
            raise
        # convenience over the default field: bare identifiers mean "work
        # symbolically" (rational-function field), zN means a cyclotomic
        # field containing it
        values = [pair.split("=", 1)[1] for pair in args.params.split(",")
                  if "=" in pair]
        if getattr(args, "q", None):
            values.append(args.q)
        if getattr(args, "f", None):
            values.append(args.f)
        names, levels = _free_identifiers(*values)
        if names and any(n > 2 for n in levels):
            raise ParseError("mixing parameters and roots of unity needs "
                             "an explicit --field") from None
        if names:
            ctx = FieldCtx.rational_functions(names)
        elif levels:
            from math import lcm
            ctx = FieldCtx.cyclotomic(lcm(*levels))
        else:
            raise
        params = parse_params(args.params, ctx)
        if getattr(args, "q", None):
            params["q"] = parse_coeff(args.q, ctx)
    spec = build_spec(args.family, ctx, params, f_text=getattr(args, "f", None))
    return build_family(spec), spec


def cmd_families(args, report):
    for fam in FAMILIES:
        report.add(f"family:{fam}", "pass",
                   "parameters: " + ", ".join(FAMILY_PARAMS[fam]))


def cmd_build(args, report):
    p, _ = _get_presentation(args, report)
    doc = presentation_to_json(p)
    orient = validate_orientation(p)
    ok = all(o for _, o, _ in orient)
    report.add("build", "pass" if ok else "fail",
               f"{len(p.names)} generators, {len(p.rules)} rules",
               witness=doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)


def cmd_normalize(args, report):
    p, _ = _get_presentation(args, report)
    terms = parse_ncpoly(args.poly, p)
    nf = normal_form(p, terms)
    report.add("normalize", "pass", nf.pretty(p))


def cmd_identity_check(args, report):
    p, _ = _get_presentation(args, report)
    if args.lemma not in LEMMA_IDS:
        report.add("lemma", "error",
                   f"unknown lemma {args.lemma!r}; known: {', '.join(LEMMA_IDS)}")
        return
    rep = check_paper_identity(args.lemma, p, args.n_max)
    for c in rep.checks:
        status = "pass" if c.ok else "fail"
        detail = f"n={c.n} {c.label}"
        if not c.ok:
            detail += f"; residual {c.residual.pretty(p)}"
        report.add(f"{args.lemma}[{c.n}]{c.label}", status, detail)


def cmd_central_check(args, report):
    p, spec = _get_presentation(args, report)
    try:
        cs = central_candidates(spec)
    except OrepiError as e:
        report.add("central-candidates", "error", str(e))
        return
    for name, el in cs:
        ok, witness = is_central(p, el)
        if ok:
            report.add(f"central:{name}", "pass", cs.condition)
        else:
            report.add(f"central:{name}", "fail",
                       f"fails at generator {witness[0]}")


def cmd_pi_decide(args, report):
    _, spec = _get_presentation(args, report)
    v = pi_decide(spec)
    report.add("pi-decide", "pass", f"{v.verdict}: {v.reason}",
               witness=_witness_json(v.witness))
    if v.verdict == "NotPI" and v.witness is not None:
        ok = verify_witness(spec, v.witness)
        report.add("witness-verify", "pass" if ok else "fail", v.witness.label)


def cmd_confluence(args, report):
    p, _ = _get_presentation(args, report)
    rep = overlap_check(p)
    for cp in rep.pairs:
        name = f"{cp.kind}:{p.word_str(cp.word)}"
        if cp.resolves:
            report.add(name, "pass", "both reductions agree")
        else:
            report.add(name, "fail",
                       f"residual {cp.residual.pretty(p)}")
    if not rep.pairs:
        report.add("overlaps", "pass", "no critical pairs")


def cmd_spanning(args, report):
    p, spec = _get_presentation(args, report)
    caps = {}
    for pair in args.caps.split(","):
        name, val = pair.split("=")
        caps[name.strip()] = int(val)
    cs = central_candidates(spec)
    result = spanning_check(p, cs, caps, degree=args.degree)
    if result.ok:
        report.add("spanning", "pass",
                   f"rank {result.rank}, degree <= {result.degree}")
    else:
        miss = ", ".join(p.word_str(w) for w in result.missing[:5])
        report.add("spanning", "fail", f"missing monomials: {miss}")


def cmd_matrep(args, report):
    ctx = parse_field(args.field)
    q = parse_coeff(args.q, ctx)
    try:
        alg = quantum_plane_rep(ctx, args.order, q)
    except OrepiError as e:
        report.add("matrep", "error", str(e))
        return
    report.add("matrep", "pass",
               f"shift/diagonal model at order {args.order}; relation "
               f"y x = q x y verified; algebra dimension {alg.dim}")


def cmd_identity_search(args, report):
    ctx = parse_field(args.field)
    if args.algebra == "m2":
        z, o = ctx.zero(), ctx.one()
        gens = {"e11": ((o, z), (z, z)), "e12": ((z, o), (z, z)),
                "e21": ((z, z), (o, z)), "e22": ((z, z), (z, o))}
        from .matrep import MatAlgebra
        alg = MatAlgebra(2, ctx, gens)
    else:
        q = parse_coeff(args.q, ctx)
        alg = quantum_plane_rep(ctx, args.order, q)
    space = multilinear_identity_search(alg, args.degree)
    detail = f"kernel dimension {space.dim}"
    if space.dim:
        detail += f"; contains standard s_{args.degree}: " \
            f"{space.contains_standard()}"
    report.add("identity-search", "pass", detail)


def make_parser():
    ap = argparse.ArgumentParser(
        prog="orepi",
        description="Exact checks for PBW presentations, straightening "
                    "identities, central elements, and PI criteria.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(sp, family=True):
        sp.add_argument("--field", default="Q",
                        help="Q | cyclo:N | ratfunc:a,b | gf:p:c0,c1,..")
        sp.add_argument("--params", default="",
                        help="comma-separated name=expr pairs")
        sp.add_argument("--q", default=None, help="shorthand for q=expr")
        sp.add_argument("--f", default=None,
                        help="polynomial in t (Bqf family)")
        if family:
            sp.add_argument("--family", default=None)
        sp.add_argument("--file", default=None,
                        help="presentation JSON instead of --family")

    sub.add_parser("families", help="list supported algebra families")

    sp = sub.add_parser("build", help="emit a presentation as JSON")
    common(sp)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("normalize", help="normal form of a polynomial")
    common(sp)
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("identity-check", help="check a named identity corpus")
    common(sp)
    sp.add_argument("--lemma", required=True)
    sp.add_argument("--n-max", type=int, default=8, dest="n_max")

    sp = sub.add_parser("central-check",
                        help="central candidates and their verification")
    common(sp)

    sp = sub.add_parser("pi-decide", help="PI / NotPI / Unknown with witness")
    common(sp)

    sp = sub.add_parser("confluence", help="critical pair analysis")
    common(sp)

    sp = sub.add_parser("spanning", help="finite-over-center spanning check")
    common(sp)
    sp.add_argument("--caps", required=True, help="name=bound pairs")
    sp.add_argument("--degree", type=int, default=None)

    sp = sub.add_parser("matrep", help="quantum plane matrix model")
    sp.add_argument("--field", default="Q")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--q", required=True)

    sp = sub.add_parser("identity-search",
                        help="multilinear identities on a matrix algebra")
    sp.add_argument("--field", default="Q")
    sp.add_argument("--algebra", choices=("m2", "qplane"), default="m2")
    sp.add_argument("--order", type=int, default=2)
    sp.add_argument("--q", default="-1")
    sp.add_argument("--degree", type=int, required=True)

    return ap


_HANDLERS = {
    "families": cmd_families,
    "build": cmd_build,
    "normalize": cmd_normalize,
    "identity-check": cmd_identity_check,
    "central-check": cmd_central_check,
    "pi-decide": cmd_pi_decide,
    "confluence": cmd_confluence,
    "spanning": cmd_spanning,
    "matrep": cmd_matrep,
    "identity-search": cmd_identity_search,
}


def run_command(argv):
    """Execute one invocation; returns (exit code, report dict)."""
    parser = make_parser()
    args = parser.parse_args(argv)
    report = Report(argv)
    try:
        _HANDLERS[args.cmd](args, report)
    except OrepiError as e:
        report.add("error", "error", f"{type(e).__name__}: {e}")
    except (KeyError, ValueError, OSError) as e:
        report.add("error", "error", f"{type(e).__name__}: {e}")
    return report.finish()


def main():
    code, doc = run_command(sys.argv[1:])
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

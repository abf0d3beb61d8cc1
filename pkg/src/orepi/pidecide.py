"""Per-family PI-property deciders with machine-checkable witnesses.

Each decider evaluates a root-of-unity criterion.  PI verdicts carry the
central-element candidates that drive module-finiteness (when the route
is module-finite); NotPI verdicts carry a quantum-plane witness: a pair
of elements y, x with y x = param * x y in the algebra (subalgebra kind)
or a normal element whose quotient is a quantum plane (quotient kind),
with the witness parameter not a root of unity.  Unknown is reserved for
the genuinely open B_q(f) gap.
"""

from .center import central_candidates, downup_center_generators, gwa_auto_order
from .errors import FamilyMismatch, PreconditionViolation, TrivialCenter
from .identities import cyc3_e
from .presentations import build_family
from .rewrite import NCPoly, normal_form, q_commutator

PI, NOT_PI, UNKNOWN = "PI", "NotPI", "Unknown"

DOWNUP_EQUIVALENT_CONDITIONS = (
    "1: automorphism of finite order (roots-of-unity case)",
    "2: finitely generated module over a central subalgebra",
    "3: satisfies a polynomial identity",
    "4: fully bounded Noetherian",
    "5: roots of t^2 - alpha t - beta are distinct roots of unity"
    " (and != 1 when gamma != 0)",
)


class QPlaneWitness:
    """Quantum-plane evidence for a NotPI verdict.

    subalgebra kind: y_elem * x_elem = param * x_elem * y_elem inside the
    algebra.  quotient kind: ``factored`` is a normal element (normality
    holds with the listed per-generator scalars) and the quotient is the
    quantum plane on ``plane_gens`` with the given parameter.
    """

    __slots__ = ("kind", "x_elem", "y_elem", "param", "label",
                 "factored", "factored_name", "normality", "plane_gens")

    def __init__(self, kind, param, label, x_elem=None, y_elem=None,
                 factored=None, factored_name=None, normality=None,
                 plane_gens=None):
        self.kind = kind
        self.param = param
        self.label = label
        self.x_elem = x_elem
        self.y_elem = y_elem
        self.factored = factored
        self.factored_name = factored_name
        self.normality = normality
        self.plane_gens = plane_gens

    def __repr__(self):
        return f"<QPlaneWitness {self.kind}: {self.label}>"


class PiVerdict:
    __slots__ = ("verdict", "reason", "witness", "caps", "details")

    def __init__(self, verdict, reason, witness=None, caps=None, details=None):
        self.verdict = verdict
        self.reason = reason
        self.witness = witness
        self.caps = caps
        self.details = dict(details or {})

    def __repr__(self):
        return f"<PiVerdict {self.verdict}: {self.reason}>"


def pi_decide(spec):
    handler = _DECIDERS.get(spec.family)
    if handler is None:
        raise FamilyMismatch(f"no PI decider for family {spec.family}")
    return handler(spec)


def _subalgebra_witness(p, yname_or_poly, xname_or_poly, param, label):
    def as_poly(v):
        if isinstance(v, NCPoly):
            return v
        return NCPoly.monomial(p.ctx.one(), (p.gen(v),))
    return QPlaneWitness("subalgebra", param, label,
                         x_elem=as_poly(xname_or_poly),
                         y_elem=as_poly(yname_or_poly))


def _decide_bh(spec):
    h = spec.scalars["h"]
    if h.is_zero():
        raise PreconditionViolation("h must be nonzero")
    ell = h.multiplicative_order()
    if ell is not None:
        cs = central_candidates(spec)
        caps = {"x1": 4 * ell, "x2": 2 * ell, "y1": 4 * ell, "y2": 2 * ell}
        return PiVerdict(PI, f"h is a root of unity of order {ell}",
                         witness=cs, caps=caps)
    p = build_family(spec)
    u = normal_form(p, [(p.ctx.one(), p.word("x1", "x2"))])
    w = QPlaneWitness("subalgebra", -(h * h), "y1 * u = (-h^2) u * y1",
                      x_elem=u,
                      y_elem=NCPoly.monomial(p.ctx.one(), p.word("y1")))
    return PiVerdict(NOT_PI, "h is not a root of unity; the subalgebra on "
                     "y1 and u = x1 x2 is a quantum plane with parameter "
                     "-h^2", witness=w)


def _decide_hpq(spec):
    pp, qq = spec.scalars["p"], spec.scalars["q"]
    if (pp * qq).is_one():
        raise PreconditionViolation("pq = 1 is excluded")
    n = pp.multiplicative_order()
    m = qq.multiplicative_order()
    if n is not None and m is not None:
        cs = central_candidates(spec)
        caps = {"x": m * n, "y": m * n, "t": n}
        return PiVerdict(PI, f"p, q roots of unity (orders {n}, {m})",
                         witness=cs, caps=caps)
    p = build_family(spec)
    one = p.ctx.one()
    if m is None:
        w = QPlaneWitness(
            "quotient", qq, "H/tH is the quantum plane with parameter q",
            factored=NCPoly.monomial(one, p.word("t")), factored_name="t",
            normality=[("x", pp.inv()), ("y", pp), ("t", one)],
            plane_gens=("x", "y"))
        return PiVerdict(NOT_PI, "q is not a root of unity", witness=w)
    from .identities import theta_element
    th = theta_element(p)
    w = QPlaneWitness(
        "quotient", pp.inv(),
        "H/theta H is the quantum plane with parameter p^-1",
        factored=th, factored_name="theta = (1-pq) yx - t",
        normality=[("x", qq), ("y", qq.inv()), ("t", one)],
        plane_gens=("x", "y"))
    return PiVerdict(NOT_PI, "p is not a root of unity", witness=w)


def _decide_m2(spec):
    a, b = spec.scalars["alpha"], spec.scalars["beta"]
    na, nb = a.multiplicative_order(), b.multiplicative_order()
    if na is not None and nb is not None:
        cs = central_candidates(spec)
        ell = int(cs.names()[0].split("^")[1])
        caps = {n: ell for n in ("X11", "X12", "X21", "X22")}
        return PiVerdict(PI, f"alpha, beta roots of unity (orders {na}, {nb})",
                         witness=cs, caps=caps)
    p = build_family(spec)
    if na is None:
        w = _subalgebra_witness(p, "X12", "X11", a,
                                "X12 * X11 = alpha X11 * X12")
        return PiVerdict(NOT_PI, "alpha is not a root of unity", witness=w)
    w = _subalgebra_witness(p, "X21", "X11", b, "X21 * X11 = beta X11 * X21")
    return PiVerdict(NOT_PI, "beta is not a root of unity", witness=w)


def _decide_uqb2(spec):
    q = spec.scalars["q"]
    ell = q.multiplicative_order()
    if ell is None:
        p = build_family(spec)
        w = _subalgebra_witness(p, "e1", "e3", (q * q).inv(),
                                "e1 * e3 = q^-2 e3 * e1")
        return PiVerdict(NOT_PI, "q is not a root of unity", witness=w)
    if ell >= 5:
        cs = central_candidates(spec)
        caps = {"z": 1, "e1": ell, "e2": ell, "e3": ell}
        return PiVerdict(PI, f"q root of unity of order {ell} >= 5",
                         witness=cs, caps=caps)
    return PiVerdict(PI, f"q root of unity of order {ell} < 5: the "
                     "central-powers proposition does not apply, no "
                     "module-finiteness witness is attached",
                     details={"gap": "below-centro2-threshold"})


def _decide_weyl(spec):
    n = spec.n
    qs, lam = spec.q_list, spec.lam
    orders = {}
    for i, qi in enumerate(qs):
        orders[f"q{i + 1}"] = qi.multiplicative_order()
    for i in range(n):
        for j in range(i + 1, n):
            orders[f"lambda_{i + 1}{j + 1}"] = \
                lam[i][j].multiplicative_order()
    if all(v is not None for v in orders.values()):
        cs = central_candidates(spec)
        ell = int(cs.names()[0].split("^")[1])
        caps = {}
        for i in range(1, n + 1):
            caps[f"x{i}"] = ell
            caps[f"y{i}"] = ell
        return PiVerdict(PI, "all q_i and lambda_ij are roots of unity",
                         witness=cs, caps=caps)
    p = build_family(spec)
    for i in range(n):
        for j in range(i + 1, n):
            if orders[f"lambda_{i + 1}{j + 1}"] is None:
                w = _subalgebra_witness(
                    p, f"y{i + 1}", f"y{j + 1}", lam[i][j],
                    f"y{i + 1} y{j + 1} = lambda_{i + 1}{j + 1} "
                    f"y{j + 1} y{i + 1}")
                return PiVerdict(NOT_PI,
                                 f"lambda_{i + 1}{j + 1} is not a root of "
                                 "unity", witness=w)
    for i in range(n):
        if orders[f"q{i + 1}"] is None:
            if i + 1 < n:
                param = qs[i] * lam[i][i + 1]
                w = _subalgebra_witness(
                    p, f"x{i + 1}", f"x{i + 2}", param,
                    f"x{i + 1} x{i + 2} = q{i + 1} lambda x{i + 2} x{i + 1}")
            else:
                one = p.ctx.one()
                xi, yi = f"x{i + 1}", f"y{i + 1}"
                z = normal_form(p, [(one, p.word(xi, yi)),
                                    (-one, p.word(yi, xi))])
                w = QPlaneWitness("subalgebra", qs[i].inv(),
                                  f"z{i + 1} x{i + 1} = q{i + 1}^-1 "
                                  f"x{i + 1} z{i + 1}",
                                  x_elem=NCPoly.monomial(one, p.word(xi)),
                                  y_elem=z)
            return PiVerdict(NOT_PI, f"q{i + 1} is not a root of unity",
                             witness=w)
    raise AssertionError("unreachable")


def _decide_three_cyclic(spec):
    q = spec.scalars["q"]
    q2 = q * q
    if q2.is_one():
        raise PreconditionViolation("q^2 = 1 is excluded")
    ell = q2.multiplicative_order()
    if ell is not None:
        cs = central_candidates(spec)
        caps = {"x": ell, "y": ell, "z": ell}
        return PiVerdict(PI, f"q^2 is a root of unity of order {ell}",
                         witness=cs, caps=caps)
    p = build_family(spec)
    e = cyc3_e(p)
    w = QPlaneWitness("subalgebra", q2.inv(), "e z = q^-2 z e with "
                      "e = xz - q^2 beta/(q^2-1)",
                      x_elem=NCPoly.monomial(p.ctx.one(), p.word("z")),
                      y_elem=e)
    return PiVerdict(NOT_PI, "q^2 is not a root of unity", witness=w)


def _decide_downup(spec):
    al, be, ga = (spec.scalars[k] for k in ("alpha", "beta", "gamma"))
    if be.is_zero():
        raise PreconditionViolation("beta = 0: not Noetherian")
    order = gwa_auto_order(spec.ctx, al, be, ga)
    lam, mu = order.roots
    ol, om = lam.multiplicative_order(), mu.multiplicative_order()
    cond5 = (lam != mu and ol is not None and om is not None
             and (ga.is_zero() or (not lam.is_one() and not mu.is_one())))
    if cond5 != order.finite:
        raise AssertionError("condition (5) disagrees with the "
                             "automorphism-order route")
    details = {
        "equivalent_conditions": DOWNUP_EQUIVALENT_CONDITIONS,
        "roots": (lam, mu),
        "automorphism_order": order,
    }
    if cond5:
        try:
            cs = downup_center_generators(spec)
        except TrivialCenter:
            cs = None
        m = order.order
        return PiVerdict(PI, "condition (5): roots are distinct roots of "
                         f"unity (orders {ol}, {om})", witness=cs,
                         caps={"u": m, "d": m}, details=details)
    why = order.case or "DistinctRootsNotUnity"
    return PiVerdict(NOT_PI, f"condition (5) fails: {why}", details=details)


def _decide_bqf(spec):
    if spec.ctx.kind == "galois":
        raise PreconditionViolation(
            "the PI decider assumes characteristic zero; over GF(p) only "
            "the centrality route (u^n, v^n) applies")
    q = spec.scalars["q"]
    n = q.multiplicative_order()
    if n is None:
        p = build_family(spec)
        w = _subalgebra_witness(p, "u", "v", q, "u v = q v u")
        return PiVerdict(NOT_PI, "q is not a root of unity; the quantum "
                         "plane on u, v is not PI", witness=w)
    supp = [j for j, cj in enumerate(spec.f_coeffs) if not cj.is_zero()]
    route_nj = n >= 2 and all(j % n == 0 for j in supp)
    route_nj1 = all((j + 1) % n != 0 for j in supp)
    if route_nj:
        cs = central_candidates(spec)
        caps = {"u": n, "v": n, "w": n}
        return PiVerdict(PI, f"ord(q) = {n} divides every exponent in "
                         "supp(f): module-finite over f(u), f(v), w^n and "
                         "u^n, v^n", witness=cs, caps=caps)
    if route_nj1:
        cs = central_candidates(spec)
        return PiVerdict(PI, f"ord(q) = {n} divides no j+1 for j in "
                         "supp(f): PI by the dimension-counting route "
                         "(u^n, v^n central; no finite spanning witness)",
                         witness=cs,
                         details={"route": "gk-dimension-route"})
    bad = [j for j in supp if (j + 1) % n == 0]
    return PiVerdict(UNKNOWN, f"ord(q) = {n} divides j+1 for j in {bad}: "
                     "outside both sufficient routes and no necessity "
                     "argument applies", details={"gap_exponents": bad})


def _decide_quantum_plane(spec):
    q = spec.scalars["q"]
    n = q.multiplicative_order()
    p = build_family(spec)
    if n is not None:
        cs = central_candidates(spec)
        return PiVerdict(PI, f"q root of unity of order {n}", witness=cs,
                         caps={"x": n, "y": n})
    w = _subalgebra_witness(p, "y", "x", q, "y x = q x y")
    return PiVerdict(NOT_PI, "q is not a root of unity", witness=w)


_DECIDERS = {
    "Bh": _decide_bh,
    "Hpq": _decide_hpq,
    "M2": _decide_m2,
    "UqB2": _decide_uqb2,
    "WeylMalt": _decide_weyl,
    "WeylAJ": _decide_weyl,
    "ThreeCyclic": _decide_three_cyclic,
    "DownUp": _decide_downup,
    "Bqf": _decide_bqf,
    "QuantumPlane": _decide_quantum_plane,
}


def verify_witness(spec, w):
    """Engine-check a NotPI witness's defining relations."""
    p = build_family(spec)
    if w.kind == "subalgebra":
        r = q_commutator(p, w.y_elem, w.x_elem, w.param)
        return r.is_zero()
    if w.kind == "quotient":
        ok = True
        for gname, scal in w.normality:
            g = NCPoly.monomial(p.ctx.one(), (p.gen(gname),))
            r = q_commutator(p, w.factored, g, scal)
            ok = ok and r.is_zero()
        return ok
    raise FamilyMismatch(f"unknown witness kind {w.kind!r}")

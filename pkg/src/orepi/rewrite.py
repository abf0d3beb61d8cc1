"""PBW normal forms and diamond-lemma confluence checking.

normal_form repeatedly rewrites the term-order-largest reducible word at
its leftmost reducible position, so outputs are deterministic and the
strictly decreasing term order guarantees termination.  overlap_check
enumerates every word with two distinct one-step reductions (proper
overlaps and containments) and reports the residual of each critical
pair.
"""

from heapq import heappush, heappop

from .errors import CtxMismatch


class NCPoly:
    """Finitely supported map from irreducible words to coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def monomial(cls, coeff, word):
        if coeff.is_zero():
            return cls({})
        return cls({tuple(word): coeff})

    def is_zero(self):
        return not self.terms

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def coeff(self, word):
        return self.terms.get(tuple(word))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                s = out[w] + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
            else:
                out[w] = c
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if coeff.is_zero():
            return NCPoly({})
        return NCPoly({w: c * coeff for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[w] == c for w, c in self.terms.items())

    def as_formal(self):
        return [(c, w) for w, c in self.terms.items()]

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def pretty(self, p):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=p.order_key):
            bits.append(f"({self.terms[w]!r})*{p.word_str(w)}")
        return " + ".join(bits)

    def __repr__(self):
        return f"NCPoly({len(self.terms)} terms)"


def _formal_terms(input_poly):
    if isinstance(input_poly, NCPoly):
        return input_poly.as_formal()
    return list(input_poly)


def _rules_by_first(p):
    table = {}
    for rule in p.rules:
        table.setdefault(rule.lhs[0], []).append(rule)
    return table


def _neg_key(p, word):
    wt, ln, ranks = p.order_key(word)
    return (-wt, -ln, tuple(-r for r in ranks))


def normal_form(p, input_poly):
    """Rewrite a formal polynomial (or NCPoly) to its normal form."""
    table = _rules_by_first(p)
    acc = {}
    for c, w in _formal_terms(input_poly):
        if hasattr(c, "ctx") and c.ctx != p.ctx:
            raise CtxMismatch("coefficient from a different field")
        w = tuple(w)
        if w in acc:
            s = acc[w] + c
            if s.is_zero():
                del acc[w]
            else:
                acc[w] = s
        elif not c.is_zero():
            acc[w] = c

    redex_cache = {}

    def first_redex(word):
        if word in redex_cache:
            return redex_cache[word]
        hit = None
        for i in range(len(word)):
            for rule in table.get(word[i], ()):
                L = len(rule.lhs)
                if word[i:i + L] == rule.lhs:
                    hit = (i, rule)
                    break
            if hit:
                break
        redex_cache[word] = hit
        return hit

    heap = []
    for w in acc:
        if first_redex(w) is not None:
            heappush(heap, (_neg_key(p, w), w))

    while heap:
        _, w = heappop(heap)
        if w not in acc:
            continue
        hit = first_redex(w)
        if hit is None:
            continue
        c = acc.pop(w)
        i, rule = hit
        pre, suf = w[:i], w[i + len(rule.lhs):]
        for rc, rw in rule.rhs:
            nw = pre + rw + suf
            nc = c * rc
            if nw in acc:
                s = acc[nw] + nc
                if s.is_zero():
                    del acc[nw]
                    continue
                acc[nw] = s
            else:
                if nc.is_zero():
                    continue
                acc[nw] = nc
            if first_redex(nw) is not None:
                heappush(heap, (_neg_key(p, nw), nw))
    return NCPoly(acc)


def multiply(p, a, b):
    """Normal form of the concatenation product of two polynomials."""
    formal = []
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            formal.append((ca * cb, wa + wb))
    return normal_form(p, formal)


def multiply_assoc(p, a, b):
    """Product evaluated one left-factor letter at a time.

    Equals multiply() whenever the presentation is confluent (callers
    that need this speed path, like the spanning and centrality checks,
    already require confluence).  Prepending single generators keeps the
    rewriting local: with left-normalizing rules the debris of each
    crossing lands left of the moving letter, where the leftmost-first
    scheduling sorts it before the next branching step.
    """
    one = p.ctx.one()
    total = NCPoly.zero()
    for wa, ca in sorted(a.terms.items()):
        cur = b
        for g in reversed(wa):
            cur = multiply(p, NCPoly.monomial(one, (g,)), cur)
        total = total + cur.scale(ca)
    return total


def q_commutator(p, a, b, lam):
    """normal_form(a*b - lam * b*a); lam = 1 gives the plain commutator."""
    formal = []
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            formal.append((ca * cb, wa + wb))
            formal.append((-(lam * cb * ca), wb + wa))
    return normal_form(p, formal)


def gen_poly(p, name):
    return NCPoly.monomial(p.ctx.one(), (p.gen(name),))


def word_poly(p, *names):
    return NCPoly.monomial(p.ctx.one(), p.word(*names))


class CriticalPair:
    """One ambiguously reducible word and the outcome of both reductions."""

    __slots__ = ("word", "kind", "rule_a", "rule_b", "pos_b",
                 "reduct_a", "reduct_b", "nf_a", "nf_b", "residual")

    def __init__(self, word, kind, rule_a, rule_b, pos_b,
                 reduct_a, reduct_b, nf_a, nf_b, residual):
        self.word = word
        self.kind = kind  # "overlap" or "containment"
        self.rule_a = rule_a
        self.rule_b = rule_b
        self.pos_b = pos_b
        self.reduct_a = reduct_a
        self.reduct_b = reduct_b
        self.nf_a = nf_a
        self.nf_b = nf_b
        self.residual = residual

    @property
    def resolves(self):
        return self.residual.is_zero()


class ConfluenceReport:
    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = list(pairs)

    @property
    def confluent(self):
        return all(cp.resolves for cp in self.pairs)

    def failing(self):
        return [cp for cp in self.pairs if not cp.resolves]

    def __repr__(self):
        state = "confluent" if self.confluent else \
            f"non-confluent ({len(self.failing())} bad pairs)"
        return f"<ConfluenceReport {len(self.pairs)} pairs, {state}>"


def _apply_at(p, word, rule, pos):
    pre, suf = word[:pos], word[pos + len(rule.lhs):]
    return [(c, pre + rw + suf) for c, rw in rule.rhs]


def overlap_check(p):
    """Enumerate critical pairs (overlaps and containments) and reduce both sides."""
    pairs = []
    rules = p.rules
    seen = set()
    for ia, ra in enumerate(rules):
        la = ra.lhs
        for ib, rb in enumerate(rules):
            lb = rb.lhs
            # proper overlap: a suffix of la equals a prefix of lb
            for k in range(1, min(len(la), len(lb))):
                if la[-k:] == lb[:k]:
                    word = la + lb[k:]
                    pos_b = len(la) - k
                    sig = (word, ia, 0, ib, pos_b)
                    if sig in seen:
                        continue
                    seen.add(sig)
                    pairs.append(_make_pair(p, word, "overlap",
                                            ia, ra, ib, rb, pos_b))
            # containment: lb occurs strictly inside la
            if ia != ib and len(lb) < len(la):
                for t in range(len(la) - len(lb) + 1):
                    if la[t:t + len(lb)] == lb:
                        sig = (la, ia, 0, ib, t)
                        if sig in seen:
                            continue
                        seen.add(sig)
                        pairs.append(_make_pair(p, la, "containment",
                                                ia, ra, ib, rb, t))
    return ConfluenceReport(pairs)


def _make_pair(p, word, kind, ia, ra, ib, rb, pos_b):
    reduct_a = _apply_at(p, word, ra, 0)
    reduct_b = _apply_at(p, word, rb, pos_b)
    nf_a = normal_form(p, reduct_a)
    nf_b = normal_form(p, reduct_b)
    return CriticalPair(word, kind, ia, ib, pos_b, reduct_a, reduct_b,
                        nf_a, nf_b, nf_a - nf_b)


def specialize_poly(poly, assignment, target_ctx):
    """Apply a parameter specialization to every coefficient."""
    out = {}
    for w, c in poly.terms.items():
        v = c.specialize(assignment, target_ctx)
        if not v.is_zero():
            out[w] = v
    return NCPoly(out)

"""Exact matrix representations and multilinear identity search.

The cyclic-shift/diagonal model realizes the quantum plane relation
y x = q x y at a primitive root of unity; standard_poly_eval computes
the alternating sum s_k over all permutations; the identity search
solves, exactly, for all multilinear identities of a given degree on a
finite-dimensional matrix algebra.
"""

from itertools import permutations

from .errors import DegreeTooLarge, NotPrimitiveRoot, SizeMismatch
from .linalg import SpanTracker, dense_kernel


def mat_identity(n, ctx):
    z, o = ctx.zero(), ctx.one()
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n = len(a)
    if len(b) != n:
        raise SizeMismatch("matrix sizes differ")
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = a[i][0] * b[0][j]
            for k in range(1, n):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


class MatAlgebra:
    """A matrix algebra given by named generator matrices.

    The linear basis of the unital algebra the generators span is
    computed at construction by closing {identity} under products with
    the generators.
    """

    def __init__(self, n, ctx, gens, relations=None):
        self.n = n
        self.ctx = ctx
        self.gens = dict(gens)
        for name, m in self.gens.items():
            if len(m) != n or any(len(r) != n for r in m):
                raise SizeMismatch(f"generator {name} is not {n}x{n}")
        if relations:
            for label, lhs, rhs in relations:
                if not mat_eq(lhs, rhs):
                    raise NotPrimitiveRoot(f"relation {label} fails")
        self.basis = self._close_basis()

    def _flat(self, m):
        return {k: m[k // self.n][k % self.n]
                for k in range(self.n * self.n)
                if not m[k // self.n][k % self.n].is_zero()}

    def _close_basis(self):
        tracker = SpanTracker(col_key=lambda k: k)
        basis = []
        queue = [mat_identity(self.n, self.ctx)]
        while queue:
            m = queue.pop(0)
            if mat_is_zero(m) or not tracker.insert(self._flat(m)):
                continue
            basis.append(m)
            for g in self.gens.values():
                queue.append(mat_mul(m, g))
        return basis

    @property
    def dim(self):
        return len(self.basis)


def quantum_plane_rep(ctx, n, q):
    """Shift/diagonal model: x -> S with S e_i = e_{i+1 mod n},
    y -> diag(1, q, ..., q^{n-1}); verifies Y X = q X Y."""
    if n < 1:
        raise NotPrimitiveRoot("order must be positive")
    if n == 1:
        if not q.is_one():
            raise NotPrimitiveRoot("order 1 needs q = 1")
    elif q.multiplicative_order() != n:
        raise NotPrimitiveRoot(f"q is not a primitive {n}-th root of unity")
    z, o = ctx.zero(), ctx.one()
    X = tuple(tuple(o if i == (j + 1) % n else z for j in range(n))
              for i in range(n))
    Y = tuple(tuple(q ** i if i == j else z for j in range(n))
              for i in range(n))
    rel = [("YX = q XY", mat_mul(Y, X), mat_scale(mat_mul(X, Y), q))]
    return MatAlgebra(n, ctx, {"x": X, "y": Y}, relations=rel)


def _parity(perm):
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def standard_poly_eval(mats):
    """s_k(A_1..A_k) = sum over permutations of sgn * A_{s(1)} ... A_{s(k)}."""
    k = len(mats)
    n = len(mats[0])
    ctx = mats[0][0][0].ctx
    for m in mats:
        if len(m) != n:
            raise SizeMismatch("matrices of different sizes")
    acc = mat_scale(mat_identity(n, ctx), ctx.zero())
    for perm in permutations(range(k)):
        prod = mats[perm[0]]
        for idx in perm[1:]:
            prod = mat_mul(prod, mats[idx])
        acc = mat_add(acc, mat_scale(prod, ctx.from_int(_parity(perm))))
    return acc


class IdentitySpace:
    """Multilinear identities of one degree: coefficient vectors over
    the permutations of d letters (itertools order)."""

    __slots__ = ("degree", "perms", "basis", "ctx")

    def __init__(self, degree, perms, basis, ctx):
        self.degree = degree
        self.perms = perms
        self.basis = basis
        self.ctx = ctx

    @property
    def dim(self):
        return len(self.basis)

    def contains_standard(self):
        """Is the alternating (standard polynomial) vector in the space?"""
        if not self.basis:
            return False
        tracker = SpanTracker(col_key=lambda k: k)
        for vec in self.basis:
            tracker.insert({i: c for i, c in enumerate(vec)
                            if not c.is_zero()})
        sgn = {i: self.ctx.from_int(_parity(p))
               for i, p in enumerate(self.perms)}
        return tracker.contains(sgn)

    def evaluate(self, vec, mats):
        """Evaluate sum_s c_s A_{s(1)} ... A_{s(d)} for one coefficient vector."""
        n = len(mats[0])
        acc = mat_scale(mat_identity(n, self.ctx), self.ctx.zero())
        for c, perm in zip(vec, self.perms):
            if c.is_zero():
                continue
            prod = mats[perm[0]]
            for idx in perm[1:]:
                prod = mat_mul(prod, mats[idx])
            acc = mat_add(acc, mat_scale(prod, c))
        return acc

    def __repr__(self):
        return f"<IdentitySpace degree {self.degree}, dim {self.dim}>"


def multilinear_identity_search(alg, d):
    """Solve for all multilinear identities of degree d on the algebra.

    Multilinearity means vanishing on all basis tuples is equivalent to
    vanishing everywhere, so the system ranges over basis^d.
    """
    if d > 5:
        raise DegreeTooLarge("degree capped at 5 (factorial growth)")
    perms = list(permutations(range(d)))
    rows = []
    basis = alg.basis
    ncols = len(perms)

    def tuples(depth):
        if depth == 0:
            yield ()
            return
        for rest in tuples(depth - 1):
            for b in basis:
                yield rest + (b,)

    for t in tuples(d):
        prods = []
        for perm in perms:
            prod = t[perm[0]]
            for idx in perm[1:]:
                prod = mat_mul(prod, t[idx])
            prods.append(prod)
        for r in range(alg.n):
            for c in range(alg.n):
                rows.append([prods[k][r][c] for k in range(ncols)])
    kernel = dense_kernel(rows, ncols, alg.ctx)
    return IdentitySpace(d, perms, kernel, alg.ctx)

"""Exact linear algebra over the coefficient fields.

Two small kernels: a sparse row-echelon span tracker (membership tests
for the spanning checks and basis closure in the matrix laboratory) and
a dense nullspace routine (fixed subspaces, multilinear identity
search).  All arithmetic is exact; there is no pivoting heuristic beyond
"first nonzero entry in a deterministic column order".
"""


class SpanTracker:
    """Incremental row space over an exact field.

    Rows are sparse dicts column -> Coeff.  Columns are ordered by a
    caller-supplied sort key; each stored row is normalized with leading
    coefficient 1 at its leading (smallest-key) column.
    """

    def __init__(self, col_key):
        self.col_key = col_key
        self.rows = {}  # leading column -> row dict

    def _lead(self, row):
        return min(row, key=self.col_key)

    def reduce(self, row):
        """Residual of row against the current span (row unchanged)."""
        row = dict(row)
        while row:
            lead = self._lead(row)
            pivot = self.rows.get(lead)
            if pivot is None:
                return row
            factor = row[lead]
            for col, val in pivot.items():
                cur = row.get(col)
                upd = (cur - factor * val) if cur is not None else -(factor * val)
                if upd.is_zero():
                    row.pop(col, None)
                else:
                    row[col] = upd
        return row

    def insert(self, row):
        """Add a row; returns True if it enlarged the span."""
        residual = self.reduce(row)
        if not residual:
            return False
        lead = self._lead(residual)
        inv = residual[lead].inv()
        self.rows[lead] = {c: v * inv for c, v in residual.items()}
        return True

    def contains(self, row):
        return not self.reduce(row)

    @property
    def rank(self):
        return len(self.rows)


def dense_kernel(rows, ncols, ctx):
    """Basis of the right kernel of the matrix given by ``rows``.

    rows: list of length-ncols lists of Coeff.  Returns a list of
    length-ncols Coeff vectors spanning {v : A v = 0}.
    """
    mat = [list(r) for r in rows]
    pivots = []  # (row index, col index)
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append((r, c))
        r += 1
        if r == len(mat):
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    zero, one = ctx.zero(), ctx.one()
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for ri, ci in pivots:
            vec[ci] = -mat[ri][free]
        basis.append(vec)
    return basis

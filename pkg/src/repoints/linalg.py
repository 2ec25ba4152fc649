"""Exact dense linear algebra over any field type with +, -, *, /, bool.

Used with Fraction, GaussRational, and QScalar elements.  Matrices are plain
lists of lists; nothing here mutates its arguments.
"""
from __future__ import annotations


class SingularMatrixError(ArithmeticError):
    pass


class NotInSpanError(ValueError):
    pass


def mat_mul(a: list, b: list) -> list:
    n, k = len(a), len(b)
    m = len(b[0])
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = None
            for t in range(k):
                x = ai[t]
                if x:
                    p = x * b[t][j]
                    s = p if s is None else s + p
            if s is None:
                s = ai[0] * b[0][j]  # a typed zero
                s = s - s
            row.append(s)
        out.append(row)
    return out


def mat_vec(a: list, v: list) -> list:
    out = []
    for row in a:
        s = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def mat_rank(a: list) -> int:
    rows = [list(r) for r in a]
    ncols = len(a[0]) if a else 0
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv_p = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / inv_p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def invert(a: list) -> list:
    """Inverse of a square matrix; raises SingularMatrixError if singular."""
    n = len(a)
    one = None
    for row in a:
        for x in row:
            if x:
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        raise SingularMatrixError("zero matrix")
    zero = one - one
    aug = [list(a[i]) + [one if j == i else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv_p = aug[c][c]
        aug[c] = [x / inv_p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def solve(a: list, b: list) -> list:
    """Solve a @ x = b exactly for a possibly rectangular a of full column rank.

    Raises NotInSpanError if the system is inconsistent, SingularMatrixError
    if the columns are dependent.
    """
    nrows = len(a)
    ncols = len(a[0])
    aug = [list(a[i]) + [b[i]] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv_p = aug[r][c]
        aug[r] = [x / inv_p for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < ncols:
        raise SingularMatrixError("columns are linearly dependent")
    for i in range(r, nrows):
        if aug[i][ncols]:
            raise NotInSpanError("inconsistent linear system")
    zero = aug[0][0] - aug[0][0]
    x = [zero] * ncols
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][ncols]
    return x


def determinant(a: list):
    n = len(a)
    rows = [list(r) for r in a]
    det = None
    sign = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            x = rows[0][0]
            return x - x
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        p = rows[c][c]
        det = p if det is None else det * p
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    if sign < 0:
        det = -det
    return det


class BasisExpander:
    """Expands vectors in a fixed independent spanning set, exactly.

    Columns of the supplied matrix are the basis vectors (each a flat list).
    Construction selects an invertible row subset once; each expansion is then
    a single small solve plus a full verification of the residual.
    """

    def __init__(self, columns: list):
        self.ncols = len(columns)
        self.nrows = len(columns[0])
        self.columns = columns
        a = [[columns[j][i] for j in range(self.ncols)] for i in range(self.nrows)]
        self.full = a
        rows = [(i, list(a[i])) for i in range(self.nrows)]
        selected = []
        work = []
        r = 0
        for i, row in rows:
            if r == self.ncols:
                break
            cand = list(row)
            for (prow, pcol) in work:
                if cand[pcol]:
                    f = cand[pcol]
                    cand = [x - f * y for x, y in zip(cand, prow)]
            pcol = next((c for c in range(self.ncols) if cand[c]), None)
            if pcol is None:
                continue
            inv_p = cand[pcol]
            cand = [x / inv_p for x in cand]
            work.append((cand, pcol))
            selected.append(i)
            r += 1
        if r < self.ncols:
            raise SingularMatrixError("basis vectors are dependent")
        self.selected = selected
        self.sub_inv = invert([a[i] for i in selected])

    def expand(self, vector: list) -> list:
        """Coefficients of vector in the basis; raises NotInSpanError if outside."""
        coeffs = mat_vec(self.sub_inv, [vector[i] for i in self.selected])
        check = mat_vec(self.full, coeffs)
        for got, want in zip(check, vector):
            if got != want:
                raise NotInSpanError("vector is not in the span of the basis")
        return coeffs

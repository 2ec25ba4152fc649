"""Sparse square matrices over the exact scalar field Q(i)(q)."""
from __future__ import annotations

from .scalar import QScalar, ZERO, ONE, render_scalar


class QMatrix:
    """A dim x dim matrix with sparse rows (dict column -> nonzero QScalar).

    Instances are treated as immutable once built; all operations return new
    matrices.  Entries equal to zero are never stored.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows=None):
        self.dim = dim
        if rows is None:
            self.rows = [{} for _ in range(dim)]
        else:
            self.rows = rows

    @classmethod
    def zeros(cls, dim: int) -> "QMatrix":
        return cls(dim)

    @classmethod
    def identity(cls, dim: int) -> "QMatrix":
        return cls(dim, [{i: ONE} for i in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries) -> "QMatrix":
        """Build from an iterable of (row, col, value); repeated positions add."""
        m = cls(dim)
        for i, j, v in entries:
            m.put(i, j, m.get(i, j) + v)
        return m

    def put(self, i: int, j: int, v: QScalar) -> None:
        # builder hook; only used before a matrix is shared
        if v:
            self.rows[i][j] = v
        else:
            self.rows[i].pop(j, None)

    def get(self, i: int, j: int) -> QScalar:
        return self.rows[i].get(j, ZERO)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        out = []
        for r1, r2 in zip(self.rows, other.rows):
            row = dict(r1)
            for j, v in r2.items():
                s = row.get(j)
                if s is None:
                    row[j] = v
                else:
                    s = s + v
                    if s:
                        row[j] = s
                    else:
                        del row[j]
            out.append(row)
        return QMatrix(self.dim, out)

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.dim, [{j: -v for j, v in r.items()} for r in self.rows])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-other)

    def __mul__(self, other: "QMatrix") -> "QMatrix":
        out = []
        orows = other.rows
        for row in self.rows:
            acc: dict = {}
            for k, a in row.items():
                for j, b in orows[k].items():
                    p = a * b
                    s = acc.get(j)
                    acc[j] = p if s is None else s + p
            out.append({j: v for j, v in acc.items() if v})
        return QMatrix(self.dim, out)

    def scale(self, c: QScalar) -> "QMatrix":
        if not c:
            return QMatrix.zeros(self.dim)
        return QMatrix(self.dim, [{j: c * v for j, v in r.items()} for r in self.rows])

    def add_scalar_diag(self, c: QScalar) -> "QMatrix":
        """self + c * identity."""
        out = QMatrix(self.dim, [dict(r) for r in self.rows])
        for i in range(self.dim):
            out.put(i, i, out.get(i, i) + c)
        return out

    def transpose(self) -> "QMatrix":
        out = QMatrix(self.dim)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out.rows[j][i] = v
        return out

    def kron(self, other: "QMatrix") -> "QMatrix":
        """Kronecker product; index (i, k) maps to i * other.dim + k."""
        d2 = other.dim
        out = QMatrix(self.dim * d2)
        for i, row in enumerate(self.rows):
            for j, a in row.items():
                for k, orow in enumerate(other.rows):
                    dest = out.rows[i * d2 + k]
                    for l, b in orow.items():
                        dest[j * d2 + l] = a * b
        return out

    def trace(self) -> QScalar:
        t = ZERO
        for i, row in enumerate(self.rows):
            v = row.get(i)
            if v is not None:
                t = t + v
        return t

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    __hash__ = None

    def nonzero_items(self):
        for i, row in enumerate(self.rows):
            for j, v in sorted(row.items()):
                yield i, j, v

    def first_nonzero(self):
        """First nonzero entry in row-major order, or None."""
        for i, j, v in self.nonzero_items():
            return i, j, v
        return None

    def first_difference(self, other: "QMatrix"):
        """Position and values of the first differing entry, or None if equal."""
        for i in range(self.dim):
            cols = set(self.rows[i]) | set(other.rows[i])
            for j in sorted(cols):
                a, b = self.get(i, j), other.get(i, j)
                if a != b:
                    return i, j, a, b
        return None

    def rank(self) -> int:
        """Rank over Q(i)(q) by exact Gaussian elimination."""
        rows = [dict(r) for r in self.rows if r]
        rank = 0
        for col in range(self.dim):
            piv_idx = next((idx for idx, r in enumerate(rows) if col in r), None)
            if piv_idx is None:
                continue
            piv = rows.pop(piv_idx)
            rank += 1
            inv = piv[col].inv()
            remaining = []
            for r in rows:
                f = r.get(col)
                if f is not None:
                    f = f * inv
                    for j, v in piv.items():
                        s = r.get(j)
                        s = -(f * v) if s is None else s - f * v
                        if s:
                            r[j] = s
                        else:
                            r.pop(j, None)
                if r:
                    remaining.append(r)
            rows = remaining
        return rank

    def to_literal_rows(self) -> list:
        """Dense rows of canonical scalar literals (for reports and goldens)."""
        return [
            [render_scalar(self.get(i, j)) for j in range(self.dim)]
            for i in range(self.dim)
        ]

    def __repr__(self) -> str:
        nnz = sum(len(r) for r in self.rows)
        return f"QMatrix(dim={self.dim}, nnz={nnz})"


def commutator(a: QMatrix, b: QMatrix) -> QMatrix:
    return a * b - b * a

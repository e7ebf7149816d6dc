"""Dense exact matrices and fraction-free elimination kernels."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

from .errors import InputError


@dataclass(frozen=True)
class ExactMatrix:
    """Row-major dense matrix of Fractions. ``entries`` has rows*cols items."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be non-negative")
        ents = tuple(e if isinstance(e, Fraction) else Fraction(e) for e in self.entries)
        if len(ents) != self.rows * self.cols:
            raise InputError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(ents)}"
            )
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise InputError("ragged matrix rows")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, k: int) -> "ExactMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(k)] for i in range(k)], k)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols)
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def scale(self, lam) -> "ExactMatrix":
        lam = Fraction(lam)
        return ExactMatrix(self.rows, self.cols, tuple(e * lam for e in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        a = self.to_rows()
        b = other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            acc = [Fraction(0)] * other.cols
            for k, aik in enumerate(ai):
                if aik:
                    bk = b[k]
                    for j in range(other.cols):
                        if bk[j]:
                            acc[j] += aik * bk[j]
            out.extend(acc)
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries)


def integer_rows(m: ExactMatrix) -> Tuple[List[List[int]], Fraction]:
    """Clear denominators row by row.

    Returns integer rows and the product of the row multipliers, so that
    det(m) = det(rows) / factor for square m.
    """
    rows = []
    factor = 1
    for i in range(m.rows):
        r = m.row(i)
        d = 1
        for e in r:
            if e.denominator != 1:
                d = lcm(d, e.denominator)
        rows.append([int(e * d) for e in r])
        factor *= d
    return rows, Fraction(factor)


def bareiss_det_int(a: List[List[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Works on a copy; every intermediate value is an integer (a minor of the input).
    """
    k = len(a)
    if k == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for c in range(k - 1):
        if m[c][c] == 0:
            for i in range(c + 1, k):
                if m[i][c] != 0:
                    m[c], m[i] = m[i], m[c]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[c][c]
        rc = m[c]
        for i in range(c + 1, k):
            ri = m[i]
            ric = ri[c]
            for j in range(c + 1, k):
                ri[j] = (piv * ri[j] - ric * rc[j]) // prev
            ri[c] = 0
        prev = piv
    return sign * m[k - 1][k - 1]


def bareiss_det(m: ExactMatrix) -> Fraction:
    """Exact determinant of a square matrix via fraction-free elimination."""
    if m.rows != m.cols:
        raise InputError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    rows, factor = integer_rows(m)
    return Fraction(bareiss_det_int(rows)) / factor


def cofactor_det(m: ExactMatrix) -> Fraction:
    """Laplace expansion along the first row. Exponential; oracle use only."""
    if m.rows != m.cols:
        raise InputError("determinant of non-square matrix")

    def rec(rows):
        k = len(rows)
        if k == 0:
            return Fraction(1)
        if k == 1:
            return rows[0][0]
        total = Fraction(0)
        for j, a in enumerate(rows[0]):
            if a:
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * a * rec(minor)
        return total

    return rec(m.to_rows())


def pivot_columns_int(rows: List[List[int]], ncols: int) -> List[int]:
    """Pivot columns of the row echelon form of an integer matrix.

    These are the lexicographically first maximal set of linearly independent
    columns. Rows are reduced by their content to keep entries small.
    """
    m = [list(r) for r in rows if any(r)]
    pivots = []
    top = 0
    for c in range(ncols):
        if top >= len(m):
            break
        p = None
        for i in range(top, len(m)):
            if m[i][c]:
                if p is None or abs(m[i][c]) < abs(m[p][c]):
                    p = i
        if p is None:
            continue
        m[top], m[p] = m[p], m[top]
        rt = m[top]
        a = rt[c]
        for i in range(top + 1, len(m)):
            ri = m[i]
            b = ri[c]
            if b:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                for j in range(c, ncols):
                    ri[j] = fa * ri[j] - fb * rt[j]
                cont = 0
                for v in ri[c + 1:]:
                    if v:
                        cont = gcd(cont, v)
                        if cont == 1:
                            break
                if cont > 1:
                    for j in range(c + 1, ncols):
                        ri[j] //= cont
        pivots.append(c)
        top += 1
    return pivots


def pivot_columns(m: ExactMatrix) -> List[int]:
    rows, _ = integer_rows(m)
    return pivot_columns_int(rows, m.cols)


def rank(m: ExactMatrix) -> int:
    """Exact rank over Q."""
    return len(pivot_columns(m))

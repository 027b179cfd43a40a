"""Exact linear algebra over the rationals.

Rank, right-kernel bases and linear solving for matrices with
`fractions.Fraction` entries.  Elimination is fraction-free (Bareiss) on
integer rows obtained by clearing denominators, which keeps every
intermediate value an exact integer of minor-bounded size; no floating
point appears anywhere.  All values are immutable and every function is
pure, so the module is safe under concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

# Rational numbers are stdlib Fractions: always stored reduced with a
# positive denominator, which is exactly the canonical form we need.
Rational = Fraction


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix of Fractions, row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | Fraction]], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            ncols = 0 if cols is None else cols
        flat = tuple(Fraction(x) for r in rows for x in r)
        return cls(len(rows), ncols, flat)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        flat = tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        return RationalMatrix(self.cols, self.rows, flat)

    def delete_row(self, i: int) -> "RationalMatrix":
        flat = self.entries[: i * self.cols] + self.entries[(i + 1) * self.cols :]
        return RationalMatrix(self.rows - 1, self.cols, flat)

    def mul_vector(self, v: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((self.entry(i, j) * Fraction(v[j]) for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )


def _int_rows(m: RationalMatrix) -> list[list[int]]:
    """Clear denominators row by row; scaling a row does not change the
    rank, the row space or the right kernel."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def _bareiss_echelon(rows: list[list[int]], n_cols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    One-step Bareiss: after eliminating with pivot p the update is
    (p*a_ij - a_ic*a_rj) / prev, and the division by the previous pivot
    is exact (Sylvester's identity: every entry is a minor of the input
    bordered by the pivot block).  Returns the echelon rows and the list
    of pivot columns.
    """
    m = [list(r) for r in rows]
    n_rows = len(m)
    pivot_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pr = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            mi, mr = m[i], m[r]
            for j in range(c, n_cols):
                mi[j] = (piv * mi[j] - f * mr[j]) // prev
        prev = piv
        pivot_cols.append(c)
        r += 1
    return m, pivot_cols


def rank(m: RationalMatrix) -> int:
    """Rank over Q.  rank(m) == rank(m.transpose()) and the result never
    exceeds min(rows, cols)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivot_cols = _bareiss_echelon(_int_rows(m), m.cols)
    return len(pivot_cols)


def primitive_integer_vector(v: Iterable[Fraction | int]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers with the first
    nonzero entry positive."""
    vals = [Fraction(x) for x in v]
    if all(x == 0 for x in vals):
        raise ValueError("zero vector has no primitive form")
    mult = lcm(*(x.denominator for x in vals))
    ints = [int(x * mult) for x in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def nullspace_basis(m: RationalMatrix) -> list[tuple[int, ...]]:
    """Basis of the right kernel {v : m v = 0}.

    One basis vector per free column, in ascending free-column order,
    each scaled to primitive integer form (coprime entries, first
    nonzero entry positive).  len(result) == m.cols - rank(m).
    """
    n = m.cols
    if n == 0:
        return []
    if m.rows == 0:
        basis = []
        for j in range(n):
            v = [0] * n
            v[j] = 1
            basis.append(tuple(v))
        return basis
    ech, pivot_cols = _bareiss_echelon(_int_rows(m), n)
    pivot_set = set(pivot_cols)
    free_cols = [j for j in range(n) if j not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        # Echelon rows are row-equivalent to m; back-substitute bottom-up.
        for ri in range(len(pivot_cols) - 1, -1, -1):
            pc = pivot_cols[ri]
            row = ech[ri]
            s = sum((Fraction(row[j]) * v[j] for j in range(pc + 1, n) if v[j]), Fraction(0))
            v[pc] = -s / row[pc]
        basis.append(primitive_integer_vector(v))
    return basis


def solve_linear(m: RationalMatrix, rhs: Sequence[int | Fraction]) -> tuple[Fraction, ...] | None:
    """One exact solution of m x = rhs (free variables set to 0), or None
    when the system is inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length must equal row count")
    aug_rows = [list(m.row(i)) + [Fraction(rhs[i])] for i in range(m.rows)]
    aug = RationalMatrix.from_rows(aug_rows, cols=m.cols + 1)
    ech, pivot_cols = _bareiss_echelon(_int_rows(aug), m.cols + 1)
    if m.cols in pivot_cols:
        return None
    x = [Fraction(0)] * m.cols
    for ri in range(len(pivot_cols) - 1, -1, -1):
        pc = pivot_cols[ri]
        row = ech[ri]
        s = sum((Fraction(row[j]) * x[j] for j in range(pc + 1, m.cols) if x[j]), Fraction(0))
        x[pc] = (Fraction(row[m.cols]) - s) / row[pc]
    return tuple(x)

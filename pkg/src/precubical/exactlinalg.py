"""Exact integer matrix algebra.

Everything here runs on arbitrary-precision Python ints: Smith normal form
with unimodular transforms, integer kernel bases, membership in a column
lattice, prime-field elimination, and a fraction-free determinant.  Pivoting
always selects the smallest nonzero magnitude (lowest row, then column, on
ties), which keeps coefficient growth tame at the matrix sizes this package
meets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class IntMatrix:
    """Immutable dense integer matrix."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable[int]]):
        self.rows = rows
        self.cols = cols
        data = tuple(tuple(int(v) for v in row) for row in entries)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entries do not form a {rows}x{cols} matrix")
        self._rows = data

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        cols = len(columns)
        return cls(rows, cols, [[columns[j][i] for j in range(cols)] for i in range(rows)])

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            [[self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            ri = self._rows[i]
            out.append(
                [
                    sum(ri[k] * other._rows[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix(self.rows, other.cols, out)

    def mul_vec(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} against {self.cols} columns")
        return [sum(r[j] * v[j] for j in range(self.cols)) for r in self._rows]

    def is_zero(self) -> bool:
        return all(v == 0 for r in self._rows for v in r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._rows == other._rows
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, {self.to_lists()!r})"


@dataclass(frozen=True)
class SmithForm:
    """Unimodular decomposition U a V = S with S diagonal.

    ``diag`` holds the positive invariant factors d_1 | d_2 | ... | d_r; the
    remaining diagonal of S is zero.  ``rank`` is r.
    """

    U: IntMatrix
    V: IntMatrix
    S: IntMatrix
    diag: tuple[int, ...]
    rank: int


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """Diagonalize over the integers by unimodular row and column operations."""
    m, n = a.rows, a.cols
    s = a.to_lists()
    u = IntMatrix.identity(m).to_lists()
    v = IntMatrix.identity(n).to_lists()

    def swap_rows(i: int, j: int) -> None:
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        if q:
            sd, ss = s[dst], s[src]
            for k in range(n):
                sd[k] += q * ss[k]
            ud, us = u[dst], u[src]
            for k in range(m):
                ud[k] += q * us[k]

    def add_col(dst: int, src: int, q: int) -> None:
        if q:
            for row in s:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    def negate_row(i: int) -> None:
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(t: int) -> Optional[tuple[int, int]]:
        best = None
        best_mag = None
        for i in range(t, m):
            row = s[i]
            for j in range(t, n):
                x = row[j]
                if x:
                    mag = x if x > 0 else -x
                    if best_mag is None or mag < best_mag:
                        best, best_mag = (i, j), mag
                        if mag == 1:
                            return best
        return best

    t = 0
    while t < m and t < n:
        pos = find_pivot(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        if pos[1] != t:
            swap_cols(t, pos[1])

        while True:
            if s[t][t] < 0:
                negate_row(t)
            pivot = s[t][t]
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // pivot))
                    if s[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // pivot))
                    if s[t][j]:
                        dirty = True
            if not dirty:
                # pivot now divides every remainder left in its row/column;
                # if any survive they are smaller in magnitude, so re-pivot
                if all(s[i][t] == 0 for i in range(t + 1, m)) and all(
                    s[t][j] == 0 for j in range(t + 1, n)
                ):
                    break
            pos = min(
                (
                    (abs(s[i][t]), i, t)
                    for i in range(t, m)
                    if s[i][t]
                ),
                default=None,
            )
            pos_c = min(
                (
                    (abs(s[t][j]), t, j)
                    for j in range(t, n)
                    if s[t][j]
                ),
                default=None,
            )
            cand = min(x for x in (pos, pos_c) if x is not None)
            _, bi, bj = cand
            if bi != t:
                swap_rows(t, bi)
            elif bj != t:
                swap_cols(t, bj)

        # force the divisibility chain: fold in any bad remainder below-right
        pivot = s[t][t]
        offender = None
        for i in range(t + 1, m):
            row = s[i]
            for j in range(t + 1, n):
                if row[j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1

    diag = []
    for i in range(min(m, n)):
        d = s[i][i]
        if d == 0:
            break
        diag.append(d)
    form = SmithForm(
        U=IntMatrix(m, m, u),
        V=IntMatrix(n, n, v),
        S=IntMatrix(m, n, s),
        diag=tuple(diag),
        rank=len(diag),
    )
    assert form.U.mul(a).mul(form.V) == form.S, "SNF reconstruction failed"
    return form


def kernel_basis(a: IntMatrix) -> list[list[int]]:
    """Basis of the integer solution lattice of a v = 0 (cols - rank vectors)."""
    snf = smith_normal_form(a)
    return [list(snf.V.column(j)) for j in range(snf.rank, a.cols)]


def lattice_solve(snf: SmithForm, v: Sequence[int]) -> Optional[list[int]]:
    """One integer solution of B x = v given the Smith form of B, else None."""
    w = snf.U.mul_vec(v)
    y = [0] * snf.V.rows
    for i, wi in enumerate(w):
        if i < snf.rank:
            d = snf.diag[i]
            if wi % d:
                return None
            y[i] = wi // d
        elif wi != 0:
            return None
    return snf.V.mul_vec(y)


def express_in_lattice(b: IntMatrix, v: Sequence[int]) -> Optional[list[int]]:
    """Integer coordinates of v in the column lattice of b, or None if outside."""
    if len(v) != b.rows:
        raise ValueError(
            f"vector of length {len(v)} against a lattice in Z^{b.rows}"
        )
    return lattice_solve(smith_normal_form(b), v)


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    if a.rows != a.cols:
        raise ValueError("only square matrices can be unimodular")
    snf = smith_normal_form(a)
    if snf.rank != a.rows or any(d != 1 for d in snf.diag):
        raise ValueError("matrix is not unimodular")
    # U a V = I  =>  a^{-1} = V U
    return snf.V.mul(snf.U)


def determinant(a: IntMatrix) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def field_rank_and_kernel(a: IntMatrix, p: int) -> tuple[int, list[list[int]]]:
    """Rank and kernel basis of a over the field with p elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m, n = a.rows, a.cols
    rows = [[v % p for v in a.row(i)] for i in range(m)]

    pivots: list[int] = []
    r = 0
    for j in range(n):
        pivot_row = next((i for i in range(r, m) if rows[i][j]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = pow(rows[r][j], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][j]:
                c = rows[i][j]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
        if r == m:
            break

    pivot_set = set(pivots)
    basis = []
    for j in range(n):
        if j in pivot_set:
            continue
        vec = [0] * n
        vec[j] = 1
        for row_idx, pj in enumerate(pivots):
            vec[pj] = (-rows[row_idx][j]) % p
        basis.append(vec)
    return r, basis

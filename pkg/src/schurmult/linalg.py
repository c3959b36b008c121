"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator. A :class:`Matrix` is an immutable
grid of them. Elimination internally works on sparse row dictionaries because
the cocycle systems built elsewhere in the package are mostly zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point input is not accepted; use 'p/q' strings")
    return Fraction(value)


def format_scalar(value: Fraction) -> str:
    """Serialize as ``"p"`` when integral, else ``"p/q"``."""
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Matrix:
    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError(f"row of length {len(row)} in a {self.ncols}-column matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(to_scalar(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        return cls(data, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        zero = Fraction(0)
        return cls(tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], n
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def vstack(self, other: "Matrix") -> "Matrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return Matrix(self.rows + other.rows, self.ncols)

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix(((),) * self.ncols, 0)
        return Matrix(tuple(zip(*self.rows)), self.nrows)

    def matvec(self, v: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(format_scalar(x) for x in row) + "]" for row in self.rows)


def _sparse_rows(rows: Iterable[Sequence]) -> list[dict[int, Fraction]]:
    out = []
    for row in rows:
        d = {j: to_scalar(x) for j, x in enumerate(row) if x}
        if d:
            out.append(d)
    return out


def sparse_rref(
    rows: Iterable[dict[int, Fraction]], order: Sequence[int] | None = None
) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Gauss-Jordan elimination on rows given as ``{column: value}`` dicts.

    ``order`` gives the column priority for pivot selection (default:
    ascending). Returns the nonzero reduced rows, each normalized so its
    pivot entry is 1, sorted by pivot priority, together with the pivots.
    """
    pending = [dict(r) for r in rows if r]
    if order is None:
        cols = set()
        for r in pending:
            cols.update(r)
        order = sorted(cols)
    rank_of = {c: k for k, c in enumerate(order)}

    reduced: dict[int, dict[int, Fraction]] = {}
    for row in pending:
        # reduce against existing pivots
        for p, prow in reduced.items():
            f = row.get(p)
            if f:
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        if not row:
            continue
        p = min(row, key=rank_of.__getitem__)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for q, qrow in reduced.items():
            f = qrow.get(p)
            if f:
                for c, v in row.items():
                    nv = qrow.get(c, 0) - f * v
                    if nv:
                        qrow[c] = nv
                    else:
                        qrow.pop(c, None)
        reduced[p] = row
    pivots = sorted(reduced, key=rank_of.__getitem__)
    return [reduced[p] for p in pivots], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    The returned matrix has the same shape as ``m``; zero rows come last.
    """
    rows, pivots = sparse_rref(_sparse_rows(m.rows), order=range(m.ncols))
    zero = Fraction(0)
    dense = [tuple(r.get(j, zero) for j in range(m.ncols)) for r in rows]
    dense.extend((zero,) * m.ncols for _ in range(m.nrows - len(rows)))
    return Matrix(tuple(dense), m.ncols), pivots


def rank(m: Matrix) -> int:
    return len(sparse_rref(_sparse_rows(m.rows))[1])


def row_basis(m: Matrix) -> Matrix:
    """Nonzero rows of ``rref(m)``: the canonical basis of the row space."""
    reduced, pivots = rref(m)
    return Matrix(reduced.rows[: len(pivots)], m.ncols)


def nullspace_basis(m: Matrix) -> Matrix:
    """Rows spanning the right kernel ``{v : m v = 0}``, one per free column."""
    rows, pivots = sparse_rref(_sparse_rows(m.rows), order=range(m.ncols))
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[free] = Fraction(1)
        for p, row in zip(pivots, rows):
            c = row.get(free)
            if c:
                v[p] = -c
        basis.append(tuple(v))
    return Matrix(tuple(basis), m.ncols)

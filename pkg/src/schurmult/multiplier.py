"""Schur multipliers of nilpotent associative algebras.

Two independent routes compute ``dim M(A)``:

* :func:`multiplier_dim` counts 2-cocycles modulo 2-coboundaries with
  trivial coefficients, where a cocycle is a bilinear ``f`` with
  ``f(ab, c) = f(a, bc)`` and a coboundary is ``(a, b) -> g(ab)``.
* :func:`cover_table` attaches a formal central generator ``m_ij`` to every
  basis product, gauges away ``dim A'`` of them by a change of basis and
  expands the associative identity on the extended table symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Algebra, Subspace, derived_ideal
from .errors import NotNilpotent
from .linalg import Matrix, format_scalar, sparse_rref

Pair = tuple[int, int]


def _require_nilpotent(a: Algebra) -> None:
    if not a.nilpotent:
        raise NotNilpotent(f"{a} is not nilpotent")


def _cocycle_rows(a: Algebra) -> list[dict[int, Fraction]]:
    # unknown f(e_p, e_q) lives in column p*n + q
    n = a.dim
    rows: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    for i, j, w in a.products:
        for k in range(n):
            row = rows.setdefault((i, j, k), {})
            for p, c in enumerate(w):
                if c:
                    col = p * n + k
                    row[col] = row.get(col, 0) + c
    for j, k, w in a.products:
        for i in range(n):
            row = rows.setdefault((i, j, k), {})
            for p, c in enumerate(w):
                if c:
                    col = i * n + p
                    row[col] = row.get(col, 0) - c
    return [{c: v for c, v in r.items() if v} for r in rows.values()]


def _coboundary_rows(a: Algebra) -> list[dict[int, Fraction]]:
    n = a.dim
    rows: list[dict[int, Fraction]] = [{} for _ in range(n)]
    for i, j, w in a.products:
        for r, c in enumerate(w):
            if c:
                rows[r][i * n + j] = c
    return rows


@dataclass(frozen=True)
class CocycleSpace:
    ambient_dim: int
    constraint_matrix: Matrix
    dim_z2: int


def cocycle_space(a: Algebra) -> CocycleSpace:
    n2 = a.dim * a.dim
    rows = _cocycle_rows(a)
    dense = tuple(tuple(r.get(c, Fraction(0)) for c in range(n2)) for r in rows)
    rank = len(sparse_rref(rows)[1])
    return CocycleSpace(n2, Matrix(dense, n2), n2 - rank)


def coboundary_matrix(a: Algebra) -> Matrix:
    """Rows ``(i, j) -> g(e_i e_j)`` for ``g`` running over the dual basis."""
    n2 = a.dim * a.dim
    return Matrix(
        tuple(tuple(r.get(c, Fraction(0)) for c in range(n2)) for r in _coboundary_rows(a)),
        n2,
    )


@lru_cache(maxsize=8192)
def multiplier_dim(a: Algebra) -> int:
    """``dim Z^2 - dim B^2``."""
    _require_nilpotent(a)
    n2 = a.dim * a.dim
    z2 = n2 - len(sparse_rref(_cocycle_rows(a))[1])
    b2 = len(sparse_rref(_coboundary_rows(a))[1])
    return z2 - b2


@dataclass(frozen=True)
class TValue:
    n: int
    dim_m: int
    t: int

    def __str__(self) -> str:
        return f"t = {self.t}"


def t_value(a: Algebra) -> TValue:
    dim_m = multiplier_dim(a)
    return TValue(a.dim, dim_m, a.dim * a.dim - dim_m)


# ---------------------------------------------------------------------------
# cover tables


@dataclass(frozen=True)
class CoverTable:
    base: Algebra
    symbols: tuple[Pair, ...]
    gauge_eliminated: tuple[Pair, ...]
    # each relation reads: pivot = sum(coeff * symbol)
    relations: tuple[tuple[Pair, tuple[tuple[Pair, Fraction], ...]], ...]
    multiplier_basis: tuple[Pair, ...]

    def symbol_name(self, pair: Pair, flat: bool = False) -> str:
        i, j = pair
        n = self.base.dim
        if flat:
            return f"m{i * n + j + 1}"
        if n < 10:
            return f"m{i + 1}{j + 1}"
        return f"m{i + 1},{j + 1}"

    def relation_map(self) -> dict[Pair, dict[Pair, Fraction]]:
        return {p: dict(rhs) for p, rhs in self.relations}

    def _combo(self, terms, flat: bool) -> str:
        parts = []
        for pair, c in terms:
            name = self.symbol_name(pair, flat)
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{format_scalar(c)}{name}")
        return " + ".join(parts).replace("+ -", "- ") or "0"

    def format(self, flat: bool = False) -> str:
        a = self.base
        gauge = set(self.gauge_eliminated)
        relmap = self.relation_map()
        lines = ["cover multiplication table:"]
        resolved = []
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = f"{a.basis[i]}{a.basis[j]}"
                prod = a.format_vector(a.sc[i][j])
                if (i, j) in gauge:
                    lines.append(f"  {lhs} = {prod}")
                    resolved.append(f"  {lhs} = {prod}")
                    continue
                lines.append(f"  {lhs} = {_plus(prod, self.symbol_name((i, j), flat))}")
                value = relmap.get((i, j), {(i, j): Fraction(1)})
                resolved.append(f"  {lhs} = {_plus(prod, self._combo(sorted(value.items()), flat))}")
        lines.append(
            "gauge (set to 0 by change of basis): "
            + (", ".join(self.symbol_name(p, flat) for p in self.gauge_eliminated) or "none")
        )
        lines.append("relations from the associative identity:")
        if not self.relations:
            lines.append("  none")
        for pivot, rhs in self.relations:
            lines.append(f"  {self.symbol_name(pivot, flat)} = {self._combo(rhs, flat)}")
        lines.append(
            "multiplier basis: {"
            + ", ".join(self.symbol_name(p, flat) for p in self.multiplier_basis)
            + f"}}  (dim M = {len(self.multiplier_basis)})"
        )
        lines.append("resolved cover:")
        lines.extend(resolved)
        return "\n".join(lines)

    def to_json(self, flat: bool = False) -> dict:
        a = self.base
        name = lambda p: self.symbol_name(p, flat)  # noqa: E731
        return {
            "basis": list(a.basis),
            "table": [
                {
                    "left": a.basis[i],
                    "right": a.basis[j],
                    "product": a.format_vector(a.sc[i][j]),
                    "symbol": None if (i, j) in self.gauge_eliminated else name((i, j)),
                }
                for i in range(a.dim)
                for j in range(a.dim)
            ],
            "gauge_eliminated": [name(p) for p in self.gauge_eliminated],
            "relations": [
                {"symbol": name(p), "equals": {name(q): format_scalar(c) for q, c in rhs}}
                for p, rhs in self.relations
            ],
            "multiplier_basis": [name(p) for p in self.multiplier_basis],
            "dim_m": len(self.multiplier_basis),
        }


def _plus(left: str, right: str) -> str:
    if left == "0":
        return right
    if right == "0":
        return left
    return f"{left} + {right}"


class _CoverElement:
    """Element of the cover: a vector over A plus a combination of symbols."""

    __slots__ = ("vec", "sym")

    def __init__(self, vec, sym):
        self.vec = vec
        self.sym = sym

    def __sub__(self, other):
        sym = dict(self.sym)
        for s, c in other.sym.items():
            v = sym.get(s, 0) - c
            if v:
                sym[s] = v
            else:
                sym.pop(s, None)
        return _CoverElement(tuple(x - y for x, y in zip(self.vec, other.vec)), sym)


def _choose_gauge(a: Algebra) -> list[Pair]:
    target = derived_ideal(a).dim
    span = Subspace.zero(a.dim)
    chosen = []
    for i in range(a.dim):
        for j in range(a.dim):
            if span.dim == target:
                return chosen
            w = a.sc[i][j]
            if any(w) and not span.contains(w):
                chosen.append((i, j))
                span = span + Subspace.span([w], a.dim)
    return chosen


def cover_table(a: Algebra) -> CoverTable:
    """Symbolic cover multiplication table with its associativity relations."""
    _require_nilpotent(a)
    n = a.dim
    symbols = tuple((i, j) for i in range(n) for j in range(n))
    gauge = _choose_gauge(a)
    live = [s for s in symbols if s not in set(gauge)]

    def basis_product(i: int, j: int) -> _CoverElement:
        sym = {} if (i, j) in gauge else {(i, j): Fraction(1)}
        return _CoverElement(a.sc[i][j], sym)

    def times(left: _CoverElement, right: _CoverElement) -> _CoverElement:
        # symbols are central and square to zero, so only vector parts multiply
        vec = [Fraction(0)] * n
        sym: dict[Pair, Fraction] = {}
        for p, x in enumerate(left.vec):
            if not x:
                continue
            for q, y in enumerate(right.vec):
                if not y:
                    continue
                prod = basis_product(p, q)
                c = x * y
                for k, v in enumerate(prod.vec):
                    if v:
                        vec[k] += c * v
                for s, v in prod.sym.items():
                    sym[s] = sym.get(s, 0) + c * v
        return _CoverElement(tuple(vec), {s: v for s, v in sym.items() if v})

    units = [_CoverElement(a.unit(i), {}) for i in range(n)]
    rows = []
    for i in range(n):
        for j in range(n):
            eij = basis_product(i, j)
            for k in range(n):
                diff = times(eij, units[k]) - times(units[i], basis_product(j, k))
                if any(diff.vec):
                    raise AssertionError("base algebra is not associative")
                if diff.sym:
                    rows.append({s[0] * n + s[1]: c for s, c in diff.sym.items()})

    # pivot on the latest symbols so that relations express them by earlier ones
    order = sorted((s[0] * n + s[1] for s in live), reverse=True)
    reduced, pivots = sparse_rref(rows, order=order)
    relations = []
    for p, row in sorted(zip(pivots, reduced)):
        rhs = tuple(
            (divmod(q, n), -c) for q, c in sorted(row.items()) if q != p
        )
        relations.append((divmod(p, n), rhs))
    pivot_set = set(pivots)
    basis = tuple(s for s in live if s[0] * n + s[1] not in pivot_set)
    return CoverTable(a, symbols, tuple(gauge), tuple(relations), basis)


def verify_cover_consistency(a: Algebra) -> bool:
    return len(cover_table(a).multiplier_basis) == multiplier_dim(a)

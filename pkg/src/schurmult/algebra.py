"""Finite-dimensional algebras given by structure constants.

An algebra of dimension ``n`` is stored as a tensor ``sc[i][j]`` of
coordinate vectors, so that ``e_i e_j = sum_k sc[i][j][k] e_k``. Subspaces
are stored by their reduced row echelon basis, which makes equality of
subspaces equality of representations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    AlgebraError,
    NotAnIdeal,
    NotAssociative,
    NotCentral,
    NotInDerived,
)
from .linalg import Matrix, format_scalar, nullspace_basis, row_basis, to_scalar

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _zero(n: int) -> Vector:
    return (ZERO,) * n


def _unit(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def _add(u: Sequence[Fraction], v: Sequence[Fraction], c: Fraction = ONE) -> Vector:
    return tuple(a + c * b for a, b in zip(u, v))


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [tuple(to_scalar(x) for x in v) for v in vectors]
        return cls(ambient_dim, row_basis(Matrix.from_rows(rows, ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix((), ambient_dim))

    @classmethod
    def whole(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.rows

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.basis.rows]

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Residue of ``v`` after clearing the pivot coordinates."""
        v = tuple(to_scalar(x) for x in v)
        for p, row in zip(self.pivots, self.basis.rows):
            if v[p]:
                v = _add(v, row, -v[p])
        return v

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.reduce(v))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        k = self.dim
        if k == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # solve a.U = b.W for the coefficient vector (a, b)
        cols = [row for row in self.vectors] + [tuple(-x for x in row) for row in other.vectors]
        system = Matrix(tuple(zip(*cols)), len(cols))
        kernel = nullspace_basis(system)
        out = []
        for coeffs in kernel.rows:
            v = _zero(self.ambient_dim)
            for c, row in zip(coeffs[:k], self.vectors):
                if c:
                    v = _add(v, row, c)
            out.append(v)
        return Subspace.span(out, self.ambient_dim)

    def __repr__(self) -> str:
        vecs = ", ".join("(" + ",".join(format_scalar(x) for x in v) + ")" for v in self.vectors)
        return f"Subspace(dim={self.dim}, [{vecs}])"


@dataclass(frozen=True)
class Algebra:
    dim: int
    basis: tuple[str, ...]
    sc: tuple[tuple[Vector, ...], ...]
    checked: bool = field(default=False, compare=False)

    @classmethod
    def from_products(
        cls,
        basis: Sequence[str],
        products: Mapping[tuple[int, int], Mapping[int, object]],
        check: bool = True,
    ) -> "Algebra":
        """Build from sparse products ``{(i, j): {k: coeff}}``.

        With ``check`` the associativity identity is verified and
        :class:`NotAssociative` is raised if it fails.
        """
        n = len(basis)
        table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in products.items():
            for k, c in terms.items():
                table[i][j][k] += to_scalar(c)
        sc = tuple(tuple(tuple(v) for v in row) for row in table)
        a = cls(n, tuple(basis), sc)
        if check:
            return a.checked_copy()
        return a

    @classmethod
    def from_names(
        cls, basis: Sequence[str], table: Mapping[str, Mapping[str, object]], check: bool = True
    ) -> "Algebra":
        """Build from products written with basis names, e.g. ``{"xx": {"z": 1}}``.

        Keys are pairs of names given as a 2-tuple or, for one-letter names,
        as a concatenated string.
        """
        index = {name: i for i, name in enumerate(basis)}
        products = {}
        for key, terms in table.items():
            left, right = (key[0], key[1]) if isinstance(key, str) and len(key) == 2 else key
            products[(index[left], index[right])] = {index[k]: c for k, c in terms.items()}
        return cls.from_products(basis, products, check=check)

    def checked_copy(self) -> "Algebra":
        if self.checked:
            return self
        if not check_associativity(self):
            raise NotAssociative(f"structure constants on {list(self.basis)} are not associative")
        return Algebra(self.dim, self.basis, self.sc, checked=True)

    @cached_property
    def products(self) -> tuple[tuple[int, int, Vector], ...]:
        """Nonzero basis products as ``(i, j, vector)``."""
        return tuple(
            (i, j, self.sc[i][j])
            for i in range(self.dim)
            for j in range(self.dim)
            if any(self.sc[i][j])
        )

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self)

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        out = [ZERO] * self.dim
        for i, j, w in self.products:
            c = u[i] * v[j]
            if c:
                for k, x in enumerate(w):
                    if x:
                        out[k] += c * x
        return tuple(out)

    def unit(self, i: int) -> Vector:
        return _unit(self.dim, i)

    def is_abelian(self) -> bool:
        return not self.products

    def format_vector(self, v: Sequence[Fraction]) -> str:
        terms = []
        for c, name in zip(v, self.basis):
            if not c:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                s = format_scalar(c)
                terms.append(f"({s}){name}" if "/" in s else f"{s}{name}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def table_lines(self) -> list[str]:
        return [
            f"{self.basis[i]}{self.basis[j]} = {self.format_vector(w)}"
            for i, j, w in self.products
        ]

    def __str__(self) -> str:
        rel = ", ".join(self.table_lines()) or "abelian"
        return f"<{', '.join(self.basis)} : {rel}>"


def abelian(n: int, names: Sequence[str] | None = None) -> Algebra:
    """The abelian algebra A(n): all products zero."""
    if names is None:
        names = [f"a{i + 1}" for i in range(n)] if n > 1 else ["a"]
    return Algebra.from_products(names, {})


def check_associativity(a: Algebra) -> bool:
    n = a.dim
    sc = a.sc
    for i, j, w in a.products:
        for k in range(n):
            # (e_i e_j) e_k
            left = [ZERO] * n
            for p, c in enumerate(w):
                if c:
                    for q, x in enumerate(sc[p][k]):
                        if x:
                            left[q] += c * x
            # e_i (e_j e_k)
            right = [ZERO] * n
            for p, c in enumerate(sc[j][k]):
                if c:
                    for q, x in enumerate(sc[i][p]):
                        if x:
                            right[q] += c * x
            if left != right:
                return False
    # triples whose first product vanishes still need e_i (e_j e_k) = 0
    for j, k, w in a.products:
        for i in range(n):
            if any(sc[i][j]):
                continue
            right = [ZERO] * n
            for p, c in enumerate(w):
                if c:
                    for q, x in enumerate(sc[i][p]):
                        if x:
                            right[q] += c * x
            if any(right):
                return False
    return True


def derived_ideal(a: Algebra) -> Subspace:
    """A' = AA, the span of all basis products."""
    return Subspace.span((w for _, _, w in a.products), a.dim)


def center(a: Algebra) -> Subspace:
    """Two-sided annihilator ``{z : za = az = 0 for all a}``."""
    n = a.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append(tuple(a.sc[i][j][k] for i in range(n)))
            rows.append(tuple(a.sc[j][i][k] for i in range(n)))
    if not rows:
        return Subspace.whole(n)
    kernel = nullspace_basis(Matrix(tuple(rows), n))
    return Subspace.span(kernel.rows, n)


def power_chain(a: Algebra) -> list[Subspace]:
    """A = A^1 ⊇ A^2 ⊇ ... , stopping at 0 or when the chain stabilizes."""
    chain = [Subspace.whole(a.dim)]
    while chain[-1].dim:
        current = chain[-1]
        vecs = []
        for v in current.vectors:
            for i in range(a.dim):
                e = a.unit(i)
                vecs.append(a.mul(e, v))
                vecs.append(a.mul(v, e))
        nxt = Subspace.span(vecs, a.dim)
        if nxt == current:
            break
        chain.append(nxt)
    return chain


def is_nilpotent(a: Algebra) -> bool:
    return power_chain(a)[-1].dim == 0


def is_ideal(a: Algebra, s: Subspace) -> bool:
    for v in s.vectors:
        for i in range(a.dim):
            e = a.unit(i)
            if not (s.contains(a.mul(e, v)) and s.contains(a.mul(v, e))):
                return False
    return True


def quotient(a: Algebra, ideal: Subspace, check_ideal: bool = True) -> Algebra:
    """A/I on the basis vectors whose coordinates are not pivots of I."""
    if check_ideal and not is_ideal(a, ideal):
        raise NotAnIdeal(f"{ideal!r} is not a two-sided ideal")
    pivots = set(ideal.pivots)
    keep = [k for k in range(a.dim) if k not in pivots]
    products = {}
    for i_new, i in enumerate(keep):
        for j_new, j in enumerate(keep):
            w = ideal.reduce(a.sc[i][j])
            terms = {k_new: w[k] for k_new, k in enumerate(keep) if w[k]}
            if terms:
                products[(i_new, j_new)] = terms
    return Algebra.from_products([a.basis[k] for k in keep], products)


def subalgebra(a: Algebra, s: Subspace, names: Sequence[str] | None = None) -> Algebra:
    """The algebra structure on a multiplicatively closed subspace ``s``.

    Coordinates are taken against the rref basis of ``s``.
    """
    pivots = s.pivots
    vecs = s.vectors
    if names is None:
        names = []
        for r, v in enumerate(vecs):
            support = [k for k, x in enumerate(v) if x]
            if len(support) == 1 and v[support[0]] == 1:
                names.append(a.basis[support[0]])
            else:
                names.append(f"u{r + 1}")
    products = {}
    for r, u in enumerate(vecs):
        for t, v in enumerate(vecs):
            w = a.mul(u, v)
            if not any(w):
                continue
            if not s.contains(w):
                raise AlgebraError("subspace is not closed under multiplication")
            products[(r, t)] = {q: w[p] for q, p in enumerate(pivots) if w[p]}
    return Algebra.from_products(names, products)


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    n = a.dim
    names = list(a.basis)
    for name in b.basis:
        while name in names:
            name += "'"
        names.append(name)
    products = {}
    for i, j, w in a.products:
        products[(i, j)] = {k: c for k, c in enumerate(w) if c}
    for i, j, w in b.products:
        products[(n + i, n + j)] = {n + k: c for k, c in enumerate(w) if c}
    return Algebra.from_products(names, products)


def _line_vector(s: Subspace, what: str) -> Vector:
    if s.dim != 1:
        raise NotCentral(f"{what} must be 1-dimensional, got dim {s.dim}")
    return s.vectors[0]


def central_sum(a: Algebra, b: Algebra, za: Subspace, zb: Subspace) -> Algebra:
    """Glue the central lines ``za`` of ``a`` and ``zb`` of ``b``.

    The rref spanning vectors of the two lines are identified; the result has
    dimension ``dim a + dim b - 1``.
    """
    u = _line_vector(za, "za")
    v = _line_vector(zb, "zb")
    for alg, z, label in ((a, za, "za"), (b, zb, "zb")):
        if not z <= center(alg):
            raise NotCentral(f"{label} is not central")
        if not z <= derived_ideal(alg):
            raise NotInDerived(f"{label} is not contained in the derived ideal")
    s = direct_sum(a, b)
    glue = Subspace.span([u + tuple(-x for x in v)], s.dim)
    q = quotient(s, glue)
    # the a-side copy is the pivot that got dropped; give its name to the survivor
    dropped = glue.pivots[0]
    survivor = a.dim + zb.pivots[0]
    names = list(q.basis)
    names[names.index(s.basis[survivor])] = a.basis[dropped]
    return Algebra(q.dim, tuple(names), q.sc, q.checked)


def split_central_complement(a: Algebra) -> tuple[Subspace, Subspace] | None:
    """Split off a central line not inside A'.

    Returns ``(I, Z)`` with ``Z`` a 1-dimensional central subspace meeting A'
    trivially and ``I`` an ideal containing A' with ``A = I + Z`` direct, or
    ``None`` when ``Z(A)`` is contained in ``A'``.
    """
    n = a.dim
    derived = derived_ideal(a)
    cent = center(a)
    z = next((v for v in cent.vectors if not derived.contains(v)), None)
    if z is None:
        return None
    chosen: list[Vector] = []
    candidates = list(derived.vectors) + [v for v in cent.vectors if v != z]
    candidates += [a.unit(k) for k in range(n)]
    current = Subspace.span([z], n)
    for v in candidates:
        if len(chosen) == n - 1:
            break
        if not current.contains(v):
            chosen.append(v)
            current = current + Subspace.span([v], n)
    return Subspace.span(chosen, n), Subspace.span([z], n)


def permute_basis(a: Algebra, perm: Sequence[int]) -> Algebra:
    """Relabel so that new basis vector ``k`` is old basis vector ``perm[k]``."""
    inv = {old: new for new, old in enumerate(perm)}
    products = {}
    for i, j, w in a.products:
        products[(inv[i], inv[j])] = {inv[k]: c for k, c in enumerate(w) if c}
    return Algebra.from_products([a.basis[p] for p in perm], products)

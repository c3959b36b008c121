"""Reproducible random nilpotent associative algebras.

Samples are quotients of the free nilpotent algebra on ``g`` letters of
class ``c`` (words of length 1..c, product = concatenation, longer words
vanish). Every such quotient is associative and nilpotent by construction,
unlike a random structure-constant tensor.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from fractions import Fraction
from itertools import product

import numpy as np

from .algebra import Algebra, Subspace, quotient
from .linalg import Matrix, nullspace_basis
from .errors import BadParameter, SizeLimit

PRNG_NAME = "numpy.PCG64"
DEFAULT_CAP = 64


@dataclass(frozen=True)
class GenSpec:
    generators: int
    nilpotency_class: int
    target_dim: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.generators < 1:
            raise BadParameter("need at least one generator")
        if self.nilpotency_class < 2:
            raise BadParameter("nilpotency class must be at least 2")
        if self.target_dim is not None and self.target_dim < self.generators:
            raise BadParameter("target_dim below the number of generators")


def free_dim(g: int, c: int) -> int:
    return sum(g**k for k in range(1, c + 1))


@lru_cache(maxsize=None)
def free_nilpotent(g: int, c: int, cap: int = DEFAULT_CAP) -> Algebra:
    if g < 1 or c < 1:
        raise BadParameter("free_nilpotent needs g >= 1 and c >= 1")
    dim = free_dim(g, c)
    if dim > cap:
        raise SizeLimit(f"free nilpotent algebra F({g}, {c}) has dim {dim} > cap {cap}")
    letters = "x" if g == 1 else "abcdefghijklmnopqrstuvw"[:g]
    words = [w for k in range(1, c + 1) for w in product(range(g), repeat=k)]
    index = {w: i for i, w in enumerate(words)}
    products = {}
    for u in words:
        for v in words:
            if len(u) + len(v) <= c:
                products[(index[u], index[v])] = {index[u + v]: 1}
    names = ["".join(letters[k] for k in w) for w in words]
    a = Algebra.from_products(names, products, check=False)
    # concatenation is associative by construction
    return replace(a, checked=True)


def ideal_closure(a: Algebra, vectors, generators: int) -> Subspace:
    """Smallest two-sided ideal containing ``vectors``.

    ``a`` must be generated by its first ``generators`` basis vectors.
    """
    ideal = Subspace.span(vectors, a.dim)
    gens = [a.unit(k) for k in range(generators)]
    while True:
        new = [w for v in ideal.vectors for e in gens for w in (a.mul(e, v), a.mul(v, e))]
        grown = ideal + Subspace.span(new, a.dim)
        if grown == ideal:
            return ideal
        ideal = grown


def quotient_of_free(g: int, c: int, vectors, cap: int = DEFAULT_CAP) -> Algebra:
    free = free_nilpotent(g, c, cap)
    return quotient(free, ideal_closure(free, vectors, g))


def _annihilated_ideal(a: Algebra, functionals, generators: int) -> Subspace:
    """Ideal generated by the joint kernel U of ``functionals``.

    Dual form of ideal closure: the annihilator of the ideal generated by U
    is the largest subspace of span(functionals) stable under pullback by
    left and right multiplication with the generators. Shrink to it, then
    take its joint kernel.
    """
    n = a.dim
    maps = []
    for k in range(generators):
        e = a.unit(k)
        maps.append([a.mul(e, a.unit(j)) for j in range(n)])
        maps.append([a.mul(a.unit(j), e) for j in range(n)])
    w = Subspace.span(functionals, n)
    while w.dim:
        # keep sum c_r w_r whenever every pullback stays inside W
        rows = []
        for images in maps:
            residues = [
                w.reduce([sum(p * v[i] for i, p in enumerate(phi) if p) for v in images])
                for phi in w.vectors
            ]
            rows.extend(zip(*residues))
        kernel = nullspace_basis(Matrix(tuple(rows), w.dim))
        stable = Subspace.span(
            [
                [sum(c * phi[j] for c, phi in zip(coeffs, w.vectors)) for j in range(n)]
                for coeffs in kernel.rows
            ],
            n,
        )
        if stable == w:
            break
        w = stable
    if not w.dim:
        return Subspace.whole(n)
    return Subspace.span(nullspace_basis(w.basis).rows, n)


def random_quotient(spec: GenSpec, cap: int = DEFAULT_CAP) -> Algebra:
    """Quotient of F(g, c) by the ideal generated by a random subspace U.

    U is cut out inside the span of words of length >= 2 by ``q`` random
    functionals, ``q`` uniform in ``0..D`` (``D`` the dimension of that span),
    capped so the quotient has dimension at most ``target_dim``. Each
    functional has a random top word length k with entries in -2..2 on the
    words of length k, and half of them also on shorter words of length
    >= 2.
    """
    g, c = spec.generators, spec.nilpotency_class
    free = free_nilpotent(g, c, cap)
    rng = np.random.default_rng(spec.seed)
    depth = free.dim - g
    upper = depth if spec.target_dim is None else min(depth, spec.target_dim - g)
    q = int(rng.integers(0, upper + 1))
    lengths = [len(name) for name in free.basis]
    functionals = [free.unit(k) for k in range(g)]
    for _ in range(q):
        top = int(rng.integers(2, c + 1))
        mixed = bool(rng.integers(0, 2))
        phi = [Fraction(0)] * free.dim
        for j, length in enumerate(lengths):
            if length == top or (mixed and 2 <= length < top):
                phi[j] = Fraction(int(rng.integers(-2, 3)))
        functionals.append(tuple(phi))
    ideal = _annihilated_ideal(free, functionals, g)
    return quotient(free, ideal, check_ideal=False)


def sample_specs(count: int, seed: int, max_dim: int = 6, cap: int = DEFAULT_CAP):
    """Deterministic stream of GenSpecs over g in {1,2,3}, c in {2,3,4}.

    Shapes whose free algebra exceeds ``cap`` are skipped.
    """
    shapes = [
        (g, c)
        for g in (1, 2, 3)
        for c in (2, 3, 4)
        if free_dim(g, c) <= cap and g <= max_dim
    ]
    root = np.random.SeedSequence(seed)
    rng = np.random.default_rng(root)
    child_seeds = root.generate_state(count, dtype=np.uint64)
    for s in child_seeds:
        g, c = shapes[int(rng.integers(len(shapes)))]
        yield GenSpec(g, c, target_dim=max_dim, seed=int(s))

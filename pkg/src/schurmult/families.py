"""Named algebras and parametric families.

Extra special algebras come in five kinds (``J1``, ``Jn``, ``Gamma``, ``H2``,
``H2n``) closed under central sums. The remaining constructors build the
small non extra special algebras that show up around the ``t <= 10``
boundary: ``C3`` and the central extensions of ``A(1)`` by ``J1 + A(1)`` and
by the 3-dimensional extra special algebras.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .algebra import Algebra, Subspace, abelian, center, central_sum, derived_ideal, direct_sum
from .errors import AlgebraError, BadParameter, UnknownName
from .linalg import format_scalar, to_scalar

DEFAULT_LAMBDAS = (Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2))


@dataclass(frozen=True)
class ExtraSpecialWitness:
    algebra: Algebra
    z_line: Subspace


def _witness(a: Algebra, label: str) -> ExtraSpecialWitness:
    if not a.nilpotent:
        raise AlgebraError(f"{label}: transcribed table is not nilpotent")
    z = center(a)
    if z.dim != 1 or z != derived_ideal(a):
        raise AlgebraError(f"{label}: transcribed table is not extra special (Z = {z!r})")
    return ExtraSpecialWitness(a, z)


def _xs(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)] + ["z"]


def J1() -> ExtraSpecialWitness:
    return _witness(Algebra.from_names("xz", {"xx": {"z": 1}}), "J1")


def J(n: int) -> ExtraSpecialWitness:
    """J_n: x_i x_{i+1} = z."""
    if n < 2:
        raise BadParameter(f"J_n needs n >= 2, got {n}")
    products = {(i, i + 1): {n: 1} for i in range(n - 1)}
    return _witness(Algebra.from_products(_xs(n), products), f"J{n}")


def Gamma(n: int) -> ExtraSpecialWitness:
    if n < 2:
        raise BadParameter(f"Gamma_n needs n >= 2, got {n}")
    products: dict[tuple[int, int], dict[int, int]] = {}

    def put(i, j, sign):  # 1-based indices
        products.setdefault((i - 1, j - 1), {n: 0})[n] += sign

    for i in range(2, n + 1):
        put(i, n - i + 1, (-1) ** (n - i + 2))
        put(i, n - i + 2, (-1) ** (n - i + 2))
    put(1, n, (-1) ** (n + 1))
    return _witness(Algebra.from_products(_xs(n), products), f"Gamma{n}")


def H2(lam) -> ExtraSpecialWitness:
    lam = to_scalar(lam)
    if lam in (0, 1):
        raise BadParameter(f"H2(lambda) needs lambda not in {{0, 1}}, got {format_scalar(lam)}")
    products = {(0, 1): {2: 1}, (1, 0): {2: lam}}
    return _witness(Algebra.from_products(_xs(2), products), f"H2({format_scalar(lam)})")


def H2n(n: int, lam) -> ExtraSpecialWitness:
    """H_{2n}(lambda) for n >= 2, dimension 2n + 1."""
    lam = to_scalar(lam)
    if n < 2:
        raise BadParameter(f"H_2n needs n >= 2, got {n}; use H2 for n = 1")
    if lam == 0 or lam == (-1) ** (n + 1):
        raise BadParameter(
            f"H_{2 * n}(lambda) needs lambda not in {{0, {(-1) ** (n + 1)}}}, got {format_scalar(lam)}"
        )
    z = 2 * n
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(n):
        products[(i, n + i)] = {z: Fraction(1)}
        products[(n + i, i)] = {z: lam}
    for i in range(n - 1):
        products[(n + i, i + 1)] = {z: Fraction(1)}
    return _witness(Algebra.from_products(_xs(2 * n), products), f"H{2 * n}({format_scalar(lam)})")


def make_extra_special(kind: str, *params) -> ExtraSpecialWitness:
    builders = {"J1": J1, "Jn": J, "Gamma": Gamma, "H2": H2, "H2n": H2n}
    try:
        builder = builders[kind]
    except KeyError:
        raise UnknownName(f"unknown extra special kind {kind!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise BadParameter(f"{kind}: {exc}") from None


def central_sum_es(*parts: ExtraSpecialWitness) -> ExtraSpecialWitness:
    """Central sum of extra special algebras along their z lines."""
    acc = parts[0]
    for part in parts[1:]:
        a = central_sum(acc.algebra, part.algebra, acc.z_line, part.z_line)
        acc = _witness(a, "central sum")
    return acc


# ---------------------------------------------------------------------------
# named non extra special algebras


def C3() -> Algebra:
    return Algebra.from_names(
        ["x", "z", "z'"], {"xx": {"z": 1}, ("x", "z"): {"z'": 1}, ("z", "x"): {"z'": 1}}
    )


def _nonzero_alphas(alphas: Sequence) -> list[Fraction]:
    alphas = [to_scalar(x) for x in alphas]
    if len(alphas) != 3:
        raise BadParameter(f"expected three alpha parameters, got {len(alphas)}")
    if not any(alphas):
        raise BadParameter("at least one alpha must be nonzero")
    return alphas


def ext_t9(a1, a2, a3, beta=0) -> Algebra:
    """Central extension of A(1) = <z'> by J1 + A(1) on the basis x, z, a, z'."""
    a1, a2, a3 = _nonzero_alphas((a1, a2, a3))
    x, z, a, zp = 0, 1, 2, 3
    beta = to_scalar(beta)
    products = {
        (x, x): {z: 1},
        (x, z): {zp: beta},
        (z, x): {zp: beta},
        (x, a): {zp: a1},
        (a, x): {zp: a2},
        (a, a): {zp: a3},
    }
    return Algebra.from_products(["x", "z", "a", "z'"], products)


def ext_t10_i(a1, a2, a3) -> Algebra:
    """Extension of A(1) by J1 * J1 = <x, y, z : xx = yy = z>."""
    a1, a2, a3 = _nonzero_alphas((a1, a2, a3))
    x, y, z, zp = 0, 1, 2, 3
    products = {(x, x): {z: 1}, (x, y): {zp: a1}, (y, x): {zp: a2}, (y, y): {z: 1, zp: a3}}
    return Algebra.from_products(["x", "y", "z", "z'"], products)


def ext_t10_ii(a1, a2, a3) -> Algebra:
    """Extension of A(1) by J2 = <x, y, z : xy = z>."""
    a1, a2, a3 = _nonzero_alphas((a1, a2, a3))
    x, y, z, zp = 0, 1, 2, 3
    products = {(x, x): {zp: a1}, (x, y): {z: 1}, (y, x): {zp: a2}, (y, y): {zp: a3}}
    return Algebra.from_products(["x", "y", "z", "z'"], products)


def ext_t10_iii(a1, a2, a3) -> Algebra:
    """Extension of A(1) by Gamma2 (x2x1 = z, x2x2 = z, x1x2 = -z).

    z is normalized so that x2x1 = z exactly; the alphas sit on the other
    three products.
    """
    a1, a2, a3 = _nonzero_alphas((a1, a2, a3))
    x1, x2, z, zp = 0, 1, 2, 3
    products = {
        (x1, x1): {zp: a1},
        (x1, x2): {z: -1, zp: a2},
        (x2, x1): {z: 1},
        (x2, x2): {z: 1, zp: a3},
    }
    return Algebra.from_products(["x1", "x2", "z", "z'"], products)


def ext_t10_iv(lam, a1, a2, a3) -> Algebra:
    """Extension of A(1) by H2(lambda), with x1x2 = z kept exact."""
    lam = to_scalar(lam)
    if lam in (0, 1):
        raise BadParameter(f"H2(lambda) needs lambda not in {{0, 1}}, got {format_scalar(lam)}")
    a1, a2, a3 = _nonzero_alphas((a1, a2, a3))
    x1, x2, z, zp = 0, 1, 2, 3
    products = {
        (x1, x1): {zp: a1},
        (x1, x2): {z: 1},
        (x2, x1): {z: lam, zp: a2},
        (x2, x2): {zp: a3},
    }
    return Algebra.from_products(["x1", "x2", "z", "z'"], products)


EXTENSION_FAMILIES = {
    "ExtT9": ext_t9,
    "ExtT10_I": ext_t10_i,
    "ExtT10_II": ext_t10_ii,
    "ExtT10_III": ext_t10_iii,
    "ExtT10_IV": ext_t10_iv,
}


def make_extension_family(case: str, *params) -> Algebra:
    try:
        builder = EXTENSION_FAMILIES[case]
    except KeyError:
        raise UnknownName(f"unknown extension family {case!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise BadParameter(f"{case}: {exc}") from None


NAMED = {
    "C3": C3,
    "ExtT9_exemplar": lambda: ext_t9(0, 1, 0, 0),
    "ExtT10_II_exception": lambda: ext_t10_ii(1, 1, 0),
}


def make_named(name: str) -> Algebra:
    try:
        return NAMED[name]()
    except KeyError:
        raise UnknownName(f"unknown algebra name {name!r}") from None


# ---------------------------------------------------------------------------
# catalogues of extra special algebras


def primitive_extra_special(
    max_dim: int, lambdas: Sequence = DEFAULT_LAMBDAS
) -> list[tuple[str, ExtraSpecialWitness]]:
    """Members of the five kinds up to ``max_dim``, with sampled lambdas."""
    out: list[tuple[str, ExtraSpecialWitness]] = []
    if max_dim >= 2:
        out.append(("J1", J1()))
    for n in range(2, max_dim):
        out.append((f"J{n}", J(n)))
        out.append((f"Gamma{n}", Gamma(n)))
    for lam in lambdas:
        if max_dim >= 3 and to_scalar(lam) not in (0, 1):
            out.append((f"H2({format_scalar(to_scalar(lam))})", H2(lam)))
    for n in range(2, (max_dim - 1) // 2 + 1):
        for lam in lambdas:
            lam = to_scalar(lam)
            if lam != 0 and lam != (-1) ** (n + 1):
                out.append((f"H{2 * n}({format_scalar(lam)})", H2n(n, lam)))
    return out


def extra_special_of_dim(
    dim: int, lambdas: Sequence = DEFAULT_LAMBDAS
) -> list[tuple[str, ExtraSpecialWitness]]:
    """Every E(dim) reachable from the sampled primitives by central sums."""
    prims = primitive_extra_special(dim, lambdas)
    out = []
    # a central sum of parts of dims d_i has dim 1 + sum(d_i - 1)
    for count in range(1, dim):
        for combo in combinations_with_replacement(range(len(prims)), count):
            if 1 + sum(prims[k][1].algebra.dim - 1 for k in combo) != dim:
                continue
            label = "*".join(prims[k][0] for k in combo)
            out.append((label, central_sum_es(*(prims[k][1] for k in combo))))
    return out


# ---------------------------------------------------------------------------
# textual names, as used on the command line


def _split_params(text: str) -> list[str]:
    return [p for p in text.replace(":", ",").split(",") if p != ""]


def _parse_atom(text: str, lam=None) -> Algebra | ExtraSpecialWitness:
    kind, _, rest = text.partition(":")
    params = _split_params(rest)
    shorthand = re.fullmatch(r"(J|Gamma)(\d+)", kind)
    if shorthand and kind != "J1" and not params:
        kind, params = ("Jn" if shorthand[1] == "J" else "Gamma"), [shorthand[2]]
    try:
        if kind in ("A", "Abelian"):
            return abelian(int(params[0]))
        if kind == "J1":
            return J1()
        if kind in ("Jn", "J"):
            return J(int(params[0]))
        if kind == "Gamma":
            return Gamma(int(params[0]))
        if kind == "H2":
            value = params[0] if params else lam
            if value is None:
                raise BadParameter("H2 needs a lambda (H2:p/q or --lambda)")
            return H2(value)
        if kind == "H2n":
            value = params[1] if len(params) > 1 else lam
            if value is None:
                raise BadParameter("H2n needs a lambda (H2n:n:p/q or --lambda)")
            return H2n(int(params[0]), value)
        if kind in NAMED:
            return make_named(kind)
        if kind in EXTENSION_FAMILIES:
            if kind == "ExtT10_IV" and len(params) == 3 and lam is not None:
                params = [lam] + params
            return make_extension_family(kind, *params)
    except (IndexError, ValueError, ZeroDivisionError) as exc:
        raise BadParameter(f"bad parameters in {text!r}: {exc}") from None
    raise UnknownName(f"unknown algebra name {text!r}")


def parse_family(text: str, lam=None) -> Algebra:
    """Build an algebra from a name such as ``Jn:4``, ``H2:2/1`` or ``J1+A:2``.

    ``+`` forms direct sums and binds loosest; ``*`` forms central sums of
    extra special algebras along their z lines.
    """
    summands = []
    for term in text.split("+"):
        factors = [_parse_atom(f.strip(), lam) for f in term.split("*")]
        if len(factors) == 1:
            f = factors[0]
            summands.append(f.algebra if isinstance(f, ExtraSpecialWitness) else f)
            continue
        if not all(isinstance(f, ExtraSpecialWitness) for f in factors):
            raise BadParameter(f"central sums need extra special factors: {term!r}")
        summands.append(central_sum_es(*factors).algebra)
    acc = summands[0]
    for s in summands[1:]:
        acc = direct_sum(acc, s)
    return acc

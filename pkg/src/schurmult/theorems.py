"""Executable forms of the multiplier formulas and bounds, and the t <= 10 classifier."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from .algebra import (
    Algebra,
    Subspace,
    abelian,
    center,
    derived_ideal,
    direct_sum,
    power_chain,
    quotient,
    split_central_complement,
    subalgebra,
)
from .errors import PreconditionFailed
from .families import C3, DEFAULT_LAMBDAS, J1, extra_special_of_dim
from .multiplier import multiplier_dim, t_value


@dataclass(frozen=True)
class BoundReport:
    name: str
    lhs: int
    rhs: int
    holds: bool
    witness: dict = field(default_factory=dict)
    # False when the statement's hypothesis does not apply; holds is then vacuous
    applicable: bool = True

    def __str__(self) -> str:
        if not self.applicable:
            return f"{self.name}: not applicable"
        status = "holds" if self.holds else "FAILS"
        return f"{self.name}: lhs = {self.lhs}, rhs = {self.rhs}, {status}"

    def to_json(self) -> dict:
        return asdict(self)


def _quotient_dim(a: Algebra, s: Subspace) -> int:
    return a.dim - s.dim


def check_kunneth(a: Algebra, b: Algebra) -> BoundReport:
    """dim M(A + B) = dim M(A) + dim M(B) + 2 dim(A/A') dim(B/B')."""
    lhs = multiplier_dim(direct_sum(a, b))
    ab_a = _quotient_dim(a, derived_ideal(a))
    ab_b = _quotient_dim(b, derived_ideal(b))
    rhs = multiplier_dim(a) + multiplier_dim(b) + 2 * ab_a * ab_b
    return BoundReport("Kunneth", lhs, rhs, lhs == rhs, {"a": str(a), "b": str(b)})


def check_ideal_equality(a: Algebra) -> BoundReport:
    """t(I) + 2 dim I' = t(A) for a central splitting A = I + Z."""
    split = split_central_complement(a)
    if split is None:
        return BoundReport("IdealEquality", 0, 0, True, {"a": str(a)}, applicable=False)
    ideal, z = split
    sub = subalgebra(a, ideal)
    lhs = t_value(sub).t + 2 * derived_ideal(sub).dim
    rhs = t_value(a).t
    return BoundReport("IdealEquality", lhs, rhs, lhs == rhs, {"a": str(a), "I": str(sub), "Z": repr(z)})


def check_bound_i(a: Algebra, z: Subspace) -> BoundReport:
    """dim M(A) + 1 <= dim M(A/Z) + 2 dim(A/A') for a central line Z in A'."""
    if z.dim != 1:
        raise PreconditionFailed(f"Z must be 1-dimensional, got dim {z.dim}")
    if not z <= center(a):
        raise PreconditionFailed("Z is not central")
    derived = derived_ideal(a)
    if not z <= derived:
        raise PreconditionFailed("Z is not contained in A'")
    lhs = multiplier_dim(a) + 1
    rhs = multiplier_dim(quotient(a, z)) + 2 * _quotient_dim(a, derived)
    return BoundReport("BoundI", lhs, rhs, lhs <= rhs, {"a": str(a), "Z": repr(z)})


def check_bound_iii(a: Algebra) -> BoundReport:
    """dim M(A) <= dim M(A/A') + dim A' (2 dim(A/A') - 1)."""
    derived = derived_ideal(a)
    m = derived.dim
    lhs = multiplier_dim(a)
    rhs = multiplier_dim(quotient(a, derived)) + m * (2 * (a.dim - m) - 1)
    return BoundReport("BoundIII", lhs, rhs, lhs <= rhs, {"a": str(a)})


def check_derived_bound(a: Algebra) -> BoundReport:
    """t(A) >= m(m + 1) with m = dim A'."""
    m = derived_ideal(a).dim
    lhs = t_value(a).t
    rhs = m * (m + 1)
    return BoundReport("DerivedBound", lhs, rhs, lhs >= rhs, {"a": str(a)})


def is_extra_special(a: Algebra) -> bool:
    z = center(a)
    return z.dim == 1 and z == derived_ideal(a)


def check_corollary(a: Algebra) -> BoundReport:
    """t(A) = 2 dim A for extra special A, except t(J1) = 3."""
    if not is_extra_special(a):
        raise PreconditionFailed("algebra is not extra special")
    lhs = t_value(a).t
    rhs = 3 if a.dim == 2 else 2 * a.dim
    return BoundReport("Corollary", lhs, rhs, lhs == rhs, {"a": str(a)})


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassLabel:
    variant: str
    n: int | None = None
    k: int | None = None
    t: int | None = None
    reason: str | None = None

    def __str__(self) -> str:
        if self.variant == "Abelian":
            return f"Abelian({self.n})"
        if self.variant == "J1_plus_A":
            return f"J1_plus_A({self.k})"
        if self.variant == "E":
            return f"E({self.n})"
        if self.variant == "E_plus_A":
            return f"E({self.n})_plus_A({self.k})"
        if self.variant == "OutOfRange":
            return f"OutOfRange({self.t})"
        if self.variant == "Inconsistent":
            return f"Inconsistent({self.reason})"
        return self.variant


@dataclass(frozen=True)
class Fingerprint:
    n: int
    t: int
    dim_derived: int
    dim_center: int
    center_in_derived: bool
    extra_special: bool
    chain: tuple[int, ...]
    stripped: int
    core: Algebra
    core_t: int
    core_dim_derived: int
    core_extra_special: bool


def strip_abelian_summands(a: Algebra) -> tuple[Algebra, int]:
    """Split off central lines outside A' until Z(A) is inside A'."""
    k = 0
    while True:
        split = split_central_complement(a)
        if split is None:
            return a, k
        a = subalgebra(a, split[0])
        k += 1


def fingerprint(a: Algebra) -> Fingerprint:
    derived = derived_ideal(a)
    cent = center(a)
    core, k = strip_abelian_summands(a)
    return Fingerprint(
        n=a.dim,
        t=t_value(a).t,
        dim_derived=derived.dim,
        dim_center=cent.dim,
        center_in_derived=cent <= derived,
        extra_special=cent.dim == 1 and cent == derived,
        chain=tuple(s.dim for s in power_chain(a)),
        stripped=k,
        core=core,
        core_t=t_value(core).t,
        core_dim_derived=derived_ideal(core).dim,
        core_extra_special=is_extra_special(core),
    )


def _es_core(fp: Fingerprint, dim: int, k: int) -> bool:
    return fp.stripped == k and fp.core_extra_special and fp.core.dim == dim


# (label, predicate) candidates for each t the theorem lists
_CANDIDATES = {
    0: [(lambda fp: ClassLabel("Abelian", n=fp.n), lambda fp: fp.dim_derived == 0)],
    3: [(lambda fp: ClassLabel("J1"), lambda fp: _es_core(fp, 2, 0))],
    5: [(lambda fp: ClassLabel("J1_plus_A", k=1), lambda fp: _es_core(fp, 2, 1))],
    6: [(lambda fp: ClassLabel("E", n=3), lambda fp: _es_core(fp, 3, 0))],
    7: [(lambda fp: ClassLabel("J1_plus_A", k=2), lambda fp: _es_core(fp, 2, 2))],
    8: [
        (lambda fp: ClassLabel("E_plus_A", n=3, k=1), lambda fp: _es_core(fp, 3, 1)),
        (lambda fp: ClassLabel("E", n=4), lambda fp: _es_core(fp, 4, 0)),
        (
            lambda fp: ClassLabel("C3"),
            lambda fp: fp.stripped == 0
            and fp.n == 3
            and fp.dim_derived == 2
            and fp.dim_center == 1
            and fp.chain == (3, 2, 1, 0),
        ),
    ],
    9: [(lambda fp: ClassLabel("J1_plus_A", k=3), lambda fp: _es_core(fp, 2, 3))],
    10: [
        (lambda fp: ClassLabel("E_plus_A", n=3, k=2), lambda fp: _es_core(fp, 3, 2)),
        (lambda fp: ClassLabel("E_plus_A", n=4, k=1), lambda fp: _es_core(fp, 4, 1)),
        (lambda fp: ClassLabel("E", n=5), lambda fp: _es_core(fp, 5, 0)),
    ],
}


def _consistent(fp: Fingerprint, label: ClassLabel) -> str | None:
    # each stripped summand shifts t by 2 dim I' (I' is the core's A')
    if fp.t != fp.core_t + 2 * fp.stripped * fp.core_dim_derived:
        return f"t = {fp.t} but core t = {fp.core_t} with {fp.stripped} summands stripped"
    if fp.core_extra_special:
        expected = 3 if fp.core.dim == 2 else 2 * fp.core.dim
        if fp.core_t != expected:
            return f"extra special core of dim {fp.core.dim} has t = {fp.core_t}"
    if label.variant == "Abelian" and fp.t != 0:
        return "abelian with nonzero t"
    return None


def classify(a: Algebra) -> ClassLabel:
    fp = fingerprint(a)
    t = fp.t
    if t > 10:
        return ClassLabel("OutOfRange", t=t)
    if t in (1, 2, 4):
        return ClassLabel("Inconsistent", t=t, reason=f"no nilpotent algebra has t = {t}")
    for make, matches in _CANDIDATES[t]:
        if matches(fp):
            label = make(fp)
            problem = _consistent(fp, label)
            if problem:
                return ClassLabel("Inconsistent", t=t, reason=problem)
            return label
    return ClassLabel(
        "Inconsistent",
        t=t,
        reason=f"t = {t} with n = {fp.n}, dim A' = {fp.dim_derived}, "
        f"dim Z = {fp.dim_center}, {fp.stripped} abelian summands",
    )


# ---------------------------------------------------------------------------
# main theorem table


@dataclass(frozen=True)
class TheoremRow:
    item: str
    name: str
    dim: int
    dim_m: int
    t: int
    expected_t: int
    label: str
    expected_label: str

    @property
    def passed(self) -> bool:
        return self.t == self.expected_t and self.label == self.expected_label


@dataclass
class TheoremReport:
    rows: list[TheoremRow]
    forbidden: dict[int, list[str]]
    lambdas: list[str]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and not any(self.forbidden.values())

    def to_markdown(self) -> str:
        lines = [
            "| item | algebra | dim | dim M | t | expected t | label | pass |",
            "|---|---|---|---|---|---|---|---|",
        ]
        for r in self.rows:
            lines.append(
                f"| {r.item} | {r.name} | {r.dim} | {r.dim_m} | {r.t} | {r.expected_t} "
                f"| {r.label} | {'pass' if r.passed else 'FAIL'} |"
            )
        for t, hits in sorted(self.forbidden.items()):
            item = "ii" if t in (1, 2) else "iv"
            status = "pass" if not hits else "FAIL: " + ", ".join(hits)
            lines.append(f"| {item} | no algebra with t = {t} | | | | | | {status} |")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "lambdas": self.lambdas,
            "rows": [asdict(r) | {"passed": r.passed} for r in self.rows],
            "forbidden": {str(t): hits for t, hits in self.forbidden.items()},
        }


def _row(item: str, name: str, a: Algebra, expected_t: int, expected_label: str) -> TheoremRow:
    tv = t_value(a)
    return TheoremRow(item, name, a.dim, tv.dim_m, tv.t, expected_t, str(classify(a)), expected_label)


def main_theorem_instances(lambdas: Sequence = DEFAULT_LAMBDAS):
    """(item, name, algebra, expected t, expected label) for every listed class."""
    out = []
    for n in range(1, 5):
        out.append(("i", f"A({n})", abelian(n), 0, f"Abelian({n})"))
    j1 = J1().algebra
    out.append(("iii", "J1", j1, 3, "J1"))
    for k, item in ((1, "v"), (2, "vii"), (3, "ix")):
        out.append((item, f"J1+A({k})", direct_sum(j1, abelian(k)), 3 + 2 * k, f"J1_plus_A({k})"))
    e3 = extra_special_of_dim(3, lambdas)
    e4 = extra_special_of_dim(4, lambdas)
    e5 = extra_special_of_dim(5, lambdas)
    for name, w in e3:
        out.append(("vi", name, w.algebra, 6, "E(3)"))
    for name, w in e3:
        out.append(("viii", f"{name}+A(1)", direct_sum(w.algebra, abelian(1)), 8, "E(3)_plus_A(1)"))
    for name, w in e4:
        out.append(("viii", name, w.algebra, 8, "E(4)"))
    out.append(("viii", "C3", C3(), 8, "C3"))
    for name, w in e3:
        out.append(("x", f"{name}+A(2)", direct_sum(w.algebra, abelian(2)), 10, "E(3)_plus_A(2)"))
    for name, w in e4:
        out.append(("x", f"{name}+A(1)", direct_sum(w.algebra, abelian(1)), 10, "E(4)_plus_A(1)"))
    for name, w in e5:
        out.append(("x", name, w.algebra, 10, "E(5)"))
    return out


def verify_main_theorem(lambdas: Sequence = DEFAULT_LAMBDAS) -> TheoremReport:
    rows = [_row(*inst) for inst in main_theorem_instances(lambdas)]
    forbidden = {t: [r.name for r in rows if r.t == t] for t in (1, 2, 4)}
    return TheoremReport(rows, forbidden, [str(x) for x in lambdas])

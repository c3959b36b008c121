"""Randomized census: run every bound on random nilpotent algebras."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import Algebra, Subspace, abelian, center, derived_ideal
from .families import J1
from .multiplier import t_value, verify_cover_consistency
from .randgen import PRNG_NAME, random_quotient, sample_specs
from .serialize import dump_algebra
from .theorems import (
    check_bound_i,
    check_bound_iii,
    check_corollary,
    check_derived_bound,
    check_ideal_equality,
    check_kunneth,
    is_extra_special,
)

log = logging.getLogger(__name__)

FORBIDDEN_T = (1, 2, 4)


@dataclass
class FuzzReport:
    samples: int
    seed: int
    max_dim: int
    prng: str = PRNG_NAME
    t_histogram: Counter = field(default_factory=Counter)
    dim_histogram: Counter = field(default_factory=Counter)
    checks: Counter = field(default_factory=Counter)
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "max_dim": self.max_dim,
            "prng": self.prng,
            "t_histogram": {str(k): v for k, v in sorted(self.t_histogram.items())},
            "dim_histogram": {str(k): v for k, v in sorted(self.dim_histogram.items())},
            "checks": dict(sorted(self.checks.items())),
            "violations": self.violations,
            "passed": self.passed,
        }

    def format(self) -> str:
        lines = [
            f"samples: {self.samples} (seed {self.seed}, {self.prng}, dim <= {self.max_dim})",
            "t histogram: " + ", ".join(f"{k}:{v}" for k, v in sorted(self.t_histogram.items())),
            "checks run: " + ", ".join(f"{k}={v}" for k, v in sorted(self.checks.items())),
            f"violations: {len(self.violations)}",
        ]
        for v in self.violations[:20]:
            lines.append(f"  sample {v['sample']} (seed {v['seed']}): {v['check']}: {v['detail']}")
        return "\n".join(lines)


def sample_checks(a: Algebra, partners=()) -> list:
    """Every bound report that applies to ``a``."""
    reports = [check_derived_bound(a), check_bound_iii(a)]
    split = check_ideal_equality(a)
    if split.applicable:
        reports.append(split)
    lines = center(a).intersect(derived_ideal(a))
    for v in lines.vectors:
        reports.append(check_bound_i(a, Subspace.span([v], a.dim)))
    if is_extra_special(a):
        reports.append(check_corollary(a))
    for b in partners:
        reports.append(check_kunneth(a, b))
    return reports


def run_bound_fuzz(
    samples: int = 500,
    seed: int = 0,
    max_dim: int = 6,
    dump_dir=None,
    cover_check: bool = False,
    kunneth_dim: int = 8,
) -> FuzzReport:
    report = FuzzReport(samples, seed, max_dim)
    if dump_dir is not None:
        Path(dump_dir).mkdir(parents=True, exist_ok=True)
    named = [J1().algebra, abelian(1)]
    previous = None
    for index, spec in enumerate(sample_specs(samples, seed, max_dim)):
        a = random_quotient(spec)
        if dump_dir is not None:
            dump_algebra(a, Path(dump_dir) / f"sample_{index:04d}.json")
        t = t_value(a).t
        report.t_histogram[t] += 1
        report.dim_histogram[a.dim] += 1

        def violation(check, detail):
            log.warning("sample %d violates %s: %s", index, check, detail)
            report.violations.append(
                {"sample": index, "seed": spec.seed, "g": spec.generators,
                 "c": spec.nilpotency_class, "check": check, "detail": detail}
            )

        if not (a.checked and a.nilpotent):
            violation("generator", "sample not associative and nilpotent")
            continue
        if t in FORBIDDEN_T:
            violation("ForbiddenT", f"t = {t} for {a}")
        partners = [b for b in named if a.dim + b.dim <= kunneth_dim]
        if previous is not None and a.dim + previous.dim <= kunneth_dim:
            partners.append(previous)
        for r in sample_checks(a, partners):
            report.checks[r.name] += 1
            if not r.holds:
                violation(r.name, str(r))
        if cover_check:
            report.checks["CoverConsistency"] += 1
            if not verify_cover_consistency(a):
                violation("CoverConsistency", str(a))
        previous = a
    return report

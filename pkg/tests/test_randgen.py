import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurmult.algebra import Subspace, center, check_associativity, derived_ideal, is_nilpotent
from schurmult.errors import BadParameter, SizeLimit
from schurmult.families import C3, J1
from schurmult.linalg import nullspace_basis
from schurmult.multiplier import t_value
from schurmult.randgen import (
    GenSpec,
    _annihilated_ideal,
    free_nilpotent,
    ideal_closure,
    quotient_of_free,
    random_quotient,
    sample_specs,
)
from strategies import specs


def test_free_small_cases():
    assert free_nilpotent(1, 2).sc == J1().algebra.sc
    assert free_nilpotent(1, 3).sc == C3().sc
    f = free_nilpotent(2, 2)
    assert f.dim == 6 and derived_ideal(f).dim == 4
    assert derived_ideal(f) == Subspace.span([[int(k == i) for k in range(6)] for i in range(2, 6)], 6)


def test_free_size_limit():
    with pytest.raises(SizeLimit):
        free_nilpotent(3, 4)
    assert free_nilpotent(3, 4, cap=200).dim == 120


def test_extreme_quotients():
    f = free_nilpotent(2, 3)
    degree2 = [[int(k == i) for k in range(f.dim)] for i in range(2, f.dim)]
    assert quotient_of_free(2, 3, degree2).is_abelian
    assert quotient_of_free(2, 3, degree2).dim == 2
    assert quotient_of_free(2, 3, []).sc == f.sc


def test_genspec_validation():
    with pytest.raises(BadParameter):
        GenSpec(0, 2)
    with pytest.raises(BadParameter):
        GenSpec(2, 1)
    with pytest.raises(BadParameter):
        GenSpec(3, 2, target_dim=2)


def test_determinism():
    spec = GenSpec(2, 3, target_dim=6, seed=1234)
    assert random_quotient(spec) == random_quotient(spec)
    assert list(sample_specs(20, 7)) == list(sample_specs(20, 7))


@settings(max_examples=80, deadline=None)
@given(specs)
def test_samples_are_valid(spec):
    a = random_quotient(spec)
    assert a.checked and check_associativity(a) and is_nilpotent(a)
    assert spec.generators <= a.dim <= spec.target_dim


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2), st.integers(2, 3), st.integers(0, 2**32))
def test_dual_closure_matches_primal(g, c, seed):
    f = free_nilpotent(g, c)
    rng = np.random.default_rng(seed)
    functionals = [f.unit(k) for k in range(g)]
    functionals += [tuple(int(x) for x in rng.integers(-1, 2, f.dim)) for _ in range(rng.integers(0, 4))]
    kernel = nullspace_basis(Subspace.span(functionals, f.dim).basis).rows
    assert _annihilated_ideal(f, functionals, g) == ideal_closure(f, kernel, g)


def test_census_coverage():
    ts = [t_value(random_quotient(s)).t for s in sample_specs(500, 0)]
    assert 0 in ts
    assert len({t for t in ts if t}) >= 3
    assert not {1, 2, 4} & set(ts)


def test_center_nonzero_on_samples():
    for s in sample_specs(50, 3):
        assert center(random_quotient(s)).dim > 0

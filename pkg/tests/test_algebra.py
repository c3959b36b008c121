from fractions import Fraction

import pytest
from hypothesis import given, settings

from schurmult.algebra import (
    Algebra,
    Subspace,
    abelian,
    center,
    central_sum,
    check_associativity,
    derived_ideal,
    direct_sum,
    is_ideal,
    is_nilpotent,
    permute_basis,
    power_chain,
    quotient,
    split_central_complement,
    subalgebra,
)
from schurmult.errors import NotAssociative, NotAnIdeal, NotCentral, NotInDerived
from schurmult.families import C3, J, J1
from schurmult.multiplier import t_value
from strategies import nilpotent_algebras


def e(n, *coords):
    v = [0] * n
    for i in coords:
        v[i] = 1
    return v


def line(n, i):
    return Subspace.span([e(n, i)], n)


def same_table(a: Algebra, b: Algebra) -> bool:
    return a.dim == b.dim and a.sc == b.sc


def test_associativity_examples():
    assert check_associativity(abelian(3))
    assert check_associativity(J1().algebra)
    bad = Algebra.from_names(["x", "z"], {"xx": {"z": 1}, "zz": {"x": 1}}, check=False)
    assert not check_associativity(bad)
    with pytest.raises(NotAssociative):
        Algebra.from_names(["x", "z"], {"xx": {"z": 1}, "zz": {"x": 1}})


def test_derived_ideal_examples():
    assert derived_ideal(abelian(4)).dim == 0
    assert derived_ideal(J1().algebra) == line(2, 1)
    assert derived_ideal(C3()) == Subspace.span([e(3, 1), e(3, 2)], 3)


def test_center_examples():
    assert center(abelian(3)) == Subspace.whole(3)
    assert center(J(2).algebra) == line(3, 2)
    a = direct_sum(J1().algebra, abelian(1))
    assert center(a) == Subspace.span([e(3, 1), e(3, 2)], 3)


def test_power_chain_examples():
    assert [s.dim for s in power_chain(abelian(3))] == [3, 0]
    assert [s.dim for s in power_chain(C3())] == [3, 2, 1, 0]
    assert power_chain(C3())[2] == line(3, 2)
    idem = Algebra.from_names(["e"], {"ee": {"e": 1}})
    assert not is_nilpotent(idem)
    assert is_nilpotent(C3())


def test_quotient_examples():
    j1 = J1().algebra
    assert same_table(quotient(j1, line(2, 1)), abelian(1))
    assert same_table(quotient(C3(), line(3, 2)), j1)
    assert same_table(quotient(C3(), Subspace.zero(3)), C3())
    with pytest.raises(NotAnIdeal):
        quotient(j1, line(2, 0))


def test_direct_sum_examples():
    assert same_table(direct_sum(abelian(1), abelian(2)), abelian(3))
    a = direct_sum(J1().algebra, abelian(1))
    assert a.dim == 3 and derived_ideal(a).dim == 1 and t_value(a).t == 5


def test_central_sum_examples():
    j1 = J1().algebra
    a = central_sum(j1, j1, line(2, 1), line(2, 1))
    expected = Algebra.from_names(["x", "x'", "z"], {"xx": {"z": 1}, ("x'", "x'"): {"z": 1}})
    assert a.dim == 3
    assert sorted(a.products) == sorted(expected.products)
    assert center(a).dim == derived_ideal(a).dim == 1
    b = central_sum(j1, J(2).algebra, line(2, 1), line(3, 2))
    assert b.dim == 4 and center(b) == derived_ideal(b) and center(b).dim == 1
    with pytest.raises(NotCentral):
        central_sum(j1, j1, line(2, 0), line(2, 1))
    a1 = direct_sum(J1().algebra, abelian(1))
    with pytest.raises(NotInDerived):
        central_sum(a1, j1, line(3, 2), line(2, 1))


def test_split_examples():
    a = direct_sum(J1().algebra, abelian(1))
    ideal, z = split_central_complement(a)
    assert z == line(3, 2)
    assert same_table(subalgebra(a, ideal), J1().algebra)
    assert split_central_complement(J(2).algebra) is None
    ideal, z = split_central_complement(abelian(2))
    sub = subalgebra(abelian(2), ideal)
    assert t_value(sub).t + 2 * derived_ideal(sub).dim == t_value(abelian(2)).t == 0


def test_derived_of_direct_sum():
    a = direct_sum(C3(), J1().algebra)
    assert derived_ideal(a).dim == derived_ideal(C3()).dim + 1


def test_format():
    a = Algebra.from_names(["x", "z"], {"xx": {"z": Fraction(1, 2)}})
    assert str(a) == "<x, z : xx = (1/2)z>"


@settings(max_examples=60, deadline=None)
@given(nilpotent_algebras)
def test_structural_invariants(a):
    derived, cent = derived_ideal(a), center(a)
    assert is_ideal(a, derived) and is_ideal(a, cent)
    assert cent.dim > 0
    assert derived.dim < a.dim
    assert quotient(a, derived).is_abelian
    assert check_associativity(direct_sum(a, J1().algebra))


@settings(max_examples=60, deadline=None)
@given(nilpotent_algebras)
def test_split_invariants(a):
    split = split_central_complement(a)
    derived, cent = derived_ideal(a), center(a)
    if split is None:
        assert cent <= derived
        return
    ideal, z = split
    assert z.dim == 1 and z <= cent
    assert z.intersect(derived).dim == 0
    assert derived <= ideal
    assert (ideal + z).dim == a.dim and ideal.intersect(z).dim == 0
    assert is_ideal(a, ideal)


@settings(max_examples=30, deadline=None)
@given(nilpotent_algebras)
def test_central_sum_with_j1_is_associative(a):
    lines = center(a).intersect(derived_ideal(a))
    if not lines.dim:
        return
    za = Subspace.span([lines.vectors[0]], a.dim)
    s = central_sum(a, J1().algebra, za, line(2, 1))
    assert s.dim == a.dim + 1 and check_associativity(s)


def test_permute_basis_roundtrip():
    a = C3()
    b = permute_basis(a, [2, 0, 1])
    assert derived_ideal(b).dim == 2 and t_value(b).t == 8

from fractions import Fraction

import pytest

from schurmult.algebra import Algebra, center, check_associativity, derived_ideal, is_nilpotent
from schurmult.errors import BadParameter, UnknownName
from schurmult.families import (
    DEFAULT_LAMBDAS,
    EXTENSION_FAMILIES,
    H2,
    J,
    Gamma,
    H2n,
    ext_t10_iv,
    extra_special_of_dim,
    make_extension_family,
    make_extra_special,
    make_named,
    parse_family,
)
from schurmult.multiplier import multiplier_dim, t_value
from schurmult.theorems import fingerprint


def table(a: Algebra) -> dict:
    return {
        (a.basis[i], a.basis[j]): a.format_vector(w) for i, j, w in a.products
    }


def test_extra_special_tables():
    assert table(make_extra_special("J1").algebra) == {("x", "x"): "z"}
    assert table(make_extra_special("Jn", 3).algebra) == {("x1", "x2"): "z", ("x2", "x3"): "z"}
    assert table(make_extra_special("H2", 2).algebra) == {("x1", "x2"): "z", ("x2", "x1"): "2z"}
    g2 = make_extra_special("Gamma", 2)
    assert g2.algebra.dim == 3 and g2.z_line == center(g2.algebra) == derived_ideal(g2.algebra)


def test_named_tables():
    assert table(make_named("C3")) == {("x", "x"): "z", ("x", "z"): "z'", ("z", "x"): "z'"}
    assert table(make_named("ExtT9_exemplar")) == {("x", "x"): "z", ("a", "x"): "z'"}
    assert table(make_named("ExtT10_II_exception")) == {
        ("x", "x"): "z'", ("x", "y"): "z", ("y", "x"): "z'"
    }
    assert table(make_extension_family("ExtT10_I", 1, 0, 0)) == {
        ("x", "x"): "z", ("x", "y"): "z'", ("y", "y"): "z"
    }
    assert make_extension_family("ExtT9", 0, 1, 0, 0) == make_named("ExtT9_exemplar")


@pytest.mark.parametrize(
    "call",
    [
        lambda: H2(0),
        lambda: H2(1),
        lambda: H2n(2, -1),
        lambda: H2n(3, 1),
        lambda: H2n(2, 0),
        lambda: J(1),
        lambda: Gamma(1),
        lambda: make_extension_family("ExtT9", 0, 0, 0, 1),
        lambda: make_extension_family("ExtT10_II", 0, 0, 0),
        lambda: ext_t10_iv(1, 1, 0, 0),
        lambda: make_extension_family("ExtT10_I", 1),
    ],
)
def test_bad_parameters(call):
    with pytest.raises(BadParameter):
        call()


def test_unknown_names():
    with pytest.raises(UnknownName):
        make_named("D7")
    with pytest.raises(UnknownName):
        parse_family("Nope:3")


def test_every_kind_is_extra_special_with_theorem_dims():
    kinds = [J(n) for n in (2, 3, 4)] + [Gamma(n) for n in (2, 3, 4, 5)]
    kinds += [H2(l) for l in DEFAULT_LAMBDAS]
    kinds += [H2n(2, l) for l in DEFAULT_LAMBDAS if l != -1]
    for w in kinds:
        a = w.algebra
        assert check_associativity(a) and is_nilpotent(a)
        assert center(a) == derived_ideal(a) == w.z_line and w.z_line.dim == 1
        assert multiplier_dim(a) == (a.dim - 1) ** 2 - 1
        assert t_value(a).t == 2 * a.dim


def test_extension_families_are_nilpotent():
    for name, builder in EXTENSION_FAMILIES.items():
        params = (2, 1, 0, 1) if name == "ExtT10_IV" else (1, 0, 1)
        a = builder(*params)
        assert check_associativity(a) and is_nilpotent(a), name


def test_central_sum_counts():
    assert [len(extra_special_of_dim(d)) for d in (3, 4, 5)] == [7, 9, 35]


@pytest.mark.parametrize("lam", DEFAULT_LAMBDAS)
def test_h2_inverse_lambda_fingerprint(lam):
    a, b = H2(lam).algebra, H2(1 / Fraction(lam)).algebra
    fa, fb = fingerprint(a), fingerprint(b)
    key = lambda f: (f.dim_derived, f.dim_center, f.t, f.chain)  # noqa: E731
    assert key(fa) == key(fb)
    assert multiplier_dim(a) == multiplier_dim(b)
    assert t_value(a).t == 6


def test_parse_family():
    assert parse_family("J1+A:2").dim == 4
    assert parse_family("J1*J1").dim == 3
    assert parse_family("Jn:2") == parse_family("J2")
    assert parse_family("H2", lam="3") == H2(3).algebra
    assert parse_family("H2n:2:3") == H2n(2, 3).algebra
    assert t_value(parse_family("ExtT9:0,1,0,0")).t == 12
    with pytest.raises(BadParameter):
        parse_family("H2")
    with pytest.raises(BadParameter):
        parse_family("C3*J1")

"""Exact-oracle examples, self-identities, and float-vs-oracle agreement."""

from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from strategies import integer_events, pythagorean_betas, rational_tans

from relkin import (
    DegenerateRotatedVelocityError,
    Event1D,
    InvalidParametersError,
    IrrationalRootError,
    ReciprocityAxis,
    RelkinError,
    UnknownFamilyError,
    Vec3,
    ZeroCoordinateError,
    ZeroVelocityError,
    boost1d,
    kin3d,
    oracle,
    reciprocity,
    scalar,
)
from relkin.oracle import INF, ComplexRational, I
from relkin.sampling import rotation_for_tan

TANS = [F(0), F(1, 2), F(1), F(2), INF]


def c(re, im=0):
    return ComplexRational(F(re), F(im))


# ComplexRational


def test_complex_rational_arithmetic():
    a = c(1, 2)
    assert a * a == c(-3, 4)
    assert a / c(3, 4) == c(F(11, 25), F(2, 25))
    assert a - 1 == c(0, 2)
    assert 1 - a == c(0, -2)
    assert 2 / c(0, 1) == c(0, -2)
    assert a**3 == a * a * a
    assert I * I == -1
    assert complex(a) == 1 + 2j
    assert str(c(0)) == "0/1 + 0/1i"


def test_complex_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        c(1) / 0
    with pytest.raises(ZeroDivisionError):
        c(1) / c(0, 0)


def test_fractions_in_lowest_terms():
    assert c(F(2, 4)).re == F(1, 2)
    assert oracle.fraction_str(F(-6, 8)) == "-3/4"


def test_exact_sqrt():
    assert oracle.exact_sqrt(F(16, 25)) == F(4, 5)
    with pytest.raises(IrrationalRootError):
        oracle.exact_sqrt(F(1, 2))
    with pytest.raises(IrrationalRootError):
        oracle.exact_sqrt(-1)


def test_as_tan():
    assert oracle.as_tan("inf") is INF
    assert oracle.as_tan("1/2") == F(1, 2)
    assert oracle.as_tan(float("inf")) is INF
    with pytest.raises(RelkinError):
        oracle.as_tan(0.5)


# generators


@pytest.mark.parametrize(
    "m, n, beta, root", [(2, 1, F(3, 5), F(4, 5)), (3, 2, F(5, 13), F(12, 13))]
)
def test_gen_pythagorean_beta(m, n, beta, root):
    p = oracle.gen_pythagorean_beta(m, n)
    assert (p.beta, p.root) == (beta, root)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (2, 0)])
def test_gen_pythagorean_beta_invalid(m, n):
    with pytest.raises(InvalidParametersError):
        oracle.gen_pythagorean_beta(m, n)


def test_pythagorean_betas_have_rational_roots():
    for p in oracle.pythagorean_betas(10):
        assert p.beta**2 + p.root**2 == 1


@pytest.mark.parametrize(
    "family, scale, norm",
    [((1, 2, 2), F(1, 5), F(3, 5)), ((3, 4, 0), F(1, 5), 1), ((2, 3, 6), F(1, 7), 1)],
)
def test_gen_rational_vec3(family, scale, norm):
    vec, got = oracle.gen_rational_vec3(family, scale)
    assert got == norm
    assert oracle.dot(vec, vec) == norm**2


def test_gen_rational_vec3_unknown():
    with pytest.raises(UnknownFamilyError):
        oracle.gen_rational_vec3((1, 1, 1))
    with pytest.raises(UnknownFamilyError):
        oracle.gen_rational_vec3(99)


def test_every_family_has_integer_norm():
    for vec, norm in oracle.VECTOR_FAMILIES.items():
        assert sum(x * x for x in vec) == norm**2


# frozen exact values


def test_oracle_examples():
    assert oracle.oracle_eval("compose", F(3, 5), F(4, 5)) == F(35, 37)
    assert oracle.oracle_eval("invariance_residual_1d", 4, 5, F(3, 5), 1) == 0
    with pytest.raises(ZeroVelocityError):
        oracle.oracle_eval("slowness", 0)
    with pytest.raises(RelkinError):
        oracle.oracle_eval("no_such_op")


def test_frozen_1d_values():
    assert oracle.boost_event(4, 5, F(3, 5)) == (F(5, 4), F(13, 4))
    assert oracle.reciprocal_symmetry_residual(F(3, 5), F(4, 5)) == 0
    assert oracle.rotate_velocity(F(3, 5), 1) == c(F(15, 17), F(8, 17))
    assert oracle.rotate_velocity(F(1, 2), INF) == 2
    assert oracle.rotate_coordinate(3, 5, 1) == c(F(75, 17), F(40, 17))
    assert oracle.rotate_coordinate(4, 5, INF) == F(25, 4)
    assert oracle.g_factor(4, 5, F(3, 5), 0) == F(5, 4)
    assert oracle.g_factor(4, 5, F(3, 5), 1) == c(F(13, 40), F(7, 8))
    assert oracle.g_factor(4, 5, F(3, 5), INF) == F(-3, 5)


@pytest.mark.parametrize("r", TANS)
def test_generalized_boost_exact(r):
    assert oracle.generalized_boost(4, 5, F(3, 5), r) == (F(5, 4), F(13, 4))
    assert oracle.invariance_residual_1d(4, 5, F(3, 5), r) == 0


def test_compose_tans():
    assert oracle.compose_tans(1, 1) is INF
    assert oracle.compose_tans(INF, INF) == 0
    assert oracle.compose_tans(F(1, 2), 0) == F(1, 2)
    assert oracle.compose_tans(INF, 2) == F(-1, 2)


def test_frozen_3d_values():
    V = (F(9, 25), F(12, 25), F(0))
    n = (1, 0, 0)
    assert oracle.reciprocal_velocity_3d((F(3, 5), 0, 0), n) == (F(5, 3), 0, 0)
    assert oracle.reciprocal_velocity_3d(V, n) == (F(109, 45), F(4, 15), 0)
    X = (F(9, 5), F(12, 5), F(0))
    x_star = oracle.reciprocal_position_3d(X, 5, n)
    assert x_star == (F(109, 9), F(4, 3), 0)
    assert oracle.dot(x_star, X) == 25
    assert oracle.rotate_velocity_3d(V, n, INF) == (F(109, 45), F(4, 15), 0)
    assert oracle.rotate_position_3d((3, 0, 0), 5, n, 1) == (c(F(75, 17), F(40, 17)), 0, 0)
    assert oracle.G_factor((4, 0, 0), 5, (F(3, 5), 0, 0), n, 1) == c(F(13, 40), F(7, 8))
    assert oracle.G_factor((4, 0, 0), 5, (F(3, 5), 0, 0), n, INF) == F(-3, 5)
    X_out, t_out = oracle.generalized_boost_3d((0, 0, 0), 1, (F(3, 5), 0, 0), n, 0)
    assert (X_out, t_out) == ((F(-3, 4), 0, 0), F(5, 4))


def test_worldline_example_is_exactly_invariant():
    # X = V t, so the general-configuration example is on the worldline
    X, V = (F(9, 5), F(12, 5), F(0)), (F(9, 25), F(12, 25), F(0))
    assert oracle.invariance_residual_3d(X, 5, V, (1, 0, 0), 1) == 0
    assert oracle.generalized_boost_3d(X, 5, V, (1, 0, 0), 1) == ((0, 0, 0), 4)


def test_general_configuration_residual_is_nonzero():
    X, V = (F(1, 5), F(2, 5), F(2, 5)), (F(9, 25), F(12, 25), F(0))
    res = oracle.invariance_residual_3d(X, 1, V, (1, 0, 0), 1)
    assert res == c(F(20130560072, 424041328125), F(-11536981256, 706735546875))
    dx, dy, dz, dt = oracle.collapse_difference_3d(X, 1, V, (1, 0, 0), 1)
    assert dz == c(F(-26, 125), F(106, 1125))
    assert dt == c(F(-61, 1125), F(7, 375))


def test_oracle_errors():
    with pytest.raises(IrrationalRootError):
        oracle.generalized_boost_3d((F(1, 10), 0, 0), 1, (0, F(3, 5), 0), (1, 0, 0), 1)
    with pytest.raises(DegenerateRotatedVelocityError):
        oracle.generalized_boost_3d((F(3, 5), 0, 0), 1, (0, F(3, 5), 0), (1, 0, 0), F(3, 4))
    with pytest.raises(ZeroCoordinateError):
        oracle.rotate_coordinate(0, 1, INF)


# exact self-identities


@given(pythagorean_betas(), pythagorean_betas(), st.sampled_from("+-"))
def test_exact_reciprocal_symmetry(u, v, sign):
    try:
        assert oracle.reciprocal_symmetry_residual(u, v, sign) == 0
    except RelkinError:
        assume(False)


@given(integer_events(), pythagorean_betas(), st.one_of(rational_tans(), st.just(INF)))
def test_exact_1d_identities(ev, beta, r):
    x, t = ev
    x_std, t_std = oracle.boost_event(x, t, beta)
    assert oracle.interval(x_std, t_std) == oracle.interval(x, t)
    assert oracle.invariance_residual_1d(x, t, beta, r) == 0
    assert oracle.collapse_difference_1d(x, t, beta, r) == (0, 0)


# differential agreement, float vs exact


def cclose(a, b, tol=1e-12):
    a, b = complex(a), complex(b)
    return abs(a.real - b.real) < tol and abs(a.imag - b.imag) < tol


@given(integer_events(), pythagorean_betas(), st.one_of(rational_tans(), st.just(INF)))
def test_differential_1d(ev, beta, r):
    x, t = ev
    rot = rotation_for_tan(r)
    e = Event1D(float(x), float(t))
    b = float(beta)
    assert cclose(scalar.compose(b, b / 2), oracle.compose(beta, beta / 2))
    assert cclose(reciprocity.rotate_velocity(b, rot), oracle.rotate_velocity(beta, r))
    assert cclose(reciprocity.rotate_coordinate(e, rot), oracle.rotate_coordinate(x, t, r))
    assert cclose(boost1d.g_factor(e, b, rot), oracle.g_factor(x, t, beta, r))
    for got, want in zip(boost1d.generalized_boost(e, b, rot), oracle.generalized_boost(x, t, beta, r)):
        assert cclose(got, want)


@st.composite
def exact_configs(draw):
    from relkin.sampling import exact_config_3d, check_rng

    return exact_config_3d(check_rng(draw(st.integers(0, 2**32)), "differential"))


@given(exact_configs(), st.one_of(rational_tans(), st.just(INF)))
def test_differential_3d(cfg, r):
    X, t, V, n = cfg["X"], cfg["t"], cfg["V"], cfg["n"]
    fX, fV = Vec3(*map(float, X)), Vec3(*map(float, V))
    ax = ReciprocityAxis(Vec3(*map(float, n)), rotation_for_tan(r))
    pairs = [
        (kin3d.reciprocal_velocity_3d(fV, ax), oracle.reciprocal_velocity_3d(V, n)),
        (kin3d.reciprocal_position_3d(fX, float(t), ax), oracle.reciprocal_position_3d(X, t, n)),
        (kin3d.rotate_velocity_3d(fV, ax), oracle.rotate_velocity_3d(V, n, r)),
        (kin3d.rotate_position_3d(fX, float(t), ax), oracle.rotate_position_3d(X, t, n, r)),
    ]
    for got, want in pairs:
        for a, b in zip(got, want):
            assert cclose(a, b, 1e-12 * max(1.0, abs(complex(b))))
    assert cclose(kin3d.G_factor(fX, float(t), fV, ax), oracle.G_factor(X, t, V, n, r))
    try:
        want = oracle.generalized_boost_3d(X, t, V, n, r)
    except DegenerateRotatedVelocityError:
        return
    got = kin3d.generalized_boost_3d(fX, float(t), fV, ax)
    scale = max(1.0, max(abs(complex(v)) for v in (*want[0], want[1])))
    for a, b in zip((*got.X_out, got.t_out), (*want[0], want[1])):
        assert cclose(a, b, 1e-12 * scale)

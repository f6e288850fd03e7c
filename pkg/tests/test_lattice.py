import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from floer_gamma.bounds import _det
from floer_gamma.engine import ConsistencyError
from floer_gamma.lattice import (
    QuadraticForm,
    SpincParameters,
    audit_inequality_chain,
    c1_squared,
    c1_squared_closed_form,
    c1_vector,
    choose_epsilon,
    d_b_circle_bundle,
    euler_from_class,
    euler_of_f,
    q_wbar,
    random_parameters,
    run_audit,
    self_intersection_m,
    surface_class,
)


def brute_square(p: SpincParameters) -> int:
    """Square of the class by expanding the form entry by entry."""
    v = surface_class(p)
    q = q_wbar(p.n).matrix
    return sum(v[r] * q[r][c] * v[c] for r in range(len(v)) for c in range(len(v)))


def test_q_wbar_examples():
    assert q_wbar(0).matrix == ((-1, 0, 0), (0, 0, 1), (0, 1, 0))
    q2 = q_wbar(2)
    assert q2.rank == 5
    assert [q2.matrix[k][k] for k in range(5)] == [-1, -1, -1, 0, 0]
    assert q2.labels == ("gamma0", "gamma1", "gamma2", "alpha", "beta")
    with pytest.raises(ValueError):
        q_wbar(-1)


@pytest.mark.parametrize("n", range(8))
def test_q_wbar_signature_and_unimodularity(n):
    q = q_wbar(n)
    assert q.signature() == -(n + 1)
    assert abs(_det(q.matrix)) == 1
    assert (q.rank - q.signature()) // 2 == n + 2


def test_quadratic_form_validation():
    with pytest.raises(ValueError):
        QuadraticForm(((0, 1), (0, 0)), ("a", "b"))
    with pytest.raises(ValueError):
        QuadraticForm(((1,),), ("a", "b"))


def test_parameter_validation():
    with pytest.raises(ValueError):
        SpincParameters(1, 2, (0,), 0, 0)
    with pytest.raises(ValueError):
        SpincParameters(2, 0, (0,), 0, 0)
    with pytest.raises(ValueError):
        SpincParameters(0, 0, (), 0, -1)
    assert SpincParameters(0, 0, (), 0, 3).beta1 == 7


def test_euler_examples():
    assert euler_from_class(SpincParameters(2, 2, (0, 0), 0, 0)) == 0
    assert euler_from_class(SpincParameters(1, 0, (0,), 1, 0)) == 3


def test_self_intersection_examples():
    p = SpincParameters(1, 0, (0,), 1, 0)
    assert self_intersection_m(p) == 2
    assert euler_of_f(p) == 1
    q = SpincParameters(2, 2, (0, 0), 1, 0)
    assert (self_intersection_m(q), euler_of_f(q)) == (3, 2)
    assert self_intersection_m(SpincParameters(2, 2, (0, 0), 0, 0)) == -1


@pytest.mark.parametrize("a,b,g,expected", [
    ((), 1, 0, (-1, 0)),
    ((), 0, 0, (1, 0)),
    ((1,), 0, 0, (-1, 0)),
])
def test_choose_epsilon_examples(a, b, g, expected):
    p = SpincParameters(len(a), len(a), a, b, g)
    assert choose_epsilon(p) == expected


def test_choose_epsilon_exhaustive_mod_4():
    # The numerator before epsilon is odd, so one of +-1 always clears it mod 4.
    for s in range(-8, 9):
        for bg in range(-8, 9):
            base = 2 * s + 2 * bg - 1
            assert sum((base + e) % 4 == 0 for e in (1, -1)) == 1
            p = SpincParameters(1, 1, (s,), bg, 0)
            eps, x = choose_epsilon(p)
            assert 4 * x == base + eps


def test_c1_squared_example():
    p = SpincParameters(1, 0, (0,), 1, 0)
    assert choose_epsilon(p) == (-1, 0)
    assert c1_squared(p) == -2 == c1_squared_closed_form(p)
    assert q_wbar(1).is_characteristic(c1_vector(p))
    with pytest.raises(ValueError):
        c1_squared(SpincParameters(0, 0, (), 0, 0))


def test_d_b_examples():
    assert d_b_circle_bundle(0, 2) == Fraction(-1, 4)
    assert d_b_circle_bundle(0, 1) == 0
    assert d_b_circle_bundle(1, 4) == -1
    with pytest.raises(ValueError):
        d_b_circle_bundle(1, 2)
    with pytest.raises(ValueError):
        d_b_circle_bundle(0, 0)


def test_audit_example_is_sharp():
    r = audit_inequality_chain(SpincParameters(1, 0, (0,), 1, 0), 0)
    assert (r.c1_squared, r.beta2_minus, r.ineq3_lhs, r.ineq3_rhs) == (-2, 3, 1, 1)
    assert r.holds and r.consistent
    big = audit_inequality_chain(SpincParameters(1, 0, (0,), 1, 0), 50)
    assert big.ineq3_lhs < big.ineq3_rhs


def test_audit_preconditions():
    with pytest.raises(ValueError):
        audit_inequality_chain(SpincParameters(0, 0, (), 0, 0), 0)
    with pytest.raises(ValueError):
        audit_inequality_chain(SpincParameters(0, 0, (), 1, 2), 0)


def test_audit_report_dict_is_exact():
    d = audit_inequality_chain(SpincParameters(2, 1, (1, -2), 6, 1), 1).as_dict()
    for key in ("params", "epsilon", "x", "m", "e", "c1_squared", "c1_squared_closed_form",
                "beta2_minus", "ineq3_lhs", "ineq3_rhs", "holds"):
        assert key in d
    assert isinstance(d["d_b"], str) and "." not in d["d_b"]


@st.composite
def parameters(draw):
    return random_parameters(random.Random(draw(st.integers(0, 2**32))))


@given(parameters(), st.integers(0, 12))
def test_audit_identities(p, d_minus):
    m = self_intersection_m(p)
    assert m > 0 and m - 2 * p.g > 0
    assert max(map(abs, p.a), default=0) <= 10 and abs(p.b) <= 10 and p.n <= 6
    assert brute_square(p) == m == euler_from_class(p) - 1
    r = audit_inequality_chain(p, d_minus)
    assert r.consistent
    assert r.c1_squared == r.c1_squared_closed_form
    assert q_wbar(p.n).is_characteristic(c1_vector(p))
    assert r.pairing == m - 2 * p.g
    assert r.ineq2_rhs - r.ineq2_lhs == r.ineq3_rhs - r.ineq3_lhs
    if r.holds:
        assert r.ineq5_holds


@given(st.integers(0, 5), st.data())
def test_sum_to_n_reading(n, data):
    a = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n)))
    j = data.draw(st.integers(0, n))
    p = SpincParameters(n, j, a, data.draw(st.integers(-5, 5)), data.draw(st.integers(0, 3)))
    eps, x = choose_epsilon(p, sum_to=n)
    assert eps in (1, -1)


def test_run_audit_is_clean_and_deterministic():
    first = run_audit(1, 1000)
    assert first["passed"] and not any(first["failure_counts"].values())
    assert first["ineq3_holds"] > 0
    assert run_audit(1, 200) == run_audit(1, 200)
    assert run_audit(0, 0)["trials"] == 0

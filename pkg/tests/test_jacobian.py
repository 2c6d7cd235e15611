import random
from fractions import Fraction

import pytest

from qpcat.constructions import q2222_qp
from qpcat.jacobian import (is_reduced_qp, is_rigid_up_to_degree, jacobian_dimension,
                            truncated_quotient)
from qpcat.oracles import brute_force_jacobian
from qpcat.potential import make_qp
from qpcat.quiver import Quiver
from qpcat.scalars import rf


def three_cycle_qp():
    q = Quiver(["1", "2", "3"],
               [("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")])
    return make_qp(q, [(1, ("z", "y", "x"))])


def two_cycle_qp():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    return make_qp(q, [(1, ("b", "a"))])


def test_a2_path_algebra():
    qp = make_qp(Quiver(["1", "2"], [("a", "1", "2")]), [])
    tq = truncated_quotient(qp, 10)
    assert tq.dims[:4] == (2, 1, 0, 0)
    assert tq.stabilized_at == 2 and tq.total == 3


def test_three_cycle_all_quadratics_killed():
    tq = truncated_quotient(three_cycle_qp(), 10)
    assert tq.dims[:4] == (3, 3, 0, 0)
    assert tq.stabilized_at == 2 and tq.total == 6


def test_q2222_symbolic_matches_pinned_oracle_value():
    tq = truncated_quotient(q2222_qp(), 8)
    assert tq.dims[:6] == (6, 12, 12, 6, 0, 0)
    assert tq.stabilized_at == 4 and tq.total == 36


def test_no_arrows_and_zero_potential_cases():
    qp = make_qp(Quiver(["1", "2", "3"], []), [])
    res = jacobian_dimension(qp, 4)
    assert res.finite and res.dimension == 3

    acyclic = make_qp(Quiver(["1", "2", "3"],
                             [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")]), [])
    res = jacobian_dimension(acyclic, 8)
    # paths: 3 lazy + 3 arrows + ba
    assert res.finite and res.dimension == 7

    cyc = make_qp(Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")]), [])
    res = jacobian_dimension(cyc, 6)
    assert not res.finite and res.dimension is None
    assert all(d > 0 for d in res.dims)


def test_truncation_bound_validated():
    with pytest.raises(ValueError, match=">= 2"):
        truncated_quotient(three_cycle_qp(), 1)


def test_generator_order_invariance():
    qp = q2222_qp(rf(2))
    base = truncated_quotient(qp, 8)
    for seed in (1, 2):
        shuffled = truncated_quotient(qp, 8, shuffle=random.Random(seed))
        assert shuffled.dims == base.dims
        assert shuffled.stabilized_at == base.stabilized_at


def test_monotonicity_in_truncation():
    qp = q2222_qp(rf(3))
    lo = truncated_quotient(qp, 6)
    hi = truncated_quotient(qp, 10)
    assert lo.stabilized_at == hi.stabilized_at
    assert lo.dims[:lo.stabilized_at] == hi.dims[:lo.stabilized_at]


def test_symbolic_and_specialized_profiles_agree():
    sym = truncated_quotient(q2222_qp(), 8)
    for lam in (2, 3):
        spec = truncated_quotient(q2222_qp(rf(lam)), 8)
        assert spec.dims == sym.dims
        assert spec.pair_dims == sym.pair_dims


def test_oracle_agreement_on_specialized_q2222():
    qp = q2222_qp(rf(2))
    dims, stab, total = brute_force_jacobian(qp, 6, lam_value=Fraction(2))
    main = truncated_quotient(qp, 6)
    assert list(main.dims) == dims
    assert main.stabilized_at == stab and main.total == total == 36


def test_pair_dims_total_matches():
    tq = truncated_quotient(q2222_qp(), 8)
    assert sum(tq.pair_dims.values()) == tq.total


def test_rigidity_examples():
    assert is_rigid_up_to_degree(three_cycle_qp(), 6) == (True, None)
    assert is_rigid_up_to_degree(two_cycle_qp(), 6) == (True, None)
    acyclic = make_qp(Quiver(["1", "2"], [("a", "1", "2")]), [])
    assert is_rigid_up_to_degree(acyclic, 6) == (True, None)


def test_non_rigid_zero_potential_cycle():
    q = Quiver(["1", "2", "3"],
               [("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")])
    qp = make_qp(q, [])
    ok, cyc = is_rigid_up_to_degree(qp, 3)
    assert not ok and cyc is not None


def test_reduced_predicate():
    assert is_reduced_qp(three_cycle_qp())
    assert not is_reduced_qp(two_cycle_qp())

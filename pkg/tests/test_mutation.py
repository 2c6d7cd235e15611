import random

import pytest

from qpcat.constructions import q2222_qp, squid_qp
from qpcat.jacobian import is_reduced_qp, truncated_quotient
from qpcat.mutation import (MutationError, nondegeneracy_explore, premutate,
                            qp_mutate, split_reduce)
from qpcat.potential import QP, Potential, cyclic_normal_form, make_qp, restrict_qp
from qpcat.quiver import (Quiver, is_acyclic, mutate_quiver, quiver_isomorphic,
                          to_exchange_matrix)
from qpcat.scalars import RF_ONE, rf


def three_cycle_qp():
    q = Quiver(["1", "2", "3"],
               [("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")])
    return make_qp(q, [(1, ("z", "y", "x"))])


def arrows_of(q):
    return sorted((a.id, a.src, a.tgt) for a in q.arrows)


def test_premutate_three_cycle_matches_hand_computation():
    pre = premutate(three_cycle_qp(), "1")
    assert arrows_of(pre.quiver) == [
        ("[x z]", "3", "2"), ("x*", "2", "1"), ("y", "2", "3"), ("z*", "1", "3")]
    assert pre.potential.terms == {
        ("[x z]", "y"): RF_ONE,
        ("[x z]", "z*", "x*"): RF_ONE,
    }


def test_premutate_trivial_cases():
    a2 = make_qp(Quiver(["1", "2"], [("a", "1", "2")]), [])
    out = premutate(a2, "1")
    assert arrows_of(out.quiver) == [("a*", "2", "1")]
    assert out.potential.is_zero()

    kron = make_qp(Quiver(["1", "2"], [("u", "1", "2"), ("v", "1", "2")]), [])
    out = premutate(kron, "2")
    assert arrows_of(out.quiver) == [("u*", "2", "1"), ("v*", "2", "1")]
    assert out.potential.is_zero()


def test_premutate_preconditions():
    loopy = QP(Quiver(["1"], [("l", "1", "1")]), Potential(Quiver(["1"], [("l", "1", "1")])))
    with pytest.raises(MutationError, match="loop"):
        premutate(loopy, "1")
    two = make_qp(Quiver(["1", "2", "3"],
                         [("a", "1", "2"), ("b", "2", "1"), ("c", "2", "3")]),
                  [(1, ("b", "a"))])
    with pytest.raises(MutationError, match="2-cycle"):
        premutate(two, "1")
    # a 2-cycle away from the mutation vertex is allowed
    premutate(two, "3")


def test_split_reduce_of_premutated_three_cycle():
    red = split_reduce(premutate(three_cycle_qp(), "1"))
    assert arrows_of(red.qp.quiver) == [("x*", "2", "1"), ("z*", "1", "3")]
    assert red.qp.potential.is_zero()
    assert red.removed_arrows == ("[x z]", "y")
    assert is_acyclic(red.qp.quiver)
    # the witness turns the unreduced potential into exactly the trivial part
    pre = premutate(three_cycle_qp(), "1")
    audited = red.witness.apply_to_potential(pre.potential, check=False)
    assert audited.terms == {("[x z]", "y"): RF_ONE}


def test_split_reduce_identity_on_reduced_input():
    qp = q2222_qp()
    red = split_reduce(qp)
    assert red.qp is qp and red.removed_arrows == ()
    assert red.witness.images == {}


def test_split_reduce_pure_two_cycle():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    qp = make_qp(q, [(1, ("b", "a"))])
    red = split_reduce(qp)
    assert red.qp.quiver.arrows == ()
    assert red.qp.potential.is_zero()
    assert set(red.removed_arrows) == {"a", "b"}


def test_split_reduce_scaled_two_cycle_and_spectator():
    # coefficient 7 on the 2-cycle exercises the linear normalization
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1"), ("c", "1", "2")])
    qp = make_qp(q, [(7, ("b", "a")), (1, ("b", "c"))])
    red = split_reduce(qp)
    assert {x.id for x in red.qp.quiver.arrows} == {"c"}
    assert red.qp.potential.is_zero()


def test_qp_mutate_three_cycle_gives_acyclic_a3():
    out = qp_mutate(three_cycle_qp(), "1")
    assert is_acyclic(out.quiver)
    assert out.potential.is_zero()


def test_qp_mutate_zero_potential_at_sink_or_source_stays_zero():
    q = Quiver(["1", "2"], [("u", "1", "2"), ("v", "1", "2")])
    qp = make_qp(q, [])
    for k in q.vertices:  # every vertex is a sink or a source: no triangle terms
        out = qp_mutate(qp, k)
        assert out.potential.is_zero()
        assert to_exchange_matrix(out.quiver) == to_exchange_matrix(mutate_quiver(q, k))


def test_qp_mutate_zero_potential_through_vertex_gains_triangle_term():
    # paths through the mutated vertex leave the triangle correction behind;
    # the quiver still agrees with plain quiver mutation and mutating back
    # restores the zero potential
    q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")])
    qp = make_qp(q, [])
    out = qp_mutate(qp, "2")
    assert to_exchange_matrix(out.quiver) == to_exchange_matrix(mutate_quiver(q, "2"))
    assert out.potential.terms == {("[b a]", "a*", "b*"): RF_ONE}
    back = qp_mutate(out, "2")
    assert to_exchange_matrix(back.quiver) == to_exchange_matrix(q)
    assert back.potential.is_zero()


def test_qp_mutate_q2222_all_vertices_two_acyclic():
    qp = q2222_qp(rf(2))
    for k in qp.quiver.vertices:
        out = qp_mutate(qp, k)
        assert out.two_acyclic()
        assert is_reduced_qp(out)


def test_double_mutation_preserves_quiver_and_dims():
    qp = q2222_qp(rf(2))
    b0 = to_exchange_matrix(qp.quiver)
    base = truncated_quotient(qp, 12)
    for k in ("1", "4"):
        m2 = qp_mutate(qp_mutate(qp, k, 12), k, 12)
        assert to_exchange_matrix(m2.quiver) == b0
        t2 = truncated_quotient(m2, 12)
        assert t2.dims == base.dims
        assert t2.pair_dims == base.pair_dims


def test_quiver_level_compatibility():
    qp = q2222_qp(rf(3))
    for k in qp.quiver.vertices:
        out = qp_mutate(qp, k)
        assert quiver_isomorphic(out.quiver, mutate_quiver(qp.quiver, k)) is not None


def test_degenerate_zero_potential_fails_exploration_with_shortest_trace():
    q = Quiver(["1", "2", "3"],
               [("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")])
    qp = make_qp(q, [])
    res = nondegeneracy_explore(qp, 2)
    assert not res.passed
    assert len(res.failing_trace.steps) == 1
    assert not res.failing_trace.two_acyclic_throughout
    rep = res.failing_trace.report()
    assert rep["two_acyclic"] is False and len(rep["sequence"]) == 1


def test_exploration_passes_on_acyclic_zero_potential():
    q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")])
    res = nondegeneracy_explore(make_qp(q, []), 3)
    assert res.passed and res.complete


def test_exploration_budget_flags_incomplete():
    res = nondegeneracy_explore(q2222_qp(rf(2)), 3, budget=10)
    assert res.passed and not res.complete


def test_exploration_full_enumeration_flag():
    res = nondegeneracy_explore(three_cycle_qp(), 2, prune_backtracks=False)
    assert res.passed
    # without pruning, every vertex is available at every level
    assert res.mutations_done == 3 + 9


def test_restriction_preserves_bounded_nondegeneracy():
    sq = squid_qp((2, 3, 4))
    assert nondegeneracy_explore(sq, 1).passed
    for keep in (["O", "O(c)", "S1[1]", "S2[2]", "S3[3]"],
                 ["O", "O(c)", "S2[1]", "S2[2]"],
                 ["O", "O(c)"]):
        sub = restrict_qp(sq, keep)
        assert nondegeneracy_explore(sub, 1).passed

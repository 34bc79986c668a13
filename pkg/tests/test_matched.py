"""Matched pairs, Yang-Baxter maps, and brace reconstruction."""

import pytest

import hopfkit as hk
from hopfkit import fixtures as fx
from hopfkit import groups as gr
from hopfkit.errors import AxiomFails
from hopfkit.linalg import LinearOp, tensor_index, tensor_space


def test_trivial_actions_form_matched_pair(f2):
    lact = LinearOp(f2.hh, f2.space,
                    [f2.basis(a).scale(f2._eps[x])
                     for x in range(6) for a in range(6)])
    ract = LinearOp(f2.hh, f2.space,
                    [f2.basis(x).scale(f2._eps[a])
                     for x in range(6) for a in range(6)])
    hk.verify_matched_pair(f2, f2, lact, ract)


def test_matched_pair_from_b_inv(f2, b_inv_f2):
    m = hk.matched_pair_from_rb(b_inv_f2)
    g = gr.dihedral(3)
    for h in range(6):
        for k in range(6):
            # h ⇀ k = h^{-1} k h and h ↼ k = h on group-likes
            want = f2.space.basis(g.mul(g.mul(g.inv(h), k), h))
            assert m.lact.columns[tensor_index(h, k, 6)] == want
            assert m.ract.columns[tensor_index(h, k, 6)] == f2.space.basis(h)


def test_matched_pair_from_b_eps(f2, b_eps_f2):
    # ε-collapse: h ⇀ k = k and h ↼ k = S(k_(1)) h k_(2) (conjugation)
    m = hk.matched_pair_from_rb(b_eps_f2)
    g = gr.dihedral(3)
    for h in range(6):
        for k in range(6):
            assert m.lact.columns[tensor_index(h, k, 6)] == f2.space.basis(k)
            want = f2.space.basis(g.mul(g.mul(g.inv(k), h), k))
            assert m.ract.columns[tensor_index(h, k, 6)] == want


def test_matched_pair_abelian_trivial(f1):
    m = hk.matched_pair_from_rb(fx.b_inv(f1))
    for h in range(2):
        for k in range(2):
            assert m.lact.columns[tensor_index(h, k, 2)] == f1.space.basis(k)
            assert m.ract.columns[tensor_index(h, k, 2)] == f1.space.basis(h)


def test_multiplication_as_left_action_rejected(f2):
    lact = LinearOp(f2.hh, f2.space,
                    [f2.mul_basis(x, a) for x in range(6) for a in range(6)])
    ract = LinearOp(f2.hh, f2.space,
                    [f2.basis(x).scale(f2._eps[a])
                     for x in range(6) for a in range(6)])
    with pytest.raises(AxiomFails):
        hk.verify_matched_pair(f2, f2, lact, ract)


# -- Yang-Baxter maps ---------------------------------------------------------------

def test_ybe_from_b_inv_conjugation_braiding(f2, b_inv_f2):
    y = hk.ybe_from_rb(b_inv_f2)
    g = gr.dihedral(3)
    hh = tensor_space(f2.space, f2.space)
    for a in range(6):
        for b in range(6):
            u = g.mul(g.mul(g.inv(a), b), a)   # a^{-1} b a
            want = hh.basis(tensor_index(u, a, 6))
            assert y.c.columns[tensor_index(a, b, 6)] == want


def test_ybe_inverse_formula(f2, b_inv_f2):
    # c^{-1}(u ⊗ v) = v ⊗ v u v^{-1} on group-likes
    y = hk.ybe_from_rb(b_inv_f2)
    g = gr.dihedral(3)
    hh = tensor_space(f2.space, f2.space)
    for u in range(6):
        for v in range(6):
            want = hh.basis(tensor_index(v, g.mul(g.mul(v, u), g.inv(v)), 6))
            assert y.c_inverse.columns[tensor_index(u, v, 6)] == want


def test_ybe_two_sided_inverse(f2, b_inv_f2):
    y = hk.ybe_from_rb(b_inv_f2)
    assert y.c.compose(y.c_inverse).is_identity()
    assert y.c_inverse.compose(y.c).is_identity()


def test_ybe_from_b_eps(f2, b_eps_f2):
    # c(g⊗h) = h ⊗ h^{-1} g h: the conjugation braiding of the trivial action
    y = hk.ybe_from_rb(b_eps_f2)
    g = gr.dihedral(3)
    hh = tensor_space(f2.space, f2.space)
    for a in range(6):
        for b in range(6):
            want = hh.basis(tensor_index(b, g.mul(g.mul(g.inv(b), a), b), 6))
            assert y.c.columns[tensor_index(a, b, 6)] == want


def test_ybe_abelian_is_flip(f1):
    y = hk.ybe_from_rb(fx.b_eps(f1))
    hh = tensor_space(f1.space, f1.space)
    for a in range(2):
        for b in range(2):
            assert y.c.columns[tensor_index(a, b, 2)] == \
                hh.basis(tensor_index(b, a, 2))


def test_ybe_across_s3_corpus():
    for op in gr.enumerate_rb_group_ops(gr.dihedral(3)):
        hk.ybe_from_rb(gr.lift_to_group_algebra(op))


# -- brace reconstruction ---------------------------------------------------------------

def test_brace_from_matched_pair_round_trip(f2, b_inv_f2):
    m = hk.matched_pair_from_rb(b_inv_f2)
    circle = hk.descend(b_inv_f2).hopf
    br = hk.brace_from_matched_pair(m, circle)
    assert br.dot.mul == f2.mul
    assert br.dot.antipode == f2.antipode


def test_brace_from_matched_pair_trivial(f2, b_eps_f2):
    m = hk.matched_pair_from_rb(b_eps_f2)
    circle = hk.descend(b_eps_f2).hopf
    br = hk.brace_from_matched_pair(m, circle)
    assert br.dot.mul == f2.mul


def test_brace_round_trip_across_corpus():
    for op in gr.enumerate_rb_group_ops(gr.dihedral(3)):
        lift = gr.lift_to_group_algebra(op)
        m = hk.matched_pair_from_rb(lift)
        circle = hk.descend(lift).hopf
        br = hk.brace_from_matched_pair(m, circle)
        assert br.dot.mul == lift.carrier.mul
        assert br.dot.antipode == lift.carrier.antipode

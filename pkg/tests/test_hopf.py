"""Hopf axiom verification, constructors, actions, convolution inverses."""

import random
from fractions import Fraction

import pytest

import hopfkit as hk
from hopfkit import fixtures as fx
from hopfkit import groups as gr
from hopfkit.errors import AxiomFails, UnvalidatedInput
from hopfkit.hopf import (adjoint_action, check_module_bialgebra,
                          curry_action, end_algebra, scalar_space,
                          trivial_action, uncurry_action, unit_counit_map)
from hopfkit.linalg import (BasedSpace, Element, LinearOp, QQ, tensor_index,
                            tensor_space)


def inversion_action_z2_on_z3():
    """Z2 acting on Q[Z3] by inversion (the twist of S3 = Z3 ⋊ Z2)."""
    h = hk.group_algebra(gr.cyclic(3))
    k = hk.group_algebra(gr.cyclic(2))
    cols = []
    for j in range(2):
        for i in range(3):
            cols.append(h.space.basis(i if j == 0 else (-i) % 3))
    act = LinearOp(tensor_space(k.space, h.space), h.space, cols)
    return hk.module_action(k, h, act)


def sweedler_four_dim():
    """A 4-dimensional non-cocommutative Hopf algebra: basis 1, g, x, gx
    with g^2 = 1, x^2 = 0, xg = -gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x."""
    sp = BasedSpace(("1", "g", "x", "gx"), QQ)
    hh = tensor_space(sp, sp)
    one = Fraction(1)

    def e(*pairs):
        return Element(sp, dict(pairs))

    mul = {}
    table = {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (0, 2): [(2, 1)], (0, 3): [(3, 1)],
        (1, 0): [(1, 1)], (1, 1): [(0, 1)], (1, 2): [(3, 1)], (1, 3): [(2, 1)],
        (2, 0): [(2, 1)], (2, 1): [(3, -1)], (2, 2): [], (2, 3): [],
        (3, 0): [(3, 1)], (3, 1): [(2, -1)], (3, 2): [], (3, 3): [],
    }
    mul_cols = [e(*((i, Fraction(c)) for i, c in table[(a, b)]))
                for a in range(4) for b in range(4)]
    comul_cols = [
        Element(hh, {tensor_index(0, 0, 4): one}),
        Element(hh, {tensor_index(1, 1, 4): one}),
        Element(hh, {tensor_index(2, 0, 4): one, tensor_index(1, 2, 4): one}),
        Element(hh, {tensor_index(3, 1, 4): one, tensor_index(0, 3, 4): one}),
    ]
    ssp = scalar_space(QQ)
    counit_cols = [ssp.basis(0), ssp.basis(0), ssp.zero(), ssp.zero()]
    anti_cols = [e((0, one)), e((1, one)), e((3, Fraction(-1))), e((2, one))]
    h = hk.hopf_from_structure(sp, LinearOp(hh, sp, mul_cols), sp.basis(0),
                               LinearOp(sp, hh, comul_cols),
                               LinearOp(sp, ssp, counit_cols),
                               LinearOp(sp, sp, anti_cols))
    assert hk.verify_hopf(h).passed
    return h


# -- verify_hopf ----------------------------------------------------------------

def test_verify_hopf_group_algebras_pass(f1, f2):
    for h in (f1, f2):
        report = hk.verify_hopf(h)
        assert report.passed
        assert [c.name for c in report.checks] == [
            "associativity", "unit", "coassociativity", "counit",
            "bialgebra-compatibility", "antipode"]


def test_verify_hopf_bad_antipode_fails_at_r(f2):
    bad = hk.hopf_from_structure(f2.space, f2.mul, f2.unit, f2.comul,
                                 f2.counit, LinearOp.identity(f2.space))
    report = hk.verify_hopf(bad)
    assert not report.passed
    fail = report["antipode"]
    assert not fail.passed
    assert fail.witness.at == ("r",)


def test_dim_one_hopf_algebra():
    h = hk.group_algebra(gr.trivial_group())
    assert hk.verify_hopf(h).passed
    assert h.dim == 1


def test_unvalidated_input_refused(f2):
    raw = hk.hopf_from_structure(f2.space, f2.mul, f2.unit, f2.comul,
                                 f2.counit, f2.antipode)
    with pytest.raises(UnvalidatedInput):
        hk.check_cocommutative(raw)


# -- cocommutativity --------------------------------------------------------------

def test_group_algebras_cocommutative(f1, f2):
    assert hk.check_cocommutative(f1)
    assert hk.check_cocommutative(f2)


def test_tensor_hopf_cocommutative(f2):
    assert hk.check_cocommutative(hk.tensor_hopf(f2, f2))


def test_sweedler_four_dim_not_cocommutative():
    h = sweedler_four_dim()
    assert not hk.check_cocommutative(h)


# -- constructors ------------------------------------------------------------------

def test_group_algebra_z2_antipode_identity(f1):
    assert f1.antipode.is_identity()


def test_group_algebra_trivial_group():
    h = hk.group_algebra(gr.trivial_group())
    assert h.mul.is_identity() is False  # mul: H⊗H -> H on a 1-dim space
    assert h.mul.columns[0] == h.unit
    assert h.antipode.is_identity()


def test_tensor_hopf_z2_z3_isomorphic_to_z6():
    h = hk.group_algebra(gr.cyclic(2))
    k = hk.group_algebra(gr.cyclic(3))
    t = hk.tensor_hopf(h, k)
    z6 = hk.group_algebra(gr.cyclic(6))
    # (a^i, b^j) -> g^(3i + 4j mod 6) is the CRT isomorphism Z2 x Z3 -> Z6
    cols = []
    for i in range(2):
        for j in range(3):
            cols.append(z6.space.basis((3 * i + 4 * j) % 6))
    iso = LinearOp(t.space, z6.space, cols)
    assert hk.check_hopf_isomorphism(iso, t, z6)


def test_opposite_hopf_flips_multiplication(f2):
    op = hk.opposite_hopf(f2)
    i_r, i_s = f2.space.index_of("r"), f2.space.index_of("s")
    assert op.mul_basis(i_r, i_s) == f2.mul_basis(i_s, i_r)


def test_opposite_of_abelian_is_original(f1):
    assert hk.opposite_hopf(f1).structure_equal(f1)


# -- module actions ----------------------------------------------------------------

def test_adjoint_action_is_module_bialgebra(f2):
    assert check_module_bialgebra(adjoint_action(f2)).passed


def test_trivial_action_is_module_bialgebra(f2):
    assert check_module_bialgebra(trivial_action(f2, f2)).passed


def test_inversion_action_is_module_bialgebra():
    assert check_module_bialgebra(inversion_action_z2_on_z3()).passed


def test_module_action_rejects_bad_action(f2):
    # multiplication as an action fails module associativity over H
    bad = LinearOp(f2.hh, f2.space,
                   [f2.mul_basis(i, j) for i in range(6) for j in range(6)])
    with pytest.raises(AxiomFails):
        hk.module_action(hk.opposite_hopf(f2), f2, bad)


# -- convolution inverses ------------------------------------------------------------

def test_convolution_identity_is_self_inverse(f2):
    ucm = unit_counit_map(f2)
    assert hk.convolution_inverse(f2, ucm) == ucm


def test_convolution_inverse_of_id_is_antipode(f2):
    assert hk.convolution_inverse(f2, LinearOp.identity(f2.space)) == f2.antipode


def test_convolution_inverse_operator_valued(f2):
    # alpha_x(y) = x^{-1} y x; the inverse must be beta_x(y) = x y x^{-1}
    g = gr.dihedral(3)
    cols = []
    for x in range(6):
        for y in range(6):
            cols.append(f2.space.basis(g.mul(g.mul(g.inv(x), y), x)))
    tri = LinearOp(f2.hh, f2.space, cols)
    e_space, e_mul, e_unit = end_algebra(f2.space)
    alpha = curry_action(e_space, tri)
    beta = hk.convolution_inverse(f2, alpha, e_mul, e_unit)
    back = uncurry_action(f2.space, beta)
    for x in range(6):
        for y in range(6):
            want = f2.space.basis(g.mul(g.mul(x, y), g.inv(x)))
            assert back.columns[tensor_index(x, y, 6)] == want


def test_antipode_recovery_across_corpus():
    carriers = [fx.f1(), fx.f2(),
                hk.group_algebra(gr.cyclic(4)),
                hk.group_algebra(gr.direct_product(gr.cyclic(2), gr.cyclic(2))),
                hk.group_algebra(gr.quaternion_group()),
                sweedler_four_dim()]
    for h in carriers:
        assert hk.convolution_inverse(h, LinearOp.identity(h.space)) == h.antipode


# -- morphism checks ------------------------------------------------------------------

def test_inversion_lift_is_coalgebra_morphism(f2):
    assert hk.check_coalgebra_morphism(f2.antipode, f2, f2)


def test_conjugation_is_bialgebra_automorphism(f2, phi_r_f2):
    assert hk.check_bialgebra_automorphism(phi_r_f2, f2)


def test_shift_map_is_not_coalgebra_morphism(f1):
    # g -> g + e fails both the comultiplication and the counit condition
    shift = LinearOp(f1.space, f1.space, [
        f1.space.basis(0),
        f1.space.basis(1) + f1.space.basis(0)])
    assert not hk.check_coalgebra_morphism(shift, f1, f1)


def test_antipode_is_not_automorphism_on_nonabelian(f2):
    # S is antimultiplicative, hence not an automorphism of Q[S3]
    assert not hk.check_bialgebra_automorphism(f2.antipode, f2)


# -- seeded random-element spot checks -------------------------------------------------

def random_element(rng, space):
    return Element(space, {i: Fraction(rng.randint(-5, 5), rng.randint(1, 5))
                           for i in range(space.dim)})


def test_random_element_identities(f2):
    rng = random.Random(31415)
    for _ in range(100):
        x = random_element(rng, f2.space)
        y = random_element(rng, f2.space)
        z = random_element(rng, f2.space)
        assert f2.product(f2.product(x, y), z) == f2.product(x, f2.product(y, z))
        assert f2.product(f2.unit, x) == x
        lhs = f2.comul(f2.product(x, y))
        assert lhs == f2.tensor_square_product(f2.comul(x), f2.comul(y))


def test_verify_hopf_over_prime_field():
    from hopfkit.linalg import Field
    h = hk.group_algebra(gr.dihedral(3), Field(7))
    assert h.validated
    assert hk.check_cocommutative(h)

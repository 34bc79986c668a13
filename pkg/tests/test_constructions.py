"""Triple factorizations and smash products with their operators."""

import pytest

import hopfkit as hk
from hopfkit import fixtures as fx
from hopfkit import groups as gr
from hopfkit.errors import HypothesisFails, NotExactFactorization
from hopfkit.linalg import LinearOp, tensor_index, tensor_space


def z3_z2_inversion_action():
    h = hk.group_algebra(gr.cyclic(3))
    k = hk.group_algebra(gr.cyclic(2))
    cols = [h.space.basis(i if j == 0 else (-i) % 3)
            for j in range(2) for i in range(3)]
    act = LinearOp(tensor_space(k.space, h.space), h.space, cols)
    return h, k, hk.module_action(k, h, act)


def s3_iso_map(sp, f2):
    """(a^i, b^j) -> r^i s^j as a linear bijection smash -> Q[S3]."""
    cols = []
    for i in range(3):
        for j in range(2):
            rpart = "" if i == 0 else ("r" if i == 1 else "r2")
            lab = (rpart + ("s" if j else "")) or "e"
            cols.append(f2.space.basis(f2.space.index_of(lab)))
    return LinearOp(sp.product.space, f2.space, cols)


# -- triple factorizations ---------------------------------------------------------

def test_triple_factorization_s3_with_b_eps(f2):
    f = hk.triple_factorization(f2, ["e"], ["e", "r", "r2"], ["e", "s"])
    c = fx.b_eps(f.sub_l)
    b = hk.rb_from_triple_factorization(f, c)
    # B(r^i s^j) = ε(r^i) S(s^j) = s^j on the part basis
    for lab, want in [("e", "e"), ("r", "e"), ("r2", "e"),
                      ("s", "s"), ("rs", None), ("r2s", None)]:
        idx = f2.space.index_of(lab)
        if want is not None:
            assert b.map.columns[idx] == f2.space.basis(f2.space.index_of(want))
    # rs = r·s factors with l = r, m = s: B(rs) = ε(e)·C(r)·S(s) = s
    assert b.map.columns[f2.space.index_of("rs")] == \
        f2.space.basis(f2.space.index_of("s"))
    assert hk.check_factorization_descendent_iso(f, b, c)


def test_triple_factorization_hypothesis_violation(f2):
    f = hk.triple_factorization(f2, ["e"], ["e", "r", "r2"], ["e", "s"])
    c = fx.b_inv(f.sub_l)
    with pytest.raises(HypothesisFails) as exc:
        hk.rb_from_triple_factorization(f, c)
    assert exc.value.hypothesis == "mC(l) = C(l)m"


def test_triple_factorization_degenerate_is_c():
    z6 = hk.group_algebra(gr.cyclic(6))
    labels = list(z6.space.labels)
    f = hk.triple_factorization(z6, ["e"], labels, ["e"])
    c = fx.b_inv(f.sub_l)
    b = hk.rb_from_triple_factorization(f, c)
    assert b.map == z6.antipode
    assert hk.check_factorization_descendent_iso(f, b, c)


def test_triple_factorization_z6_as_z2_z3():
    z6 = hk.group_algebra(gr.cyclic(6))
    two_part = ["e", "g3"]
    three_part = ["e", "g2", "g4"]
    f = hk.triple_factorization(z6, ["e"], three_part, two_part)
    c = fx.b_inv(f.sub_l)
    b = hk.rb_from_triple_factorization(f, c)
    assert hk.check_factorization_descendent_iso(f, b, c)


def test_triple_factorization_bad_sizes(f2):
    with pytest.raises(NotExactFactorization):
        hk.triple_factorization(f2, ["e"], ["e", "s"], ["e", "rs"])


# -- smash products -----------------------------------------------------------------

def test_smash_z3_z2_is_s3(f2):
    h, k, act = z3_z2_inversion_action()
    sp = hk.smash_product(h, k, act)
    assert sp.brace.validated
    assert hk.check_hopf_isomorphism(s3_iso_map(sp, f2), sp.product, f2)


def test_smash_trivial_action_is_tensor():
    h = hk.group_algebra(gr.cyclic(3))
    k = hk.group_algebra(gr.cyclic(2))
    sp = hk.smash_product(h, k, hk.trivial_action(k, h))
    assert sp.product.structure_equal(sp.tensor)


def test_rb_on_smash_b_eps():
    h, k, act = z3_z2_inversion_action()
    sp = hk.smash_product(h, k, act)
    c = fx.b_eps(k)
    b = hk.rb_on_smash(sp, c)
    assert hk.check_smash_descendent_iso(sp, c, b)
    # descendent is trivial on the K part: ∘_B = smash product itself
    assert hk.descend(b).hopf.mul == sp.product.mul


def test_rb_on_smash_b_inv():
    h, k, act = z3_z2_inversion_action()
    sp = hk.smash_product(h, k, act)
    c = fx.b_inv(k)  # inversion on Z2 is the identity map
    assert c.map.is_identity()
    b = hk.rb_on_smash(sp, c)
    assert hk.check_smash_descendent_iso(sp, c, b)


def test_smash_embedding_matches_generic(f2):
    # the explicit ambient formulas on (H#K) ⊗ (H#K) agree with the
    # generic brace embedding applied to the smash brace
    h, k, act = z3_z2_inversion_action()
    sp = hk.smash_product(h, k, act)
    emb = hk.embed_into_rb(sp.brace)
    space = sp.product.space
    g2 = emb.ambient.space
    dim_k = k.dim
    from hopfkit.hopf import apply2
    from hopfkit.linalg import tensor_elem
    # B(h#k ⊗ h'#k') = T(h#k) ∘ (h'#k') ⊗ 1#1 with T the smash antipode
    t = sp.product.antipode
    for p in range(space.dim):
        for q in range(space.dim):
            want = tensor_elem(g2, apply2(sp.product.mul, t.columns[p],
                                          space.basis(q)),
                               sp.product.unit)
            assert emb.rb.map.columns[tensor_index(p, q, space.dim)] == want


def test_smash_ambient_multiplication_explicit_formula():
    # the ambient product on (H#K) ⊗ (H#K) in closed form:
    # (h#k ⊗ h'#k') * (g#l ⊗ g'#l') = h(k_(1)▷g) # k_(2)l ⊗ h'(k_(3)▷g') # k'l'
    h, k, act = z3_z2_inversion_action()
    sp = hk.smash_product(h, k, act)
    emb = hk.embed_into_rb(sp.brace)
    space = sp.product.space
    g2 = emb.ambient.space
    from hopfkit.hopf import accumulate, apply2
    from hopfkit.linalg import tensor_elem, tensor_split

    def explicit(p, q):
        hk1, hk2 = tensor_split(p, space.dim)
        gl1, gl2 = tensor_split(q, space.dim)
        ih, ik = tensor_split(hk1, k.dim)
        ih2, ik2 = tensor_split(hk2, k.dim)
        ig, il = tensor_split(gl1, k.dim)
        ig2, il2 = tensor_split(gl2, k.dim)
        terms = []
        for w, (k1, k2, k3) in k.sweedler(ik, 3):
            first = tensor_elem(space,
                                h.product(h.basis(ih), act.basis(k1, ig)),
                                k.mul_basis(k2, il))
            second = tensor_elem(space,
                                 h.product(h.basis(ih2), act.basis(k3, ig2)),
                                 k.mul_basis(ik2, il2))
            terms.append((w, tensor_elem(g2, first, second)))
        return accumulate(g2, terms)

    for p in range(g2.dim):
        for q in range(g2.dim):
            assert emb.ambient.mul.columns[p * g2.dim + q] == explicit(p, q)


def test_rb_on_smash_across_z2_operators():
    h, k, act = z3_z2_inversion_action()
    sp = hk.smash_product(h, k, act)
    for op in gr.enumerate_rb_group_ops(gr.cyclic(2)):
        c = gr.lift_to_group_algebra(op)
        # rebuild C on the same K carrier
        c_on_k = hk.verify_rb(k, LinearOp(k.space, k.space,
                                          [k.space.basis(t) for t in op.table]))
        b = hk.rb_on_smash(sp, c_on_k)
        assert hk.check_smash_descendent_iso(sp, c_on_k, b)

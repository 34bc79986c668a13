"""
Symmetric braces and the condition suite
========================================

A brace is symmetric when the swapped pair (circle, dot) is again a
brace.  The suite relates this to the opposite-module law of the derived
action and to adjoint-action conditions on the underlying operator.
"""

import hopfkit as hk
from hopfkit import fixtures as fx
from hopfkit import groups as gr

H = fx.f2()

# The flip brace is an op-module brace, hence symmetric.
br = hk.flip_brace(H)
print("flip brace: op-module", hk.check_op_module(br),
      "| symmetric", hk.check_symmetric(br))

# Not every brace is: three of the eight operators on S3 give braces that
# fail both conditions.
s3 = gr.dihedral(3)
for op in gr.enumerate_rb_group_ops(s3):
    lift = gr.lift_to_group_algebra(op)
    brc = hk.brace_from_rb(lift)
    om = hk.check_op_module(brc)
    sym = hk.check_symmetric(brc)
    flag = "" if om else "   <- not symmetric"
    print(f"B = {list(op.table)}: op-module {om!s:5} symmetric {sym!s:5}{flag}")
    # the operator-level condition B(ba) ▷ c = (B(a)B(b)) ▷ c is
    # equivalent to the op-module property of the brace
    assert hk.check_rb_op_module(lift.carrier, lift.map) == om

# An op-module action with a_(1)(a_(2)⇀b)⇀c = (ba)⇀c generates a
# symmetric brace directly; conjugation rebuilds the flip brace.
cols = [H.space.basis(s3.mul(s3.mul(s3.inv(a), b), a))
        for a in range(6) for b in range(6)]
from hopfkit.linalg import LinearOp
br2 = hk.brace_from_op_action(H, LinearOp(H.hh, H.space, cols))
print("\nconjugation action rebuilds the flip brace:",
      br2.circle.mul == br.circle.mul)

# Exact factorizations give symmetric braces as well: (ab)∘(a'b') = aa'b'b.
br3 = hk.brace_from_exact_factorization(H, ["e", "r", "r2"], ["e", "s"])
i_rs, i_r2s = H.space.index_of("rs"), H.space.index_of("r2s")
print("(rs) ∘ (r2s) =", br3.circle.mul_basis(i_rs, i_r2s), "(= e)")

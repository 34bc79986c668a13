"""
Rota-Baxter operators and the descendent Hopf algebra
=====================================================

A Rota-Baxter operator on a cocommutative Hopf algebra is a coalgebra map
B with B(x)B(y) = B(x_(1) B(x_(2)) y S(B(x_(3)))).  Each operator induces
a second Hopf algebra H(B) on the same coalgebra via the circle product
g ∘_B h = g_(1) B(g_(2)) h S(B(g_(3))).
"""

import hopfkit as hk
from hopfkit import fixtures as fx
from hopfkit.errors import RBIdentityFails
from hopfkit.linalg import LinearOp

H = fx.f2()                       # Q[S3]
b_inv = fx.b_inv(H)               # the inversion lift g -> g^{-1}
b_eps = fx.b_eps(H)               # x -> ε(x) 1

# The identity map is NOT Rota-Baxter on Q[S3]; the sweep reports the
# lexicographically first failing pair with both sides.
try:
    hk.verify_rb(H, LinearOp.identity(H.space))
except RBIdentityFails as exc:
    print("identity map fails:", exc.witness)

# The descendent of the inversion operator is the opposite group algebra.
d = hk.descend(b_inv)
i_r, i_s = H.space.index_of("r"), H.space.index_of("s")
print("r ∘ s =", d.hopf.mul_basis(i_r, i_s), "(= s·r)")
print("descendent antipode equals inversion:", d.hopf.antipode == b_inv.map)

# Operators with central image descend to the original product.
print("b_eps has central image:", hk.check_central_image(b_eps))

# The companion transform B~(x) = S(x_(1)) B(S(x_(2))) swaps the two
# standard operators and is involutive.
print("B_inv~ = B_eps:", hk.rb_tilde(b_inv).map == b_eps.map)
print("B_eps~ = B_inv:", hk.rb_tilde(b_eps).map == b_inv.map)

# Conjugation by an automorphism commutes with the companion transform.
phi = fx.phi_r(H)
print("transforms commute:", hk.check_tilde_conjugate_commute(b_inv, phi))

# The descendents of B, B~ and B^phi are isomorphic Hopf algebras.
print("\ndescendent isomorphisms:")
print(hk.check_descendent_isos(b_inv, phi))

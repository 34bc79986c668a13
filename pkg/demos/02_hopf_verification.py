"""
Hopf algebras as structure constants
====================================

Carriers are finite-dimensional Hopf algebras stored as sparse structure
constants.  verify_hopf sweeps every axiom over all basis tuples, which
is exhaustive by multilinearity, and stamps the carrier as validated.
"""

import hopfkit as hk
from hopfkit import groups as gr
from hopfkit.linalg import LinearOp

# The group algebra Q[S3] (r^3 = s^2 = e, s r s = r^2).
s3 = gr.dihedral(3)
H = hk.group_algebra(s3)
print("carrier:", H.space)

report = hk.verify_hopf(H)
print(report)
print("cocommutative:", hk.check_cocommutative(H))

# Break the antipode on purpose: the report points at the first witness.
broken = hk.hopf_from_structure(H.space, H.mul, H.unit, H.comul, H.counit,
                                LinearOp.identity(H.space))
bad = hk.verify_hopf(broken)
print("\nwith the antipode replaced by the identity map:")
print(bad["antipode"].witness)

# The convolution inverse of the identity map recovers the antipode by an
# exact linear solve, independently of the stored structure map.
recovered = hk.convolution_inverse(H, LinearOp.identity(H.space))
print("\nconvolution inverse of id equals the stored antipode:",
      recovered == H.antipode)

# Standard constructors: tensor products and opposites re-verify themselves.
K = hk.tensor_hopf(hk.group_algebra(gr.cyclic(2)),
                   hk.group_algebra(gr.cyclic(3)))
print("Q[Z2] ⊗ Q[Z3] is a", K.dim, "dimensional validated carrier")

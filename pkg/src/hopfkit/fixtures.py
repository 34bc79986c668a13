"""Shared small carriers used throughout the test suite and demos:

* ``f1()``   — the rational group algebra of Z2
* ``f2()``   — the rational group algebra of S3 (presented as the
  dihedral group with r^3 = s^2 = e and s r s = r^2)
* ``b_inv``  — the linear lift of g -> g^{-1} (the antipode map)
* ``b_eps``  — the map x -> ε(x) 1
* ``phi_r``  — the lift of conjugation by r on S3
"""

from __future__ import annotations

from .groups import conjugation_automorphism, cyclic, dihedral, lift_automorphism
from .hopf import HopfAlgebraData, group_algebra, unit_counit_map
from .linalg import Field
from .rb import RotaBaxterOp, verify_rb


def f1(field: Field | None = None) -> HopfAlgebraData:
    return group_algebra(cyclic(2), field)


def f2(field: Field | None = None) -> HopfAlgebraData:
    return group_algebra(dihedral(3), field)


def b_inv(h: HopfAlgebraData) -> RotaBaxterOp:
    """Inversion lift: on a group algebra this is the antipode map."""
    return verify_rb(h, h.antipode)


def b_eps(h: HopfAlgebraData) -> RotaBaxterOp:
    return verify_rb(h, unit_counit_map(h))


def phi_r(h: HopfAlgebraData):
    """Conjugation-by-r automorphism of the S3 group algebra."""
    g = dihedral(3)
    return lift_automorphism(h, conjugation_automorphism(g, g.labels.index("r")))

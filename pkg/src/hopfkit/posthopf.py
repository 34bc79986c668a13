"""Post-Hopf algebras and their correspondence with Rota-Baxter
operators and Hopf braces.

A post-Hopf algebra is a coalgebra-morphism product ▶ on a Hopf algebra
satisfying

    x ▶ (y z)    = (x_(1) ▶ y)(x_(2) ▶ z)
    x ▶ (y ▶ z)  = (x_(1) (x_(2) ▶ y)) ▶ z

whose left-multiplication map α: H -> End(H) is convolution-invertible;
the inverse β is computed here by one exact linear solve and must be
unique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brace import HopfBrace, derived_action_map, verify_brace
from .errors import ConstructionInvalid, IdentityFails
from .hopf import (HopfAlgebraData, apply2, convolution_inverse, curry_action,
                   end_algebra, require_cocommutative, uncurry_action,
                   verify_hopf)
from .linalg import LinearOp, accumulate, tensor_elem, tensor_index
from .rb import RotaBaxterOp
from .report import Witness


@dataclass
class PostHopf:
    """Carrier, the ▶ product, and the convolution inverse β of the
    left-multiplication map (stored as a map H ⊗ H -> H)."""

    carrier: HopfAlgebraData
    tri: LinearOp
    beta: LinearOp

    def of(self, x, y):
        return apply2(self.tri, x, y)


def verify_posthopf(h: HopfAlgebraData, tri: LinearOp) -> PostHopf:
    """Sweep both defining identities and the coalgebra-morphism property
    on all basis tuples, then solve for β."""
    require_cocommutative(h)
    dim = h.dim
    field = h.field

    for x in range(dim):
        for y in range(dim):
            col = tri.columns[tensor_index(x, y, dim)]
            lhs = h.comul(col)
            rhs_terms = []
            for cx, (x1, x2) in h.sweedler(x, 2):
                for cy, (y1, y2) in h.sweedler(y, 2):
                    rhs_terms.append((field.mul(cx, cy),
                                      tensor_elem(h.hh,
                                                  tri.columns[tensor_index(x1, y1, dim)],
                                                  tri.columns[tensor_index(x2, y2, dim)])))
            if lhs != accumulate(h.hh, rhs_terms):
                raise IdentityFails("coalgebra-morphism",
                                    Witness((h.label(x), h.label(y)),
                                            str(lhs), "(x1▶y1)⊗(x2▶y2)"))
            if h.counit_scalar(col) != field.mul(h._eps[x], h._eps[y]):
                raise IdentityFails("coalgebra-morphism-counit",
                                    Witness((h.label(x), h.label(y)),
                                            str(h.counit_scalar(col)),
                                            str(field.mul(h._eps[x], h._eps[y]))))

    for x in range(dim):
        legs = h.sweedler(x, 2)
        for y in range(dim):
            for z in range(dim):
                lhs = apply2(tri, h.basis(x), h.mul_basis(y, z))
                rhs = accumulate(h.space, (
                    (w, h.product(tri.columns[tensor_index(x1, y, dim)],
                                  tri.columns[tensor_index(x2, z, dim)]))
                    for w, (x1, x2) in legs))
                if lhs != rhs:
                    raise IdentityFails(
                        "product-distributivity",
                        Witness((h.label(x), h.label(y), h.label(z)),
                                str(lhs), str(rhs)))

    for x in range(dim):
        legs = h.sweedler(x, 2)
        for y in range(dim):
            twisted = accumulate(h.space, (
                (w, h.product(h.basis(x1), tri.columns[tensor_index(x2, y, dim)]))
                for w, (x1, x2) in legs))
            for z in range(dim):
                lhs = apply2(tri, h.basis(x), tri.columns[tensor_index(y, z, dim)])
                rhs = apply2(tri, twisted, h.basis(z))
                if lhs != rhs:
                    raise IdentityFails(
                        "twisted-associativity",
                        Witness((h.label(x), h.label(y), h.label(z)),
                                str(lhs), str(rhs)))

    e_space, e_mul, e_unit = end_algebra(h.space)
    alpha = curry_action(e_space, tri)
    beta_curried = convolution_inverse(h, alpha, e_mul, e_unit)
    beta = uncurry_action(h.space, beta_curried)
    return PostHopf(h, tri, beta)


def posthopf_from_rb(b: RotaBaxterOp) -> PostHopf:
    """x ▶ y = B(x_(1)) y S(B(x_(2))); verified from scratch."""
    b.require_validated()
    h = b.carrier
    dim = h.dim
    cols = []
    for x in range(dim):
        wings = [(c, b.map.columns[x1], h.antipode(b.map.columns[x2]))
                 for c, (x1, x2) in h.sweedler(x, 2)]
        for y in range(dim):
            cols.append(accumulate(h.space, (
                (c, h.product_many([left, h.basis(y), right]))
                for c, left, right in wings)))
    return verify_posthopf(h, LinearOp(h.hh, h.space, cols))


def subadjacent_hopf(p: PostHopf) -> HopfAlgebraData:
    """The Hopf algebra (H, ∗_▶, Δ) with x ∗ y = x_(1) (x_(2) ▶ y) and
    antipode S_▶(x) = β_{x_(1)}(S(x_(2)))."""
    h = p.carrier
    dim = h.dim
    mul_cols = []
    for x in range(dim):
        legs = h.sweedler(x, 2)
        for y in range(dim):
            mul_cols.append(accumulate(h.space, (
                (w, h.product(h.basis(x1),
                              p.tri.columns[tensor_index(x2, y, dim)]))
                for w, (x1, x2) in legs)))
    anti_cols = []
    for x in range(dim):
        anti_cols.append(accumulate(h.space, (
            (w, apply2(p.beta, h.basis(x1), h.antipode.columns[x2]))
            for w, (x1, x2) in h.sweedler(x, 2))))
    out = HopfAlgebraData(h.space, LinearOp(h.hh, h.space, mul_cols), h.unit,
                          h.comul, h.counit, LinearOp(h.space, h.space, anti_cols))
    report = verify_hopf(out)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid(f"subadjacent:{fail.name}", str(fail.witness))
    return out


def brace_from_posthopf(p: PostHopf) -> HopfBrace:
    """(H, ·, ∗_▶) as a Hopf brace."""
    return verify_brace(p.carrier, subadjacent_hopf(p))


def posthopf_from_brace(br: HopfBrace) -> PostHopf:
    """x ▶ y = S(x_(1)) (x_(2) ∘ y): the derived action as a post-Hopf
    product on the dot structure."""
    br.require_validated()
    return verify_posthopf(br.dot, derived_action_map(br))

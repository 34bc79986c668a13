"""Relative Rota-Baxter operators and bijective 1-cocycles.

A relative Rota-Baxter operator is a coalgebra map τ: K -> H, with K a
left H-module bialgebra, satisfying τ(a)τ(b) = τ(a_(1) (τ(a_(2)) ⇀ b)).
A bijective 1-cocycle is a coalgebra isomorphism π: H -> A, with A a
left H-module algebra, satisfying π(hk) = π(h_(1)) (h_(2) ⇀ π(k)).

The two verifiers take exactly the axioms each definition states; the
inversion operations additionally check the module axioms they need
(module coalgebra for inverting a cocycle) and re-verify the result
against the opposite definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brace import HopfBrace, derived_action_map, embed_into_rb, verify_brace
from .errors import (ConstructionInvalid, DimensionMismatch, IdentityFails,
                     InternalTheoremViolation, NotCoalgebraMap)
from .hopf import (HopfAlgebraData, ModuleAction, apply2,
                   check_coalgebra_morphism, module_algebra_report,
                   module_coalgebra_report, check_module_bialgebra,
                   scalar_space, verify_hopf)
from .linalg import (Element, LinearOp, accumulate, invert, tensor_elem,
                     tensor_index, tensor_space, tensor_split)
from .rb import RotaBaxterOp, verify_rb
from .report import Witness


@dataclass
class RelativeRB:
    source: HopfAlgebraData        # K
    target: HopfAlgebraData        # H
    action: ModuleAction           # H acting on K
    tau: LinearOp                  # K -> H


@dataclass
class Cocycle:
    source: HopfAlgebraData        # H
    target: HopfAlgebraData        # A
    action: ModuleAction           # H acting on A
    pi: LinearOp                   # H -> A
    pi_inverse: LinearOp


def verify_relative_rb(k: HopfAlgebraData, h: HopfAlgebraData,
                       action: ModuleAction, tau: LinearOp) -> RelativeRB:
    """Check the module-bialgebra precondition, the coalgebra-morphism
    property of τ, and the defining identity on all basis pairs."""
    k.require_validated()
    h.require_validated()
    if action.actor is not h and not action.actor.structure_equal(h):
        raise DimensionMismatch("action actor must be the target Hopf algebra")
    if action.carrier is not k and not action.carrier.structure_equal(k):
        raise DimensionMismatch("action carrier must be the source Hopf algebra")
    report = check_module_bialgebra(action)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid("module-bialgebra", f"{fail.name}: {fail.witness}")
    if not check_coalgebra_morphism(tau, k, h):
        raise NotCoalgebraMap("tau is not a coalgebra morphism")
    for a in range(k.dim):
        legs = k.sweedler(a, 2)
        ta = tau.columns[a]
        for b in range(k.dim):
            lhs = h.product(ta, tau.columns[b])
            inner = accumulate(k.space, (
                (w, k.product(k.basis(a1),
                              apply2(action.act, tau.columns[a2], k.basis(b))))
                for w, (a1, a2) in legs))
            rhs = tau(inner)
            if lhs != rhs:
                raise IdentityFails(
                    "relative-rota-baxter",
                    Witness((k.label(a), k.label(b)), str(lhs), str(rhs)))
    return RelativeRB(k, h, action, tau)


def verify_cocycle(h: HopfAlgebraData, a: HopfAlgebraData,
                   action: ModuleAction, pi: LinearOp) -> Cocycle:
    """Check the module-algebra precondition, that π is a coalgebra
    isomorphism (inverted exactly), and the cocycle identity."""
    h.require_validated()
    a.require_validated()
    if action.actor is not h and not action.actor.structure_equal(h):
        raise DimensionMismatch("action actor must be the source Hopf algebra")
    if action.carrier is not a and not action.carrier.structure_equal(a):
        raise DimensionMismatch("action carrier must be the target Hopf algebra")
    report = module_algebra_report(action)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid("module-algebra", f"{fail.name}: {fail.witness}")
    if not check_coalgebra_morphism(pi, h, a):
        raise NotCoalgebraMap("pi is not a coalgebra morphism")
    pi_inv = invert(pi)
    for x in range(h.dim):
        legs = h.sweedler(x, 2)
        for y in range(h.dim):
            lhs = pi(h.mul_basis(x, y))
            rhs = accumulate(a.space, (
                (w, a.product(pi.columns[x1],
                              apply2(action.act, h.basis(x2), pi.columns[y])))
                for w, (x1, x2) in legs))
            if lhs != rhs:
                raise IdentityFails(
                    "cocycle",
                    Witness((h.label(x), h.label(y)), str(lhs), str(rhs)))
    return Cocycle(h, a, action, pi, pi_inv)


def invert_cocycle(c: Cocycle) -> RelativeRB:
    """π^{-1} as a relative Rota-Baxter operator; requires the action to
    be a module coalgebra as well."""
    report = module_coalgebra_report(c.action)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid("module-coalgebra", f"{fail.name}: {fail.witness}")
    return verify_relative_rb(c.target, c.source, c.action, c.pi_inverse)


def invert_relative_rb(r: RelativeRB) -> Cocycle:
    """τ^{-1} as a bijective 1-cocycle; τ must be bijective (the relative
    Rota-Baxter definition itself does not require this, so a singular τ
    raises SingularMap here rather than being excluded by the type)."""
    tau_inv = invert(r.tau)
    return verify_cocycle(r.target, r.source, r.action, tau_inv)


def canonical_from_brace(br: HopfBrace) -> tuple[RelativeRB, Cocycle]:
    """The identity map as a relative Rota-Baxter operator H -> H_circle
    and as a bijective 1-cocycle H_circle -> H, both over the derived
    action of the brace."""
    br.require_validated()
    action = ModuleAction(br.circle, br.dot, derived_action_map(br))
    ident = LinearOp.identity(br.dot.space)
    rel = verify_relative_rb(br.dot, br.circle, action, ident)
    coc = verify_cocycle(br.circle, br.dot, action, ident)
    return rel, coc


@dataclass
class CocycleRb:
    """Rota-Baxter Hopf algebra on A ⊗ A built from a bijective 1-cocycle."""

    ambient: HopfAlgebraData
    rb: RotaBaxterOp


def rb_hopf_from_cocycle(c: Cocycle) -> CocycleRb:
    """A ⊗ A with

        (x⊗y) * (z⊗t) = π(π^{-1}(x_(1)) π^{-1}(z))
                         ⊗ y S(x_(2)) π(π^{-1}(x_(3)) π^{-1}(t))
        S'(x⊗y)        = πSπ^{-1}(x_(1))
                         ⊗ π(Sπ^{-1}(x_(2)) π^{-1}(x_(3) S(y)))
        B(x⊗y)         = π(Sπ^{-1}(x) π^{-1}(y)) ⊗ 1

    (inner products and the inner S in the source, outer ones in the
    target).  The result is verified as a Rota-Baxter Hopf algebra and
    cross-checked against the generic brace embedding of the induced
    brace a ∘ b = π(π^{-1}(a) π^{-1}(b)).
    """
    h, a = c.source, c.target
    pi, pi_inv = c.pi, c.pi_inverse
    dim = a.dim
    field = a.field
    aa = tensor_space(a.space, a.space)
    aaaa = tensor_space(aa, aa)
    s_h = h.antipode
    s_a = a.antipode

    def transported(u: Element, v: Element) -> Element:
        return pi(h.product(pi_inv(u), pi_inv(v)))

    mul_cols = []
    for p in range(aa.dim):
        x, y = tensor_split(p, dim)
        legs = a.sweedler(x, 3)
        for q in range(aa.dim):
            z, t = tensor_split(q, dim)
            mul_cols.append(accumulate(aa, (
                (w, tensor_elem(aa, transported(a.basis(x1), a.basis(z)),
                                a.product_many([a.basis(y), s_a.columns[x2],
                                                transported(a.basis(x3),
                                                            a.basis(t))])))
                for w, (x1, x2, x3) in legs)))

    comul_cols = []
    counit_cols = []
    ssp = scalar_space(field)
    for p in range(aa.dim):
        x, y = tensor_split(p, dim)
        out: dict = {}
        for px, cx in a.comul.columns[x].coeffs.items():
            x1, x2 = tensor_split(px, dim)
            for py, cy in a.comul.columns[y].coeffs.items():
                y1, y2 = tensor_split(py, dim)
                idx = tensor_index(tensor_index(x1, y1, dim),
                                   tensor_index(x2, y2, dim), aa.dim)
                out[idx] = field.mul(cx, cy)
        comul_cols.append(Element(aaaa, out, _canonical=True))
        counit_cols.append(ssp.basis(0).scale(field.mul(a._eps[x], a._eps[y])))

    t_map = pi.compose(s_h).compose(pi_inv)
    anti_cols = []
    for p in range(aa.dim):
        x, y = tensor_split(p, dim)
        sy = s_a.columns[y]
        anti_cols.append(accumulate(aa, (
            (w, tensor_elem(aa, t_map.columns[x1],
                            pi(h.product(s_h(pi_inv(a.basis(x2))),
                                         pi_inv(a.product(a.basis(x3), sy))))))
            for w, (x1, x2, x3) in a.sweedler(x, 3))))

    ambient = HopfAlgebraData(aa, LinearOp(tensor_space(aa, aa), aa, mul_cols),
                              tensor_elem(aa, a.unit, a.unit),
                              LinearOp(aa, aaaa, comul_cols),
                              LinearOp(aa, ssp, counit_cols),
                              LinearOp(aa, aa, anti_cols))
    report = verify_hopf(ambient)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid("hopf", f"{fail.name}: {fail.witness}")

    b_cols = []
    for p in range(aa.dim):
        x, y = tensor_split(p, dim)
        b_cols.append(tensor_elem(
            aa, pi(h.product(s_h(pi_inv(a.basis(x))), pi_inv(a.basis(y)))),
            a.unit))
    b_map = LinearOp(aa, aa, b_cols)
    rbop = verify_rb(ambient, b_map)

    # cross-check against the generic embedding of the induced brace
    circle_cols = [transported(a.basis(x), a.basis(y))
                   for x in range(dim) for y in range(dim)]
    circle = HopfAlgebraData(a.space, LinearOp(a.hh, a.space, circle_cols),
                             a.unit, a.comul, a.counit, t_map)
    rep = verify_hopf(circle)
    if not rep.passed:
        raise ConstructionInvalid("induced-circle", str(rep.first_failure()))
    brace = verify_brace(a, circle)
    embedding = embed_into_rb(brace)
    if not embedding.ambient.structure_equal(ambient):
        raise InternalTheoremViolation(
            "cocycle-built ambient differs from the generic brace embedding")
    if embedding.rb.map != b_map:
        raise InternalTheoremViolation(
            "cocycle-built operator differs from the generic brace embedding")
    return CocycleRb(ambient, rbop)

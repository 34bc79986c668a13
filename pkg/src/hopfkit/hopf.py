"""Structure-constant Hopf algebras, axiom verification, standard
constructors, module actions and convolution inverses.

Every carrier is finite-dimensional with exact scalars.  Identities are
verified by sweeping all basis tuples, which suffices by multilinearity;
failed sweeps report the lexicographically first failing tuple together
with both evaluated sides.

Sweedler conventions: ``sweedler(i, n)`` expands the (n-1)-fold iterated
comultiplication of the i-th basis vector as a list of (coefficient,
index-tuple) terms, with iterates applied to the leftmost leg, i.e.
Δ²(x) = (Δ ⊗ id)Δ(x) = x_(1) ⊗ x_(2) ⊗ x_(3).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import TYPE_CHECKING

from .errors import (ConstructionInvalid, DimensionMismatch,
                     InternalTheoremViolation, NotCocommutative,
                     NotConvolutionInvertible, UnvalidatedInput)
from .linalg import (BasedSpace, Element, Field, LinearOp, QQ, accumulate,
                     flip_tensor, tensor_elem, tensor_index, tensor_space,
                     tensor_split, rank)
from .report import AxiomReport, Witness

if TYPE_CHECKING:
    from .groups import FiniteGroup


def scalar_space(field: Field) -> BasedSpace:
    """The ground field as a one-dimensional based space."""
    return BasedSpace(("1",), field)


def apply2(op: LinearOp, x: Element, y: Element) -> Element:
    """Apply a map defined on a tensor-square domain to x ⊗ y without
    materializing the tensor element."""
    dim_y = y.space.dim
    field = op.codomain.field
    return accumulate(op.codomain,
                      ((field.mul(cx, cy), op.columns[tensor_index(i, j, dim_y)])
                       for i, cx in x.coeffs.items()
                       for j, cy in y.coeffs.items()))


@dataclass(eq=False)
class HopfAlgebraData:
    """A Hopf algebra as sparse structure constants.

    ``validated`` is stamped by :func:`verify_hopf`; consumers that state
    a validated precondition refuse unvalidated data.
    """

    space: BasedSpace
    mul: LinearOp          # H ⊗ H -> H
    unit: Element
    comul: LinearOp        # H -> H ⊗ H
    counit: LinearOp       # H -> k
    antipode: LinearOp     # H -> H
    validated: bool = False
    _sweedler: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        hh = tensor_space(self.space, self.space)
        if self.mul.domain != hh or self.mul.codomain != self.space:
            raise DimensionMismatch("mul must map H⊗H to H")
        if self.comul.domain != self.space or self.comul.codomain != hh:
            raise DimensionMismatch("comul must map H to H⊗H")
        if self.counit.domain != self.space or self.counit.codomain.dim != 1:
            raise DimensionMismatch("counit must map H to the ground field")
        if self.antipode.domain != self.space or self.antipode.codomain != self.space:
            raise DimensionMismatch("antipode must map H to H")
        if self.unit.space != self.space:
            raise DimensionMismatch("unit must live in H")
        self.hh = hh
        self._basis = [self.space.basis(i) for i in range(self.space.dim)]
        self._eps = [self.counit.columns[i].coefficient(0)
                     for i in range(self.space.dim)]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self) -> Field:
        return self.space.field

    def basis(self, i: int) -> Element:
        return self._basis[i]

    def label(self, i: int):
        return self.space.labels[i]

    def mul_basis(self, i: int, j: int) -> Element:
        return self.mul.columns[tensor_index(i, j, self.dim)]

    def product(self, x: Element, y: Element) -> Element:
        return apply2(self.mul, x, y)

    def product_many(self, elems) -> Element:
        elems = list(elems)
        out = elems[0]
        for e in elems[1:]:
            out = self.product(out, e)
        return out

    def counit_scalar(self, x: Element):
        field = self.field
        total = field.zero
        for i, c in x.coeffs.items():
            total = field.add(total, field.mul(c, self._eps[i]))
        return total

    def antipode_elem(self, x: Element) -> Element:
        return self.antipode(x)

    def sweedler(self, i: int, legs: int) -> list:
        """Terms (coefficient, index tuple) of the iterated coproduct of
        basis vector i with the given number of legs."""
        cache = self._sweedler.setdefault(legs, {})
        if i in cache:
            return cache[i]
        if legs == 1:
            terms = [(self.field.one, (i,))]
        else:
            field = self.field
            collected: dict = {}
            for coeff, idxs in self.sweedler(i, legs - 1):
                for pair_idx, c2 in self.comul.columns[idxs[0]].coeffs.items():
                    a, b = tensor_split(pair_idx, self.dim)
                    key = (a, b) + idxs[1:]
                    v = field.add(collected.get(key, field.zero),
                                  field.mul(coeff, c2))
                    if v == 0:
                        collected.pop(key, None)
                    else:
                        collected[key] = v
            terms = [(c, k) for k, c in sorted(collected.items())]
        cache[i] = terms
        return terms

    def tensor_square_product(self, u: Element, v: Element) -> Element:
        """Componentwise product on H ⊗ H: (a⊗b)(c⊗d) = ac ⊗ bd."""
        field = self.field
        dim = self.dim
        out: dict = {}
        for pu, cu in u.coeffs.items():
            a, b = tensor_split(pu, dim)
            for pv, cv in v.coeffs.items():
                c, d = tensor_split(pv, dim)
                w = field.mul(cu, cv)
                left = self.mul_basis(a, c)
                right = self.mul_basis(b, d)
                for i, ci in left.coeffs.items():
                    base = i * dim
                    wi = field.mul(w, ci)
                    for j, cj in right.coeffs.items():
                        key = base + j
                        nv = field.add(out.get(key, field.zero),
                                       field.mul(wi, cj))
                        if nv == 0:
                            out.pop(key, None)
                        else:
                            out[key] = nv
        return Element(self.hh, out, _canonical=True)

    def require_validated(self):
        if not self.validated:
            raise UnvalidatedInput("carrier was never stamped by verify_hopf")

    def structure_equal(self, other: "HopfAlgebraData") -> bool:
        """Bit-exact equality of all structure constants."""
        return (self.space == other.space and self.mul == other.mul
                and self.unit == other.unit and self.comul == other.comul
                and self.counit == other.counit
                and self.antipode == other.antipode)


def _witness(h: HopfAlgebraData, at: tuple[int, ...], lhs, rhs) -> Witness:
    labels = tuple(h.label(i) for i in at)
    return Witness(labels, str(lhs), str(rhs))


def verify_hopf(h: HopfAlgebraData) -> AxiomReport:
    """Check every Hopf axiom on all basis tuples; stamp ``validated``.

    Report lines: associativity, unit, coassociativity, counit,
    bialgebra-compatibility (Δ and ε are algebra maps), antipode.
    """
    report = AxiomReport()
    dim = h.dim

    w = None
    for i in range(dim):
        for j in range(dim):
            left = h.mul_basis(i, j)
            for k in range(dim):
                lhs = h.product(left, h.basis(k))
                rhs = h.product(h.basis(i), h.mul_basis(j, k))
                if lhs != rhs:
                    w = _witness(h, (i, j, k), lhs, rhs)
                    break
            if w:
                break
        if w:
            break
    report.add("associativity", w)

    w = None
    for i in range(dim):
        e = h.basis(i)
        if h.product(h.unit, e) != e or h.product(e, h.unit) != e:
            w = _witness(h, (i,), h.product(h.unit, e), e)
            break
    report.add("unit", w)

    w = None
    for i in range(dim):
        left: dict = {}
        right: dict = {}
        for pair_idx, c in h.comul.columns[i].coeffs.items():
            a, b = tensor_split(pair_idx, dim)
            for sub_idx, c2 in h.comul.columns[a].coeffs.items():
                x, y = tensor_split(sub_idx, dim)
                key = (x, y, b)
                left[key] = h.field.add(left.get(key, h.field.zero),
                                        h.field.mul(c, c2))
            for sub_idx, c2 in h.comul.columns[b].coeffs.items():
                x, y = tensor_split(sub_idx, dim)
                key = (a, x, y)
                right[key] = h.field.add(right.get(key, h.field.zero),
                                         h.field.mul(c, c2))
        left = {k: v for k, v in left.items() if v != 0}
        right = {k: v for k, v in right.items() if v != 0}
        if left != right:
            w = _witness(h, (i,), "(Δ⊗id)Δ", "(id⊗Δ)Δ")
            break
    report.add("coassociativity", w)

    w = None
    for i in range(dim):
        lhs = accumulate(h.space,
                         ((h.field.mul(c, h._eps[tensor_split(p, dim)[0]]),
                           h.basis(tensor_split(p, dim)[1]))
                          for p, c in h.comul.columns[i].coeffs.items()))
        rhs = accumulate(h.space,
                         ((h.field.mul(c, h._eps[tensor_split(p, dim)[1]]),
                           h.basis(tensor_split(p, dim)[0]))
                          for p, c in h.comul.columns[i].coeffs.items()))
        if lhs != h.basis(i) or rhs != h.basis(i):
            w = _witness(h, (i,), lhs, h.basis(i))
            break
    report.add("counit", w)

    w = None
    unit_ok = (h.comul(h.unit) == tensor_elem(h.hh, h.unit, h.unit)
               and h.counit_scalar(h.unit) == h.field.one)
    if not unit_ok:
        w = Witness(("1",), str(h.comul(h.unit)), "1⊗1")
    else:
        for i in range(dim):
            di = h.comul.columns[i]
            for j in range(dim):
                prod = h.mul_basis(i, j)
                lhs = h.comul(prod)
                rhs = h.tensor_square_product(di, h.comul.columns[j])
                if lhs != rhs:
                    w = _witness(h, (i, j), lhs, rhs)
                    break
                if h.counit_scalar(prod) != h.field.mul(h._eps[i], h._eps[j]):
                    w = _witness(h, (i, j), h.counit_scalar(prod),
                                 h.field.mul(h._eps[i], h._eps[j]))
                    break
            if w:
                break
    report.add("bialgebra-compatibility", w)

    w = None
    for i in range(dim):
        target = h.unit.scale(h._eps[i])
        lhs = accumulate(h.space, (
            (c, h.product(h.antipode(h.basis(tensor_split(p, dim)[0])),
                          h.basis(tensor_split(p, dim)[1])))
            for p, c in h.comul.columns[i].coeffs.items()))
        rhs = accumulate(h.space, (
            (c, h.product(h.basis(tensor_split(p, dim)[0]),
                          h.antipode(h.basis(tensor_split(p, dim)[1]))))
            for p, c in h.comul.columns[i].coeffs.items()))
        if lhs != target or rhs != target:
            w = _witness(h, (i,), lhs if lhs != target else rhs, target)
            break
    report.add("antipode", w)

    h.validated = report.passed
    return report


def check_cocommutative(h: HopfAlgebraData) -> bool:
    """True iff flip ∘ Δ = Δ on every basis element."""
    h.require_validated()
    dim = h.dim
    for i in range(dim):
        col = h.comul.columns[i]
        if flip_tensor(h.hh, h.hh, col, dim) != col:
            return False
    return True


def require_cocommutative(h: HopfAlgebraData):
    h.require_validated()
    if not check_cocommutative(h):
        raise NotCocommutative("carrier must be cocommutative")


# -- constructors -------------------------------------------------------------

def group_algebra(group: "FiniteGroup", field: Field | None = None) -> HopfAlgebraData:
    """Group algebra k[G]: Δ(g) = g⊗g, ε(g) = 1, S(g) = g^{-1}; validated."""
    field = field or QQ
    space = BasedSpace(tuple(group.labels), field)
    hh = tensor_space(space, space)
    n = group.order
    mul_cols = [space.basis(group.table[i][j])
                for i in range(n) for j in range(n)]
    comul_cols = [Element(hh, {tensor_index(i, i, n): field.one}, _canonical=True)
                  for i in range(n)]
    counit_cols = [scalar_space(field).basis(0) for _ in range(n)]
    anti_cols = [space.basis(group.inverse[i]) for i in range(n)]
    h = HopfAlgebraData(space,
                        LinearOp(hh, space, mul_cols),
                        space.basis(group.identity),
                        LinearOp(space, hh, comul_cols),
                        LinearOp(space, scalar_space(field), counit_cols),
                        LinearOp(space, space, anti_cols))
    report = verify_hopf(h)
    if not report.passed:
        raise InternalTheoremViolation(
            f"group algebra of a valid group failed: {report.first_failure()}")
    return h


def hopf_from_structure(space: BasedSpace, mul: LinearOp, unit: Element,
                        comul: LinearOp, counit: LinearOp,
                        antipode: LinearOp) -> HopfAlgebraData:
    """Raw constructor; the result is unvalidated until verify_hopf runs."""
    return HopfAlgebraData(space, mul, unit, comul, counit, antipode)


def tensor_hopf(h: HopfAlgebraData, k: HopfAlgebraData) -> HopfAlgebraData:
    """Tensor product Hopf algebra with componentwise multiplication and
    the middle-flip tensor comultiplication."""
    require_cocommutative(h)
    require_cocommutative(k)
    field = h.field
    if field != k.field:
        raise DimensionMismatch("tensor factors over different fields")
    space = tensor_space(h.space, k.space)
    hh = tensor_space(space, space)
    dim_k = k.dim
    dim = space.dim

    mul_cols = []
    for p in range(dim):
        i, j = tensor_split(p, dim_k)
        for q in range(dim):
            a, b = tensor_split(q, dim_k)
            mul_cols.append(tensor_elem(space, h.mul_basis(i, a), k.mul_basis(j, b)))

    comul_cols = []
    for p in range(dim):
        i, j = tensor_split(p, dim_k)
        out: dict = {}
        for pi, ci in h.comul.columns[i].coeffs.items():
            h1, h2 = tensor_split(pi, h.dim)
            for pj, cj in k.comul.columns[j].coeffs.items():
                k1, k2 = tensor_split(pj, k.dim)
                idx = tensor_index(tensor_index(h1, k1, dim_k),
                                   tensor_index(h2, k2, dim_k), dim)
                out[idx] = field.mul(ci, cj)
        comul_cols.append(Element(hh, out, _canonical=True))

    ssp = scalar_space(field)
    counit_cols = []
    anti_cols = []
    for p in range(dim):
        i, j = tensor_split(p, dim_k)
        counit_cols.append(ssp.basis(0).scale(field.mul(h._eps[i], k._eps[j])))
        anti_cols.append(tensor_elem(space, h.antipode.columns[i],
                                     k.antipode.columns[j]))

    out = HopfAlgebraData(space, LinearOp(hh, space, mul_cols),
                          tensor_elem(space, h.unit, k.unit),
                          LinearOp(space, hh, comul_cols),
                          LinearOp(space, ssp, counit_cols),
                          LinearOp(space, space, anti_cols))
    report = verify_hopf(out)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid(f"tensor-hopf:{fail.name}", str(fail.witness))
    return out


def transport_hopf(h: HopfAlgebraData, p: LinearOp) -> HopfAlgebraData:
    """Transport of structure along a linear bijection p: H -> V.

    The result has the same axioms by construction but generally loses
    the group-like basis, so its coproducts have many terms; it is
    re-verified like every other constructor."""
    h.require_validated()
    if p.domain != h.space:
        raise DimensionMismatch("transport map must start at the carrier")
    from .linalg import invert, kron
    p_inv = invert(p)
    space = p.codomain
    hh = tensor_space(space, space)
    pp = kron(p, p)
    mul_cols = [p(h.product(p_inv.columns[i], p_inv.columns[j]))
                for i in range(space.dim) for j in range(space.dim)]
    comul_cols = [pp(h.comul(p_inv.columns[i])) for i in range(space.dim)]
    ssp = scalar_space(h.field)
    counit_cols = [ssp.basis(0).scale(h.counit_scalar(p_inv.columns[i]))
                   for i in range(space.dim)]
    out = HopfAlgebraData(space, LinearOp(hh, space, mul_cols), p(h.unit),
                          LinearOp(space, hh, comul_cols),
                          LinearOp(space, ssp, counit_cols),
                          p.compose(h.antipode).compose(p_inv))
    report = verify_hopf(out)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid(f"transport:{fail.name}", str(fail.witness))
    return out


def opposite_hopf(h: HopfAlgebraData) -> HopfAlgebraData:
    """Same coalgebra and antipode, multiplication flipped (the antipode
    stays valid because the carrier is cocommutative, where S² = id)."""
    require_cocommutative(h)
    dim = h.dim
    mul_cols = [h.mul_basis(j, i) for i in range(dim) for j in range(dim)]
    out = HopfAlgebraData(h.space, LinearOp(h.hh, h.space, mul_cols), h.unit,
                          h.comul, h.counit, h.antipode)
    report = verify_hopf(out)
    if not report.passed:
        fail = report.first_failure()
        raise ConstructionInvalid(f"opposite-hopf:{fail.name}", str(fail.witness))
    return out


# -- morphism checks -----------------------------------------------------------

def check_coalgebra_morphism(f: LinearOp, h: HopfAlgebraData,
                             k: HopfAlgebraData) -> bool:
    """Δ_K ∘ f = (f⊗f) ∘ Δ_H and ε_K ∘ f = ε_H on all basis elements."""
    h.require_validated()
    k.require_validated()
    if f.domain != h.space or f.codomain != k.space:
        raise DimensionMismatch("map does not go from H to K")
    for i in range(h.dim):
        lhs = k.comul(f.columns[i])
        rhs = accumulate(k.hh, (
            (c, tensor_elem(k.hh, f.columns[tensor_split(p, h.dim)[0]],
                            f.columns[tensor_split(p, h.dim)[1]]))
            for p, c in h.comul.columns[i].coeffs.items()))
        if lhs != rhs:
            return False
        if k.counit_scalar(f.columns[i]) != h._eps[i]:
            return False
    return True


def check_bialgebra_automorphism(phi: LinearOp, h: HopfAlgebraData) -> bool:
    """Multiplicative, unital, coalgebra-morphism and invertible."""
    if not check_coalgebra_morphism(phi, h, h):
        return False
    if phi(h.unit) != h.unit:
        return False
    for i in range(h.dim):
        fi = phi.columns[i]
        for j in range(h.dim):
            if phi(h.mul_basis(i, j)) != h.product(fi, phi.columns[j]):
                return False
    return rank(phi) == h.dim


def check_hopf_isomorphism(f: LinearOp, h: HopfAlgebraData,
                           k: HopfAlgebraData) -> bool:
    """True iff the bijection f transports every structure map of H to K."""
    if f.domain != h.space or f.codomain != k.space or h.dim != k.dim:
        return False
    if rank(f) != h.dim:
        return False
    if f(h.unit) != k.unit:
        return False
    if not check_coalgebra_morphism(f, h, k):
        return False
    for i in range(h.dim):
        if f(h.antipode.columns[i]) != k.antipode(f.columns[i]):
            return False
        for j in range(h.dim):
            if f(h.mul_basis(i, j)) != k.product(f.columns[i], f.columns[j]):
                return False
    return True


# -- module actions -------------------------------------------------------------

@dataclass(frozen=True)
class ModuleAction:
    """Left action act: K ⊗ H -> H of an actor Hopf algebra on a carrier."""

    actor: HopfAlgebraData
    carrier: HopfAlgebraData
    act: LinearOp

    def __post_init__(self):
        expected = tensor_space(self.actor.space, self.carrier.space)
        if self.act.domain != expected or self.act.codomain != self.carrier.space:
            raise DimensionMismatch("action must map K⊗H to H")

    def of(self, k: Element, x: Element) -> Element:
        return apply2(self.act, k, x)

    def basis(self, ki: int, hi: int) -> Element:
        return self.act.columns[tensor_index(ki, hi, self.carrier.dim)]


def module_action(actor: HopfAlgebraData, carrier: HopfAlgebraData,
                  act: LinearOp) -> ModuleAction:
    """Build a ModuleAction, checking that the unit acts as the identity
    and the action is associative over the actor multiplication."""
    action = ModuleAction(actor, carrier, act)
    report = AxiomReport()
    _module_axioms(action, report)
    fail = report.first_failure()
    if fail is not None:
        from .errors import AxiomFails
        raise AxiomFails(fail.name, fail.witness)
    return action


def _module_axioms(action: ModuleAction, report: AxiomReport):
    k, h = action.actor, action.carrier
    w = None
    for i in range(h.dim):
        got = action.of(k.unit, h.basis(i))
        if got != h.basis(i):
            w = Witness((h.label(i),), str(got), str(h.basis(i)))
            break
    report.add("module-unit", w)

    w = None
    for a in range(k.dim):
        for b in range(k.dim):
            prod = k.mul_basis(a, b)
            for i in range(h.dim):
                lhs = action.of(prod, h.basis(i))
                rhs = action.of(k.basis(a), action.basis(b, i))
                if lhs != rhs:
                    w = Witness((k.label(a), k.label(b), h.label(i)),
                                str(lhs), str(rhs))
                    break
            if w:
                break
        if w:
            break
    report.add("module-associativity", w)


def _module_algebra_axioms(action: ModuleAction, report: AxiomReport):
    k, h = action.actor, action.carrier
    w = None
    for a in range(k.dim):
        ka = k.basis(a)
        for i in range(h.dim):
            for j in range(h.dim):
                lhs = action.of(ka, h.mul_basis(i, j))
                rhs = accumulate(h.space, (
                    (c, h.product(action.basis(tensor_split(p, k.dim)[0], i),
                                  action.basis(tensor_split(p, k.dim)[1], j)))
                    for p, c in k.comul.columns[a].coeffs.items()))
                if lhs != rhs:
                    w = Witness((k.label(a), h.label(i), h.label(j)),
                                str(lhs), str(rhs))
                    break
            if w:
                break
        if w:
            break
    report.add("module-algebra-product", w)

    w = None
    for a in range(k.dim):
        got = action.of(k.basis(a), h.unit)
        want = h.unit.scale(k._eps[a])
        if got != want:
            w = Witness((k.label(a),), str(got), str(want))
            break
    report.add("module-algebra-unit", w)


def _module_coalgebra_axioms(action: ModuleAction, report: AxiomReport):
    k, h = action.actor, action.carrier
    w = None
    for a in range(k.dim):
        for i in range(h.dim):
            lhs = h.comul(action.basis(a, i))
            rhs_terms = []
            for pk, ck in k.comul.columns[a].coeffs.items():
                k1, k2 = tensor_split(pk, k.dim)
                for ph, ch in h.comul.columns[i].coeffs.items():
                    h1, h2 = tensor_split(ph, h.dim)
                    rhs_terms.append((h.field.mul(ck, ch),
                                      tensor_elem(h.hh, action.basis(k1, h1),
                                                  action.basis(k2, h2))))
            rhs = accumulate(h.hh, rhs_terms)
            if lhs != rhs:
                w = Witness((k.label(a), h.label(i)), str(lhs), str(rhs))
                break
        if w:
            break
    report.add("module-coalgebra-comul", w)

    w = None
    for a in range(k.dim):
        for i in range(h.dim):
            got = h.counit_scalar(action.basis(a, i))
            want = h.field.mul(k._eps[a], h._eps[i])
            if got != want:
                w = Witness((k.label(a), h.label(i)), str(got), str(want))
                break
        if w:
            break
    report.add("module-coalgebra-counit", w)


def check_module_bialgebra(action: ModuleAction) -> AxiomReport:
    """Full left module-bialgebra axiom sweep for an action K ⊗ H -> H."""
    action.actor.require_validated()
    action.carrier.require_validated()
    report = AxiomReport()
    _module_axioms(action, report)
    _module_algebra_axioms(action, report)
    _module_coalgebra_axioms(action, report)
    return report


def module_algebra_report(action: ModuleAction) -> AxiomReport:
    """Module axioms plus the module-algebra compatibilities only."""
    report = AxiomReport()
    _module_axioms(action, report)
    _module_algebra_axioms(action, report)
    return report


def module_coalgebra_report(action: ModuleAction) -> AxiomReport:
    """Module axioms plus the module-coalgebra compatibilities only."""
    report = AxiomReport()
    _module_axioms(action, report)
    _module_coalgebra_axioms(action, report)
    return report


def trivial_action(actor: HopfAlgebraData, carrier: HopfAlgebraData) -> ModuleAction:
    """k ⊳ h = ε(k) h."""
    cols = [carrier.basis(i).scale(actor._eps[a])
            for a in range(actor.dim) for i in range(carrier.dim)]
    dom = tensor_space(actor.space, carrier.space)
    return module_action(actor, carrier, LinearOp(dom, carrier.space, cols))


def adjoint_action(h: HopfAlgebraData) -> ModuleAction:
    """g ⊳ x = g_(1) x S(g_(2)), the adjoint action of H on itself."""
    cols = []
    for a in range(h.dim):
        for i in range(h.dim):
            cols.append(accumulate(h.space, (
                (c, h.product_many([h.basis(g1), h.basis(i),
                                    h.antipode.columns[g2]]))
                for c, (g1, g2) in h.sweedler(a, 2))))
    return module_action(h, h, LinearOp(h.hh, h.space, cols))


# -- Hopf subalgebras -----------------------------------------------------------

def sub_hopf_indices(h: HopfAlgebraData, labels) -> list[int]:
    """Indices of a basis-label subset, after checking it spans a Hopf
    subalgebra (closed under multiplication, antipode and comultiplication
    and containing the unit)."""
    idx = sorted(h.space.index_of(lab) for lab in labels)
    part = set(idx)
    for i in h.unit.coeffs:
        if i not in part:
            raise ConstructionInvalid("sub-hopf", "part does not contain the unit")
    for i in idx:
        for j in idx:
            if any(kk not in part for kk in h.mul_basis(i, j).coeffs):
                raise ConstructionInvalid(
                    "sub-hopf", f"part not closed under multiplication at "
                    f"({h.label(i)},{h.label(j)})")
        if any(kk not in part for kk in h.antipode.columns[i].coeffs):
            raise ConstructionInvalid(
                "sub-hopf", f"part not closed under the antipode at {h.label(i)}")
        for p in h.comul.columns[i].coeffs:
            a, b = tensor_split(p, h.dim)
            if a not in part or b not in part:
                raise ConstructionInvalid(
                    "sub-hopf", f"part is not a subcoalgebra at {h.label(i)}")
    return idx


def sub_hopf(h: HopfAlgebraData, labels) -> tuple[HopfAlgebraData, LinearOp]:
    """Restrict a validated Hopf algebra to a Hopf subalgebra; returns the
    restricted structure together with its inclusion map."""
    h.require_validated()
    idx = sub_hopf_indices(h, labels)
    pos = {amb: i for i, amb in enumerate(idx)}
    space = BasedSpace(tuple(h.label(i) for i in idx), h.field)
    hh = tensor_space(space, space)
    n = len(idx)

    def restrict(elem: Element) -> Element:
        return Element(space, {pos[i]: c for i, c in elem.coeffs.items()},
                       _canonical=True)

    mul_cols = [restrict(h.mul_basis(i, j)) for i in idx for j in idx]
    comul_cols = []
    for i in idx:
        out = {}
        for p, c in h.comul.columns[i].coeffs.items():
            a, b = tensor_split(p, h.dim)
            out[tensor_index(pos[a], pos[b], n)] = c
        comul_cols.append(Element(hh, out, _canonical=True))
    ssp = scalar_space(h.field)
    counit_cols = [ssp.basis(0).scale(h._eps[i]) for i in idx]
    anti_cols = [restrict(h.antipode.columns[i]) for i in idx]
    sub = HopfAlgebraData(space, LinearOp(hh, space, mul_cols),
                          restrict(h.unit), LinearOp(space, hh, comul_cols),
                          LinearOp(space, ssp, counit_cols),
                          LinearOp(space, space, anti_cols))
    report = verify_hopf(sub)
    if not report.passed:
        raise InternalTheoremViolation(
            f"restriction of a validated Hopf algebra failed: "
            f"{report.first_failure()}")
    inclusion = LinearOp(space, h.space, [h.basis(i) for i in idx])
    return sub, inclusion


# -- convolution algebra --------------------------------------------------------

def convolution_inverse(source: HopfAlgebraData, f: LinearOp,
                        target_mul: LinearOp | None = None,
                        target_unit: Element | None = None) -> LinearOp:
    """Two-sided convolution inverse of ``f`` from the coalgebra of
    ``source`` into an algebra (by default ``source`` itself).

    Solved as one exact linear system; raises ``NotConvolutionInvertible``
    when no solution exists and ``NonUniqueSolution`` when the solution is
    not unique.
    """
    source.require_validated()
    if target_mul is None:
        if f.codomain != source.space:
            raise DimensionMismatch("default target requires f: H -> H")
        target_mul, target_unit = source.mul, source.unit
    target = f.codomain
    field = source.field
    dim_c, dim_a = source.dim, target.dim
    n_unknowns = dim_c * dim_a
    aug = n_unknowns
    rows: list[dict] = []

    def add_equations(left_of_unknown: bool):
        for ci in range(dim_c):
            block = [dict() for _ in range(dim_a)]
            rhs_vec = target_unit.scale(source._eps[ci])
            for coeff, (c1, c2) in source.sweedler(ci, 2):
                if left_of_unknown:
                    fixed, unknown_col = f.columns[c1], c2
                else:
                    fixed, unknown_col = f.columns[c2], c1
                for a in range(dim_a):
                    if left_of_unknown:
                        v = apply2(target_mul, fixed, target.basis(a))
                    else:
                        v = apply2(target_mul, target.basis(a), fixed)
                    u = unknown_col * dim_a + a
                    for r, cr in v.coeffs.items():
                        nv = field.add(block[r].get(u, field.zero),
                                       field.mul(coeff, cr))
                        if nv == 0:
                            block[r].pop(u, None)
                        else:
                            block[r][u] = nv
            for r in range(dim_a):
                row = block[r]
                rv = rhs_vec.coefficient(r)
                if rv != 0:
                    row[aug] = rv
                if row:
                    rows.append(row)

    add_equations(True)
    add_equations(False)

    from .linalg import _eliminate
    pivots = _eliminate(rows, n_unknowns, field)
    pivot_rows = {r for r, _ in pivots}
    for r, row in enumerate(rows):
        if r not in pivot_rows and row.get(aug, 0) != 0:
            raise NotConvolutionInvertible("no convolution inverse exists")
    nullity = n_unknowns - len(pivots)
    if nullity > 0:
        from .errors import NonUniqueSolution
        raise NonUniqueSolution("convolution inverse is not unique", nullity)
    sol = {}
    for r, col in pivots:
        v = rows[r].get(aug, 0)
        if v != 0:
            sol[col] = v
    cols = []
    for ci in range(dim_c):
        coeffs = {a: sol[ci * dim_a + a] for a in range(dim_a)
                  if ci * dim_a + a in sol}
        cols.append(Element(target, coeffs, _canonical=True))
    return LinearOp(source.space, target, cols)


def unit_counit_map(h: HopfAlgebraData) -> LinearOp:
    """The convolution identity x -> ε(x) 1."""
    return LinearOp(h.space, h.space,
                    [h.unit.scale(h._eps[i]) for i in range(h.dim)])


# -- the endomorphism algebra ----------------------------------------------------

def end_algebra(space: BasedSpace) -> tuple[BasedSpace, LinearOp, Element]:
    """End(V) as a based algebra with matrix-unit basis (row, col);
    returns (space, composition product, identity element)."""
    d = space.dim
    labels = tuple((space.labels[i], space.labels[j])
                   for i in range(d) for j in range(d))
    e_space = BasedSpace(labels, space.field)
    ee = tensor_space(e_space, e_space)
    cols = []
    for p in range(d * d):
        i, j = divmod(p, d)
        for q in range(d * d):
            k, l = divmod(q, d)
            if j == k:
                cols.append(e_space.basis(i * d + l))
            else:
                cols.append(e_space.zero())
    unit = Element(e_space, {i * d + i: space.field.one for i in range(d)},
                   _canonical=True)
    return e_space, LinearOp(ee, e_space, cols), unit


def op_to_end_element(e_space: BasedSpace, f: LinearOp) -> Element:
    d = f.domain.dim
    out = {}
    for j, col in enumerate(f.columns):
        for i, c in col.coeffs.items():
            out[i * d + j] = c
    return Element(e_space, out, _canonical=True)


def end_element_to_op(space: BasedSpace, elem: Element) -> LinearOp:
    d = space.dim
    cols_data: list[dict] = [dict() for _ in range(d)]
    for p, c in elem.coeffs.items():
        i, j = divmod(p, d)
        cols_data[j][i] = c
    return LinearOp(space, space,
                    [Element(space, data, _canonical=True) for data in cols_data])


def curry_action(e_space: BasedSpace, act: LinearOp) -> LinearOp:
    """Turn a map H ⊗ H -> H into the map H -> End(H), x -> (y -> x▶y)."""
    space = act.codomain
    d = space.dim
    cols = []
    for x in range(d):
        out = {}
        for y in range(d):
            col = act.columns[tensor_index(x, y, d)]
            for i, c in col.coeffs.items():
                out[i * d + y] = c
        cols.append(Element(e_space, out, _canonical=True))
    return LinearOp(space, e_space, cols)


def uncurry_action(space: BasedSpace, alpha: LinearOp) -> LinearOp:
    """Inverse of :func:`curry_action`."""
    d = space.dim
    hh = tensor_space(space, space)
    cols = []
    for x in range(d):
        mats = alpha.columns[x]
        per_y: list[dict] = [dict() for _ in range(d)]
        for p, c in mats.coeffs.items():
            i, y = divmod(p, d)
            per_y[y][i] = c
        for y in range(d):
            cols.append(Element(space, per_y[y], _canonical=True))
    return LinearOp(hh, space, cols)

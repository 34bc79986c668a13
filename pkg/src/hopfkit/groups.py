"""Finite groups, Rota-Baxter group operators, skew braces, and lifts
to group algebras.

Groups are Cayley tables over indices 0..n-1 with index 0 the identity
by convention of the shipped constructors (arbitrary identity positions
are accepted for user tables).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import (BudgetExceeded, DimensionMismatch, IdentityFails,
                     InternalTheoremViolation)
from .report import Witness


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group given by its Cayley table (entries are indices)."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    name: str = "G"
    identity: int = field(init=False, default=0)
    inverse: tuple[int, ...] = field(init=False, default=())

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or len(self.labels) != n:
            raise DimensionMismatch("labels must match the table size")
        for row in self.table:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise DimensionMismatch("Cayley table is not square over 0..n-1")
            if len(set(row)) != n:
                raise DimensionMismatch("Cayley table rows must be permutations")
        for j in range(n):
            if len({self.table[i][j] for i in range(n)}) != n:
                raise DimensionMismatch("Cayley table columns must be permutations")
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise DimensionMismatch("table has no identity element")
        inv = []
        for x in range(n):
            found = [y for y in range(n) if self.table[x][y] == ident]
            if len(found) != 1:
                raise DimensionMismatch("inverses are not unique")
            inv.append(found[0])
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise DimensionMismatch(
                            f"table is not associative at ({a},{b},{c})")
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, a: int, b: int) -> int:
        """a b a^{-1}."""
        return self.mul(self.mul(a, b), self.inv(a))

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(n) for b in range(n))

    def __str__(self) -> str:
        return f"{self.name} (order {self.order})"


# -- constructors -------------------------------------------------------------

def trivial_group() -> FiniteGroup:
    return FiniteGroup(((0,),), ("e",), "1")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    labels = tuple("e" if i == 0 else ("g" if i == 1 else f"g{i}") for i in range(n))
    return FiniteGroup(table, labels, f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n with r^n = s^2 = e and s r s = r^{-1}.

    Element (i, j) stands for r^i s^j, indexed i + n*j; D3 is S3 with the
    presentation r^3 = s^2 = e, s r s = r^2.
    """
    if n < 2:
        raise ValueError("dihedral needs n >= 2")

    def idx(i, j):
        return i % n + n * (j % 2)

    def mul(x, y):
        i, j = x % n, x // n
        k, l = y % n, y // n
        # r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
        return idx(i + (k if j == 0 else -k), j + l)

    table = tuple(tuple(mul(x, y) for y in range(2 * n)) for x in range(2 * n))

    def label(x):
        i, j = x % n, x // n
        rpart = "" if i == 0 else ("r" if i == 1 else f"r{i}")
        spart = "s" if j else ""
        return (rpart + spart) or "e"

    return FiniteGroup(table, tuple(label(x) for x in range(2 * n)), f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters (n <= 4), elements in lexicographic order."""
    if not 1 <= n <= 4:
        raise ValueError("symmetric(n) shipped for n <= 4")
    from itertools import permutations
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}

    def mul(p, q):
        return tuple(p[q[i]] for i in range(n))

    table = tuple(tuple(index[mul(p, q)] for q in perms) for p in perms)
    labels = tuple("".join(str(x) for x in p) for p in perms)
    return FiniteGroup(table, labels, f"S{n}")


def quaternion_group() -> FiniteGroup:
    """The quaternion group Q8 = {±1, ±i, ±j, ±k}."""
    units = ["1", "i", "j", "k"]
    # sign and axis of the product of two of 1,i,j,k
    prod = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
            ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
            ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"), ("i", "k"): (-1, "j")}

    def idx(sign, axis):
        return units.index(axis) * 2 + (0 if sign == 1 else 1)

    def decode(x):
        return (1 if x % 2 == 0 else -1), units[x // 2]

    def mul(x, y):
        sx, ax = decode(x)
        sy, ay = decode(y)
        sp, ap = prod[(ax, ay)]
        return idx(sx * sy * sp, ap)

    table = tuple(tuple(mul(x, y) for y in range(8)) for x in range(8))
    labels = tuple(("" if s == 1 else "-") + a for x in range(8)
                   for s, a in [decode(x)])
    return FiniteGroup(table, labels, "Q8")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product with pairs (a, b) indexed row-major."""
    nh = h.order

    def idx(a, b):
        return a * nh + b

    def mul(x, y):
        a1, b1 = divmod(x, nh)
        a2, b2 = divmod(y, nh)
        return idx(g.mul(a1, a2), h.mul(b1, b2))

    n = g.order * nh
    table = tuple(tuple(mul(x, y) for y in range(n)) for x in range(n))
    labels = tuple(f"({g.labels[a]},{h.labels[b]})"
                   for a in range(g.order) for b in range(nh))
    return FiniteGroup(table, labels, f"{g.name}x{h.name}")


def semidirect_product(n_grp: FiniteGroup, h_grp: FiniteGroup,
                       action: dict[int, tuple[int, ...]],
                       name: str | None = None) -> FiniteGroup:
    """Semidirect product N ⋊ H from a homomorphism H -> Aut(N).

    ``action[h]`` is the permutation of N induced by h; the product is
    (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
    """
    for h in range(h_grp.order):
        perm = action[h]
        if sorted(perm) != list(range(n_grp.order)):
            raise DimensionMismatch("action values must be permutations of N")
    nh = h_grp.order

    def idx(a, b):
        return a * nh + b

    def mul(x, y):
        n1, h1 = divmod(x, nh)
        n2, h2 = divmod(y, nh)
        return idx(n_grp.mul(n1, action[h1][n2]), h_grp.mul(h1, h2))

    n = n_grp.order * nh
    table = tuple(tuple(mul(x, y) for y in range(n)) for x in range(n))
    labels = tuple(f"({n_grp.labels[a]},{h_grp.labels[b]})"
                   for a in range(n_grp.order) for b in range(nh))
    return FiniteGroup(table, labels, name or f"{n_grp.name}:{h_grp.name}")


# -- Rota-Baxter group operators ----------------------------------------------

@dataclass(frozen=True)
class RBGroupOp:
    """Map B with B(g)B(h) = B(g B(g) h B(g)^{-1}) for all g, h."""

    group: FiniteGroup
    table: tuple[int, ...]


def _rb_group_witness(g: FiniteGroup, table, a: int, b: int) -> Witness | None:
    lhs = g.mul(table[a], table[b])
    inner = g.mul(g.mul(a, table[a]), g.mul(b, g.inv(table[a])))
    rhs = table[inner]
    if lhs == rhs:
        return None
    return Witness((g.labels[a], g.labels[b]),
                   g.labels[lhs], g.labels[rhs])


def verify_rb_group(g: FiniteGroup, table) -> RBGroupOp:
    """Sweep the Rota-Baxter group identity over all pairs."""
    table = tuple(table)
    if len(table) != g.order or any(not 0 <= x < g.order for x in table):
        raise DimensionMismatch("operator table must map indices to indices")
    for a in range(g.order):
        for b in range(g.order):
            w = _rb_group_witness(g, table, a, b)
            if w is not None:
                raise IdentityFails("rota-baxter-group", w)
    return RBGroupOp(g, table)


def rb_inverse_op(g: FiniteGroup) -> RBGroupOp:
    return verify_rb_group(g, g.inverse)


def rb_trivial_op(g: FiniteGroup) -> RBGroupOp:
    return verify_rb_group(g, (g.identity,) * g.order)


@dataclass(frozen=True)
class SkewBrace:
    """Group (G, ·) with a second group operation ∘ satisfying
    a ∘ (bc) = (a ∘ b) a^{-1} (a ∘ c)."""

    group: FiniteGroup
    circle: tuple[tuple[int, ...], ...]


def skew_brace_from_rb_group(b: RBGroupOp) -> SkewBrace:
    """x ∘ y = x B(x) y B(x)^{-1}; all skew brace axioms are re-swept."""
    g = b.group
    n = g.order

    def circ(x, y):
        bx = b.table[x]
        return g.mul(g.mul(x, bx), g.mul(y, g.inv(bx)))

    circle = tuple(tuple(circ(x, y) for y in range(n)) for x in range(n))
    try:
        FiniteGroup(circle, g.labels, f"{g.name}(circle)")
    except DimensionMismatch as exc:
        raise InternalTheoremViolation(f"(G,∘) is not a group: {exc}") from exc
    for a in range(n):
        for x in range(n):
            for c in range(n):
                lhs = circle[a][g.mul(x, c)]
                rhs = g.mul(g.mul(circle[a][x], g.inv(a)), circle[a][c])
                if lhs != rhs:
                    raise InternalTheoremViolation(
                        f"skew brace compatibility fails at "
                        f"({g.labels[a]},{g.labels[x]},{g.labels[c]})")
    return SkewBrace(g, circle)


def enumerate_rb_group_ops(g: FiniteGroup, budget: int | None = None) -> list[RBGroupOp]:
    """All Rota-Baxter operators on g, by pruned depth-first search.

    The identity forces B(e) = e; partial assignments are propagated
    through every pair whose inner argument is already determined, so the
    search never expands an inconsistent branch.  ``budget`` bounds the
    number of search nodes; exceeding it raises ``BudgetExceeded`` with
    the partial result list attached.
    """
    n = g.order
    found: list[tuple[int, ...]] = []
    nodes = 0

    def propagate(table: dict[int, int]) -> dict[int, int] | None:
        """Close a partial assignment under the identity; None on conflict."""
        table = dict(table)
        changed = True
        while changed:
            changed = False
            for a in list(table):
                for b in list(table):
                    ba, bb = table[a], table[b]
                    inner = g.mul(g.mul(a, ba), g.mul(b, g.inv(ba)))
                    val = g.mul(ba, bb)
                    if inner in table:
                        if table[inner] != val:
                            return None
                    else:
                        table[inner] = val
                        changed = True
        return table

    def dfs(table: dict[int, int]):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(
                f"search budget {budget} exceeded on {g.name}",
                [RBGroupOp(g, t) for t in found])
        missing = [x for x in range(n) if x not in table]
        if not missing:
            found.append(tuple(table[x] for x in range(n)))
            return
        x = missing[0]
        for val in range(n):
            table[x] = val
            result = propagate(table)
            if result is not None:
                dfs(result)
            del table[x]

    dfs({g.identity: g.identity})
    found.sort()
    return [verify_rb_group(g, t) for t in found]


def ybe_set_map(b: RBGroupOp) -> dict[tuple[int, int], tuple[int, int]]:
    """Set-level Yang-Baxter map of the skew brace of ``b``:
    (g, h) -> (u, v) with u = B(g) h B(g)^{-1} and
    v = B(u)^{-1} u^{-1} g u B(u)."""
    g = b.group
    out = {}
    for x in range(g.order):
        for y in range(g.order):
            bx = b.table[x]
            u = g.mul(g.mul(bx, y), g.inv(bx))
            bu = b.table[u]
            v = g.mul(g.mul(g.mul(g.inv(bu), g.inv(u)), g.mul(x, u)), bu)
            out[(x, y)] = (u, v)
    return out


# -- subgroup lattice and exact factorizations --------------------------------

def subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups as sorted index tuples (order <= ~12 intended)."""
    n = g.order
    elems = list(range(n))
    out: set[tuple[int, ...]] = set()

    def closure(seed: frozenset[int]) -> frozenset[int]:
        cur = set(seed) | {g.identity}
        changed = True
        while changed:
            changed = False
            for a in list(cur):
                for b in list(cur):
                    c = g.mul(a, b)
                    if c not in cur:
                        cur.add(c)
                        changed = True
        return frozenset(cur)

    frontier = {frozenset({g.identity})}
    out.add(tuple(sorted({g.identity})))
    while frontier:
        nxt = set()
        for sub in frontier:
            for x in elems:
                if x in sub:
                    continue
                bigger = closure(sub | {x})
                key = tuple(sorted(bigger))
                if key not in out:
                    out.add(key)
                    nxt.add(bigger)
        frontier = nxt
    return sorted(out, key=lambda s: (len(s), s))


def find_exact_factorizations(g: FiniteGroup):
    """Pairs (A, B) with A ∩ B = {e} and |A||B| = |G|, and triples
    (H, L, M) whose product map H x L x M -> G is a bijection."""
    subs = subgroups(g)
    n = g.order
    pairs = []
    for a in subs:
        for b in subs:
            if len(a) * len(b) == n and set(a) & set(b) == {g.identity}:
                pairs.append((a, b))
    triples = []
    for h in subs:
        for l in subs:
            for m in subs:
                if len(h) * len(l) * len(m) != n:
                    continue
                seen = set()
                for x, y, z in product(h, l, m):
                    seen.add(g.mul(g.mul(x, y), z))
                if len(seen) == n:
                    triples.append((h, l, m))
    return pairs, triples


# -- lifts to the group algebra ------------------------------------------------

def lift_to_group_algebra(b: RBGroupOp, field=None):
    """Linear lift of a group-level operator; re-verified as a Rota-Baxter
    operator on the group algebra (failure would be an internal bug)."""
    from . import hopf, rb
    from .errors import HopfkitError

    h = hopf.group_algebra(b.group, field)
    op = _basis_permutation_map(h, b.table)
    try:
        return rb.verify_rb(h, op)
    except HopfkitError as exc:
        raise InternalTheoremViolation(
            f"lift of a verified group operator failed: {exc}") from exc


def lift_map(h, table):
    """Linear lift of an arbitrary index map on a group algebra basis."""
    return _basis_permutation_map(h, table)


def _basis_permutation_map(h, table):
    from .linalg import LinearOp
    return LinearOp(h.space, h.space, [h.space.basis(j) for j in table])


def group_automorphisms(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms of g by brute force over generator images
    (intended for small orders)."""
    n = g.order
    auts = []
    from itertools import permutations
    for perm in permutations(range(n)):
        if perm[g.identity] != g.identity:
            continue
        if all(perm[g.mul(a, bb)] == g.mul(perm[a], perm[bb])
               for a in range(n) for bb in range(n)):
            auts.append(perm)
    return auts


def conjugation_automorphism(g: FiniteGroup, by: int) -> tuple[int, ...]:
    return tuple(g.conj(by, x) for x in range(g.order))


def lift_automorphism(h, perm):
    """Lift a group automorphism to a bialgebra automorphism of the
    group algebra."""
    from . import hopf
    from .errors import NotAutomorphism

    op = _basis_permutation_map(h, perm)
    if not hopf.check_bialgebra_automorphism(op, h):
        raise NotAutomorphism("permutation does not lift to a bialgebra automorphism")
    return op

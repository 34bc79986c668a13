"""Exact sparse linear algebra over the rationals or a prime field.

Scalars are ``fractions.Fraction`` in rational mode and plain ints reduced
into ``[0, p)`` in prime-field mode; every operation is exact with zero
tolerance.  Sparse containers are kept canonical (no stored zeros), so
equality of elements and maps is structural.

All values are immutable after construction and safe to share; the solver
uses Gaussian elimination with exact first-nonzero pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable

from .errors import (DimensionMismatch, FieldMismatch, NoSolution,
                     NonUniqueSolution, SingularMap)
from .report import label_str

Label = Hashable
Scalar = object  # Fraction (rational mode) or int (prime-field mode)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p == 0``) or the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"field modulus must be 0 (rationals) or prime, got {self.p}")

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p == 0 else 1

    def of(self, num: int, den: int = 1) -> Scalar:
        """Build a field element from an integer or a reduced fraction."""
        if self.p == 0:
            return Fraction(num, den)
        if den % self.p == 0:
            raise ZeroDivisionError("denominator divisible by the modulus")
        val = (num % self.p) * pow(den % self.p, self.p - 2, self.p)
        return val % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p == 0 else pow(a, self.p - 2, self.p)

    def render(self, a: Scalar) -> str:
        if self.p == 0:
            f = Fraction(a)
            return f"{f.numerator}/{f.denominator}"
        return str(a % self.p)

    def parse(self, text: str) -> Scalar:
        if "/" in text:
            num, den = text.split("/", 1)
            return self.of(int(num), int(den))
        return self.of(int(text))

    def __str__(self) -> str:
        return "rational" if self.p == 0 else f"F_{self.p}"


QQ = Field(0)


@dataclass(frozen=True)
class BasedSpace:
    """Finite-dimensional vector space with an ordered, labelled basis."""

    labels: tuple[Label, ...]
    field: Field = QQ

    def __post_init__(self):
        if not self.labels:
            raise DimensionMismatch("a based space needs at least one basis label")
        if len(set(self.labels)) != len(self.labels):
            raise DimensionMismatch("basis labels must be distinct")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of(self, label: Label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis label {label_str(label)}") from None

    def basis(self, i: int) -> "Element":
        return Element(self, {i: self.field.one}, _canonical=True)

    def zero(self) -> "Element":
        return Element(self, {}, _canonical=True)

    def __str__(self) -> str:
        return f"space(dim {self.dim} over {self.field})"


class Element:
    """Sparse vector: a map basis index -> nonzero scalar."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: BasedSpace, coeffs: dict, *, _canonical: bool = False):
        if not _canonical:
            dim = space.dim
            clean = {}
            for i, c in coeffs.items():
                if not 0 <= i < dim:
                    raise DimensionMismatch(f"coefficient index {i} out of range")
                if c != 0:
                    clean[i] = c
            coeffs = clean
        self.space = space
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.space == other.space
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.space.labels, tuple(self.items())))

    def __add__(self, other: "Element") -> "Element":
        if self.space != other.space:
            raise FieldMismatch("elements live in different spaces")
        field = self.space.field
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            v = field.add(out.get(i, 0), c)
            if v == 0:
                out.pop(i, None)
            else:
                out[i] = v
        return Element(self.space, out, _canonical=True)

    def __sub__(self, other: "Element") -> "Element":
        return self + other.scale(self.space.field.neg(self.space.field.one))

    def __neg__(self) -> "Element":
        return self.scale(self.space.field.neg(self.space.field.one))

    def scale(self, scalar: Scalar) -> "Element":
        if scalar == 0:
            return Element(self.space, {}, _canonical=True)
        field = self.space.field
        return Element(self.space,
                       {i: field.mul(scalar, c) for i, c in self.coeffs.items()},
                       _canonical=True)

    def coefficient(self, i: int) -> Scalar:
        return self.coeffs.get(i, self.space.field.zero)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        field = self.space.field
        return " + ".join(f"{field.render(c)}*{label_str(self.space.labels[i])}"
                          for i, c in self.items())


def accumulate(space: BasedSpace, terms: Iterable[tuple[Scalar, Element]]) -> Element:
    """Sum ``coeff * element`` terms into one canonical element."""
    field = space.field
    out: dict = {}
    for coeff, elem in terms:
        if coeff == 0:
            continue
        for i, c in elem.coeffs.items():
            v = field.add(out.get(i, 0), field.mul(coeff, c))
            if v == 0:
                out.pop(i, None)
            else:
                out[i] = v
    return Element(space, out, _canonical=True)


class LinearOp:
    """Sparse linear map stored column-wise (one codomain element per
    domain basis vector)."""

    __slots__ = ("domain", "codomain", "columns")

    def __init__(self, domain: BasedSpace, codomain: BasedSpace,
                 columns: Iterable[Element]):
        columns = tuple(columns)
        if len(columns) != domain.dim:
            raise DimensionMismatch(
                f"expected {domain.dim} columns, got {len(columns)}")
        for col in columns:
            if col.space != codomain:
                raise DimensionMismatch("column lives in the wrong codomain")
        if domain.field != codomain.field:
            raise FieldMismatch("domain and codomain over different fields")
        self.domain = domain
        self.codomain = codomain
        self.columns = columns

    @classmethod
    def identity(cls, space: BasedSpace) -> "LinearOp":
        return cls(space, space, [space.basis(i) for i in range(space.dim)])

    @classmethod
    def zero(cls, domain: BasedSpace, codomain: BasedSpace) -> "LinearOp":
        return cls(domain, codomain, [codomain.zero()] * domain.dim)

    @classmethod
    def from_function(cls, domain: BasedSpace, codomain: BasedSpace,
                      fn: Callable[[int], Element]) -> "LinearOp":
        return cls(domain, codomain, [fn(i) for i in range(domain.dim)])

    def __call__(self, elem: Element) -> Element:
        if elem.space != self.domain:
            raise DimensionMismatch("element not in the domain")
        return accumulate(self.codomain,
                          ((c, self.columns[i]) for i, c in elem.coeffs.items()))

    def compose(self, other: "LinearOp") -> "LinearOp":
        """Return self after other (``self ∘ other``)."""
        if other.codomain != self.domain:
            raise DimensionMismatch("composition shapes do not match")
        return LinearOp(other.domain, self.codomain,
                        [self(col) for col in other.columns])

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearOp) and self.domain == other.domain
                and self.codomain == other.codomain
                and self.columns == other.columns)

    def __hash__(self):
        return hash((self.domain.labels, self.codomain.labels))

    def entries(self):
        """Yield (row, col, scalar) triples sorted column-major."""
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                yield i, j, c

    def is_identity(self) -> bool:
        return (self.domain == self.codomain
                and all(col.coeffs == {i: self.domain.field.one}
                        for i, col in enumerate(self.columns)))


# -- tensor products ---------------------------------------------------------

def tensor_space(a: BasedSpace, b: BasedSpace) -> BasedSpace:
    """Tensor product space with basis pairs in row-major order:
    (a_0,b_0), (a_0,b_1), ..., (a_1,b_0), ...  All higher layers rely on
    this fixed order."""
    if a.field != b.field:
        raise FieldMismatch("tensor factors over different fields")
    labels = tuple((la, lb) for la in a.labels for lb in b.labels)
    return BasedSpace(labels, a.field)


def tensor_index(i: int, j: int, dim_b: int) -> int:
    return i * dim_b + j


def tensor_split(idx: int, dim_b: int) -> tuple[int, int]:
    return divmod(idx, dim_b)


def tensor_elem(space_ab: BasedSpace, u: Element, v: Element) -> Element:
    """u ⊗ v inside a prebuilt tensor space."""
    field = space_ab.field
    dim_b = v.space.dim
    out = {}
    for i, ci in u.coeffs.items():
        for j, cj in v.coeffs.items():
            out[tensor_index(i, j, dim_b)] = field.mul(ci, cj)
    return Element(space_ab, out, _canonical=True)


def kron(f: LinearOp, g: LinearOp) -> LinearOp:
    """Kronecker product: (f ⊗ g)(a ⊗ b) = f(a) ⊗ g(b) on all basis pairs."""
    dom = tensor_space(f.domain, g.domain)
    cod = tensor_space(f.codomain, g.codomain)
    cols = []
    for i in range(f.domain.dim):
        fi = f.columns[i]
        for j in range(g.domain.dim):
            cols.append(tensor_elem(cod, fi, g.columns[j]))
    return LinearOp(dom, cod, cols)


def flip_tensor(space_ab: BasedSpace, space_ba: BasedSpace,
                elem: Element, dim_b: int) -> Element:
    """Send a ⊗ b to b ⊗ a."""
    dim_a = space_ab.dim // dim_b
    out = {}
    for idx, c in elem.coeffs.items():
        i, j = tensor_split(idx, dim_b)
        out[tensor_index(j, i, dim_a)] = c
    return Element(space_ba, out, _canonical=True)


# -- exact solving ------------------------------------------------------------

def _eliminate(rows: list[dict], ncols: int, field: Field) -> list[tuple[int, int]]:
    """In-place Gauss-Jordan on sparse rows (dicts col -> scalar).

    Pivots are chosen as the first row with a nonzero entry in the first
    unsolved column (exact arithmetic needs no magnitude heuristics).
    Columns >= ncols are treated as augmentation and never pivoted.
    Returns the list of (row, col) pivots.
    """
    pivots: list[tuple[int, int]] = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        pivot_row = -1
        for k in range(r, nrows):
            if rows[k].get(col, 0) != 0:
                pivot_row = k
                break
        if pivot_row < 0:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = {c: field.mul(inv, v) for c, v in rows[r].items()}
        prow = rows[r]
        for k in range(nrows):
            if k == r:
                continue
            factor = rows[k].get(col, 0)
            if factor == 0:
                continue
            row_k = rows[k]
            for c, v in prow.items():
                nv = field.sub(row_k.get(c, 0), field.mul(factor, v))
                if nv == 0:
                    row_k.pop(c, None)
                else:
                    row_k[c] = nv
        pivots.append((r, col))
        r += 1
        if r == nrows:
            break
    return pivots


def solve(a: LinearOp, b: Element) -> Element:
    """Solve a(x) = b exactly.

    Raises ``NoSolution`` for inconsistent systems and
    ``NonUniqueSolution`` (reporting the nullity) for underdetermined ones.
    """
    if b.space != a.codomain:
        raise DimensionMismatch("right-hand side not in the codomain")
    ncols = a.domain.dim
    aug = ncols
    rows: list[dict] = [dict() for _ in range(a.codomain.dim)]
    for i, j, c in a.entries():
        rows[i][j] = c
    for i, c in b.coeffs.items():
        rows[i][aug] = c
    pivots = _eliminate(rows, ncols, a.domain.field)
    pivot_rows = {r for r, _ in pivots}
    for r, row in enumerate(rows):
        if r not in pivot_rows and row.get(aug, 0) != 0:
            raise NoSolution("inconsistent linear system")
    nullity = ncols - len(pivots)
    if nullity > 0:
        raise NonUniqueSolution("underdetermined linear system", nullity)
    coeffs = {}
    for r, col in pivots:
        v = rows[r].get(aug, 0)
        if v != 0:
            coeffs[col] = v
    return Element(a.domain, coeffs, _canonical=True)


def invert(f: LinearOp) -> LinearOp:
    """Exact two-sided inverse of a square map; ``SingularMap`` if rank-deficient."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise DimensionMismatch("only square maps can be inverted")
    field = f.domain.field
    rows: list[dict] = [dict() for _ in range(n)]
    for i, j, c in f.entries():
        rows[i][j] = c
    for i in range(n):
        rows[i][n + i] = field.one
    pivots = _eliminate(rows, n, field)
    if len(pivots) < n:
        raise SingularMap(f"map has rank {len(pivots)} < {n}")
    # After full elimination row r has pivot 1 in column pivots[r][1];
    # the augmented half of that row is row pivots[r][1] of the inverse.
    inv_rows: list[dict] = [dict() for _ in range(n)]
    for r, col in pivots:
        inv_rows[col] = {c - n: v for c, v in rows[r].items() if c >= n}
    cols = []
    for j in range(n):
        coeffs = {i: inv_rows[i][j] for i in range(n) if j in inv_rows[i]}
        cols.append(Element(f.domain, coeffs, _canonical=True))
    return LinearOp(f.codomain, f.domain, cols)


def rank(f: LinearOp) -> int:
    rows: list[dict] = [dict() for _ in range(f.codomain.dim)]
    for i, j, c in f.entries():
        rows[i][j] = c
    return len(_eliminate(rows, f.domain.dim, f.domain.field))

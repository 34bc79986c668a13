"""
Exact linear algebra substrate
==============================

Everything in hopfkit is computed over exact scalars: arbitrary-precision
rationals or a prime field F_p.  This demo shows the based spaces, sparse
elements, tensor products and the exact solver.
"""

from fractions import Fraction

from hopfkit.linalg import (BasedSpace, Element, Field, LinearOp, invert,
                            kron, solve, tensor_space)

# A rational 3-dimensional space with labelled basis.
V = BasedSpace(("x", "y", "z"))
v = Element(V, {0: Fraction(1, 3), 2: Fraction(-2)})
print("element:", v)

# Tensor products use a fixed row-major basis order that every higher
# layer relies on.
W = BasedSpace(("u", "w"))
VW = tensor_space(V, W)
print("tensor basis:", VW.labels)

# Kronecker products act factor-wise.
f = LinearOp(V, V, [V.basis(1), V.basis(2), V.basis(0)])   # cyclic shift
g = LinearOp.identity(W)
print("kron(f, id) column for (x,u):", kron(f, g).columns[0])

# Solving is exact: no pivot heuristics, no tolerance.
diag = LinearOp(W, W, [Element(W, {0: Fraction(2)}),
                       Element(W, {1: Fraction(3)})])
b = Element(W, {0: Fraction(1), 1: Fraction(1)})
print("solve(diag(2,3), (1,1)) =", solve(diag, b))
print("invert(shift) column 0:", invert(f).columns[0])

# The same code runs over a prime field.
F7 = Field(7)
V7 = BasedSpace(("x", "y"), F7)
u = Element(V7, {0: 3, 1: 5})
print("over F_7:", u, "scaled by 5:", u.scale(5))

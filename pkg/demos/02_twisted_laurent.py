"""The twisted Laurent algebra: exact monomial arithmetic.

Generators x1, x2 with x1 x2 = q x2 x1; monomials are kept in normal
order and every product is exact.
"""

from qtorus import NumberField
from qtorus.torus import QMatrix, TwistedLaurentElement

Z = NumberField.cyclotomic(3)
zeta = Z.gen()
Q = QMatrix(Z, [[1, zeta], [zeta.inverse(), 1]])

x1 = TwistedLaurentElement.generator(Q, 0)
x2 = TwistedLaurentElement.generator(Q, 1)

print("x2 * x1          =", x2 * x1)
print("(x1 + x2)^2      =", (x1 + x2) ** 2)
print("commutator       =", x1.commutator(x2))

# The pairing controls commutation of arbitrary monomials.
m, k = (2, 1), (1, 1)
xm = TwistedLaurentElement.monomial(Q, m)
xk = TwistedLaurentElement.monomial(Q, k)
print("Q(m, k)          =", Q.bihom(m, k))
print("x^m x^k == Q(m,k) x^k x^m:", xm * xk == (xk * xm) * Q.bihom(m, k))

# Monomials are invertible, general elements are not.
w = TwistedLaurentElement.monomial(Q, (1, 1))
print("w^-1             =", w.inverse())
print("w * w^-1         =", w * w.inverse())

# The diagonal coaction read as a grading: every element splits into
# homogeneous components tagged by their exponent.
a = x1 + 2 * x2 + x1 * x2
print("grading of a     =")
for deg, comp in sorted(a.grading().items()):
    print("   degree", deg, "->", comp)

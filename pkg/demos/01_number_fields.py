"""Tour of exact number field arithmetic.

Everything below is computed with exact rationals: no floats appear
anywhere in the library.  Run as `python demos/01_number_fields.py`.
"""

from qtorus import NumberField, find_normal_basis, norm, trace, unit_order
from qtorus.descent import split_cocycle

# ---------------------------------------------------------------------------
# The real quadratic field Q(sqrt(5)).

F = NumberField.quadratic(5)
alpha = F.gen()
print("field:", F)
print("(1 + a)(1 - a) =", (1 + alpha) * (1 - alpha))
print("(1 + a)^-1     =", (1 + alpha).inverse())

# The fundamental-unit square 9 + 4a has norm one, so conjugation inverts it.
q = 9 + 4 * alpha
sigma = F.galois.elements[1]
print("q = 9 + 4a, sigma(q) =", sigma(q))
print("norm(q), trace(q) =", norm(q), trace(q))
print("sigma(q) * q =", sigma(q) * q)
print("order of q up to 100:", unit_order(q, 100))

# ---------------------------------------------------------------------------
# The third cyclotomic field, with zeta^2 reduced against 1 + t + t^2.

Z = NumberField.cyclotomic(3)
zeta = Z.gen()
print("\nfield:", Z)
print("zeta^2 =", zeta * zeta)
print("norm(zeta), trace(zeta) =", norm(zeta), trace(zeta))
print("order of zeta:", unit_order(zeta, 10))

# A normal basis generator: its conjugates span the field over Q.
nb = find_normal_basis(Z)
print("normal basis generator:", nb)

# ---------------------------------------------------------------------------
# Splitting a norm-one cocycle: find gamma with sigma(gamma)/gamma = q.

gamma = split_cocycle(F.galois, {0: F.one(), 1: q})
print("\nsplitting unit for q:", gamma)
print("sigma(gamma)/gamma =", sigma(gamma) / gamma)

"""Galois descent: the rational form of a twisted Laurent algebra.

The Galois group of Q(sqrt(5)) swaps the two generators while
conjugating scalars.  The fixed ring is spanned, orbit by orbit, by
exact rational combinations; the classic generators u = (x1 + x2)/2 and
v = (x1 - x2)/(2a) appear in the degree-one orbit.
"""

from qtorus import NumberField
from qtorus.descent import completeness_sweep, invariant_basis, orbit
from qtorus.galois_action import build_order2_action, validate_action
from qtorus.torus import QMatrix, TwistedLaurentElement

F = NumberField.quadratic(5)
alpha = F.gen()
q = 9 + 4 * alpha  # norm one, as the swap compatibility demands
Q = QMatrix(F, [[1, q], [q.inverse(), 1]])
action = build_order2_action(Q, F.galois, [{"swap": [0, 1]}])

print(validate_action(action, degree_bound=2, samples=20).render_text())

data = orbit(action, (1, 0))
print("\norbit of (1,0):", data.orbit, " stabilizer size:", len(data.stabilizer))

ib = invariant_basis(action, (1, 0))
print("invariant basis of the orbit:")
for elt in ib.elements:
    print("  ", elt)

x1 = TwistedLaurentElement.generator(Q, 0)
x2 = TwistedLaurentElement.generator(Q, 1)
u = (x1 + x2) / 2
v = (x1 - x2) / (2 * alpha)
print("u fixed:", action.is_fixed(u), " v fixed:", action.is_fixed(v))

bases, failures = completeness_sweep(action, bound=3)
print("\ncompleteness sweep |m| <= 3:", "no failures" if not failures else failures)
print("orbits found:", len(bases))

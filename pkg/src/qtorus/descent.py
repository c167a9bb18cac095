"""Galois descent: rational forms of twisted Laurent algebras and centers.

The fixed subalgebra of a semilinear action is computed orbitwise.  For
the orbit of a monomial x^m the action permutes the L-lines spanned by
the orbit monomials (with unit corrections), so the fixed points form a
Q-space whose dimension equals the orbit size; they are found by an
exact kernel computation over Q on the |orbit| * [L:Q] dimensional
coefficient space and canonicalized by reduced row echelon form under
the degree-lexicographic term order.

A cocycle of units over a subgroup of the Galois group splits through a
nonzero twisted sum b = sum_h gamma_h h(c): the splitting unit is b^{-1}.
Linear independence of automorphisms guarantees some basis candidate c
gives b != 0, so the deterministic search terminates in characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import _linalg
from .errors import OrderUndeclared, SearchExhausted
from .numfield import unit_order
from .torus import TwistedLaurentElement, term_key
from .zlattice import Lattice, kernel_mod

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class OrbitData:
    representative: tuple
    orbit: tuple
    stabilizer: tuple  # group element indices fixing the representative

    def __len__(self):
        return len(self.orbit)


@dataclass(frozen=True)
class InvariantBasis:
    orbit: OrbitData
    elements: tuple


def orbit(action, m):
    """The Galois orbit of an exponent vector, with its stabilizer."""
    m = tuple(int(x) for x in m)
    seen = []
    stab = []
    for idx in range(len(action.galois)):
        im = action.module.apply(idx, m)
        if im == m:
            stab.append(idx)
        if im not in seen:
            seen.append(im)
    data = OrbitData(m, tuple(seen), tuple(stab))
    assert len(data.orbit) * len(data.stabilizer) == len(action.galois)
    return data


def _fixed_point_basis(action, labels, image_of):
    """Q-basis of the fixed points of a units-permutation semilinear action.

    ``labels`` lists the permuted lines in canonical order; ``image_of``
    maps (sigma_idx, label) to (unit, label').  Returns a list of
    {label: FieldElement} coefficient dictionaries, RREF-canonical.
    """
    field = action.qmatrix.field
    d = field.degree
    pos = {lab: p for p, lab in enumerate(labels)}
    dim = len(labels) * d
    powers = field.basis()

    stacked = []
    for idx in range(1, len(action.galois)):
        sig = action.sigma(idx)
        cols = []
        for lab in labels:
            unit, lab2 = image_of(idx, lab)
            p2 = pos[lab2]
            for j in range(d):
                img = sig(powers[j]) * unit
                col = [_F0] * dim
                for j2 in range(d):
                    col[p2 * d + j2] = img.coeffs[j2]
                cols.append(col)
        for r in range(dim):
            row = [cols[c][r] for c in range(dim)]
            row[r] -= _F1
            stacked.append(row)
    if not stacked:
        basis_vecs = [[_F1 if i == j else _F0 for j in range(dim)] for i in range(dim)]
    else:
        basis_vecs = _linalg.nullspace(stacked, dim, _F0, _F1)
    reduced, _ = _linalg.rref(basis_vecs)
    out = []
    for vec in reduced:
        if not any(vec):
            continue
        coeffs = {}
        for p, lab in enumerate(labels):
            c = field.element(vec[p * d : (p + 1) * d])
            if c:
                coeffs[lab] = c
        out.append(coeffs)
    return out


def invariant_basis(action, m):
    """Q-basis of the Galois-fixed points of the L-span of the orbit of x^m.

    The output is verified on the spot: the count equals the orbit size,
    every element is fixed by the whole group, and the L-span of the
    output still contains each orbit monomial.
    """
    data = orbit(action, m)
    labels = sorted(data.orbit, key=term_key)

    def image_of(idx, lab):
        exp, coeff = action.monomial_image(idx, lab)
        return coeff, exp

    vecs = _fixed_point_basis(action, labels, image_of)
    elements = tuple(TwistedLaurentElement(action.qmatrix, dict(v)) for v in vecs)
    assert len(elements) == len(data.orbit), "descent dimension mismatch"
    for elt in elements:
        assert action.is_fixed(elt)
    rows = [[elt.terms.get(lab, action.qmatrix.field.zero()) for elt in elements] for lab in labels]
    assert _linalg.rank(rows) == len(labels), "orbit monomials not recovered over L"
    return InvariantBasis(data, elements)


def span_contains(basis_elements, element):
    """Whether ``element`` is an L-linear combination of the basis elements."""
    labels = set()
    for b in basis_elements:
        labels.update(b.terms)
    labels.update(element.terms)
    labels = sorted(labels, key=term_key)
    if not basis_elements:
        return element.is_zero()
    field = basis_elements[0].q.field
    rows = [[b.terms.get(lab, field.zero()) for b in basis_elements] for lab in labels]
    rhs = [element.terms.get(lab, field.zero()) for lab in labels]
    return _linalg.solve(rows, rhs) is not None


def completeness_sweep(action, bound=3):
    """Check that every monomial of max-norm at most ``bound`` descends.

    Returns (orbit bases by representative, list of failing exponents).
    """
    q = action.qmatrix
    bases = {}
    failures = []
    for m in product(range(-bound, bound + 1), repeat=q.n):
        data = orbit(action, m)
        rep = min(data.orbit, key=term_key)
        ib = bases.get(rep)
        if ib is None:
            ib = invariant_basis(action, rep)
            bases[rep] = ib
        if not span_contains(ib.elements, TwistedLaurentElement.monomial(q, m)):
            failures.append(m)
    return bases, failures


# ---------------------------------------------------------------------------
# Hilbert 90


def split_cocycle(galois, gammas, subgroup=None):
    """Split a unit cocycle over a subgroup H: find gamma with

        gamma_h = h(gamma) * gamma^{-1}   for every h in H.

    ``gammas`` maps group element indices to units; the cocycle condition
    is a precondition and is verified exhaustively first.
    """
    H = tuple(subgroup) if subgroup is not None else tuple(range(len(galois)))
    if galois.identity_index not in H:
        raise ValueError("subgroup must contain the identity")
    for i in H:
        for j in H:
            if galois.compose_idx(i, j) not in H:
                raise ValueError("indices are not closed under composition")
    field = galois.field
    for i in H:
        gi = field.element(gammas[i])
        if not gi:
            raise ValueError("cocycle values must be units")
        for j in H:
            k = galois.compose_idx(i, j)
            lhs = field.element(gammas[k])
            rhs = gi * galois.elements[i](field.element(gammas[j]))
            if lhs != rhs:
                raise ValueError(f"cocycle condition fails at ({i}, {j})")

    candidates = list(field.basis())
    acc = field.zero()
    for b in field.basis():
        acc = acc + b
        candidates.append(acc)
    for c in candidates:
        b = field.zero()
        for h in H:
            b = b + field.element(gammas[h]) * galois.elements[h](c)
        if b:
            gamma = b.inverse()
            for h in H:
                assert field.element(gammas[h]) == galois.elements[h](gamma) * gamma.inverse()
            return gamma
    raise SearchExhausted("no candidate produced a nonzero twisted sum")


# ---------------------------------------------------------------------------
# center


def root_of_unity_data(Q):
    """(l, epsilon, S) for Q, synthesized from declared orders if needed.

    When the matrix only carries finite declared orders, the subgroup of
    L* generated by the entries is finite, hence cyclic; its order is the
    lcm l of the entry orders.  A generator is found by closing the entry
    set under products and exponents are recovered by discrete logs.
    """
    if Q.root_of_unity is not None:
        return Q.root_of_unity
    if Q.declared_orders is None:
        raise OrderUndeclared(
            "entry orders are unknown; declare them or give the root-of-unity form"
        )
    l = 1
    for row in Q.declared_orders:
        for o in row:
            l = l * o // gcd(l, o)
    elems = {}
    for row in Q.entries:
        for x in row:
            elems[x.coeffs] = x
    while True:
        new = {}
        vals = list(elems.values())
        for a in vals:
            for b in vals:
                p = a * b
                if p.coeffs not in elems and p.coeffs not in new:
                    new[p.coeffs] = p
        if not new:
            break
        elems.update(new)
        if len(elems) > l:
            raise OrderUndeclared("entry group larger than the declared lcm of orders")
    eps = None
    for key in sorted(elems):
        if unit_order(elems[key], l) == l:
            eps = elems[key]
            break
    assert eps is not None, "finite subgroup of a field without a generator"
    dlog = {}
    power = Q.field.one()
    for e in range(l):
        dlog[power.coeffs] = e
        power = power * eps
    n = Q.n
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s = dlog[Q.entries[i][j].coeffs]
            if s > l // 2:
                s -= l
            S[i][j], S[j][i] = s, -s
    return l, eps, tuple(tuple(row) for row in S)


def central_lattice(Q):
    """The sublattice of exponents whose monomials are central.

    Computed as the mod-l kernel of the exponent matrix and re-verified
    against the actual matrix entries.
    """
    l, _, S = root_of_unity_data(Q)
    lat = kernel_mod([list(r) for r in S], l)
    one = Q.field.one()
    for row in lat.basis:
        for j in range(Q.n):
            unit = tuple(1 if t == j else 0 for t in range(Q.n))
            assert Q.bihom(row, unit) == one, "kernel vector fails the pairing check"
    return lat


def l_center_lattice(Q):
    l, _, _ = root_of_unity_data(Q)
    return Lattice.scaled_standard(Q.n, l)


def is_central(a):
    """Exact centrality check against all generators and their inverses."""
    Q = a.q
    for i in range(Q.n):
        for power in (1, -1):
            g = TwistedLaurentElement.generator(Q, i, power)
            comm = a.commutator(g)
            if comm:
                return False, {"generator": i, "power": power, "commutator": comm}
    return True, None


def center_generators(action, l_center=False):
    """Invariant bases spanning the Galois orbits of a central generating set.

    The generating set is the canonical basis of the central lattice (or
    of l * Z^n for the l-center).  The lattice is checked to be stable
    under the module action, and every output element is checked central.
    """
    Q = action.qmatrix
    lat = l_center_lattice(Q) if l_center else central_lattice(Q)
    for idx in range(len(action.galois)):
        for row in lat.basis:
            if action.module.apply(idx, row) not in lat:
                raise ValueError("central lattice is not stable under the action")
    out = []
    seen = set()
    for row in lat.basis:
        data = orbit(action, row)
        key = frozenset(data.orbit)
        if key in seen:
            continue
        seen.add(key)
        ib = invariant_basis(action, row)
        for elt in ib.elements:
            ok, witness = is_central(elt)
            assert ok, f"non-central invariant generator: {witness}"
        out.append(ib)
    return out


def commutant_monomial_basis(qmatrix, bound):
    """Basis of the commutant of the generators on a bounded exponent box.

    Solves [z, x_j] = 0 for all j exactly over L, where z ranges over the
    span of the monomials with |m|_inf <= bound.  Returns a list of
    elements (each a basis vector of the solution space).  Complements
    the lattice computation of the center with an honest linear solve.
    """
    field = qmatrix.field
    n = qmatrix.n
    labels = sorted(product(range(-bound, bound + 1), repeat=n), key=term_key)
    pos = {m: i for i, m in enumerate(labels)}
    zero, one = field.zero(), field.one()
    rows = []
    for j in range(n):
        ej = tuple(1 if t == j else 0 for t in range(n))
        targets = {}
        for m in labels:
            c = qmatrix.cocycle(m, ej) - qmatrix.cocycle(ej, m)
            if c:
                t = tuple(a + b for a, b in zip(m, ej))
                targets.setdefault(t, []).append((m, c))
        for t in sorted(targets, key=term_key):
            row = [zero] * len(labels)
            for m, c in targets[t]:
                row[pos[m]] = c
            rows.append(row)
    if rows:
        vecs = _linalg.nullspace(rows, len(labels), zero, one)
    else:
        vecs = [[one if i == j else zero for j in range(len(labels))] for i in range(len(labels))]
    out = []
    for vec in vecs:
        terms = {labels[i]: c for i, c in enumerate(vec) if c}
        out.append(TwistedLaurentElement(qmatrix, terms))
    return out


def central_elements_up_to(qmatrix, bound):
    """All exponents m with |m|_inf <= bound whose monomials are central,

    found by the defining commutation identity (independent of any
    lattice computation, so usable as an oracle against it).
    """
    out = []
    for m in product(range(-bound, bound + 1), repeat=qmatrix.n):
        good = True
        for j in range(qmatrix.n):
            unit = tuple(1 if t == j else 0 for t in range(qmatrix.n))
            if qmatrix.bihom(m, unit) != qmatrix.field.one():
                good = False
                break
        if good:
            out.append(m)
    return out

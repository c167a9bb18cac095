"""The acceptance suite: one machine-checked criterion per check line.

Every criterion is exact (zero tolerance); randomness is fully driven by
the seed, so two runs with the same seed produce byte-identical reports.
The functions return (ok, details) so both the CLI selftest command and
the test suite can drive them.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import product
from math import gcd

from .descent import (
    central_lattice,
    center_generators,
    commutant_monomial_basis,
    completeness_sweep,
    is_central,
    l_center_lattice,
    span_contains,
    split_cocycle,
)
from .galois_action import build_order2_action, build_trivial_action
from .numfield import NumberField
from .report import Report
from .specialization import (
    CentralCharacter,
    catalog_case,
    crossed_product_witness,
    rational_form,
    specialize,
)
from .torus import QMatrix, TwistedLaurentElement
from .zlattice import (
    alternating_normal_form,
    det_bareiss,
    mat_mul,
    smith_normal_form,
    transpose,
)


def _eq6_fields():
    sqrt5 = NumberField.quadratic(5)
    zeta3 = NumberField.cyclotomic(3)
    return ((zeta3, zeta3.gen()), (sqrt5, 9 + 4 * sqrt5.gen()))


def _random_qmatrix(field, unit, rng, n):
    entries = [[field.one() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = rng.randint(-3, 3)
            entries[i][j] = unit ** e
            entries[j][i] = unit ** (-e)
    return QMatrix(field, entries)


def _rand_exp(rng, n, span=5):
    return tuple(rng.randint(-span, span) for _ in range(n))


def criterion_commutation(seed, pairs=200):
    """x^m x^k == Q(m,k) x^k x^m for seeded random pairs, n in {2,3,4}."""
    rng = random.Random(seed)
    checked = 0
    for field, unit in _eq6_fields():
        for n in (2, 3, 4):
            Q = _random_qmatrix(field, unit, rng, n)
            for _ in range(pairs):
                m, k = _rand_exp(rng, n), _rand_exp(rng, n)
                xm = TwistedLaurentElement.monomial(Q, m)
                xk = TwistedLaurentElement.monomial(Q, k)
                if xm * xk != (xk * xm) * Q.bihom(m, k):
                    return False, {"field": field.kind, "n": n, "m": m, "k": k}
                checked += 1
    return True, {"pairs_checked": checked}


def criterion_associativity(seed, triples=200):
    """Exact associativity on random 3-term elements and the two-cocycle

    identity on random exponent triples."""
    rng = random.Random(seed)

    def rand_element(Q):
        out = TwistedLaurentElement.zero(Q)
        for _ in range(3):
            c = Q.field.element([rng.randint(-4, 4) for _ in range(Q.field.degree)])
            out = out + TwistedLaurentElement.monomial(Q, _rand_exp(rng, Q.n), c)
        return out

    configs = [
        _random_qmatrix(field, unit, rng, n)
        for field, unit in _eq6_fields()
        for n in (2, 3, 4)
    ]
    count = 0
    for t in range(triples):
        Q = configs[t % len(configs)]
        a, b, c = rand_element(Q), rand_element(Q), rand_element(Q)
        if (a * b) * c != a * (b * c):
            return False, {"kind": "associativity", "index": t}
        n = Q.n
        m, k, r = _rand_exp(rng, n), _rand_exp(rng, n), _rand_exp(rng, n)
        mk = tuple(x + y for x, y in zip(m, k))
        kr = tuple(x + y for x, y in zip(k, r))
        if Q.cocycle(m, k) * Q.cocycle(mk, r) != Q.cocycle(k, r) * Q.cocycle(m, kr):
            return False, {"kind": "cocycle", "index": t}
        count += 1
    return True, {"triples_checked": count}


def _standard_l3_action():
    zeta3 = NumberField.cyclotomic(3)
    Q = QMatrix.from_root_of_unity(zeta3, 3, zeta3.gen(), [[0, 1], [-1, 0]])
    return build_order2_action(Q, zeta3.galois, [{"swap": [0, 1]}])


def criterion_center(seed=0):
    """Central lattice vs brute force, generator centrality, and the

    bounded-degree commutant containment for the standard l = 3 torus."""
    action = _standard_l3_action()
    Q = action.qmatrix
    lat = central_lattice(Q)
    if lat.basis != ((3, 0), (0, 3)):
        return False, {"stage": "lattice", "basis": lat.basis}
    # brute force enumeration of residues mod 3 against S
    S = Q.root_of_unity[2]
    expected = set()
    for m in product(range(3), repeat=2):
        image = [sum(a * x for a, x in zip(row, m)) % 3 for row in S]
        if not any(image):
            expected.add(m)
    got = {m for m in product(range(3), repeat=2) if tuple(m) in lat}
    if got != expected:
        return False, {"stage": "bruteforce", "got": sorted(got)}

    gens = center_generators(action)
    for ib in gens:
        for elt in ib.elements:
            ok, witness = is_central(elt)
            if not ok:
                return False, {"stage": "generator-centrality"}

    # commutant at degree <= 2 by exact linear solve: only scalars commute
    comm2 = commutant_monomial_basis(Q, 2)
    for elt in comm2:
        if set(elt.terms) != {(0, 0)}:
            return False, {"stage": "commutant-2", "terms": sorted(elt.terms)}

    # at degree <= 3 the commutant is spanned by lattice monomials, and the
    # degree-3 ones lie in the span of the emitted generators
    comm3 = commutant_monomial_basis(Q, 3)
    gen_elements = [e for ib in gens for e in ib.elements]
    for elt in comm3:
        for m in elt.terms:
            if m not in lat:
                return False, {"stage": "commutant-3", "exponent": m}
    for m in ((3, 0), (0, 3)):
        if not span_contains(gen_elements, TwistedLaurentElement.monomial(Q, m)):
            return False, {"stage": "span", "exponent": m}
    return True, {"commutant_dim_degree2": len(comm2), "commutant_dim_degree3": len(comm3)}


def criterion_descent_completeness(seed=0, bound=3):
    """Every monomial with |m|_inf <= 3 descends for the norm-one swap form."""
    sqrt5 = NumberField.quadratic(5)
    q = 9 + 4 * sqrt5.gen()
    Q = QMatrix(sqrt5, [[1, q], [q.inverse(), 1]])
    action = build_order2_action(Q, sqrt5.galois, [{"swap": [0, 1]}])
    bases, failures = completeness_sweep(action, bound=bound)
    if failures:
        return False, {"failures": failures[:3]}
    for rep, ib in bases.items():
        if len(ib.elements) != len(ib.orbit.orbit):
            return False, {"stage": "count", "orbit": rep}
    return True, {"orbits": len(bases)}


def criterion_hilbert90(seed, samples=20):
    """Random norm-one cocycles split exactly; includes the worked unit."""
    rng = random.Random(seed)
    sqrt5 = NumberField.quadratic(5)
    zeta3 = NumberField.cyclotomic(3)
    alpha = sqrt5.gen()
    golden = split_cocycle(sqrt5.galois, {0: sqrt5.one(), 1: 9 + 4 * alpha})
    if golden != (10 + 4 * alpha).inverse():
        return False, {"stage": "golden", "gamma": repr(golden)}
    for field in (sqrt5, zeta3):
        sigma = field.galois.elements[1]
        done = 0
        while done < samples:
            c = field.element([rng.randint(-9, 9) for _ in range(field.degree)])
            if not c:
                continue
            val = sigma(c) / c
            gamma = split_cocycle(field.galois, {0: field.one(), 1: val})
            if sigma(gamma) * gamma.inverse() != val:
                return False, {"stage": "identity", "field": field.kind}
            done += 1
    return True, {"samples_per_field": samples}


def criterion_catalog(seed=0):
    """All stated relations of the four rank-2 cases on the fixed corpus."""
    corpus = [
        (2, 5, [9, 4]),
        (3, 5, [7]),
        (4, -3, [Fraction(-1, 2), Fraction(1, 2)]),
        (4, 5, [-1]),
    ]
    for case, D, q in corpus:
        rep = catalog_case(case, D, q)
        if not rep.ok:
            return False, {"case": case, "D": D, "failed": [c.name for c in rep.failures()]}
    return True, {"cases": len(corpus)}


def _prop2_setup(l, n, rng):
    if (l, n) == (2, 2):
        field = NumberField.quadratic(5)
        eps = field.from_rational(-1)
        s = rng.randint(0, 1)
        S = [[0, s], [-s, 0]]
        Q = QMatrix.from_root_of_unity(field, 2, eps, S)
        action = build_trivial_action(Q, field.galois)
        sign_coords = ()
    elif (l, n) == (3, 2):
        field = NumberField.cyclotomic(3)
        s = rng.randint(-3, 3)
        S = [[0, s], [-s, 0]]
        Q = QMatrix.from_root_of_unity(field, 3, field.gen(), S)
        action = build_order2_action(Q, field.galois, [{"swap": [0, 1]}])
        sign_coords = ()
    elif (l, n) == (3, 3):
        field = NumberField.cyclotomic(3)
        s12, s13 = rng.randint(-3, 3), rng.randint(-3, 3)
        S = [[0, s12, s13], [-s12, 0, s13], [-s13, -s13, 0]]
        Q = QMatrix.from_root_of_unity(field, 3, field.gen(), S)
        action = build_order2_action(Q, field.galois, [{"swap": [0, 1]}, {"sign": -1}])
        sign_coords = (2,)
    elif (l, n) == (4, 2):
        field = NumberField.cyclotomic(4)
        s = rng.randint(-4, 4)
        S = [[0, s], [-s, 0]]
        Q = QMatrix.from_root_of_unity(field, 4, field.gen(), S)
        action = build_order2_action(Q, field.galois, [{"swap": [0, 1]}])
        sign_coords = ()
    else:
        raise ValueError((l, n))
    return field, Q, action, S, sign_coords


def _equivariant_values(action, lattice, sign_coords, rng):
    """Rational unit values compatible with the module action."""
    n = lattice.n
    values = [None] * len(lattice.basis)
    shared = Fraction(rng.choice([2, 3, 5]))
    for i, row in enumerate(lattice.basis):
        support = [j for j in range(n) if row[j]]
        if any(j in sign_coords for j in support):
            values[i] = Fraction(rng.choice([1, -1]))
        else:
            values[i] = shared
    return values


def criterion_specializations(seed):
    """Dimension, center and radical checks for seeded specializations."""
    rng = random.Random(seed)
    details = {}
    for l, n in ((2, 2), (3, 2), (3, 3), (4, 2)):
        field, Q, action, S, sign_coords = _prop2_setup(l, n, rng)
        U, ks, zeros = alternating_normal_form(S)
        primitive = zeros == 0 and all(gcd(k, l) == 1 for k in ks)

        lchar = CentralCharacter.for_l_center(
            Q, _equivariant_values(action, l_center_lattice(Q), sign_coords, rng)
        )
        alg_l = specialize(action, lchar, which="l_center")
        if alg_l.dim != l ** n:
            return False, {"config": (l, n), "stage": "l-center-dim", "dim": alg_l.dim}
        if alg_l.radical_dim() != 0:
            return False, {"config": (l, n), "stage": "l-center-radical"}
        alg_lk, _ = rational_form(action, lchar, alg_l)
        if alg_lk.dim != l ** n:
            return False, {"config": (l, n), "stage": "l-center-rational-dim"}

        full_lat = central_lattice(Q)
        fchar = CentralCharacter(
            Q, full_lat, _equivariant_values(action, full_lat, sign_coords, rng)
        )
        alg_f = specialize(action, fchar, which="full_center")
        if alg_f.dim != full_lat.index():
            return False, {"config": (l, n), "stage": "full-center-dim"}
        if alg_f.center_dim() != 1:
            return False, {"config": (l, n), "stage": "central-simplicity"}
        if alg_f.radical_dim() != 0:
            return False, {"config": (l, n), "stage": "semisimplicity"}
        # the rational form needs equivariant values; the diagonal-lattice
        # configurations always admit them, a mixed-support lattice basis
        # (possible for n = 3) may not fit the simple value rule, in which
        # case the scalar-extension check on the l-center form above stands
        equivariant, _ = fchar.is_equivariant(action)
        if not equivariant and n != 3:
            return False, {"config": (l, n), "stage": "full-center-equivariance"}
        if equivariant:
            alg_fk, _ = rational_form(action, fchar, alg_f)
            if alg_fk.dim != alg_f.dim:
                return False, {"config": (l, n), "stage": "tensor-dimension"}
        degrees = 1
        for k in ks:
            degrees *= (l // gcd(k, l)) ** 2
        if full_lat.index() != degrees * 1:
            return False, {"config": (l, n), "stage": "block-degree-index"}
        if primitive and alg_l.center_dim() != 1:
            return False, {"config": (l, n), "stage": "primitive-center"}
        details[f"l{l}n{n}"] = {
            "dim_l_center": alg_l.dim,
            "dim_full": alg_f.dim,
            "primitive": primitive,
        }
    return True, details


def criterion_alternating(seed, count=100):
    """Random antisymmetric reductions stay unimodular, exact, and match

    the Smith invariant pairing."""
    rng = random.Random(seed)
    for t in range(count):
        n = rng.randint(1, 6)
        S = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                S[i][j] = rng.randint(-10, 10)
                S[j][i] = -S[i][j]
        U, ks, zeros = alternating_normal_form(S)
        if abs(det_bareiss([list(r) for r in U])) != 1:
            return False, {"index": t, "stage": "unimodular"}
        got = mat_mul(mat_mul([list(r) for r in U], S), transpose([list(r) for r in U]))
        expect = [[0] * n for _ in range(n)]
        for b, k in enumerate(ks):
            expect[2 * b][2 * b + 1] = k
            expect[2 * b + 1][2 * b] = -k
        if got != expect:
            return False, {"index": t, "stage": "block-form"}
        for a, b in zip(ks, ks[1:]):
            if b % a:
                return False, {"index": t, "stage": "chain"}
        D, _, _ = smith_normal_form(S)
        smith_diag = sorted(D[i][i] for i in range(n))
        paired = sorted([k for k in ks for _ in range(2)] + [0] * zeros)
        if smith_diag != paired:
            return False, {"index": t, "stage": "smith-pairing"}
    return True, {"matrices_checked": count}


def criterion_witnesses(seed=0):
    """Order-2 witnesses at q = zeta3: inversion, central cube, commutation."""
    zeta3 = NumberField.cyclotomic(3)
    for case in (2, 4):
        rep = crossed_product_witness(case, zeta3, zeta3.gen())
        if not rep.ok:
            return False, {"case": case, "failed": [c.name for c in rep.failures()]}
        if rep.inputs.get("commutation_exponent") not in (1, -1):
            return False, {"case": case, "stage": "commutation"}
    return True, {"cases": [2, 4]}


CRITERIA = (
    ("c01-commutation-identity", criterion_commutation, True),
    ("c02-associativity-and-cocycle", criterion_associativity, True),
    ("c03-center-standard-torus", criterion_center, False),
    ("c04-descent-completeness", criterion_descent_completeness, False),
    ("c05-cocycle-splitting", criterion_hilbert90, True),
    ("c06-rank2-catalog", criterion_catalog, False),
    ("c07-specializations", criterion_specializations, True),
    ("c08-alternating-normal-form", criterion_alternating, True),
    ("c09-crossed-product-witnesses", criterion_witnesses, False),
)


def build_core_report(seed=0):
    rep = Report("selftest", inputs={"seed": seed})
    for name, func, takes_seed in CRITERIA:
        ok, details = func(seed) if takes_seed else func()
        rep.add(name, ok, details if not ok else None)
    return rep


def run_selftest(seed=0):
    """All criteria plus a reproducibility criterion comparing two runs."""
    rep = build_core_report(seed)
    again = build_core_report(seed)
    first = json.dumps(rep.to_dict(), sort_keys=True)
    second = json.dumps(again.to_dict(), sort_keys=True)
    rep.add("c10-deterministic-reports", first == second)
    return rep

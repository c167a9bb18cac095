import random

import pytest

from qtorus.errors import CompatibilityFailure
from qtorus.galois_action import (
    GammaCocycle,
    TorusModule,
    build_explicit_action,
    build_order2_action,
    build_permutation_action,
    build_trivial_action,
    validate_action,
)
from qtorus.numfield import NumberField
from qtorus.torus import QMatrix, TwistedLaurentElement


def q_plane(field, q):
    qinv = field.element(q).inverse()
    return QMatrix(field, [[1, q], [qinv, 1]])


@pytest.fixture
def sqrt5():
    return NumberField.quadratic(5)


@pytest.fixture
def unit5(sqrt5):
    return 9 + 4 * sqrt5.gen()


def swap_action(field, q):
    Q = q_plane(field, q)
    return build_order2_action(Q, field.galois, [{"swap": [0, 1]}])


def test_swap_accepts_norm_one_unit(sqrt5, unit5):
    action = swap_action(sqrt5, unit5)
    assert action.n == 2


def test_swap_rejects_non_unit(sqrt5):
    with pytest.raises(CompatibilityFailure) as err:
        swap_action(sqrt5, sqrt5.from_rational(2))
    assert err.value.witness is not None


def test_sign_action_accepts_norm_one_unit(sqrt5, unit5):
    Q = q_plane(sqrt5, unit5)
    action = build_order2_action(Q, sqrt5.galois, [{"sign": 1}, {"sign": -1}])
    x2 = TwistedLaurentElement.generator(Q, 1)
    assert action.apply(1, x2) == x2.inverse()


def test_trivial_action_requires_rational_q(sqrt5):
    Q = q_plane(sqrt5, sqrt5.from_rational(7))
    action = build_trivial_action(Q, sqrt5.galois)
    alpha = sqrt5.gen()
    elt = TwistedLaurentElement.monomial(Q, (2, -1), alpha)
    sigma_elt = action.apply(1, elt)
    assert sigma_elt == TwistedLaurentElement.monomial(Q, (2, -1), -alpha)
    with pytest.raises(CompatibilityFailure):
        build_trivial_action(q_plane(sqrt5, 9 + 4 * alpha), sqrt5.galois)


def test_swap_on_generators(sqrt5, unit5):
    action = swap_action(sqrt5, unit5)
    Q = action.qmatrix
    x1 = TwistedLaurentElement.generator(Q, 0)
    x2 = TwistedLaurentElement.generator(Q, 1)
    assert action.apply(1, x1) == x2
    assert action.apply(1, x2) == x1


def test_negation_action(sqrt5):
    Q = q_plane(sqrt5, sqrt5.from_rational(7))
    action = build_order2_action(Q, sqrt5.galois, [{"sign": -1}, {"sign": -1}])
    x1 = TwistedLaurentElement.generator(Q, 0)
    assert action.apply(1, x1) == x1.inverse()


def test_involution_on_monomials(sqrt5, unit5):
    action = swap_action(sqrt5, unit5)
    Q = action.qmatrix
    for m1 in range(-3, 4):
        for m2 in range(-3, 4):
            xm = TwistedLaurentElement.monomial(Q, (m1, m2))
            assert action.apply(1, action.apply(1, xm)) == xm


def test_corrupted_explicit_cocycle_rejected(sqrt5):
    # trivial module, gamma_sigma(e1) = alpha: the composite over sigma^2
    # picks up sigma(alpha)*alpha = -5 != 1
    alpha = sqrt5.gen()
    Q = q_plane(sqrt5, sqrt5.from_rational(7))
    one = sqrt5.one()
    with pytest.raises(CompatibilityFailure):
        build_explicit_action(
            Q,
            sqrt5.galois,
            [[[1, 0], [0, 1]], [[1, 0], [0, 1]]],
            [[one, one], [alpha, one]],
        )


def test_explicit_with_consistent_cocycle(sqrt5):
    # gamma_sigma(e1) = -1 is a genuine cocycle on the trivial module
    Q = q_plane(sqrt5, sqrt5.from_rational(7))
    one = sqrt5.one()
    action = build_explicit_action(
        Q,
        sqrt5.galois,
        [[[1, 0], [0, 1]], [[1, 0], [0, 1]]],
        [[one, one], [-one, one]],
    )
    x1 = TwistedLaurentElement.generator(Q, 0)
    assert action.apply(1, x1) == -x1
    rep = validate_action(action, degree_bound=2, samples=20)
    assert rep.ok


def test_permutation_eq9(sqrt5, unit5):
    # a swap given as a permutation module must satisfy the permuted-entry rule
    Q = q_plane(sqrt5, unit5)
    action = build_permutation_action(
        Q, sqrt5.galois, {0: (0, 1), 1: (1, 0)}
    )
    assert action.module.mats[1] == ((0, 1), (1, 0))
    with pytest.raises(CompatibilityFailure):
        build_permutation_action(
            q_plane(sqrt5, sqrt5.from_rational(2)), sqrt5.galois, {0: (0, 1), 1: (1, 0)}
        )


def test_semilinearity_and_multiplicativity(sqrt5, unit5):
    action = swap_action(sqrt5, unit5)
    Q = action.qmatrix
    rng = random.Random(0)
    alpha = sqrt5.gen()
    sigma = sqrt5.galois.elements[1]
    for _ in range(20):
        m = tuple(rng.randint(-3, 3) for _ in range(2))
        k = tuple(rng.randint(-3, 3) for _ in range(2))
        c = sqrt5.element([rng.randint(-3, 3), rng.randint(-3, 3)])
        a = TwistedLaurentElement.monomial(Q, m, alpha)
        b = TwistedLaurentElement.monomial(Q, k)
        # semilinear on scalars
        assert action.apply(1, a * c) == action.apply(1, a) * sigma(c)
        # multiplicative
        assert action.apply(1, a * b) == action.apply(1, a) * action.apply(1, b)
        # bijective: sigma then sigma is the identity
        assert action.apply(1, action.apply(1, a + b)) == a + b


def test_relation_preservation(sqrt5, unit5):
    action = swap_action(sqrt5, unit5)
    Q = action.qmatrix
    sigma = sqrt5.galois.elements[1]
    for i in range(2):
        for j in range(2):
            xi = TwistedLaurentElement.generator(Q, i)
            xj = TwistedLaurentElement.generator(Q, j)
            lhs = action.apply(1, xi * xj)
            rhs = action.apply(1, xj * xi) * sigma(Q.entries[i][j])
            assert lhs == rhs


def test_validate_action_reports(sqrt5, unit5):
    action = swap_action(sqrt5, unit5)
    rep = validate_action(action, degree_bound=3, samples=30)
    assert rep.ok
    names = [c.name for c in rep.checks]
    assert "group-law-on-monomials" in names


def test_gamma_on_composite_exponents(sqrt5, unit5):
    # gamma for the swap on (1,1): sigma(x1 x2) = x2 x1 = q^-1 x1 x2
    action = swap_action(sqrt5, unit5)
    q = unit5
    assert action.gamma(1, (1, 1)) == q.inverse()
    exp, coeff = action.monomial_image(1, (1, 1))
    assert exp == (1, 1)


def test_torus_module_validation(sqrt5):
    with pytest.raises(ValueError):
        TorusModule(sqrt5.galois, [[[1, 0], [0, 1]], [[2, 0], [0, 1]]])
    with pytest.raises(ValueError):
        # sigma matrix of order 4 cannot represent an order-2 group element
        TorusModule(sqrt5.galois, [[[1, 0], [0, 1]], [[0, -1], [1, 0]]])


def test_gamma_cocycle_validation(sqrt5):
    one = sqrt5.one()
    with pytest.raises(ValueError):
        GammaCocycle(sqrt5, sqrt5.galois, [[one, one], [sqrt5.zero(), one]])
    with pytest.raises(ValueError):
        GammaCocycle(sqrt5, sqrt5.galois, [[one, 2 * one], [one, one]])

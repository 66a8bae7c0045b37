from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qlscrystal import CartanType, root_system
from qlscrystal.errors import InternalInconsistencyError

# Closed-form positive-root counts, the independent oracle for enumeration.
EXPECTED_COUNTS = {
    "A1": 1,
    "A2": 3,
    "A3": 6,
    "B2": 4,
    "B3": 9,
    "C2": 4,
    "C3": 9,
    "D4": 12,
    "G2": 6,
    "F4": 24,
    "E6": 36,
}


@pytest.mark.parametrize("name,count", sorted(EXPECTED_COUNTS.items()))
def test_positive_root_counts(name, count):
    assert len(root_system(name).positive_roots) == count


def test_cartan_type_validation():
    assert CartanType.parse("a2") == CartanType("A", 2)
    with pytest.raises(ValueError):
        CartanType("E", 9)
    with pytest.raises(ValueError):
        CartanType("Z", 2)
    with pytest.raises(ValueError):
        CartanType("D", 3)
    with pytest.raises(ValueError):
        CartanType.parse("A")


def test_a2_roots_and_theta(a2):
    assert a2.positive_roots == ((0, 1), (1, 0), (1, 1))
    assert a2.highest_root == (1, 1)


def test_c2_theta(c2):
    assert c2.highest_root == (2, 1)
    assert c2.coroot((2, 1)) == (1, 1)


@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_root_closure_property(name):
    # If the sum of two positive roots is a root, it was enumerated.
    rs = root_system(name)
    roots = set(rs.positive_roots)
    for b in roots:
        for c in roots:
            s = tuple(x + y for x, y in zip(b, c))
            if rs.is_root(s):
                assert s in roots


@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_theta_is_dominant_and_maximal(name):
    rs = root_system(name)
    theta = rs.highest_root
    theta_w = rs.root_in_weight_coords(theta)
    assert all(c >= 0 for c in theta_w)
    for b in rs.positive_roots:
        assert all(x >= y for x, y in zip(theta, b))


@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_pairing_against_bilinear_form(name):
    # Independent oracle: <mu, beta^v> = 2(mu,beta)/(beta,beta) computed
    # straight from the symmetrizer, with (w_i, alpha_j) = delta_ij * d_j.
    rs = root_system(name)
    d = rs.symmetrizer
    for b in rs.positive_roots:
        norm = sum(
            b[i] * b[j] * d[i] * rs.cartan_matrix[i][j]
            for i in range(rs.rank)
            for j in range(rs.rank)
        )
        for i in range(1, rs.rank + 1):
            mu = rs.fundamental_weight(i)
            form = b[i - 1] * d[i - 1]
            assert rs.pairing(mu, b) == Fraction(2 * form, norm)


def test_pairing_examples(a2, c2):
    assert a2.pairing(a2.fundamental_weight(1), (1, 0)) == 1
    assert a2.pairing(a2.rho, a2.highest_root) == 2
    assert c2.pairing(c2.fundamental_weight(1), c2.highest_root) == 1


def test_pairing_rejects_non_roots(a2):
    with pytest.raises(ValueError):
        a2.pairing(a2.rho, (2, 0))


def test_reflect_examples(a2):
    w1 = a2.fundamental_weight(1)
    assert a2.reflect(w1, (1, 0)) == (-1, 1)
    assert a2.reflect(w1, a2.highest_root) == (0, -1)


@given(
    name=st.sampled_from(["A2", "C2", "B3", "G2"]),
    coords=st.lists(st.integers(-6, 6), min_size=3, max_size=3),
)
def test_reflect_is_an_involution(name, coords):
    rs = root_system(name)
    mu = tuple(coords[: rs.rank])
    for b in rs.positive_roots:
        back = rs.reflect(rs.reflect(mu, b), b)
        assert tuple(back) == mu
        assert all(Fraction(x).denominator == 1 for x in rs.reflect(mu, b))


def test_rho_pairing_examples(a2):
    theta = a2.highest_root
    assert a2.rho_pairing(set(), theta) == 2
    assert a2.rho_pairing({2}, theta) == Fraction(3, 2)
    assert a2.rho_pairing({2}, (1, 0)) == Fraction(3, 2)


def test_rho_pairing_rejects_parabolic_labels(a2):
    with pytest.raises(ValueError):
        a2.rho_pairing({2}, (0, 1))
    with pytest.raises(ValueError):
        a2.rho_pairing({1, 2, 3}, (1, 0))


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "C2", "C3", "G2", "D4"])
def test_twice_rho_pairing_is_integral(name):
    # Needed for the quantum edge condition to be decidable over integers.
    rs = root_system(name)
    all_J = []
    from itertools import combinations

    idx = range(1, rs.rank + 1)
    for k in range(rs.rank + 1):
        all_J.extend(combinations(idx, k))
    for J in all_J:
        for b in rs.positive_roots_outside(J):
            val = 2 * Fraction(rs.rho_pairing(J, b))
            assert val.denominator == 1
            assert val > 0


def test_weight_root_coordinate_conversion(a2, c2):
    for rs in (a2, c2):
        for b in rs.positive_roots:
            mu = rs.root_in_weight_coords(b)
            assert rs.weight_in_root_coords(mu) == tuple(Fraction(x) for x in b)


def test_interning(a2):
    assert root_system("A2") is a2


def test_coroot_symmetrizer_cross_check():
    # Construction itself re-derives every coroot from the symmetrizer and
    # raises on mismatch; build a couple of types with long/short roots.
    for name in ("B4", "C4", "F4", "G2"):
        rs = root_system(name)
        for b in rs.positive_roots:
            assert rs.coroot(tuple(-c for c in b)) == tuple(
                -c for c in rs.coroot(b)
            )

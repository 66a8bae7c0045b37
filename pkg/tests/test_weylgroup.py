from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from qlscrystal import (
    enumerate_minimal_reps,
    from_word,
    identity,
    min_coset_rep,
    reflection_of_root,
    root_system,
    simple_reflection,
    weyl_group,
)

GROUP_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "C3": 48, "G2": 12}


@pytest.mark.parametrize("name,order", sorted(GROUP_ORDERS.items()))
def test_group_orders(name, order):
    assert len(weyl_group(root_system(name))) == order


def test_simple_reflection_action(a2):
    s1 = simple_reflection(a2, 1)
    assert s1.act_root((1, 0)) == (-1, 0)
    assert s1.act_root((0, 1)) == (1, 1)
    assert s1.length == 1
    assert s1 * s1 == identity(a2)
    with pytest.raises(ValueError):
        simple_reflection(a2, 3)


def test_braid_relation_and_longest(a2, c2):
    s1, s2 = simple_reflection(a2, 1), simple_reflection(a2, 2)
    assert s1 * s2 * s1 == s2 * s1 * s2
    assert (s1 * s2 * s1).length == 3
    # longest element by exhaustive enumeration
    assert max(w.length for w in weyl_group(c2)) == 4


def test_length_equals_reduced_word_length():
    for name in ("A2", "C2", "G2"):
        rs = root_system(name)
        for w in weyl_group(rs):
            assert len(w.reduced_word) == w.length
            assert from_word(rs, w.reduced_word) == w


def test_inverse_and_products():
    rs = root_system("C2")
    group = weyl_group(rs)
    e = identity(rs)
    for w in group:
        assert w * w.inverse() == e
        assert w.inverse().inverse() == w
    with pytest.raises(ValueError):
        group[1] * identity(root_system("A2"))


def test_act_weight_pairing_compatibility(a2, c2):
    # <w mu, (w beta)^v> == <mu, beta^v> for every group element.
    for rs in (a2, c2):
        mu = (2, -1)
        for w in weyl_group(rs):
            for b in rs.positive_roots:
                assert rs.pairing(w.act_weight(mu), w.act_root(b)) == rs.pairing(mu, b)


def _reflection_search_oracle(rs, beta):
    # The unique group element acting on weights exactly as the reflection.
    found = [
        w
        for w in weyl_group(rs)
        if all(
            w.act_weight(rs.fundamental_weight(i)) == rs.reflect(rs.fundamental_weight(i), beta)
            for i in range(1, rs.rank + 1)
        )
    ]
    assert len(found) == 1
    return found[0]


@pytest.mark.parametrize("name", ["A2", "C2", "G2"])
def test_reflection_of_root_against_search(name):
    rs = root_system(name)
    for b in rs.positive_roots:
        r = reflection_of_root(rs, b)
        assert r == _reflection_search_oracle(rs, b)
        assert r.act_root(b) == tuple(-c for c in b)
        for i in range(1, rs.rank + 1):
            mu = rs.fundamental_weight(i)
            assert r.act_weight(mu) == rs.reflect(mu, b)


def test_reflection_of_root_examples(a2, c2):
    assert reflection_of_root(a2, (1, 0)) == simple_reflection(a2, 1)
    assert reflection_of_root(a2, a2.highest_root).reduced_word == (1, 2, 1)
    assert reflection_of_root(c2, c2.highest_root).length == 3
    with pytest.raises(ValueError):
        reflection_of_root(a2, (-1, 0))


def _coset_scan_oracle(rs, w, J):
    # Exhaustive scan of w*W_J for its unique shortest element.
    subgroup = {identity(rs)}
    frontier = [identity(rs)]
    gens = [simple_reflection(rs, j) for j in J]
    while frontier:
        new = []
        for z in frontier:
            for g in gens:
                x = z * g
                if x not in subgroup:
                    subgroup.add(x)
                    new.append(x)
        frontier = new
    coset = [w * z for z in subgroup]
    best = min(c.length for c in coset)
    shortest = [c for c in coset if c.length == best]
    assert len(shortest) == 1
    return shortest[0], subgroup


@pytest.mark.parametrize("name", ["A2", "C2"])
def test_min_coset_rep_against_scan(name):
    rs = root_system(name)
    subsets = [
        J
        for k in range(rs.rank + 1)
        for J in combinations(range(1, rs.rank + 1), k)
    ]
    for J in subsets:
        for w in weyl_group(rs):
            rep = min_coset_rep(w, J)
            oracle, subgroup = _coset_scan_oracle(rs, w, J)
            assert rep == oracle
            assert min_coset_rep(rep, J) == rep
            # length is additive over the factorization w = rep * z
            z = rep.inverse() * w
            assert z in subgroup
            assert w.length == rep.length + z.length


def test_min_coset_rep_examples(a2):
    s1, s2 = simple_reflection(a2, 1), simple_reflection(a2, 2)
    assert min_coset_rep(s2, {2}) == identity(a2)
    assert min_coset_rep(s1 * s2 * s1, {2}) == s2 * s1
    w = s1 * s2
    assert min_coset_rep(w, set()) == w


def test_enumerate_minimal_reps(a2, c2):
    assert len(enumerate_minimal_reps(a2, set())) == 6
    reps = enumerate_minimal_reps(a2, {2})
    assert [w.reduced_word for w in reps] == [(), (1,), (2, 1)]
    assert len(enumerate_minimal_reps(c2, {2})) == 4
    # sorted by (length, canonical form)
    lens = [w.length for w in enumerate_minimal_reps(c2, {1})]
    assert lens == sorted(lens)


@pytest.mark.parametrize("name,J", [("A2", (2,)), ("C2", (1,)), ("C2", (2,))])
def test_left_simple_multiplication_stays_minimal(name, J):
    # If w^{-1} alpha_j lies outside the parabolic subsystem, r_j w is again
    # a minimal representative.
    rs = root_system(name)
    para = set(rs.parabolic_positive_roots(J))
    para |= {tuple(-c for c in b) for b in para}
    for w in enumerate_minimal_reps(rs, J):
        for j in range(1, rs.rank + 1):
            pre = w.inverse().act_root(rs.simple_root(j))
            if pre not in para:
                rjw = simple_reflection(rs, j) * w
                assert min_coset_rep(rjw, J) == rjw


@pytest.mark.parametrize("name,weight", [("A2", (1, 0)), ("C2", (0, 1)), ("A2", (1, 1))])
def test_orbit_map_injective_on_minimal_reps(name, weight):
    rs = root_system(name)
    J = {j for j in range(1, rs.rank + 1) if weight[j - 1] == 0}
    reps = enumerate_minimal_reps(rs, J)
    orbit = {w.act_weight(weight) for w in reps}
    assert len(orbit) == len(reps)


@given(
    name=st.sampled_from(["A2", "C2"]),
    windex=st.integers(0, 7),
    coords=st.lists(st.integers(-4, 4), min_size=2, max_size=2),
)
def test_act_weight_is_linear(name, windex, coords):
    rs = root_system(name)
    group = weyl_group(rs)
    w = group[windex % len(group)]
    mu = tuple(coords)
    double = tuple(2 * c for c in coords)
    assert w.act_weight(double) == tuple(2 * c for c in w.act_weight(mu))

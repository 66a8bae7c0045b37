from fractions import Fraction
from itertools import combinations

import pytest

from qlscrystal import (
    build_qbg,
    classify_edge,
    enumerate_minimal_reps,
    from_word,
    identity,
    min_coset_rep,
    qbg_distance,
    reflection_of_root,
    root_system,
    sigma_path_witness,
    sigma_reachable,
    simple_reflection,
    weyl_group,
)
from qlscrystal.qbg import BRUHAT, QUANTUM


def test_classify_edge_examples(a2):
    e = identity(a2)
    s1 = simple_reflection(a2, 1)
    assert classify_edge(a2, set(), e, (1, 0)) == BRUHAT
    assert classify_edge(a2, set(), s1, (1, 0)) == QUANTUM
    assert classify_edge(a2, set(), e, (1, 1)) is None
    with pytest.raises(ValueError):
        classify_edge(a2, {2}, simple_reflection(a2, 2), (1, 0))
    with pytest.raises(ValueError):
        classify_edge(a2, {2}, e, (0, 1))


def test_a1_graph(a1):
    g = build_qbg(a1, set())
    assert [w.reduced_word for w in g.vertices] == [(), (1,)]
    kinds = [(e.source.reduced_word, e.target.reduced_word, e.label, e.kind) for e in g.edges]
    assert kinds == [((), (1,), (1,), BRUHAT), ((1,), (), (1,), QUANTUM)]


# Hand-derived edge list for the full A2 graph: Bruhat edges are the eight
# covers of the weak/strong order coincidence at rank 2, quantum edges the
# seven length-dropping turns, one per simple descent plus the full wrap.
A2_EDGES = {
    ((), (1,), (1, 0), BRUHAT),
    ((), (2,), (0, 1), BRUHAT),
    ((1,), (1, 2), (0, 1), BRUHAT),
    ((1,), (2, 1), (1, 1), BRUHAT),
    ((2,), (2, 1), (1, 0), BRUHAT),
    ((2,), (1, 2), (1, 1), BRUHAT),
    ((1, 2), (1, 2, 1), (1, 0), BRUHAT),
    ((2, 1), (1, 2, 1), (0, 1), BRUHAT),
    ((1,), (), (1, 0), QUANTUM),
    ((2,), (), (0, 1), QUANTUM),
    ((1, 2), (1,), (0, 1), QUANTUM),
    ((2, 1), (2,), (1, 0), QUANTUM),
    ((1, 2, 1), (1, 2), (1, 0), QUANTUM),
    ((1, 2, 1), (2, 1), (0, 1), QUANTUM),
    ((1, 2, 1), (), (1, 1), QUANTUM),
}


def test_a2_full_graph_exact(a2):
    g = build_qbg(a2, set())
    got = {
        (e.source.reduced_word, e.target.reduced_word, e.label, e.kind)
        for e in g.edges
    }
    assert got == A2_EDGES
    assert len(g.bruhat_edges()) == 8
    assert len(g.quantum_edges()) == 7


def test_a2_parabolic_three_cycle(a2):
    g = build_qbg(a2, {2})
    got = [
        (e.source.reduced_word, e.target.reduced_word, e.label, e.kind)
        for e in g.edges
    ]
    assert got == [
        ((), (1,), (1, 0), BRUHAT),
        ((1,), (2, 1), (1, 1), BRUHAT),
        ((2, 1), (), (1, 0), QUANTUM),
    ]


def test_distances(a2):
    g = build_qbg(a2, set())
    e = identity(a2)
    w0 = from_word(a2, (1, 2, 1))
    assert qbg_distance(g, e, w0) == 1  # quantum wrap by the highest root
    # From the identity the only out-neighbours are the two simple covers,
    # and neither reaches the longest element in one more step.
    assert qbg_distance(g, w0, e) == 3
    for x in g.vertices:
        assert qbg_distance(g, x, x) == 0
    with pytest.raises(ValueError):
        qbg_distance(g, identity(root_system("C2")), e)


def test_sigma_reachable(a1):
    g = build_qbg(a1, set())
    e, s1 = g.vertices
    lam = (2,)
    assert sigma_reachable(g, lam, Fraction(1, 2), e, s1) == 1
    assert sigma_reachable(g, lam, Fraction(1, 3), e, s1) is None
    assert sigma_reachable(g, lam, Fraction(1, 3), s1, s1) == 0
    with pytest.raises(ValueError):
        sigma_reachable(g, lam, Fraction(3, 2), e, s1)


def test_sigma_witness(a1):
    g = build_qbg(a1, set())
    e, s1 = g.vertices
    path = sigma_path_witness(g, (2,), Fraction(1, 2), e, s1)
    assert [p.kind for p in path] == [QUANTUM]
    assert sigma_path_witness(g, (2,), Fraction(1, 3), e, s1) is None
    assert sigma_path_witness(g, (2,), Fraction(1, 2), e, e) == ()


ALL_J = {
    "A2": [(), (1,), (2,)],
    "C2": [(), (1,), (2,)],
}


@pytest.mark.parametrize("name", sorted(ALL_J))
def test_structural_properties(name):
    rs = root_system(name)
    for J in ALL_J[name]:
        g = build_qbg(rs, J)
        # Bruhat edges stay minimal without projecting.
        for e in g.bruhat_edges():
            full = e.source * reflection_of_root(rs, e.label)
            assert min_coset_rep(full, g.J) == full
            assert e.target == full
        # Quantum edges satisfy the unprojected drop as well.
        for e in g.quantum_edges():
            full = e.source * reflection_of_root(rs, e.label)
            coht = sum(rs.coroot(e.label))
            assert full.length == e.source.length - 2 * coht + 1
        # Vertices sending the highest root down carry the wrap-around edge.
        edge_set = {(e.source, e.target, e.label): e.kind for e in g.edges}
        r_top = reflection_of_root(rs, rs.highest_root)
        hits = 0
        for w in g.vertices:
            pre = w.inverse().act_root(rs.highest_root)
            if all(c <= 0 for c in pre):
                hits += 1
                label = tuple(-c for c in pre)
                target = min_coset_rep(r_top * w, g.J)
                assert edge_set[(w, target, label)] == QUANTUM
        assert hits > 0
        # Strong connectivity.
        assert g.strongly_connected


@pytest.mark.parametrize("name", sorted(ALL_J))
def test_sigma_paths_never_beat_distance(name):
    rs = root_system(name)
    lam = tuple(1 for _ in range(rs.rank))
    g = build_qbg(rs, ())
    for sigma in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)):
        for x in g.vertices:
            for y in g.vertices:
                n = sigma_reachable(g, lam, sigma, x, y)
                if n is not None:
                    assert n >= qbg_distance(g, x, y)


def _diamond_lambda(rs, J):
    return tuple(0 if j in set(J) else 1 for j in range(1, rs.rank + 1))


@pytest.mark.parametrize("name", sorted(ALL_J))
def test_diamond_lemma_parts(name):
    # For each edge (w -> [w r_beta], beta) and simple index j, the four
    # diamond statements: positivity propagates across the edge unless the
    # moved root hits the j-wall, in which case the wall is forced.
    rs = root_system(name)
    for J in ALL_J[name]:
        g = build_qbg(rs, J)
        lam = _diamond_lambda(rs, J)
        edge_set = {(e.source, e.target, e.label): e.kind for e in g.edges}
        reps = set(g.vertices)
        for e in g.edges:
            w = e.source
            beta = e.label
            wbeta = w.act_root(beta)
            for j in range(1, rs.rank + 1):
                alpha = rs.simple_root(j)
                hits_wall = wbeta == alpha or wbeta == tuple(-c for c in alpha)
                sj = simple_reflection(rs, j)
                top = rs.pairing(w.act_weight(lam), alpha)
                bot = rs.pairing(e.target.act_weight(lam), alpha)
                if top > 0 and not hits_wall:
                    assert bot > 0  # part 1
                    assert sj * w in reps and sj * e.target in reps
                    assert edge_set.get((sj * w, sj * e.target, beta)) == e.kind
                if bot < 0 and not hits_wall:
                    assert top < 0  # part 2
                    assert sj * w in reps and sj * e.target in reps
                    assert edge_set.get((sj * w, sj * e.target, beta)) == e.kind
                if bot < 0 and top >= 0:
                    assert hits_wall  # part 3
                if bot <= 0 and top > 0:
                    assert hits_wall  # part 4


def test_all_parabolics_build_cleanly():
    # Wider sweep: every parabolic of A3 and C3 builds, classifies without
    # internal inconsistencies, and is strongly connected.
    for name in ("A3", "C3"):
        rs = root_system(name)
        for k in range(rs.rank + 1):
            for J in combinations(range(1, rs.rank + 1), k):
                g = build_qbg(rs, J)
                assert g.strongly_connected
                assert len(g.vertices) == len(weyl_group(rs)) // _order_wj(rs, J)


def _order_wj(rs, J):
    sub = {identity(rs)}
    frontier = [identity(rs)]
    gens = [simple_reflection(rs, j) for j in J]
    while frontier:
        new = []
        for z in frontier:
            for ggen in gens:
                x = z * ggen
                if x not in sub:
                    sub.add(x)
                    new.append(x)
        frontier = new
    return len(sub)

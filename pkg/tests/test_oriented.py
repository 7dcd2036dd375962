import numpy as np
import pytest

from maniplex.constructions import (cube, cuboctahedron, hemicube, polygon, prism,
                                    simplex, torus44)
from maniplex.oriented import (Rotary, TwoOrbitOriented, aut_plus,
                               black_orbit_count, check_facets_against_faces,
                               classify_oriented, enantiomorph,
                               is_chiral_a_la_conway, orientation,
                               oriented_are_isomorphic, oriented_digraph,
                               oriented_stg, stg_has_odd_closed_walk)
from maniplex.symmetry import aut_group


def test_orientability():
    assert orientation(cube()) is not None
    assert orientation(torus44(1, 2)) is not None
    assert orientation(hemicube()) is None


def test_orientation_parts_alternate():
    g = prism(5)
    o = orientation(g)
    for i in range(g.rank):
        assert np.all(o.colour_of[g.adj[i]] != o.colour_of)
    assert o.colour_of[0] == 0


def test_digraph_counts_and_classes():
    g = cuboctahedron()
    d = oriented_digraph(g, orientation(g))
    assert d.black_count == 48
    g = cube()
    d = oriented_digraph(g, orientation(g))
    assert d.black_count == 24
    ident = np.arange(24)
    assert np.array_equal(d.t_adj[0][d.t_adj[0]], ident)
    assert np.all(d.t_adj[0] != ident)
    assert np.all(d.rot != ident)
    # rot turns around a vertex: cycles have the vertex degree, here 3
    x = ident
    for _ in range(3):
        x = d.rot[x]
    assert np.array_equal(x, ident)


def test_polygon_digraph_is_directed_cycle():
    l = 6
    g = polygon(l)
    d = oriented_digraph(g, orientation(g))
    assert d.black_count == l
    assert d.t_adj.shape == (0, l)
    seen = set()
    f = 0
    for _ in range(l):
        seen.add(f)
        f = int(d.rot[f])
    assert f == 0 and len(seen) == l


def test_digraph_needs_rank_two():
    g = simplex(1)
    with pytest.raises(ValueError):
        oriented_digraph(g, orientation(g))


def test_aut_plus_orders():
    g = cube()
    o = orientation(g)
    ap = aut_plus(g, o)
    assert ap.order == 24
    assert aut_group(g).order // ap.order == 2

    g = torus44(1, 2)
    o = orientation(g)
    ap = aut_plus(g, o)
    assert ap.order == 20
    assert aut_group(g).order == 20

    g = cuboctahedron()
    o = orientation(g)
    ap = aut_plus(g, o)
    assert ap.order == 24
    assert black_orbit_count(ap, o) == 2


def test_chirality_both_tests_agree(corpus):
    from tests.conftest import CORPUS_LABELS

    for label in CORPUS_LABELS:
        g = corpus.graph(label)
        o = orientation(g)
        if o is None:
            continue
        chiral = is_chiral_a_la_conway(g, o, aut=corpus.aut(label), stg=corpus.stg(label))
        if label == "torus44:1,2":
            assert chiral
        if label in ("cube", "cuboctahedron"):
            assert not chiral


def test_odd_closed_walk_detection(corpus):
    assert stg_has_odd_closed_walk(corpus.stg("cube"))          # semi-edges
    assert stg_has_odd_closed_walk(corpus.stg("cuboctahedron"))  # semi-edges
    assert not stg_has_odd_closed_walk(corpus.stg("torus44:1,2"))


def test_oriented_stg_rotary():
    g = torus44(1, 2)
    o = orientation(g)
    ot = oriented_stg(g, o)
    assert ot.vertex_count == 1
    assert ot.undirected == ((-1,),)   # one undirected class, a semi-edge
    assert ot.dart == (0,)             # a loop
    assert classify_oriented(ot) == Rotary()

    g = cube()
    ot = oriented_stg(g, orientation(g))
    assert classify_oriented(ot) == Rotary()


def test_rotary_rank4_shape():
    # one vertex, a loop, and rank-2 semi-edges for the undirected classes
    from maniplex.constructions import hypercube

    g = hypercube(4)
    ot = oriented_stg(g, orientation(g))
    assert ot.vertex_count == 1
    assert ot.undirected == ((-1, -1),)
    assert ot.dart == (0,)
    assert classify_oriented(ot) == Rotary()


def test_oriented_two_orbit_class():
    g = cuboctahedron()
    o = orientation(g)
    ot = oriented_stg(g, o)
    assert ot.vertex_count == 2
    cls = classify_oriented(ot)
    assert isinstance(cls, TwoOrbitOriented)
    assert cls.semi_colours == frozenset()


def test_enantiomorph_involution():
    g = torus44(1, 2)
    d = oriented_digraph(g, orientation(g))
    twice = enantiomorph(enantiomorph(d))
    assert np.array_equal(twice.rot, d.rot)
    assert np.array_equal(twice.t_adj, d.t_adj)


def test_enantiomorph_mirror_maps():
    d12 = oriented_digraph(torus44(1, 2), orientation(torus44(1, 2)))
    d21 = oriented_digraph(torus44(2, 1), orientation(torus44(2, 1)))
    assert oriented_are_isomorphic(enantiomorph(d12), d21) is not None
    assert oriented_are_isomorphic(d12, d21) is None

    g = cube()
    d = oriented_digraph(g, orientation(g))
    assert oriented_are_isomorphic(enantiomorph(d), d) is not None


def test_vertex_count_theorem(corpus):
    # quotient and oriented quotient have equally many vertices exactly
    # when the quotient has a semi-edge or an odd cycle
    from tests.conftest import CORPUS_LABELS

    for label in CORPUS_LABELS:
        g = corpus.graph(label)
        o = orientation(g)
        if o is None:
            continue
        t = corpus.stg(label)
        ap = aut_plus(g, o, aut=corpus.aut(label))
        same = black_orbit_count(ap, o) == t.vertex_count
        assert same == stg_has_odd_closed_walk(t), label


def test_facet_partition_matches_faces(corpus):
    for label in ("cube", "cuboctahedron", "torus44:1,2", "prism:3",
                  "pyramid:4", "polygon:5", "simplex:4"):
        g = corpus.graph(label)
        o = orientation(g)
        if o is None:
            continue
        assert check_facets_against_faces(g, o), label


def test_chiral_orbit_count_doubles(corpus):
    # chiral-a-la-Conway: no semi-edges, and the full orbit count is twice
    # the orientation-preserving one
    from tests.conftest import CORPUS_LABELS

    seen_chiral = 0
    for label in CORPUS_LABELS:
        g = corpus.graph(label)
        o = orientation(g)
        if o is None:
            continue
        a = corpus.aut(label)
        t = corpus.stg(label)
        ap = aut_plus(g, o, aut=a)
        if is_chiral_a_la_conway(g, o, aut=a, a_plus=ap, stg=t):
            seen_chiral += 1
            assert not t.has_semi_edges(), label
            assert a.orbit_count == 2 * black_orbit_count(ap, o), label
    assert seen_chiral > 0


def test_digraph_classes_agree_with_flag_actions(corpus):
    # t classes are fixed-point-free and match r_{n-1} then r_i on black flags
    for label in ("cuboctahedron", "prism:3", "torus44:1,2", "hypercube:4"):
        g = corpus.graph(label)
        o = orientation(g)
        d = oriented_digraph(g, o)
        n = g.rank
        ident = np.arange(d.black_count)
        for i in range(n - 2):
            assert np.all(d.t_adj[i] != ident)
            assert np.array_equal(d.t_adj[i][d.t_adj[i]], ident)
            composed = g.adj[i][g.adj[n - 1][d.black_flags]]
            assert np.array_equal(d.black_flags[d.t_adj[i]], composed)
        assert np.all(d.rot != ident)
        composed = g.adj[n - 2][g.adj[n - 1][d.black_flags]]
        assert np.array_equal(d.black_flags[d.rot], composed)


def test_index_two_iff_orientation_reversing(corpus):
    from tests.conftest import CORPUS_LABELS

    for label in CORPUS_LABELS:
        g = corpus.graph(label)
        o = orientation(g)
        if o is None:
            continue
        a = corpus.aut(label)
        ap = aut_plus(g, o, aut=a)
        assert a.order % ap.order == 0
        index = a.order // ap.order
        assert index in (1, 2)
        reversing_exists = any(o.colour_of[el[0]] != o.colour_of[0] for el in a.elements)
        assert (index == 2) == reversing_exists, label

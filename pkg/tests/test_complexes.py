import random
import warnings
from itertools import combinations, permutations

import pytest

from shellability.complexes import (
    CapacityError,
    FacetAbsorbedWarning,
    InvalidFaceError,
    PurityError,
    all_faces,
    face,
    face_vertices,
    format_complex,
    from_facets,
    full_simplex,
    parse_complex,
    two_disjoint_edges,
)
from shellability.partition import band_complex

from conftest import corpus


def masks(*vertex_sets):
    return [face(vs) for vs in vertex_sets]


def test_from_facets_absorbs_subsets():
    c = from_facets(masks({0, 1}, {0}))
    assert c.facets == (face({0, 1}),)


def test_from_facets_empty_gives_the_minimal_complex():
    c = from_facets([])
    assert c.facets == (0,)
    assert c.dim == -1
    assert c.f_vector() == [1]


def test_from_facets_is_idempotent_on_corpus():
    for c in corpus(seed=11, count=60):
        assert from_facets(c.facets) == c


def test_two_disjoint_edges_shape(two_k2):
    assert two_disjoint_edges() == two_k2
    assert two_k2.f_vector() == [1, 4, 2]
    assert not two_k2.connected()


def test_all_faces_counts(two_k2, delta5):
    assert len(all_faces(two_k2)) == 7
    assert len(all_faces(full_simplex(3))) == 8
    assert len(all_faces(delta5)) == 21
    # the band contains every possible edge on its five vertices
    assert len(delta5.faces_of_dim(1)) == 10


def test_restriction_examples(two_k2, delta5):
    assert two_k2.restriction({0, 1}).facets == (face({0, 1}),)
    assert delta5.restriction(delta5.vertices) == delta5
    r = delta5.restriction({0, 1, 2, 3})
    assert set(r.facets) == set(masks({0, 1, 2}, {1, 2, 3}, {0, 3}))


def test_restriction_ignores_foreign_vertices(delta5):
    assert delta5.restriction({0, 1, 2, 3, 9, 10}) == delta5.restriction({0, 1, 2, 3})


def test_deletion_is_complementary_restriction():
    for c in corpus(seed=12, count=40):
        verts = c.vertex_ids()
        for drop in range(len(verts) + 1):
            for removed in combinations(verts, min(drop, 2)):
                u = face(removed)
                assert c.deletion(u) == c.restriction(c.vertices & ~u)


def test_link_examples(simplex3, delta5):
    assert simplex3.link({0}).facets == (face({1, 2}),)
    link0 = delta5.link({0})
    # the link of a band vertex is the path 2-1-4-3
    assert set(link0.facets) == set(masks({1, 2}, {1, 4}, {3, 4}))
    assert delta5.link(0) == delta5


def test_link_requires_a_face(two_k2):
    with pytest.raises(InvalidFaceError):
        two_k2.link({0, 2})


def test_restriction_link_commute_on_corpus():
    rng = random.Random(13)
    checked = 0
    for c in corpus(seed=13, count=40):
        verts = c.vertex_ids()
        w = face(v for v in verts if rng.random() < 0.7)
        restricted = c.restriction(w)
        for tau in restricted.faces():
            assert restricted.link(tau) == c.link(tau).restriction(w)
            checked += 1
    assert checked > 100


def test_pure_skeleton_examples(two_k2, delta5):
    assert two_k2.pure_skeleton(1) == two_k2
    tri_and_point = from_facets(masks({0, 1, 2}, {3}))
    assert tri_and_point.pure_skeleton(1) == from_facets(masks({0, 1}, {1, 2}, {0, 2}))
    k5 = from_facets(masks(*[set(p) for p in combinations(range(5), 2)]))
    assert delta5.pure_skeleton(1) == k5
    assert delta5.pure_skeleton(5).facets == (0,)


def test_pure_skeletons_are_pure_of_requested_dimension():
    for c in corpus(seed=17, count=40):
        for i in range(0, c.dim + 1):
            skel = c.pure_skeleton(i)
            assert skel.is_pure() and skel.dim == i


def test_f_vector_dim_purity(two_k2, delta5):
    assert two_k2.f_vector() == [1, 4, 2]
    assert delta5.is_pure() and delta5.dim == 2
    assert not from_facets(masks({0, 1, 2}, {3, 4})).is_pure()
    assert sum(delta5.f_vector()) == len(all_faces(delta5))


def test_edge_classification(delta5, complex_1a, simplex3):
    kinds = delta5.edge_classification()
    nonboundary = {e for e, k in kinds.items() if k == "nonboundary"}
    assert nonboundary == {face({k, (k + 1) % 5}) for k in range(5)}
    assert len(kinds) == 10

    assert set(complex_1a.edge_classification().values()) == {"boundary"}

    tri = from_facets([{0, 1, 2}])
    assert set(tri.edge_classification().values()) == {"boundary"}

    with pytest.raises(Exception):
        simplex3.link({0}).edge_classification()  # 1-dimensional


def test_connectivity(two_k2, delta5):
    assert not two_k2.connected()
    assert delta5.connected() and delta5.strongly_connected()
    shared_vertex = from_facets(masks({0, 1, 2}, {0, 3, 4}))
    assert shared_vertex.connected()
    assert not shared_vertex.strongly_connected()
    assert from_facets([{0}]).connected()
    assert from_facets([]).connected()
    with pytest.raises(PurityError):
        from_facets(masks({0, 1, 2}, {3, 4})).strongly_connected()


def test_vertex_cap():
    with pytest.raises(CapacityError):
        face([64])


# --- canonical form against the permutation oracle -------------------------

def brute_isomorphic(a, b) -> bool:
    va, vb = a.vertex_ids(), b.vertex_ids()
    if len(va) != len(vb):
        return False
    fa = {frozenset(face_vertices(f)) for f in a.facets}
    fb = {frozenset(face_vertices(f)) for f in b.facets}
    for perm in permutations(vb):
        m = dict(zip(va, perm))
        if {frozenset(m[v] for v in f) for f in fa} == fb:
            return True
    return False


def test_canonical_form_matches_brute_force_oracle():
    cs = corpus(seed=14, count=45, n_max=6)
    pairs_checked = agreements = 0
    for i, a in enumerate(cs):
        for b in cs[i + 1:i + 6]:
            expected = brute_isomorphic(a, b)
            assert a.is_isomorphic(b) == expected
            pairs_checked += 1
            agreements += expected
    assert pairs_checked >= 150


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(15)
    for c in corpus(seed=15, count=40):
        verts = list(c.vertex_ids())
        shuffled = verts[:]
        rng.shuffle(shuffled)
        relabeled = c.relabel(dict(zip(verts, shuffled)))
        assert relabeled.canonical_form() == c.canonical_form()
        assert c.relabel(c.canonical_map()).canonical_form() == c.canonical_form()


def test_isomorphism_examples(ind_c6, complex_1a, two_k2):
    assert ind_c6.is_isomorphic(complex_1a)
    assert brute_isomorphic(ind_c6, complex_1a)
    path3 = from_facets(masks({0, 1}, {1, 2}, {2, 3}))
    assert not two_k2.is_isomorphic(path3)


def test_canonical_cap():
    with pytest.raises(CapacityError):
        from_facets([face(range(10))]).canonical_form()


# --- facet-list text format -------------------------------------------------

def test_parse_numeric_and_round_trip(delta5, two_k2):
    for c in [delta5, two_k2, full_simplex(4), from_facets([])]:
        assert parse_complex(format_complex(c)) == c


def test_parse_tokens_first_appearance():
    c = parse_complex("a b c\nd e\n")
    assert c == from_facets(masks({0, 1, 2}, {3, 4}))


def test_parse_comments_blank_lines_and_absorption():
    text = "# header\n0 1 2\n\n0 1   # subset gets absorbed\n"
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        c = parse_complex(text)
    assert c == from_facets([{0, 1, 2}])
    assert any(issubclass(w.category, FacetAbsorbedWarning) for w in caught)


def test_parse_bad_token():
    with pytest.raises(ValueError, match="line 2"):
        parse_complex("0 1\n0 !\n")


def test_parse_round_trip_on_corpus():
    for c in corpus(seed=16, count=40):
        assert parse_complex(format_complex(c)) == c


def test_band_complex_shapes():
    assert band_complex(2, 5).f_vector() == [1, 5, 10, 5]
    square = band_complex(1, 4)
    assert square.f_vector() == [1, 4, 4]
    b37 = band_complex(3, 7)
    assert b37.dim == 3 and len(b37.facets) == 7
    with pytest.raises(ValueError):
        band_complex(2, 4)
    with pytest.raises(ValueError):
        band_complex(0, 5)

from itertools import combinations, permutations

import pytest

from shellability.catalog import (
    build_entries,
    catalog_document,
    catalog_json,
    core_type,
)
from shellability.complexes import CapacityError, from_facets
from shellability.enumeration import (
    EnumerationTask,
    dim2_shellability_obstructions,
    edge_minimal,
    enumerate_complexes,
    enumerate_obstructions,
    generic_obstructions,
    triangle_cores,
    verify_coincidence,
    verify_edge_addition_closure,
)
from shellability.partition import band_complex
from shellability.properties import PropertyKind

SH = PropertyKind.SHELLABLE


def brute_edge_set_classes(n: int, no_isolated: bool) -> int:
    """Reference count of 1-dimensional classes via labeled edge sets."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for bits in range(1, 1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        covered = {v for e in edges for v in e}
        if no_isolated and len(covered) != n:
            continue
        key = min(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            for perm in permutations(range(n))
        )
        seen.add((key, len(covered)))
    return len(seen)


def test_enumerate_complexes_dimension_zero():
    assert len(enumerate_complexes(0, 3)) == 1
    assert enumerate_complexes(0, 3)[0].f_vector() == [1, 3]


def test_enumerate_complexes_dimension_one_counts():
    assert len(enumerate_complexes(1, 3)) == 2
    assert len(enumerate_complexes(1, 4)) == 7
    assert len(enumerate_complexes(1, 3)) == brute_edge_set_classes(3, no_isolated=True)
    assert len(enumerate_complexes(1, 4)) == brute_edge_set_classes(4, no_isolated=True)
    # with 0-facets allowed, smaller edge supports pad out with isolated vertices
    assert len(enumerate_complexes(1, 4, include_zero_facets=True)) == \
        brute_edge_set_classes(4, no_isolated=False)


def test_enumerate_complexes_guards():
    with pytest.raises(CapacityError):
        enumerate_complexes(3, 4)
    with pytest.raises(CapacityError):
        enumerate_complexes(2, 7)
    with pytest.raises(CapacityError):
        enumerate_complexes(1, 8)


def test_enumerate_complexes_all_have_exact_vertex_count_and_dim():
    for c in enumerate_complexes(2, 5, include_zero_facets=True):
        assert c.n_vertices == 5 and c.dim == 2
    for c in enumerate_complexes(1, 5):
        assert c.n_vertices == 5 and c.dim == 1


def test_triangle_cores_by_support():
    cores = triangle_cores(6)
    assert {s: len(v) for s, v in cores.items()} == {4: 0, 5: 7, 6: 2}
    reps = [from_facets(rep) for rep in cores[5]]
    assert any(r.is_isomorphic(band_complex(2, 5)) for r in reps)
    reps6 = [from_facets(rep) for rep in cores[6]]
    assert any(r.is_isomorphic(band_complex(2, 6)) for r in reps6)
    assert any(r.is_isomorphic(from_facets([{0, 1, 2}, {3, 4, 5}])) for r in reps6)


def test_dim0_and_dim1_obstructions(two_k2):
    assert enumerate_obstructions(EnumerationTask(0, SH)) == []
    found = enumerate_obstructions(EnumerationTask(1, SH))
    assert len(found) == 1 and found[0].is_isomorphic(two_k2)
    for prop in PropertyKind:
        found = enumerate_obstructions(EnumerationTask(1, prop))
        assert len(found) == 1 and found[0].is_isomorphic(two_k2)


def test_dim1_four_vertex_bound_suffices(two_k2):
    found = enumerate_obstructions(EnumerationTask(1, SH, max_vertices=4))
    assert len(found) == 1 and found[0].is_isomorphic(two_k2)


def test_generic_and_pruned_paths_agree_to_five():
    gen = {c.canonical_form() for c in generic_obstructions(2, 5, SH)}
    pruned = {c.canonical_form() for c in dim2_shellability_obstructions(5)}
    assert gen == pruned
    assert len(gen) == 14


def test_generic_and_pruned_paths_agree_to_six():
    gen = {c.canonical_form() for c in generic_obstructions(2, 6, SH)}
    pruned = {c.canonical_form() for c in dim2_shellability_obstructions(6)}
    assert gen == pruned
    assert len(gen) == 34


def test_pruning_lemmas_hold_post_hoc():
    """Every found obstruction is connected, has no 0-facets, and has at
    least two triangles; the search's pruning assumptions, re-checked."""
    for c in dim2_shellability_obstructions(6):
        assert c.connected()
        assert all(f.bit_count() >= 2 for f in c.facets)
        assert sum(1 for f in c.facets if f.bit_count() == 3) >= 2


def test_edge_minimality_flag(complex_1a, complex_2):
    assert edge_minimal(complex_1a)
    assert edge_minimal(complex_2)
    assert edge_minimal(band_complex(2, 5))
    with_extra = from_facets(list(complex_1a.facets) + [{0, 4}])
    assert not edge_minimal(with_extra)


def test_core_types(complex_1a, complex_2, delta5):
    assert core_type(complex_1a) == 1
    assert core_type(complex_2) == 2
    assert core_type(delta5) == 4
    apex = from_facets([{0, 1, 2}, {0, 3, 4}, {1, 2, 3}])
    assert core_type(apex) == 3


def test_verify_coincidence_low_dimensions():
    for dim in (0, 1):
        report = verify_coincidence(dim)
        assert report.ok
    report = verify_coincidence(2, max_vertices=6)
    assert report.ok and report.class_count == 34


def test_edge_addition_closure_small():
    report = verify_edge_addition_closure(6)
    assert report.ok
    assert report.obstructions == 34
    assert report.augmentations_checked > 60


def test_strong_mode_and_minimal_mode():
    strong = enumerate_obstructions(EnumerationTask(2, SH, "strong_obstructions", 6))
    minimal = enumerate_obstructions(EnumerationTask(2, SH, "edge_minimal_obstructions", 6))
    all6 = dim2_shellability_obstructions(6)
    assert {c.canonical_form() for c in strong} <= {c.canonical_form() for c in all6}
    by_type = {}
    for c in minimal:
        by_type.setdefault(core_type(c), []).append(c)
    assert {t: len(v) for t, v in sorted(by_type.items())} == {1: 3, 2: 1, 3: 5, 4: 2}


def test_catalog_entries_are_stable_and_labeled():
    entries = build_entries(dim2_shellability_obstructions(6))
    labels = sorted(e.label for e in entries if e.label)
    assert labels == ["1a", "1b", "1c", "2", "3a", "3b", "3c", "3d", "3e", "4a", "4b"]
    doc1 = catalog_json(catalog_document(entries, kind="test"))
    doc2 = catalog_json(catalog_document(build_entries(dim2_shellability_obstructions(6)), kind="test"))
    assert doc1 == doc2
    for e in entries:
        assert not e.shellable and not e.partitionable and not e.sequentially_cm
        assert e.obstruction == {"shellable": True, "partitionable": True, "scm": True}
        c = e.complex()
        assert c.canonical_form() == from_facets(
            [set(f) for f in e.facets]
        ).canonical_form()


def test_catalog_sorted_by_size():
    entries = build_entries(dim2_shellability_obstructions(6))
    keys = [(e.n_vertices, len(e.facets)) for e in entries]
    assert keys == sorted(keys)


def test_terminal_scan_worker_split_matches_single_thread():
    """Sharding the top-level scan across processes never changes the result."""
    from shellability.enumeration import _scan_level, _terminal_core_scan

    hereditary = {3: [((0b111),)]}
    for s in (4, 5):
        h, _ = _scan_level(hereditary, s)
        hereditary[s] = sorted(h)
    sources = [()] + [rep for reps in hereditary.values() for rep in reps]
    single = _terminal_core_scan(sources, 6, workers=1)
    split = _terminal_core_scan(sources, 6, workers=3)
    assert single == split
    # the min-degree pruned terminal scan agrees with the unpruned level scan
    _, plain_cores = _scan_level(hereditary, 6)
    assert single == sorted(plain_cores)
    assert len(single) == 2

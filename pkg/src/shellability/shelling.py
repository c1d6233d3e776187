"""Shellability of (possibly nonpure) complexes, with verifiable certificates.

A facet ordering is a shelling when every facet after the first meets the
union of the earlier ones in a pure subcomplex of codimension one.  The
equivalent working criterion used throughout is the restriction map

    R(F_i) = {v in F_i : F_i - v lies in the union of the earlier facets},

under which an ordering is a shelling iff no R(F_i) is contained in an
earlier facet.  Both formulations are implemented and verified against each
other on every call.

The decision procedure backtracks over dimension-nonincreasing orderings
only; a shellable complex always admits such a shelling (the rearrangement
property of shellings), so the restricted search is still exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import cache
from .complexes import (
    CANONICAL_VERTEX_CAP,
    DimensionError,
    SimplicialComplex,
    face_vertices,
    relabel_face,
    subsets_of,
)
from .homology import reduced_homology

_DECIDE_CACHE = cache.new_cache()


@dataclass(frozen=True)
class ShellingCertificate:
    """A shelling order together with its restriction sets, independently re-checkable."""

    ordering: tuple[int, ...]
    restriction_sets: tuple[int, ...]


@dataclass(frozen=True)
class ShellingDecision:
    shellable: bool
    certificate: Optional[ShellingCertificate] = None


def _restriction_map_check(ordering) -> tuple[bool, Optional[tuple[int, ...]]]:
    covered: set[int] = set()
    restrictions: list[int] = []
    for fct in ordering:
        r = 0
        for v in face_vertices(fct):
            if fct ^ (1 << v) in covered:
                r |= 1 << v
        if r in covered:
            # r sits inside an earlier facet: the ordering is not a shelling
            return False, None
        restrictions.append(r)
        covered.update(subsets_of(fct))
    return True, tuple(restrictions)


def _definitional_check(ordering) -> bool:
    for j in range(1, len(ordering)):
        fct = ordering[j]
        intersections = {fct & earlier for earlier in ordering[:j]}
        maximal = [
            m for m in intersections
            if not any(m != other and m & ~other == 0 for other in intersections)
        ]
        want = fct.bit_count() - 1
        if any(m.bit_count() != want for m in maximal):
            return False
    return True


def verify_shelling(c: SimplicialComplex, ordering) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Check a facet ordering; returns (is_shelling, restriction sets or None).

    Raises ValueError unless the ordering is a permutation of the facets.
    Runs the restriction-map criterion and the direct definition; the two are
    equivalent, so any disagreement is an internal error.
    """
    ordering = tuple(ordering)
    if sorted(ordering) != sorted(c.facets):
        raise ValueError("ordering is not a permutation of the facets")
    ok, restrictions = _restriction_map_check(ordering)
    assert ok == _definitional_check(ordering), "shelling criteria disagree"
    return ok, restrictions


def _search_ordering(c: SimplicialComplex) -> Optional[tuple[int, ...]]:
    """Exact backtracking search for a shelling, nonincreasing dimensions only."""
    facets = sorted(c.facets, key=lambda m: (-m.bit_count(), m))
    total = len(facets)
    chosen: list[int] = []
    covered: set[int] = set()
    used = [False] * total

    def extend() -> bool:
        if len(chosen) == total:
            return True
        max_size = max(facets[i].bit_count() for i in range(total) if not used[i])
        candidates = []
        for i in range(total):
            if used[i] or facets[i].bit_count() != max_size:
                continue
            fct = facets[i]
            r = 0
            for v in face_vertices(fct):
                if fct ^ (1 << v) in covered:
                    r |= 1 << v
            if r in covered:
                continue
            candidates.append((-r.bit_count(), fct, i))
        candidates.sort()
        for _, fct, i in candidates:
            used[i] = True
            chosen.append(fct)
            added = [s for s in subsets_of(fct) if s not in covered]
            covered.update(added)
            if extend():
                return True
            for s in added:
                covered.remove(s)
            chosen.pop()
            used[i] = False
        return False

    return tuple(chosen) if extend() else None


def _homology_prescreen_nonshellable(c: SimplicialComplex) -> bool:
    """True when homology already rules shellability out.

    A pure shellable complex has vanishing reduced homology below its
    dimension, and every pure skeleton of a shellable complex is shellable;
    so a nontrivial low group of any pure skeleton is a certificate of
    nonshellability.
    """
    if c.is_pure():
        return any(not reduced_homology(c, k).is_trivial() for k in range(0, c.dim))
    for i in range(1, c.dim + 1):
        skel = c.pure_skeleton(i)
        if any(not reduced_homology(skel, k).is_trivial() for k in range(0, i)):
            return True
    return False


def _decide_uncached(c: SimplicialComplex) -> tuple[bool, Optional[tuple[int, ...]]]:
    if c.is_pure() and not c.strongly_connected():
        return False, None
    if _homology_prescreen_nonshellable(c):
        return False, None
    ordering = _search_ordering(c)
    return ordering is not None, ordering


def _decide_search(c: SimplicialComplex) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Memoized exact decision for complexes the fast paths do not cover.

    Above the canonical-labeling cap the decision runs uncached; only the
    enumeration workloads rely on the memo, and those stay within the cap.
    """
    if c.n_vertices > CANONICAL_VERTEX_CAP:
        return _decide_uncached(c)
    canon = c.canonical_form()
    hit = _DECIDE_CACHE.get(canon)
    if hit is None:
        rep = SimplicialComplex(canon.facets, _union(canon.facets))
        hit = _decide_uncached(rep)
        cache.trim(_DECIDE_CACHE)
        _DECIDE_CACHE[canon] = hit
    verdict, canon_ordering = hit
    if canon_ordering is None:
        return verdict, None
    inverse = {new: old for old, new in c.canonical_map().items()}
    return verdict, tuple(relabel_face(m, inverse) for m in canon_ordering)


def _union(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def _attach_order(seen: int, edge_facets: list[int]) -> Optional[list[int]]:
    """Order edge facets so each one touches the part already seen."""
    remaining = sorted(edge_facets)
    out: list[int] = []
    while remaining:
        pick = next((e for e in remaining if e & seen), None)
        if pick is None:
            if seen == 0:
                pick = remaining[0]
            else:
                return None
        remaining.remove(pick)
        out.append(pick)
        seen |= pick
    return out


def _certificate(c: SimplicialComplex, ordering) -> ShellingCertificate:
    ok, restrictions = verify_shelling(c, ordering)
    assert ok, "constructed ordering failed verification"
    return ShellingCertificate(tuple(ordering), restrictions)


def is_shellable(c: SimplicialComplex) -> ShellingDecision:
    """Exact decision; ships a verified shelling order whenever the answer is yes.

    Low dimensions use structural criteria: everything of dimension <= 0 is
    shellable; a 1-dimensional complex is shellable iff the subcomplex
    generated by its edges is connected; a 2-dimensional complex is shellable
    iff that holds and its pure 2-skeleton is shellable.  Higher dimensions
    (and pure 2-skeletons themselves) go through the memoized search.
    """
    d = c.dim
    if d <= 0:
        return ShellingDecision(True, _certificate(c, c.facets))

    if d == 1:
        if not c.pure_skeleton(1).connected():
            return ShellingDecision(False)
        edges = [f for f in c.facets if f.bit_count() == 2]
        isolated = [f for f in c.facets if f.bit_count() == 1]
        ordering = _attach_order(0, edges) + sorted(isolated)
        return ShellingDecision(True, _certificate(c, ordering))

    if d == 2:
        pure2 = c.pure_skeleton(2)
        ok2, ordering2 = _decide_search(pure2)
        if not ok2 or not c.pure_skeleton(1).connected():
            return ShellingDecision(False)
        # the 2-faces of a 2-complex are exactly its 3-vertex facets
        order_triangles = list(ordering2)
        edge_facets = [f for f in c.facets if f.bit_count() == 2]
        tail = _attach_order(_union(order_triangles), edge_facets)
        assert tail is not None, "edge facets detached despite connected 1-skeleton"
        isolated = [f for f in c.facets if f.bit_count() == 1]
        ordering = order_triangles + tail + sorted(isolated)
        return ShellingDecision(True, _certificate(c, ordering))

    verdict, ordering = _decide_search(c)
    if not verdict:
        return ShellingDecision(False)
    return ShellingDecision(True, _certificate(c, ordering))


def shellable_by_search(c: SimplicialComplex) -> ShellingDecision:
    """Plain backtracking decision with no fast paths, prescreens or caching.

    Exists so the structural shortcuts can be validated against the generic
    search; prefer is_shellable everywhere else.
    """
    ordering = _search_ordering(c)
    if ordering is None:
        return ShellingDecision(False)
    return ShellingDecision(True, _certificate(c, ordering))


def fast_paths_agree(c: SimplicialComplex) -> bool:
    """Compare the dimension <= 2 criteria against the raw search (test support)."""
    if c.dim > 2:
        raise DimensionError("fast paths only exist for dimension <= 2")
    return is_shellable(c).shellable == shellable_by_search(c).shellable

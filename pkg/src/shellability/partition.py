"""Partitionability: tiling the face set by intervals, one per facet.

A complex is partitionable when its faces split into disjoint intervals
[tau_sigma, sigma], one for each facet sigma.  The decision is an exact-cover
search (items: every face plus one slot per facet; rows: the candidate
intervals), preceded by cheap filters:

* dimension <= 1 is decided structurally (0-dimensional complexes always
  partition; a 1-dimensional complex partitions iff at most one connected
  component of its edge part is a tree),
* two facets of dimension >= 1 whose codimension-one subfaces are all
  private force tau = empty twice, which is impossible,
* the interval sizes must be able to reach the face count at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from . import cache
from .complexes import (
    CANONICAL_VERTEX_CAP,
    CapacityError,
    SimplicialComplex,
    from_facets,
    relabel_face,
    subsets_of,
)

_PARTITION_CACHE = cache.new_cache()


@dataclass(frozen=True)
class PartitionCertificate:
    """facet -> interval bottom, as (facet, bottom) pairs sorted by facet."""

    assignment: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignment)


@dataclass(frozen=True)
class PartitionDecision:
    partitionable: bool
    certificate: Optional[PartitionCertificate] = None


def verify_partition(c: SimplicialComplex, assignment) -> bool:
    """True iff the facet -> bottom assignment tiles the face set exactly."""
    pairs = dict(assignment.items() if isinstance(assignment, Mapping) else assignment)
    facets = set(c.facets)
    if set(pairs) != facets:
        raise ValueError("assignment keys must be exactly the facets")
    for sigma, tau in pairs.items():
        if tau & ~sigma:
            raise ValueError("interval bottom must be a subset of its facet")
    seen: set[int] = set()
    for sigma, tau in pairs.items():
        lower = sigma & ~tau
        for extra in subsets_of(lower):
            eta = tau | extra
            if eta in seen:
                return False
            seen.add(eta)
    return seen == c.faces()


def _two_private_facets(c: SimplicialComplex) -> bool:
    """Two facets of dimension >= 1 whose codim-1 subfaces all lie in no other facet."""
    hits = 0
    for sigma in c.facets:
        if sigma.bit_count() < 2:
            continue
        others = [f for f in c.facets if f != sigma]
        private = True
        m = sigma
        while m:
            low = m & -m
            sub = sigma ^ low
            if any(sub & ~other == 0 for other in others):
                private = False
                break
            m ^= low
        if private:
            hits += 1
            if hits >= 2:
                return True
    return False


def _tree_components_of_edge_part(c: SimplicialComplex) -> int:
    """Number of connected components of the edge-generated part that are trees."""
    edges = c.faces_of_dim(1)
    if not edges:
        return 0
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        lo = e & -e
        a = lo.bit_length() - 1
        b = (e ^ lo).bit_length() - 1
        for v in (a, b):
            parent.setdefault(v, v)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comp_vertices: dict[int, int] = {}
    comp_edges: dict[int, int] = {}
    for v in parent:
        comp_vertices[find(v)] = comp_vertices.get(find(v), 0) + 1
    for e in edges:
        r = find((e & -e).bit_length() - 1)
        comp_edges[r] = comp_edges.get(r, 0) + 1
    return sum(1 for r, nv in comp_vertices.items() if comp_edges.get(r, 0) == nv - 1)


def _exact_cover_assignment(c: SimplicialComplex) -> Optional[tuple[tuple[int, int], ...]]:
    """Deterministic fewest-candidates-first exact cover over interval rows."""
    face_items = {("f", m) for m in c.faces()}
    items: dict[object, set] = {it: set() for it in face_items}
    for idx in range(len(c.facets)):
        items[("s", idx)] = set()
    rows: dict[tuple[int, int], list] = {}
    for idx, sigma in enumerate(c.facets):
        for tau in subsets_of(sigma):
            covered = [("s", idx)]
            lower = sigma & ~tau
            for extra in subsets_of(lower):
                covered.append(("f", tau | extra))
            key = (sigma, tau)
            rows[key] = covered
            for it in covered:
                items[it].add(key)

    solution: list[tuple[int, int]] = []

    def solve() -> bool:
        if not items:
            return True
        item = min(items, key=lambda it: (len(items[it]), it))
        if not items[item]:
            return False
        for row_key in sorted(items[item]):
            touched = rows[row_key]
            saved = {it: items.pop(it) for it in touched}
            pruned: list[tuple[object, tuple[int, int]]] = []
            for it, bucket in items.items():
                dead = [other for other in bucket if any(it2 in saved for it2 in rows[other])]
                for other in dead:
                    bucket.remove(other)
                    pruned.append((it, other))
            solution.append(row_key)
            if solve():
                return True
            solution.pop()
            for it, other in pruned:
                items[it].add(other)
            items.update(saved)
        return False

    if solve():
        return tuple(sorted(solution))
    return None


def is_partitionable(c: SimplicialComplex) -> PartitionDecision:
    """Exact decision with a re-checkable interval assignment on success."""
    d = c.dim
    if d <= 0:
        assignment = []
        first = True
        for sigma in c.facets:
            assignment.append((sigma, 0 if first else sigma))
            first = False
        return PartitionDecision(True, PartitionCertificate(tuple(assignment)))

    if d == 1:
        if _tree_components_of_edge_part(c) > 1:
            return PartitionDecision(False)
        # fall through to the exact cover for the actual certificate

    if c.n_vertices > CANONICAL_VERTEX_CAP:
        if d >= 2 and _two_private_facets(c):
            return PartitionDecision(False)
        if sum(1 << f.bit_count() for f in c.facets) < c.face_count():
            return PartitionDecision(False)
        assignment = _exact_cover_assignment(c)
        if assignment is None:
            return PartitionDecision(False)
        return PartitionDecision(True, PartitionCertificate(assignment))

    canon = c.canonical_form()
    hit = _PARTITION_CACHE.get(canon)
    if hit is None:
        rep = from_facets(canon.facets)
        if d >= 2 and _two_private_facets(rep):
            hit = (False, None)
        elif sum(1 << f.bit_count() for f in rep.facets) < rep.face_count():
            hit = (False, None)
        else:
            assignment = _exact_cover_assignment(rep)
            hit = (assignment is not None, assignment)
        cache.trim(_PARTITION_CACHE)
        _PARTITION_CACHE[canon] = hit
    verdict, canon_assignment = hit
    if canon_assignment is None:
        return PartitionDecision(verdict)
    inverse = {new: old for old, new in c.canonical_map().items()}
    pairs = tuple(sorted(
        (relabel_face(sigma, inverse), relabel_face(tau, inverse))
        for sigma, tau in canon_assignment
    ))
    return PartitionDecision(True, PartitionCertificate(pairs))


def band_complex(d: int, n: int) -> SimplicialComplex:
    """The cyclic band: facets {v_k, ..., v_{k+d}} with indices mod n.

    Requires n >= 2d + 1 so that consecutive facets overlap in exactly d
    vertices and the boundary structure does not degenerate.  For d = 2 these
    are the triangulated cylinders and Moebius bands.
    """
    if d < 1:
        raise ValueError("band dimension must be at least 1")
    if n < 2 * d + 1:
        raise ValueError(f"band on {n} vertices needs n >= {2 * d + 1}")
    if n > 64:
        raise CapacityError("at most 64 vertices")
    facets = []
    for k in range(n):
        m = 0
        for j in range(d + 1):
            m |= 1 << ((k + j) % n)
        facets.append(m)
    return from_facets(facets)

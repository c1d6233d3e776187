"""Obstructions, strong obstructions, and hereditary properties.

An obstruction to a property is a complex that fails the property while every
proper restriction satisfies it: the excluded minors of "hereditary" under
vertex restriction.  A strong obstruction additionally has every link of a
nonempty face satisfy the property, which makes strong obstructions the
excluded minors under restriction and link jointly.

For link-preserving properties (all three here) the strong-obstruction
condition collapses to three separate checks; the literal product-form
definition is also implemented so the collapse can be tested instead of
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .complexes import SimplicialComplex, face_vertices
from .properties import PropertyKind, satisfies


@dataclass(frozen=True)
class ObstructionReport:
    is_obstruction: bool
    is_strong: bool
    failing_restriction: Optional[int] = None  # W with the restriction failing the property
    failing_link: Optional[int] = None         # nonempty face whose link fails it


def _proper_subsets_desc(vertex_mask: int):
    """Proper subsets of the vertex set, largest first (deterministic)."""
    verts = face_vertices(vertex_mask)
    for drop in range(1, len(verts) + 1):
        for removed in combinations(verts, drop):
            w = vertex_mask
            for v in removed:
                w ^= 1 << v
            yield w


def obstruction_report(c: SimplicialComplex, prop: PropertyKind) -> ObstructionReport:
    """Full obstruction/strong-obstruction report for one complex."""
    if satisfies(c, prop):
        return ObstructionReport(False, False)
    for w in _proper_subsets_desc(c.vertices):
        if not satisfies(c.restriction(w), prop):
            return ObstructionReport(False, False, failing_restriction=w)
    # an obstruction; strong iff every link of a nonempty face satisfies the
    # property (sufficient because the property is link-preserving)
    for tau in sorted(c.faces(), key=lambda m: (m.bit_count(), m)):
        if tau == 0:
            continue
        if not satisfies(c.link(tau), prop):
            return ObstructionReport(True, False, failing_link=tau)
    return ObstructionReport(True, True)


def is_obstruction(c: SimplicialComplex, prop: PropertyKind) -> ObstructionReport:
    return obstruction_report(c, prop)


def is_strong_obstruction(c: SimplicialComplex, prop: PropertyKind) -> ObstructionReport:
    return obstruction_report(c, prop)


def is_obstruction_via_deletions(c: SimplicialComplex, prop: PropertyKind) -> bool:
    """Equivalent formulation by deleting nonempty vertex sets (test support)."""
    if satisfies(c, prop):
        return False
    verts = face_vertices(c.vertices)
    for drop in range(1, len(verts) + 1):
        for removed in combinations(verts, drop):
            u = 0
            for v in removed:
                u |= 1 << v
            if not satisfies(c.deletion(u), prop):
                return False
    return True


def strong_obstruction_by_definition(c: SimplicialComplex, prop: PropertyKind) -> bool:
    """The literal product-form definition of a strong obstruction.

    Quantifies jointly over restrictions W and faces tau of the restriction,
    excepting only the whole complex itself (W = V, tau = empty).  Used to
    validate the link-preserving simplification in obstruction_report.
    """
    if satisfies(c, prop):
        return False
    subsets = list(_proper_subsets_desc(c.vertices)) + [c.vertices]
    for w in subsets:
        restricted = c.restriction(w)
        for tau in sorted(restricted.faces(), key=lambda m: (m.bit_count(), m)):
            if w == c.vertices and tau == 0:
                continue
            if not satisfies(restricted.link(tau), prop):
                return False
    return True


def is_hereditary(c: SimplicialComplex, prop: PropertyKind) -> tuple[bool, Optional[int]]:
    """Whether every restriction (the complex included) satisfies the property."""
    if not satisfies(c, prop):
        return False, c.vertices
    for w in _proper_subsets_desc(c.vertices):
        if not satisfies(c.restriction(w), prop):
            return False, w
    return True, None


def hereditary_via_obstructions(c: SimplicialComplex, prop: PropertyKind) -> bool:
    """Characterisation: hereditary iff no restriction is an obstruction (test support)."""
    for w in list(_proper_subsets_desc(c.vertices)) + [c.vertices]:
        if obstruction_report(c.restriction(w), prop).is_obstruction:
            return False
    return True


def hereditary_via_strong_obstructions(c: SimplicialComplex, prop: PropertyKind) -> bool:
    """Characterisation through links: no link of any restriction is a strong obstruction.

    Valid for link-preserving properties only (all of PropertyKind is).
    """
    for w in list(_proper_subsets_desc(c.vertices)) + [c.vertices]:
        restricted = c.restriction(w)
        for tau in sorted(restricted.faces(), key=lambda m: (m.bit_count(), m)):
            if obstruction_report(restricted.link(tau), prop).is_strong:
                return False
    return True


def minimal_failing_restriction(c: SimplicialComplex, prop: PropertyKind) -> SimplicialComplex:
    """An inclusion-minimal restriction failing the property; it is an obstruction.

    Greedy descent dropping the lowest vertex whose removal keeps the
    restriction failing.  Because the property need not be hereditary, a
    single-vertex local minimum is re-verified with the full obstruction
    check, and the descent continues into any deeper failing restriction that
    check uncovers.  Raises ValueError when the complex satisfies the
    property.
    """
    if satisfies(c, prop):
        raise ValueError("complex satisfies the property; nothing fails")
    w = c.vertices
    while True:
        for v in face_vertices(w):
            smaller = w ^ (1 << v)
            if not satisfies(c.restriction(smaller), prop):
                w = smaller
                break
        else:
            report = obstruction_report(c.restriction(w), prop)
            if report.is_obstruction:
                return c.restriction(w)
            w = report.failing_restriction

"""Cohen-Macaulayness over the integers, via vanishing link homology.

A pure complex is Cohen-Macaulay when every link (the link of the empty face
is the complex itself) has reduced homology concentrated in its top
dimension.  A general complex is sequentially Cohen-Macaulay when all of its
pure skeletons are Cohen-Macaulay.  Both deciders return an explicit witness
on failure: a face whose link has a nonvanishing group below top dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import cache
from .complexes import CANONICAL_VERTEX_CAP, PurityError, SimplicialComplex, from_facets, relabel_face
from .homology import HomologyGroup, reduced_homology

_CM_CACHE = cache.new_cache()
_MISSING = object()


@dataclass(frozen=True)
class CMWitness:
    face: int
    degree: int
    group: HomologyGroup
    skeleton_dim: Optional[int] = None


@dataclass(frozen=True)
class CMReport:
    verdict: bool
    witness: Optional[CMWitness] = None


def _find_witness(rep: SimplicialComplex) -> Optional[tuple[int, int, HomologyGroup]]:
    faces = sorted(rep.faces(), key=lambda m: (m.bit_count(), m))
    if rep.strongly_connected():
        # links of large faces are small; scanning them first keeps the
        # homology cache hot and fails fast on deep defects
        faces.reverse()
    for tau in faces:
        link = rep.link(tau)
        for k in range(0, link.dim):
            group = reduced_homology(link, k)
            if not group.is_trivial():
                return tau, k, group
    return None


def is_cohen_macaulay(c: SimplicialComplex) -> CMReport:
    """Reisner-style decision for pure complexes; raises PurityError otherwise."""
    if not c.is_pure():
        raise PurityError("Cohen-Macaulayness is defined for pure complexes")
    if c.n_vertices > CANONICAL_VERTEX_CAP:
        found = _find_witness(c)
        if found is None:
            return CMReport(True)
        tau, k, group = found
        return CMReport(False, CMWitness(tau, k, group))
    canon = c.canonical_form()
    hit = _CM_CACHE.get(canon, _MISSING)
    if hit is _MISSING:
        hit = _find_witness(from_facets(canon.facets))
        cache.trim(_CM_CACHE)
        _CM_CACHE[canon] = hit
    if hit is None:
        return CMReport(True)
    tau, k, group = hit
    inverse = {new: old for old, new in c.canonical_map().items()}
    return CMReport(False, CMWitness(relabel_face(tau, inverse), k, group))


def is_sequentially_cm(c: SimplicialComplex) -> CMReport:
    """True iff every pure skeleton is Cohen-Macaulay ({∅} holds vacuously)."""
    for i in range(0, c.dim + 1):
        report = is_cohen_macaulay(c.pure_skeleton(i))
        if not report.verdict:
            w = report.witness
            return CMReport(False, CMWitness(w.face, w.degree, w.group, skeleton_dim=i))
    return CMReport(True)

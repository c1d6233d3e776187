"""Exhaustive, isomorph-free searches over small complexes.

Two layers live here.

The generic layer (enumerate_complexes) grows complexes facet by facet with
canonical-form rejection and no structural assumptions; it is feasible
through six vertices and serves as the self-check oracle.

The dimension-two obstruction search proper runs on the triangle cores of
candidate complexes.  For a two-dimensional obstruction, the edge facets only
influence connectivity of the 1-skeleton; its triangle set T must satisfy

    gen(T) is nonshellable, and the triangles inside any proper vertex
    subset generate a shellable complex,

because restrictions of an obstruction are shellable and a two-dimensional
complex is shellable exactly when its pure 2-skeleton is shellable and its
edge part is connected.  Vertices outside the triangle support are
impossible for the same reason (deleting one leaves the triangle set intact
and shellable, forcing the whole complex shellable).  Triangle sets with the
property above ("cores") are found by a level-wise search over the support
size: removing the full star of any vertex from a core leaves a triangle set
all of whose triangle restrictions are shellable, so cores on s vertices are
rebuilt from such sets on fewer vertices by attaching a new vertex star.

The vertex ceiling of seven is Wachs' classical bound for two-dimensional
minimally nonshellable complexes; the search relies on it only as a stop
level and reports the top stratum completing without truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from . import cache
from .complexes import (
    CanonicalForm,
    CapacityError,
    SimplicialComplex,
    from_facets,
)
from .obstruction import obstruction_report
from .properties import PropertyKind, satisfies
from .shelling import is_shellable

MAX_OBSTRUCTION_VERTICES = 7

_HSTAR_RAW = cache.new_cache()
_HSTAR_CANON = cache.new_cache()


# ---------------------------------------------------------------------------
# generic isomorph-free generation
# ---------------------------------------------------------------------------

def _sort_key(c: SimplicialComplex) -> tuple:
    canon = c.canonical_form()
    return (canon.n_vertices, len(c.facets), canon.facets)


def _grow_classes(seed: SimplicialComplex, n: int, additions) -> list[SimplicialComplex]:
    """All classes reachable from the seed by repeatedly adding one facet.

    ``additions(c)`` yields candidate facet masks within the n-vertex
    universe; duplicates are rejected through canonical forms, level by
    level, so each isomorphism class is visited once.
    """
    seen = {seed.canonical_form(): seed}
    frontier = [seed]
    while frontier:
        next_frontier = []
        for c in frontier:
            for add in additions(c, n):
                grown = from_facets(c.facets + (add,))
                key = grown.canonical_form()
                if key not in seen:
                    seen[key] = grown
                    next_frontier.append(grown)
        frontier = next_frontier
    return list(seen.values())


def _edge_candidates(c: SimplicialComplex, n: int) -> Iterable[int]:
    faces = c.faces()
    for a, b in combinations(range(n), 2):
        m = (1 << a) | (1 << b)
        if m not in faces:
            yield m


def _triangle_candidates(c: SimplicialComplex, n: int) -> Iterable[int]:
    facets = set(c.facets)
    for combo in combinations(range(n), 3):
        m = 0
        for v in combo:
            m |= 1 << v
        if m not in facets:
            yield m


def _pad_isolated(c: SimplicialComplex, n: int) -> SimplicialComplex:
    """Append isolated vertices (0-facets) until the complex sits on n vertices."""
    missing = n - c.n_vertices
    extra = []
    label = 0
    while missing:
        if not c.vertices & (1 << label):
            extra.append(1 << label)
            missing -= 1
        label += 1
    return from_facets(c.facets + tuple(extra)) if extra else c


def enumerate_complexes(
    dim: int, n: int, include_zero_facets: bool = False
) -> list[SimplicialComplex]:
    """Every isomorphism class of complexes of this dimension on exactly n vertices.

    By default every vertex must lie in a facet of positive dimension, so for
    dim = 1 this enumerates graphs without isolated vertices.  With
    include_zero_facets=True, leftover vertices are allowed as 0-facets
    (needed by the assumption-free obstruction cross-check).  Exhaustive
    generation is supported for dimensions 0..2; dimension 2 is capped at six
    vertices, past which the class count is out of reach for this generic
    path (the obstruction search has its own pruned pipeline for seven).
    """
    if dim < 0 or dim > 2:
        raise CapacityError("exhaustive generation covers dimensions 0..2")
    if n < 1 or n > MAX_OBSTRUCTION_VERTICES:
        raise CapacityError(f"vertex count must be 1..{MAX_OBSTRUCTION_VERTICES}")
    if dim == 2 and n > 6:
        raise CapacityError("generic dimension-2 generation is capped at 6 vertices")

    if dim == 0:
        return [from_facets([1 << i for i in range(n)])]

    if dim == 1:
        if n < 2:
            return []
        classes = _grow_classes(from_facets([0b11]), n, _edge_candidates)
    else:
        if n < 3:
            return []
        triangle_classes = _grow_classes(from_facets([0b111]), n, _triangle_candidates)
        classes = []
        for t in triangle_classes:
            classes.extend(_grow_classes(t, n, _edge_candidates))

    out = []
    seen: set[CanonicalForm] = set()
    for c in classes:
        if include_zero_facets:
            padded = _pad_isolated(c, n)
        elif c.n_vertices != n:
            continue
        else:
            padded = c
        key = padded.canonical_form()
        if key not in seen:
            seen.add(key)
            out.append(from_facets(key.facets))
    out.sort(key=_sort_key)
    return out


# ---------------------------------------------------------------------------
# triangle cores for the dimension-2 obstruction search
# ---------------------------------------------------------------------------

def _support(triangles: tuple[int, ...]) -> int:
    m = 0
    for t in triangles:
        m |= t
    return m


def _star_removed(triangles: tuple[int, ...], v: int) -> tuple[int, ...]:
    bit = 1 << v
    return tuple(t for t in triangles if not t & bit)


def _triangle_components(triangles: tuple[int, ...]) -> int:
    comps: list[int] = []
    for t in triangles:
        merged = t
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        rest.append(merged)
        comps = rest
    return len(comps)


def _hereditary_star_shellable(triangles: tuple[int, ...]) -> bool:
    """Every vertex-subset restriction of the triangle set generates a shellable complex.

    Restrictions here keep whole triangles only (the pure 2-skeleton of a
    restriction); lower-dimensional leftovers are irrelevant to this check.
    """
    if len(triangles) <= 1:
        return True
    hit = _HSTAR_RAW.get(triangles)
    if hit is not None:
        return hit
    if _triangle_components(triangles) > 1:
        verdict = False  # disconnected pure 2-complexes are never shellable
    else:
        c = from_facets(triangles)
        canon = c.canonical_form()
        verdict = _HSTAR_CANON.get(canon)
        if verdict is None:
            if not is_shellable(c).shellable:
                verdict = False
            else:
                verdict = all(
                    _hereditary_star_shellable(_star_removed(triangles, v))
                    for v in c.vertex_ids()
                )
            cache.trim(_HSTAR_CANON)
            _HSTAR_CANON[canon] = verdict
    cache.trim(_HSTAR_RAW)
    _HSTAR_RAW[triangles] = verdict
    return verdict


def _attachment_scan(
    xprime: tuple[int, ...], s: int
) -> Iterable[tuple[int, ...]]:
    """Attach a new vertex star to a smaller hereditarily shellable triangle set.

    ``xprime`` sits canonically on vertices 0..s'-1; the new vertex is s-1
    and the vertices s'..s-2 ("extras") must be covered by the attached
    triangles.  Yields raw candidate triangle sets on exactly s vertices that
    pass the per-vertex hereditary filter; the caller deduplicates.
    """
    s_prime = _support(xprime).bit_count()
    v_bit = 1 << (s - 1)
    pairs = [(1 << a) | (1 << b) for a, b in combinations(range(s - 1), 2)]
    extras = 0
    for w in range(s_prime, s - 1):
        extras |= 1 << w
    n_pairs = len(pairs)
    for dbits in range(1, 1 << n_pairs):
        cover = 0
        chosen = []
        bits = dbits
        idx = 0
        while bits:
            if bits & 1:
                cover |= pairs[idx]
                chosen.append(pairs[idx] | v_bit)
            bits >>= 1
            idx += 1
        if cover & extras != extras:
            continue
        candidate = tuple(sorted(xprime + tuple(chosen)))
        if all(
            _hereditary_star_shellable(_star_removed(candidate, u))
            for u in range(s - 1)
        ):
            yield candidate


def _scan_level(
    hereditary_by_support: dict[int, list[tuple[int, ...]]], s: int
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """One support level: returns (new hereditary classes, new cores)."""
    seen: set[CanonicalForm] = set()
    hereditary: list[tuple[int, ...]] = []
    cores: list[tuple[int, ...]] = []
    sources: list[tuple[int, ...]] = [()]
    for s_prime in sorted(hereditary_by_support):
        if 0 < s_prime <= s - 1:
            sources.extend(hereditary_by_support[s_prime])
    for xprime in sources:
        for candidate in _attachment_scan(xprime, s):
            c = from_facets(candidate)
            key = c.canonical_form()
            if key in seen:
                continue
            seen.add(key)
            rep = key.facets
            if is_shellable(from_facets(rep)).shellable:
                # shellable + the per-vertex filter already implies hereditary
                assert _hereditary_star_shellable(rep)
                hereditary.append(rep)
            else:
                cores.append(rep)
    return hereditary, cores


class _PairTables:
    """Shared per-level tables over the subsets of vertex pairs below the new vertex."""

    def __init__(self, s: int):
        self.s = s
        self.pairs = [(1 << a) | (1 << b) for a, b in combinations(range(s - 1), 2)]
        n = len(self.pairs)
        self.n_pairs = n
        self.at_vertex = [
            sum(1 << i for i, p in enumerate(self.pairs) if p & (1 << u))
            for u in range(s - 1)
        ]
        # vertex cover of each pair subset, built incrementally
        cover = [0] * (1 << n)
        for d in range(1, 1 << n):
            low = d & -d
            cover[d] = cover[d ^ low] | self.pairs[low.bit_length() - 1]
        self.cover = cover
        # connectivity of the pair graph (pairs as edges, shared vertices join)
        connected = bytearray(1 << n)
        for d in range(1, 1 << n):
            components: list[int] = []
            bits = d
            while bits:
                low = bits & -bits
                bits ^= low
                merged = self.pairs[low.bit_length() - 1]
                rest = []
                for comp in components:
                    if comp & merged:
                        merged |= comp
                    else:
                        rest.append(comp)
                rest.append(merged)
                components = rest
            connected[d] = len(components) == 1
        self.connected = connected


_PAIR_TABLES: dict[int, _PairTables] = {}


def _pair_tables(s: int) -> _PairTables:
    if s not in _PAIR_TABLES:
        _PAIR_TABLES[s] = _PairTables(s)
    return _PAIR_TABLES[s]


def _face_pair_mask(xprime: tuple[int, ...], tables: _PairTables) -> int:
    fm = 0
    for i, p in enumerate(tables.pairs):
        if any(p & ~t == 0 for t in xprime):
            fm |= 1 << i
    return fm


def _cone_extension_shellable(d: int, face_mask: int, tables: _PairTables) -> bool:
    """Sound shellability test for a shellable base plus one new vertex star.

    Builds (implicitly) a shelling that runs through the base first and then
    attaches the new vertex's triangles: a triangle over a face pair is
    addable first or when it shares an endpoint with an earlier pair, one
    over a non-face pair once both endpoints have been touched.  Activation
    only ever grows, so the greedy closure placing everything proves the
    whole complex shellable.  A False only means "not settled this way".
    """
    todo = d
    touched = 0
    first = True
    pairs = tables.pairs
    while todo:
        progress = False
        bits = todo
        while bits:
            low = bits & -bits
            bits ^= low
            i = low.bit_length() - 1
            pm = pairs[i]
            if face_mask >> i & 1:
                ok = first or pm & touched
            else:
                ok = not first and pm & touched == pm
            if ok:
                todo ^= low
                touched |= pm
                first = False
                progress = True
        if not progress:
            return False
    return True


def _terminal_core_scan(
    sources: list[tuple[int, ...]], s: int, workers: int = 1
) -> list[tuple[int, ...]]:
    """Find the cores on exactly s vertices; hereditary classes are not emitted.

    Restricting the attached star to a minimum-degree vertex is complete for
    cores (every core has one, and removing any vertex star of a core leaves
    a hereditarily shellable set), and lets two cheap certificates discard
    provably shellable candidates before the expensive exact checks.
    """
    if workers > 1 and len(sources) > 1:
        import multiprocessing

        chunks = [sources[i::workers] for i in range(workers) if sources[i::workers]]
        with multiprocessing.Pool(len(chunks)) as pool:
            partial = pool.starmap(_terminal_core_scan, [(chunk, s) for chunk in chunks])
        merged: set[tuple[int, ...]] = set()
        for part in partial:
            merged.update(part)
        # re-deduplicate across chunks by canonical form
        seen: set[CanonicalForm] = set()
        out = []
        for rep in sorted(merged):
            key = from_facets(rep).canonical_form()
            if key not in seen:
                seen.add(key)
                out.append(key.facets)
        return sorted(out)
    tables = _pair_tables(s)
    pairs = tables.pairs
    n_pairs = tables.n_pairs
    cover = tables.cover
    connected = tables.connected
    at_vertex = tables.at_vertex
    v_bit = 1 << (s - 1)

    seen: set[CanonicalForm] = set()
    cores: list[tuple[int, ...]] = []
    for xprime in sources:
        s_prime = _support(xprime).bit_count()
        extras = 0
        for w in range(s_prime, s - 1):
            extras |= 1 << w
        face_mask = _face_pair_mask(xprime, tables)
        deg = [sum(1 for t in xprime if t >> u & 1) for u in range(s - 1)]
        for d in range(1, 1 << n_pairs):
            if cover[d] & extras != extras:
                continue
            k = d.bit_count()
            if any(deg[u] + (d & at_vertex[u]).bit_count() < k for u in range(s - 1)):
                continue  # the new vertex would not have minimum degree
            if d & ~face_mask == 0 and connected[d]:
                continue  # shellable: connected star along base faces
            if _cone_extension_shellable(d, face_mask, tables):
                continue
            candidate = tuple(sorted(
                xprime + tuple(pairs[i] | v_bit for i in range(n_pairs) if d >> i & 1)
            ))
            if not all(
                _hereditary_star_shellable(_star_removed(candidate, u))
                for u in range(s - 1)
            ):
                continue
            c = from_facets(candidate)
            key = c.canonical_form()
            if key in seen:
                continue
            seen.add(key)
            if not is_shellable(from_facets(key.facets)).shellable:
                cores.append(key.facets)
    return sorted(cores)


_CORES_MEMO: dict[int, dict[int, list[tuple[int, ...]]]] = {}


def triangle_cores(max_vertices: int = MAX_OBSTRUCTION_VERTICES, workers: int = 1) -> dict[int, list[tuple[int, ...]]]:
    """Nonshellable triangle sets all of whose proper triangle restrictions shell.

    Returned per support size, each core as its canonical facet tuple.  These
    are exactly the possible pure 2-skeletons of two-dimensional obstructions
    to shellability.  Levels are scanned by support size; the top level only
    needs the cores themselves, which admits much stronger pruning.
    """
    if max_vertices > MAX_OBSTRUCTION_VERTICES:
        raise CapacityError(f"core search is bounded at {MAX_OBSTRUCTION_VERTICES} vertices")
    if max_vertices in _CORES_MEMO:
        return _CORES_MEMO[max_vertices]
    hereditary_by_support: dict[int, list[tuple[int, ...]]] = {3: [((0b111),)]}
    cores_by_support: dict[int, list[tuple[int, ...]]] = {}
    for s in range(4, max_vertices + 1):
        if s == MAX_OBSTRUCTION_VERTICES:
            sources: list[tuple[int, ...]] = [()]
            for s_prime in sorted(hereditary_by_support):
                sources.extend(hereditary_by_support[s_prime])
            cores_by_support[s] = _terminal_core_scan(sources, s, workers)
        else:
            hereditary, cores = _scan_level(hereditary_by_support, s)
            hereditary_by_support[s] = sorted(hereditary)
            cores_by_support[s] = sorted(cores)
    _CORES_MEMO[max_vertices] = cores_by_support
    return cores_by_support


# ---------------------------------------------------------------------------
# obstruction enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnumerationTask:
    dimension: int
    property: PropertyKind = PropertyKind.SHELLABLE
    mode: str = "obstructions"  # | strong_obstructions | edge_minimal_obstructions
    max_vertices: Optional[int] = None

    def resolved_max_vertices(self) -> int:
        if self.max_vertices is not None:
            if not 1 <= self.max_vertices <= MAX_OBSTRUCTION_VERTICES:
                raise CapacityError(
                    f"max_vertices must be 1..{MAX_OBSTRUCTION_VERTICES}"
                )
            return self.max_vertices
        return {0: 7, 1: 6, 2: 7}[self.dimension]

    def __post_init__(self):
        if self.dimension not in (0, 1, 2):
            raise CapacityError("obstruction enumeration covers dimensions 0..2")
        if self.mode not in ("obstructions", "strong_obstructions", "edge_minimal_obstructions"):
            raise ValueError(f"unknown mode {self.mode!r}")


def _non_face_pairs(c: SimplicialComplex) -> list[int]:
    faces = c.faces()
    out = []
    for a, b in combinations(c.vertex_ids(), 2):
        m = (1 << a) | (1 << b)
        if m not in faces:
            out.append(m)
    return out


_DIM2_MEMO: dict[int, list[SimplicialComplex]] = {}


def dim2_shellability_obstructions(max_vertices: int = MAX_OBSTRUCTION_VERTICES, workers: int = 1) -> list[SimplicialComplex]:
    """All 2-dimensional obstructions to shellability, one canonical rep per class.

    Core search plus edge augmentation: every obstruction's facets are its
    triangle core plus edge facets on the same vertices, so augmenting each
    core with every subset of its non-face pairs and filtering with the
    direct obstruction check is exhaustive.
    """
    if max_vertices in _DIM2_MEMO:
        return list(_DIM2_MEMO[max_vertices])
    results: dict[CanonicalForm, SimplicialComplex] = {}
    checked: set[CanonicalForm] = set()
    for s, cores in sorted(triangle_cores(max_vertices, workers).items()):
        for core in cores:
            base = from_facets(core)
            pairs = _non_face_pairs(base)
            for ebits in range(1 << len(pairs)):
                extra = tuple(p for i, p in enumerate(pairs) if ebits >> i & 1)
                candidate = from_facets(core + extra)
                key = candidate.canonical_form()
                if key in checked:
                    continue
                checked.add(key)
                if obstruction_report(candidate, PropertyKind.SHELLABLE).is_obstruction:
                    results[key] = from_facets(key.facets)
    out = sorted(results.values(), key=_sort_key)
    _DIM2_MEMO[max_vertices] = out
    return list(out)


def edge_minimal(c: SimplicialComplex) -> bool:
    """No 1-dimensional facet can be dropped while remaining an obstruction.

    Vacuously true for pure complexes.  Only meaningful when the complex is a
    2-dimensional obstruction to shellability.
    """
    for e in c.facets:
        if e.bit_count() != 2:
            continue
        reduced = from_facets(tuple(f for f in c.facets if f != e))
        if obstruction_report(reduced, PropertyKind.SHELLABLE).is_obstruction:
            return False
    return True


def generic_obstructions(dim: int, max_vertices: int, prop: PropertyKind) -> list[SimplicialComplex]:
    """Assumption-free path: enumerate every class outright and filter.

    Much slower than the pruned pipeline but free of structural reasoning;
    the two are asserted to agree wherever this one is feasible.
    """
    out = []
    for n in range(1, max_vertices + 1):
        if dim == 2 and n > 6:
            raise CapacityError("generic path capped at 6 vertices in dimension 2")
        for c in enumerate_complexes(dim, n, include_zero_facets=True):
            if obstruction_report(c, prop).is_obstruction:
                out.append(c)
    out.sort(key=_sort_key)
    return out


def enumerate_obstructions(task: EnumerationTask, workers: int = 1) -> list[SimplicialComplex]:
    """Complete list of obstruction classes for the task, canonical reps, sorted.

    For partitionability and sequential Cohen-Macaulayness in dimension two,
    the list starts from the shellability obstructions: shellability implies
    both properties, so once every shellability obstruction is verified to be
    an obstruction to the weaker property too (checked directly here, never
    assumed), a minimal-failing-restriction argument shows the sets must
    coincide: any obstruction set difference would produce an obstruction to
    shellability satisfying the weaker property.
    """
    n_max = task.resolved_max_vertices()
    if task.dimension <= 1:
        base = generic_obstructions(task.dimension, n_max, task.property)
    elif task.property is PropertyKind.SHELLABLE:
        base = dim2_shellability_obstructions(n_max, workers)
    else:
        base = dim2_shellability_obstructions(n_max, workers)
        for c in base:
            report = obstruction_report(c, task.property)
            if not report.is_obstruction:
                raise RuntimeError(
                    f"shellability obstruction is not an obstruction to {task.property}: {c!r}"
                )

    if task.mode == "strong_obstructions":
        return [c for c in base if obstruction_report(c, task.property).is_strong]
    if task.mode == "edge_minimal_obstructions":
        if task.dimension != 2:
            raise ValueError("edge-minimality is a 2-dimensional notion")
        return [c for c in base if edge_minimal(c)]
    return base


# ---------------------------------------------------------------------------
# closure and coincidence reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeAdditionReport:
    obstructions: int
    augmentations_checked: int
    augmentation_failures: tuple[str, ...]
    reduction_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.augmentation_failures and not self.reduction_failures


def _contains_edge_minimal(c: SimplicialComplex) -> bool:
    """Some subset of edge facets can be dropped to leave an edge-minimal obstruction."""
    if edge_minimal(c):
        return True
    for e in c.facets:
        if e.bit_count() != 2:
            continue
        reduced = from_facets(tuple(f for f in c.facets if f != e))
        if obstruction_report(reduced, PropertyKind.SHELLABLE).is_obstruction:
            if _contains_edge_minimal(reduced):
                return True
    return False


def verify_edge_addition_closure(max_vertices: int = MAX_OBSTRUCTION_VERTICES) -> EdgeAdditionReport:
    """Edge additions preserve obstructions, and every obstruction reduces to an edge-minimal one."""
    catalog = dim2_shellability_obstructions(max_vertices)
    known = {c.canonical_form() for c in catalog}
    checked = 0
    augmentation_failures = []
    reduction_failures = []
    for c in catalog:
        for pair in _non_face_pairs(c):
            grown = from_facets(c.facets + (pair,))
            checked += 1
            if not obstruction_report(grown, PropertyKind.SHELLABLE).is_obstruction:
                augmentation_failures.append(f"{c!r} + {pair:#x}")
            elif grown.canonical_form() not in known:
                augmentation_failures.append(f"{c!r} + {pair:#x} left the catalog")
        if not _contains_edge_minimal(c):
            reduction_failures.append(repr(c))
    return EdgeAdditionReport(
        obstructions=len(catalog),
        augmentations_checked=checked,
        augmentation_failures=tuple(augmentation_failures),
        reduction_failures=tuple(reduction_failures),
    )


@dataclass(frozen=True)
class CoincidenceReport:
    dimension: int
    class_count: int
    sets_identical: bool
    witness_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.sets_identical and not self.witness_failures


def verify_coincidence(dim: int, max_vertices: Optional[int] = None) -> CoincidenceReport:
    """Obstruction sets for all three properties coincide in this dimension.

    Also re-checks, obstruction by obstruction, that each shellability
    obstruction fails the two weaker properties outright.
    """
    tasks = {
        prop: EnumerationTask(dim, prop, "obstructions", max_vertices)
        for prop in PropertyKind
    }
    sets = {
        prop: {c.canonical_form() for c in enumerate_obstructions(task)}
        for prop, task in tasks.items()
    }
    identical = (
        sets[PropertyKind.SHELLABLE] == sets[PropertyKind.PARTITIONABLE] == sets[PropertyKind.SEQUENTIALLY_CM]
    )
    failures = []
    for key in sorted(sets[PropertyKind.SHELLABLE]):
        c = from_facets(key.facets)
        for prop in (PropertyKind.PARTITIONABLE, PropertyKind.SEQUENTIALLY_CM):
            if satisfies(c, prop):
                failures.append(f"{c!r} satisfies {prop.value}")
    return CoincidenceReport(
        dimension=dim,
        class_count=len(sets[PropertyKind.SHELLABLE]),
        sets_identical=identical,
        witness_failures=tuple(failures),
    )

"""Finite abstract simplicial complexes over a small vertex universe.

A face is encoded as an integer bitmask: bit v set means vertex v is in the
face.  The empty face is ``0`` and has dimension -1.  A complex is stored by
its facets (the inclusion-maximal faces); every other face is derived on
demand.  All operations are pure and every value is immutable after
construction, so instances can be shared freely.

Vertex ids must be below 64.  Everything this library enumerates lives on at
most nine vertices; the cap simply keeps all face arithmetic on machine-word
bitmasks.
"""

from __future__ import annotations

import warnings
from itertools import permutations, product
from typing import Iterable, Iterator, NamedTuple, Union

VERTEX_CAP = 64
CANONICAL_VERTEX_CAP = 9

FaceLike = Union[int, Iterable[int]]


class CapacityError(ValueError):
    """A vertex id or vertex count exceeds what the encoding supports."""


class InvalidFaceError(ValueError):
    """A face argument is not a face of the complex in question."""


class DimensionError(ValueError):
    """The operation is only defined for complexes of another dimension."""


class PurityError(ValueError):
    """The operation requires a pure complex."""


class FacetAbsorbedWarning(UserWarning):
    """A parsed facet line was a subset of another and got absorbed."""


def face(vertices: FaceLike) -> int:
    """Build a face bitmask from an iterable of vertex ids (or pass a mask through)."""
    if isinstance(vertices, int):
        mask = vertices
        if mask < 0 or mask >> VERTEX_CAP:
            raise CapacityError(f"face mask out of range: {vertices!r}")
        return mask
    mask = 0
    for v in vertices:
        if not 0 <= v < VERTEX_CAP:
            raise CapacityError(f"vertex id {v} outside 0..{VERTEX_CAP - 1}")
        mask |= 1 << v
    return mask


def face_vertices(mask: int) -> tuple[int, ...]:
    """Sorted vertex ids of a face mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def face_dim(mask: int) -> int:
    return mask.bit_count() - 1


def subsets_of(mask: int) -> Iterator[int]:
    """All subsets of a face mask, the empty face included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _facet_sort_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


class CanonicalForm(NamedTuple):
    """Isomorphism-class key: two complexes are isomorphic iff these compare equal.

    ``facets`` is the facet list relabelled onto ``0..n_vertices-1`` and
    minimised lexicographically among all relabelings compatible with an
    iterated vertex-colour refinement (the refinement is itself an
    isomorphism invariant, so the restricted minimum still separates
    isomorphism classes exactly; this is cross-checked against a brute-force
    permutation oracle in the test suite).
    """

    n_vertices: int
    facets: tuple[int, ...]


class SimplicialComplex:
    """An antichain of facets over the vertex set they cover.

    The vertex universe is always exactly the union of the facets; the only
    complex with no vertices is ``{∅}`` (facet list ``(0,)``), and the void
    complex without any face at all is deliberately unrepresentable.
    """

    __slots__ = ("facets", "vertices", "_faces", "_faces_by_dim", "_canon", "_canon_map")

    facets: tuple[int, ...]
    vertices: int

    def __init__(self, facets: tuple[int, ...], vertices: int):
        # Internal: use from_facets(), which normalises to an antichain.
        self.facets = facets
        self.vertices = vertices
        self._faces = None
        self._faces_by_dim = None
        self._canon = None
        self._canon_map = None

    # -- basic structure ---------------------------------------------------

    @property
    def dim(self) -> int:
        return self.facets[-1].bit_count() - 1

    @property
    def n_vertices(self) -> int:
        return self.vertices.bit_count()

    def vertex_ids(self) -> tuple[int, ...]:
        return face_vertices(self.vertices)

    def is_pure(self) -> bool:
        return self.facets[0].bit_count() == self.facets[-1].bit_count()

    def faces(self) -> frozenset[int]:
        """Every face of the complex, the empty face included."""
        if self._faces is None:
            seen = set()
            for fct in self.facets:
                for sub in subsets_of(fct):
                    seen.add(sub)
            self._faces = frozenset(seen)
        return self._faces

    def faces_of_dim(self, k: int) -> list[int]:
        """Sorted list of k-dimensional faces (k = -1 gives ``[0]``)."""
        if self._faces_by_dim is None:
            by_dim: dict[int, list[int]] = {}
            for f in self.faces():
                by_dim.setdefault(f.bit_count() - 1, []).append(f)
            for bucket in by_dim.values():
                bucket.sort()
            self._faces_by_dim = by_dim
        return list(self._faces_by_dim.get(k, []))

    def has_face(self, mask: int) -> bool:
        return any(mask & ~fct == 0 for fct in self.facets)

    def f_vector(self) -> list[int]:
        """Face counts indexed from dimension -1, so it always starts with 1."""
        return [len(self.faces_of_dim(k)) for k in range(-1, self.dim + 1)]

    def face_count(self) -> int:
        return len(self.faces())

    # -- derived complexes -------------------------------------------------

    def restriction(self, within: FaceLike) -> "SimplicialComplex":
        """Faces contained in the given vertex set; ids outside V are ignored."""
        w = face(within)
        return from_facets([fct & w for fct in self.facets])

    def deletion(self, removed: FaceLike) -> "SimplicialComplex":
        """Restriction to the complement vertex set."""
        return self.restriction(self.vertices & ~face(removed))

    def link(self, tau: FaceLike) -> "SimplicialComplex":
        t = face(tau)
        if not self.has_face(t):
            raise InvalidFaceError(f"{face_vertices(t)} is not a face of the complex")
        return from_facets([fct & ~t for fct in self.facets if fct & t == t])

    def pure_skeleton(self, i: int) -> "SimplicialComplex":
        """The subcomplex generated by all i-dimensional faces.

        For i above the dimension there are no such faces and the result is
        the minimal complex {∅}; callers iterating skeleton dimensions never
        have to guard the top end.
        """
        return from_facets(self.faces_of_dim(i))

    # -- connectivity ------------------------------------------------------

    def connected(self) -> bool:
        """Connectivity of the 1-skeleton ({∅} and single vertices count as connected)."""
        if self.vertices == 0:
            return True
        adjacency = {v: 1 << v for v in face_vertices(self.vertices)}
        for e in self.faces_of_dim(1):
            a, b = face_vertices(e)
            adjacency[a] |= e
            adjacency[b] |= e
        start = self.vertices & -self.vertices
        reached = start
        frontier = start
        while frontier:
            grown = 0
            for v in face_vertices(frontier):
                grown |= adjacency[v]
            frontier = grown & ~reached
            reached |= grown
        return reached == self.vertices

    def strongly_connected(self) -> bool:
        """Facet connectivity through codimension-one intersections (pure input only)."""
        if not self.is_pure():
            raise PurityError("strong connectivity is defined for pure complexes")
        k = self.facets[0].bit_count()
        m = len(self.facets)
        if m <= 1:
            return True
        reached = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(m):
                if j not in reached and (self.facets[i] & self.facets[j]).bit_count() == k - 1:
                    reached.add(j)
                    stack.append(j)
        return len(reached) == m

    # -- dimension-two edge bookkeeping -------------------------------------

    def edge_classification(self) -> dict[int, str]:
        """Label every edge 'nonboundary' (in two or more 2-facets) or 'boundary'.

        An edge in no 2-facet at all is a boundary edge.  Only defined in
        dimension two.
        """
        if self.dim != 2:
            raise DimensionError("edge classification requires a 2-dimensional complex")
        two_facets = [f for f in self.facets if f.bit_count() == 3]
        out = {}
        for e in self.faces_of_dim(1):
            count = sum(1 for f in two_facets if e & ~f == 0)
            out[e] = "nonboundary" if count >= 2 else "boundary"
        return out

    def nonboundary_edges(self) -> frozenset[int]:
        return frozenset(e for e, kind in self.edge_classification().items() if kind == "nonboundary")

    # -- isomorphism ---------------------------------------------------------

    def canonical_form(self) -> CanonicalForm:
        if self._canon is None:
            self._canon, self._canon_map = _canonicalize(self.facets, self.vertices)
        return self._canon

    def canonical_map(self) -> dict[int, int]:
        """Vertex relabeling (original id -> canonical id) realising canonical_form()."""
        if self._canon is None:
            self.canonical_form()
        return dict(self._canon_map)

    def canonical_copy(self) -> "SimplicialComplex":
        return from_canonical_form(self.canonical_form())

    def is_isomorphic(self, other: "SimplicialComplex") -> bool:
        return self.canonical_form() == other.canonical_form()

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        return from_facets([relabel_face(fct, mapping) for fct in self.facets])

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        if self.facets == (0,):
            return "SimplicialComplex({∅})"
        inner = ", ".join("{" + ",".join(map(str, face_vertices(f))) + "}" for f in self.facets)
        return f"SimplicialComplex({inner})"


def from_facets(candidates: Iterable[FaceLike]) -> SimplicialComplex:
    """The complex generated by the candidate faces.

    Non-maximal candidates are absorbed.  An empty candidate list yields the
    minimal complex {∅}.
    """
    masks = sorted({face(c) for c in candidates}, key=_facet_sort_key, reverse=True)
    kept: list[int] = []
    for m in masks:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    if not kept:
        kept = [0]
    kept.sort(key=_facet_sort_key)
    vertices = 0
    for m in kept:
        vertices |= m
    return SimplicialComplex(tuple(kept), vertices)


def from_canonical_form(canon: CanonicalForm) -> SimplicialComplex:
    return from_facets(canon.facets)


def relabel_face(mask: int, mapping: dict[int, int]) -> int:
    out = 0
    for v in face_vertices(mask):
        out |= 1 << mapping[v]
    return out


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

_CANON_CACHE: dict[tuple[int, ...], tuple[CanonicalForm, tuple[tuple[int, int], ...]]] = {}
_CANON_CACHE_LIMIT = 400_000


def _refine_colors(n: int, facet_bits: list[tuple[int, ...]]) -> list[int]:
    """Iterated colour refinement over the vertex-facet incidence structure."""
    sizes = [len(b) for b in facet_bits]
    incident: list[list[int]] = [[] for _ in range(n)]
    for idx, bits in enumerate(facet_bits):
        for v in bits:
            incident[v].append(idx)
    colors = [0] * n
    # initial colour: multiset of incident facet sizes
    sig0 = [tuple(sorted(sizes[i] for i in incident[v])) for v in range(n)]
    order = sorted(set(sig0))
    colors = [order.index(s) for s in sig0]
    while True:
        sigs = []
        for v in range(n):
            local = sorted(
                (sizes[i], tuple(sorted(colors[w] for w in facet_bits[i] if w != v)))
                for i in incident[v]
            )
            sigs.append((colors[v], tuple(local)))
        order = sorted(set(sigs))
        new_colors = [order.index(s) for s in sigs]
        if new_colors == colors:
            return colors
        colors = new_colors


def _canonicalize(facets: tuple[int, ...], vertices: int) -> tuple[CanonicalForm, tuple[tuple[int, int], ...]]:
    cached = _CANON_CACHE.get(facets)
    if cached is not None:
        return cached

    verts = face_vertices(vertices)
    n = len(verts)
    if n > CANONICAL_VERTEX_CAP:
        raise CapacityError(
            f"canonical labeling supports at most {CANONICAL_VERTEX_CAP} vertices, got {n}"
        )
    compact = {v: i for i, v in enumerate(verts)}
    facet_bits = [tuple(compact[v] for v in face_vertices(m)) for m in facets]

    if n == 0:
        result = (CanonicalForm(0, (0,)), ())
    else:
        colors = _refine_colors(n, facet_bits)
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        blocks = [classes[c] for c in sorted(classes)]
        offsets = []
        start = 0
        for b in blocks:
            offsets.append(start)
            start += len(b)

        # facets grouped by size so each candidate key only sorts within groups
        size_groups: list[list[int]] = []
        for idx in range(len(facet_bits)):
            if idx == 0 or len(facet_bits[idx]) != len(facet_bits[idx - 1]):
                size_groups.append([idx])
            else:
                size_groups[-1].append(idx)

        best_key = None
        best_label = None
        label = [0] * n
        for choice in product(*(permutations(b) for b in blocks)):
            for block_perm, off in zip(choice, offsets):
                for pos, v in enumerate(block_perm):
                    label[v] = off + pos
            key_parts: list[int] = []
            for group in size_groups:
                vals = []
                for idx in group:
                    m = 0
                    for v in facet_bits[idx]:
                        m |= 1 << label[v]
                    vals.append(m)
                vals.sort()
                key_parts.extend(vals)
            key = tuple(key_parts)
            if best_key is None or key < best_key:
                best_key = key
                best_label = list(label)
        mapping = tuple((verts[v], best_label[v]) for v in range(n))
        result = (CanonicalForm(n, best_key), mapping)

    if len(_CANON_CACHE) >= _CANON_CACHE_LIMIT:
        _CANON_CACHE.clear()
    _CANON_CACHE[facets] = result
    return result


# ---------------------------------------------------------------------------
# facet-list text format
# ---------------------------------------------------------------------------

def parse_complex(text: str) -> SimplicialComplex:
    """Read the facet-list interchange format.

    One facet per line, vertices as whitespace-separated tokens; blank lines
    and ``#`` comments are ignored.  If every token in the file is a
    non-negative integer the integers are used as vertex ids directly,
    otherwise tokens are mapped to ids in order of first appearance.  A facet
    line that is a subset of another is absorbed with a warning.  A file with
    no facet lines denotes the minimal complex {∅}.
    """
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        for tok in tokens:
            if not tok.isalnum():
                raise ValueError(f"line {lineno}: invalid vertex token {tok!r}")
        rows.append(tokens)

    numeric = all(tok.isdigit() for row in rows for tok in row)
    ids: dict[str, int] = {}
    masks: list[int] = []
    for row in rows:
        m = 0
        for tok in row:
            if numeric:
                v = int(tok)
                if v >= VERTEX_CAP:
                    raise CapacityError(f"vertex label {v} exceeds {VERTEX_CAP - 1}")
            else:
                if tok not in ids:
                    if len(ids) >= VERTEX_CAP:
                        raise CapacityError(f"more than {VERTEX_CAP} distinct vertex tokens")
                    ids[tok] = len(ids)
                v = ids[tok]
            m |= 1 << v
        masks.append(m)

    complex_ = from_facets(masks)
    kept = set(complex_.facets)
    for row, m in zip(rows, masks):
        if m not in kept:
            warnings.warn(
                f"facet line {' '.join(row)!r} is contained in another facet; absorbed",
                FacetAbsorbedWarning,
                stacklevel=2,
            )
            kept.add(m)  # warn once per distinct absorbed mask
    return complex_


def format_complex(c: SimplicialComplex) -> str:
    """Inverse of parse_complex for integer labels ({∅} prints as empty)."""
    if c.facets == (0,):
        return ""
    lines = [" ".join(map(str, face_vertices(f))) for f in c.facets]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# convenient constructions
# ---------------------------------------------------------------------------

def full_simplex(n: int) -> SimplicialComplex:
    return from_facets([(1 << n) - 1])


def two_disjoint_edges() -> SimplicialComplex:
    """The four-vertex complex with facets {0,1} and {2,3} (written 2K2)."""
    return from_facets([0b0011, 0b1100])


def all_faces(c: SimplicialComplex) -> list[int]:
    """All faces as a deterministic sorted list (by dimension, then mask)."""
    return sorted(c.faces(), key=_facet_sort_key)


def brute_force_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Reference isomorphism test by trying every vertex bijection.

    Exponential; used as the oracle the canonical form is validated against.
    """
    va, vb = a.vertex_ids(), b.vertex_ids()
    if len(va) != len(vb):
        return False
    fa = set(a.facets)
    for perm in permutations(vb):
        mapping = dict(zip(va, perm))
        if {relabel_face(f, mapping) for f in a.facets} == set(b.facets):
            return True
    return False


def random_complex(rng, n_max: int = 6, max_facets: int = 7, dim_cap: int = 3) -> SimplicialComplex:
    """Small random complex for corpus tests (deterministic under a seeded rng)."""
    n = rng.randint(1, n_max)
    k = rng.randint(1, max_facets)
    cands = []
    for _ in range(k):
        size = rng.randint(1, min(n, dim_cap + 1))
        cands.append(face(rng.sample(range(n), size)))
    return from_facets(cands)

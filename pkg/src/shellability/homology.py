"""Reduced simplicial homology over the integers.

Boundary matrices are taken over the augmented chain complex (the empty face
is a generator in dimension -1), so all homology here is reduced homology.
Smith normal form is computed exactly; Python integers make every
intermediate value arbitrary precision for free, and the pivot rule favours
entries of least magnitude to keep growth down.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cache
from .complexes import CANONICAL_VERTEX_CAP, SimplicialComplex, face_vertices

_HOMOLOGY_CACHE = cache.new_cache()


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: free rank plus invariant factors."""

    betti: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("negative rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"C{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


ZERO_GROUP = HomologyGroup(0)
Z_GROUP = HomologyGroup(1)


@dataclass(frozen=True)
class BoundaryMatrix:
    """The boundary map from k-chains to (k-1)-chains in sorted-mask bases."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]


def boundary_matrix(c: SimplicialComplex, k: int) -> BoundaryMatrix:
    """Augmented boundary matrix; k = 0 maps vertices onto the empty face."""
    if k < -1:
        raise ValueError("boundary is defined for k >= -1")
    rows = tuple(c.faces_of_dim(k - 1))
    cols = tuple(c.faces_of_dim(k))
    index = {m: i for i, m in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, col_face in enumerate(cols):
        verts = face_vertices(col_face)
        for pos, v in enumerate(verts):
            sub = col_face ^ (1 << v)
            entries[index[sub]][j] = -1 if pos % 2 else 1
    return BoundaryMatrix(rows, cols, tuple(tuple(r) for r in entries))


def smith_normal_form(matrix) -> tuple[list[int], int]:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix, plus its rank.

    Accepts any rectangular sequence of int rows (a BoundaryMatrix's entries
    included).  Pure row/column reduction with a least-magnitude pivot rule;
    the divisibility chain is enforced before each pivot is frozen.
    """
    m = [list(map(int, row)) for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    if any(len(row) != n_cols for row in m):
        raise ValueError("ragged matrix")

    divisors: list[int] = []
    t = 0
    while t < n_rows and t < n_cols:
        best = None
        best_abs = 0
        for i in range(t, n_rows):
            row = m[i]
            for j in range(t, n_cols):
                v = row[j]
                if v and (best is None or -best_abs < v < best_abs):
                    best = (i, j)
                    best_abs = abs(v)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        if bj != t:
            for row in m:
                row[t], row[bj] = row[bj], row[t]

        while True:
            for i in range(n_rows):
                if i != t and m[i][t]:
                    q = m[i][t] // m[t][t]
                    if q:
                        mi, mt = m[i], m[t]
                        for j in range(t, n_cols):
                            mi[j] -= q * mt[j]
            pending = next((i for i in range(n_rows) if i != t and m[i][t]), None)
            if pending is not None:
                m[t], m[pending] = m[pending], m[t]
                continue

            for j in range(t + 1, n_cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    if q:
                        for i in range(t, n_rows):
                            m[i][j] -= q * m[i][t]
            pending = next((j for j in range(t + 1, n_cols) if m[t][j]), None)
            if pending is not None:
                for i in range(t, n_rows):
                    m[i][t], m[i][pending] = m[i][pending], m[i][t]
                continue

            offender = None
            pivot = m[t][t]
            for i in range(t + 1, n_rows):
                row = m[i]
                for j in range(t + 1, n_cols):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            mo, mt = m[offender], m[t]
            for j in range(t, n_cols):
                mt[j] += mo[j]

        divisors.append(abs(m[t][t]))
        t += 1

    return divisors, len(divisors)


def reduced_homology(c: SimplicialComplex, k: int) -> HomologyGroup:
    """The k-th reduced homology group of the complex over the integers."""
    if k < -1:
        raise ValueError("reduced homology is defined for k >= -1")
    if k > c.dim:
        return ZERO_GROUP
    key = None
    if c.n_vertices <= CANONICAL_VERTEX_CAP:
        key = (c.canonical_form(), k)
        hit = _HOMOLOGY_CACHE.get(key)
        if hit is not None:
            return hit

    n_k = len(c.faces_of_dim(k))
    if k == -1:
        rank_k = 0
    else:
        _, rank_k = smith_normal_form(boundary_matrix(c, k).entries)
    factors_up, rank_up = smith_normal_form(boundary_matrix(c, k + 1).entries)
    betti = n_k - rank_k - rank_up
    torsion = tuple(d for d in factors_up if d > 1)
    group = HomologyGroup(betti, torsion)

    if key is not None:
        cache.trim(_HOMOLOGY_CACHE)
        _HOMOLOGY_CACHE[key] = group
    return group


def homology_groups(c: SimplicialComplex) -> dict[int, HomologyGroup]:
    """All reduced homology groups from dimension -1 through dim."""
    return {k: reduced_homology(c, k) for k in range(-1, c.dim + 1)}


def euler_characteristic(c: SimplicialComplex) -> int:
    """Reduced Euler characteristic: alternating face-count sum, empty face at -1."""
    total = 0
    sign = -1
    for count in c.f_vector():
        total += sign * count
        sign = -sign
    return total

"""Exact reduced simplicial homology via boundary-matrix ranks.

The chain complex is augmented: the empty face spans degree -1, so the
complex {∅} has one dimension of homology in degree -1.  Ranks are computed
exactly, over GF(2) with bit-set Gaussian elimination and over the rationals
with fraction-free integer elimination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import DegreeOutOfRange, VoidComplex
from .complexes import SimplicialComplex


class Field(Enum):
    GF2 = "GF2"
    RATIONAL = "Q"

    @classmethod
    def from_name(cls, name: str) -> "Field":
        key = name.strip().upper()
        if key in ("GF2", "F2", "GF(2)"):
            return cls.GF2
        if key in ("Q", "RATIONAL", "QQ"):
            return cls.RATIONAL
        raise ValueError(f"unknown field {name!r}; use GF2 or Q")


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers by degree, starting at degree -1.

    Trailing zeros are stripped so profiles of complexes of different
    dimensions compare equal when their homology agrees in every degree.
    """

    field: Field
    betti: tuple[int, ...]

    def dim_at(self, degree: int) -> int:
        idx = degree + 1
        if 0 <= idx < len(self.betti):
            return self.betti[idx]
        return 0

    @property
    def is_trivial(self) -> bool:
        return not self.betti

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(i - 1 for i, b in enumerate(self.betti) if b)

    def alternating_sum(self) -> int:
        # Σ (-1)^i dim H̃_i, the reduced Euler characteristic.
        total = 0
        for idx, b in enumerate(self.betti):
            degree = idx - 1
            total += b if degree % 2 == 0 else -b
        return total

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.value,
            "dims": {str(i - 1): b for i, b in enumerate(self.betti) if b},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _grades(K: SimplicialComplex) -> list[list[int]]:
    """Faces grouped by cardinality, each grade sorted by bit-vector value."""
    top = max(m.bit_count() for m in K.face_bits)
    grades: list[list[int]] = [[] for _ in range(top + 1)]
    for m in sorted(K.face_bits):
        grades[m.bit_count()].append(m)
    return grades


def boundary_matrix(K: SimplicialComplex, i: int, field: Field) -> list[list[int]]:
    """Matrix of the boundary map from degree-i chains to degree-(i-1) chains.

    Rows are indexed by (i-1)-dimensional faces and columns by i-dimensional
    faces, both in increasing bit-vector order.  Over the rationals the entry
    for deleting the j-th smallest vertex is (-1)^j; over GF(2) it is 1.
    """
    if K.is_void:
        raise VoidComplex("boundary matrix of the void complex")
    if not -1 <= i <= K.dim:
        raise DegreeOutOfRange(f"degree {i} outside -1..{K.dim}")
    grades = _grades(K)
    cols = grades[i + 1]
    rows = grades[i] if i >= 0 else []
    row_index = {m: r for r, m in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for c, m in enumerate(cols):
        sign = 1
        rest = m
        while rest:
            low = rest & -rest
            r = row_index[m ^ low]
            matrix[r][c] = sign if field is Field.RATIONAL else 1
            sign = -sign
            rest ^= low
    return matrix


def rank_gf2(columns: list[int]) -> int:
    """Rank over GF(2) of a list of column vectors packed as ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col & -col
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def rank_fraction_free(rows: list[list[int]]) -> int:
    """Exact rank over the rationals by Bareiss fraction-free elimination."""
    m = [r[:] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, nrows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for k in range(r + 1, nrows):
            factor = m[k][c]
            if factor or pivot != prev:
                for j in range(c + 1, ncols):
                    m[k][j] = (m[k][j] * pivot - factor * m[r][j]) // prev
            m[k][c] = 0
        prev = pivot
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _boundary_rank(grades: list[list[int]], k: int, field: Field) -> int:
    """Rank of the boundary map sending k-vertex faces to (k-1)-vertex faces."""
    if k <= 0 or k >= len(grades) or not grades[k]:
        return 0
    rows = grades[k - 1]
    cols = grades[k]
    row_index = {m: r for r, m in enumerate(rows)}
    if field is Field.GF2:
        packed = []
        for m in cols:
            col = 0
            rest = m
            while rest:
                low = rest & -rest
                col |= 1 << row_index[m ^ low]
                rest ^= low
            packed.append(col)
        return rank_gf2(packed)
    dense = [[0] * len(cols) for _ in rows]
    for c, m in enumerate(cols):
        sign = 1
        rest = m
        while rest:
            low = rest & -rest
            dense[row_index[m ^ low]][c] = sign
            sign = -sign
            rest ^= low
    return rank_fraction_free(dense)


@lru_cache(maxsize=65536)
def reduced_homology(K: SimplicialComplex, field: Field = Field.GF2) -> HomologyProfile:
    """Dimensions of reduced homology in every degree from -1 up to dim K."""
    if K.is_void:
        raise VoidComplex("homology of the void complex")
    grades = _grades(K)
    top = len(grades) - 1  # largest face cardinality
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        ranks[k] = _boundary_rank(grades, k, field)
    betti = []
    for k in range(top + 1):
        betti.append(len(grades[k]) - ranks[k] - ranks[k + 1])
    while betti and betti[-1] == 0:
        betti.pop()
    return HomologyProfile(field, tuple(betti))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic: the empty face counts -1."""
    if K.is_void:
        raise VoidComplex("Euler characteristic of the void complex")
    total = 0
    for m in K.face_bits:
        total += 1 if m.bit_count() % 2 else -1
    return total

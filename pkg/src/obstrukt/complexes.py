"""Simplicial-complex kernel: downward-closed face sets on n vertices.

Faces are stored explicitly as bit masks together with the antichain of
maximal faces.  The void complex (no faces at all) is a first-class value,
distinct from the complex whose only face is the empty set; the latter is the
link of a facet and is not contractible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .codes import MAX_NEURONS, Codeword, NeuralCode
from .errors import (
    FaceNotInComplex,
    NeuronOutOfRange,
    VertexAlreadyPresent,
    VoidComplex,
    WidthMismatch,
)


def iter_submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` as masks, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> frozenset[int]:
    """Antichain of masks maximal under bitwise containment."""
    pool = set(masks)
    return frozenset(
        m for m in pool if not any(m != v and m & ~v == 0 for v in pool)
    )


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed collection of faces, each a subset of {1, ..., n}."""

    n: int
    face_bits: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_NEURONS:
            raise NeuronOutOfRange(f"vertex count must be in 1..{MAX_NEURONS}, got {self.n}")
        faces = self.face_bits
        for m in faces:
            if m < 0 or m >> self.n:
                raise WidthMismatch(f"face {m:#x} does not fit width {self.n}")
            rest = m
            while rest:
                low = rest & -rest
                if (m ^ low) not in faces:
                    raise ValueError(f"face set is not downward closed at {m:#x}")
                rest ^= low

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset())

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "SimplicialComplex":
        """Smallest complex containing the given faces (downward closure)."""
        closed: set[int] = set()
        for m in maximal_masks(masks):
            closed.update(iter_submasks(m))
        return cls(n, frozenset(closed))

    @property
    def is_void(self) -> bool:
        return not self.face_bits

    @cached_property
    def facet_bits(self) -> frozenset[int]:
        return maximal_masks(self.face_bits)

    @cached_property
    def vertex_bits(self) -> int:
        mask = 0
        for m in self.facet_bits:
            mask |= m
        return mask

    @property
    def dim(self) -> int:
        """Max face dimension; -1 for the complex {∅}.  Undefined when void."""
        if self.is_void:
            raise VoidComplex("the void complex has no dimension")
        return max(m.bit_count() for m in self.face_bits) - 1

    def vertices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.vertex_bits >> i & 1)

    def faces(self) -> frozenset[Codeword]:
        return frozenset(Codeword(m, self.n) for m in self.face_bits)

    def facet_index(self) -> tuple[Codeword, ...]:
        return tuple(
            sorted((Codeword(m, self.n) for m in self.facet_bits), key=lambda c: c.binary())
        )

    def __contains__(self, face: Codeword) -> bool:
        return face.n == self.n and face.bits in self.face_bits

    def __len__(self) -> int:
        return len(self.face_bits)

    def widen(self, n: int) -> "SimplicialComplex":
        """Reinterpret on a larger vertex count; new vertices stay unused."""
        if n < self.n:
            raise WidthMismatch(f"cannot shrink width {self.n} to {n}")
        return SimplicialComplex(n, self.face_bits)

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, void)"
        inner = ",".join(c.binary() for c in self.facet_index())
        return f"SimplicialComplex(n={self.n}, facets={{{inner}}})"


def closure_of(faces: Iterable[Codeword], n: int) -> SimplicialComplex:
    """Downward closure of an arbitrary face collection."""
    masks = []
    for f in faces:
        if f.n != n:
            raise WidthMismatch(f"face width {f.n} differs from n = {n}")
        masks.append(f.bits)
    return SimplicialComplex.from_masks(masks, n)


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_masks([(1 << n) - 1], n)


def code_complex(code: NeuralCode) -> SimplicialComplex:
    """Smallest simplicial complex containing every codeword of the code.

    The empty code yields the void complex.
    """
    return SimplicialComplex.from_masks(code.masks(), code.n)


def _require_member(K: SimplicialComplex, sigma: Codeword) -> int:
    if sigma.n != K.n:
        raise WidthMismatch(f"face width {sigma.n} differs from complex width {K.n}")
    if sigma.bits not in K.face_bits:
        raise FaceNotInComplex(f"{sigma!r} is not a face of the complex")
    return sigma.bits


def link(K: SimplicialComplex, sigma: Codeword) -> SimplicialComplex:
    """Faces disjoint from sigma whose union with sigma is a face of K."""
    s = _require_member(K, sigma)
    faces = frozenset(m for m in K.face_bits if m & s == 0 and (m | s) in K.face_bits)
    return SimplicialComplex(K.n, faces)


def restriction(K: SimplicialComplex, gamma: Iterable[Codeword]) -> SimplicialComplex:
    """K restricted to the sets of gamma: faces contained in some member."""
    gmasks = []
    for g in gamma:
        if g.n != K.n:
            raise WidthMismatch(f"restriction set width {g.n} differs from complex width {K.n}")
        gmasks.append(g.bits)
    gmasks = list(maximal_masks(gmasks))
    faces = frozenset(m for m in K.face_bits if any(m & ~g == 0 for g in gmasks))
    return SimplicialComplex(K.n, faces)


def star(K: SimplicialComplex, sigma: Codeword) -> frozenset[Codeword]:
    """Faces of K containing sigma.  Not downward closed in general."""
    s = _require_member(K, sigma)
    return frozenset(Codeword(m, K.n) for m in K.face_bits if s & ~m == 0)


def closed_star(K: SimplicialComplex, sigma: Codeword) -> SimplicialComplex:
    """Downward closure of the star of sigma."""
    s = _require_member(K, sigma)
    return SimplicialComplex.from_masks(
        (m for m in K.face_bits if s & ~m == 0), K.n
    )


def cone(K: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Cone over a new vertex: every face gains a copy joined with the apex.

    ``apex`` may be n+1, in which case the complex is widened by one vertex.
    """
    n = K.n
    if apex == n + 1:
        if n + 1 > MAX_NEURONS:
            raise NeuronOutOfRange(f"widening past {MAX_NEURONS} vertices")
        K = K.widen(n + 1)
        n += 1
    elif not 1 <= apex <= n:
        raise NeuronOutOfRange(f"cone apex {apex} outside 1..{n + 1}")
    bit = 1 << (apex - 1)
    if K.vertex_bits & bit:
        raise VertexAlreadyPresent(f"vertex {apex} already belongs to the complex")
    faces = set(K.face_bits)
    faces.update(m | bit for m in K.face_bits)
    return SimplicialComplex(n, frozenset(faces))


def facet_intersection(K: SimplicialComplex, sigma: Codeword) -> Codeword:
    """Intersection of all facets containing sigma (contains sigma itself).

    Whenever the result differs from sigma, the link of sigma is a cone and
    hence contractible.
    """
    s = _require_member(K, sigma)
    acc = (1 << K.n) - 1
    for f in K.facet_bits:
        if s & ~f == 0:
            acc &= f
    return Codeword(acc, K.n)


def dual_complex(K: SimplicialComplex) -> SimplicialComplex:
    """Combinatorial Alexander dual: complements of non-faces.

    Enumerates all 2^n subsets, so this is a desk-scale operation.  The dual
    of the full simplex is void and vice versa.
    """
    n = K.n
    top = (1 << n) - 1
    faces = frozenset(
        m for m in range(1 << n) if (top ^ m) not in K.face_bits
    )
    return SimplicialComplex(n, faces)


def delete_vertex(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Induced subcomplex on all vertices except v."""
    if not 1 <= v <= K.n:
        raise NeuronOutOfRange(f"vertex {v} outside 1..{K.n}")
    bit = 1 << (v - 1)
    return SimplicialComplex(K.n, frozenset(m for m in K.face_bits if m & bit == 0))


def complex_to_json(K: SimplicialComplex) -> str:
    """Render as ``{"n": int, "facets": [...]}`` with sorted binary strings."""
    return json.dumps(
        {"n": K.n, "facets": sorted(c.binary() for c in K.facet_index())}
    )


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """All simplicial complexes on n labelled vertices, void included.

    Iterates over every family of subsets of {1, ..., n}, so it is only
    practical for n <= 4.
    """
    size = 1 << n
    subfaces = []
    for m in range(size):
        subs = []
        rest = m
        while rest:
            low = rest & -rest
            subs.append(m ^ low)
            rest ^= low
        subfaces.append(tuple(subs))
    for fam in range(1 << size):
        if fam and not fam & 1:  # nonvoid complexes must contain ∅
            continue
        ok = True
        probe = fam
        while probe and ok:
            low = probe & -probe
            m = low.bit_length() - 1
            for s in subfaces[m]:
                if not fam >> s & 1:
                    ok = False
                    break
            probe ^= low
        if ok:
            yield SimplicialComplex(
                n, frozenset(m for m in range(size) if fam >> m & 1)
            )

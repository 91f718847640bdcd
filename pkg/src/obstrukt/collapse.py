"""Strong-collapse and simple-homotopy machinery with checkable certificates.

A vertex is dominated when every facet containing it contains some other
fixed vertex; deleting dominated vertices preserves homotopy type.  The
contractibility verdict is three-valued on purpose: deciding contractibility
in general is undecidable, so the only honest answers are certificates
(a collapse to a point, or a nonzero homology degree) and Unknown.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .codes import Codeword
from .complexes import SimplicialComplex, delete_vertex
from .errors import NotAFreeFacePair, VoidComplex
from .homology import Field, reduced_homology


@dataclass(frozen=True)
class DominationWitness:
    dominated: int
    dominator: int


@dataclass(frozen=True)
class CollapseSequence:
    """A replayable run of elementary strong collapses."""

    start: SimplicialComplex
    steps: tuple[DominationWitness, ...]
    core: SimplicialComplex

    def replay(self) -> bool:
        """Re-run every deletion, checking each domination as it applies."""
        current = self.start
        for step in self.steps:
            if (step.dominated, step.dominator) not in {
                (w.dominated, w.dominator) for w in dominated_vertices(current)
            }:
                return False
            current = delete_vertex(current, step.dominated)
        return current == self.core

    def to_json_dict(self) -> dict:
        return {
            "steps": [[w.dominated, w.dominator] for w in self.steps],
            "core_facets": sorted(c.binary() for c in self.core.facet_index()),
        }


class Verdict(Enum):
    CONTRACTIBLE = "contractible"
    NON_CONTRACTIBLE = "non_contractible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ContractibilityVerdict:
    status: Verdict
    field: Field
    collapse: CollapseSequence | None = None
    nonzero_degree: int | None = None

    @property
    def is_contractible_certified(self) -> bool:
        return self.status is Verdict.CONTRACTIBLE

    @property
    def is_non_contractible_certified(self) -> bool:
        return self.status is Verdict.NON_CONTRACTIBLE

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status.value, "field": self.field.value}
        if self.collapse is not None:
            out["collapse"] = self.collapse.to_json_dict()
        if self.nonzero_degree is not None:
            out["nonzero_degree"] = self.nonzero_degree
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def dominated_vertices(K: SimplicialComplex) -> list[DominationWitness]:
    """All ordered pairs (v, v') where v is dominated by v', from the facets."""
    if K.is_void:
        raise VoidComplex("domination on the void complex")
    out = []
    vbits = K.vertex_bits
    for i in range(K.n):
        bit = 1 << i
        if not vbits & bit:
            continue
        meet = vbits
        for f in K.facet_bits:
            if f & bit:
                meet &= f
        meet &= ~bit
        rest = meet
        while rest:
            low = rest & -rest
            out.append(DominationWitness(i + 1, low.bit_length()))
            rest ^= low
    out.sort(key=lambda w: (w.dominated, w.dominator))
    return out


def strong_collapse_core(K: SimplicialComplex) -> CollapseSequence:
    """Deterministically delete the lowest dominated vertex until none remains."""
    if K.is_void:
        raise VoidComplex("strong collapse of the void complex")
    current = K
    steps: list[DominationWitness] = []
    while True:
        witnesses = dominated_vertices(current)
        if not witnesses:
            break
        step = witnesses[0]
        steps.append(step)
        current = delete_vertex(current, step.dominated)
    return CollapseSequence(K, tuple(steps), current)


def is_single_point(K: SimplicialComplex) -> bool:
    """True for a complex whose faces are exactly ∅ and one vertex."""
    if len(K.face_bits) != 2 or 0 not in K.face_bits:
        return False
    other = max(K.face_bits)
    return other.bit_count() == 1


def free_face_pairs(K: SimplicialComplex) -> list[tuple[Codeword, Codeword]]:
    """All pairs (σ, τ) with σ nonempty and star(σ) = {σ, τ}.

    The empty face is excluded: removing it together with a lone vertex would
    turn a point into the void complex, which is not a homotopy equivalence.
    """
    if K.is_void:
        raise VoidComplex("free faces of the void complex")
    pairs = []
    for m in K.face_bits:
        if m == 0:
            continue
        over = [t for t in K.face_bits if m & ~t == 0]
        if len(over) == 2:
            tau = over[0] if over[0] != m else over[1]
            pairs.append((Codeword(m, K.n), Codeword(tau, K.n)))
    pairs.sort(key=lambda p: (p[0].binary(), p[1].binary()))
    return pairs


def elementary_collapse(K: SimplicialComplex, sigma: Codeword, tau: Codeword) -> SimplicialComplex:
    """Remove a free face pair; the result is again a simplicial complex."""
    if K.is_void:
        raise VoidComplex("collapse on the void complex")
    s, t = sigma.bits, tau.bits
    if sigma.n != K.n or tau.n != K.n:
        raise NotAFreeFacePair("widths do not match the complex")
    if s == 0 or s == t or s & ~t != 0:
        raise NotAFreeFacePair("need a nonempty proper face of the coface")
    star_masks = {m for m in K.face_bits if s & ~m == 0}
    if star_masks != {s, t}:
        raise NotAFreeFacePair(f"star of {sigma!r} is not exactly {{σ, τ}}")
    return SimplicialComplex(K.n, K.face_bits - {s, t})


def contractibility(K: SimplicialComplex, field: Field = Field.GF2) -> ContractibilityVerdict:
    """Certify contractibility by strong collapse, or non-contractibility by
    homology of the core; answer Unknown when neither certificate exists."""
    if K.is_void:
        raise VoidComplex("contractibility of the void complex")
    seq = strong_collapse_core(K)
    if is_single_point(seq.core):
        return ContractibilityVerdict(Verdict.CONTRACTIBLE, field, collapse=seq)
    profile = reduced_homology(seq.core, field)
    if not profile.is_trivial:
        return ContractibilityVerdict(
            Verdict.NON_CONTRACTIBLE, field, nonzero_degree=profile.nonzero_degrees()[0]
        )
    return ContractibilityVerdict(Verdict.UNKNOWN, field)

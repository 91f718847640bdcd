"""Mandatory faces of a complex: the homological set and a certified partition.

A face is homologically mandatory when its link has nonzero reduced homology
over the chosen field.  The certified partition routes every face by the
contractibility verdict of its link; the empty face is mandatory by
definition regardless of its link.  A cone shortcut is applied first: when
the intersection of facets containing σ exceeds σ, the link is a cone and
therefore contractible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codes import Codeword, NeuralCode
from .complexes import SimplicialComplex, code_complex, facet_intersection, link
from .collapse import ContractibilityVerdict, Verdict, contractibility
from .errors import VoidComplex
from .homology import Field, reduced_homology


@dataclass(frozen=True)
class MandatorySet:
    field: Field
    faces: frozenset[Codeword]

    def binaries(self) -> list[str]:
        return sorted(c.binary() for c in self.faces)


@dataclass(frozen=True)
class MandatoryPartition:
    """Faces split by link-contractibility certificate.

    ``certified_in`` always holds the empty face; ``ambient_verdict`` carries
    the contractibility verdict for the whole complex (the link of ∅) so both
    readings of ∅-membership stay checkable.
    """

    field: Field
    certified_in: frozenset[Codeword]
    certified_out: frozenset[Codeword]
    unknown: frozenset[Codeword]
    ambient_verdict: ContractibilityVerdict

    @property
    def fully_certified(self) -> bool:
        return not self.unknown

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.value,
            "cmin_in": sorted(c.binary() for c in self.certified_in),
            "cmin_out": sorted(c.binary() for c in self.certified_out),
            "cmin_unknown": sorted(c.binary() for c in self.unknown),
            "complex_verdict": self.ambient_verdict.status.value,
        }


@lru_cache(maxsize=65536)
def mandatory_set(
    K: SimplicialComplex, field: Field = Field.GF2, use_cone_shortcut: bool = True
) -> MandatorySet:
    """Faces whose link has nonzero reduced homology in some degree."""
    if K.is_void:
        raise VoidComplex("mandatory set of the void complex")
    hits = []
    for m in sorted(K.face_bits):
        sigma = Codeword(m, K.n)
        if use_cone_shortcut and facet_intersection(K, sigma).bits != m:
            continue
        if not reduced_homology(link(K, sigma), field).is_trivial:
            hits.append(sigma)
    return MandatorySet(field, frozenset(hits))


@lru_cache(maxsize=65536)
def mandatory_partition(
    K: SimplicialComplex, field: Field = Field.GF2, use_cone_shortcut: bool = True
) -> MandatoryPartition:
    """Certified three-way split of all faces by link contractibility."""
    if K.is_void:
        raise VoidComplex("mandatory partition of the void complex")
    ambient = contractibility(K, field)
    cin, cout, unknown = [], [], []
    for m in sorted(K.face_bits):
        sigma = Codeword(m, K.n)
        if m == 0:
            cin.append(sigma)  # ∅ is mandatory by definition
            continue
        if use_cone_shortcut and facet_intersection(K, sigma).bits != m:
            cout.append(sigma)
            continue
        verdict = contractibility(link(K, sigma), field)
        if verdict.status is Verdict.NON_CONTRACTIBLE:
            cin.append(sigma)
        elif verdict.status is Verdict.CONTRACTIBLE:
            cout.append(sigma)
        else:
            unknown.append(sigma)
    return MandatoryPartition(
        field, frozenset(cin), frozenset(cout), frozenset(unknown), ambient
    )


@dataclass(frozen=True)
class ObstructionCheck:
    passes: bool
    missing: frozenset[Codeword]

    def to_json_dict(self) -> dict:
        return {
            "passes": self.passes,
            "missing": sorted(c.binary() for c in self.missing),
        }


def check_no_local_obstruction(code: NeuralCode, field: Field = Field.GF2) -> ObstructionCheck:
    """Necessary condition for open convexity: the code must contain every
    homologically mandatory face of its complex."""
    K = code_complex(code)
    missing = mandatory_set(K, field).faces - code.words
    return ObstructionCheck(not missing, missing)


def analysis_json_dict(K: SimplicialComplex, field: Field) -> dict:
    """Combined mandatory report used by the command-line front end."""
    mh = mandatory_set(K, field)
    part = mandatory_partition(K, field)
    out = {"field": field.value, "mh": mh.binaries()}
    d = part.to_json_dict()
    del d["field"]
    out.update(d)
    return out

"""Square-free monomial ideals given by minimal generators.

A generator is the support of a square-free monomial, stored as a bit mask
over the variables.  Quotient rings are never materialised: every statement
this package needs reduces to generator-set combinatorics under divisibility,
relabelling and zero-padding.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterable

from .codes import MAX_NEURONS, Codeword
from .complexes import SimplicialComplex
from .errors import DegenerateDualWarning, NeuronOutOfRange, NotAPermutation, VoidComplex, WidthMismatch


def minimal_masks(masks: Iterable[int]) -> frozenset[int]:
    """Antichain of masks minimal under bitwise containment."""
    pool = set(masks)
    return frozenset(
        m for m in pool if not any(v != m and v & ~m == 0 for v in pool)
    )


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by square-free monomials; ``gen_bits`` is an antichain."""

    n: int
    gen_bits: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_NEURONS:
            raise NeuronOutOfRange(f"variable count must be in 1..{MAX_NEURONS}, got {self.n}")
        for m in self.gen_bits:
            if m < 0 or m >> self.n:
                raise WidthMismatch(f"generator {m:#x} does not fit width {self.n}")
        if minimal_masks(self.gen_bits) != self.gen_bits:
            raise ValueError("generators must form an antichain under divisibility")

    @classmethod
    def from_generators(cls, n: int, masks: Iterable[int]) -> "MonomialIdeal":
        """Build from any generating set; redundant generators are dropped."""
        return cls(n, minimal_masks(masks))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, frozenset())

    @property
    def is_zero(self) -> bool:
        return not self.gen_bits

    def generators(self) -> tuple[Codeword, ...]:
        return tuple(
            sorted((Codeword(m, self.n) for m in self.gen_bits), key=lambda c: c.binary())
        )

    def contains_monomial(self, support: Codeword) -> bool:
        """Monotone membership: x^σ lies in the ideal iff some generator divides it."""
        if support.n != self.n:
            raise WidthMismatch(f"support width {support.n} differs from {self.n}")
        return any(g & ~support.bits == 0 for g in self.gen_bits)

    def widen(self, n: int) -> "MonomialIdeal":
        if n < self.n:
            raise WidthMismatch(f"cannot shrink width {self.n} to {n}")
        return MonomialIdeal(n, self.gen_bits)

    def to_lists(self) -> list[list[int]]:
        return sorted([list(g.neurons()) for g in self.generators()])

    def to_json(self) -> str:
        return json.dumps(self.to_lists())

    def __repr__(self) -> str:
        if self.is_zero:
            return f"MonomialIdeal(n={self.n}, zero)"
        gens = ", ".join(
            "x" + "*x".join(str(i) for i in g) for g in self.to_lists()
        )
        return f"MonomialIdeal(n={self.n}, <{gens}>)"


def sr_ideal(K: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces of K."""
    if K.is_void:
        raise VoidComplex("Stanley-Reisner ideal of the void complex")
    gens = []
    faces = K.face_bits
    for m in range(1 << K.n):
        if m in faces:
            continue
        rest = m
        minimal = True
        while rest:
            low = rest & -rest
            if (m ^ low) not in faces:
                minimal = False
                break
            rest ^= low
        if minimal:
            gens.append(m)
    return MonomialIdeal(K.n, frozenset(gens))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the variable ideals of the generators.

    Expands transversals (hitting sets of the generator supports) with
    immediate minimisation.  The dual of the zero ideal is returned unchanged
    with a :class:`DegenerateDualWarning`.
    """
    if I.is_zero:
        warnings.warn(
            "Alexander dual of the zero ideal is degenerate; returning the zero ideal",
            DegenerateDualWarning,
            stacklevel=2,
        )
        return I
    partial: set[int] = {0}
    for g in sorted(I.gen_bits):
        nxt: set[int] = set()
        for t in partial:
            if t & g:
                nxt.add(t)
                continue
            rest = g
            while rest:
                low = rest & -rest
                nxt.add(t | low)
                rest ^= low
        partial = set(minimal_masks(nxt))
    return MonomialIdeal(I.n, frozenset(partial))


def ideal_contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when I ⊇ J; the narrower ideal is zero-padded to the wider width."""
    n = max(I.n, J.n)
    wide_i = I.widen(n)
    wide_j = J.widen(n)
    return all(
        any(g & ~h == 0 for g in wide_i.gen_bits) for h in wide_j.gen_bits
    )


def permutation_tuple(gamma: Iterable[int], n: int) -> tuple[int, ...]:
    """Validate gamma as a bijection of 1..n and return it as a tuple."""
    g = tuple(gamma)
    if len(g) != n or sorted(g) != list(range(1, n + 1)):
        raise NotAPermutation(f"{g!r} is not a permutation of 1..{n}")
    return g


def invert_permutation(gamma: tuple[int, ...]) -> tuple[int, ...]:
    inverse = [0] * len(gamma)
    for i, g in enumerate(gamma, start=1):
        inverse[g - 1] = i
    return tuple(inverse)


def permute_mask(mask: int, gamma: tuple[int, ...]) -> int:
    """Relabel a support through i ↦ γ(i)."""
    out = 0
    rest = mask
    while rest:
        low = rest & -rest
        out |= 1 << (gamma[low.bit_length() - 1] - 1)
        rest ^= low
    return out


def permute_ideal(I: MonomialIdeal, gamma: Iterable[int]) -> MonomialIdeal:
    """Apply the variable relabelling x_i ↦ x_{γ(i)} to every generator."""
    g = permutation_tuple(gamma, I.n)
    return MonomialIdeal(I.n, frozenset(permute_mask(m, g) for m in I.gen_bits))

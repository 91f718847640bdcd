"""Codewords and neural codes stored as fixed-width bit vectors.

A codeword is a subset of {1, ..., n} packed into one machine word: bit i-1
is set exactly when neuron i fires.  Three text notations are supported (set,
word, binary) and round-trip exactly.  All values are immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import (
    MalformedText,
    NeuronOutOfRange,
    UnrepresentableForm,
    WidthMismatch,
)

MAX_NEURONS = 64
EMPTY_SYMBOL = "∅"  # ∅


class NotationForm(Enum):
    SET = "set"
    WORD = "word"
    BINARY = "binary"


@dataclass(frozen=True)
class Codeword:
    """A subset of {1, ..., n}; ``bits`` holds bit i-1 for neuron i."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_NEURONS:
            raise NeuronOutOfRange(f"neuron count must be in 1..{MAX_NEURONS}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise WidthMismatch(f"bit pattern {self.bits:#x} does not fit width {self.n}")

    @classmethod
    def from_neurons(cls, neurons: Iterable[int], n: int) -> "Codeword":
        bits = 0
        for i in neurons:
            if not 1 <= i <= n:
                raise NeuronOutOfRange(f"neuron {i} outside 1..{n}")
            bits |= 1 << (i - 1)
        return cls(bits, n)

    @classmethod
    def empty(cls, n: int) -> "Codeword":
        return cls(0, n)

    def neurons(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    def has(self, neuron: int) -> bool:
        if not 1 <= neuron <= self.n:
            raise NeuronOutOfRange(f"neuron {neuron} outside 1..{self.n}")
        return bool(self.bits >> (neuron - 1) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def _check_width(self, other: "Codeword") -> None:
        if self.n != other.n:
            raise WidthMismatch(f"widths differ: {self.n} vs {other.n}")

    def issubset(self, other: "Codeword") -> bool:
        self._check_width(other)
        return self.bits & ~other.bits == 0

    def __le__(self, other: "Codeword") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Codeword") -> bool:
        return self.issubset(other) and self.bits != other.bits

    def __and__(self, other: "Codeword") -> "Codeword":
        self._check_width(other)
        return Codeword(self.bits & other.bits, self.n)

    def __or__(self, other: "Codeword") -> "Codeword":
        self._check_width(other)
        return Codeword(self.bits | other.bits, self.n)

    def widen(self, n: int) -> "Codeword":
        """Reinterpret on a larger neuron count; appended neurons are off."""
        if n < self.n:
            raise WidthMismatch(f"cannot shrink width {self.n} to {n}")
        return Codeword(self.bits, n)

    def binary(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"Codeword({self.binary()!r})"


def _word_sort_key(cw: Codeword) -> str:
    return cw.binary()


@dataclass(frozen=True)
class NeuralCode:
    """A finite set of codewords on a declared neuron count.

    Membership of the empty codeword is significant and always preserved
    verbatim from the input.
    """

    n: int
    words: frozenset[Codeword]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_NEURONS:
            raise NeuronOutOfRange(f"neuron count must be in 1..{MAX_NEURONS}, got {self.n}")
        for w in self.words:
            if w.n != self.n:
                raise WidthMismatch(f"codeword width {w.n} differs from code width {self.n}")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "NeuralCode":
        return cls(n, frozenset(Codeword(m, n) for m in masks))

    @classmethod
    def from_texts(cls, texts: Iterable[str], form: NotationForm, n: int) -> "NeuralCode":
        return cls(n, frozenset(parse_codeword(t, form, n) for t in texts))

    def masks(self) -> frozenset[int]:
        return frozenset(w.bits for w in self.words)

    def sorted_words(self) -> list[Codeword]:
        return sorted(self.words, key=_word_sort_key)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, cw: Codeword) -> bool:
        return cw in self.words

    def __repr__(self) -> str:
        inner = ",".join(w.binary() for w in self.sorted_words())
        return f"NeuralCode(n={self.n}, {{{inner}}})"


@dataclass(frozen=True)
class WordOps:
    """Containment plus bitwise intersection/union of two codewords."""

    subset: bool
    meet: Codeword
    join: Codeword


def word_ops(a: Codeword, b: Codeword) -> WordOps:
    return WordOps(subset=a.issubset(b), meet=a & b, join=a | b)


def facets(code: NeuralCode) -> frozenset[Codeword]:
    """Maximal codewords: those not strictly contained in another word."""
    words = list(code.words)
    out = []
    for w in words:
        if not any(w.bits != v.bits and w.bits & ~v.bits == 0 for v in words):
            out.append(w)
    return frozenset(out)


def _parse_set_form(text: str, n: int) -> Codeword:
    if text == "{}":
        return Codeword.empty(n)
    if not (text.startswith("{") and text.endswith("}")):
        raise MalformedText(f"set form must look like {{1,3}} or {EMPTY_SYMBOL}: {text!r}", column=1)
    body = text[1:-1]
    if body.strip() == "":
        return Codeword.empty(n)
    bits = 0
    pos = 1  # column of first char inside the brace
    for chunk in body.split(","):
        token = chunk.strip()
        col = pos + 1 + chunk.index(token) if token else pos + 1
        if not token.isdigit():
            raise MalformedText(f"expected a neuron index, got {token!r}", column=col)
        i = int(token)
        if not 1 <= i <= n:
            raise NeuronOutOfRange(f"neuron {i} outside 1..{n}")
        if bits >> (i - 1) & 1:
            raise MalformedText(f"duplicate neuron {i}", column=col)
        bits |= 1 << (i - 1)
        pos += len(chunk) + 1
    return Codeword(bits, n)


def _parse_word_form(text: str, n: int) -> Codeword:
    if n > 9:
        raise UnrepresentableForm(f"word form needs n <= 9, got n = {n}")
    bits = 0
    for col, ch in enumerate(text, start=1):
        if not ch.isdigit() or ch == "0":
            raise MalformedText(f"word form allows digits 1-9 only, got {ch!r}", column=col)
        i = int(ch)
        if i > n:
            raise NeuronOutOfRange(f"neuron {i} outside 1..{n}")
        if bits >> (i - 1) & 1:
            raise MalformedText(f"duplicate neuron {i}", column=col)
        bits |= 1 << (i - 1)
    return Codeword(bits, n)


def _parse_binary_form(text: str, n: int) -> Codeword:
    if len(text) != n:
        raise WidthMismatch(f"binary string length {len(text)} differs from n = {n}")
    bits = 0
    for col, ch in enumerate(text, start=1):
        if ch == "1":
            bits |= 1 << (col - 1)
        elif ch != "0":
            raise MalformedText(f"binary form allows 0/1 only, got {ch!r}", column=col)
    return Codeword(bits, n)


def parse_codeword(text: str, form: NotationForm, n: int) -> Codeword:
    """Parse one codeword written in the given notation form.

    The empty codeword is written ``∅`` (any form), ``{}`` (set form) or a run
    of zeros (binary form).
    """
    if not 1 <= n <= MAX_NEURONS:
        raise NeuronOutOfRange(f"neuron count must be in 1..{MAX_NEURONS}, got {n}")
    if text == EMPTY_SYMBOL:
        return Codeword.empty(n)
    if form is NotationForm.SET:
        return _parse_set_form(text, n)
    if form is NotationForm.WORD:
        if text == "":
            raise MalformedText(f"empty text; write {EMPTY_SYMBOL} for the empty codeword", column=1)
        return _parse_word_form(text, n)
    return _parse_binary_form(text, n)


def format_codeword(cw: Codeword, form: NotationForm) -> str:
    """Inverse of :func:`parse_codeword` for the same form and width."""
    if form is NotationForm.BINARY:
        return cw.binary()
    if len(cw) == 0:
        return EMPTY_SYMBOL
    if form is NotationForm.SET:
        return "{" + ",".join(str(i) for i in cw.neurons()) + "}"
    if cw.n > 9:
        raise UnrepresentableForm(f"word form needs n <= 9, got n = {cw.n}")
    return "".join(str(i) for i in cw.neurons())


def code_to_json(code: NeuralCode) -> str:
    """Render a code as ``{"n": int, "words": [...]}`` with sorted binary strings."""
    return json.dumps({"n": code.n, "words": sorted(w.binary() for w in code.words)})

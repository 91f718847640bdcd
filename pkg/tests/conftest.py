"""Shared helpers and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from obstrukt import (
    Codeword,
    NeuralCode,
    NotationForm,
    SimplicialComplex,
    code_complex,
    parse_codeword,
)


def w(text: str, n: int) -> Codeword:
    """Word-form codeword shorthand."""
    return parse_codeword(text, NotationForm.WORD, n)


def code(texts: list[str], n: int) -> NeuralCode:
    return NeuralCode(n, frozenset(w(t, n) for t in texts))


def cx(texts: list[str], n: int) -> SimplicialComplex:
    """Complex generated by word-form faces (downward closure)."""
    return SimplicialComplex.from_masks([w(t, n).bits for t in texts], n)


def face_words(K: SimplicialComplex) -> set[str]:
    out = set()
    for c in K.faces():
        out.add("".join(str(i) for i in c.neurons()) or "e")
    return out


# The unique closed surface with Euler characteristic 1 on six vertices;
# structural properties are asserted in the tests that use it.
RP2_FACETS = ["123", "124", "135", "146", "156", "236", "245", "256", "345", "346"]


@st.composite
def neural_codes(draw, max_n: int = 5, allow_empty_word: bool = True, max_words: int = 10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    top = (1 << n) - 1
    lo = 0 if allow_empty_word else 1
    masks = draw(st.frozensets(st.integers(lo, top), max_size=max_words))
    return NeuralCode.from_masks(n, masks)


@st.composite
def nonempty_codes(draw, max_n: int = 5, max_words: int = 10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    top = (1 << n) - 1
    masks = draw(st.frozensets(st.integers(0, top), min_size=1, max_size=max_words))
    return NeuralCode.from_masks(n, masks)


@st.composite
def complexes(draw, max_n: int = 5, max_words: int = 8):
    """Arbitrary nonvoid complexes, {∅} included."""
    c = draw(neural_codes(max_n=max_n, max_words=max_words))
    K = code_complex(c)
    if K.is_void:
        return SimplicialComplex(c.n, frozenset({0}))
    return K


def seeded_complexes(count: int, seed: int, max_n: int = 6):
    """Deterministic stream of nonvoid complexes for the bulk suites."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        top = (1 << n) - 1
        k = rng.randint(1, min(8, top))
        masks = frozenset(rng.randint(1, top) for _ in range(k))
        K = SimplicialComplex.from_masks(masks, n)
        if not K.is_void:
            out.append(K)
    return out

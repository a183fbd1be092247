"""Schubert, Stanley and Schur polynomials, and Schubert-basis expansion.

Everything is built from reduced words: a Schubert polynomial is the sum
of slide polynomials of the weak descent compositions of its reduced
words (equivalently, a sum over compatible sequences), and a Stanley
symmetric polynomial replaces each slide with the quasisymmetric function
of the strong descent composition.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

from ._limits import CACHE_SIZE as _CACHE_SIZE
from .perm import Perm, canonical, from_code, grassmannian, length
from .poly import Polynomial, fundamental_quasisym, slide_polynomial
from .words import (
    VIRTUAL,
    compatible_sequences,
    iter_reduced_words,
    sequence_weight,
    strong_descent_composition,
    weak_descent_composition,
)


class NoSolutionError(ValueError):
    """The polynomial has no Schubert expansion within the ambient bound."""


def _accumulate(acc: dict[tuple[int, ...], int], p: Polynomial) -> None:
    for e, c in p.terms.items():
        c2 = acc.get(e, 0) + c
        if c2:
            acc[e] = c2
        else:
            del acc[e]


@lru_cache(maxsize=_CACHE_SIZE)
def _schubert(w: Perm) -> Polynomial:
    acc: dict[tuple[int, ...], int] = {}
    for word in iter_reduced_words(w):
        comp = weak_descent_composition(word)
        if comp is VIRTUAL:
            continue
        _accumulate(acc, slide_polynomial(comp))
    return Polynomial._raw(acc)


def schubert_via_slides(w: Sequence[int]) -> Polynomial:
    """Schubert polynomial as a sum of slide polynomials over reduced words.

    >>> str(schubert_via_slides((2, 1)))
    'x1'
    >>> str(schubert_via_slides((1, 3, 2)))
    'x1 + x2'
    """
    return _schubert(canonical(w))


def schubert_via_compatible(w: Sequence[int]) -> Polynomial:
    """Schubert polynomial as a sum over compatible sequences.

    Slower than schubert_via_slides but independent of the slide
    enumeration, which makes it a useful cross-check.
    """
    acc: dict[tuple[int, ...], int] = {}
    for word in iter_reduced_words(canonical(w)):
        for seq in compatible_sequences(word):
            e = sequence_weight(seq)
            acc[e] = acc.get(e, 0) + 1
    return Polynomial._raw(acc)


schubert = schubert_via_slides


@lru_cache(maxsize=_CACHE_SIZE)
def _stanley(w: Perm, k: int) -> Polynomial:
    acc: dict[tuple[int, ...], int] = {}
    for word in iter_reduced_words(w):
        _accumulate(acc, fundamental_quasisym(strong_descent_composition(word), k))
    return Polynomial._raw(acc)


def stanley(w: Sequence[int], k: int) -> Polynomial:
    """Stanley symmetric polynomial of w in the variables x1..xk.

    >>> str(stanley((2, 1), 2))
    'x1 + x2'
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _stanley(canonical(w), k)


def schur(lam: Sequence[int], k: int) -> Polynomial:
    """Schur polynomial s_lam(x1..xk), via its grassmannian permutation.

    >>> str(schur((1, 1), 2))
    'x1*x2'
    """
    return schubert(grassmannian(lam, k))


def schubert_expand(
    p: Polynomial, *, degree: int | None = None, ambient: int | None = None
) -> dict[Perm, int]:
    """Expand a homogeneous polynomial in the Schubert basis.

    Repeatedly clears the smallest monomial, which is the code of exactly
    one permutation and is the smallest monomial of that permutation's
    Schubert polynomial.  With ambient=N, any permutation moving a value
    beyond position N raises NoSolutionError; degree, when given, is
    checked against the polynomial.

    >>> schubert_expand(Polynomial({(1,): 1, (0, 1): 1}))
    {(1, 3, 2): 1}
    """
    degs = p.degrees()
    if len(degs) > 1:
        raise ValueError("Schubert expansion needs a homogeneous polynomial")
    if degree is not None and degs and degs != {degree}:
        raise ValueError(f"polynomial has degree {degs.pop()}, expected {degree}")
    work = dict(p.terms)
    out: dict[Perm, int] = {}
    while work:
        m = min(work)
        c = work[m]
        w = from_code(m)
        if ambient is not None and len(w) > ambient:
            raise NoSolutionError(
                f"pivot {m} needs a permutation of {len(w)} values, ambient is {ambient}"
            )
        out[w] = c
        for e, ce in schubert(w).terms.items():
            c2 = work.get(e, 0) - c * ce
            if c2:
                work[e] = c2
            else:
                work.pop(e, None)
        assert m not in work, "pivot monomial must clear"
        if work and min(work) <= m:
            raise AssertionError(f"pivot {m} did not advance the minimum")
    return out


def schubert_coefficient(p: Polynomial, w: Sequence[int]) -> int:
    """Coefficient of w's Schubert polynomial in p."""
    w = canonical(w)
    degs = p.degrees()
    if degs and degs != {length(w)}:
        return 0
    return schubert_expand(p).get(w, 0)

"""Noncommutative symmetric functions graded by color multidegree.

Basis words are tuples of nonzero class vectors; the empty word is the unit.
The product is concatenation.  The coproduct splits each letter
componentwise, a zero part contributing the unit on its side, so the
generator on class gamma is primitive-like: it splits into all ordered pairs
of classes summing to gamma.

rho is the algebra map sending the one-letter word on alpha to the
characteristic function kappa_alpha of the Hall algebra; js collects the
generators of a fixed total weight under a per-color weight assignment.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .enumeration import DEFAULT_SIZE_LIMIT, SizeLimitError
from .forest import EMPTY_FOREST, ParseError, add_classes, format_class, parse_class
from .hall import hall_mul, kappa
from .linear import LinComb

__all__ = [
    "nsym_mul",
    "nsym_comul",
    "rho",
    "js",
    "rho_js",
    "word_degree",
    "format_word",
    "parse_word",
]

Word = tuple  # tuple of nonzero class vectors


def word_degree(word: Word, ncolors: int) -> tuple[int, ...]:
    deg = (0,) * ncolors
    for letter in word:
        deg = add_classes(deg, letter)
    return deg


def _concat(u: Word, v: Word) -> LinComb:
    return LinComb.basis(u + v)


def nsym_mul(f: LinComb, g: LinComb) -> LinComb:
    """Concatenation product, extended bilinearly."""
    out = []
    for u, cu in f.terms.items():
        for v, cv in g.terms.items():
            out.append((u + v, cu * cv))
    return LinComb(out)


def _letter_splits(gamma):
    for alpha in itertools.product(*(range(g + 1) for g in gamma)):
        beta = tuple(g - a for g, a in zip(gamma, alpha))
        yield alpha, beta


@lru_cache(maxsize=None)
def _word_comul(word: Word) -> LinComb:
    pairs = LinComb.basis(((), ()))
    for gamma in word:
        step = []
        for (lw, rw), c in pairs.terms.items():
            for alpha, beta in _letter_splits(gamma):
                nl = lw + (alpha,) if any(alpha) else lw
                nr = rw + (beta,) if any(beta) else rw
                step.append(((nl, nr), c))
        pairs = LinComb(step)
    return pairs


def nsym_comul(f: LinComb) -> LinComb:
    """Coproduct splitting every letter componentwise (zero parts drop out)."""
    out = []
    for word, c in f.terms.items():
        out.extend((k, c * v) for k, v in _word_comul(word).terms.items())
    return LinComb(out)


@lru_cache(maxsize=None)
def _rho_word(word: Word) -> LinComb:
    if not word:
        return LinComb.basis(EMPTY_FOREST)
    return hall_mul(_rho_word(word[:-1]), kappa(word[-1]))


def rho(f: LinComb, limit: int | None = None) -> LinComb:
    """Algebra map into the Hall algebra: the one-letter word on alpha goes
    to kappa_alpha, concatenation goes to the convolution product."""
    bound = DEFAULT_SIZE_LIMIT if limit is None else limit
    for word in f.terms:
        total = sum(sum(letter) for letter in word)
        if total > bound:
            raise SizeLimitError(
                f"rho of a degree-{total} word exceeds the limit of {bound}"
            )
    out = []
    for word, c in f.terms.items():
        out.extend((k, c * v) for k, v in _rho_word(word).terms.items())
    return LinComb(out)


def js(n: int, weights, limit: int | None = None) -> LinComb:
    """Sum of the one-letter words over all classes of total weight ``n``.

    ``weights`` assigns a positive integer to each color; the weight of a
    class is the weighted vertex count.  ``js(0, ...)`` is the unit.
    """
    weights = tuple(int(w) for w in weights)
    if not weights:
        raise ValueError("at least one color weight is required")
    if any(w < 1 for w in weights):
        raise ValueError(f"weights must be positive: {weights}")
    if n < 0:
        raise ValueError("weight must be non-negative")
    bound = DEFAULT_SIZE_LIMIT if limit is None else limit
    if n > bound:
        raise SizeLimitError(f"weight {n} exceeds the limit of {bound}")
    terms = []
    for alpha in itertools.product(*(range(n // w + 1) for w in weights)):
        if sum(a * w for a, w in zip(alpha, weights)) == n:
            terms.append(((alpha,) if any(alpha) else (), 1))
    return LinComb(terms)


def rho_js(n: int, weights, limit: int | None = None) -> LinComb:
    """rho applied to js: the sum of delta_A over all forests whose class has
    total weight ``n``."""
    return rho(js(n, weights, limit), limit)


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return "|".join(format_class(letter) for letter in word)


def parse_word(text: str, ncolors: int | None = None) -> Word:
    """Parse ``(1,1)|(1,0)`` style words; ``1`` is the empty word."""
    stripped = text.strip()
    if stripped == "1":
        return ()
    letters = []
    for piece in stripped.split("|"):
        letter = parse_class(piece, ncolors)
        if not any(letter):
            raise ParseError("the zero class cannot appear in a word", 0)
        letters.append(letter)
    return tuple(letters)

"""Generation and counting of forests with a prescribed class vector.

Two independent routes are kept side by side on purpose: an orderly generator
(components chosen largest-first in the canonical order, so no
post-deduplication is ever needed) and a counting recursion combining the
rooted-tree recursion with a color-refined multiset Euler transform.  The
test suite requires the two to agree class by class.
"""

from __future__ import annotations

import itertools
import math
from functools import cache

from .forest import Forest, Tree

__all__ = [
    "DEFAULT_SIZE_LIMIT",
    "SizeLimitError",
    "forests_of_class",
    "trees_of_class",
    "count_forests_of_class",
]

DEFAULT_SIZE_LIMIT = 12


class SizeLimitError(ValueError):
    """A request exceeded the configured vertex budget."""


def _check_class(alpha: tuple[int, ...], limit: int | None) -> None:
    shown = "(" + ",".join(str(a) for a in alpha) + ")"
    if not alpha:
        raise ValueError("class vector needs at least one color")
    if any(a < 0 for a in alpha):
        raise ValueError(f"class entries must be non-negative: {shown}")
    bound = DEFAULT_SIZE_LIMIT if limit is None else limit
    total = sum(alpha)
    if total > bound:
        raise SizeLimitError(
            f"class {shown} has {total} vertices, over the limit of {bound}"
        )


def _decrement(alpha: tuple[int, ...], s: int) -> tuple[int, ...]:
    return alpha[:s] + (alpha[s] - 1,) + alpha[s + 1 :]


def _subclasses(alpha: tuple[int, ...]):
    """Nonzero beta <= alpha componentwise, in a fixed order."""
    for beta in itertools.product(*(range(a + 1) for a in alpha)):
        if any(beta):
            yield beta


@cache
def _trees(alpha: tuple[int, ...]) -> tuple[Tree, ...]:
    """All trees of class alpha: a root of some color over a smaller forest."""
    out = []
    for s, count in enumerate(alpha):
        if count:
            for forest in _forests(_decrement(alpha, s)):
                out.append(Tree(s, forest.trees))
    out.sort(key=lambda t: t.key)
    return tuple(out)


@cache
def _forests_bounded(alpha: tuple[int, ...], bound) -> tuple[Forest, ...]:
    """Forests of class alpha whose components all have key <= bound.

    The recursion picks the maximal component first; requiring the rest to
    stay <= its key makes every multiset appear exactly once.
    """
    if not any(alpha):
        return (Forest(),)
    out = []
    for beta in _subclasses(alpha):
        rest_class = tuple(a - b for a, b in zip(alpha, beta))
        for tree in _trees(beta):
            if bound is not None and tree.key > bound:
                continue
            for rest in _forests_bounded(rest_class, tree.key):
                out.append(Forest((tree,) + rest.trees))
    out.sort(key=lambda f: f.key)
    return tuple(out)


@cache
def _forests(alpha: tuple[int, ...]) -> tuple[Forest, ...]:
    return _forests_bounded(alpha, None)


@cache
def _tree_count(alpha: tuple[int, ...]) -> int:
    return sum(
        _forest_count(_decrement(alpha, s))
        for s, count in enumerate(alpha)
        if count
    )


@cache
def _forest_count(alpha: tuple[int, ...]) -> int:
    """Count forests of class alpha without generating them.

    Multiset Euler transform refined by class: process each possible
    component class beta in a fixed order and choose how many components of
    that class to use, with multichoose(kinds, k) ways to pick k components
    among ``kinds`` tree shapes.
    """
    if not any(alpha):
        return 1
    box = list(itertools.product(*(range(a + 1) for a in alpha)))
    table = {gamma: 0 for gamma in box}
    table[tuple(0 for _ in alpha)] = 1
    for beta in box:
        if not any(beta):
            continue
        kinds = _tree_count(beta)
        if not kinds:
            continue
        new = {}
        for gamma in box:
            total = 0
            k = 0
            while True:
                sub = tuple(g - k * b for g, b in zip(gamma, beta))
                if any(x < 0 for x in sub):
                    break
                total += math.comb(kinds + k - 1, k) * table[sub]
                k += 1
            new[gamma] = total
        table = new
    return table[alpha]


def forests_of_class(alpha, limit: int | None = None) -> list[Forest]:
    """All non-isomorphic forests whose per-color vertex counts equal alpha.

    Deterministic order (sorted canonical keys).  Raises SizeLimitError when
    sum(alpha) exceeds ``limit`` (default 12).
    """
    alpha = tuple(alpha)
    _check_class(alpha, limit)
    return list(_forests(alpha))


def trees_of_class(alpha, limit: int | None = None) -> list[Tree]:
    """All non-isomorphic trees of class alpha, in canonical order."""
    alpha = tuple(alpha)
    _check_class(alpha, limit)
    return list(_trees(alpha))


def count_forests_of_class(alpha, limit: int | None = None) -> int:
    """Count forests of class alpha by the Euler-transform recursion.

    Independent of :func:`forests_of_class`; tests require agreement.
    """
    alpha = tuple(alpha)
    _check_class(alpha, limit)
    return _forest_count(alpha)

"""The Hall algebra of colored rooted forests, and its graded dual.

The delta basis is indexed by canonical forests.  The product counts
admissible cuts: the coefficient of delta_M in delta_A * delta_B is the
number of cuts of M whose pruned part is isomorphic to A and whose root part
is isomorphic to B.  Candidate forests M are produced by grafting the
components of A onto B (each component hangs below some vertex of B or drops
in as a new component); the coefficient is then recomputed by cut counting,
never read off grafting multiplicities, which overcount whenever
automorphisms identify attachment sites.

The coproduct is dual to disjoint union: delta_A splits into the distinct
ordered pairs (A', A'') with A' + A'' isomorphic to A, each with coefficient
one.  Together these make the span of the deltas a co-commutative connected
graded bialgebra, hence a Hopf algebra; the antipode is computed by the
standard recursion.

The dual W basis (indexed by the same forests) multiplies by disjoint union
and comultiplies over admissible cuts; ck_mul/ck_comul expose that side at
the basis level.
"""

from __future__ import annotations

import bisect
import itertools
from fractions import Fraction
from functools import lru_cache

from .cuts import count_cut_pairs, enumerate_cuts
from .enumeration import DEFAULT_SIZE_LIMIT, SizeLimitError, forests_of_class
from .forest import EMPTY_FOREST, Forest, Tree, direct_sum
from .linear import LinComb, bilinear

__all__ = [
    "delta",
    "hall_mul",
    "hall_comul",
    "kappa",
    "counit",
    "antipode",
    "ck_mul",
    "ck_comul",
]


def delta(forest: Forest) -> LinComb:
    """The basis element delta_F as a linear combination."""
    return LinComb.basis(forest)


def _attach(tree: Tree, base: int, extras: dict) -> Tree:
    """Rebuild ``tree`` grafting extra subtrees below the vertices whose
    preorder indices appear in ``extras``."""
    new_children = []
    child_base = base + 1
    for child in tree.children:
        new_children.append(_attach(child, child_base, extras))
        child_base += child.size
    new_children.extend(extras.get(base, ()))
    return Tree(tree.color, new_children)


def _graft_candidates(a: Forest, b: Forest) -> list[Forest]:
    """Forests obtainable by attaching each component of ``a`` at some vertex
    of ``b`` or adding it as a new component.

    Every M with a cut (pruned=A, root=B) arises this way: undoing the cut
    re-attaches each pruned component below its former parent in B, or
    reinstates it as a component of M when the full cut removed it.
    """
    offsets = []
    acc = 0
    for tree in b.trees:
        offsets.append(acc)
        acc += tree.size
    targets = range(-1, b.size)
    candidates = set()
    for assignment in itertools.product(targets, repeat=len(a.trees)):
        extras: list[dict] = [{} for _ in b.trees]
        standalone = []
        for tree, target in zip(a.trees, assignment):
            if target < 0:
                standalone.append(tree)
            else:
                ci = bisect.bisect_right(offsets, target) - 1
                extras[ci].setdefault(target - offsets[ci], []).append(tree)
        components = [
            _attach(tree, 0, extra) if extra else tree
            for tree, extra in zip(b.trees, extras)
        ]
        candidates.add(Forest(tuple(components) + tuple(standalone)))
    return sorted(candidates, key=lambda f: f.key)


@lru_cache(maxsize=None)
def _delta_mul(a: Forest, b: Forest) -> LinComb:
    terms = []
    for m in _graft_candidates(a, b):
        count = count_cut_pairs(m, a, b)
        if count:
            terms.append((m, count))
    return LinComb(terms)


def hall_mul(f: LinComb, g: LinComb) -> LinComb:
    """Convolution product, extended bilinearly from the delta basis."""
    return bilinear(f, g, _delta_mul)


@lru_cache(maxsize=None)
def _delta_comul(a: Forest) -> LinComb:
    # Distinct ordered splittings of the component multiset; equal components
    # are adjacent in the canonical order, so groupby sees them together.
    distinct = [
        (tree, len(list(group))) for tree, group in itertools.groupby(a.trees)
    ]
    terms = []
    for picks in itertools.product(*(range(c + 1) for _, c in distinct)):
        left: list[Tree] = []
        right: list[Tree] = []
        for (tree, count), k in zip(distinct, picks):
            left.extend([tree] * k)
            right.extend([tree] * (count - k))
        terms.append(((Forest(left), Forest(right)), 1))
    return LinComb(terms)


def hall_comul(f: LinComb) -> LinComb:
    """Coproduct dual to disjoint union: delta_A splits into every distinct
    ordered pair (A', A'') with A' + A'' isomorphic to A, coefficient one."""
    out = []
    for a, c in f.terms.items():
        out.extend((pair, c * v) for pair, v in _delta_comul(a).terms.items())
    return LinComb(out)


def kappa(alpha, limit: int | None = None) -> LinComb:
    """Characteristic function of a class: the sum of delta_F over every
    forest F of class ``alpha``.  kappa of the zero class is the unit."""
    return LinComb((f, 1) for f in forests_of_class(alpha, limit))


def counit(f: LinComb) -> Fraction:
    """Coefficient at the empty forest."""
    return f.coeff(EMPTY_FOREST)


def antipode(f: LinComb, limit: int | None = None) -> LinComb:
    """Hopf antipode, by the connected graded recursion."""
    bound = DEFAULT_SIZE_LIMIT if limit is None else limit
    for forest in f.terms:
        if forest.size > bound:
            raise SizeLimitError(
                f"antipode of a {forest.size}-vertex forest exceeds the "
                f"limit of {bound}"
            )
    out = LinComb()
    for forest, c in f.terms.items():
        out = out + c * _antipode_delta(forest)
    return out


@lru_cache(maxsize=None)
def _antipode_delta(a: Forest) -> LinComb:
    # S(x) = -x - sum S(x') x'' over the reduced coproduct; terminates
    # because both tensor legs of every reduced term are strictly smaller.
    if a.size == 0:
        return LinComb.basis(a)
    acc = -LinComb.basis(a)
    for (left, right), c in _delta_comul(a).terms.items():
        if left.size == 0 or right.size == 0:
            continue
        acc = acc - c * hall_mul(_antipode_delta(left), LinComb.basis(right))
    return acc


def ck_mul(a: Forest, b: Forest) -> Forest:
    """Product on the dual W basis: disjoint union of the indexing forests."""
    return direct_sum(a, b)


def ck_comul(a: Forest) -> list[tuple[Forest, Forest]]:
    """Coproduct terms on the dual W basis: one (pruned, root) pair per
    admissible cut, repeats included."""
    return [(res.pruned, res.root_part) for _, res in enumerate_cuts(a)]

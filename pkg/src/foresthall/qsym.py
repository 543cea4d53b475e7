"""Quasisymmetric functions graded by color multidegree.

Basis compositions are tuples of nonzero class vectors, written
Z[(2,1),(1,0)]; the empty composition is the unit.  The product is the
quasi-shuffle (interleave or merge adjacent parts), the coproduct is
deconcatenation, and the Kronecker pairing against words of classes makes
this the graded dual of the concatenation side.

rho_t expands a forest over compositions by enumerating flags: iterated
admissible cuts with every step nonempty.  It is the transpose of rho under
the pairing, and a Hopf algebra map from the disjoint-union/cut side.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cuts import enumerate_flags
from .enumeration import DEFAULT_SIZE_LIMIT, SizeLimitError
from .forest import Forest, ParseError, add_classes, format_class, parse_class
from .linear import LinComb, bilinear

__all__ = [
    "quasi_shuffle",
    "deconcat",
    "pair",
    "rho_t",
    "composition_degree",
    "format_composition",
    "parse_composition",
]

Composition = tuple  # tuple of nonzero class vectors


def composition_degree(comp: Composition, ncolors: int) -> tuple[int, ...]:
    deg = (0,) * ncolors
    for part in comp:
        deg = add_classes(deg, part)
    return deg


@lru_cache(maxsize=None)
def _shuffle_pair(x: Composition, y: Composition) -> LinComb:
    # Recursion over leading parts: take from the left, take from the right,
    # or merge one part from each side.
    if not x:
        return LinComb.basis(y)
    if not y:
        return LinComb.basis(x)
    terms = []
    for head, rest in (
        (x[0], _shuffle_pair(x[1:], y)),
        (y[0], _shuffle_pair(x, y[1:])),
        (add_classes(x[0], y[0]), _shuffle_pair(x[1:], y[1:])),
    ):
        terms.extend(((head,) + comp, c) for comp, c in rest.terms.items())
    return LinComb(terms)


def quasi_shuffle(f: LinComb, g: LinComb) -> LinComb:
    """Quasi-shuffle product, extended bilinearly."""
    return bilinear(f, g, _shuffle_pair)


def deconcat(f: LinComb) -> LinComb:
    """Deconcatenation coproduct: a k-part composition splits at each of the
    k+1 positions."""
    out = []
    for comp, c in f.terms.items():
        for i in range(len(comp) + 1):
            out.append(((comp[:i], comp[i:]), c))
    return LinComb(out)


def pair(z: LinComb, x: LinComb) -> Fraction:
    """Kronecker pairing: a composition matches exactly the equal word."""
    if len(z.terms) > len(x.terms):
        z, x = x, z
    total = Fraction(0)
    for key, c in z.terms.items():
        other = x.terms.get(key)
        if other is not None:
            total += c * other
    return total


def rho_t(forest: Forest, ncolors: int, limit: int | None = None) -> LinComb:
    """Expand a W-basis forest over compositions via iterated cuts.

    The coefficient of Z[alpha_1,..,alpha_k] is the number of k-step flags
    of the forest with those root-part classes; the empty forest maps to the
    unit.
    """
    bound = DEFAULT_SIZE_LIMIT if limit is None else limit
    if forest.size > bound:
        raise SizeLimitError(
            f"rho_t of a {forest.size}-vertex forest exceeds the limit of "
            f"{bound}"
        )
    if forest.size == 0:
        return LinComb.basis(())
    terms = []
    for k in range(1, forest.size + 1):
        for flag in enumerate_flags(forest, k, ncolors):
            terms.append((flag, 1))
    return LinComb(terms)


def format_composition(comp: Composition) -> str:
    return "Z[" + ",".join(format_class(part) for part in comp) + "]"


def parse_composition(text: str, ncolors: int | None = None) -> Composition:
    """Parse ``Z[(2,1),(1,0)]`` style compositions; ``Z[]`` is the unit."""
    stripped = text.strip()
    if not stripped.startswith("Z[") or not stripped.endswith("]"):
        raise ParseError("composition must look like Z[(2,1),(1,0)]", 0)
    inner = stripped[2:-1].strip()
    if not inner:
        return ()
    pieces = []
    depth, start = 0, 0
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses in composition", i)
        elif ch == "," and depth == 0:
            pieces.append(inner[start:i])
            start = i + 1
    if depth:
        raise ParseError("unbalanced parentheses in composition", len(inner))
    pieces.append(inner[start:])
    parts = []
    for piece in pieces:
        part = parse_class(piece, ncolors)
        if not any(part):
            raise ParseError("the zero class cannot appear in a composition", 0)
        parts.append(part)
    return tuple(parts)

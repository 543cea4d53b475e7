"""Canonical colored rooted forests.

Trees and forests are immutable and canonical by construction: children and
forest components are kept sorted under a fixed total order (color id first,
then child lists, compared recursively), so two colored rooted forests are
isomorphic exactly when they compare equal.  Everything downstream indexes
its linear algebra by these canonical representatives.
"""

from __future__ import annotations

import re

__all__ = [
    "ColorTable",
    "Tree",
    "Forest",
    "EMPTY_FOREST",
    "ParseError",
    "parse_forest",
    "format_forest",
    "format_tree",
    "direct_sum",
    "k0_class",
    "single_vertex",
    "zero_class",
    "basis_class",
    "add_classes",
    "format_class",
    "parse_class",
]

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    """Malformed input text; ``position`` is the 0-based offset of the error."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ColorTable:
    """Ordered, finite set of color names.

    The declaration order is significant: it fixes the coordinate order of
    every class vector produced while the table is in use.
    """

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("at least one color is required")
        for name in names:
            if not _IDENT_RE.match(name):
                raise ValueError(f"invalid color identifier: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate color names in {names!r}")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}

    def id(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"unknown color {name!r}") from None

    def name(self, cid: int) -> str:
        return self.names[cid]

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, ColorTable) and self.names == other.names

    def __repr__(self) -> str:
        return f"ColorTable({','.join(self.names)})"


class Tree:
    """One colored rooted tree, children canonically sorted at construction.

    ``key`` is the nested tuple (color, child keys); two trees are isomorphic
    exactly when their keys are equal, and tuple comparison of keys gives the
    total order used everywhere for sorting.
    """

    __slots__ = ("color", "children", "key", "size", "_hash")

    def __init__(self, color: int, children=()):
        if color < 0:
            raise ValueError("color ids are non-negative")
        kids = sorted(children, key=lambda t: t.key)
        self.color = color
        self.children = tuple(kids)
        self.key = (color, tuple(t.key for t in kids))
        self.size = 1 + sum(t.size for t in kids)
        self._hash = hash(self.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Tree") -> bool:
        return self.key < other.key

    def _plain(self) -> str:
        if not self.children:
            return str(self.color)
        return f"{self.color}[{','.join(c._plain() for c in self.children)}]"

    def __repr__(self) -> str:
        return f"Tree({self._plain()})"


class Forest:
    """A multiset of trees, stored sorted; ``Forest()`` is the empty forest."""

    __slots__ = ("trees", "key", "size", "_hash")

    def __init__(self, trees=()):
        ts = sorted(trees, key=lambda t: t.key)
        self.trees = tuple(ts)
        self.key = tuple(t.key for t in ts)
        self.size = sum(t.size for t in ts)
        self._hash = hash(self.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Forest) and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Forest") -> bool:
        return self.key < other.key

    def __bool__(self) -> bool:
        return bool(self.trees)

    def __repr__(self) -> str:
        if not self.trees:
            return "Forest(0)"
        return f"Forest({'+'.join(t._plain() for t in self.trees)})"


EMPTY_FOREST = Forest()


def single_vertex(color: int) -> Forest:
    """The one-vertex forest in the given color."""
    return Forest((Tree(color),))


def direct_sum(left: Forest, right: Forest) -> Forest:
    """Disjoint union of two forests (multiset union of their components)."""
    return Forest(left.trees + right.trees)


def k0_class(forest: Forest, ncolors: int) -> tuple[int, ...]:
    """Per-color vertex counts of ``forest`` as a length-``ncolors`` vector.

    This is the complete additive invariant: it is invariant under the
    pruned/root splitting of any admissible cut, and classifies forests up to
    the relation generated by those splittings.
    """
    counts = [0] * ncolors
    stack = list(forest.trees)
    while stack:
        tree = stack.pop()
        if tree.color >= ncolors:
            raise ValueError(
                f"color id {tree.color} out of range for {ncolors} colors"
            )
        counts[tree.color] += 1
        stack.extend(tree.children)
    return tuple(counts)


def zero_class(ncolors: int) -> tuple[int, ...]:
    return (0,) * ncolors


def basis_class(color: int, ncolors: int) -> tuple[int, ...]:
    return tuple(1 if i == color else 0 for i in range(ncolors))


def add_classes(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def format_class(alpha) -> str:
    return "(" + ",".join(str(a) for a in alpha) + ")"


def parse_class(text: str, ncolors: int | None = None) -> tuple[int, ...]:
    """Parse a class vector like ``(2,1)``; entries must be non-negative."""
    stripped = text.strip()
    if not stripped.startswith("(") or not stripped.endswith(")"):
        raise ParseError("class vector must be parenthesized, e.g. (2,1)", 0)
    entries = []
    for piece in stripped[1:-1].split(","):
        piece = piece.strip()
        if not piece.isdigit():
            raise ParseError(
                f"class entries must be non-negative integers, got {piece!r}",
                text.find(piece) if piece else 1,
            )
        entries.append(int(piece))
    if ncolors is not None and len(entries) != ncolors:
        raise ParseError(
            f"class vector has {len(entries)} entries, expected {ncolors}", 0
        )
    return tuple(entries)


# --- forest grammar -------------------------------------------------------
#
#   forest := "0" | tree ("+" tree)*
#   tree   := IDENT | IDENT "[" tree ("," tree)* "]"
#   IDENT  := [A-Za-z_][A-Za-z0-9_]*
#
# Whitespace between tokens is ignored.  Output is always canonical and
# contains no whitespace.

_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[0\[\],+]")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos, n = 0, len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((match.group(), pos))
        pos = match.end()
    tokens.append(("", n))
    return tokens


def parse_forest(text: str, colors: ColorTable) -> Forest:
    """Parse the forest grammar against ``colors``; returns canonical form."""
    tokens = _tokenize(text)
    cursor = 0

    def peek() -> str:
        return tokens[cursor][0]

    def take() -> tuple[str, int]:
        nonlocal cursor
        token = tokens[cursor]
        cursor += 1
        return token

    def parse_tree() -> Tree:
        token, pos = take()
        if not _IDENT_RE.match(token):
            what = repr(token) if token else "end of input"
            raise ParseError(f"expected a color identifier, got {what}", pos)
        if token not in colors.index:
            raise ParseError(f"unknown color {token!r}", pos)
        color = colors.index[token]
        children = []
        if peek() == "[":
            take()
            children.append(parse_tree())
            while peek() == ",":
                take()
                children.append(parse_tree())
            closer, cpos = take()
            if closer != "]":
                raise ParseError("expected ',' or ']'", cpos)
        return Tree(color, children)

    if peek() == "0":
        take()
        token, pos = take()
        if token:
            raise ParseError("unexpected text after the empty forest '0'", pos)
        return EMPTY_FOREST

    trees = [parse_tree()]
    while peek() == "+":
        take()
        trees.append(parse_tree())
    token, pos = take()
    if token:
        raise ParseError(f"unexpected trailing {token!r}", pos)
    return Forest(trees)


def format_tree(tree: Tree, colors: ColorTable) -> str:
    name = colors.name(tree.color)
    if not tree.children:
        return name
    return f"{name}[{','.join(format_tree(c, colors) for c in tree.children)}]"


def format_forest(forest: Forest, colors: ColorTable) -> str:
    """Canonical serialization; inverse of :func:`parse_forest`."""
    if not forest.trees:
        return "0"
    return "+".join(format_tree(t, colors) for t in forest.trees)

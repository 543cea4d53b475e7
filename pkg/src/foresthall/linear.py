"""Sparse linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction

__all__ = ["LinComb", "bilinear", "tensor", "tensor_mul"]

_SCALARS = (int, Fraction)


class LinComb:
    """Finitely supported map from hashable basis keys to ``Fraction``.

    Zero coefficients are never stored, so equality is plain dict equality.
    Instances are treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            acc = data.get(key, 0) + coeff
            if acc:
                data[key] = acc
            else:
                del data[key]
        self.terms = data

    @classmethod
    def basis(cls, key, coeff=1) -> "LinComb":
        return cls(((key, coeff),))

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        merged = list(self.terms.items())
        merged.extend(other.terms.items())
        return LinComb(merged)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        merged = list(self.terms.items())
        merged.extend((k, -c) for k, c in other.terms.items())
        return LinComb(merged)

    def __neg__(self) -> "LinComb":
        return LinComb((k, -c) for k, c in self.terms.items())

    def __mul__(self, scalar) -> "LinComb":
        if not isinstance(scalar, _SCALARS):
            return NotImplemented
        return LinComb((k, c * scalar) for k, c in self.terms.items())

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.terms:
            return "LinComb(0)"
        inner = ", ".join(f"{k!r}: {c}" for k, c in self.terms.items())
        return f"LinComb({{{inner}}})"


def bilinear(f: LinComb, g: LinComb, basis_mul) -> LinComb:
    """Extend a basis-level product bilinearly; ``basis_mul(a, b) -> LinComb``."""
    out = []
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            scale = ca * cb
            out.extend((k, scale * c) for k, c in basis_mul(a, b).terms.items())
    return LinComb(out)


def tensor(f: LinComb, g: LinComb) -> LinComb:
    """Simple tensor f (x) g as a combination keyed by (left, right) pairs."""
    return LinComb(
        ((a, b), ca * cb)
        for a, ca in f.terms.items()
        for b, cb in g.terms.items()
    )


def tensor_mul(t1: LinComb, t2: LinComb, left_mul, right_mul) -> LinComb:
    """Componentwise product of two pair-keyed combinations.

    ``left_mul``/``right_mul`` are basis-level products returning LinComb.
    """
    out = []
    for (a, b), c1 in t1.terms.items():
        for (x, y), c2 in t2.terms.items():
            scale = c1 * c2
            left = left_mul(a, x)
            right = right_mul(b, y)
            for kl, cl in left.terms.items():
                for kr, cr in right.terms.items():
                    out.append(((kl, kr), scale * cl * cr))
    return LinComb(out)

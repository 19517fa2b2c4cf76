"""
Linear combinations of diagrams over exact rationals.

An element of the hom-space from m to n is a finite rational combination
of m-n-diagrams.  Multiplication composes diagrams bilinearly; each closed
middle loop contributes one factor of the loop parameter p, so a pair of
diagrams whose composition closes k loops contributes p^k times the bare
composite.  With m = n these spaces are the Brauer algebras; restricting
to non-crossing diagrams gives the Temperley-Lieb subalgebras.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .diagrams import (
    Diagram,
    ShapeMismatchError,
    compose,
    diagram_from_json,
    diagram_to_json,
)

Scalar = Fraction | int


class AlgebraElement:
    """A rational linear combination of diagrams of one common shape.

    Zero coefficients are never stored, so structural equality of the
    terms dict is equality of elements.
    """

    __slots__ = ("top", "bottom", "terms")

    def __init__(self, top: int, bottom: int, terms: dict[Diagram, Scalar] | None = None):
        self.top = top
        self.bottom = bottom
        clean: dict[Diagram, Fraction] = {}
        for d, c in (terms or {}).items():
            if d.top != top or d.bottom != bottom:
                raise ShapeMismatchError(
                    f"diagram of shape {d.top}>{d.bottom} in element of shape {top}>{bottom}"
                )
            c = Fraction(c)
            if c:
                clean[d] = c
        self.terms = clean

    @classmethod
    def from_diagram(cls, d: Diagram, coeff: Scalar = 1) -> AlgebraElement:
        return cls(d.top, d.bottom, {d: coeff})

    def coefficient(self, d: Diagram) -> Fraction:
        return self.terms.get(d, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _sorted_terms(self) -> list[tuple[Diagram, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.top, self.bottom, self.terms) == (other.top, other.bottom, other.terms)

    __hash__ = None

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return add(self, other)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return add(self, scale(-1, other))

    def __rmul__(self, c: Scalar) -> AlgebraElement:
        return scale(c, self)

    def __repr__(self) -> str:
        if self.is_zero():
            return f"AlgebraElement({self.top}>{self.bottom}: 0)"
        body = " + ".join(f"({c})*{d}" for d, c in self._sorted_terms())
        return f"AlgebraElement({body})"


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if (a.top, a.bottom) != (b.top, b.bottom):
        raise ShapeMismatchError(f"cannot add {a.top}>{a.bottom} to {b.top}>{b.bottom}")
    terms = dict(a.terms)
    for d, c in b.terms.items():
        terms[d] = terms.get(d, Fraction(0)) + c
    return AlgebraElement(a.top, a.bottom, terms)


def scale(c: Scalar, a: AlgebraElement) -> AlgebraElement:
    c = Fraction(c)
    return AlgebraElement(a.top, a.bottom, {d: c * v for d, v in a.terms.items()})


def multiply(a: AlgebraElement, b: AlgebraElement, p: int) -> AlgebraElement:
    """Bilinear product; a is applied first, loops become factors of p."""
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"loop parameter must be an integer >= 1, got {p!r}")
    if a.bottom != b.top:
        raise ShapeMismatchError(f"cannot multiply {a.top}>{a.bottom} by {b.top}>{b.bottom}")
    terms: dict[Diagram, Fraction] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            w = compose(d1, d2)
            coeff = c1 * c2 * p**w.loops
            terms[w.diagram] = terms.get(w.diagram, Fraction(0)) + coeff
    return AlgebraElement(a.top, b.bottom, terms)


def brauer_dimension(n: int) -> int:
    """Number of n-diagrams, the double factorial (2n-1)!!.

    >>> [brauer_dimension(n) for n in range(1, 6)]
    [1, 3, 15, 105, 945]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def tl_dimension(n: int) -> int:
    """Number of non-crossing n-diagrams, the Catalan number C(n).

    >>> [tl_dimension(n) for n in range(1, 6)]
    [1, 2, 5, 14, 42]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def _fraction_to_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def element_to_json(a: AlgebraElement) -> dict:
    """JSON-ready dict with exact "num/den" coefficient strings."""
    return {
        "top": a.top,
        "bottom": a.bottom,
        "terms": [
            {"coeff": _fraction_to_str(c), "diagram": diagram_to_json(d)}
            for d, c in a._sorted_terms()
        ],
    }


def element_from_json(obj: dict) -> AlgebraElement:
    terms = {
        diagram_from_json(t["diagram"]): _fraction_from_str(t["coeff"])
        for t in obj["terms"]
    }
    return AlgebraElement(obj["top"], obj["bottom"], terms)

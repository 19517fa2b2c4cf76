"""
Brauer m-n-diagrams: perfect matchings on two rows of labelled vertices.

A diagram with m top and n bottom vertices pairs up all m + n vertices, so
m + n must be even.  Diagrams are the arrows of a category whose objects
are natural numbers: an m-n-diagram goes from m (the top row, the domain)
to n (the bottom row, the codomain).  Stacking d1: m -> n above
d2: n -> q and joining threads through the shared middle row yields the
composite m -> q, except that some threads close up into circles touching
neither outer row; the number of such circles is the loop count of the
composition and is tracked exactly.

Vertices are 1-based, written T1..Tm and B1..Bn.  The text notation is

    3>3:[T1-T3,T2-B1,B2-B3]

whitespace-insensitive on input, canonical on output: T before B inside a
pair, smaller index first within a row, pairs sorted lexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

TOP = 0
BOTTOM = 1

Vertex = tuple[int, int]
Pair = tuple[Vertex, Vertex]


class ShapeMismatchError(ValueError):
    """Composition of arrows whose interfaces do not line up."""


class NotationError(ValueError):
    """Malformed diagram text; `position` is the offset of the bad input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _vertex_label(v: Vertex) -> str:
    row, idx = v
    return f"{'T' if row == TOP else 'B'}{idx}"


def _vertex_from_label(label: str) -> Vertex:
    # only used on already-validated labels (JSON input)
    row = TOP if label[0] == "T" else BOTTOM
    return (row, int(label[1:]))


@dataclass(frozen=True)
class Diagram:
    """A perfect matching on m top and n bottom vertices, stored canonically.

    Any iterable of vertex pairs in any order and orientation is accepted;
    the constructor canonicalizes, so structural equality of the dataclass
    is equality of matchings.

    >>> a = Diagram(2, 2, (((TOP, 2), (TOP, 1)), ((BOTTOM, 2), (BOTTOM, 1))))
    >>> b = Diagram(2, 2, (((BOTTOM, 1), (BOTTOM, 2)), ((TOP, 1), (TOP, 2))))
    >>> a == b
    True
    >>> str(a)
    '2>2:[T1-T2,B1-B2]'
    """

    top: int
    bottom: int
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        if self.top < 0 or self.bottom < 0:
            raise ValueError("vertex counts must be nonnegative")
        canon = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", canon)
        expected = {(TOP, i) for i in range(1, self.top + 1)}
        expected |= {(BOTTOM, j) for j in range(1, self.bottom + 1)}
        seen: set[Vertex] = set()
        for p in canon:
            if len(p) != 2 or p[0] == p[1]:
                raise ValueError(f"pair {p} does not join two distinct vertices")
            for v in p:
                if v not in expected:
                    raise ValueError(f"vertex {v} out of range for shape {self.top}>{self.bottom}")
                if v in seen:
                    raise ValueError(f"vertex {_vertex_label(v)} matched twice")
                seen.add(v)
        if seen != expected:
            missing = sorted(expected - seen)
            raise ValueError(f"unmatched vertices: {[_vertex_label(v) for v in missing]}")

    def mate(self, v: Vertex) -> Vertex:
        """Partner of vertex v in the matching."""
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        raise KeyError(v)

    def __str__(self) -> str:
        return format_diagram(self)

    def __repr__(self) -> str:
        return f'Diagram("{format_diagram(self)}")'


@dataclass(frozen=True)
class WeightedDiagram:
    """A diagram together with the number of closed loops it has absorbed."""

    diagram: Diagram
    loops: int = 0

    def __post_init__(self):
        if self.loops < 0:
            raise ValueError("loop count must be nonnegative")

    def __str__(self) -> str:
        return format_weighted(self)

    def __repr__(self) -> str:
        return f'WeightedDiagram("{format_weighted(self)}")'


def _mate_map(d: Diagram) -> dict[Vertex, Vertex]:
    m: dict[Vertex, Vertex] = {}
    for a, b in d.pairs:
        m[a] = b
        m[b] = a
    return m


def identity(n: int) -> Diagram:
    """The identity n-diagram T_i - B_i.

    >>> str(identity(3))
    '3>3:[T1-B1,T2-B2,T3-B3]'
    """
    return Diagram(n, n, tuple(((TOP, i), (BOTTOM, i)) for i in range(1, n + 1)))


def from_permutation(images: Sequence[int]) -> Diagram:
    """Permutation diagram: T_i joined to B_images[i-1] (1-based images)."""
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"{list(images)} is not a permutation of 1..{n}")
    return Diagram(n, n, tuple(((TOP, i), (BOTTOM, images[i - 1])) for i in range(1, n + 1)))


def transpose(d: Diagram) -> Diagram:
    """Mirror across the horizontal axis: swaps the two rows.

    >>> transpose(transpose(parse_diagram("3>1:[T1-T2,T3-B1]"))) == parse_diagram("3>1:[T1-T2,T3-B1]")
    True
    """
    flip = {TOP: BOTTOM, BOTTOM: TOP}
    pairs = tuple(((flip[a[0]], a[1]), (flip[b[0]], b[1])) for a, b in d.pairs)
    return Diagram(d.bottom, d.top, pairs)


def compose(d1: Diagram, d2: Diagram) -> WeightedDiagram:
    """Compose d1: m -> n with d2: n -> q by stacking d1 above d2.

    d1 is applied first.  Threads are traced through the shared middle row;
    middle cycles that touch neither outer row are counted as loops.

    >>> e = parse_diagram("2>2:[T1-T2,B1-B2]")
    >>> str(compose(e, e))
    'k=1, 2>2:[T1-T2,B1-B2]'
    """
    if d1.bottom != d2.top:
        raise ShapeMismatchError(
            f"cannot compose {d1.top}>{d1.bottom} with {d2.top}>{d2.bottom}: "
            f"{d1.bottom} != {d2.top}"
        )
    mate1 = _mate_map(d1)
    mate2 = _mate_map(d2)
    mid = d1.bottom
    seen = [False] * (mid + 1)

    def trace(side: int, v: Vertex) -> tuple[int, Vertex]:
        # follow threads until an outer endpoint appears
        while True:
            if side == 1:
                w = mate1[v]
                if w[0] == TOP:
                    return 1, w
                seen[w[1]] = True
                side, v = 2, (TOP, w[1])
            else:
                w = mate2[v]
                if w[0] == BOTTOM:
                    return 2, w
                seen[w[1]] = True
                side, v = 1, (BOTTOM, w[1])

    pairs: list[Pair] = []
    done: set[tuple[int, Vertex]] = set()
    starts = [(1, (TOP, i)) for i in range(1, d1.top + 1)]
    starts += [(2, (BOTTOM, j)) for j in range(1, d2.bottom + 1)]
    for side, v in starts:
        if (side, v) in done:
            continue
        end_side, w = trace(side, v)
        done.add((end_side, w))
        pairs.append((v, w))

    loops = 0
    for j0 in range(1, mid + 1):
        if seen[j0]:
            continue
        loops += 1
        j = j0
        while not seen[j]:
            seen[j] = True
            j1 = mate1[(BOTTOM, j)][1]
            seen[j1] = True
            j = mate2[(TOP, j1)][1]
    return WeightedDiagram(Diagram(d1.top, d2.bottom, tuple(pairs)), loops)


def compose_weighted(w1: WeightedDiagram, w2: WeightedDiagram) -> WeightedDiagram:
    """Compose weighted diagrams; loop counts add."""
    inner = compose(w1.diagram, w2.diagram)
    return WeightedDiagram(inner.diagram, w1.loops + w2.loops + inner.loops)


def enumerate_diagrams(m: int, n: int) -> list[Diagram]:
    """All m-n-diagrams, in lexicographic order of their canonical pair lists.

    Empty when m + n is odd.  There are (m+n-1)!! diagrams otherwise.

    >>> len(enumerate_diagrams(3, 3))
    15
    >>> enumerate_diagrams(2, 1)
    []
    """
    if m < 0 or n < 0:
        raise ValueError("vertex counts must be nonnegative")
    if (m + n) % 2:
        return []
    verts = [(TOP, i) for i in range(1, m + 1)]
    verts += [(BOTTOM, j) for j in range(1, n + 1)]
    out: list[Diagram] = []
    acc: list[Pair] = []

    def rec(avail: list[Vertex]) -> None:
        if not avail:
            out.append(Diagram(m, n, tuple(acc)))
            return
        a = avail[0]
        for k in range(1, len(avail)):
            acc.append((a, avail[k]))
            rec(avail[1:k] + avail[k + 1:])
            acc.pop()

    rec(verts)
    return out


def is_noncrossing(d: Diagram) -> bool:
    """True iff the diagram can be drawn in the strip without crossings.

    Equivalent circle test: place T1..Tm then Bn..B1 on a circle and check
    that no two chords interleave.

    >>> is_noncrossing(identity(3))
    True
    >>> is_noncrossing(from_permutation([2, 1]))
    False
    """
    m, n = d.top, d.bottom

    def pos(v: Vertex) -> int:
        row, i = v
        return i - 1 if row == TOP else m + (n - i)

    chords = [tuple(sorted((pos(a), pos(b)))) for a, b in d.pairs]
    for x in range(len(chords)):
        a, b = chords[x]
        for y in range(x + 1, len(chords)):
            c, e = chords[y]
            if (a < c < b) != (a < e < b):
                return False
    return True


def format_diagram(d: Diagram) -> str:
    """Canonical text notation, e.g. '3>3:[T1-T3,T2-B1,B2-B3]'."""
    body = ",".join(f"{_vertex_label(a)}-{_vertex_label(b)}" for a, b in d.pairs)
    return f"{d.top}>{d.bottom}:[{body}]"


def format_weighted(w: WeightedDiagram) -> str:
    """Text notation with the loop count, e.g. 'k=1, 3>3:[...]'."""
    return f"k={w.loops}, {format_diagram(w.diagram)}"


class _Cursor:
    """Character cursor with offset tracking for parse errors."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise NotationError(f"expected '{ch}'", self.pos)
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise NotationError("expected a number", start)
        return int(self.text[start:self.pos])

    def vertex(self) -> Vertex:
        self.skip_ws()
        ch = self.peek()
        if ch not in ("T", "B"):
            raise NotationError("expected a vertex label T<i> or B<j>", self.pos)
        self.pos += 1
        return (TOP if ch == "T" else BOTTOM, self.nat())


def parse_diagram(text: str) -> Diagram:
    """Parse the text notation; raises NotationError with the bad offset.

    >>> parse_diagram(" 3 > 3 : [ T1-T3 , T2-B1 , B2-B3 ]") == parse_diagram("3>3:[T1-T3,T2-B1,B2-B3]")
    True
    """
    cur = _Cursor(text)
    top = cur.nat()
    cur.expect(">")
    bottom = cur.nat()
    cur.expect(":")
    cur.expect("[")
    pairs: list[Pair] = []
    cur.skip_ws()
    if cur.peek() != "]":
        while True:
            a = cur.vertex()
            cur.expect("-")
            b = cur.vertex()
            pairs.append((a, b))
            cur.skip_ws()
            if cur.peek() == ",":
                cur.pos += 1
                continue
            break
    cur.expect("]")
    cur.skip_ws()
    if cur.pos != len(text):
        raise NotationError("trailing input after diagram", cur.pos)
    try:
        return Diagram(top, bottom, tuple(pairs))
    except ValueError as exc:
        raise NotationError(str(exc), 0) from exc


def diagram_to_json(d: Diagram) -> dict:
    """JSON-ready dict: {"top": m, "bottom": n, "pairs": [["T1","T3"], ...]}."""
    return {
        "top": d.top,
        "bottom": d.bottom,
        "pairs": [[_vertex_label(a), _vertex_label(b)] for a, b in d.pairs],
    }


def weighted_to_json(w: WeightedDiagram) -> dict:
    out = diagram_to_json(w.diagram)
    out["loops"] = w.loops
    return out


_LABEL = re.compile(r"^[TB][1-9][0-9]*$")


def _pairs_from_json(obj: dict) -> tuple[int, int, tuple[Pair, ...]]:
    if not isinstance(obj, dict):
        raise NotationError("diagram JSON must be an object", 0)
    try:
        top, bottom, raw = obj["top"], obj["bottom"], obj["pairs"]
    except (KeyError, TypeError) as exc:
        raise NotationError(f"diagram JSON missing key: {exc}", 0) from exc
    if not isinstance(top, int) or not isinstance(bottom, int):
        raise NotationError("top and bottom must be integers", 0)
    pairs = []
    for p in raw:
        if len(p) != 2 or not all(isinstance(s, str) and _LABEL.match(s) for s in p):
            raise NotationError(f"bad pair {p!r} in diagram JSON", 0)
        pairs.append((_vertex_from_label(p[0]), _vertex_from_label(p[1])))
    return top, bottom, tuple(pairs)


def diagram_from_json(obj: dict) -> Diagram:
    """Inverse of diagram_to_json; a 'loops' key must be absent or 0."""
    if isinstance(obj, dict) and obj.get("loops", 0) != 0:
        raise NotationError("bare diagram JSON cannot carry nonzero loops", 0)
    top, bottom, pairs = _pairs_from_json(obj)
    try:
        return Diagram(top, bottom, pairs)
    except ValueError as exc:
        raise NotationError(str(exc), 0) from exc


def weighted_from_json(obj: dict) -> WeightedDiagram:
    """Inverse of weighted_to_json; 'loops' defaults to 0."""
    top, bottom, pairs = _pairs_from_json(obj)
    loops = obj.get("loops", 0)
    if not isinstance(loops, int) or loops < 0:
        raise NotationError("loops must be a nonnegative integer", 0)
    try:
        return WeightedDiagram(Diagram(top, bottom, pairs), loops)
    except ValueError as exc:
        raise NotationError(str(exc), 0) from exc

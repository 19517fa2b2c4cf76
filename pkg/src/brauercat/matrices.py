"""
The matrix representation of diagrams over exact rationals.

Fix a base dimension p >= 1.  The object n is sent to a p^n dimensional
space; an m-n-diagram becomes the p^n x p^m zero-one matrix whose rows are
indexed by bottom label sequences and columns by top label sequences, in
lexicographic order with (1, ..., 1) first.  An entry is 1 exactly when
every pair of matched vertices carries equal labels, and a diagram that
has absorbed k loops scales this by p^k.  Composition of diagrams goes to
the matrix product, caps to the row vector pairing e_i (x) e_j |-> [i = j],
cups to its transpose, swaps to the flip of two tensor factors, and the
strand-padding functor to kron(I_p, -).
"""

from __future__ import annotations

import csv
import io
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import AlgebraElement
from .diagrams import (
    BOTTOM,
    TOP,
    Diagram,
    ShapeMismatchError,
    WeightedDiagram,
    enumerate_diagrams,
    is_noncrossing,
)
from .reports import CheckReport, CheckResult
from .terms import Chi, Comp, FApp, Gamma, Id, Phi, Term, axiom_instances, print_term, typecheck

Scalar = Fraction | int


class ExactMatrix:
    """A sparse matrix of Fractions; explicit zeros are never stored.

    Treated as immutable: all operations return new matrices.

    >>> a = ExactMatrix(2, 2, {(0, 1): 1, (1, 0): 1})
    >>> a * a == ExactMatrix.identity(2)
    True
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict[tuple[int, int], Scalar] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry ({i},{j}) outside a {rows}x{cols} matrix")
            v = Fraction(v)
            if v:
                clean[(i, j)] = v
        self.entries = clean

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> ExactMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls(nrows, ncols, entries)

    def get(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), Fraction(0))

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    __hash__ = None

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError(
                f"cannot add {self.rows}x{self.cols} to {other.rows}x{other.cols}")
        entries = dict(self.entries)
        for k, v in other.entries.items():
            entries[k] = entries.get(k, Fraction(0)) + v
        return ExactMatrix(self.rows, self.cols, entries)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-1) * other

    def __mul__(self, other: ExactMatrix | Scalar) -> ExactMatrix:
        if isinstance(other, (int, Fraction)):
            return ExactMatrix(self.rows, self.cols,
                               {k: other * v for k, v in self.entries.items()})
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (j, k), v in other.entries.items():
            by_row.setdefault(j, []).append((k, v))
        entries: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in self.entries.items():
            for k, b in by_row.get(j, ()):
                key = (i, k)
                entries[key] = entries.get(key, Fraction(0)) + a * b
        return ExactMatrix(self.rows, other.cols, entries)

    def __rmul__(self, other: Scalar) -> ExactMatrix:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; the first factor is the most significant index.

    >>> s = ExactMatrix.from_rows([[0, 1], [1, 0]])
    >>> kron(s, ExactMatrix.identity(2)).get(0, 2)
    Fraction(1, 1)
    """
    entries = {}
    for (ia, ja), va in a.entries.items():
        for (ib, jb), vb in b.entries.items():
            entries[(ia * b.rows + ib, ja * b.cols + jb)] = va * vb
    return ExactMatrix(a.rows * b.rows, a.cols * b.cols, entries)


def sequence_to_index(labels: Sequence[int], p: int) -> int:
    """0-based position of a 1-based label sequence in lexicographic order.

    >>> sequence_to_index((1, 1, 1), 2), sequence_to_index((1, 1, 2), 2)
    (0, 1)
    """
    idx = 0
    for v in labels:
        if not 1 <= v <= p:
            raise ValueError(f"label {v} outside 1..{p}")
        idx = idx * p + (v - 1)
    return idx


def index_to_sequence(idx: int, p: int, length: int) -> tuple[int, ...]:
    """Inverse of sequence_to_index for sequences of the given length."""
    if not 0 <= idx < p**length:
        raise ValueError(f"index {idx} outside 0..{p**length - 1}")
    out = []
    for _ in range(length):
        out.append(idx % p + 1)
        idx //= p
    return tuple(reversed(out))


def _check_p(p: int) -> None:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"base dimension must be an integer >= 1, got {p!r}")


def represent(w: WeightedDiagram | Diagram, p: int) -> ExactMatrix:
    """The p^n x p^m matrix of a weighted m-n-diagram.

    Built sparsely: one entry per labelling of the threads, scaled by
    p^loops.

    >>> from .diagrams import parse_diagram
    >>> represent(parse_diagram("0>2:[B1-B2]"), 2).transpose().to_dense()
    [[Fraction(1, 1), Fraction(0, 1), Fraction(0, 1), Fraction(1, 1)]]
    """
    if isinstance(w, Diagram):
        w = WeightedDiagram(w)
    _check_p(p)
    d = w.diagram
    m, n = d.top, d.bottom
    weight = Fraction(p) ** w.loops
    entries: dict[tuple[int, int], Fraction] = {}
    for labels in itertools.product(range(p), repeat=len(d.pairs)):
        top = [0] * m
        bot = [0] * n
        for (a, b), v in zip(d.pairs, labels):
            for row, i in (a, b):
                if row == TOP:
                    top[i - 1] = v
                else:
                    bot[i - 1] = v
        row_idx = 0
        for v in bot:
            row_idx = row_idx * p + v
        col_idx = 0
        for v in top:
            col_idx = col_idx * p + v
        entries[(row_idx, col_idx)] = weight
    return ExactMatrix(p**n, p**m, entries)


def represent_element(a: AlgebraElement, p: int) -> ExactMatrix:
    """Linear extension of represent to rational combinations."""
    _check_p(p)
    entries: dict[tuple[int, int], Fraction] = {}
    for d, c in a.terms.items():
        for k, v in represent(WeightedDiagram(d), p).entries.items():
            entries[k] = entries.get(k, Fraction(0)) + c * v
    return ExactMatrix(p**a.bottom, p**a.top, entries)


def _cap_row(p: int) -> ExactMatrix:
    return ExactMatrix(1, p * p, {(0, v * p + v): 1 for v in range(p)})


def _swap_matrix(p: int) -> ExactMatrix:
    return ExactMatrix(p * p, p * p, {(j * p + i, i * p + j): 1
                                      for i in range(p) for j in range(p)})


def rep_term(t: Term, p: int) -> ExactMatrix:
    """Matrix of a term built atom by atom, never through its links.

    Agrees with represent(links(t), p) for every well-typed term; the two
    construction paths are checked against each other in the test suite.
    """
    _check_p(p)
    typecheck(t)
    return _rep(t, p)


def _rep(t: Term, p: int) -> ExactMatrix:
    if isinstance(t, Id):
        return ExactMatrix.identity(p**t.power)
    if isinstance(t, Phi):
        return kron(_cap_row(p), ExactMatrix.identity(p**t.power))
    if isinstance(t, Gamma):
        return kron(_cap_row(p), ExactMatrix.identity(p**t.power)).transpose()
    if isinstance(t, Chi):
        return kron(_swap_matrix(p), ExactMatrix.identity(p**t.power))
    if isinstance(t, FApp):
        return kron(ExactMatrix.identity(p), _rep(t.body, p))
    assert isinstance(t, Comp)
    return _rep(t.after, p) * _rep(t.before, p)


@dataclass(frozen=True)
class InvariantTerm:
    """A diagram written as a product of paired vector symbols.

    Top vertices become u-symbols, bottom vertices v-symbols; each matched
    pair is one parenthesized factor, e.g. (u1 u3)(u2 v1)(v2 v3).
    """

    top: int
    bottom: int
    factors: tuple[tuple[str, str], ...]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "".join(f"({a} {b})" for a, b in self.factors)

    def to_diagram(self) -> Diagram:
        pairs = tuple((_symbol_vertex(a), _symbol_vertex(b)) for a, b in self.factors)
        return Diagram(self.top, self.bottom, pairs)


def _symbol(v: tuple[int, int]) -> str:
    row, i = v
    return f"{'u' if row == TOP else 'v'}{i}"


def _symbol_vertex(s: str) -> tuple[int, int]:
    return (TOP if s[0] == "u" else BOTTOM, int(s[1:]))


def invariant_term(d: Diagram) -> InvariantTerm:
    """The multilinear invariant attached to a diagram.

    >>> from .diagrams import parse_diagram
    >>> str(invariant_term(parse_diagram("3>3:[T1-T3,T2-B1,B2-B3]")))
    '(u1 u3)(u2 v1)(v2 v3)'
    """
    return InvariantTerm(d.top, d.bottom,
                         tuple((_symbol(a), _symbol(b)) for a, b in d.pairs))


_FACTOR = re.compile(r"\(\s*([uv][1-9][0-9]*)[\s,]*([uv][1-9][0-9]*)\s*\)")


def parse_invariant_term(text: str) -> InvariantTerm:
    """Parse a factor product back into an InvariantTerm.

    Vertex counts are inferred: every u up to the largest u-index must
    occur, likewise for v.
    """
    stripped = text.strip()
    if stripped == "1":
        return InvariantTerm(0, 0, ())
    factors = []
    consumed = 0
    for match in _FACTOR.finditer(stripped):
        if match.start() != consumed:
            raise ValueError(f"unexpected text {stripped[consumed:match.start()]!r}")
        factors.append((match.group(1), match.group(2)))
        consumed = match.end()
    if consumed != len(stripped):
        raise ValueError(f"unexpected text {stripped[consumed:]!r}")
    symbols = [s for f in factors for s in f]
    top = sum(1 for s in symbols if s[0] == "u")
    bottom = len(symbols) - top
    term = InvariantTerm(top, bottom, tuple(factors))
    term.to_diagram()  # validates the matching
    return term


def orthogonal_check(g: ExactMatrix) -> bool:
    """True iff g^T g is exactly the identity."""
    if g.rows != g.cols:
        raise ValueError(f"orthogonality needs a square matrix, got {g.rows}x{g.cols}")
    return g.transpose() * g == ExactMatrix.identity(g.rows)


def _rotation(c: Fraction, s: Fraction) -> ExactMatrix:
    return ExactMatrix.from_rows([[c, -s], [s, c]])


def orthogonal_battery(p: int) -> list[ExactMatrix]:
    """Exact orthogonal test matrices: permutations, signed permutations,
    and a rational rotation from the 3-4-5 triple."""
    if p == 1:
        return [ExactMatrix.from_rows([[1]]), ExactMatrix.from_rows([[-1]])]
    rot = _rotation(Fraction(3, 5), Fraction(4, 5))
    if p == 2:
        swap = ExactMatrix.from_rows([[0, 1], [1, 0]])
        sign = ExactMatrix.from_rows([[1, 0], [0, -1]])
        return [ExactMatrix.identity(2), swap, sign, swap * sign, rot, rot * swap]
    if p == 3:
        cyc = ExactMatrix(3, 3, {(1, 0): 1, (2, 1): 1, (0, 2): 1})
        tr = ExactMatrix(3, 3, {(1, 0): 1, (0, 1): 1, (2, 2): 1})
        sign = ExactMatrix.from_rows([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
        block = ExactMatrix.from_rows([
            [Fraction(3, 5), Fraction(-4, 5), 0],
            [Fraction(4, 5), Fraction(3, 5), 0],
            [0, 0, 1],
        ])
        return [ExactMatrix.identity(3), cyc, tr, sign, block, block * cyc]
    raise ValueError(f"battery defined for p in 1..3, got {p}")


def commutant_check(d: Diagram, g: ExactMatrix, p: int) -> bool:
    """True iff g (x) ... (x) g commutes with the matrix of the n-diagram d."""
    _check_p(p)
    if d.top != d.bottom:
        raise ShapeMismatchError(f"commutant check needs an n-diagram, got {d.top}>{d.bottom}")
    if g.rows != p or g.cols != p:
        raise ValueError(f"matrix must be {p}x{p} to act on each factor, got {g.rows}x{g.cols}")
    if not orthogonal_check(g):
        raise ValueError("matrix is not orthogonal")
    gn = ExactMatrix.identity(1)
    for _ in range(d.top):
        gn = kron(gn, g)
    r = represent(WeightedDiagram(d), p)
    return gn * r == r * gn


def commutant_report(n: int, p: int) -> CheckReport:
    """Commutation of every n-diagram with each battery tensor power."""
    results = []
    for gi, g in enumerate(orthogonal_battery(p)):
        for d in enumerate_diagrams(n, n):
            ok = commutant_check(d, g, p)
            results.append(CheckResult("commutant", f"p={p} g#{gi}: {d}", ok))
    return CheckReport(f"commutant n={n} p={p}", tuple(results))


def functor_report(max_size: int, ps: Iterable[int] = (1, 2, 3)) -> CheckReport:
    """represent(compose(d1, d2)) == represent(d2) * represent(d1) for all
    composable pairs with row sizes up to max_size."""
    from .diagrams import compose_weighted

    results = []
    for p in ps:
        _check_p(p)
        for n in range(max_size + 1):
            for m in range(max_size + 1):
                left = enumerate_diagrams(m, n)
                if not left:
                    continue
                for q in range(max_size + 1):
                    right = enumerate_diagrams(n, q)
                    for d1 in left:
                        w1 = WeightedDiagram(d1)
                        r1 = represent(w1, p)
                        for d2 in right:
                            w2 = WeightedDiagram(d2)
                            prod = represent(w2, p) * r1
                            ok = represent(compose_weighted(w1, w2), p) == prod
                            results.append(CheckResult(
                                "functor", f"p={p}: {d1} ; {d2}", ok))
    return CheckReport(f"functor sweep up to size {max_size}", tuple(results))


def axiom_matrix_report(max_power: int, ps: Iterable[int] = (1, 2, 3)) -> CheckReport:
    """The defining equations as matrix identities, atom-by-atom images."""
    results = []
    instances = axiom_instances(max_power)
    for p in ps:
        _check_p(p)
        for group, n, lhs, rhs in instances:
            ok = rep_term(lhs, p) == rep_term(rhs, p)
            results.append(CheckResult(
                group, f"p={p} power={n}: {print_term(lhs)} == {print_term(rhs)}", ok))
    return CheckReport(f"matrix axioms up to power {max_power}", tuple(results))


def rank_of_span(mats: Iterable[ExactMatrix]) -> int:
    """Rank of the span of the given matrices inside their common hom-space.

    Exact incremental Gaussian elimination over the rationals; matrices are
    flattened row-major.
    """
    mats = list(mats)
    if not mats:
        return 0
    shape = (mats[0].rows, mats[0].cols)
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for m in mats:
        if (m.rows, m.cols) != shape:
            raise ShapeMismatchError(
                f"span mixes {shape[0]}x{shape[1]} with {m.rows}x{m.cols}")
        row = {i * m.cols + j: v for (i, j), v in m.entries.items()}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = 1 / row[lead]
                pivots[lead] = {k: inv * v for k, v in row.items()}
                rank += 1
                break
            coef = row[lead]
            for k, v in prow.items():
                new = row.get(k, Fraction(0)) - coef * v
                if new:
                    row[k] = new
                else:
                    row.pop(k, None)
    return rank


@dataclass(frozen=True)
class FaithfulnessReport:
    """Dimension versus matrix rank for one diagram basis."""

    n: int
    p: int
    tl_only: bool
    dimension: int
    rank: int

    @property
    def injective(self) -> bool:
        return self.rank == self.dimension

    def __str__(self) -> str:
        return f"dim={self.dimension} rank={self.rank} injective={'yes' if self.injective else 'no'}"


def faithfulness_report(n: int, p: int, tl_only: bool = False) -> FaithfulnessReport:
    """Compare the number of basis diagrams with the rank of their images.

    Guarded to the desk scale n <= 4, p <= 3; larger inputs raise.
    """
    _check_p(p)
    if not 1 <= n <= 4:
        raise ValueError(f"faithfulness report supports 1 <= n <= 4, got n={n}")
    if p > 3:
        raise ValueError(f"faithfulness report supports p <= 3, got p={p}")
    basis = enumerate_diagrams(n, n)
    if tl_only:
        basis = [d for d in basis if is_noncrossing(d)]
    mats = [represent(WeightedDiagram(d), p) for d in basis]
    return FaithfulnessReport(n, p, tl_only, len(basis), rank_of_span(mats))


def _fraction_to_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def matrix_to_json(m: ExactMatrix) -> dict:
    """1-based sparse JSON in deterministic row-major order."""
    entries = [[i + 1, j + 1, _fraction_to_str(v)]
               for (i, j), v in sorted(m.entries.items())]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(obj: dict) -> ExactMatrix:
    entries = {(i - 1, j - 1): Fraction(v) for i, j, v in obj["entries"]}
    return ExactMatrix(obj["rows"], obj["cols"], entries)


def matrix_to_csv(m: ExactMatrix) -> str:
    """Dense CSV for inspection; exact values, no floats."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in m.to_dense():
        writer.writerow([str(v) for v in row])
    return buf.getvalue()

"""
Terms of the free symmetric self-adjunction on a single generator.

Objects are powers of the generator, written as natural numbers.  The
grammar (composition `o` reads right to left, so `g o f` applies f first,
and `o` associates to the right):

    term := atom | 'F' '(' term ')' | term 'o' term | '(' term ')'
    atom := ('id' | 'phi' | 'gamma' | 'chi') '_' nat

`phi_n : n+2 -> n` caps the two leftmost strands, `gamma_n : n -> n+2` is
the mirror cup, `chi_n : n+2 -> n+2` swaps the two leftmost strands, and
`F(t)` pads one straight strand on the left of t.  `links` sends every
well-typed term to a weighted diagram; two terms denote the same arrow of
the free structure iff their links agree, loop count included.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .diagrams import (
    BOTTOM,
    TOP,
    Diagram,
    WeightedDiagram,
    compose_weighted,
    from_permutation,
    identity,
    transpose,
)
from .reports import CheckReport, CheckResult


class TermSyntaxError(ValueError):
    """Malformed term text; `position` is the offset of the bad input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TermTypeError(ValueError):
    """A composition whose interfaces do not line up."""


class Term:
    """Base class for term nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Id(Term):
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("power must be nonnegative")


@dataclass(frozen=True)
class Phi(Term):
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("power must be nonnegative")


@dataclass(frozen=True)
class Gamma(Term):
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("power must be nonnegative")


@dataclass(frozen=True)
class Chi(Term):
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("power must be nonnegative")


@dataclass(frozen=True)
class FApp(Term):
    body: Term


@dataclass(frozen=True)
class Comp(Term):
    after: Term
    before: Term


_ATOM_KINDS = {"id": Id, "phi": Phi, "gamma": Gamma, "chi": Chi}


def print_term(t: Term) -> str:
    """Fully parenthesized canonical text; parse_term inverts it exactly.

    >>> print_term(Comp(Phi(1), FApp(Gamma(0))))
    '(phi_1 o F(gamma_0))'
    """
    if isinstance(t, Id):
        return f"id_{t.power}"
    if isinstance(t, Phi):
        return f"phi_{t.power}"
    if isinstance(t, Gamma):
        return f"gamma_{t.power}"
    if isinstance(t, Chi):
        return f"chi_{t.power}"
    if isinstance(t, FApp):
        return f"F({print_term(t.body)})"
    if isinstance(t, Comp):
        return f"({print_term(t.after)} o {print_term(t.before)})"
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'atom', 'F', 'o', '(', ')', 'end'
    text: str
    power: int
    pos: int


def _lex(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()":
            toks.append(_Token(ch, ch, -1, i))
            i += 1
            continue
        if ch.isalpha():
            start = i
            while i < len(text) and text[i].isalpha():
                i += 1
            word = text[start:i]
            if word == "F":
                toks.append(_Token("F", word, -1, start))
                continue
            if word == "o":
                toks.append(_Token("o", word, -1, start))
                continue
            if word in _ATOM_KINDS:
                if i >= len(text) or text[i] != "_":
                    raise TermSyntaxError(f"'{word}' needs a subscript like {word}_0", start)
                i += 1
                dstart = i
                while i < len(text) and text[i].isdigit():
                    i += 1
                if i == dstart:
                    raise TermSyntaxError("expected a number after '_'", dstart)
                toks.append(_Token("atom", word, int(text[dstart:i]), start))
                continue
            raise TermSyntaxError(f"unknown name '{word}'", start)
        raise TermSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(_Token("end", "", -1, len(text)))
    return toks


class _Parser:
    def __init__(self, toks: list[_Token]):
        self.toks = toks
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def take(self) -> _Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise TermSyntaxError(f"expected '{kind}'", tok.pos)
        return self.take()

    def term(self) -> Term:
        left = self.factor()
        if self.peek().kind == "o":
            self.take()
            right = self.term()
            return Comp(left, right)
        return left

    def factor(self) -> Term:
        tok = self.peek()
        if tok.kind == "F":
            self.take()
            self.expect("(")
            body = self.term()
            self.expect(")")
            return FApp(body)
        if tok.kind == "(":
            self.take()
            inner = self.term()
            self.expect(")")
            return inner
        if tok.kind == "atom":
            self.take()
            return _ATOM_KINDS[tok.text](tok.power)
        raise TermSyntaxError("expected a term", tok.pos)


def parse_term(text: str) -> Term:
    """Parse term text; purely syntactic, no type checking.

    >>> parse_term("phi_1 o F(gamma_0)") == Comp(Phi(1), FApp(Gamma(0)))
    True
    """
    parser = _Parser(_lex(text))
    t = parser.term()
    tok = parser.peek()
    if tok.kind != "end":
        raise TermSyntaxError("trailing input after term", tok.pos)
    return t


def typecheck(t: Term) -> tuple[int, int]:
    """Source and target powers of a term; raises TermTypeError on mismatch.

    >>> typecheck(Comp(Phi(1), FApp(Gamma(0))))
    (1, 1)
    """
    if isinstance(t, Id):
        return t.power, t.power
    if isinstance(t, Phi):
        return t.power + 2, t.power
    if isinstance(t, Gamma):
        return t.power, t.power + 2
    if isinstance(t, Chi):
        return t.power + 2, t.power + 2
    if isinstance(t, FApp):
        s, tg = typecheck(t.body)
        return s + 1, tg + 1
    if isinstance(t, Comp):
        sf, tf = typecheck(t.before)
        sg, tg = typecheck(t.after)
        if tf != sg:
            raise TermTypeError(
                f"cannot compose {print_term(t.before)} : {sf} -> {tf} "
                f"with {print_term(t.after)} : {sg} -> {tg}"
            )
        return sf, tg
    raise TypeError(f"not a term: {t!r}")


def _pad_left(d: Diagram) -> Diagram:
    pairs = tuple(((ra, ia + 1), (rb, ib + 1)) for (ra, ia), (rb, ib) in d.pairs)
    return Diagram(d.top + 1, d.bottom + 1, pairs + (((TOP, 1), (BOTTOM, 1)),))


def _cap_diagram(n: int) -> Diagram:
    pairs = [((TOP, 1), (TOP, 2))]
    pairs += [((TOP, i + 2), (BOTTOM, i)) for i in range(1, n + 1)]
    return Diagram(n + 2, n, tuple(pairs))


def links(t: Term) -> WeightedDiagram:
    """The weighted diagram a term denotes.

    phi becomes a cap, gamma a cup, chi a transposition, F pads a strand on
    the left, and composition traces threads with exact loop counting.

    >>> str(links(parse_term("phi_1 o F(gamma_0)")))
    'k=0, 1>1:[T1-B1]'
    >>> str(links(parse_term("phi_0 o gamma_0")))
    'k=1, 0>0:[]'
    """
    typecheck(t)
    return _links(t)


def _links(t: Term) -> WeightedDiagram:
    if isinstance(t, Id):
        return WeightedDiagram(identity(t.power))
    if isinstance(t, Phi):
        return WeightedDiagram(_cap_diagram(t.power))
    if isinstance(t, Gamma):
        return WeightedDiagram(transpose(_cap_diagram(t.power)))
    if isinstance(t, Chi):
        return WeightedDiagram(from_permutation([2, 1] + list(range(3, t.power + 3))))
    if isinstance(t, FApp):
        inner = _links(t.body)
        return WeightedDiagram(_pad_left(inner.diagram), inner.loops)
    assert isinstance(t, Comp)
    return compose_weighted(_links(t.before), _links(t.after))


def terms_equal(t1: Term, t2: Term) -> bool:
    """Decide equality in the free structure: equal types and equal links.

    Loop counts matter: a term that closes a circle is not the identity.
    """
    if typecheck(t1) != typecheck(t2):
        return False
    return links(t1) == links(t2)


def _pad(t: Term, j: int) -> Term:
    for _ in range(j):
        t = FApp(t)
    return t


_AxiomSide = Callable[[int], Term]

_AXIOM_SCHEMAS: tuple[tuple[str, _AxiomSide, _AxiomSide], ...] = (
    ("triangular-counit",
     lambda n: Comp(Phi(n + 1), FApp(Gamma(n))),
     lambda n: Id(n + 1)),
    ("triangular-unit",
     lambda n: Comp(FApp(Phi(n)), Gamma(n + 1)),
     lambda n: Id(n + 1)),
    ("swap-involution",
     lambda n: Comp(Chi(n), Chi(n)),
     lambda n: Id(n + 2)),
    ("swap-braid",
     lambda n: Comp(Chi(n + 1), Comp(FApp(Chi(n)), Chi(n + 1))),
     lambda n: Comp(FApp(Chi(n)), Comp(Chi(n + 1), FApp(Chi(n))))),
    ("cap-swap-absorb",
     lambda n: Comp(Phi(n), Chi(n)),
     lambda n: Phi(n)),
    ("cup-swap-absorb",
     lambda n: Comp(Chi(n), Gamma(n)),
     lambda n: Gamma(n)),
    ("cap-swap-slide",
     lambda n: Comp(Phi(n + 1), FApp(Chi(n))),
     lambda n: Comp(FApp(Phi(n)), Chi(n + 1))),
    ("cup-swap-slide",
     lambda n: Comp(Chi(n + 1), FApp(Gamma(n))),
     lambda n: Comp(FApp(Chi(n)), Gamma(n + 1))),
)


def axiom_instances(max_power: int) -> list[tuple[str, int, Term, Term]]:
    """All (group, power, lhs, rhs) equation instances for powers 0..max_power."""
    out = []
    for name, lhs, rhs in _AXIOM_SCHEMAS:
        for n in range(max_power + 1):
            out.append((name, n, lhs(n), rhs(n)))
    return out


def _padded_generators(max_power: int) -> list[Term]:
    atoms: list[Term] = []
    for j in range(max_power + 1):
        for k in range(max_power + 1 - j):
            for make in (Phi, Gamma, Chi):
                atoms.append(_pad(make(k), j))
    return atoms


def _naturality_arrows(max_power: int) -> list[Term]:
    """Padded generators and their composites up to three factors."""
    atoms = _padded_generators(max_power)
    by_source: dict[int, list[Term]] = {}
    for a in atoms:
        by_source.setdefault(typecheck(a)[0], []).append(a)
    pairs = [
        Comp(g, f)
        for f in atoms
        for g in by_source.get(typecheck(f)[1], [])
    ]
    triples = [
        Comp(g, pf)
        for pf in pairs
        for g in by_source.get(typecheck(pf)[1], [])
    ]
    return atoms + pairs + triples


_NATURALITY_SQUARES: tuple[tuple[str, Callable[[Term, int, int], Term], Callable[[Term, int, int], Term]], ...] = (
    ("cap-naturality",
     lambda f, s, t: Comp(Phi(t), FApp(FApp(f))),
     lambda f, s, t: Comp(f, Phi(s))),
    ("cup-naturality",
     lambda f, s, t: Comp(Gamma(t), f),
     lambda f, s, t: Comp(FApp(FApp(f)), Gamma(s))),
    ("swap-naturality",
     lambda f, s, t: Comp(Chi(t), FApp(FApp(f))),
     lambda f, s, t: Comp(FApp(FApp(f)), Chi(s))),
)


def verify_axioms(max_power: int) -> CheckReport:
    """Check every defining equation instance for powers 0..max_power, plus
    the naturality squares of phi, gamma, chi against generator arrows and
    their composites up to three factors."""
    results: list[CheckResult] = []
    for group, n, lhs, rhs in axiom_instances(max_power):
        ok = terms_equal(lhs, rhs)
        results.append(CheckResult(
            group, f"power={n}: {print_term(lhs)} == {print_term(rhs)}", ok))
    for f in _naturality_arrows(max_power):
        s, t = typecheck(f)
        for group, lhs_of, rhs_of in _NATURALITY_SQUARES:
            ok = terms_equal(lhs_of(f, s, t), rhs_of(f, s, t))
            results.append(CheckResult(
                group, f"f = {print_term(f)} : {s} -> {t}", ok))
    return CheckReport(f"axioms up to power {max_power}", tuple(results))


def _permutation_term(images: list[int]) -> Term | None:
    """Adjacent-swap chain realizing the permutation diagram, None if trivial.

    Bubble sort on destinations; each executed swap of positions (i+1, i+2)
    on width w becomes the atom F^i(chi_(w-i-2)), stacked in sort order.
    """
    w = len(images)
    dest = list(images)
    atoms: list[Term] = []
    changed = True
    while changed:
        changed = False
        for i in range(w - 1):
            if dest[i] > dest[i + 1]:
                dest[i], dest[i + 1] = dest[i + 1], dest[i]
                atoms.append(_pad(Chi(w - i - 2), i))
                changed = True
    if not atoms:
        return None
    term = atoms[0]
    for a in atoms[1:]:
        term = Comp(a, term)
    return term


def term_for_diagram(d: Diagram) -> Term:
    """Synthesize a term whose links are exactly (d, 0 loops).

    Normal form: a top permutation routes through-strands to the left and
    cap pairs to the right, right-aligned caps peel off, right-aligned cups
    grow the bottom row, and a bottom permutation finishes.

    >>> from .diagrams import parse_diagram, WeightedDiagram
    >>> d = parse_diagram("3>3:[T1-T3,T2-B1,B2-B3]")
    >>> links(term_for_diagram(d)) == WeightedDiagram(d, 0)
    True
    """
    m, n = d.top, d.bottom
    tt = sorted((a[1], b[1]) for a, b in d.pairs if a[0] == TOP and b[0] == TOP)
    bb = sorted((a[1], b[1]) for a, b in d.pairs if a[0] == BOTTOM and b[0] == BOTTOM)
    tb = sorted((a[1], b[1]) for a, b in d.pairs if a[0] == TOP and b[0] == BOTTOM)
    t = len(tb)

    parts: list[Term] = []
    perm1 = [0] * m
    for r, (x, _) in enumerate(tb, start=1):
        perm1[x - 1] = r
    for i, (a, b) in enumerate(tt):
        perm1[a - 1] = t + 2 * i + 1
        perm1[b - 1] = t + 2 * i + 2
    pi1 = _permutation_term(perm1)
    if pi1 is not None:
        parts.append(pi1)
    for w in range(m, t, -2):
        parts.append(_pad(Phi(0), w - 2))
    for w in range(t, n, 2):
        parts.append(_pad(Gamma(0), w))
    perm3 = [0] * n
    for r, (_, y) in enumerate(tb, start=1):
        perm3[r - 1] = y
    for i, (a, b) in enumerate(bb):
        perm3[t + 2 * i] = a
        perm3[t + 2 * i + 1] = b
    pi3 = _permutation_term(perm3)
    if pi3 is not None:
        parts.append(pi3)

    if not parts:
        return Id(m)
    term = parts[0]
    for part in parts[1:]:
        term = Comp(part, term)
    return term


def _random_atom(rng: random.Random, source: int, power_cap: int) -> Term:
    choices: list[Term] = [Id(source)]
    if source >= 2:
        choices.append(Phi(source - 2))
        choices.append(Chi(source - 2))
    if source + 2 <= power_cap:
        choices.append(Gamma(source))
    return rng.choice(choices)


def random_term(rng: random.Random, max_depth: int, source: int, power_cap: int = 6) -> Term:
    """A random well-typed term from the given source power.

    Intermediate powers stay at or below power_cap so downstream matrix
    work stays desk-sized.
    """
    if max_depth <= 0 or rng.random() < 0.2:
        return _random_atom(rng, source, power_cap)
    kind = rng.choice(("fapp", "comp", "comp"))
    if kind == "fapp" and source >= 1:
        return FApp(random_term(rng, max_depth - 1, source - 1, power_cap - 1))
    f = random_term(rng, max_depth - 1, source, power_cap)
    mid = typecheck(f)[1]
    g = random_term(rng, max_depth - 1, mid, power_cap)
    return Comp(g, f)


def term_to_json(t: Term) -> dict:
    """JSON AST with node kind tags."""
    if isinstance(t, (Id, Phi, Gamma, Chi)):
        kind = {Id: "id", Phi: "phi", Gamma: "gamma", Chi: "chi"}[type(t)]
        return {"kind": kind, "power": t.power}
    if isinstance(t, FApp):
        return {"kind": "fapp", "body": term_to_json(t.body)}
    if isinstance(t, Comp):
        return {"kind": "comp", "after": term_to_json(t.after), "before": term_to_json(t.before)}
    raise TypeError(f"not a term: {t!r}")


def term_from_json(obj: dict) -> Term:
    """Inverse of term_to_json."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise TermSyntaxError("term JSON must be an object with a 'kind' tag", 0)
    kind = obj["kind"]
    if kind in _ATOM_KINDS:
        power = obj.get("power")
        if not isinstance(power, int) or power < 0:
            raise TermSyntaxError(f"bad power for '{kind}' node", 0)
        return _ATOM_KINDS[kind](power)
    if kind == "fapp":
        return FApp(term_from_json(obj.get("body")))
    if kind == "comp":
        return Comp(term_from_json(obj.get("after")), term_from_json(obj.get("before")))
    raise TermSyntaxError(f"unknown term node kind {kind!r}", 0)

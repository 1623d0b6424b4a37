"""Presentations of one-relator conical monoids and separated graphs.

A one-relator presentation ``<a_1..a_n | sum r_i a_i = sum s_i a_i>`` is
turned into a separated graph with a single source ``v``, sinks
``w_1..w_n`` and the two-set partition ``C_v = {X, Y}``, where ``X``
carries ``s_i`` edges ``alpha(i,j)`` into ``w_i`` and ``Y`` carries
``r_i`` edges ``beta(i,j)``.
"""

from __future__ import annotations

import json
import re
import string
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence


class InvalidPresentation(ValueError):
    """Raised when a presentation violates one of its invariants."""


class InvalidGraph(ValueError):
    """Raised when a separated graph's partition data is inconsistent."""


class ParseError(ValueError):
    """A relation string could not be parsed.  ``position`` is 0-based."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def default_names(n: int) -> tuple[str, ...]:
    letters = string.ascii_lowercase
    if n <= len(letters):
        return tuple(letters[:n])
    return tuple(f"a{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class Presentation:
    """Data ``(r, s)`` of the relation ``sum r_i a_i = sum s_i a_i``."""

    r: tuple[int, ...]
    s: tuple[int, ...]
    names: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        s = tuple(int(x) for x in self.s)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        if len(r) != len(s):
            raise InvalidPresentation(f"r and s have different lengths ({len(r)} != {len(s)})")
        if not r:
            raise InvalidPresentation("a presentation needs at least one generator")
        if any(x < 0 for x in r + s):
            raise InvalidPresentation(f"coefficients must be nonnegative: r={r}, s={s}")
        if not any(r):
            raise InvalidPresentation("left-hand side of the relation is zero (r = 0)")
        if not any(s):
            raise InvalidPresentation("right-hand side of the relation is zero (s = 0)")
        bad = [i + 1 for i in range(len(r)) if r[i] + s[i] == 0]
        if bad:
            raise InvalidPresentation(f"r_i + s_i = 0 for generator index(es) {bad}")
        names = tuple(self.names) if self.names else default_names(len(r))
        if len(names) != len(r):
            raise InvalidPresentation("one name per generator is required")
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.r)

    def swapped(self) -> "Presentation":
        return Presentation(self.s, self.r, self.names)

    def relation_string(self) -> str:
        def side(coeffs):
            terms = [f"{c if c != 1 else ''}{name}" for c, name in zip(coeffs, self.names) if c]
            return "+".join(terms)

        return f"{side(self.r)}={side(self.s)}"

    def to_json(self) -> dict:
        return {"r": list(self.r), "s": list(self.s)}

    @classmethod
    def from_json(cls, data: Mapping | str) -> "Presentation":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(tuple(data["r"]), tuple(data["s"]))
        except KeyError as exc:
            raise InvalidPresentation(f"missing key {exc.args[0]!r} in JSON presentation")


class DerivedQuantities(NamedTuple):
    """Sums and supports of a presentation.  Index sets are 1-based."""

    M: int
    N: int
    I1: frozenset
    I2: frozenset
    n1: int
    n2: int


def derive_quantities(p: Presentation) -> DerivedQuantities:
    I1 = frozenset(i + 1 for i, x in enumerate(p.s) if x > 0)
    I2 = frozenset(i + 1 for i, x in enumerate(p.r) if x > 0)
    return DerivedQuantities(sum(p.r), sum(p.s), I1, I2, len(I1), len(I2))


def normalize(p: Presentation) -> tuple[Presentation, bool]:
    """Swap the two sides if needed so that ``sum r <= sum s``."""
    if sum(p.r) > sum(p.s):
        return p.swapped(), True
    return p, False


class Edge(NamedTuple):
    label: str
    source: str
    range: str


@dataclass(frozen=True)
class SeparatedGraph:
    """A finite graph with a partition ``C_v`` of the edges leaving each vertex."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    partition: Mapping[str, tuple[frozenset, ...]]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        part = {v: tuple(frozenset(X) for X in self.partition.get(v, ())) for v in self.vertices}
        unknown = set(self.partition) - set(self.vertices)
        if unknown:
            raise InvalidGraph(f"partition given for unknown vertices {sorted(unknown)}")
        object.__setattr__(self, "partition", part)
        self.validate()

    def validate(self) -> None:
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise InvalidGraph("duplicate vertex names")
        labels = [e.label for e in self.edges]
        if len(set(labels)) != len(labels):
            raise InvalidGraph("duplicate edge labels")
        for e in self.edges:
            if e.source not in vset or e.range not in vset:
                raise InvalidGraph(f"edge {e.label} has an endpoint outside the vertex set")
        for v in self.vertices:
            outgoing = {e.label for e in self.edges if e.source == v}
            seen: set = set()
            for X in self.partition[v]:
                if not X:
                    raise InvalidGraph(f"empty partition set at vertex {v}")
                if X & seen:
                    raise InvalidGraph(f"partition sets at {v} are not disjoint")
                if not X <= outgoing:
                    raise InvalidGraph(f"partition set at {v} contains edges not leaving {v}")
                seen |= X
            if seen != outgoing:
                raise InvalidGraph(f"partition at {v} does not cover edges {sorted(outgoing - seen)}")

    def edge(self, label: str) -> Edge:
        for e in self.edges:
            if e.label == label:
                return e
        raise KeyError(label)

    def sinks(self) -> tuple[str, ...]:
        sources = {e.source for e in self.edges}
        return tuple(v for v in self.vertices if v not in sources)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "partition": {v: [sorted(X) for X in sets] for v, sets in self.partition.items()},
        }


def alpha(i: int, j: int) -> str:
    return f"alpha({i},{j})"


def beta(i: int, j: int) -> str:
    return f"beta({i},{j})"


def sink(i: int) -> str:
    return f"w{i}"


def build_one_relator_graph(p: Presentation) -> SeparatedGraph:
    """The one-relator separated graph of ``p``; vertex order ``(v, w1..wn)``."""
    vertices = ("v",) + tuple(sink(i) for i in range(1, p.n + 1))
    edges = []
    X, Y = set(), set()
    for i in range(1, p.n + 1):
        for j in range(1, p.s[i - 1] + 1):
            edges.append(Edge(alpha(i, j), "v", sink(i)))
            X.add(alpha(i, j))
        for j in range(1, p.r[i - 1] + 1):
            edges.append(Edge(beta(i, j), "v", sink(i)))
            Y.add(beta(i, j))
    return SeparatedGraph(vertices, tuple(edges), {"v": (frozenset(X), frozenset(Y))})


def one_vertex_graph(n: int, m: int) -> SeparatedGraph:
    """One vertex with ``n`` loops in ``X`` and ``m`` loops in ``Y``."""
    if n < 1 or m < 1:
        raise InvalidGraph("both partition sets must be nonempty")
    edges = [Edge(f"e{i}", "v", "v") for i in range(1, n + 1)]
    edges += [Edge(f"f{j}", "v", "v") for j in range(1, m + 1)]
    X = frozenset(f"e{i}" for i in range(1, n + 1))
    Y = frozenset(f"f{j}" for j in range(1, m + 1))
    return SeparatedGraph(("v",), tuple(edges), {"v": (X, Y)})


_TERM = re.compile(r"\s*(\d*)\s*([A-Za-z])\s*")


def _parse_side(text: str, start: int, stop: int, counts: dict, full: str) -> None:
    pos = start
    expect_term = True
    while pos < stop:
        if not expect_term:
            while pos < stop and full[pos].isspace():
                pos += 1
            if pos == stop:
                break
            if full[pos] != "+":
                raise ParseError("expected '+'", full, pos)
            pos += 1
            expect_term = True
            continue
        m = _TERM.match(full, pos, stop)
        if not m:
            raise ParseError("expected a term like '3a'", full, pos)
        coeff = int(m.group(1)) if m.group(1) else 1
        counts[m.group(2)] = counts.get(m.group(2), 0) + coeff
        pos = m.end()
        expect_term = False
    if expect_term:
        raise ParseError("expected a term", full, pos)


def parse_relation(text: str) -> Presentation:
    """Parse ``"3a+2b=2a+4b"`` (or the JSON form ``{"r":[..],"s":[..]}``).

    Generators are the letters that occur, in alphabetical order; the
    left-hand side gives ``r`` and the right-hand side gives ``s``.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return Presentation.from_json(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON ({exc.msg})", text, exc.pos)
    eq = text.find("=")
    if eq < 0:
        raise ParseError("missing '='", text, len(text))
    if text.find("=", eq + 1) >= 0:
        raise ParseError("more than one '='", text, text.find("=", eq + 1))
    left: dict = {}
    right: dict = {}
    _parse_side(text, 0, eq, left, text)
    _parse_side(text, eq + 1, len(text), right, text)
    names = tuple(sorted(set(left) | set(right)))
    r = tuple(left.get(x, 0) for x in names)
    s = tuple(right.get(x, 0) for x in names)
    return Presentation(r, s, names)


def parse_element(text: str, p: Presentation) -> tuple[int, ...]:
    """Parse a monoid element such as ``"2b"``, ``"a+3c"`` or ``"[1,0]"``."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            vec = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON vector ({exc.msg})", text, exc.pos)
        if len(vec) != p.n or not all(isinstance(x, int) and x >= 0 for x in vec):
            raise ValueError(f"element must be {p.n} nonnegative integers: {text!r}")
        return tuple(vec)
    if stripped == "0":
        return (0,) * p.n
    counts: dict = {}
    _parse_side(text, 0, len(text), counts, text)
    unknown = set(counts) - set(p.names)
    if unknown:
        raise ValueError(f"unknown generator(s) {sorted(unknown)}; expected {list(p.names)}")
    return tuple(counts.get(x, 0) for x in p.names)


def format_element(vec: Sequence[int], p: Presentation) -> str:
    terms = [f"{c if c != 1 else ''}{name}" for c, name in zip(vec, p.names) if c]
    return "+".join(terms) or "0"

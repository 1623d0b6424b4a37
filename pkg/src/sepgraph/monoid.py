"""The graph monoid of a one-relator separated graph and its group completion.

Elements live on the sink generators ``a_1..a_n`` only; the source
generator is eliminated through ``a_v = sum s_i a_i``.  The congruence is
generated by the single pair ``(x, y) = (r, s)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .core import Presentation, SeparatedGraph

EQUIVALENT = "Equivalent"
NOT_EQUIVALENT = "NotEquivalent"
UNKNOWN = "Unknown"

SHIFT_OBSTRUCTION = "shift-obstruction"
GROUP_IMAGE_OBSTRUCTION = "group-image-obstruction"
FINITE_CLASS = "finite-class-enumeration"


def _check_element(m: Sequence[int], p: Presentation) -> tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if len(m) != p.n:
        raise ValueError(f"element {m} has {len(m)} coordinates, expected {p.n}")
    if any(x < 0 for x in m):
        raise ValueError(f"monoid elements have nonnegative coordinates: {m}")
    return m


def _dominates(m, x) -> bool:
    return all(a >= b for a, b in zip(m, x))


def rewrite_neighbors(m: Sequence[int], p: Presentation) -> set[tuple[int, ...]]:
    """Elements reachable from ``m`` by one application of ``x -> y`` or ``y -> x``."""
    m = _check_element(m, p)
    out = set()
    if _dominates(m, p.r):
        out.add(tuple(a - x + y for a, x, y in zip(m, p.r, p.s)))
    if _dominates(m, p.s):
        out.add(tuple(a - y + x for a, x, y in zip(m, p.r, p.s)))
    out.discard(m)
    return out


def shift_multiple(d: Sequence[int], p: Presentation) -> Optional[int]:
    """The integer ``t`` with ``d = t (s - r)``, or ``None`` if there is none."""
    delta = [y - x for x, y in zip(p.r, p.s)]
    k = next((i for i, c in enumerate(delta) if c), None)
    if k is None:
        return 0 if not any(d) else None
    if d[k] % delta[k]:
        return None
    t = d[k] // delta[k]
    return t if all(di == t * c for di, c in zip(d, delta)) else None


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: str
    certificate: dict = field(default_factory=dict)
    chain: tuple = ()
    bound: int = 0

    @property
    def kind(self) -> Optional[str]:
        return self.certificate.get("kind")

    def to_json(self) -> dict:
        out = {"status": self.status, "bound": self.bound}
        if self.chain:
            out["chain"] = [list(z) for z in self.chain]
        if self.certificate:
            cert = dict(self.certificate)
            if "class" in cert:
                cert["class"] = [list(z) for z in cert["class"]]
            out["certificate"] = cert
        return out


def default_bound(a, b, p: Presentation) -> int:
    return 4 * (max(sum(a), sum(b)) + sum(p.r) + sum(p.s))


def decide_equivalence(a: Sequence[int], b: Sequence[int], p: Presentation,
                       bound: Optional[int] = None) -> EquivalenceVerdict:
    """Decide ``a ~ b`` in the monoid, within a total-coordinate-sum cap.

    ``Unknown`` is returned when the search had to drop elements above the
    cap without reaching ``b``; it is never turned into a negative answer.
    """
    a = _check_element(a, p)
    b = _check_element(b, p)
    if bound is None:
        bound = default_bound(a, b, p)
    if bound < max(sum(a), sum(b)):
        raise ValueError(f"bound {bound} is below the coordinate sums of the inputs")

    d = [y - x for x, y in zip(a, b)]
    if shift_multiple(d, p) is None:
        return EquivalenceVerdict(NOT_EQUIVALENT, {
            "kind": SHIFT_OBSTRUCTION,
            "difference": d,
            "relation_vector": [y - x for x, y in zip(p.r, p.s)],
        }, bound=bound)

    parent = {a: None}
    queue = deque([a])
    truncated = False
    while queue:
        z = queue.popleft()
        if z == b:
            chain = []
            while z is not None:
                chain.append(z)
                z = parent[z]
            return EquivalenceVerdict(EQUIVALENT, {"kind": "rewrite-chain"},
                                      tuple(reversed(chain)), bound)
        for nb in sorted(rewrite_neighbors(z, p)):
            if nb in parent:
                continue
            if sum(nb) > bound:
                truncated = True
                continue
            parent[nb] = z
            queue.append(nb)
    if truncated:
        return EquivalenceVerdict(UNKNOWN, {"kind": "bound-exhausted", "explored": len(parent)},
                                  bound=bound)
    return EquivalenceVerdict(NOT_EQUIVALENT, {
        "kind": FINITE_CLASS,
        "class": tuple(sorted(parent)),
    }, bound=bound)


def check_certificate(verdict: EquivalenceVerdict, a, b, p: Presentation) -> bool:
    """Replay a verdict's evidence independently of the search that produced it."""
    a, b = tuple(a), tuple(b)
    if verdict.status == EQUIVALENT:
        chain = [tuple(z) for z in verdict.chain]
        if not chain or chain[0] != a or chain[-1] != b:
            return False
        return all(z2 in rewrite_neighbors(z1, p) for z1, z2 in zip(chain, chain[1:]))
    if verdict.status != NOT_EQUIVALENT:
        return False
    cert = verdict.certificate
    if cert["kind"] == SHIFT_OBSTRUCTION:
        d = [y - x for x, y in zip(a, b)]
        return list(cert["difference"]) == d and shift_multiple(d, p) is None
    if cert["kind"] == FINITE_CLASS:
        cls = {tuple(z) for z in cert["class"]}
        if a not in cls or b in cls:
            return False
        return all(rewrite_neighbors(z, p) <= cls for z in cls)
    if cert["kind"] == GROUP_IMAGE_OBSTRUCTION:
        G = grothendieck_group(p)
        return G.image(a) != G.image(b)
    return False


def is_stably_finite(p: Presentation) -> tuple[bool, Optional[dict]]:
    """Stable finiteness of the monoid: true iff ``r`` and ``s`` are incomparable or equal.

    The witness (when false) names the strict comparison ``x<y`` or ``y<x``.
    """
    if p.r != p.s and _dominates(p.s, p.r):
        return False, {"comparison": "x<y", "x": list(p.r), "y": list(p.s)}
    if p.r != p.s and _dominates(p.r, p.s):
        return False, {"comparison": "y<x", "x": list(p.r), "y": list(p.s)}
    return True, None


@dataclass(frozen=True)
class GrothendieckGroup:
    """``Z^k / (relations) = Z^free_rank + sum Z/torsion_i``.

    ``image`` maps an integer vector to coordinates ``(torsion part, free part)``.
    """

    free_rank: int
    torsion: tuple[int, ...]
    cone_generators: tuple[tuple[int, ...], ...]
    transform: tuple[tuple[int, ...], ...] = field(repr=False, default=())
    diagonal: tuple[int, ...] = field(repr=False, default=())

    def image(self, vec: Sequence[int]) -> tuple[int, ...]:
        y = [sum(u * x for u, x in zip(row, vec)) for row in self.transform]
        tors = [y[i] % d for i, d in enumerate(self.diagonal) if d > 1]
        free = y[len(self.diagonal):]
        return tuple(tors + free)

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "cone_generators": [list(g) for g in self.cone_generators],
            "description": self.describe(),
        }


def cokernel(relations: Sequence[Sequence[int]], rank: int) -> GrothendieckGroup:
    """Cokernel of the map ``Z^len(relations) -> Z^rank`` whose columns are ``relations``."""
    cols = [list(c) for c in relations if any(c)]
    if not cols:
        ident = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
        return GrothendieckGroup(rank, (), ident, ident, ())
    A = Matrix(rank, len(cols), lambda i, j: cols[j][i])
    D, U, _ = smith_normal_decomp(A, domain=ZZ)
    diag = []
    for i in range(min(D.shape)):
        if D[i, i] == 0:
            break
        diag.append(abs(int(D[i, i])))
    transform = tuple(tuple(int(U[i, j]) for j in range(rank)) for i in range(rank))
    group = GrothendieckGroup(rank - len(diag), tuple(d for d in diag if d > 1), (),
                              transform, tuple(diag))
    gens = tuple(group.image([int(i == j) for j in range(rank)]) for i in range(rank))
    return GrothendieckGroup(group.free_rank, group.torsion, gens, transform, tuple(diag))


def grothendieck_group(p: Presentation) -> GrothendieckGroup:
    """``Z^n / Z (s - r)`` with the images of ``a_1..a_n``."""
    return cokernel([[y - x for x, y in zip(p.r, p.s)]], p.n)


def graph_monoid_relations(graph: SeparatedGraph) -> list[tuple[str, tuple[str, ...]]]:
    """Relations ``a_v = sum_{e in X} a_{r(e)}`` for every ``X`` in ``C_v``."""
    rels = []
    for v in graph.vertices:
        for X in graph.partition[v]:
            rels.append((v, tuple(sorted(graph.edge(e).range for e in X))))
    return rels


def graph_grothendieck_group(graph: SeparatedGraph) -> GrothendieckGroup:
    """Group completion of ``M(E,C)`` on all vertex generators, in vertex order."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    cols = []
    for v, targets in graph_monoid_relations(graph):
        col = [0] * len(index)
        col[index[v]] += 1
        for w in targets:
            col[index[w]] -= 1
        cols.append(col)
    return cokernel(cols, len(index))


__all__ = [
    "EQUIVALENT", "NOT_EQUIVALENT", "UNKNOWN", "SHIFT_OBSTRUCTION", "FINITE_CLASS",
    "GROUP_IMAGE_OBSTRUCTION", "EquivalenceVerdict", "GrothendieckGroup", "check_certificate",
    "cokernel", "decide_equivalence", "graph_grothendieck_group", "graph_monoid_relations",
    "grothendieck_group", "is_stably_finite", "rewrite_neighbors", "shift_multiple",
]

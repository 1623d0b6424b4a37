"""Group-algebra models for the ``M = N = 2`` special cases.

The lamplighter-type group ``G = (*_Z Z_2) x| Z`` has elements ``w z^t`` with
``w`` a reduced word in involutions ``u_i`` and ``z u_i z^* = u_{i+1}``.  Its
group algebra carries the canonical trace (coefficient of the identity).  The
two-vertex-blocks ``T = M_2(C G)`` representation of the ``a+b=a+b`` graph
and the ``4 x 4`` extension for ``a+b=a+c`` live here, together with the
free product ``Z_N * Z_M``.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Optional, Sequence

from .core import Presentation, alpha, beta, build_one_relator_graph, sink
from .freeprod import Factor


# groups


@dataclass(frozen=True)
class LampGroupElement:
    word: tuple = ()
    shift: int = 0

    @staticmethod
    def reduce(letters) -> tuple:
        out = []
        for i in letters:
            if out and out[-1] == i:
                out.pop()
            else:
                out.append(i)
        return tuple(out)

    def __mul__(self, other: "LampGroupElement") -> "LampGroupElement":
        moved = tuple(i + self.shift for i in other.word)
        return LampGroupElement(self.reduce(self.word + moved), self.shift + other.shift)

    def inverse(self) -> "LampGroupElement":
        return LampGroupElement(tuple(i - self.shift for i in reversed(self.word)), -self.shift)

    def shifted(self, t: int) -> "LampGroupElement":
        """The automorphism ``g -> z^t g z^-t``."""
        return LampGroupElement(tuple(i + t for i in self.word), self.shift)

    def is_identity(self) -> bool:
        return not self.word and self.shift == 0

    def to_json(self):
        return [list(self.word), self.shift]

    def __repr__(self):
        parts = [f"u{i}" for i in self.word]
        if self.shift:
            parts.append(f"z^{self.shift}")
        return "*".join(parts) or "1"


LAMP_IDENTITY = LampGroupElement()


def u(i: int) -> LampGroupElement:
    return LampGroupElement((i,), 0)


def z_power(t: int = 1) -> LampGroupElement:
    return LampGroupElement((), t)


def random_lamp_element(rng: random.Random, max_letters: int = 4, index_range: int = 3,
                        shift_range: int = 3) -> LampGroupElement:
    letters = [rng.randint(-index_range, index_range) for _ in range(rng.randint(0, max_letters))]
    return LampGroupElement(LampGroupElement.reduce(letters), rng.randint(-shift_range, shift_range))


@dataclass(frozen=True)
class CyclicFreeElement:
    """Reduced word in ``Z_N * Z_M``: alternating ``(generator, power)`` syllables, generator 0 is ``a``."""

    orders: tuple
    syllables: tuple = ()

    def __mul__(self, other: "CyclicFreeElement") -> "CyclicFreeElement":
        out = list(self.syllables)
        for gen, k in other.syllables:
            if out and out[-1][0] == gen:
                k = (out.pop()[1] + k) % self.orders[gen]
                if k == 0:
                    continue
            out.append((gen, k))
        return CyclicFreeElement(self.orders, tuple(out))

    def inverse(self) -> "CyclicFreeElement":
        return CyclicFreeElement(self.orders, tuple((g, (-k) % self.orders[g])
                                                    for g, k in reversed(self.syllables)))

    def is_identity(self) -> bool:
        return not self.syllables


# group algebra


class GroupAlgElement:
    """Finite combination of group elements; scalars may be exact or complex floats."""

    __slots__ = ("identity", "terms")

    def __init__(self, identity, terms=None):
        self.identity = identity
        self.terms = {g: c for g, c in (terms or {}).items() if c != 0}

    @classmethod
    def of(cls, g, coeff=1, identity=LAMP_IDENTITY) -> "GroupAlgElement":
        return cls(identity, {g: Fraction(coeff) if isinstance(coeff, int) else coeff})

    def zero_like(self) -> "GroupAlgElement":
        return GroupAlgElement(self.identity)

    def one_like(self) -> "GroupAlgElement":
        return GroupAlgElement(self.identity, {self.identity: Fraction(1)})

    def __add__(self, other):
        if not isinstance(other, GroupAlgElement):
            other = self.one_like().scale(other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, 0) + c
        return GroupAlgElement(self.identity, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, GroupAlgElement) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return GroupAlgElement(self.identity, {g: c * v for g, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgElement):
            return self.scale(other)
        out: dict = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                gh = g * h
                out[gh] = out.get(gh, 0) + a * b
        return GroupAlgElement(self.identity, out)

    def __rmul__(self, other):
        return self.scale(other)

    def adjoint(self):
        return GroupAlgElement(self.identity, {g.inverse(): c.conjugate() for g, c in self.terms.items()})

    def trace(self):
        return self.terms.get(self.identity, Fraction(0))

    def is_zero(self, tol: Optional[float] = None) -> bool:
        if tol is None:
            return not self.terms
        return all(abs(c) <= tol for c in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, GroupAlgElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return " + ".join(f"({c})*{g!r}" for g, c in self.terms.items()) or "0"


def tau(x: GroupAlgElement):
    return x.trace()


def trace_pairing(x: GroupAlgElement, y: GroupAlgElement):
    """``tau(x y)`` without forming the product."""
    total = Fraction(0)
    for g, c in x.terms.items():
        d = y.terms.get(g.inverse())
        if d is not None:
            total = total + c * d
    return total


def lamp(g: LampGroupElement, coeff=1) -> GroupAlgElement:
    return GroupAlgElement.of(g, coeff)


ONE = lamp(LAMP_IDENTITY)
ZERO = ONE.zero_like()


def p_plus(i: int = 0) -> GroupAlgElement:
    return (ONE - lamp(u(i))).scale(Fraction(1, 2))


def p_minus(i: int = 0) -> GroupAlgElement:
    return (ONE + lamp(u(i))).scale(Fraction(1, 2))


class Mat:
    """Square matrix with ``GroupAlgElement`` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def zero(cls, k: int, like: GroupAlgElement = ONE) -> "Mat":
        z = like.zero_like()
        return cls([[z] * k for _ in range(k)])

    @classmethod
    def unit(cls, k: int, i: int, j: int, a: GroupAlgElement = ONE) -> "Mat":
        """``a e_ij`` with 1-based ``i, j``."""
        z = a.zero_like()
        return cls([[a if (r, c) == (i - 1, j - 1) else z for c in range(k)] for r in range(k)])

    @classmethod
    def block(cls, top_left: "Mat", top_right: "Mat", bottom_left: "Mat", bottom_right: "Mat") -> "Mat":
        rows = [a + b for a, b in zip(top_left.rows, top_right.rows)]
        rows += [a + b for a, b in zip(bottom_left.rows, bottom_right.rows)]
        return cls(rows)

    def sub(self, r0: int, c0: int, k: int) -> "Mat":
        return Mat([row[c0:c0 + k] for row in self.rows[r0:r0 + k]])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __add__(self, other):
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Mat([[a.scale(c) for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return self.scale(other)
        k = self.size
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = self.rows[i][0].zero_like()
                for t in range(k):
                    a, b = self.rows[i][t], other.rows[t][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Mat(out)

    def __rmul__(self, other):
        return self.scale(other)

    def left(self, a: GroupAlgElement) -> "Mat":
        """Multiply every entry on the left by a group-algebra element."""
        return Mat([[a * x for x in r] for r in self.rows])

    def adjoint(self):
        k = self.size
        return Mat([[self.rows[j][i].adjoint() for j in range(k)] for i in range(k)])

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"Mat({[[repr(a) for a in r] for r in self.rows]})"


# graph relations


@dataclass(frozen=True)
class RelationReport:
    passed: bool
    relation: Optional[str] = None
    detail: Optional[str] = None
    lhs: object = None
    rhs: object = None
    checked: int = 0

    def __bool__(self):
        return self.passed


def verify_graph_relations(graph, assignment: dict) -> RelationReport:
    """Check (V), (E), (SCK1), (SCK2) for images of vertices and edges in any *-algebra.

    Elements need ``*``, ``+``, ``-``, ``adjoint()`` and ``is_zero()``.
    """
    checked = 0

    def diff(a, b):
        return (a - b).is_zero()

    zero = None
    verts = list(graph.vertices)
    for v in verts:
        x = assignment[v]
        zero = x - x
        checked += 1
        if not diff(x.adjoint(), x):
            return RelationReport(False, "V", f"{v} is not self-adjoint", x.adjoint(), x, checked)
        for w in verts:
            checked += 1
            prod = x * assignment[w]
            expect = x if v == w else zero
            if not diff(prod, expect):
                return RelationReport(False, "V", f"{v}*{w}", prod, expect, checked)
    for e in graph.edges:
        x = assignment[e.label]
        checked += 2
        left = assignment[e.source] * x
        if not diff(left, x):
            return RelationReport(False, "E", f"s({e.label}) {e.label} = {e.label}", left, x, checked)
        right = x * assignment[e.range]
        if not diff(right, x):
            return RelationReport(False, "E", f"{e.label} r({e.label}) = {e.label}", right, x, checked)
    for v, sets in graph.partition.items():
        for X in sets:
            labels = sorted(X)
            for a in labels:
                for b in labels:
                    checked += 1
                    prod = assignment[a].adjoint() * assignment[b]
                    expect = assignment[graph.edge(a).range] if a == b else zero
                    if not diff(prod, expect):
                        return RelationReport(False, "SCK1", f"{a}* {b}", prod, expect, checked)
            total = zero
            for a in labels:
                total = total + assignment[a] * assignment[a].adjoint()
            checked += 1
            if not diff(total, assignment[v]):
                return RelationReport(False, "SCK2", f"{v} = sum over {labels}", total, assignment[v], checked)
    return RelationReport(True, checked=checked)


# the a+b=a+b representation

FIG2 = Presentation((1, 1), (1, 1))
FIG1 = Presentation((1, 0, 1), (1, 1, 0))


def sigma_reps() -> tuple[dict, dict]:
    """Images in ``T = M_2(C G)`` of the generators of the two factors of ``a+b=a+b``."""
    zg = lamp(z_power(1))
    base = {"v": Mat.unit(2, 1, 1), sink(1): Mat.unit(2, 2, 2, p_plus()),
            sink(2): Mat.unit(2, 2, 2, p_minus())}
    sa = dict(base)
    sa[alpha(1, 1)] = Mat.unit(2, 1, 2, p_plus())
    sa[alpha(2, 1)] = Mat.unit(2, 1, 2, p_minus())
    sb = dict(base)
    sb[beta(1, 1)] = Mat.unit(2, 1, 2, zg * p_plus())
    sb[beta(2, 1)] = Mat.unit(2, 1, 2, zg * p_minus())
    return sa, sb


def sigma_assignment() -> dict:
    sa, sb = sigma_reps()
    return {**sa, **sb}


def theta_raw(x: Mat) -> tuple:
    """Literal coefficients ``(tau(a11), tau(p+ a22 p+), tau(p- a22 p-))``."""
    a11, a22 = x[1, 1], x[2, 2]
    return (tau(a11), tau(p_plus() * a22 * p_plus()), tau(p_minus() * a22 * p_minus()))


def theta(x: Mat) -> tuple:
    """Conditional expectation onto ``C e11 + C p+ e22 + C p- e22``, coordinates ``(v, w1, w2)``.

    The ``e22`` coordinates are normalized by ``tau(p0^±) = 1/2`` so that
    ``theta`` fixes the base.
    """
    c11, cp, cm = theta_raw(x)
    return (c11, 2 * cp, 2 * cm)


def theta_matrix(c: Sequence) -> Mat:
    """Base element with coordinates ``(v, w1, w2)`` as a matrix in ``T``."""
    cv, c1, c2 = c
    return Mat.unit(2, 1, 1).scale(cv) + Mat.unit(2, 2, 2, p_plus().scale(c1) + p_minus().scale(c2))


def factor_image(assignment: dict, tag: str, p: Presentation, i: int, j: int, k: int):
    """Image of the matrix unit ``e^{(i)}_{jk}`` of factor ``tag`` under a graph assignment."""
    edge = alpha if tag == "A" else beta

    def col(t):
        return assignment[sink(i)] if t == 0 else assignment[edge(i, t)]

    return col(j) * col(k).adjoint()


def _reorder(phi_coords, n: int) -> tuple:
    """``(w_1..w_n, v)`` to ``(v, w_1..w_n)``."""
    return (phi_coords[n],) + tuple(phi_coords[:n])


def check_theta_factor_compatibility() -> dict:
    """``Theta∘sigma_A = Phi_A`` and ``Theta∘sigma_B = Phi_B`` on every matrix unit."""
    sa, sb = sigma_reps()
    failures = []
    checked = 0
    for tag, assign, corners in (("A", sa, FIG2.s), ("B", sb, FIG2.r)):
        f = Factor(tag, corners)
        for (i, j, k) in f.units():
            checked += 1
            lhs = theta(factor_image(assign, tag, FIG2, i, j, k))
            rhs = _reorder(f.expectation(f.unit(i, j, k)), FIG2.n)
            if lhs != rhs:
                failures.append({"factor": tag, "unit": [i, j, k], "theta": [str(c) for c in lhs],
                                 "phi": [str(c) for c in rhs]})
    return {"check": "theta_factor_compatibility", "checked": checked, "failures": failures,
            "passed": not failures}


def kernel_spanning_sets() -> tuple[list, list]:
    """Spanning sets of ``ker Theta`` restricted to the images of the two factors."""
    zg, zs = lamp(z_power(1)), lamp(z_power(-1))
    u0, u1 = lamp(u(0)), lamp(u(1))
    Z0 = [Mat.unit(2, 1, 1, u0), Mat.unit(2, 1, 2), Mat.unit(2, 1, 2, u0),
          Mat.unit(2, 2, 1), Mat.unit(2, 2, 1, u0)]
    Z1 = [Mat.unit(2, 1, 1, u1), Mat.unit(2, 1, 2, zg), Mat.unit(2, 1, 2, u1 * zg),
          Mat.unit(2, 2, 1, zs), Mat.unit(2, 2, 1, u0 * zs)]
    return Z0, Z1


def _alternating(sets, length_bound):
    for length in range(1, length_bound + 1):
        for first in (0, 1):
            pattern = [(first + t) % 2 for t in range(length)]
            for choice in iproduct(*[range(len(sets[s])) for s in pattern]):
                yield pattern, choice


def _word_product(sets, pattern, choice):
    x = sets[pattern[0]][choice[0]]
    for s, c in zip(pattern[1:], choice[1:]):
        x = x * sets[s][c]
    return x


def _random_combination(rng, elements):
    x = None
    for e in elements:
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        if c:
            x = e.scale(c) if x is None else x + e.scale(c)
    return x if x is not None else elements[0]


def verify_condition4_prop56(length_bound: int = 4, samples: int = 0, seed: int = 0) -> dict:
    """``Theta`` vanishes on alternating words over the two kernel spanning sets.

    All words up to ``length_bound`` are enumerated; ``samples`` further words
    with random letters from the linear spans are drawn as well.
    """
    sets = kernel_spanning_sets()
    for S in sets:
        for x in S:
            if any(theta(x)):
                raise AssertionError("spanning element not in ker Theta")
    failures = []
    checked = 0
    for pattern, choice in _alternating(sets, length_bound):
        checked += 1
        if any(theta(_word_product(sets, pattern, choice))):
            failures.append([[s, c] for s, c in zip(pattern, choice)])
    rng = random.Random(seed)
    sample_failures = []
    for t in range(samples):
        length = rng.randint(1, length_bound)
        first = rng.randint(0, 1)
        x = None
        for pos in range(length):
            letter = _random_combination(rng, sets[(first + pos) % 2])
            x = letter if x is None else x * letter
        if any(theta(x)):
            sample_failures.append(t)
    return {"check": "condition4", "length_bound": length_bound, "words_checked": checked,
            "samples": samples, "seed": seed, "failures": failures[:20],
            "sample_failures": sample_failures, "passed": not failures and not sample_failures}


# orthogonality for the outerness argument


def cor57_index(F) -> int:
    """``1 + max{i, i' - j}`` over the ``u``-indices ``i, i'`` and ``z``-powers ``j`` occurring in ``F``."""
    I = {i for g in F for i in g.word}
    J = {g.shift for g in F}
    candidates = set(I) | {i - j for i in I for j in J}
    return 1 + max(candidates, default=0)


def verify_orthogonality_cor57(F) -> tuple[bool, int, list]:
    """Pick ``N`` from ``F`` and check ``tau(u_N g^-1 u_N h) = 0`` for all ``g, h`` in ``F``.

    Returns ``(passed, N, offending pairs)``.
    """
    F = list(F)
    if any(g.is_identity() for g in F):
        raise ValueError("F must not contain the identity")
    N = cor57_index(F)
    v = u(N)
    bad = []
    for g in F:
        for h in F:
            if (v * g.inverse() * v * h).is_identity():
                bad.append((g, h))
    return (not bad, N, bad)


# the a+b=a+c embedding


def fig1_assignment() -> dict:
    """Images in ``(1 + w2) M_2(T) (1 + w2)`` of the generators of ``a+b=a+c``."""
    sa, sb = sigma_reps()
    O = Mat.zero(2)

    def diag(x, y=O):
        return Mat.block(x, O, O, y)

    out = {"v": diag(sa["v"]), sink(1): diag(sa[sink(1)]), sink(2): diag(sa[sink(2)]),
           sink(3): diag(O, sa[sink(2)]),
           alpha(1, 1): diag(sa[alpha(1, 1)]), alpha(2, 1): diag(sa[alpha(2, 1)]),
           beta(1, 1): diag(sb[beta(1, 1)]),
           beta(3, 1): Mat.block(O, sb[beta(2, 1)], O, O)}
    return out


def phi_tilde(x: Mat) -> tuple:
    """Coordinates ``(v, w1, w2, w3)``: ``theta`` of the top-left block, plus the ``w2``-weight of the bottom-right."""
    top = theta(x.sub(0, 0, 2))
    bottom = theta(x.sub(2, 2, 2))
    return top + (bottom[2],)


def fig1_kernel_sets() -> tuple[list, list]:
    a = fig1_assignment()
    a1, a2 = a[alpha(1, 1)], a[alpha(2, 1)]
    b1, b2 = a[beta(1, 1)], a[beta(3, 1)]
    v = a["v"]
    Z1 = [v - (a1 * a1.adjoint()).scale(2), a1, a1.adjoint(), a2, a2.adjoint()]
    Z2 = [v - (b1 * b1.adjoint()).scale(2), b1, b1.adjoint(), b2, b2.adjoint()]
    return Z1, Z2


def check_phi_tilde_factor_compatibility() -> dict:
    a = fig1_assignment()
    failures = []
    checked = 0
    for tag, corners in (("A", FIG1.s), ("B", FIG1.r)):
        f = Factor(tag, corners)
        for (i, j, k) in f.units():
            checked += 1
            lhs = phi_tilde(factor_image(a, tag, FIG1, i, j, k))
            rhs = _reorder(f.expectation(f.unit(i, j, k)), FIG1.n)
            if lhs != rhs:
                failures.append({"factor": tag, "unit": [i, j, k]})
    return {"checked": checked, "failures": failures, "passed": not failures}


def verify_embedding_prop58(length_bound: int = 4, samples: int = 500, seed: int = 0) -> dict:
    """The ``a+b=a+c`` assignment is a representation whose ``phi_tilde`` kills alternating centered words."""
    relations = verify_graph_relations(build_one_relator_graph(FIG1), fig1_assignment())
    compat = check_phi_tilde_factor_compatibility()
    sets = fig1_kernel_sets()
    centered = all(not any(phi_tilde(x)) for S in sets for x in S)
    failures = []
    checked = 0
    for pattern, choice in _alternating(sets, length_bound):
        checked += 1
        if any(phi_tilde(_word_product(sets, pattern, choice))):
            failures.append([[s, c] for s, c in zip(pattern, choice)])
    rng = random.Random(seed)
    sample_failures = []
    for t in range(samples):
        length = rng.randint(1, length_bound)
        first = rng.randint(0, 1)
        x = None
        for pos in range(length):
            letter = _random_combination(rng, sets[(first + pos) % 2])
            x = letter if x is None else x * letter
        if any(phi_tilde(x)):
            sample_failures.append(t)
    passed = bool(relations) and compat["passed"] and centered and not failures and not sample_failures
    return {"check": "embedding", "relations": relations.passed,
            "relation_failure": relations.relation, "phi_compatibility": compat["passed"],
            "kernel_sets_centered": centered, "length_bound": length_bound,
            "words_checked": checked, "samples": samples, "seed": seed,
            "failures": failures[:20], "sample_failures": sample_failures, "passed": passed}


# Z_N * Z_M


def cyclic_free_product_checks(N: int, M: int, k_max: int = 6, characters=(0, 0),
                               tol: float = 1e-12) -> dict:
    """Moments of the projections ``q`` (in ``Z_N``) and ``r`` (in ``Z_M``).

    ``q = (1/N) sum_k omega^{ck} a^k`` for the character index ``c``.  With the
    trivial characters (default) all values are exact rationals; other
    characters use complex floats compared at ``tol``.
    """
    if N < 2 or M < 2:
        raise ValueError("N and M must be at least 2")
    orders = (N, M)
    e = CyclicFreeElement(orders)
    exact = characters == (0, 0)

    def projection(gen, order, c):
        terms = {}
        for k in range(order):
            g = CyclicFreeElement(orders, ((gen, k),) if k else ())
            if exact:
                terms[g] = Fraction(1, order)
            else:
                terms[g] = cmath.exp(2j * cmath.pi * c * k / order) / order
        return GroupAlgElement(e, terms)

    q = projection(0, N, characters[0])
    r = projection(1, M, characters[1])

    def close(a, b):
        return a == b if exact else abs(a - b) <= tol

    def is_zero(x):
        return x.is_zero(None if exact else tol)

    checks = {
        "q_projection": is_zero(q * q - q) and is_zero(q.adjoint() - q),
        "r_projection": is_zero(r * r - r) and is_zero(r.adjoint() - r),
        "tau_q": close(q.trace(), Fraction(1, N)),
        "tau_r": close(r.trace(), Fraction(1, M)),
    }
    x = q * r
    powers = [x.one_like(), x]
    for _ in range((k_max + 1) // 2 - 1):
        powers.append(powers[-1] * x)
    moments = [trace_pairing(powers[(k + 1) // 2], powers[k // 2]) for k in range(1, k_max + 1)]
    fmt = (lambda c: str(c)) if exact else (lambda c: repr(complex(c).real))
    return {"check": "cyclic_free_product", "N": N, "M": M, "exact": exact,
            "characters": list(characters), "tolerance": None if exact else tol,
            "tau_q": fmt(q.trace()), "tau_r": fmt(r.trace()),
            "moments_qr": [fmt(m) for m in moments], "checks": checks,
            "moments": moments, "passed": all(checks.values())}


__all__ = [
    "LampGroupElement", "CyclicFreeElement", "GroupAlgElement", "Mat", "RelationReport",
    "u", "z_power", "lamp", "tau", "trace_pairing", "p_plus", "p_minus", "random_lamp_element",
    "verify_graph_relations", "sigma_reps", "sigma_assignment", "theta", "theta_raw",
    "theta_matrix", "factor_image", "check_theta_factor_compatibility", "kernel_spanning_sets",
    "verify_condition4_prop56", "cor57_index", "verify_orthogonality_cor57", "fig1_assignment",
    "phi_tilde", "fig1_kernel_sets", "check_phi_tilde_factor_compatibility",
    "verify_embedding_prop58", "cyclic_free_product_checks", "FIG1", "FIG2",
]

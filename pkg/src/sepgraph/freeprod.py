"""Exact normal-form calculus for ``A *_C B`` with ``A = prod M_{s_i+1}``,
``B = prod M_{r_i+1}`` and ``C = C^{n+1}``.

Coordinates of ``C`` are indexed ``0..n-1`` for the sinks ``w_1..w_n`` and
``n`` for the source ``v``.  The matrix unit ``e^{(i)}_{jk}`` of ``A`` lives
in ``e_L A e_R`` with ``L = i-1`` if ``j == 0`` else ``n`` (same for ``R``
and ``k``), and ``iota_A(e_i) = e^{(i)}_{00}``.

An element of the algebraic free product is stored as a base vector in
``C`` plus a linear combination of alternating words.  Letters are basis
vectors of the centered parts ``A°`` and ``B°``:

* ``(tag, i, j, k)`` with ``j != k`` is the matrix unit ``e^{(i)}_{jk}``;
* ``(tag, i, j, j)`` with ``j >= 1`` is ``e^{(i)}_{jj} - 1_v / N``, where
  ``N`` is the factor's total corner size; the lexicographically last such
  diagonal letter is dropped since the full set sums to zero.

Consecutive letters of a word come from different factors and have
matching ``C``-indices, so the word basis is a basis of the free product.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Optional, Sequence

from .core import Presentation, alpha, beta, build_one_relator_graph, sink
from .cuntz import CuntzElement, cuntz_checks  # noqa: F401
from .linalg import nullspace
from .scalars import GaussianRational, format_scalar

A_TAG = "A"
B_TAG = "B"


class Factor:
    """One finite-dimensional factor ``prod_i M_{sizes[i]}`` with its expectation onto ``C``.

    Elements are dicts ``{(i, j, k): coeff}`` with 1-based block index ``i``.
    """

    def __init__(self, tag: str, corners: Sequence[int]):
        self.tag = tag
        self.corners = tuple(corners)  # s_i (for A) or r_i (for B)
        self.n = len(self.corners)
        self.total = sum(self.corners)
        diag = [(i, j) for i in range(1, self.n + 1) for j in range(1, self.corners[i - 1] + 1)]
        self._diag = diag
        self._dropped = diag[-1] if diag else None
        letters = []
        for i in range(1, self.n + 1):
            size = self.corners[i - 1] + 1
            for j in range(size):
                for k in range(size):
                    if j == k and (j == 0 or (i, j) == self._dropped):
                        continue
                    letters.append((tag, i, j, k))
        self.letters = tuple(letters)

    # matrix-unit level

    def unit(self, i: int, j: int, k: int) -> dict:
        size = self.corners[i - 1] + 1
        if not (1 <= i <= self.n and 0 <= j < size and 0 <= k < size):
            raise IndexError(f"no matrix unit ({i},{j},{k}) in factor {self.tag}")
        return {(i, j, k): Fraction(1)}

    def units(self) -> list[tuple[int, int, int]]:
        return [(i, j, k) for i in range(1, self.n + 1)
                for j in range(self.corners[i - 1] + 1) for k in range(self.corners[i - 1] + 1)]

    def left(self, j: int, i: int) -> int:
        return i - 1 if j == 0 else self.n

    @staticmethod
    def mul(x: dict, y: dict) -> dict:
        out: dict = {}
        for (i, j, k), a in x.items():
            for (i2, k2, l), b in y.items():
                if i == i2 and k == k2:
                    key = (i, j, l)
                    out[key] = out.get(key, 0) + a * b
        return {key: c for key, c in out.items() if c != 0}

    @staticmethod
    def add(x: dict, y: dict, scale=1) -> dict:
        out = dict(x)
        for key, c in y.items():
            out[key] = out.get(key, 0) + scale * c
        return {key: c for key, c in out.items() if c != 0}

    @staticmethod
    def adjoint(x: dict) -> dict:
        return {(i, k, j): c.conjugate() for (i, j, k), c in x.items()}

    def one(self) -> dict:
        return {(i, j, j): Fraction(1) for i, j, k in self.units() if j == k}

    def embed_base(self, c: Sequence) -> dict:
        """``iota(c)``: ``c_i`` at ``e^{(i)}_{00}``, ``c_v`` on every corner diagonal entry."""
        out = {}
        for i in range(1, self.n + 1):
            if c[i - 1] != 0:
                out[(i, 0, 0)] = c[i - 1]
            if c[self.n] != 0:
                for j in range(1, self.corners[i - 1] + 1):
                    out[(i, j, j)] = c[self.n]
        return out

    def expectation(self, x: dict) -> tuple:
        """``(x^{(1)}_{00}, .., x^{(n)}_{00}, (1/N) sum_{i, j>=1} x^{(i)}_{jj})``."""
        c = [Fraction(0)] * (self.n + 1)
        corner = Fraction(0)
        for (i, j, k), a in x.items():
            if j != k:
                continue
            if j == 0:
                c[i - 1] = c[i - 1] + a
            else:
                corner = corner + a
        c[self.n] = corner / self.total if self.total else corner
        return tuple(c)

    # centered letters

    def letter_element(self, letter) -> dict:
        _, i, j, k = letter
        if j != k:
            return {(i, j, k): Fraction(1)}
        out = {(ii, jj, jj): Fraction(-1, self.total) for ii, jj in self._diag}
        out[(i, j, j)] = out[(i, j, j)] + 1
        return {key: c for key, c in out.items() if c != 0}

    def letter_left(self, letter) -> int:
        return self.left(letter[2], letter[1])

    def letter_right(self, letter) -> int:
        return self.left(letter[3], letter[1])

    def decompose(self, x: dict) -> tuple[tuple, dict]:
        """Split ``x = iota(Phi(x)) + sum coeff * letter``."""
        c = self.expectation(x)
        letters: dict = {}
        dev = {}
        for (i, j, k), a in x.items():
            if j != k:
                letters[(self.tag, i, j, k)] = a
            elif j >= 1:
                dev[(i, j)] = a - c[self.n]
        if self._dropped is not None:
            for ij in self._diag:
                dev.setdefault(ij, -c[self.n])
            last = dev[self._dropped]
            for (i, j), d in dev.items():
                if (i, j) == self._dropped:
                    continue
                coeff = d - last
                if coeff != 0:
                    letters[(self.tag, i, j, j)] = coeff
        return c, letters

    def is_diagonal_projection(self, x: dict) -> bool:
        if any(j != k for (_, j, k) in x):
            return False
        return self.mul(x, x) == x and self.adjoint(x) == x


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v != 0}


class FreeElement:
    """Element ``base + sum coeff * word`` of the algebraic amalgamated free product."""

    __slots__ = ("algebra", "base", "words")

    def __init__(self, algebra: "AmalgamatedFreeProduct", base: Sequence, words: Optional[dict] = None):
        self.algebra = algebra
        self.base = tuple(base)
        self.words = _clean(words or {})

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            other = self.algebra.scalar(other)
        words = dict(self.words)
        for w, c in other.words.items():
            words[w] = words.get(w, 0) + c
        return FreeElement(self.algebra, [a + b for a, b in zip(self.base, other.base)], words)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "FreeElement":
        return FreeElement(self.algebra, [c * a for a in self.base],
                           {w: c * v for w, v in self.words.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def adjoint(self) -> "FreeElement":
        return self.algebra.adjoint(self)

    def is_zero(self) -> bool:
        return not self.words and all(a == 0 for a in self.base)

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"FreeElement(base={self.base!r}, words={len(self.words)})"

    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def to_json(self) -> dict:
        words = sorted(self.words.items())
        return {
            "base": [format_scalar(a) for a in self.base],
            "words": [{"letters": [list(l) for l in w], "coeff": format_scalar(c)}
                      for w, c in words],
        }


class AmalgamatedFreeProduct:
    """Symbolic ``(A, Phi_A) *_C (B, Phi_B)`` for a one-relator presentation."""

    def __init__(self, p: Presentation):
        self.presentation = p
        self.n = p.n
        self.A = Factor(A_TAG, p.s)
        self.B = Factor(B_TAG, p.r)
        self.N = self.A.total
        self.M = self.B.total
        self._cache: dict = {}
        self._by_left = {}
        for f in (self.A, self.B):
            for l in f.letters:
                self._by_left.setdefault((f.tag, f.letter_left(l)), []).append(l)

    # construction

    def factor(self, tag: str) -> Factor:
        return self.A if tag == A_TAG else self.B

    def other(self, tag: str) -> str:
        return B_TAG if tag == A_TAG else A_TAG

    def zero(self) -> FreeElement:
        return FreeElement(self, [Fraction(0)] * (self.n + 1))

    def scalar(self, c) -> FreeElement:
        return FreeElement(self, [c] * (self.n + 1))

    def one(self) -> FreeElement:
        return self.scalar(Fraction(1))

    def base(self, c: Sequence) -> FreeElement:
        if len(c) != self.n + 1:
            raise ValueError(f"base elements have {self.n + 1} coordinates")
        return FreeElement(self, [x if not isinstance(x, int) else Fraction(x) for x in c])

    def base_unit(self, index: int) -> FreeElement:
        return self.base([int(i == index) for i in range(self.n + 1)])

    def embed(self, tag: str, x: dict) -> FreeElement:
        """``sigma_A`` or ``sigma_B`` applied to a factor element."""
        c, letters = self.factor(tag).decompose(x)
        return FreeElement(self, c, {(l,): a for l, a in letters.items()})

    def sigma_A(self, x: dict) -> FreeElement:
        return self.embed(A_TAG, x)

    def sigma_B(self, x: dict) -> FreeElement:
        return self.embed(B_TAG, x)

    def a_unit(self, i: int, j: int, k: int) -> FreeElement:
        return self.sigma_A(self.A.unit(i, j, k))

    def b_unit(self, i: int, j: int, k: int) -> FreeElement:
        return self.sigma_B(self.B.unit(i, j, k))

    def letter(self, l) -> FreeElement:
        return FreeElement(self, [Fraction(0)] * (self.n + 1), {(l,): Fraction(1)})

    def word(self, letters: Sequence) -> FreeElement:
        letters = tuple(letters)
        self._check_word(letters)
        return FreeElement(self, [Fraction(0)] * (self.n + 1), {letters: Fraction(1)})

    def _check_word(self, w) -> None:
        for x, y in zip(w, w[1:]):
            if x[0] == y[0]:
                raise ValueError("adjacent letters must come from different factors")
            if self.factor(x[0]).letter_right(x) != self.factor(y[0]).letter_left(y):
                raise ValueError("adjacent letters have mismatched C-indices")

    def graph_assignment(self) -> dict:
        """Images of the vertices and edges of the one-relator graph."""
        p = self.presentation
        out = {"v": self.base_unit(self.n)}
        for i in range(1, self.n + 1):
            out[sink(i)] = self.base_unit(i - 1)
            for j in range(1, p.s[i - 1] + 1):
                out[alpha(i, j)] = self.a_unit(i, j, 0)
            for j in range(1, p.r[i - 1] + 1):
                out[beta(i, j)] = self.b_unit(i, j, 0)
        return out

    def graph(self):
        return build_one_relator_graph(self.presentation)

    # letters and words

    def _left(self, l) -> int:
        return self.factor(l[0]).letter_left(l)

    def _right(self, l) -> int:
        return self.factor(l[0]).letter_right(l)

    def word_left(self, w) -> int:
        return self._left(w[0])

    def word_right(self, w) -> int:
        return self._right(w[-1])

    def letters_from(self, tag: str, left: Optional[int] = None) -> list:
        if left is None:
            return list(self.factor(tag).letters)
        return self._by_left.get((tag, left), [])

    def alternating_words(self, max_length: int) -> Iterable[tuple]:
        """All basis words of length ``1..max_length``."""
        frontier = [(l,) for tag in (A_TAG, B_TAG) for l in self.factor(tag).letters]
        length = 1
        while frontier and length <= max_length:
            yield from frontier
            nxt = []
            for w in frontier:
                last = w[-1]
                for l in self.letters_from(self.other(last[0]), self._right(last)):
                    nxt.append(w + (l,))
            frontier = nxt
            length += 1

    # arithmetic

    def _mul_words(self, w1: tuple, w2: tuple):
        key = (w1, w2)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        base: dict = {}
        words: dict = {}
        x, y = w1[-1], w2[0]
        if self._right(x) == self._left(y):
            if x[0] != y[0]:
                words[w1 + w2] = Fraction(1)
            else:
                f = self.factor(x[0])
                c, letters = f.decompose(f.mul(f.letter_element(x), f.letter_element(y)))
                pre, post = w1[:-1], w2[1:]
                for l, a in letters.items():
                    w = pre + (l,) + post
                    words[w] = words.get(w, 0) + a
                for idx, a in enumerate(c):
                    if a == 0:
                        continue
                    if not pre and not post:
                        base[idx] = base.get(idx, 0) + a
                    elif not pre:
                        if self.word_left(post) == idx:
                            words[post] = words.get(post, 0) + a
                    elif not post:
                        if self.word_right(pre) == idx:
                            words[pre] = words.get(pre, 0) + a
                    elif self.word_right(pre) == idx == self.word_left(post):
                        b2, w2s = self._mul_words(pre, post)
                        for k, v in b2.items():
                            base[k] = base.get(k, 0) + a * v
                        for w, v in w2s.items():
                            words[w] = words.get(w, 0) + a * v
        result = (_clean(base), _clean(words))
        self._cache[key] = result
        return result

    def multiply(self, x: FreeElement, y: FreeElement) -> FreeElement:
        base = [a * b for a, b in zip(x.base, y.base)]
        words: dict = {}

        def acc(w, c):
            words[w] = words.get(w, 0) + c

        for w, c in y.words.items():
            a = x.base[self.word_left(w)]
            if a != 0:
                acc(w, a * c)
        for w, c in x.words.items():
            b = y.base[self.word_right(w)]
            if b != 0:
                acc(w, c * b)
        for w1, c1 in x.words.items():
            for w2, c2 in y.words.items():
                b12, ws = self._mul_words(w1, w2)
                for k, v in b12.items():
                    base[k] = base[k] + c1 * c2 * v
                for w, v in ws.items():
                    acc(w, c1 * c2 * v)
        return FreeElement(self, base, words)

    def _letter_adjoint(self, l):
        tag, i, j, k = l
        return (tag, i, k, j)

    def adjoint(self, x: FreeElement) -> FreeElement:
        words = {}
        for w, c in x.words.items():
            words[tuple(self._letter_adjoint(l) for l in reversed(w))] = c.conjugate()
        return FreeElement(self, [a.conjugate() for a in x.base], words)

    # expectations and states

    def free_expectation(self, x: FreeElement) -> tuple:
        """``Phi``: every alternating centered word is killed, the ``C``-part survives."""
        return x.base

    def uniform_weights(self) -> tuple:
        return tuple(Fraction(1, self.n + 1) for _ in range(self.n + 1))

    def state_phi(self, x: FreeElement, gamma: Optional[Sequence] = None):
        gamma = self.uniform_weights() if gamma is None else tuple(gamma)
        return sum((g * a for g, a in zip(gamma, self.free_expectation(x))), Fraction(0))

    def a_part(self, x: FreeElement) -> dict:
        """``(id_A * Phi_B)(x)`` as an element of the factor ``A``."""
        out = self.A.embed_base(x.base)
        for w, c in x.words.items():
            if len(w) == 1 and w[0][0] == A_TAG:
                out = Factor.add(out, self.A.letter_element(w[0]), c)
        return out

    def expectation_E_factor(self, x: FreeElement, p: dict) -> dict:
        if not self.A.is_diagonal_projection(p):
            raise ValueError("p must be a diagonal projection of A")
        a = self.a_part(x)
        q = Factor.add(self.A.one(), p, -1)
        return Factor.add(self.A.mul(self.A.mul(p, a), p), self.A.mul(self.A.mul(q, a), q))

    def expectation_E(self, x: FreeElement, p: dict) -> FreeElement:
        """``E(x) = p a p + (1-p) a (1-p)`` with ``a = (id_A * Phi_B)(x)``."""
        return self.sigma_A(self.expectation_E_factor(x, p))

    def modular_element(self, block: Optional[int] = None) -> FreeElement:
        """``t_mod = e^{(block)}_{10}`` in ``A``: a partial isometry from ``e_00`` to ``e_11``."""
        block = self.default_block() if block is None else block
        if self.presentation.s[block - 1] < 1:
            raise ValueError(f"s_{block} = 0: no modular partial isometry in block {block}")
        return self.a_unit(block, 1, 0)

    def default_block(self) -> int:
        p = self.presentation
        both = [i for i in range(1, self.n + 1) if p.s[i - 1] > 0 and p.r[i - 1] > 0]
        if both:
            return both[0]
        return next(i for i in range(1, self.n + 1) if p.s[i - 1] > 0)

    # random elements for property checks

    def random_word(self, rng: random.Random, max_length: int) -> tuple:
        length = rng.randint(1, max_length)
        tag = rng.choice((A_TAG, B_TAG))
        letters = self.factor(tag).letters or self.factor(self.other(tag)).letters
        if not self.factor(tag).letters:
            tag = self.other(tag)
        w = [rng.choice(letters)]
        while len(w) < length:
            options = self.letters_from(self.other(w[-1][0]), self._right(w[-1]))
            if not options:
                break
            w.append(rng.choice(options))
        return tuple(w)

    def random_element(self, rng: random.Random, max_length: int = 4, terms: int = 3,
                       complex_coeffs: bool = True) -> FreeElement:
        base = [random_scalar(rng, complex_coeffs) for _ in range(self.n + 1)]
        words = {}
        for _ in range(rng.randint(1, terms)):
            w = self.random_word(rng, max_length)
            words[w] = words.get(w, 0) + random_scalar(rng, complex_coeffs)
        return FreeElement(self, base, words)


def random_scalar(rng: random.Random, complex_coeffs: bool = True):
    re = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    if not complex_coeffs:
        return re
    return GaussianRational(re, Fraction(rng.randint(-3, 3), rng.randint(1, 3)))


# module-level operations


def factor_expectation(alg: AmalgamatedFreeProduct, tag: str, x: dict) -> tuple:
    return alg.factor(tag).expectation(x)


def multiply(x: FreeElement, y: FreeElement) -> FreeElement:
    return x.algebra.multiply(x, y)


def free_expectation(x: FreeElement) -> tuple:
    return x.algebra.free_expectation(x)


def state_phi(x: FreeElement, gamma: Optional[Sequence] = None):
    return x.algebra.state_phi(x, gamma)


def expectation_E(x: FreeElement, p: dict) -> FreeElement:
    return x.algebra.expectation_E(x, p)


def check_phi_E_compatibility(alg: AmalgamatedFreeProduct, samples: int = 1000, seed: int = 0,
                              max_length: int = 4, block: Optional[int] = None) -> dict:
    """``Phi(E(x)) == Phi(x)`` on random elements, with ``p = e^{(block)}_{00}``."""
    block = alg.default_block() if block is None else block
    p = alg.A.unit(block, 0, 0)
    rng = random.Random(seed)
    failures = []
    for t in range(samples):
        x = alg.random_element(rng, max_length)
        if alg.free_expectation(alg.expectation_E(x, p)) != alg.free_expectation(x):
            failures.append(t)
    return {"check": "phi_E_compatibility", "samples": samples, "seed": seed,
            "max_length": max_length, "block": block, "failures": failures,
            "passed": not failures}


def check_modular_relation(alg: AmalgamatedFreeProduct, samples: int = 200, seed: int = 0,
                           max_length: int = 4, block: Optional[int] = None) -> dict:
    """``phi(t x) == (1/N) phi(x t)`` on every matrix unit of ``A`` and on random words."""
    block = alg.default_block() if block is None else block
    t = alg.modular_element(block)
    lam = Fraction(1, alg.N)
    basis_failures = []
    for unit in alg.A.units():
        x = alg.a_unit(*unit)
        if alg.state_phi(t * x) != lam * alg.state_phi(x * t):
            basis_failures.append(list(unit))
    rng = random.Random(seed)
    word_failures = []
    for k in range(samples):
        x = alg.random_element(rng, max_length)
        if alg.state_phi(t * x) != lam * alg.state_phi(x * t):
            word_failures.append(k)
    return {"check": "modular_relation", "lambda": format_scalar(lam), "block": block,
            "basis_checked": len(alg.A.units()), "basis_failures": basis_failures,
            "samples": samples, "seed": seed, "word_failures": word_failures,
            "passed": not basis_failures and not word_failures}


def _span_kernel(alg: AmalgamatedFreeProduct, elements: list) -> list:
    """Basis of ``span(elements) ∩ ker Phi``."""
    if not elements:
        return []
    rows = [[alg.free_expectation(e)[c] for e in elements] for c in range(alg.n + 1)]
    out = []
    for vec in nullspace(rows):
        x = alg.zero()
        for c, e in zip(vec, elements):
            if c != 0:
                x = x + e.scale(c)
        out.append(x)
    return out


def is_A_free(alg: AmalgamatedFreeProduct, z: FreeElement, p: dict, length_bound: int = 4) -> dict:
    """Check that the projection ``z <= p`` is ``A``-free up to ``length_bound``.

    Condition (1) is ``E(z) in C p``.  Condition (2) is checked on every
    product of spanning letters of ``(pAp)°`` and ``C*(z, p)°`` that
    alternates between the two sets and has length ``2..length_bound``.
    """
    if not alg.A.is_diagonal_projection(p):
        raise ValueError("p must be a diagonal projection of A")
    P = alg.sigma_A(p)
    if z.adjoint() != z or z * z != z:
        raise ValueError("z is not a projection")
    if P * z != z or z * P != z:
        raise ValueError("z does not lie in p A p")

    Ez = alg.expectation_E_factor(z, p)
    i0, j0, _ = next(iter(sorted(p)))
    lam = Ez.get((i0, j0, j0), 0)
    if Factor.add(Ez, p, -lam):
        return {"holds": False, "condition": 1, "witness": "E(z) is not a multiple of p",
                "checked": 0, "length_bound": length_bound}

    support = [(i, j) for (i, j, _k) in p]
    pAp = [alg.a_unit(i, j, k) for (i, j) in support for (i2, k) in support if i2 == i]
    S1 = _span_kernel(alg, pAp)
    S2 = _span_kernel(alg, [P, z])
    sets = (S1, S2)
    checked = 0
    for length in range(2, length_bound + 1):
        for first in (0, 1):
            pattern = [(first + t) % 2 for t in range(length)]
            if any(not sets[s] for s in pattern):
                continue
            for choice in iproduct(*[range(len(sets[s])) for s in pattern]):
                x = sets[pattern[0]][choice[0]]
                for s, c in zip(pattern[1:], choice[1:]):
                    x = x * sets[s][c]
                checked += 1
                if not alg.expectation_E(x, p).is_zero():
                    return {"holds": False, "condition": 2,
                            "witness": [[s, c] for s, c in zip(pattern, choice)],
                            "checked": checked, "length_bound": length_bound}
    return {"holds": True, "condition": None, "witness": None, "checked": checked,
            "length_bound": length_bound}


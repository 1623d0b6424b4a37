"""Cuntz-word *-algebra on a rose with ``k`` loops.

Elements are finite combinations of ``lam mu*`` for paths ``lam, mu``
(tuples of loop indices ``1..k``), multiplied with ``e_i* e_j = delta_ij``.
The canonical state is ``phi_k(lam mu*) = delta_{lam,mu} k^{-|lam|}``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct


class CuntzElement:
    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        self.k = k
        self.terms = {key: c for key, c in (terms or {}).items() if c != 0}

    @classmethod
    def word(cls, k: int, lam=(), mu=(), coeff=1) -> "CuntzElement":
        for i in tuple(lam) + tuple(mu):
            if not 1 <= i <= k:
                raise ValueError(f"loop index {i} outside 1..{k}")
        return cls(k, {(tuple(lam), tuple(mu)): Fraction(coeff)})

    def __add__(self, other):
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return CuntzElement(self.k, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return CuntzElement(self.k, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CuntzElement):
            return self.scale(other)
        out: dict = {}
        for (lam, mu), a in self.terms.items():
            for (al, be), b in other.terms.items():
                key = reduce_pair(lam, mu, al, be)
                if key is not None:
                    out[key] = out.get(key, 0) + a * b
        return CuntzElement(self.k, out)

    __rmul__ = scale

    def adjoint(self):
        return CuntzElement(self.k, {(mu, lam): c.conjugate() for (lam, mu), c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, CuntzElement) and (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"CuntzElement({self.k}, {self.terms!r})"


def reduce_pair(lam, mu, al, be):
    """Normal form of ``(lam mu*)(al be*)``, or ``None`` when it vanishes."""
    if len(al) >= len(mu):
        if al[:len(mu)] != mu:
            return None
        return (lam + al[len(mu):], be)
    if mu[:len(al)] != al:
        return None
    return (lam, be + mu[len(al):])


def phi(x: CuntzElement):
    total = Fraction(0)
    for (lam, mu), c in x.terms.items():
        if lam == mu:
            total += c * Fraction(1, x.k ** len(lam))
    return total


def paths(k: int, max_length: int):
    for length in range(max_length + 1):
        yield from iproduct(range(1, k + 1), repeat=length)


def _checks_for(k: int, bound: int) -> dict:
    projections = {i: phi(CuntzElement.word(k, (i,), (i,))) for i in range(1, k + 1)}
    proj_ok = all(v == Fraction(1, k) for v in projections.values())
    t = CuntzElement.word(k, (2, 1), (1,))
    p = CuntzElement.word(k, (1,), (1,))
    q = CuntzElement.word(k, (2, 1), (2, 1))
    iso_ok = t.adjoint() * t == p and t * t.adjoint() == q
    lam = Fraction(1, k)
    checked = 0
    failures = []
    all_paths = list(paths(k, bound))
    for a in all_paths:
        for b in all_paths:
            x = CuntzElement.word(k, a, b)
            checked += 1
            if phi(t * x) != lam * phi(x * t):
                failures.append([list(a), list(b)])
    return {"loops": k, "phi_projections": {str(i): str(v) for i, v in projections.items()},
            "projections_ok": proj_ok, "partial_isometry_ok": iso_ok,
            "lambda": str(lam), "words_checked": checked, "modular_failures": failures[:20],
            "passed": proj_ok and iso_ok and not failures}


def cuntz_checks(n: int, m: int, bound: int = 3) -> dict:
    """State and modular checks in both Cuntz-word algebras with ``n`` and ``m`` loops.

    The partial isometry is ``t = e_2 e_1 e_1*`` with ``t* t = e_1 e_1*`` and
    ``t t* = e_2 e_1 e_1* e_2*``; the relation checked is
    ``phi_k(t x) = (1/k) phi_k(x t)`` on every ``x = lam mu*`` with
    ``|lam|, |mu| <= bound``.
    """
    if n <= 1 or m <= 1:
        raise ValueError("both loop counts must exceed 1")
    reports = [_checks_for(n, bound), _checks_for(m, bound)]
    return {"check": "cuntz", "n": n, "m": m, "bound": bound, "algebras": reports,
            "passed": all(r["passed"] for r in reports)}


__all__ = ["CuntzElement", "reduce_pair", "phi", "paths", "cuntz_checks"]

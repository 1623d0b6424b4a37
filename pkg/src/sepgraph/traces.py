"""Compatible tracial states on ``C = C^{n+1}`` and tracial pairs on the factors.

Everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import Presentation, derive_quantities
from .freeprod import Factor
from .linalg import nullspace
from .scalars import format_scalar


class TraceError(ValueError):
    """A trace construction was requested outside its branch."""


@dataclass(frozen=True)
class TraceWeights:
    """A faithful state on ``C``: weights on ``w_1..w_n`` followed by the ``v`` weight."""

    weights: tuple

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if any(x <= 0 for x in w):
            raise ValueError("trace weights must be positive")
        if sum(w) != 1:
            raise ValueError("trace weights must sum to 1")

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, k):
        return self.weights[k]

    def to_json(self) -> list:
        return [format_scalar(x) for x in self.weights]


@dataclass(frozen=True)
class Infeasible:
    """No faithful state on ``C`` makes both ``tau∘Phi_A`` and ``tau∘Phi_B`` tracial."""

    reason: str

    def __bool__(self):
        return False

    def to_json(self):
        return {"infeasible": self.reason}


@dataclass(frozen=True)
class FactorTracePair:
    """Block weights for ``sum gamma_i Tr`` on ``A`` and ``sum delta_i Tr`` on ``B`` (normalized ``Tr``)."""

    gamma: tuple
    delta: tuple
    data: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        out = {"gamma": [format_scalar(x) for x in self.gamma],
               "delta": [format_scalar(x) for x in self.delta]}
        if self.data:
            out["data"] = {k: format_scalar(v) if isinstance(v, Fraction) else v
                           for k, v in self.data.items()}
        return out


def balanced_trace(p: Presentation) -> TraceWeights:
    q = derive_quantities(p)
    if q.M != q.N:
        raise TraceError(f"balanced trace needs M = N, got M={q.M}, N={q.N}")
    n, N = p.n, q.N
    return TraceWeights(tuple([Fraction(1, N + n)] * n + [Fraction(N, N + n)]))


def disjoint_trace(p: Presentation) -> TraceWeights:
    q = derive_quantities(p)
    if q.I1 & q.I2:
        raise TraceError(f"supports overlap at {sorted(q.I1 & q.I2)}")
    M, N = q.M, q.N
    K = q.n1 * M + q.n2 * N + N * M
    w = []
    for i in range(1, p.n + 1):
        # every index lies in I1 or I2 since r_i + s_i > 0
        w.append(Fraction(M, K) if i in q.I1 else Fraction(N, K))
    w.append(Fraction(N * M, K))
    return TraceWeights(tuple(w))


def trace_system(p: Presentation) -> list:
    """Rows of the homogeneous system ``tau_i - tau_v / N = 0`` (i in I1), ``tau_i - tau_v / M = 0`` (i in I2)."""
    q = derive_quantities(p)
    n = p.n
    rows = []
    for support, total in ((q.I1, q.N), (q.I2, q.M)):
        for i in sorted(support):
            row = [Fraction(0)] * (n + 1)
            row[i - 1] = Fraction(1)
            row[n] = Fraction(-1, total)
            rows.append(row)
    return rows


def solve_trace_feasibility(p: Presentation):
    """Return the unique compatible faithful ``TraceWeights`` or ``Infeasible``."""
    basis = nullspace(trace_system(p), p.n + 1)
    if not basis:
        return Infeasible("the traciality conditions only admit tau = 0")
    if len(basis) > 1:
        # cannot happen for a valid presentation; every index is constrained
        raise AssertionError("trace system is underdetermined")
    vec = basis[0]
    total = sum(vec)
    if total == 0:
        return Infeasible("solutions of the traciality conditions have total mass 0")
    w = [x / total for x in vec]
    if any(x <= 0 for x in w):
        return Infeasible("the normalized solution is not faithful")
    tau = TraceWeights(tuple(w))
    if not verify_trace_compatibility(tau, p):
        raise AssertionError("solver output failed the matrix-unit check")
    return tau


def _is_tracial(factor: Factor, functional) -> bool:
    """``f(xy) = f(yx)`` on matrix units reduces to the pairs ``(e_jk, e_kj)`` and ``(e_jj, e_jk)``."""
    for i in range(1, factor.n + 1):
        size = factor.corners[i - 1] + 1
        for j in range(size):
            for k in range(size):
                x, y = factor.unit(i, j, k), factor.unit(i, k, j)
                if functional(factor.mul(x, y)) != functional(factor.mul(y, x)):
                    return False
                if j != k:
                    d = factor.unit(i, j, j)
                    if functional(factor.mul(d, x)) != functional(factor.mul(x, d)):
                        return False
    return True


def verify_trace_compatibility(tau, p: Presentation) -> bool:
    """Check that ``tau∘Phi_A`` and ``tau∘Phi_B`` are tracial, pair by pair on matrix units."""
    w = tuple(tau)
    if len(w) != p.n + 1:
        raise ValueError(f"expected {p.n + 1} weights, got {len(w)}")
    for factor in (Factor("A", p.s), Factor("B", p.r)):
        # tau∘Phi on a diagonal unit: w_i at the 00 corner, w_v / total elsewhere
        corner = w[p.n] / factor.total if factor.total else w[p.n]
        weight = {(i, j): (w[i - 1] if j == 0 else corner)
                  for i in range(1, factor.n + 1) for j in range(factor.corners[i - 1] + 1)}

        def functional(x, weight=weight):
            return sum((weight[i, j] * a for (i, j, k), a in x.items() if j == k), Fraction(0))
        if not _is_tracial(factor, functional):
            return False
    return True


def _lift_to_blocks(tau: TraceWeights, corners: Sequence[int]) -> tuple:
    """Block weights of ``tau∘Phi`` on ``prod M_{c_i+1}``."""
    n = len(corners)
    total = sum(corners)
    return tuple(tau[i] + corners[i] * tau[n] / total for i in range(n))


def rfd_trace_pair(p: Presentation) -> FactorTracePair:
    """Faithful tracial pair on ``A`` and ``B`` that agree on ``C``, for incomparable ``r, s``."""
    r, s, n = p.r, p.s, p.n
    if r == s:
        tau = balanced_trace(p)
        gamma = _lift_to_blocks(tau, s)
        delta = _lift_to_blocks(tau, r)
        pair = FactorTracePair(gamma, delta, {"branch": "balanced"})
        _check_pair(pair, p)
        return pair
    first = [i for i in range(n) if r[i] < s[i]]
    second = [i for i in range(n) if s[i] < r[i]]
    if not first or not second:
        raise TraceError("r and s are comparable: no compatible faithful trace pair")
    a, b = first[0], second[0]
    order = [a, b] + [i for i in range(n) if i not in (a, b)]
    R = [r[i] for i in order]
    S = [s[i] for i in order]

    rho = [Fraction(R[i] + 1, S[i] + 1) for i in range(n)]
    Delta = [rho[i] - rho[0] for i in range(n)]
    Gamma = (R[1] + 1) * (S[0] + 1) - (S[1] + 1) * (R[0] + 1)
    g1p = Fraction((S[0] + 1) * (R[1] - S[1]), Gamma)
    g2p = Fraction((S[1] + 1) * (S[0] - R[0]), Gamma)
    gamma = [g1p, g2p] + [Fraction(0)] * (n - 2)
    eps = None
    if n > 2:
        ratio = max(abs(Delta[k] / Delta[1]) for k in range(2, n))
        eps = min(g1p, g2p) / (2 * (n - 2) * (1 + ratio))
        for k in range(2, n):
            gamma[k] = eps
            gamma[0] += (Delta[k] / Delta[1] - 1) * eps
            gamma[1] -= (Delta[k] / Delta[1]) * eps
    delta = [rho[i] * gamma[i] for i in range(n)]

    out_g = [Fraction(0)] * n
    out_d = [Fraction(0)] * n
    for pos, i in enumerate(order):
        out_g[i] = gamma[pos]
        out_d[i] = delta[pos]
    data = {"branch": "incomparable", "order": [i + 1 for i in order],
            "Gamma": Fraction(Gamma), "gamma1_prime": g1p, "gamma2_prime": g2p}
    if eps is not None:
        data["epsilon"] = eps
    pair = FactorTracePair(tuple(out_g), tuple(out_d), data)
    _check_pair(pair, p)
    return pair


def verify_factor_trace_pair(pair: FactorTracePair, p: Presentation) -> bool:
    """Positivity, normalization, and agreement on every base projection of ``C``."""
    g, d = pair.gamma, pair.delta
    if len(g) != p.n or len(d) != p.n:
        return False
    if any(x <= 0 for x in g) or any(x <= 0 for x in d):
        return False
    if sum(g) != 1 or sum(d) != 1:
        return False
    for i in range(p.n):
        if g[i] / (p.s[i] + 1) != d[i] / (p.r[i] + 1):
            return False
    on_v_A = sum((g[i] * p.s[i] / (p.s[i] + 1) for i in range(p.n)), Fraction(0))
    on_v_B = sum((d[i] * p.r[i] / (p.r[i] + 1) for i in range(p.n)), Fraction(0))
    return on_v_A == on_v_B


def _check_pair(pair, p):
    if not verify_factor_trace_pair(pair, p):
        raise AssertionError(f"trace pair failed verification: {pair}")


__all__ = [
    "TraceWeights", "Infeasible", "FactorTracePair", "TraceError",
    "balanced_trace", "disjoint_trace", "trace_system", "solve_trace_feasibility",
    "verify_trace_compatibility", "rfd_trace_pair", "verify_factor_trace_pair",
]

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from sepgraph.classify import incomparable
from sepgraph.core import Presentation, derive_quantities
from sepgraph.traces import (
    FactorTracePair, Infeasible, TraceError, TraceWeights, balanced_trace, disjoint_trace,
    rfd_trace_pair, solve_trace_feasibility, verify_factor_trace_pair, verify_trace_compatibility,
)
from strategies import presentations

F = Fraction


def sympy_trace_oracle(p):
    """Solve traciality of tau∘Phi_A and tau∘Phi_B from matrix units with sympy."""
    n = p.n
    t = sympy.symbols(f"t0:{n + 1}")
    eqs = [sum(t) - 1]
    for corners in (p.s, p.r):
        total = sum(corners)
        for i, c in enumerate(corners):
            size = c + 1

            def f(X, i=i):
                return t[i] * X[0, 0] + sum(X[j, j] for j in range(1, size)) * t[n] / total

            for j in range(size):
                for k in range(size):
                    E = sympy.zeros(size)
                    E[j, k] = 1
                    eqs.append(f(E * E.T) - f(E.T * E))
    sol = sympy.linsolve(eqs, t)
    if not sol:
        return None
    (vec,) = sol
    if any(v.free_symbols for v in vec):
        return "underdetermined"
    vals = [F(int(v.p), int(v.q)) for v in vec]
    return vals if all(v > 0 for v in vals) else None


def test_balanced_examples():
    assert balanced_trace(Presentation((1, 1), (1, 1))).weights == (F(1, 4), F(1, 4), F(1, 2))
    assert balanced_trace(Presentation((2,), (2,))).weights == (F(1, 3), F(2, 3))
    assert balanced_trace(Presentation((1, 1), (0, 2))).weights == (F(1, 4), F(1, 4), F(1, 2))
    with pytest.raises(TraceError):
        balanced_trace(Presentation((3, 2), (2, 4)))


def test_disjoint_examples():
    assert disjoint_trace(Presentation((2, 0), (0, 3))).weights == (F(3, 11), F(2, 11), F(6, 11))
    assert disjoint_trace(Presentation((1, 0), (0, 1))).weights == (F(1, 3),) * 3
    assert disjoint_trace(Presentation((0, 2), (3, 0))).weights == (F(2, 11), F(3, 11), F(6, 11))
    with pytest.raises(TraceError):
        disjoint_trace(Presentation((3, 2), (2, 4)))


def test_trace_weights_validated():
    with pytest.raises(ValueError):
        TraceWeights((F(1, 2), F(1, 3)))
    with pytest.raises(ValueError):
        TraceWeights((F(0), F(1)))


def test_feasibility_examples():
    p = Presentation((1, 1), (1, 1))
    assert solve_trace_feasibility(p) == balanced_trace(p)
    p = Presentation((2, 0), (0, 3))
    assert solve_trace_feasibility(p) == disjoint_trace(p)
    out = solve_trace_feasibility(Presentation((3, 2), (2, 4)))
    assert isinstance(out, Infeasible) and not out


def test_compatibility_verifier():
    assert verify_trace_compatibility(balanced_trace(Presentation((1, 1), (1, 1))), Presentation((1, 1), (1, 1)))
    assert verify_trace_compatibility(disjoint_trace(Presentation((2, 0), (0, 3))), Presentation((2, 0), (0, 3)))
    assert not verify_trace_compatibility((F(1, 3),) * 3, Presentation((3, 2), (2, 4)))


@given(presentations(max_n=3, max_entry=3))
def test_feasibility_matches_sympy_oracle(p):
    mine = solve_trace_feasibility(p)
    oracle = sympy_trace_oracle(p)
    if oracle is None:
        assert isinstance(mine, Infeasible)
    else:
        assert list(mine.weights) == oracle


@given(presentations())
def test_feasibility_criterion(p):
    q = derive_quantities(p)
    tau = solve_trace_feasibility(p)
    assert (not isinstance(tau, Infeasible)) == (q.M == q.N or not (q.I1 & q.I2))
    if tau:
        assert verify_trace_compatibility(tau, p)
        if q.M == q.N:
            assert tau == balanced_trace(p)
        else:
            assert tau == disjoint_trace(p)


def test_rfd_pair_ordered_example():
    pair = rfd_trace_pair(Presentation((2, 3), (4, 2)))
    assert pair.gamma == (F(5, 11), F(6, 11))
    assert pair.delta == (F(3, 11), F(8, 11))
    assert pair.data["Gamma"] == 11


def test_rfd_pair_balanced_branch():
    pair = rfd_trace_pair(Presentation((1, 1), (1, 1)))
    assert pair.gamma == pair.delta == (F(1, 2), F(1, 2))


def test_rfd_pair_reordering_and_epsilon():
    p = Presentation((3, 2, 1), (2, 4, 1))
    pair = rfd_trace_pair(p)
    assert pair.data["order"] == [2, 1, 3]
    assert pair.gamma[2] == pair.data["epsilon"] > 0
    assert verify_factor_trace_pair(pair, p)
    # reordered problem is the ordered example plus a third generator
    assert (pair.data["gamma1_prime"], pair.data["gamma2_prime"]) == (F(5, 11), F(6, 11))


def test_rfd_pair_rejects_comparable():
    with pytest.raises(TraceError):
        rfd_trace_pair(Presentation((1, 1), (2, 1)))


def test_pair_verifier_rejects_bad_pairs():
    p = Presentation((2, 3), (4, 2))
    assert not verify_factor_trace_pair(FactorTracePair((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2))), p)


def random_incomparable(rng, n_max=5, top=6):
    while True:
        n = rng.randint(2, n_max)
        r = tuple(rng.randint(0, top) for _ in range(n))
        s = tuple(rng.randint(0, top) for _ in range(n))
        if any(a + b == 0 for a, b in zip(r, s)) or not any(r) or not any(s):
            continue
        if r != s and incomparable(r, s):
            return Presentation(r, s)


def test_rfd_pairs_randomized():
    rng = random.Random(11)
    for _ in range(200):
        p = random_incomparable(rng)
        pair = rfd_trace_pair(p)
        assert sum(pair.gamma) == 1 and sum(pair.delta) == 1
        assert all(x > 0 for x in pair.gamma + pair.delta)
        for i in range(p.n):
            assert pair.delta[i] == F(p.r[i] + 1, p.s[i] + 1) * pair.gamma[i]
            assert pair.gamma[i] / (p.s[i] + 1) == pair.delta[i] / (p.r[i] + 1)

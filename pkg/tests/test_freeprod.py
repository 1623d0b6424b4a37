import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sepgraph import groupalg as ga
from sepgraph.core import Presentation, build_one_relator_graph
from sepgraph.freeprod import (
    AmalgamatedFreeProduct, Factor, check_modular_relation, check_phi_E_compatibility,
    expectation_E, factor_expectation, free_expectation, is_A_free, multiply, state_phi,
)
from sepgraph.groupalg import verify_graph_relations
from sepgraph.scalars import GaussianRational, is_nonnegative_real
from strategies import presentations

F = Fraction
ALG = AmalgamatedFreeProduct(Presentation((3, 2), (2, 4)))


def test_factor_expectation_examples():
    A = ALG.A
    assert factor_expectation(ALG, "A", A.unit(1, 0, 0)) == (1, 0, 0)
    assert factor_expectation(ALG, "A", A.unit(1, 1, 1)) == (0, 0, F(1, 6))
    assert factor_expectation(ALG, "A", A.unit(1, 1, 0)) == (0, 0, 0)


def test_factor_decomposition_roundtrip():
    rng = random.Random(3)
    for f in (ALG.A, ALG.B):
        for _ in range(50):
            x = {u: F(rng.randint(-3, 3)) for u in rng.sample(f.units(), 4)}
            x = {k: v for k, v in x.items() if v}
            c, letters = f.decompose(x)
            rebuilt = f.embed_base(c)
            for l, a in letters.items():
                assert f.expectation(f.letter_element(l)) == (0,) * (f.n + 1)
                rebuilt = Factor.add(rebuilt, f.letter_element(l), a)
            assert rebuilt == x


def test_multiply_examples():
    lhs = ALG.a_unit(1, 1, 0) * ALG.a_unit(1, 0, 1)
    assert lhs == ALG.a_unit(1, 1, 1)
    assert lhs.base == (0, 0, F(1, 6))
    a = ALG.letter(("A", 1, 0, 1))
    b = ALG.letter(("B", 1, 1, 0))
    prod = multiply(a, b)
    assert list(prod.words) == [(("A", 1, 0, 1), ("B", 1, 1, 0))]


def test_free_expectation_examples():
    c = ALG.base([F(1), F(2), F(3)])
    assert free_expectation(c) == (1, 2, 3)
    assert free_expectation(ALG.letter(("A", 1, 0, 2))) == (0, 0, 0)
    x = ALG.letter(("A", 1, 1, 1)) * ALG.letter(("B", 1, 1, 1))
    assert free_expectation(x) == (0, 0, 0)


def test_state_examples():
    assert state_phi(ALG.a_unit(1, 0, 0)) == F(1, 3)
    assert state_phi(ALG.a_unit(1, 1, 1)) == F(1, 18)
    assert state_phi(ALG.b_unit(1, 1, 1)) == F(1, 15)


@given(presentations(max_n=3, max_entry=3))
@settings(max_examples=30)
def test_state_on_base_projections(p):
    alg = AmalgamatedFreeProduct(p)
    for i in range(1, p.n + 1):
        assert alg.state_phi(alg.a_unit(i, 0, 0)) == F(1, p.n + 1)
        for j in range(1, p.s[i - 1] + 1):
            assert alg.state_phi(alg.a_unit(i, j, j)) == F(1, (p.n + 1) * alg.N)


def test_expectation_E_examples():
    p = ALG.A.unit(1, 0, 0)
    c = ALG.base([F(1), F(2), F(5)])
    assert expectation_E(c, p) == c
    x = ALG.letter(("A", 1, 0, 1)) * ALG.letter(("B", 1, 1, 0))
    assert expectation_E(x, p).is_zero()
    assert expectation_E(ALG.a_unit(1, 1, 0), p).is_zero()
    with pytest.raises(ValueError):
        expectation_E(c, {(1, 0, 1): F(1)})


def test_graph_assignment_satisfies_relations():
    for rel in [(3, 2), (2, 4)], [(1, 1), (1, 1)], [(2, 0), (0, 3)]:
        p = Presentation(*map(tuple, rel))
        alg = AmalgamatedFreeProduct(p)
        assert verify_graph_relations(build_one_relator_graph(p), alg.graph_assignment())


def test_exhaustive_words_are_centered():
    alg = AmalgamatedFreeProduct(Presentation((1, 1), (1, 2)))
    for w in alg.alternating_words(3):
        assert free_expectation(alg.word(w)) == (0,) * 3


def test_randomized_properties():
    rng = random.Random(5)
    for alg in (ALG, AmalgamatedFreeProduct(Presentation((1, 2, 0), (2, 0, 1)))):
        for _ in range(60):
            x, y, z = (alg.random_element(rng, 4) for _ in range(3))
            assert (x * y) * z == x * (y * z)
            assert (x * y).adjoint() == y.adjoint() * x.adjoint()
            assert is_nonnegative_real(alg.state_phi(x.adjoint() * x))
            c = alg.base([GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(alg.n + 1)])
            d = alg.base([F(rng.randint(-2, 2)) for _ in range(alg.n + 1)])
            lhs = free_expectation(c * x * d)
            rhs = tuple(a * b * e for a, b, e in zip(c.base, free_expectation(x), d.base))
            assert lhs == rhs
            assert free_expectation(x.adjoint()) == tuple(a.conjugate() for a in free_expectation(x))


def test_phi_E_compatibility_suite():
    assert check_phi_E_compatibility(ALG, samples=200, seed=1)["passed"]


def test_modular_relation_suite():
    report = check_modular_relation(ALG, samples=100, seed=2)
    assert report["passed"] and report["basis_checked"] == len(ALG.A.units())
    x = ALG.a_unit(1, 0, 1)
    t = ALG.modular_element()
    assert state_phi(t * x) == F(1, 3 * 6) and state_phi(x * t) == F(1, 3)
    assert state_phi(t * ALG.one()) == 0
    b = ALG.letter(("B", 1, 1, 0))
    assert state_phi(t * b) == 0 == state_phi(b * t)


def test_A_freeness():
    p = ALG.A.unit(1, 0, 0)
    assert is_A_free(ALG, ALG.sigma_A(p), p)["holds"]
    two = {(1, 1, 1): F(1), (1, 2, 2): F(1)}
    report = is_A_free(ALG, ALG.a_unit(1, 1, 1), two, length_bound=3)
    assert not report["holds"] and report["condition"] == 1
    with pytest.raises(ValueError):
        is_A_free(ALG, ALG.a_unit(1, 1, 0), p)
    with pytest.raises(ValueError):
        is_A_free(ALG, ALG.a_unit(2, 0, 0), p)


def test_json_term_tree():
    x = ALG.random_element(random.Random(0), 3)
    data = x.to_json()
    assert len(data["base"]) == 3 and all("letters" in w for w in data["words"])


# second route: the r = s = (1, 1) free product inside M_2 of the lamplighter group algebra

FIG2 = AmalgamatedFreeProduct(Presentation((1, 1), (1, 1)))
SA, SB = ga.sigma_reps()


def to_T(x):
    out = ga.theta_matrix((x.base[2], x.base[0], x.base[1]))
    for w, c in x.words.items():
        term = None
        for l in w:
            tag = l[0]
            f = FIG2.factor(tag)
            img = None
            for (i, j, k), a in f.letter_element(l).items():
                piece = ga.factor_image(SA if tag == "A" else SB, tag, FIG2.presentation, i, j, k).scale(a)
                img = piece if img is None else img + piece
            term = img if term is None else term * img
        out = out + term.scale(c)
    return out


def test_engine_agrees_with_group_algebra_model():
    rng = random.Random(9)
    for _ in range(80):
        x, y = FIG2.random_element(rng, 3, complex_coeffs=False), FIG2.random_element(rng, 3, complex_coeffs=False)
        assert to_T(x * y) == to_T(x) * to_T(y)
        assert to_T(x.adjoint()) == to_T(x).adjoint()
        b = FIG2.free_expectation(x)
        assert ga.theta(to_T(x)) == (b[2], b[0], b[1])

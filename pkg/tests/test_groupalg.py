import random
from fractions import Fraction

import pytest

from sepgraph import groupalg as ga
from sepgraph.core import alpha, beta, build_one_relator_graph, sink
from sepgraph.groupalg import (
    FIG2, LampGroupElement, Mat, cyclic_free_product_checks, lamp, p_minus, p_plus, sigma_assignment,
    sigma_reps, tau, theta, theta_matrix, u, verify_condition4_prop56, verify_embedding_prop58,
    verify_graph_relations, verify_orthogonality_cor57, z_power,
)
from oracles import free_projection_moments

F = Fraction


def test_group_law():
    rng = random.Random(1)
    for _ in range(200):
        g, h, k = (ga.random_lamp_element(rng) for _ in range(3))
        assert (g * h) * k == g * (h * k)
        assert (g * g.inverse()).is_identity() and (g.inverse() * g).is_identity()
        t = rng.randint(-3, 3)
        assert (g * h).shifted(t) == g.shifted(t) * h.shifted(t)
        z = z_power(t)
        assert z * g * z.inverse() == g.shifted(t)
        assert tau(lamp(g) * lamp(h)) == tau(lamp(h) * lamp(g))
        assert tau(lamp(g).adjoint() * lamp(g)) == 1


def test_conjugation_shifts_generators():
    assert z_power(1) * u(0) * z_power(-1) == u(1)
    assert (u(3) * u(3)).is_identity()


def test_spectral_projections():
    pp, pm = p_plus(), p_minus()
    assert pp * pp == pp and pm * pm == pm
    assert (pp * pm).is_zero()
    assert pp + pm == ga.ONE
    assert pp.adjoint() == pp


def test_sigma_reps_examples():
    sa, sb = sigma_reps()
    a1 = sa[alpha(1, 1)]
    assert a1.adjoint() * a1 == sa[sink(1)]
    assert sa["v"] == a1 * a1.adjoint() + sa[alpha(2, 1)] * sa[alpha(2, 1)].adjoint()
    assert (sa[sink(1)] * sa[sink(2)]).is_zero()


def test_graph_relations():
    g = build_one_relator_graph(FIG2)
    assert verify_graph_relations(g, sigma_assignment())
    # dropping z keeps every relation
    a = sigma_assignment()
    a[beta(1, 1)] = Mat.unit(2, 1, 2, p_plus())
    a[beta(2, 1)] = Mat.unit(2, 1, 2, p_minus())
    assert verify_graph_relations(g, a)
    a = sigma_assignment()
    a[sink(2)] = a[sink(1)]
    report = verify_graph_relations(g, a)
    assert not report and report.relation == "V"


def test_theta_examples():
    assert theta(Mat.unit(2, 1, 1, lamp(u(0)))) == (0, 0, 0)
    assert ga.theta_raw(Mat.unit(2, 2, 2)) == (0, F(1, 2), F(1, 2))
    assert theta(Mat.unit(2, 2, 2)) == (0, 1, 1)


def test_theta_is_factor_expectation():
    assert ga.check_theta_factor_compatibility()["passed"]


def test_theta_bimodule_and_adjoint():
    rng = random.Random(4)
    gens = [Mat.unit(2, i, j, lamp(ga.random_lamp_element(rng))) for i in (1, 2) for j in (1, 2)
            for _ in range(3)]
    for _ in range(100):
        x = gens[rng.randrange(len(gens))].scale(F(rng.randint(-3, 3)))
        for _ in range(2):
            x = x + gens[rng.randrange(len(gens))].scale(F(rng.randint(-3, 3), 2))
        c = [F(rng.randint(-3, 3)) for _ in range(3)]
        d = [F(rng.randint(-3, 3)) for _ in range(3)]
        lhs = theta(theta_matrix(c) * x * theta_matrix(d))
        assert lhs == tuple(a * b * e for a, b, e in zip(c, theta(x), d))
        assert theta(x.adjoint()) == tuple(v.conjugate() for v in theta(x))


def test_condition4_examples():
    Z0, Z1 = ga.kernel_spanning_sets()
    assert theta(Z0[0] * Z1[0]) == (0, 0, 0)
    assert theta(Z0[1] * Z1[3]) == (0, 0, 0)
    report = verify_condition4_prop56(4, samples=100, seed=3)
    assert report["passed"] and report["words_checked"] == 1560


def test_orthogonality():
    ok, N, _ = verify_orthogonality_cor57([u(0)])
    assert ok and N == 1
    ok, N, _ = verify_orthogonality_cor57([u(0) * u(1), z_power(2)])
    assert ok and N > 1
    with pytest.raises(ValueError):
        verify_orthogonality_cor57([LampGroupElement()])
    rng = random.Random(8)
    for _ in range(100):
        F_ = {g for g in (ga.random_lamp_element(rng) for _ in range(rng.randint(1, 6))) if not g.is_identity()}
        if F_:
            assert verify_orthogonality_cor57(F_)[0]


def test_orthogonality_index_is_needed():
    F_ = [u(0)]
    assert ga.cor57_index(F_) == 1
    v = u(0)
    assert (v * u(0).inverse() * v * u(0)).is_identity()


def test_embedding():
    a = ga.fig1_assignment()
    b2 = a[beta(3, 1)]
    assert ga.phi_tilde(b2) == (0, 0, 0, 0)
    assert ga.phi_tilde(a[alpha(1, 1)] * a[beta(1, 1)].adjoint()) == (0, 0, 0, 0)
    report = verify_embedding_prop58(4, samples=100, seed=2)
    assert report["passed"] and report["relations"] and report["phi_compatibility"]


@pytest.mark.parametrize("N,M", [(2, 2), (2, 3), (3, 3), (6, 5), (4, 2)])
def test_cyclic_moments_match_free_probability(N, M):
    report = cyclic_free_product_checks(N, M, k_max=4)
    assert report["passed"]
    assert report["moments"] == free_projection_moments(F(1, N), F(1, M), 4)


def test_cyclic_examples():
    r = cyclic_free_product_checks(2, 2, k_max=1)
    assert r["tau_q"] == "1/2" and r["tau_r"] == "1/2" and r["moments"][0] == F(1, 4)
    r = cyclic_free_product_checks(6, 5, k_max=2, characters=(1, 2))
    assert r["passed"] and abs(complex(r["moments"][0]) - 1 / 30) < 1e-12

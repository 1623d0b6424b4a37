"""Exact arithmetic in the amalgamated free product and its state."""

import random

from sepgraph import parse_relation
from sepgraph.freeprod import AmalgamatedFreeProduct, check_modular_relation, check_phi_E_compatibility

alg = AmalgamatedFreeProduct(parse_relation("3a+2b=2a+4b"))
i = alg.default_block()

P = alg.a_unit(i, 0, 0)
q = alg.a_unit(i, 1, 1)
print("phi(P) =", alg.state_phi(P))
print("phi(q) =", alg.state_phi(q))

t = alg.modular_element()
print("t t* == q:", t * t.adjoint() == q)

rng = random.Random(1)
x = alg.random_element(rng, max_length=3, terms=2)
y = alg.random_element(rng, max_length=3, terms=2)
print("words in x*y:", len((x * y).words), "max length", (x * y).max_length())
print("phi(t x) - phi(x t)/N =", alg.state_phi(t * x) - alg.state_phi(x * t) / alg.N)

print("modular relation:", check_modular_relation(alg, samples=50, seed=0)["passed"])
print("Phi o E = Phi:", check_phi_E_compatibility(alg, samples=100, seed=0)["passed"])

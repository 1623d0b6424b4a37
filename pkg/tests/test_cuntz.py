from fractions import Fraction

import pytest

from sepgraph.cuntz import CuntzElement, cuntz_checks, phi, reduce_pair


def test_reduction_rule():
    assert reduce_pair((), (1,), (1,), ()) == ((), ())
    assert reduce_pair((), (1,), (2,), ()) is None
    assert reduce_pair((2,), (1,), (1, 3), ()) == ((2, 3), ())
    assert reduce_pair((), (1, 2), (1,), ()) == ((), (2,))


def test_state_and_partial_isometry():
    assert phi(CuntzElement.word(3, (1,), (1,))) == Fraction(1, 3)
    t = CuntzElement.word(3, (2, 1), (1,))
    assert t.adjoint() * t == CuntzElement.word(3, (1,), (1,))
    assert t * t.adjoint() == CuntzElement.word(3, (2, 1), (2, 1))
    x = CuntzElement.word(3, (1,), (2,))
    assert phi(t * x) == Fraction(1, 3) * phi(x * t)


def test_associativity():
    import random
    rng = random.Random(0)

    def rand():
        lam = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 3)))
        mu = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 3)))
        return CuntzElement.word(2, lam, mu)

    for _ in range(200):
        a, b, c = rand(), rand(), rand()
        assert (a * b) * c == a * (b * c)


def test_suite():
    r = cuntz_checks(3, 2, bound=3)
    assert r["passed"]
    assert r["algebras"][0]["phi_projections"] == {"1": "1/3", "2": "1/3", "3": "1/3"}
    with pytest.raises(ValueError):
        cuntz_checks(1, 2)

"""Traces on the two factors: closed forms and the pair used for finite-dimensional approximations."""

from fractions import Fraction

from sepgraph import Presentation, balanced_trace, disjoint_trace, rfd_trace_pair
from sepgraph.traces import verify_factor_trace_pair

p = Presentation((1, 1), (1, 1))
print("balanced (1,1)=(1,1):", balanced_trace(p).weights)

p = Presentation((2, 0), (0, 3))
print("disjoint supports:", disjoint_trace(p).weights)

# incomparable sides: a pair of block weights with delta_i/gamma_i = (r_i+1)/(s_i+1)
p = Presentation((3, 2), (2, 4))
pair = rfd_trace_pair(p)
print("gamma", pair.gamma)
print("delta", pair.delta)
print("ratios", [d / g for g, d in zip(pair.gamma, pair.delta)])
print("expected", [Fraction(r + 1, s + 1) for r, s in zip(p.r, p.s)])
print("check:", verify_factor_trace_pair(pair, p))

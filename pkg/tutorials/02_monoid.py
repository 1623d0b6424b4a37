"""Word problem, stable finiteness and the Grothendieck group of a one-relator monoid."""

from sepgraph import decide_equivalence, grothendieck_group, is_stably_finite, parse_relation
from sepgraph.monoid import check_certificate

p = parse_relation("3a+2b=2a+4b")
finite, witness = is_stably_finite(p)
print("stably finite:", finite)

for x, y in [((1, 0), (0, 2)), ((3, 2), (2, 4)), ((4, 2), (3, 4)), ((1, 1), (1, 1))]:
    verdict = decide_equivalence(x, y, p)
    print(x, y, verdict.status, verdict.kind, "certificate ok:", check_certificate(verdict, x, y, p))

g = grothendieck_group(p)
print("G =", g.describe())

# single generator relations ma = na give Z/(n-m)
for m, n in [(1, 2), (2, 5), (3, 8)]:
    print(f"{m}a={n}a", grothendieck_group(parse_relation(f"{m}a={n}a")).describe())

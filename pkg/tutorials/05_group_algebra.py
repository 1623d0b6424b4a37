"""The lamplighter group algebra model and free products of cyclic groups."""

from sepgraph import build_one_relator_graph
from sepgraph import groupalg as ga

g = ga.u(0) * ga.u(1) * ga.z_power(2)
print("element:", g, " inverse:", g.inverse(), " product:", g * g.inverse())

graph = build_one_relator_graph(ga.FIG2)
print("relations:", bool(ga.verify_graph_relations(graph, ga.sigma_assignment())))
print("Theta compatibility:", ga.check_theta_factor_compatibility()["passed"])

report = ga.verify_condition4_prop56(3)
print("kernel words checked:", report["words_checked"], "passed:", report["passed"])

F = {ga.u(0), ga.u(1) * ga.u(2), ga.z_power(1)}
ok, index, bad = ga.verify_orthogonality_cor57(F)
print("orthogonality with index", index, ":", ok)

print("embedding:", ga.verify_embedding_prop58(3, samples=50)["passed"])

rep = ga.cyclic_free_product_checks(2, 3, k_max=4)
print("Z_2 * Z_3 projection moments:", rep["moments_qr"])

"""Classify a few one-relator presentations and look at the verdict flags."""

from sepgraph import classify, derive_quantities, parse_relation, solve_trace_feasibility

relations = ["3a+2b=2a+4b", "a=2a", "a+b=a+b", "2a=3b", "a+2b=2a+b", "a=a+b"]

for text in relations:
    p = parse_relation(text)
    q = derive_quantities(p)
    v = classify(p)
    print(f"{text:14s} M={q.M} N={q.N}")
    for key, value in v.to_json().items():
        if key not in ("structural_notes", "presentation"):
            print(f"    {key:32s} {value}")
    for statement, citation in v.structural_notes:
        print("    note:", statement, f"[{citation}]")

# the trace solver is the other half of the dichotomy
for text in relations:
    tau = solve_trace_feasibility(parse_relation(text))
    print(text, "->", tau if tau else f"no trace ({tau.reason})")

"""Command-line front end.

    sepgraph classify "3a+2b=2a+4b" [--json]
    sepgraph verify {freeprod,groupalg,cuntz,traces,monoid} [--relation R] [--bound B]
                    [--samples S] [--seed K] [--n N] [--m M] [--json]
    sepgraph monoid "3a+2b=2a+4b" eq a 2b | k0 | finite [--bound B] [--json]

Exit status is 0 when every check passed, 1 when some exact check failed,
and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .classify import classify
from .core import (
    InvalidPresentation, ParseError, Presentation, derive_quantities, format_element,
    parse_element, parse_relation,
)
from .scalars import GaussianRational, format_scalar, is_nonnegative_real

SCHEMA_VERSION = 1
DEFAULT_SEED = 0
DEFAULT_BOUND = 4
DEFAULT_SAMPLES = 1000
SUITES = ("freeprod", "groupalg", "cuntz", "traces", "monoid")


def _jsonable(x):
    if isinstance(x, (Fraction, GaussianRational)):
        return format_scalar(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    return x


def dumps(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2, ensure_ascii=False)


# classify


def cmd_classify(args) -> tuple[dict, int]:
    p = parse_relation(args.relation)
    v = classify(p)
    q = derive_quantities(p)
    report = {"command": "classify", "input": args.relation, "presentation": p.to_json(),
              "M": q.M, "N": q.N, "verdict": v.to_json(),
              "citations": sorted({c for _, c in v.structural_notes})}
    return report, 0


def _print_classify(report):
    v = report["verdict"]
    print(f"presentation: {report['input']}   (M={report['M']}, N={report['N']})")
    if v["swapped"]:
        print("  sides swapped so that M <= N")
    for key in ("reduced_purely_infinite_simple", "reduced_simple", "reduced_faithful_trace",
                "reduced_unique_trace", "full_rfd", "full_stably_finite", "monoid_stably_finite"):
        print(f"  {key:32s} {v[key]}")
    if "trace" in v:
        print(f"  trace on C (w1..wn, v): ({', '.join(v['trace'])})")
    for note in v["structural_notes"]:
        print(f"  - {note['statement']} [{note['citation']}]")


# monoid


def cmd_monoid(args) -> tuple[dict, int]:
    from .monoid import check_certificate, decide_equivalence, grothendieck_group, is_stably_finite

    p = parse_relation(args.relation)
    report = {"command": "monoid", "input": args.relation, "presentation": p.to_json(),
              "query": args.query}
    status = 0
    if args.query == "eq":
        if len(args.operands) != 2:
            raise ValueError("eq needs exactly two elements")
        a = parse_element(args.operands[0], p)
        b = parse_element(args.operands[1], p)
        verdict = decide_equivalence(a, b, p, bound=args.bound)
        replay = check_certificate(verdict, a, b, p)
        report.update({"a": format_element(a, p), "b": format_element(b, p),
                       "verdict": verdict.to_json(), "certificate_replayed": replay,
                       "citations": ["Lemma 6.5"]})
        if not replay:
            status = 1
    elif args.query == "k0":
        if args.operands:
            raise ValueError("k0 takes no operands")
        g = grothendieck_group(p)
        report.update({"k0": g.to_json(), "citations": ["Conjecture 6.3"]})
    else:
        if args.operands:
            raise ValueError("finite takes no operands")
        ok, witness = is_stably_finite(p)
        report.update({"stably_finite": ok, "witness": witness, "citations": ["Lemma 6.5"]})
    return report, status


def _print_monoid(report):
    print(f"presentation: {report['input']}")
    if report["query"] == "eq":
        v = report["verdict"]
        print(f"  {report['a']} ~ {report['b']}: {v['status']} (bound {v['bound']})")
        if v.get("certificate"):
            print(f"  certificate: {json.dumps(v['certificate'], sort_keys=True)}")
        print(f"  certificate replayed: {report['certificate_replayed']}")
    elif report["query"] == "k0":
        print(f"  K0 / Grothendieck group: {report['k0']['description']}")
    else:
        print(f"  stably finite: {report['stably_finite']}")
        if report["witness"]:
            print(f"  witness: {json.dumps(report['witness'], sort_keys=True)}")


# verification suites


def _suite_freeprod(args) -> dict:
    from . import freeprod as fp

    p = parse_relation(args.relation or "3a+2b=2a+4b")
    alg = fp.AmalgamatedFreeProduct(p)
    n, N = p.n, alg.N
    rng = random.Random(args.seed)
    checks = {}
    block = alg.default_block()
    checks["phi_P"] = alg.state_phi(alg.a_unit(block, 0, 0)) == Fraction(1, n + 1)
    checks["phi_q"] = alg.state_phi(alg.a_unit(block, 1, 1)) == Fraction(1, (n + 1) * N)
    modular = fp.check_modular_relation(alg, samples=min(args.samples, 200), seed=args.seed,
                                        max_length=args.bound)
    checks["modular_relation"] = modular["passed"]
    compat = fp.check_phi_E_compatibility(alg, samples=args.samples, seed=args.seed,
                                          max_length=args.bound)
    checks["phi_E_compatibility"] = compat["passed"]
    triples = max(1, args.samples // 2)
    assoc = positive = 0
    for _ in range(triples):
        x, y, z = (alg.random_element(rng, args.bound) for _ in range(3))
        assoc += (x * y) * z == x * (y * z)
        positive += is_nonnegative_real(alg.state_phi(x.adjoint() * x))
    checks["associativity"] = assoc == triples
    checks["positivity"] = positive == triples
    return {"presentation": p.to_json(), "checks": checks, "triples": triples,
            "modular": modular, "phi_E": {k: v for k, v in compat.items() if k != "failures"},
            "passed": all(checks.values())}


def _suite_groupalg(args) -> dict:
    from . import groupalg as ga
    from .core import build_one_relator_graph

    rng = random.Random(args.seed)
    rel = ga.verify_graph_relations(build_one_relator_graph(ga.FIG2), ga.sigma_assignment())
    theta = ga.check_theta_factor_compatibility()
    cond4 = ga.verify_condition4_prop56(args.bound, samples=min(args.samples, 500), seed=args.seed)
    cor57 = []
    for _ in range(min(args.samples, 100)):
        F = set()
        while len(F) < rng.randint(1, 5):
            g = ga.random_lamp_element(rng)
            if not g.is_identity():
                F.add(g)
        ok, N, _bad = ga.verify_orthogonality_cor57(F)
        cor57.append(ok)
    emb = ga.verify_embedding_prop58(args.bound, samples=min(args.samples, 500), seed=args.seed)
    cyc = ga.cyclic_free_product_checks(args.n or 2, args.m or 2, k_max=args.bound)
    checks = {"graph_relations": rel.passed, "theta_compatibility": theta["passed"],
              "condition4": cond4["passed"], "orthogonality": all(cor57),
              "embedding": emb["passed"], "cyclic_free_product": cyc["passed"]}
    cyc = {k: v for k, v in cyc.items() if k != "moments"}
    return {"checks": checks, "condition4_words": cond4["words_checked"],
            "embedding_words": emb["words_checked"], "orthogonality_sets": len(cor57),
            "cyclic_free_product": cyc, "passed": all(checks.values())}


def _suite_cuntz(args) -> dict:
    from .cuntz import cuntz_checks

    return cuntz_checks(args.n or 3, args.m or 2, bound=args.bound)


def _random_presentation(rng, n_max=3, top=4):
    while True:
        n = rng.randint(1, n_max)
        r = tuple(rng.randint(0, top) for _ in range(n))
        s = tuple(rng.randint(0, top) for _ in range(n))
        try:
            return Presentation(r, s)
        except InvalidPresentation:
            continue


def _suite_traces(args) -> dict:
    from .classify import YES, incomparable
    from .traces import (Infeasible, rfd_trace_pair, solve_trace_feasibility,
                         verify_factor_trace_pair, verify_trace_compatibility)

    rng = random.Random(args.seed)
    dichotomy = feasibility = pairs = 0
    cases = min(args.samples, 300)
    tried_pairs = 0
    for _ in range(cases):
        p = _random_presentation(rng)
        q = derive_quantities(p)
        tau = solve_trace_feasibility(p)
        has = not isinstance(tau, Infeasible)
        feasibility += has == (q.M == q.N or not (q.I1 & q.I2))
        if has and not verify_trace_compatibility(tau, p):
            feasibility -= 1
        if 2 <= min(q.M, q.N):
            v = classify(p)
            dichotomy += (v.reduced_purely_infinite_simple == YES) != (v.reduced_faithful_trace == YES)
        else:
            dichotomy += 1
        if incomparable(p.r, p.s):
            tried_pairs += 1
            pairs += verify_factor_trace_pair(rfd_trace_pair(p), p)
    checks = {"feasibility_criterion": feasibility == cases, "dichotomy": dichotomy == cases,
              "rfd_pairs": pairs == tried_pairs}
    return {"cases": cases, "rfd_pairs_checked": tried_pairs, "checks": checks,
            "passed": all(checks.values())}


def _suite_monoid(args) -> dict:
    from .classify import incomparable
    from .monoid import check_certificate, decide_equivalence, is_stably_finite

    rng = random.Random(args.seed)
    p = parse_relation(args.relation or "3a+2b=2a+4b")
    replays = []
    statuses = {}
    for _ in range(min(args.samples, 50)):
        a = tuple(rng.randint(0, 3) for _ in range(p.n))
        b = tuple(rng.randint(0, 3) for _ in range(p.n))
        v = decide_equivalence(a, b, p)
        statuses[v.status] = statuses.get(v.status, 0) + 1
        replays.append(check_certificate(v, a, b, p))
    agree = 0
    cases = min(args.samples, 200)
    for _ in range(cases):
        q = _random_presentation(rng)
        agree += is_stably_finite(q)[0] == incomparable(q.r, q.s)
    checks = {"certificates_replay": all(replays), "finiteness_criterion": agree == cases}
    return {"presentation": p.to_json(), "pairs": len(replays), "statuses": statuses,
            "finiteness_cases": cases, "checks": checks, "passed": all(checks.values())}


_SUITE_FUNCS = {"freeprod": _suite_freeprod, "groupalg": _suite_groupalg, "cuntz": _suite_cuntz,
                "traces": _suite_traces, "monoid": _suite_monoid}


def cmd_verify(args) -> tuple[dict, int]:
    if args.suite not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    result = _SUITE_FUNCS[args.suite](args)
    report = {"command": "verify", "suite": args.suite,
              "flags": {"seed": args.seed, "bound": args.bound, "samples": args.samples,
                        "n": args.n, "m": args.m, "relation": args.relation},
              "result": result, "passed": result["passed"]}
    return report, 0 if result["passed"] else 1


def _print_verify(report):
    r = report["result"]
    f = report["flags"]
    print(f"suite {report['suite']}: {'PASS' if report['passed'] else 'FAIL'}"
          f"  (seed={f['seed']}, bound={f['bound']}, samples={f['samples']})")
    checks = r.get("checks")
    if checks is None:
        checks = {f"algebra with {a['loops']} loops": a["passed"] for a in r.get("algebras", [])}
    for name, ok in checks.items():
        print(f"  {name:28s} {'ok' if ok else 'FAILED'}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    parser = argparse.ArgumentParser(prog="sepgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify a one-relator presentation")
    c.add_argument("relation", help='relation like "3a+2b=2a+4b" or a JSON object {"r":..,"s":..}')

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--relation", default=None, help="presentation for the freeprod/monoid suites")
    v.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="word length bound")
    v.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="random sample count")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--n", type=int, default=None, help="first loop count / cyclic order")
    v.add_argument("--m", type=int, default=None, help="second loop count / cyclic order")

    m = sub.add_parser("monoid", parents=[common], help="graph monoid queries")
    m.add_argument("relation")
    m.add_argument("query", choices=("eq", "k0", "finite"))
    m.add_argument("operands", nargs="*", help="two elements for eq, e.g. a 2b")
    m.add_argument("--bound", type=int, default=None, help="search bound on the coefficient sum")
    return parser


_COMMANDS = {"classify": (cmd_classify, _print_classify), "verify": (cmd_verify, _print_verify),
             "monoid": (cmd_monoid, _print_monoid)}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run, show = _COMMANDS[args.command]
    try:
        report, status = run(args)
    except ParseError as exc:
        print(f"error: {exc} (at position {exc.position})", file=sys.stderr)
        return 2
    except (InvalidPresentation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"schema_version": SCHEMA_VERSION, **report}
    if args.json:
        print(dumps(report))
    else:
        show(_jsonable(report))
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: bounds, chif, certify, verify-certificate, scheme,
verify-lemmas, survey, enumerate. Graphs are named by GraphSpec strings
(see generators.resolve_graph_spec). Exit codes: 0 success, 1 defined
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import full_report, report_to_dict
from .certify import (
    certificate_to_dict,
    find_homomorphism,
    obstruction_certificate,
    run_all_lemma_verifiers,
    verify_certificate_dict,
)
from .enumeration import enumerate_nonisomorphic
from .errors import GraphSpecError, SpecchromError
from .fracchrom import fractional_chromatic, solution_to_dict
from .generators import resolve_graph_spec
from .graph6 import write_graph6
from .survey import run_survey, stats_to_dict, write_rows_csv
from .symmetry import pair_orbit_scheme, scheme_to_dict


def _print_table(pairs, out):
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        print(f"{k:<{width}}  {v}", file=out)


def _cmd_bounds(ns):
    g = resolve_graph_spec(ns.graph)
    report = full_report(g, graph_id=ns.graph)
    payload = report_to_dict(report)
    if ns.json:
        json.dump(payload, sys.stdout, indent=2)
        print()
    else:
        _print_table(list(payload.items()), sys.stdout)
    return 0


def _cmd_chif(ns):
    g = resolve_graph_spec(ns.graph)
    solution = fractional_chromatic(g)
    if ns.json:
        json.dump(solution_to_dict(solution, g.n), sys.stdout, indent=2)
        print()
        return 0
    value = solution.value
    print(f"chi_f({ns.graph}) = {value.numerator}/{value.denominator}"
          f" = {float(value)!r}")
    for s, w in sorted(solution.weights.items()):
        vertices = ",".join(str(v) for v in range(g.n) if (s >> v) & 1)
        print(f"  weight {w} on {{{vertices}}}")
    return 0


def _cmd_certify(ns):
    g = resolve_graph_spec(ns.source)
    h = resolve_graph_spec(ns.target)
    cert = obstruction_certificate(g, h, source=ns.source, target=ns.target)
    payload = certificate_to_dict(cert)
    homomorphism = None
    if not cert.certified and g.n <= 15 and h.n <= 15:
        homomorphism = find_homomorphism(g, h)
        payload["homomorphism"] = homomorphism
    if ns.json:
        json.dump(payload, sys.stdout, indent=2)
        print()
        return 0
    _print_table(
        [(k, v) for k, v in payload.items() if k != "homomorphism"],
        sys.stdout,
    )
    if cert.certified:
        print(f"certified: no homomorphism {ns.source} -> {ns.target}")
    elif homomorphism is not None:
        print(f"inconclusive margin; homomorphism found: {homomorphism}")
    else:
        print("inconclusive margin; exhaustive search found no homomorphism")
    return 0


def _cmd_verify_certificate(ns):
    with open(ns.path, encoding="utf-8") as fh:
        data = json.load(fh)
    ok, messages = verify_certificate_dict(data, resolve_graph_spec)
    for msg in messages:
        print(msg)
    print("VALID" if ok else "INVALID")
    return 0 if ok else 1


def _cmd_scheme(ns):
    g = resolve_graph_spec(ns.graph)
    scheme = pair_orbit_scheme(g)
    json.dump(scheme_to_dict(scheme), sys.stdout, indent=2)
    print()
    return 0


def _cmd_verify_lemmas(ns):
    h = resolve_graph_spec(ns.target)
    reports = run_all_lemma_verifiers(h, ns.trials, ns.seed)
    if ns.json:
        json.dump([r.to_dict() for r in reports], sys.stdout, indent=2)
        print()
    else:
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            print(
                f"{r.lemma_id:<12} trials={r.trials} "
                f"max_violation={r.max_violation!r} scale={r.scale!r} "
                f"{status}"
            )
    return 0 if all(r.passed for r in reports) else 1


def _cmd_survey(ns):
    if ns.corpus == "-":
        lines = sys.stdin
        corpus_id = "stdin"
    else:
        lines = open(ns.corpus, encoding="ascii")
        corpus_id = ns.corpus
    try:
        stats = run_survey(
            lines, tie_eps=ns.tie_eps, corpus_id=corpus_id,
            threads=ns.threads,
        )
    finally:
        if lines is not sys.stdin:
            lines.close()
    if ns.csv:
        with open(ns.csv, "w", encoding="ascii") as fh:
            write_rows_csv(stats, fh)
    for warning in stats.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if ns.json:
        json.dump(stats_to_dict(stats), sys.stdout, indent=2)
        print()
    else:
        payload = stats_to_dict(stats)
        del payload["warnings"]
        _print_table(list(payload.items()), sys.stdout)
    return 0


def _cmd_enumerate(ns):
    for g in enumerate_nonisomorphic(ns.n, connected_only=ns.connected):
        print(write_graph6(g))
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="specchrom",
        description=(
            "Spectral lower bounds for chromatic numbers: squared-energy "
            "and Hoffman bounds, exact fractional chromatic numbers, and "
            "homomorphism obstruction certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="spectral and clique bounds")
    p.add_argument("graph", help="GraphSpec, e.g. petersen or cycle:5")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("chif", help="exact fractional chromatic number")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_chif)

    p = sub.add_parser(
        "certify", help="spectral obstruction certificate for source -> target"
    )
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser(
        "verify-certificate", help="recompute and validate a stored certificate"
    )
    p.add_argument("path", help="JSON file produced by certify --json")
    p.set_defaults(func=_cmd_verify_certificate)

    p = sub.add_parser("scheme", help="pair-orbit class matrices (JSON)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_scheme)

    p = sub.add_parser("verify-lemmas", help="randomized inequality checks")
    p.add_argument("--target", required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_lemmas)

    p = sub.add_parser("survey", help="bound comparison over a graph6 corpus")
    p.add_argument("corpus", help="graph6 file, or - for standard input")
    p.add_argument("--tie-eps", type=float, default=1e-9)
    p.add_argument("--csv", help="write per-graph rows to this file")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("enumerate", help="graph6 for all graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return ns.func(ns)
    except GraphSpecError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except (SpecchromError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: spectrum, classify, check-cert, gen, reduce, extend,
contract, limit-table, atlas.  Hypergraphs are read as JSON
({"r":..,"n":..,"edges":[[..],..]}) or as text ("r n m" header plus one
edge per line); certificates as {"alpha":"p/q","entries":[{"v","e","val"},..]},
optionally bundled with their graph and claim.

Exit codes: 0 success, 1 input parse error, 2 precondition violation,
3 certificate refuted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .canon import canonical_form
from .classifier import Verdict, classify, rho_r, verify_classification
from .families import FamilyId, below_families, equal_families, gen_path, gen_smith2
from .hypergraph import Hypergraph, HypergraphError
from .labeling import (
    CertificateError,
    WeightedIncidence,
    check_consistent,
    check_normal,
    incidence_from_json_obj,
    incidence_to_json_obj,
    rho_from_alpha,
    tree_propagate,
)
from .spectral import spectral_radius

PARSE_ERROR, PRECONDITION_ERROR, REFUTED = 1, 2, 3


class InputParseError(ValueError):
    """The input file could not be parsed as a hypergraph or certificate."""


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Hypergraph:
    text = _read_input(path)
    stripped = text.lstrip()
    try:
        if stripped.startswith("{"):
            return Hypergraph.from_json_obj(json.loads(text))
        return Hypergraph.from_text(text)
    except (json.JSONDecodeError, HypergraphError) as exc:
        raise InputParseError(str(exc)) from exc


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(obj, out, indent=2)
        out.write("\n")
    else:
        _emit_text(obj, out)


def _emit_text(obj, out, indent: str = "") -> None:
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)):
                out.write(f"{indent}{key}:\n")
                _emit_text(val, out, indent + "  ")
            else:
                out.write(f"{indent}{key}: {val}\n")
    elif isinstance(obj, list):
        for val in obj:
            _emit_text(val, out, indent)
    else:
        out.write(f"{indent}{obj}\n")


def _graph_out(h: Hypergraph, fmt: str, out) -> None:
    if fmt == "json":
        _emit(h.to_json_obj(), "json", out)
    else:
        out.write(h.to_text())


def _spectral_obj(h: Hypergraph, tol: float) -> dict:
    res = spectral_radius(h, tol=tol)
    return {
        "rho": float(f"{res.rho:.17g}"),
        "lower": float(f"{res.lower:.17g}"),
        "upper": float(f"{res.upper:.17g}"),
        "iterations": res.iterations,
        "converged": res.converged,
        "method": res.method,
        "vector": [float(f"{x:.17g}") for x in res.vector],
    }


def _classification_obj(h: Hypergraph) -> dict:
    c = classify(h)
    return {
        "verdict": c.verdict.value,
        "family": c.family.kind if c.family else None,
        "params": list(c.family.params) if c.family else None,
        "label": c.family.label() if c.family else None,
        "witness": c.witness,
    }


def _equal_certificate_obj(family: FamilyId) -> dict | None:
    """An exact 1/4-normal certificate for an Equal-family instance."""
    h = family.make()
    quarter = Fraction(1, 4)
    if h.is_hypertree():
        from .labeling import default_root

        prop = tree_propagate(h, default_root(h), quarter)
        if prop.failed or prop.residual != 0:
            return None
        return incidence_to_json_obj(WeightedIncidence(prop.entries), quarter)
    half = Fraction(1, 2)
    entries = {
        (v, j): half
        for j in range(h.edge_count)
        for v in h.edges[j]
        if h.degrees[v] > 1
    }
    return incidence_to_json_obj(WeightedIncidence(entries), quarter)


def _cmd_spectrum(args, out) -> int:
    h = _load_graph(args.input)
    _emit(_spectral_obj(h, args.tol), args.format, out)
    return 0


def _cmd_classify(args, out) -> int:
    h = _load_graph(args.input)
    obj = _classification_obj(h)
    if args.verify:
        rep = verify_classification(h, tol=args.tol)
        obj["numeric"] = {
            "rho_limit": rep.rho_limit,
            "lower": rep.spectral.lower,
            "upper": rep.spectral.upper,
            "decisive": rep.decisive,
            "agree": rep.agree,
        }
    _emit(obj, args.format, out)
    return 0


def _cmd_check_cert(args, out) -> int:
    obj = json.loads(_read_input(args.cert))
    if args.graph:
        h = _load_graph(args.graph)
    elif "graph" in obj:
        h = Hypergraph.from_json_obj(obj["graph"])
    else:
        raise CertificateError("no hypergraph: pass --graph or bundle one in the certificate")
    alpha, b = incidence_from_json_obj(obj)
    claim_kind = args.claim or obj.get("claim", {}).get("kind")
    claim_consistent = obj.get("claim", {}).get("consistent", True)
    report = check_normal(h, b, alpha)
    consistent = check_consistent(h, b)
    result = {
        "alpha": str(alpha),
        "kind": report.kind,
        "consistent": consistent,
        "normal": report.is_normal,
        "subnormal": report.is_subnormal,
        "supernormal": report.is_supernormal,
        "rho_bound": rho_from_alpha(h.rank, alpha),
    }
    verified = True
    if claim_kind is not None:
        verified = report.kind == claim_kind and consistent == claim_consistent
        result["claim"] = {"kind": claim_kind, "consistent": claim_consistent}
        result["verified"] = verified
    _emit(result, args.format, out)
    return 0 if verified else REFUTED


def _make_family(args) -> Hypergraph:
    tag = args.family
    params = args.params
    if tag.startswith("smith2:"):
        sub = tag.split(":", 1)[1]
        return gen_smith2(sub, params[0] if params else None)
    fam = FamilyId(tag, tuple(params), args.rank)
    return fam.make()


def _cmd_gen(args, out) -> int:
    h = _make_family(args)
    _graph_out(h, args.format, out)
    return 0


def _cmd_reduce(args, out) -> int:
    h = _load_graph(args.input)
    _graph_out(h.reduce(), args.format, out)
    return 0


def _cmd_extend(args, out) -> int:
    h = _load_graph(args.input)
    _graph_out(h.extend(), args.format, out)
    return 0


def _cmd_contract(args, out) -> int:
    h = _load_graph(args.input)
    _graph_out(h.contract(args.edge), args.format, out)
    return 0


def _cmd_limit_table(args, out) -> int:
    r = args.rank
    limit = rho_r(r)
    rows = []
    for n in range(1, args.count + 1):
        res = spectral_radius(gen_path(r, n), tol=args.tol)
        bound = (1 + 2 / n + 1 / n**2) ** (-1.0 / r) * limit
        rows.append({"n": n, "rho": res.rho, "lower_bound": bound})
    obj = {"rank": r, "rho_limit": limit, "rows": rows}
    if args.format == "json":
        _emit(obj, "json", out)
    else:
        out.write(f"rho_{r} = {limit:.10f}\n")
        out.write(f"{'n':>4} {'rho(A_n)':>16} {'lower bound':>16}\n")
        for row in rows:
            out.write(f"{row['n']:>4} {row['rho']:>16.10f} {row['lower_bound']:>16.10f}\n")
    return 0


def _cmd_atlas(args, out) -> int:
    r = args.rank
    entries = []
    seen: set[bytes] = set()
    for verdict, fams in ((Verdict.BELOW, below_families(r, args.max_edges)),
                          (Verdict.EQUAL, equal_families(r, args.max_edges))):
        for family in fams:
            h = family.make()
            key = canonical_form(h)
            if key in seen:
                continue
            seen.add(key)
            entry = {
                "family": family.kind,
                "params": list(family.params),
                "label": family.label(),
                "edges": h.edge_count,
                "vertices": h.vertex_count,
                "verdict": verdict.value,
            }
            if verdict == Verdict.EQUAL:
                cert = _equal_certificate_obj(family)
                if cert is not None:
                    entry["certificate"] = cert
            entries.append(entry)
    entries.sort(key=lambda e: (e["edges"], e["family"], e["params"]))
    _emit({"rank": r, "rho_limit": rho_r(r), "entries": entries}, args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperrho",
        description="Spectral radii of uniform hypergraphs at the smallest limit point.",
    )
    default_tol = float(os.environ.get("HYPERRHO_TOL", "1e-10"))
    parser.add_argument("--tol", type=float, default=default_tol,
                        help="numeric tolerance (env HYPERRHO_TOL)")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0,
                        help="accepted for interface stability; all results are seed-independent")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="spectral radius with two-sided bounds")
    p.add_argument("input", help="hypergraph file (json or text), - for stdin")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("classify", help="Below/Equal/Above the limit value rho_r")
    p.add_argument("input")
    p.add_argument("--verify", action="store_true", help="cross-check against numerics")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check-cert", help="verify a weighted-incidence certificate")
    p.add_argument("cert", help="certificate JSON (may bundle graph and claim)")
    p.add_argument("--graph", help="hypergraph file when not bundled")
    p.add_argument("--claim", choices=("normal", "strictly-subnormal", "strictly-supernormal"))
    p.set_defaults(func=_cmd_check_cert)

    p = sub.add_parser("gen", help="generate a named family instance")
    p.add_argument("family",
                   help="A C S E F G H TildeD BD BDTilde EdgeStar, or smith2:<tag>")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-r", "--rank", type=int, default=3)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("reduce", help="drop one leaf per edge, lowering the rank")
    p.add_argument("input")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("extend", help="add one leaf per edge, raising the rank")
    p.add_argument("input")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("contract", help="contract a 2-bridge edge")
    p.add_argument("input")
    p.add_argument("--edge", type=int, required=True)
    p.set_defaults(func=_cmd_contract)

    p = sub.add_parser("limit-table", help="rho(A_n) against its lower bound")
    p.add_argument("-r", "--rank", type=int, default=3)
    p.add_argument("-N", "--count", type=int, default=20)
    p.set_defaults(func=_cmd_limit_table)

    p = sub.add_parser("atlas", help="all classified families up to an edge bound")
    p.add_argument("-r", "--rank", type=int, default=3)
    p.add_argument("--max-edges", type=int, default=12)
    p.set_defaults(func=_cmd_atlas)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (json.JSONDecodeError, CertificateError, InputParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except (ValueError, OSError, KeyError, IndexError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 = computed, 1 = domain or usage error, 2 = budget refusal.
Machine output (--format json) carries rationals as {"p": ..., "q": ...};
floating point appears only in human-readable text.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import avoidability, constructions, density, oracle
from .avoidability import (
    AbsenceProof,
    BelowThresholdError,
    RealizabilityWitness,
    certificate_document,
)
from .combinatorics import binomial
from .errors import BudgetExceededError
from .hypergraph import parse as parse_graph
from .hypergraph import serialize, spectrum


class CliUsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); budget refusals own that code
        raise CliUsageError(message)


def _fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator} (≈ {float(x):.4f})"


def _fraction_json(x: Fraction) -> dict:
    return {"p": x.numerator, "q": x.denominator}


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True))


def _set_text(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def _witness_doc(w) -> dict:
    if isinstance(w, RealizabilityWitness):
        return {"outcome": "witness", "kind": w.kind, "x": w.x, "h": w.h}
    assert isinstance(w, AbsenceProof)
    return {
        "outcome": "absent",
        "kind": w.kind,
        "failures": [avoidability._check_dict(c) for c in w.failures],
    }


def _cmd_avoid(args) -> int:
    cert = avoidability.absolutely_avoidable(args.m, args.f, args.r)
    if cert is not None:
        if args.format == "json":
            _emit_json(certificate_document(cert))
        else:
            print(f"pair: r={args.r} m={args.m} f={args.f}")
            print("conclusion: absolutely avoidable")
            print(f"case: {cert.case}")
            print(f"k_f: {cert.k_f}  k_fbar: {cert.k_fbar}")
            print("trace:")
            for c in cert.inequality_trace:
                print(f"  {c.render()}")
        return 0
    fbar = binomial(args.m, args.r) - args.f
    wa = avoidability.clique_plus_witness(args.m, args.f, args.r)
    wb = avoidability.clique_plus_witness(args.m, fbar, args.r)
    if args.format == "json":
        _emit_json(
            {
                "pair": {"r": args.r, "m": args.m, "f": args.f},
                "conclusion": "not-absolutely-avoidable",
                "checks": [
                    dict(_witness_doc(wa), target="f"),
                    dict(_witness_doc(wb), target="complement"),
                ],
                "trace": [],
            }
        )
    else:
        print(f"pair: r={args.r} m={args.m} f={args.f}")
        print("conclusion: not absolutely avoidable")
        for tag, w in (("f", wa), ("complement", wb)):
            if isinstance(w, RealizabilityWitness):
                print(f"realization ({tag}): {w.kind} with clique order {w.x} and {w.h} extra edges")
            else:
                print(f"realization ({tag}): none")
    return 0


def _cmd_theorem_main(args) -> int:
    result = avoidability.near_half_avoidable_pair(args.m, args.r)
    if args.format == "json":
        doc = certificate_document(result.certificate)
        doc["case"] = result.case
        doc["certified_f"] = result.f
        _emit_json(doc)
    else:
        print(f"certified: ({args.m},{result.f}), case {result.case}")
        print(f"pair: r={args.r} m={args.m} f={result.f}")
        print(f"k_f: {result.certificate.k_f}  k_fbar: {result.certificate.k_fbar}")
        print("trace:")
        for c in result.certificate.inequality_trace:
            print(f"  {c.render()}")
    return 0


def _cmd_classify(args) -> int:
    rows = []
    for m in range(args.r + 1, args.m_max + 1):
        cands = avoidability.positive_density_candidates(m, args.r, strict=args.strict)
        rows.append((m, sorted(cands)))
    if args.format == "json":
        _emit_json(
            {
                "r": args.r,
                "m_max": args.m_max,
                "rows": [{"m": m, "candidates": c} for m, c in rows],
                "survivors": [[m, f] for m, c in rows for f in c],
            }
        )
    else:
        for m, cands in rows:
            print(f"m={m}: {_set_text(cands)}")
    return 0


def _cmd_bounds(args) -> int:
    if args.bracket:
        lo, hi = density.turan_density_bounds(args.m, args.r)
        if args.format == "json":
            _emit_json(
                {
                    "m": args.m,
                    "r": args.r,
                    "lower": _fraction_json(lo),
                    "upper": _fraction_json(hi),
                }
            )
        else:
            print(f"clique Turan density bracket for m={args.m}, r={args.r}:")
            print(f"  lower: {_fraction_text(lo)}")
            print(f"  upper: {_fraction_text(hi)}")
        return 0
    if args.f is not None:
        b = density.density_upper_bound(args.m, args.f, args.r)
        if args.format == "json":
            _emit_json(
                {
                    "pair": {"r": args.r, "m": args.m, "f": args.f},
                    "bound": _fraction_json(b.bound),
                    "l": b.l_used,
                    "case": b.case,
                    "justification": b.justification,
                }
            )
        else:
            print(f"pair: r={args.r} m={args.m} f={args.f}")
            print(f"bound: {_fraction_text(b.bound)}")
            print(f"case: {b.case} (l={b.l_used})")
            print(f"justification: {b.justification}")
        return 0
    rows = density.density_bound_table(args.r)
    if args.format == "json":
        _emit_json(
            {
                "r": args.r,
                "rows": [
                    {
                        "condition": row.condition,
                        "bound": _fraction_json(row.bound),
                        "parts": row.parts,
                        "two_sided": row.two_sided,
                    }
                    for row in rows
                ],
            }
        )
    else:
        width = max(len(row.condition) for row in rows)
        for row in rows:
            print(f"{row.condition:<{width}}  {_fraction_text(row.bound)}")
    return 0


def _write_graph(args, g) -> None:
    text = serialize(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    if args.family == "turan":
        g = constructions.turan_graph(args.n, args.l, args.r)
    elif args.family == "blowup":
        g = constructions.iterated_blowup(constructions.BlowupSpec(args.base, args.depth))
    elif args.family == "sparse":
        config = constructions.SparseGenConfig(
            args.n, args.r, args.m, args.seed,
            target_f=args.target_f,
            density_constant=Fraction(args.constant) if args.constant else Fraction(1, 4),
        )
        g, log = constructions.random_sparse(config)
        print(
            json.dumps(
                {
                    "probability": log.probability,
                    "theoretical_target": log.theoretical_target,
                    "sampled_edges": log.sampled_edges,
                    "repairs": log.repairs,
                    "final_edges": log.final_edges,
                },
                sort_keys=True,
            ),
            file=sys.stderr,
        )
    elif args.family == "realize":
        if args.kind == "clique-plus-sparse":
            g = constructions.realize_clique_plus_sparse(
                args.n, args.e, args.r, args.m, seed=args.seed
            )
        else:
            g = constructions.realize_complement_sparse(
                args.n, args.e, args.r, args.m, seed=args.seed
            )
    else:  # pragma: no cover - argparse restricts choices
        raise CliUsageError(f"unknown construct family {args.family!r}")
    _write_graph(args, g)
    return 0


def _cmd_oracle(args) -> int:
    if args.mode == "arrows":
        verdict = oracle.pair_arrows(
            args.n, args.e, args.r, args.m, args.f, budget=args.budget, dedup=args.dedup
        )
        if args.format == "json":
            doc = {
                "query": {"n": args.n, "e": args.e, "r": args.r, "m": args.m, "f": args.f},
                "arrows": verdict.arrows,
                "graphs_examined": verdict.graphs_examined,
                "counterexample": (
                    serialize(verdict.counterexample) if verdict.counterexample else None
                ),
            }
            _emit_json(doc)
        else:
            print(f"query: n={args.n} e={args.e} r={args.r} m={args.m} f={args.f}")
            print(f"arrows: {'true' if verdict.arrows else 'false'}")
            print(f"graphs_examined: {verdict.graphs_examined}")
            if verdict.counterexample is not None:
                print("counterexample:")
                sys.stdout.write(serialize(verdict.counterexample))
        return 0
    if args.mode == "sizes":
        sizes = oracle.non_arrowing_sizes(args.n, args.r, args.m, args.f, budget=args.budget)
        arrowing = sorted(set(range(binomial(args.n, args.r) + 1)) - sizes)
        if args.format == "json":
            _emit_json(
                {
                    "n": args.n,
                    "r": args.r,
                    "m": args.m,
                    "f": args.f,
                    "non_arrowing": sorted(sizes),
                    "arrowing": arrowing,
                }
            )
        else:
            print(f"non-arrowing sizes: {_set_text(sizes)}")
            print(f"arrowing sizes: {_set_text(arrowing)}")
        return 0
    if args.mode == "blowup-verify":
        report = oracle.verify_blowup_claims(args.depth)
        if args.format == "json":
            _emit_json(
                {
                    "depth": report.depth,
                    "n": report.n,
                    "edge_count": report.edge_count,
                    "total_slots": report.total_slots,
                    "density": _fraction_json(report.density),
                    "max_six_subset_edges": report.max_six_subset_edges,
                    "complement_min_six": report.complement_min_six,
                    "low_interval": list(report.low_interval) if report.low_interval else None,
                    "high_interval": list(report.high_interval) if report.high_interval else None,
                    "covered_sizes": report.covered_sizes,
                    "subsets_examined": report.subsets_examined,
                    "note": report.note,
                }
            )
        else:
            print(f"depth: {report.depth}  n: {report.n}  edges: {report.edge_count}")
            print(f"density: {_fraction_text(report.density)}")
            print(f"max edges in a 6-subset: {report.max_six_subset_edges}")
            print(f"min edges in a complement 6-subset: {report.complement_min_six}")
            print(f"non-arrowing size intervals for (6,10): {report.low_interval} and {report.high_interval}")
            print(f"sizes covered: {report.covered_sizes} of {report.total_slots + 1}")
            print(f"note: {report.note}")
        return 0
    raise CliUsageError(f"unknown oracle mode {args.mode!r}")  # pragma: no cover


def _cmd_spectrum(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    sp = spectrum(g, args.m)
    if args.format == "json":
        _emit_json(
            {
                "r": g.r,
                "n": g.n,
                "m": args.m,
                "counts": {str(k): v for k, v in sorted(sp.counts.items())},
            }
        )
    else:
        print(f"spectrum of m={args.m} subsets (r={g.r}, n={g.n}):")
        for k in sorted(sp.counts):
            print(f"  {k}: {sp.counts[k]}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="pairset", description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--jobs", type=int, default=1, help="upper bound on worker parallelism")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("avoid", help="certify a pair absolutely avoidable")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.set_defaults(func=_cmd_avoid)

    p = sub.add_parser("theorem-main", help="certify an avoidable pair near half the maximum size")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_theorem_main)

    p = sub.add_parser("classify", help="sweep the positive-density candidate filter")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="use the open residual window")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bounds", help="density upper bounds")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--f", type=int, default=None)
    p.add_argument("--bracket", action="store_true", help="clique Turan density bracket instead")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("construct", help="build a graph family member and write it out")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("turan")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--out")
    q.set_defaults(func=_cmd_construct)
    q = fam.add_parser("blowup")
    q.add_argument(
        "--base",
        choices=(constructions.BASE_SINGLE_EDGE, constructions.BASE_TIGHT_CYCLE),
        default=constructions.BASE_SINGLE_EDGE,
    )
    q.add_argument("--depth", type=int, required=True)
    q.add_argument("--out")
    q.set_defaults(func=_cmd_construct)
    q = fam.add_parser("sparse")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--target-f", dest="target_f", type=int, default=None)
    q.add_argument("--constant", help="density constant as p/q")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_construct)
    q = fam.add_parser("realize")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--kind", choices=("clique-plus-sparse", "complement-sparse"),
                   default="clique-plus-sparse")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out")
    q.set_defaults(func=_cmd_construct)

    p = sub.add_parser("oracle", help="exhaustive arrowing decisions")
    modes = p.add_subparsers(dest="mode", required=True)
    q = modes.add_parser("arrows")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--f", type=int, required=True)
    q.add_argument("--dedup", action="store_true")
    q.add_argument("--budget", type=int, default=None)
    q.set_defaults(func=_cmd_oracle)
    q = modes.add_parser("sizes")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--f", type=int, required=True)
    q.add_argument("--budget", type=int, default=None)
    q.set_defaults(func=_cmd_oracle)
    q = modes.add_parser("blowup-verify")
    q.add_argument("--depth", type=int, required=True)
    q.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("spectrum", help="induced-size histogram of a graph file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs < 1:
            raise CliUsageError("--jobs must be >= 1")
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return 2
    except CliUsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        print("run 'pairset --help' for usage", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

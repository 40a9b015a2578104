"""Batch command-line front-end.

Subcommands: validate, invariants, classify, degrees, iso.  Each reads
polytope records from a fixture file (canonical text format), prints an
aligned human-readable report to stdout, and optionally writes a JSON
report (--output) with a versioned schema.  With --golden the JSON report
is compared against a reference file; a mismatch exits with status 1.
Usage or input-parse errors exit with status 2.
"""

import argparse
import json
import sys

from . import polyring as pr
from .polytope import (load_fixture_file, validate_smooth_fano, ParseError,
                       ValidationError)
from .cohomology import (build_presentation, degree_anticanonical,
                         degree_via_ring, chern_c1)
from .invariants import (kve_integer_bounded, kve_mod_p,
                         maximal_basis_number, fingerprint,
                         HEURISTIC_INFINITE)
from .equivalence import classify, SIGN_EQUIV, UNIMODULAR_EQUIV, \
    FINGERPRINT_EQUAL
from .ringiso import (find_ring_isos_bounded, annotate, degree_gate)

SCHEMA = 1


def _parse_ids(spec):
    return [int(t) for t in spec.replace(",", " ").split()]


def _load(args):
    try:
        records = load_fixture_file(args.input)
    except (ParseError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)
    ids = None
    if getattr(args, "id", None) is not None:
        ids = [args.id]
    elif getattr(args, "ids", None):
        ids = _parse_ids(args.ids)
    if ids is not None:
        by_id = {P.id: P for P in records}
        missing = [i for i in ids if i not in by_id]
        if missing:
            print(f"error: unknown id(s) {missing}; available: "
                  f"{sorted(by_id)}", file=sys.stderr)
            sys.exit(2)
        records = [by_id[i] for i in ids]
    return records


def _sve_str(report, names):
    if report.completeness == HEURISTIC_INFINITE:
        return "infinite"
    elems = [pr.poly_str(pr.Poly.linear(len(v), list(v)), names)
             for v in report.solutions]
    return "{" + ", ".join(elems) + "}" if elems else "{}"


def _finish(args, report, text_lines):
    print("\n".join(text_lines))
    payload = json.dumps(report, sort_keys=True, indent=2,
                         default=str) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
    if args.golden:
        try:
            with open(args.golden) as fh:
                golden = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            sys.exit(2)
        if golden != payload:
            print("golden mismatch", file=sys.stderr)
            sys.exit(1)
    return 0


def cmd_validate(args):
    records = _load(args)
    reports = [validate_smooth_fano(P) for P in records]
    lines = [f"{'id':>5}  {'dim':>3}  {'V':>3}  {'F':>3}  status"]
    for r in reports:
        status = "ok" if r["ok"] else "INVALID"
        lines.append(f"{r['id']:>5}  {r['dim']:>3}  {r['vertices']:>3}  "
                     f"{r['facets']:>3}  {status}")
    report = {"schema": SCHEMA, "command": "validate", "records": reports}
    rc = _finish(args, report, lines)
    if any(not r["ok"] for r in reports):
        return 1
    return rc


def cmd_invariants(args):
    records = _load(args)
    B = args.bound
    primes = args.mod
    lines = []
    recs = []
    for P in records:
        pres = build_presentation(P)
        names = pres.names
        sve = kve_integer_bounded(pres, 2, B=B)
        sve_entry = {"ring": "Z", "k": 2,
                     "completeness": sve.completeness,
                     "elements": [list(v) for v in sve.solutions]}
        mods = []
        for p in primes:
            for k in (2, 3, 4):
                rep = kve_mod_p(pres, k, p)
                mods.append({"ring": f"Z/{p}", "k": k,
                             "count": rep.count(),
                             "span_dim": rep.span_dim,
                             "is_subspace": rep.is_subspace,
                             "elements": [list(v) for v in rep.solutions]})
        lo, hi = maximal_basis_number(pres, sve_report=sve, B=B)
        degree = degree_anticanonical(P)
        recs.append({"id": P.id, "presentation": repr(pres),
                     "groebner": [pr.poly_str(g, names)
                                  for g in pres.gb().polys],
                     "sve": sve_entry, "mod": mods,
                     "mbn": [lo, hi], "degree": degree})
        lines.append(f"id {P.id}: {pres!r}")
        lines.append(f"  s.v.e. (B={B}): {_sve_str(sve, names)}")
        lines.append(f"  mbn: [{lo}, {hi}]   degree: {degree}")
    report = {"schema": SCHEMA, "command": "invariants", "bound": B,
              "primes": primes, "records": recs}
    return _finish(args, report, lines)


def cmd_classify(args):
    records = _load(args)
    result = classify(records, relation=args.relation, B=args.bound)
    lines = [f"relation: {result['relation']}",
             f"classes: {len(result['classes'])}"]
    for cls in result["classes"]:
        lines.append("  {" + ", ".join(str(i) for i in cls) + "}")
    if result["anomalies"]:
        lines.append("anomalies (fingerprint-equal, not merged): "
                     + ", ".join(str(p) for p in result["anomalies"]))
    report = {"schema": SCHEMA, "command": "classify",
              "relation": result["relation"],
              "classes": result["classes"],
              "anomalies": [list(p) for p in result["anomalies"]],
              "witnesses": {f"{a},{b}": w.as_report()
                            for (a, b), w in
                            sorted(result["witnesses"].items())}}
    return _finish(args, report, lines)


def cmd_degrees(args):
    records = _load(args)
    lines = [f"{'id':>5}  degree"]
    recs = []
    for P in records:
        deg = degree_anticanonical(P)
        ring_deg = degree_via_ring(build_presentation(P))
        agree = deg == ring_deg
        recs.append({"id": P.id, "degree": deg, "degree_via_ring": ring_deg,
                     "agree": agree})
        flag = "" if agree else f"  MISMATCH (ring route: {ring_deg})"
        lines.append(f"{P.id:>5}  {deg}{flag}")
    report = {"schema": SCHEMA, "command": "degrees", "records": recs}
    rc = _finish(args, report, lines)
    if any(not r["agree"] for r in recs):
        return 1
    return rc


def cmd_iso(args):
    records = _load(args)
    if len(records) != 2:
        print("error: iso needs exactly two ids (--ids a,b)",
              file=sys.stderr)
        sys.exit(2)
    P1, P2 = records
    gate = degree_gate(P1, P2)
    presA, presB = build_presentation(P1), build_presentation(P2)
    lines = [f"pair ({P1.id}, {P2.id}): degree gate "
             f"{'passes' if gate else 'fails'} "
             f"({degree_anticanonical(P1)} vs {degree_anticanonical(P2)})"]
    wits = []
    if presA.n == presB.n:
        found = find_ring_isos_bounded(presA, presB, B=args.bound)
        for w in found:
            annotate(w, presA, presB)
            wits.append(w.as_report())
            lines.append(f"  iso {w.L}  c1={w.c1_preserving}  "
                         f"pontryagin={w.pontryagin_preserving}")
        if not found:
            lines.append(f"  no ring isomorphism within bound {args.bound}")
    else:
        lines.append("  generator counts differ: rings not isomorphic")
    report = {"schema": SCHEMA, "command": "iso",
              "pair": [P1.id, P2.id], "degree_gate": gate,
              "bound": args.bound, "isomorphisms": wits}
    return _finish(args, report, lines)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="toricfano",
        description="Cohomology invariants and classification of toric "
                    "Fano manifolds from smooth Fano polytopes.")
    sub = ap.add_subparsers(dest="command", required=True)
    handlers = {"validate": cmd_validate, "invariants": cmd_invariants,
                "classify": cmd_classify, "degrees": cmd_degrees,
                "iso": cmd_iso}
    for name, fn in handlers.items():
        sp = sub.add_parser(name)
        sp.add_argument("--input", required=True,
                        help="fixture file in the canonical text format")
        sp.add_argument("--output", help="write JSON report here")
        sp.add_argument("--id", type=int, help="restrict to one record id")
        sp.add_argument("--ids", help="comma-separated record ids")
        sp.add_argument("--bound", type=int, default=5 if name != "iso" else 2,
                        help="search bound B")
        sp.add_argument("--mod", type=int, nargs="*", default=[2, 3],
                        choices=[2, 3, 5, 7],
                        help="primes for mod-p invariants")
        sp.add_argument("--relation", default=SIGN_EQUIV,
                        choices=[SIGN_EQUIV, UNIMODULAR_EQUIV,
                                 FINGERPRINT_EQUAL])
        sp.add_argument("--golden",
                        help="reference JSON; mismatch exits with status 1")
        sp.add_argument("--jobs", type=int, default=1,
                        help="worker count (reports are assembled in "
                             "deterministic id order regardless)")
        sp.set_defaults(handler=fn)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())

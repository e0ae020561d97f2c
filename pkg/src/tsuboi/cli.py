"""Command line front end.

Subcommands: norm, dist, space, witness, relsimple, chartable, density,
verify.  Every machine-readable output carries a run manifest (command
line, seed, budgets, version, wall time).  Exit codes: 0 success, 1 usage,
2 budget-exhausted result left uncertified, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from math import inf, log

from . import __version__
from .characters import chartable_rows, verify_orthogonality
from .groups import (GroupError, group_from_name, maximal_normal_subgroups,
                     relative_simplicity_report)
from .lemmas import (ConstructionError, LEMMA_NAMES, ParityObstruction,
                     gamma_from_iota, iota_from_gamma_pair,
                     iota_from_gamma_triple, iota_from_sigma, n4_identity,
                     sigma_from_iota, three_conjugates_iota)
from .norms import Budget, BudgetExceeded, INFINITE, q as q_norm, tsuboi_d
from .perm import parse_cycles
from .space import (density_certificate, distance_matrix, enumerate_points,
                    qi_report)
from .witness import verify_witness_json

OK, USAGE, UNCERTIFIED, VERIFY_FAIL = 0, 1, 2, 3
DEFAULT_SEED = 0


class UsageError(Exception):
    """Bad flag combination caught after argparse."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE)


def _ambient(text: str):
    if text.lower() in ("infty", "inf", "infinity"):
        return INFINITE
    n = int(text)
    if n < 1:
        raise ValueError(f"ambient must be positive, got {n}")
    return n


def build_parser() -> _Parser:
    p = _Parser(prog="tsuboi", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="recorded in the manifest; the engines are "
                             "deterministic (default %(default)s)")
    common.add_argument("--threads", type=int, default=1,
                        help="parallel workers where supported")
    common.add_argument("--budget-depth", type=int, default=Budget().depth)
    common.add_argument("--budget-frontier", type=int,
                        default=Budget().frontier)
    common.add_argument("--budget-seconds", type=float,
                        default=Budget().seconds)
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("norm", parents=[common],
                       help="q over the class of --factor with target "
                            "--target")
    s.add_argument("--factor", required=True, metavar="CYCLES")
    s.add_argument("--target", required=True, metavar="CYCLES")
    s.add_argument("--ambient", default="infty", metavar="N|infty")
    s.add_argument("--backend", default="auto",
                   choices=["auto", "brute", "chars", "infty"])
    s.add_argument("--witness", metavar="OUT.json",
                   help="write the factorization witness")
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("dist", parents=[common],
                       help="symmetrized distance between two classes")
    s.add_argument("--f", required=True, metavar="CYCLES")
    s.add_argument("--g", required=True, metavar="CYCLES")
    s.add_argument("--ambient", default="infty", metavar="N|infty")
    s.add_argument("--json", metavar="OUT.json")
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("space", parents=[common],
                       help="distance matrix over all odd types up to a "
                            "support bound")
    s.add_argument("--max-support", type=int, required=True, metavar="B")
    s.add_argument("--out", required=True, metavar="OUT.csv")
    s.add_argument("--json", metavar="OUT.json")
    s.add_argument("--qi", metavar="OUT.json",
                   help="also write the half-line comparison report")
    s.add_argument("--ambient", default="infty", metavar="N|infty")
    s.add_argument("--backend", default="auto",
                   choices=["auto", "brute", "chars", "infty"])
    s.set_defaults(func=cmd_space)

    s = sub.add_parser("witness", parents=[common],
                       help="build and verify a constructive lemma witness")
    s.add_argument("lemma", choices=list(LEMMA_NAMES))
    s.add_argument("--l", type=int, help="target index (three-conjugates)")
    s.add_argument("--k", type=int, help="factor index")
    s.add_argument("--n", type=int, help="cycle length")
    s.add_argument("--sigma", metavar="CYCLES",
                   help="permutation input for the sigma lemmas")
    s.add_argument("--out", metavar="OUT.json")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("relsimple", parents=[common],
                       help="maximum normal subgroup and relative "
                            "simplicity of a finite group")
    s.add_argument("--group", required=True,
                   metavar="S4|A5|C6|D8|C2xC4|@file")
    s.add_argument("--json", metavar="OUT.json")
    s.set_defaults(func=cmd_relsimple)

    s = sub.add_parser("chartable", parents=[common],
                       help="exact character table of S_n as CSV")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", required=True, metavar="OUT.csv")
    s.set_defaults(func=cmd_chartable)

    s = sub.add_parser("density", parents=[common],
                       help="coarse-density certificates for all odd types "
                            "up to a support bound")
    s.add_argument("--max-support", type=int, required=True, metavar="B")
    s.add_argument("--out", required=True, metavar="DIR")
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("verify", parents=[common],
                       help="re-verify a witness or certificate file by "
                            "permutation arithmetic alone")
    s.add_argument("file", metavar="FILE.json")
    s.set_defaults(func=cmd_verify)
    return p


def _budget(args) -> Budget:
    return Budget(depth=args.budget_depth, frontier=args.budget_frontier,
                  seconds=args.budget_seconds)


def _manifest(args, t0: float) -> dict:
    return {
        "command": "tsuboi " + " ".join(args.raw_argv),
        "seed": args.seed,
        "threads": args.threads,
        "budget": {"depth": args.budget_depth,
                   "frontier": args.budget_frontier,
                   "seconds": args.budget_seconds},
        "version": __version__,
        "wall_time_s": round(time.monotonic() - t0, 6),
    }


def _write_json(path: str, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _jnum(v):
    return "inf" if v == inf else v


# ---------------------------------------------------------------------------
# subcommands

def cmd_norm(args, t0: float) -> int:
    x = parse_cycles(args.factor)
    y = parse_cycles(args.target)
    ambient = _ambient(args.ambient)
    r = q_norm(x, y, ambient=ambient, backend=args.backend,
               budget=_budget(args))
    print(r.describe())
    if args.witness:
        if r.witness is None:
            print(f"no witness available for this result; "
                  f"{args.witness} not written")
        else:
            if not r.witness.verify():
                print("witness failed re-verification", file=sys.stderr)
                return VERIFY_FAIL
            doc = {"query": {"factor": args.factor, "target": args.target,
                             "ambient": _jnum(ambient),
                             "backend": args.backend},
                   "q_lower": _jnum(r.lower), "q_upper": _jnum(r.upper),
                   "certified": r.certified,
                   "witness": r.witness.to_json_dict(),
                   "manifest": _manifest(args, t0)}
            _write_json(args.witness, doc)
            print(f"witness written to {args.witness}")
    return OK if r.certified else UNCERTIFIED


def cmd_dist(args, t0: float) -> int:
    f = parse_cycles(args.f)
    g = parse_cycles(args.g)
    ambient = _ambient(args.ambient)
    d = tsuboi_d(f, g, ambient=ambient, budget=_budget(args))
    if d.certified:
        v = d.q_max
        if v == inf:
            print("d = infinity (q_max = infinity, certified)")
        else:
            print(f"d = log {int(v)} = {log(v):.6f} (q_max = {int(v)}, "
                  f"certified)")
    else:
        lo, hi = d.q_max_lower, d.q_max_upper
        hi_s = "inf" if hi == inf else str(int(hi))
        hi_log = "inf" if hi == inf else f"{log(hi):.6f}"
        print(f"d in [log {int(lo)}, log {hi_s}] = [{log(lo):.6f}, {hi_log}] "
              f"(q_max in [{int(lo)}, {hi_s}], uncertified)")
    if args.json:
        doc = {"f": args.f, "g": args.g, "ambient": _jnum(ambient),
               "q_max_lower": _jnum(d.q_max_lower),
               "q_max_upper": _jnum(d.q_max_upper),
               "certified": d.certified,
               "q_fg": {"lower": _jnum(d.q_fg.lower),
                        "upper": _jnum(d.q_fg.upper)},
               "q_gf": {"lower": _jnum(d.q_gf.lower),
                        "upper": _jnum(d.q_gf.upper)},
               "manifest": _manifest(args, t0)}
        _write_json(args.json, doc)
    return OK if d.certified else UNCERTIFIED


def cmd_space(args, t0: float) -> int:
    pts = enumerate_points(args.max_support)
    ambient = _ambient(args.ambient)
    dm = distance_matrix(pts, backend=args.backend, ambient=ambient,
                         budget=_budget(args), threads=args.threads)
    inv = dm.check_invariants()
    n = len(pts)
    certified = sum(1 for i in range(n) for j in range(n)
                    if dm.entry(i, j).certified)
    manifest = _manifest(args, t0)
    dm.to_csv(args.out, header_comment="manifest: " +
              json.dumps(manifest, separators=(",", ":")))
    print(f"{n} points, {certified}/{n * n} entries certified, "
          f"matrix written to {args.out}")
    print("invariants: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}"
                                     for k, v in inv.items()))
    if args.json:
        dm.to_json(args.json, extra={"manifest": manifest})
    if args.qi:
        rep = qi_report(pts, budget=_budget(args))
        rep["manifest"] = manifest
        _write_json(args.qi, rep)
        print(f"half-line report written to {args.qi}")
    return OK if all(inv.values()) else VERIFY_FAIL


def _need(args, names: list[str]) -> list:
    vals = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"witness {args.lemma} requires --{name}")
        vals.append(v)
    return vals


def cmd_witness(args, t0: float) -> int:
    lemma = args.lemma
    try:
        if lemma == "three-conjugates":
            l, k = _need(args, ["l", "k"])
            lw = three_conjugates_iota(l, k)
        elif lemma == "iota-from-gamma-pair":
            (n,) = _need(args, ["n"])
            lw = iota_from_gamma_pair(n, args.k)
        elif lemma == "iota-from-gamma-triple":
            (n,) = _need(args, ["n"])
            lw = iota_from_gamma_triple(n)
        elif lemma == "iota-from-sigma":
            (sig,) = _need(args, ["sigma"])
            lw = iota_from_sigma(parse_cycles(sig))
        elif lemma == "gamma-from-iota":
            (n,) = _need(args, ["n"])
            lw = gamma_from_iota(n)
        elif lemma == "sigma-from-iota":
            (sig,) = _need(args, ["sigma"])
            lw = sigma_from_iota(parse_cycles(sig))
        else:
            rep = n4_identity()
            verified = rep["witness"].verify()
            doc = {"lemma": "n4-identity",
                   "identity": rep["identity"],
                   "as_written_holds": rep["as_written_holds"],
                   "reversed_holds": rep["reversed_holds"],
                   "validated_order": rep["validated_order"],
                   "witness": rep["witness"].to_json_dict(),
                   "verified": verified,
                   "manifest": _manifest(args, t0)}
            rc = _emit_witness(doc, args)
            return rc if verified else VERIFY_FAIL
    except ParityObstruction as e:
        doc = {"lemma": lemma, "constructible": False,
               "obstruction": str(e), "manifest": _manifest(args, t0)}
        return _emit_witness(doc, args)
    doc = lw.to_json_dict()
    doc["verified"] = lw.verify()
    doc["manifest"] = _manifest(args, t0)
    if not doc["verified"]:
        json.dump(doc, sys.stdout, indent=2)
        print()
        return VERIFY_FAIL
    return _emit_witness(doc, args)


def _emit_witness(doc: dict, args) -> int:
    if args.out:
        _write_json(args.out, doc)
        print(f"witness written to {args.out}")
    else:
        json.dump(doc, sys.stdout, indent=2)
        print()
    return OK


def _structure_name(G, sub) -> str:
    if any(G.element_order(i) == sub.order for i in sub.elements):
        return f"C{sub.order}"
    return f"order {sub.order}"


def cmd_relsimple(args, t0: float) -> int:
    G = group_from_name(args.group)
    rep = relative_simplicity_report(G)
    if rep["relatively_simple"]:
        mn = rep["maximum_normal_subgroup"]
        print(f"relatively simple; maximum normal subgroup of order "
              f"{mn['order']} (index {mn['index']}); "
              f"uniform k = {rep['uniform_k']}")
    else:
        names = ", ".join(_structure_name(G, s)
                          for s in maximal_normal_subgroups(G))
        print(f"not relatively simple; maximal normal subgroups: {names}")
    if args.json:
        rep["manifest"] = _manifest(args, t0)
        _write_json(args.json, rep)
    return OK


def cmd_chartable(args, t0: float) -> int:
    rows = chartable_rows(args.n)
    try:
        verify_orthogonality(args.n)
        ok = True
    except ArithmeticError as e:
        print(f"orthogonality check failed: {e}", file=sys.stderr)
        ok = False
    manifest = _manifest(args, t0)
    with open(args.out, "w") as fh:
        fh.write("# manifest: " + json.dumps(manifest, separators=(",", ":"))
                 + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")
    print(f"S_{args.n}: {len(rows) - 2} irreducibles, "
          f"orthogonality {'verified' if ok else 'FAILED'}, "
          f"table written to {args.out}")
    return OK if ok else VERIFY_FAIL


def cmd_density(args, t0: float) -> int:
    os.makedirs(args.out, exist_ok=True)
    pts = enumerate_points(args.max_support)
    all_ok = True
    for p in pts:
        cert = density_certificate(p, budget=_budget(args))
        ok = cert.verify()
        all_ok &= ok
        doc = cert.to_json_dict()
        doc["manifest"] = _manifest(args, t0)
        path = os.path.join(args.out, f"cert_{p.label}.json")
        _write_json(path, doc)
        r = cert.radius_bound
        print(f"{p.label}: k0={cert.k0} k1={cert.k1} "
              f"skeleton=3^{cert.nearest_skeleton} "
              f"radius<={r:.6f} {'verified' if ok else 'FAILED'}")
    print(f"{len(pts)} certificates written to {args.out}/")
    return OK if all_ok else VERIFY_FAIL


def cmd_verify(args, t0: float) -> int:
    with open(args.file) as fh:
        doc = json.load(fh)
    checks: list[tuple[str, bool, str]] = []
    if "chain" in doc or "snap" in doc:
        for section in ("chain", "snap"):
            for i, link in enumerate(doc.get(section, [])):
                ok, msg = verify_witness_json(link)
                ok = ok and link.get("q", 0) <= link.get("bound", 0)
                checks.append((f"{section}[{i}] {link.get('src')} -> "
                               f"{link.get('dst')}", ok, msg))
    elif "witness" in doc or "factors" in doc:
        ok, msg = verify_witness_json(doc)
        checks.append(("witness", ok, msg))
    else:
        print(f"error: {args.file} contains no witness material",
              file=sys.stderr)
        return USAGE
    bad = [c for c in checks if not c[1]]
    for name, ok, msg in checks:
        print(f"{name}: {'ok' if ok else 'FAIL'} ({msg})")
    print(f"verified: {'true' if not bad else 'false'} "
          f"({len(checks) - len(bad)}/{len(checks)} checks)")
    return OK if not bad else VERIFY_FAIL


def main(argv: list[str] | None = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(raw)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE
    args.raw_argv = raw
    t0 = time.monotonic()
    try:
        return args.func(args, t0)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except (ValueError, GroupError, ConstructionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return UNCERTIFIED


if __name__ == "__main__":
    sys.exit(main())

"""
Command line front end.

    lenslab classify N [S] [--format pretty|json|tsv] [--mode paper-faithful|strict]
    lenslab table --n-max N [--format ...] [--mode ...] [--jobs J]
    lenslab d P Q [--index I]
    lenslab cw lens P Q | lenslab cw seifert B1/A1 B2/A2 ...
    lenslab dedekind Q P [--direct]
    lenslab linkform P Q | lenslab linkform P Q1 Q2
    lenslab cone FILE [--check | --rank | --N COSET]

Exit status: 0 on success, 1 when an internal invariant breaks, 2 for usage
and domain errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import conemodel, exactmath, lens, obstruct, seifert
from .exactmath import DomainError, fmt

FORMATS = ("pretty", "json", "tsv")


def _dumps(x) -> str:
    return json.dumps(x, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# -- verdict rendering ----------------------------------------------------------

def verdict_pretty(d: dict) -> str:
    head = f"({d['n']}, {d['s']})  {d['verdict']}  [{d['mode']}]"
    if "query" in d:
        head += f"  from {tuple(d['query'])}"
    lines = [head]
    if d.get("construction"):
        lines.append("  construction " + _dumps(d["construction"]))
    for c in d["candidates"]:
        k = "-" if c["k"] is None else c["k"]
        m = "-" if c["m"] is None else c["m"]
        status = "survives" if c["survives"] else "excluded"
        lines.append(f"  route {c['tag']} k={k} m={m} s={c['s_signed']} {status} "
                     + _dumps(c["passing"]))
        for cert in c["certificates"]:
            lines.append(f"      {cert['kind']} " + _dumps(cert["witness"]))
    for cert in d["certificates"]:
        lines.append(f"  pair {cert['kind']} " + _dumps(cert["witness"]))
    return "\n".join(lines)


def parse_verdict_pretty(text: str) -> dict:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0]
    pair, rest = head.split(")", 1)
    n, s = (int(x) for x in pair.lstrip("(").split(","))
    parts = rest.split()
    d = {"n": n, "s": s, "verdict": parts[0], "mode": parts[1].strip("[]"),
         "candidates": [], "certificates": [], "construction": None}
    if "from" in parts:
        q = rest.split("from", 1)[1].strip().strip("()")
        d["query"] = [int(x) for x in q.split(",")]
    for ln in lines[1:]:
        body = ln.strip()
        if ln.startswith("      "):
            kind, wit = body.split(" ", 1)
            d["candidates"][-1]["certificates"].append({"kind": kind, "witness": json.loads(wit)})
        elif body.startswith("construction "):
            d["construction"] = json.loads(body.split(" ", 1)[1])
        elif body.startswith("route "):
            _, tag, k, m, s_, status, passing = body.split(" ", 6)
            val = lambda t: None if t.split("=")[1] == "-" else int(t.split("=")[1])
            d["candidates"].append({
                "tag": tag, "k": val(k), "m": val(m), "s_signed": int(s_.split("=")[1]),
                "survives": status == "survives", "passing": json.loads(passing),
                "certificates": []})
        elif body.startswith("pair "):
            _, kind, wit = body.split(" ", 2)
            d["certificates"].append({"kind": kind, "witness": json.loads(wit)})
        else:
            raise ValueError(f"unrecognized line {ln!r}")
    return d


TSV_COLUMNS = ("n", "s", "verdict", "mode", "query", "construction", "row", "tag", "k", "m",
               "s_signed", "survives", "passing", "certificates")


def verdict_tsv_rows(d: dict) -> list:
    query = ",".join(str(x) for x in d["query"]) if "query" in d else "-"
    common = [str(d["n"]), str(d["s"]), d["verdict"], d["mode"], query,
              _dumps(d["construction"]) if d.get("construction") else "-"]
    rows = []
    for c in d["candidates"]:
        rows.append(common + ["route", c["tag"], "-" if c["k"] is None else str(c["k"]),
                              "-" if c["m"] is None else str(c["m"]), str(c["s_signed"]),
                              "yes" if c["survives"] else "no", _dumps(c["passing"]),
                              _dumps(c["certificates"])])
    if d["certificates"]:
        rows.append(common + ["pair", "-", "-", "-", "-", "no", "{}", _dumps(d["certificates"])])
    if not rows:
        rows.append(common + ["none", "-", "-", "-", "-", "no", "{}", "[]"])
    return ["\t".join(r) for r in rows]


def verdict_tsv(d: dict, header: bool = True) -> str:
    rows = verdict_tsv_rows(d)
    if header:
        rows.insert(0, "\t".join(TSV_COLUMNS))
    return "\n".join(rows)


def parse_verdicts_tsv(text: str) -> list:
    out = {}
    order = []
    for ln in text.splitlines():
        if not ln or ln.startswith("#") or ln.startswith("n\t"):
            continue
        f = dict(zip(TSV_COLUMNS, ln.split("\t")))
        key = (int(f["n"]), int(f["s"]))
        if key not in out:
            out[key] = {"n": key[0], "s": key[1], "verdict": f["verdict"], "mode": f["mode"],
                        "candidates": [], "certificates": [],
                        "construction": None if f["construction"] == "-" else json.loads(f["construction"])}
            if f["query"] != "-":
                out[key]["query"] = [int(x) for x in f["query"].split(",")]
            order.append(key)
        d = out[key]
        if f["row"] == "route":
            d["candidates"].append({
                "tag": f["tag"], "k": None if f["k"] == "-" else int(f["k"]),
                "m": None if f["m"] == "-" else int(f["m"]), "s_signed": int(f["s_signed"]),
                "survives": f["survives"] == "yes", "passing": json.loads(f["passing"]),
                "certificates": json.loads(f["certificates"])})
        elif f["row"] == "pair":
            d["certificates"] = json.loads(f["certificates"])
    return [out[k] for k in order]


def render_verdicts(dicts: list, form: str) -> str:
    if form == "json":
        return json.dumps(dicts[0] if len(dicts) == 1 else dicts, indent=2, ensure_ascii=False)
    if form == "tsv":
        rows = ["\t".join(TSV_COLUMNS)]
        for d in dicts:
            rows.extend(verdict_tsv_rows(d))
        return "\n".join(rows)
    return "\n\n".join(verdict_pretty(d) for d in dicts)


# -- commands -------------------------------------------------------------------

def cmd_classify(args) -> int:
    n = args.n
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if args.s is not None:
        verdicts = [obstruct.classify(n, args.s, args.mode)]
    else:
        verdicts = [obstruct.classify(n, s, args.mode) for s in range(n, -n - 1, -1) if s]
    print(render_verdicts([v.to_dict() for v in verdicts], args.format))
    return 0


def _table_line(v) -> list:
    cons = v.construction["name"] if v.construction else "-"
    alive = ",".join(f"{c.tag}" + ("" if c.k is None else f"(k={c.k},m={c.m})")
                     for c in v.candidates if c.survives) or "-"
    kinds = sorted({c.kind for c in v.all_certificates()})
    return [str(v.n), str(v.s), v.verdict, cons, alive, ",".join(kinds) or "-"]


def cmd_table(args) -> int:
    verdicts = obstruct.table(args.n_max, args.mode, args.jobs)
    summ = obstruct.summarize(verdicts)
    if args.format == "json":
        print(json.dumps({"mode": args.mode, "n_max": args.n_max,
                          "rows": [v.to_dict() for v in verdicts], "summary": summ},
                         indent=2, ensure_ascii=False))
        return 0
    lines = [_table_line(v) for v in verdicts]
    c = summ["counts"]
    tail = [f"Realized {c['Realized']}", f"Unresolved {c['Unresolved']}",
            f"Obstructed {c['Obstructed']}",
            "unresolved " + (" ".join(f"({n},{s})" for n, s in summ["unresolved"]) or "-"),
            "chiral slice " + ",".join(str(n) for n in summ["chiral_slice"])]
    if args.format == "tsv":
        print("\t".join(("n", "s", "verdict", "construction", "surviving", "certificate_kinds")))
        for ln in lines:
            print("\t".join(ln))
        for t in tail:
            print("# " + t)
        return 0
    widths = [max(len(r[i]) for r in lines) for i in range(6)]
    for ln in lines:
        print("  ".join(x.ljust(w) for x, w in zip(ln, widths)).rstrip())
    print()
    for t in tail:
        print(t)
    return 0


def _emit_values(values, form: str, labels=None):
    vals = [fmt(v) for v in values]
    if form == "json":
        if labels is None:
            print(_dumps({"values": vals}))
        else:
            print(_dumps({"values": dict(zip(labels, vals))}))
    elif form == "tsv":
        if labels is not None:
            print("\t".join(str(x) for x in labels))
        print("\t".join(vals))
    else:
        print(" ".join(vals))


def cmd_d(args) -> int:
    M = lens.L(args.p, args.q)
    if args.index is not None:
        _emit_values([lens.d_invariant(M, args.index)], args.format)
    else:
        _emit_values(lens.d_values(M), args.format, list(range(M.p)) if args.format != "pretty" else None)
    return 0


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational number: {text!r}") from None


def cmd_cw(args) -> int:
    if args.kind == "lens":
        if len(args.values) != 2:
            raise DomainError("cw lens needs P Q")
        p, q = (int(x) for x in args.values)
        _emit_values([lens.casson_walker_lens(lens.L(p, q))], args.format)
        return 0
    if not args.values:
        raise DomainError("cw seifert needs at least one fiber B/A")
    M = seifert.SeifertData.from_fractions(*(_parse_fraction(x) for x in args.values))
    _emit_values([seifert.casson_walker_seifert(M)], args.format)
    return 0


def cmd_dedekind(args) -> int:
    f = exactmath.dedekind_direct if args.direct else exactmath.dedekind_fast
    _emit_values([f(args.q, args.p)], args.format)
    return 0


def cmd_linkform(args) -> int:
    if len(args.values) == 2:
        p, q = args.values
        _emit_values([lens.linking_form(lens.L(p, q)).value], args.format)
        return 0
    if len(args.values) != 3:
        raise DomainError("linkform takes P Q or P Q1 Q2")
    p, q1, q2 = args.values
    ok, wit = lens.linking_forms_isomorphic(p, q1, q2)
    if args.format == "json":
        print(_dumps({"p": p, "q1": q1, "q2": q2, "isomorphic": ok, "witness": wit}))
    elif args.format == "tsv":
        print(f"{p}\t{q1}\t{q2}\t{'yes' if ok else 'no'}\t{'-' if wit is None else wit}")
    else:
        print(f"isomorphic (a={wit})" if ok else "not isomorphic")
    return 0


def cmd_cone(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise DomainError(f"cannot read {args.file}: {e.strerror}") from None
    data = conemodel.parse_profile_text(text)
    if args.N is not None:
        if data.profile is None:
            raise DomainError("--N needs V/H rows, not a bare pattern")
        print(conemodel.grading_shift_N(data.profile, data.g, args.N))
        return 0
    pats = data.patterns()
    multi = len(pats) > 1
    for c, pat in enumerate(pats):
        prefix = f"coset {c}: " if multi else ""
        if args.rank:
            print(prefix + str(conemodel.homology_rank(pat)))
        else:
            ok, bad = conemodel.is_lspace_pattern(pat)
            if ok:
                print(prefix + "L-space")
            else:
                print(prefix + "not L-space: violates " + ",".join(f"({b})" for b in bad))
    return 0


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lenslab", description=__doc__.split("\n\n")[0].strip())
    sub = ap.add_subparsers(dest="cmd", required=True)

    def fmt_opt(p):
        p.add_argument("--format", choices=FORMATS, default="pretty")

    def mode_opt(p):
        p.add_argument("--mode", choices=obstruct.MODES, default=None,
                       help="default: $LENSLAB_MODE or paper-faithful")

    p = sub.add_parser("classify", help="classify one pair (n, s) or every s for n")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int, nargs="?")
    fmt_opt(p)
    mode_opt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="classify all pairs up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    fmt_opt(p)
    mode_opt(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("d", help="d-invariants of L(p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--index", type=int)
    fmt_opt(p)
    p.set_defaults(func=cmd_d)

    p = sub.add_parser("cw", help="Casson-Walker invariant")
    p.add_argument("kind", choices=("lens", "seifert"))
    p.add_argument("values", nargs="*")
    fmt_opt(p)
    p.set_defaults(func=cmd_cw)

    p = sub.add_parser("dedekind", help="Dedekind sum s(q, p)")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--direct", action="store_true", help="use the defining sum")
    fmt_opt(p)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("linkform", help="linking form of L(p,q), or isomorphism of q1/p and q2/p")
    p.add_argument("values", nargs="+", type=int)
    fmt_opt(p)
    p.set_defaults(func=cmd_linkform)

    p = sub.add_parser("cone", help="mapping cone checks on a profile file")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--check", action="store_true")
    g.add_argument("--rank", action="store_true")
    g.add_argument("--N", type=int, metavar="COSET")
    p.set_defaults(func=cmd_cone)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] == ["cw"] and len(argv) >= 2 and "--" not in argv:
        # let negative fractions such as -1/2 through as positionals
        argv = argv[:2] + ["--"] + argv[2:]
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if getattr(args, "mode", "absent") is None:
            args.mode = obstruct.default_mode()
        return args.func(args)
    except DomainError as e:
        print(f"lenslab: error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"lenslab: internal invariant failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

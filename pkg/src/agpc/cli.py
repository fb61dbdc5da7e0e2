"""Command line: construct, verify, inspect.

Exit codes: 0 ok, 1 usage, 2 validation, 3 budget, 4 I/O or malformed input,
5 verification ran but a claim failed.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .boolfn import (BFTTError, MaterializationBudgetExceeded, VectorialFunction, anf, anf_text,
                     nonlinearity, read_bftt, resiliency_order, vectorial_criteria, write_bftt)
from .codes import BudgetExceeded, min_distance, read_code, weight_distribution
from .curve import make_curve
from .field import field_make, find_self_dual_basis
from .pipeline import (Claim, ConstructionError, ValidationError, build_theorem1,
                       claim_from_certificate, claimed_parameters, dump_certificate, is_ks,
                       ks_certificate, kurosawa_satoh, meets_claim, params_from_json, presets,
                       theorem1_certificate, validate_params, verify)

EXIT_USAGE, EXIT_VALIDATION, EXIT_BUDGET, EXIT_IO, EXIT_FAIL = 1, 2, 3, 4, 5


class CLIError(Exception):
    def __init__(self, code, msg):
        super().__init__(msg)
        self.code = code


def _positive(s):
    v = int(s, 0)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _mat_vars(bits: int) -> int:
    """Variable limit for a per-output table budget given in bits."""
    return int(math.log2(bits))


def _emit(args, obj, text=None):
    if args.format == "json" or text is None:
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _load_params(args):
    if bool(args.preset) == bool(args.params):
        raise CLIError(EXIT_USAGE, "give exactly one of --preset or --params")
    if args.preset:
        try:
            return presets(args.preset), args.preset
        except KeyError as exc:
            raise CLIError(EXIT_USAGE, str(exc.args[0])) from exc
    try:
        with open(args.params) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(EXIT_IO, "cannot read %s: %s" % (args.params, exc)) from exc
    try:
        obj = params_from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise CLIError(EXIT_VALIDATION, "bad parameter file: %s" % exc) from exc
    name = data.get("name") or data.get("preset") or os.path.splitext(os.path.basename(args.params))[0]
    return obj, name


def _safe_name(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in name).strip("_")


def cmd_construct(args):
    obj, name = _load_params(args)
    mat = _mat_vars(args.budget_mat)
    if is_ks(obj):
        b = kurosawa_satoh(*obj, budget=args.budget_enum)
        F, claim = b.function, b.claim
        make_cert = lambda ver: ks_certificate(b, name, ver)  # noqa: E731
    else:
        b = build_theorem1(obj, budget=args.budget_enum)
        F, claim = b.function, b.claim
        make_cert = lambda ver: theorem1_certificate(b, ver)  # noqa: E731
    ver = None
    if args.verify:
        ver = verify(F, claim, mat_budget=mat, enum_budget=args.budget_enum, threads=args.threads)
    cert = make_cert(ver)

    out = args.out or "."
    stem = os.path.join(out, _safe_name(name))
    try:
        os.makedirs(out, exist_ok=True)
        with open(stem + ".cert.json", "w") as fh:
            fh.write(dump_certificate(cert))
    except OSError as exc:
        raise CLIError(EXIT_IO, str(exc)) from exc
    if F.n > mat:
        raise CLIError(EXIT_BUDGET, "%d variables exceed the materialization budget; "
                                    "wrote %s.cert.json only" % (F.n, stem))
    try:
        write_bftt(stem + ".bftt", F.materialize(mat))
    except OSError as exc:
        raise CLIError(EXIT_IO, str(exc)) from exc
    summary = {"function": stem + ".bftt", "certificate": stem + ".cert.json",
               "variables": F.n, "outputs": F.m, "claimed": cert["claimed"]}
    if ver is not None:
        summary["verified"] = {k: ver.get(k) for k in ("method", "l", "k", "t")}
        summary["meets_claim"] = cert["meets_claim"]
    text = "wrote %s (%d variables, %d outputs)\nclaimed l=%s k=%s t=%s" % (
        summary["function"], F.n, F.m, claim.l, claim.k, cert["claimed"]["t"])
    _emit(args, summary, text)
    if ver is not None and any(v is False for v in cert["meets_claim"].values()):
        return EXIT_FAIL
    return 0


def cmd_verify(args):
    try:
        tables = read_bftt(args.input)
    except (OSError, BFTTError) as exc:
        raise CLIError(EXIT_IO, "cannot read %s: %s" % (args.input, exc)) from exc
    cert = None
    if args.cert:
        try:
            with open(args.cert) as fh:
                cert = json.load(fh)
            claim = claim_from_certificate(cert)
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
            raise CLIError(EXIT_IO, "cannot read certificate %s: %s" % (args.cert, exc)) from exc
    else:
        claim = Claim(args.l, args.k, args.t)
    mat = _mat_vars(args.budget_mat)
    F = VectorialFunction.from_tables(tables)
    if F.n > mat:
        raise CLIError(EXIT_BUDGET, "%d variables exceed the materialization budget" % F.n)
    if cert is not None and cert.get("dimensions", {}).get("variables") not in (None, F.n):
        raise CLIError(EXIT_VALIDATION, "certificate is for %s variables, file has %d"
                       % (cert["dimensions"]["variables"], F.n))
    top = claim.order if args.max_order is None else max(args.max_order, claim.order)
    rep = vectorial_criteria(F, claim.l, claim.order, claim.t, mat_budget=mat,
                             max_order=top, threads=args.threads)
    ver = {"method": "exhaustive", "l": rep.achieved_l(claim.order),
           "k": claim.order if claim.l <= 0 else rep.achieved_k(), "t": rep.achieved_t}
    result = meets_claim(claim, ver)
    status = "UNKNOWN" if None in result.values() else ("PASS" if all(result.values()) else "FAIL")
    out = {"input": args.input, "n": F.n, "m": F.m,
           "claimed": {"l": claim.l, "k": claim.k, "t": claim.t},
           "verified": ver, "meets_claim": result, "status": status, "report": rep.to_json()}
    lines = ["%s: n=%d m=%d" % (args.input, F.n, F.m)]
    for order in sorted(rep.combos[0].pc_degree):
        lines.append("order %d: PC degree %s" % (order, rep.achieved_l(order)))
    lines.append("resiliency %d" % rep.achieved_t)
    lines.append("%s (claimed l=%d k=%d t=%d)" % (status, claim.l, claim.k, claim.t))
    _emit(args, out, "\n".join(lines))
    return 0 if status == "PASS" else EXIT_FAIL if status == "FAIL" else EXIT_BUDGET


def _inspect_field(args):
    w = int(args.target)
    if w < 1 or w > 16:
        raise CLIError(EXIT_USAGE, "field degree w must be in 1..16")
    F = field_make(w)
    out = {"q": F.q, "w": w, "modulus": F.modulus, "generator": F.generator}
    lines = ["GF(%d), modulus 0x%x, generator %s" % (F.q, F.modulus, F.to_hex(F.generator))]
    if args.self_dual_basis:
        B = find_self_dual_basis(F)
        gram = [[F.trace(F.mul(a, b)) for b in B] for a in B]
        out["self_dual_basis"] = [F.to_hex(e) for e in B]
        out["trace_gram"] = gram
        lines.append("self-dual basis: %s" % " ".join(F.to_hex(e) for e in B))
        lines += ["  " + " ".join(map(str, row)) for row in gram]
    if args.tables and F.q <= 16:
        out["mul"] = [[F.mul(a, b) for b in range(F.q)] for a in range(F.q)]
        out["trace"] = [F.trace(a) for a in range(F.q)]
        lines.append("trace: %s" % " ".join(str(F.trace(a)) for a in range(F.q)))
        lines += [" ".join(F.to_hex(F.mul(a, b)) for b in range(F.q)) for a in range(F.q)]
    return out, "\n".join(lines)


def _inspect_curve(args):
    try:
        X = make_curve(args.target)
    except ValueError as exc:
        raise CLIError(EXIT_USAGE, str(exc)) from exc
    out = {"curve": X.name, "genus": X.genus}
    lines = ["%s, genus %d" % (X.name, X.genus)]
    for d in (1, 2) if args.degree is None else (args.degree,):
        labels = [p.label for p in X.places_of_degree(d)]
        out["degree_%d" % d] = labels
        lines.append("%d places of degree %d: %s" % (len(labels), d, " ".join(labels)))
    return out, "\n".join(lines)


def _inspect_code(args):
    try:
        c = read_code(args.target)
    except (OSError, ValueError) as exc:
        raise CLIError(EXIT_IO, "cannot read code %s: %s" % (args.target, exc)) from exc
    out = {"q": c.q, "n": c.n, "k": c.k}
    lines = ["[%d, %d] code over GF(%d)" % (c.n, c.k, c.q)]
    if args.min_distance:
        d = min_distance(c, args.budget_enum)
        out["d"] = None if d == math.inf else int(d)
        out["weight_distribution"] = weight_distribution(c, args.budget_enum)
        lines.append("minimum distance %s" % out["d"])
    return out, "\n".join(lines)


def _inspect_function(args):
    try:
        tables = read_bftt(args.target)
    except (OSError, BFTTError) as exc:
        raise CLIError(EXIT_IO, "cannot read %s: %s" % (args.target, exc)) from exc
    if tables[0].n > _mat_vars(args.budget_mat):
        raise CLIError(EXIT_BUDGET, "too many variables")
    out = {"n": tables[0].n, "m": len(tables), "outputs": []}
    lines = ["n=%d m=%d" % (tables[0].n, len(tables))]
    for j, t in enumerate(tables, 1):
        nl, bent = nonlinearity(t)
        item = {"weight": t.weight, "resiliency": resiliency_order(t), "nonlinearity": nl, "bent": bent}
        if t.n <= 12:
            item["anf"] = anf_text(anf(t))
        out["outputs"].append(item)
        lines.append("f%d: weight %d, resiliency %d, nonlinearity %d%s" % (
            j, t.weight, item["resiliency"], nl, " (bent)" if bent else ""))
        if "anf" in item:
            lines.append("  " + item["anf"])
    return out, "\n".join(lines)


def _inspect_preset(args):
    try:
        obj = presets(args.target)
    except KeyError as exc:
        raise CLIError(EXIT_USAGE, str(exc.args[0])) from exc
    if is_ks(obj):
        b = kurosawa_satoh(*obj, budget=args.budget_enum)
        out = {"kind": "kurosawa-satoh", "distances": b.distances,
               "claimed": {"l": b.claim.l, "k": b.claim.k}, "variables": b.function.n}
        return out, "KS comparator, %d variables, claims PC(%d) of order %d" % (
            b.function.n, b.claim.l, b.claim.k)
    rep = validate_params(obj)
    out = {"kind": "theorem1", "params": obj.to_json(), "variables": obj.variables,
           "validation": rep.to_json()}
    lines = ["%s: %d variables, m=%d" % (obj.name, obj.variables, obj.m)]
    lines += ["  %-26s %s %s" % (c.name, "ok" if c.ok else ("note" if c.informational else "FAIL"), c.detail)
              for c in rep.checks]
    if rep.ok:
        cl = claimed_parameters(obj, check=False)
        out["claimed"] = cl.to_json()
        lines.append("claimed l=%d k=%d t=%d" % (cl.l, cl.k, cl.t))
    return out, "\n".join(lines)


def cmd_inspect(args):
    fn = {"field": _inspect_field, "curve": _inspect_curve, "code": _inspect_code,
          "function": _inspect_function, "preset": _inspect_preset}[args.what]
    out, text = fn(args)
    _emit(args, out, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-mat", type=_positive, default=1 << 26,
                        help="truth-table budget in bits per output (default 2^26)")
    common.add_argument("--budget-enum", type=_positive, default=1 << 22,
                        help="codeword enumeration budget (default 2^22)")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--format", choices=("json", "text"), default="text")

    ap = argparse.ArgumentParser(prog="agpc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a function and its certificate")
    c.add_argument("--preset")
    c.add_argument("--params", help="JSON parameter file")
    c.add_argument("--out", help="output directory (default .)")
    c.add_argument("--verify", action="store_true", help="fill in verified values")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a BFTT file against claims")
    v.add_argument("input")
    v.add_argument("--cert", help="certificate JSON whose claims are checked")
    v.add_argument("--l", type=int, default=1)
    v.add_argument("--k", type=int, default=0)
    v.add_argument("--t", type=int, default=-1)
    v.add_argument("--max-order", type=int, help="report PC degree up to this order")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("inspect", parents=[common], help="fields, curves, codes, functions, presets")
    i.add_argument("what", choices=("field", "curve", "code", "function", "preset"))
    i.add_argument("target")
    i.add_argument("--self-dual-basis", action="store_true")
    i.add_argument("--tables", action="store_true")
    i.add_argument("--degree", type=int, choices=(1, 2))
    i.add_argument("--min-distance", action="store_true")
    i.set_defaults(func=cmd_inspect)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except CLIError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        for c in exc.report.failures():
            print("  %s: %s" % (c.name, c.detail), file=sys.stderr)
        return EXIT_VALIDATION
    except ConstructionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except (BudgetExceeded, MaterializationBudgetExceeded) as exc:
        print("error: budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

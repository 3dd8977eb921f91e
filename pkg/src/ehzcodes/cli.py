"""
Command-line entry point: ``ehzcodes <command> ...``.

Codes, pairs and certificates travel between commands as JSON files; streams
are NDJSON.  Exit codes: 0 success, 2 invalid input, 3 decoding failure,
4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import codes as cl
from . import deephole as dh
from . import ecp
from . import io
from . import mdsgen
from . import oracle
from .codes import EvalConfig, Polynomial
from .errors import CodingError, GuardExceeded
from .gf import FieldSpec, _parse_value, format_value

EXIT_OK, EXIT_INPUT, EXIT_DECODE, EXIT_GUARD = 0, 2, 3, 4


class CliError(Exception):
    pass


# --- helpers -----------------------------------------------------------------------------

def _ints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [int(x) for x in text.split(",") if x.strip()]


def _field_from_args(args) -> FieldSpec:
    if args.p is None:
        raise CliError("--p is required to define the field")
    return FieldSpec(args.p, args.m, _ints(args.modulus), args.generator)


def _elements(F: FieldSpec, text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [_parse_value(x, F) for x in text.split(",") if x.strip()]


def _element(F: FieldSpec, text: str | None, default: int = 0) -> int:
    return default if text is None else _parse_value(text, F)


def _fmt_vec(F: FieldSpec, values, mode: str) -> str:
    return "(" + ",".join(format_value(int(v), F, mode) for v in np.asarray(values).ravel()) + ")"


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_code(path: str) -> cl.CodeDescriptor:
    return io.code_from_json(_load_json(path))


def _emit(args, payload: dict) -> None:
    text = io.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _summary(args, line: str) -> None:
    # keep stdout machine-readable when the payload goes there
    stream = sys.stdout if getattr(args, "out", None) else sys.stderr
    print(line, file=stream)


def _guard(args) -> int:
    return args.guard_subsets


# --- build -------------------------------------------------------------------------------

def cmd_build(args) -> int:
    F = _field_from_args(args)
    S = _elements(F, args.points)
    if not S:
        raise CliError("--points is required")
    v = _elements(F, args.mults)
    kind = args.kind
    if args.k is None:
        raise CliError("--k is required")
    if kind == "rl":
        code = cl.roth_lempel(F, S, args.k, _element(F, args.delta))
        code.extras.setdefault("mds", cl.is_mds_minors(code, _guard(args)))
        tag = "MDS" if code.extras["mds"] else "not MDS"
        d = code.N - code.K + 1 if code.extras["mds"] else None
    else:
        cfg = EvalConfig.create(F, S, v)
        if kind == "ehz":
            code = cl.ehz(cfg, args.k)
            tag, witness = cl.classify_ehz(code, _guard(args))
            if witness is not None:
                code.extras["zero_sum_witness"] = list(witness)
                tag += f" (zero-sum subset {_fmt_vec(F, witness, args.format)})"
            d = ecp.ehz_distance(code)
        else:
            code = cl.grs(cfg, args.k) if kind == "grs" else cl.egrs(cfg, args.k)
            tag, d = "MDS", code.d
    if d is not None:
        code.d, code.d_method = d, code.d_method or "analytic"
    _emit(args, io.code_to_json(code, args.format))
    dpart = f",{d}" if d is not None else ""
    _summary(args, f"{code.kind} [{code.N},{code.K}{dpart}]_{F.q} {tag}")
    return EXIT_OK


# --- ecp / decode --------------------------------------------------------------------------

def cmd_ecp(args) -> int:
    code = _load_code(args.code)
    F = code.field
    pair = ecp.build_ecp(code, gamma=_element(F, args.gamma) if args.gamma else None, verify=False)
    report = ecp.verify_ecp(pair, code, _guard(args))
    payload = io.pair_to_json(pair, args.format)
    payload["verification"] = report.as_dict()
    _emit(args, payload)
    _summary(args, f"{pair.case_tag} pair, ell={pair.ell}, verified={report.all_ok}")
    return EXIT_OK if report.all_ok else EXIT_INPUT


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    F = code.field
    pair = io.pair_from_json(F, _load_json(args.pair)) if args.pair else None
    y = _elements(F, args.word)
    if y is None or len(y) != code.N:
        raise CliError(f"--word must list {code.N} field elements")
    out = ecp.decode(code, np.array(y, dtype=np.int64), pair)
    mode = args.format
    if args.trace:
        tr = out.trace
        if "syndrome" in tr:
            print(f"syndrome: {_fmt_vec(F, tr['syndrome'], mode)}")
        if "s_basis" in tr:
            basis = ", ".join(_fmt_vec(F, r, mode) for r in np.atleast_2d(tr["s_basis"]))
            print(f"s-space basis: {{{basis}}}")
        if tr.get("a") is not None:
            print(f"a: {_fmt_vec(F, tr['a'], mode)}")
        if tr.get("Z") is not None:
            print(f"Z: {{{','.join(str(i + 1) for i in tr['Z'])}}}")
    print(f"outcome: {out.variant}")
    if out.variant == "TooManyErrors":
        ell = pair.ell if pair is not None else ecp.decoding_radius(code)[0]
        print(out.reason or f"more than {ell} errors")
        return EXIT_DECODE
    print(f"codeword: {_fmt_vec(F, out.codeword, mode)}")
    if out.error is not None:
        print(f"error: {_fmt_vec(F, out.error, mode)}")
    return EXIT_OK


# --- deep holes ----------------------------------------------------------------------------

def _query(args, code) -> dh.DeepHoleQuery:
    F = code.field
    f = Polynomial(F, _elements(F, args.f) or [])
    return dh.DeepHoleQuery(code, _element(F, args.g_kp1), _element(F, args.g_km1), f,
                            _element(F, args.u_last), _element(F, args.v_last, 1))


def _report_line(F, rep: dh.DeepHoleReport, mode: str) -> dict:
    return {"method": rep.method, "deep_hole": bool(rep.verdict),
            "vector": io.elements_to_json(F, rep.vector, mode), "certificate": io._jsonable(rep.certificate)}


def cmd_deephole(args) -> int:
    code = _load_code(args.code)
    F = code.field
    g = _guard(args)
    if args.action == "radius":
        rep = dh.covering_radius(code, args.method, args.guard_vectors)
        print(io.dumps({"rho": rep.rho, "method": rep.method,
                        "witness": None if rep.worst_coset_witness is None
                        else io.elements_to_json(F, rep.worst_coset_witness, args.format)}))
        return EXIT_OK
    if args.action == "check":
        vec = _elements(F, args.vector)
        rep = dh.is_deep_hole(code, np.array(vec or [], dtype=np.int64), g)
        print(io.dumps(_report_line(F, rep, args.format)))
        print("true" if rep.verdict else "false")
        return EXIT_OK
    q = _query(args, code)
    rep = dh.class1_is_deep_hole(q, g) if args.action == "class1" else dh.class2_is_deep_hole(q, g)
    print(io.dumps(_report_line(F, rep, args.format)))
    return EXIT_OK


def cmd_generate(args) -> int:
    code = _load_code(args.code)
    F = code.field
    f_values = [Polynomial(F, _elements(F, args.f))] if args.f else None
    stream = mdsgen.algorithm2_enumerate(
        code, _elements(F, args.g_kp1), _elements(F, args.g_km1), f_values,
        _elements(F, args.products), full_vk=args.full_vk, max_outputs=args.max_outputs,
        only_branch=args.only_branch, guard=_guard(args))
    for cert in stream:
        print(io.dumps(io.certificate_to_json(cert, args.format), sort_keys=True))
    return EXIT_OK


def cmd_analyze(args) -> int:
    code = _load_code(args.code)
    F = code.field
    out: dict = {"kind": code.kind, "N": code.N, "K": code.K, "q": F.q}
    out["mds_minors"] = cl.is_mds_minors(code, _guard(args))
    d = cl.min_distance_bruteforce(code, args.guard_codewords)
    out["d"], out["d_method"] = d, code.d_method
    if code.kind == "EHZ":
        verdict, witness = cl.classify_ehz(code, _guard(args))
        out["classification"] = verdict
        out["zero_sum_witness"] = list(witness) if witness else None
    if code.field.q ** code.K <= args.guard_codewords:
        out["weight_enumerator"] = cl.weight_enumerator(code, args.guard_codewords)
    out["nongrs"] = mdsgen.nongrs_certificate(code)
    print(io.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_equiv(args) -> int:
    c1, c2 = _load_code(args.code1), _load_code(args.code2)
    res = mdsgen.monomial_equivalent(c1, c2, args.budget, args.guard_codewords)
    print(io.dumps({"verdict": res.verdict, "permutation": res.permutation,
                    "scaling": res.scaling, "witness": res.witness}, sort_keys=True))
    return EXIT_OK


def cmd_oracle(args) -> int:
    code = _load_code(args.code)
    F = code.field
    budget = oracle.OracleBudget(args.guard_codewords, args.guard_vectors, args.guard_subsets)
    if args.action in ("nearest", "distance"):
        y = _elements(F, args.word)
        if y is None:
            raise CliError("--word is required")
        res = oracle.nearest_codeword(code, np.array(y, dtype=np.int64), budget)
        if args.action == "distance":
            print(res.distance)
        else:
            print(io.dumps({"codeword": io.elements_to_json(F, res.codeword, args.format),
                            "distance": res.distance, "unique": res.unique}))
        return EXIT_OK
    for vec in oracle.all_deep_holes(code, budget):
        print(io.dumps(io.elements_to_json(F, vec, args.format)))
    return EXIT_OK


# --- parser --------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("field and budgets")
    g.add_argument("--p", type=int, help="field characteristic")
    g.add_argument("--m", type=int, default=1, help="extension degree")
    g.add_argument("--modulus", help="comma-separated modulus coefficients c0,...,cm")
    g.add_argument("--generator", help="designated primitive element")
    g.add_argument("--format", choices=("int", "power", "poly"), default="int")
    g.add_argument("--guard-codewords", type=int, default=cl.DEFAULT_GUARD)
    g.add_argument("--guard-subsets", type=int, default=cl.DEFAULT_GUARD)
    g.add_argument("--guard-vectors", type=int, default=cl.DEFAULT_GUARD)
    g.add_argument("--seed", type=int, default=0, help="seed for randomized commands")

    parser = argparse.ArgumentParser(prog="ehzcodes", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="build a code descriptor")
    b.add_argument("kind", choices=("grs", "egrs", "ehz", "rl"))
    b.add_argument("--points")
    b.add_argument("--mults")
    b.add_argument("--k", type=int)
    b.add_argument("--delta")
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("ecp", parents=[common], help="build and verify an error-correcting pair")
    e.add_argument("code")
    e.add_argument("--gamma")
    e.add_argument("--out")
    e.set_defaults(func=cmd_ecp)

    d = sub.add_parser("decode", parents=[common], help="decode a received word")
    d.add_argument("code")
    d.add_argument("--pair")
    d.add_argument("--word", required=True)
    d.add_argument("--trace", action="store_true")
    d.set_defaults(func=cmd_decode)

    h = sub.add_parser("deephole", parents=[common], help="deep-hole tests and covering radius")
    h.add_argument("action", choices=("check", "class1", "class2", "radius"))
    h.add_argument("code")
    h.add_argument("--vector")
    h.add_argument("--g-kp1")
    h.add_argument("--g-km1")
    h.add_argument("--f", help="coefficients f_0,...,f_k")
    h.add_argument("--u-last")
    h.add_argument("--v-last")
    h.add_argument("--method", choices=("Exhaustive", "TheoremValue"), default="Exhaustive")
    h.set_defaults(func=cmd_deephole)

    gen = sub.add_parser("generate", parents=[common], help="stream MDS extensions as NDJSON")
    gen.add_argument("code")
    gen.add_argument("--g-kp1", help="comma-separated values to try")
    gen.add_argument("--g-km1", help="comma-separated values to try")
    gen.add_argument("--f", help="pin f to these coefficients")
    gen.add_argument("--products", help="values of u_last*v_last to try")
    gen.add_argument("--full-vk", action="store_true")
    gen.add_argument("--max-outputs", type=int)
    gen.add_argument("--only-branch", choices=mdsgen.BRANCHES)
    gen.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", parents=[common], help="parameters and invariants of a code")
    a.add_argument("code")
    a.set_defaults(func=cmd_analyze)

    q = sub.add_parser("equiv", parents=[common], help="monomial equivalence of two codes")
    q.add_argument("code1")
    q.add_argument("code2")
    q.add_argument("--budget", type=int, default=10**6)
    q.set_defaults(func=cmd_equiv)

    o = sub.add_parser("oracle", parents=[common], help="brute-force reference computations")
    o.add_argument("action", choices=("nearest", "distance", "holes"))
    o.add_argument("code")
    o.add_argument("--word")
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (CodingError, CliError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

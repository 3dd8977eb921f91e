"""
JSON round-tripping for fields, matrices, codes, pairs, queries and certificates.

Field elements are written as strings in the element grammar (``INT``,
``w^e`` or ``poly:[...]``) chosen by ``mode``; everything else is plain JSON.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

import numpy as np

from .codes import CodeDescriptor, EvalConfig, Polynomial
from .deephole import DeepHoleQuery
from .ecp import EcpPair, TransformedConfig
from .errors import ParseError
from .fqmat import FqMatrix
from .gf import FieldSpec, _parse_value, format_value


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def dumps(obj: Any, **kw) -> str:
    return json.dumps(_jsonable(obj), **kw)


# --- field and elements ------------------------------------------------------------------

def field_to_json(F: FieldSpec) -> dict:
    out: dict[str, Any] = {"p": F.p, "m": F.m, "modulus": list(F.modulus)}
    if F.generator is not None:
        out["generator"] = str(F.generator)
    return out


def field_from_json(d: dict) -> FieldSpec:
    try:
        m = int(d.get("m", 1))
        return FieldSpec(int(d["p"]), m, d.get("modulus") if m > 1 else None, d.get("generator"))
    except KeyError as exc:
        raise ParseError(f"field spec missing {exc}") from exc


def elements_to_json(F: FieldSpec, values, mode: str = "int") -> list[str]:
    return [format_value(int(v), F, mode) for v in np.asarray(values).ravel()]


def elements_from_json(F: FieldSpec, items) -> np.ndarray:
    return np.array([_parse_value(str(x), F) for x in items], dtype=np.int64)


def matrix_to_json(M: FqMatrix, mode: str = "int") -> dict:
    return {"rows": M.rows, "cols": M.cols,
            "data": [elements_to_json(M.field, row, mode) for row in M.data]}


def matrix_from_json(F: FieldSpec, d: dict) -> FqMatrix:
    rows, cols = int(d["rows"]), int(d["cols"])
    data = [elements_from_json(F, r) for r in d["data"]]
    arr = np.vstack(data) if data else np.zeros((rows, cols), dtype=np.int64)
    arr = arr.reshape(rows, cols)
    return FqMatrix(F, arr)


# --- codes ---------------------------------------------------------------------------------

def code_to_json(code: CodeDescriptor, mode: str = "int") -> dict:
    F = code.field
    out: dict[str, Any] = {"field": field_to_json(F), "kind": code.kind, "N": code.N, "K": code.K,
                           "G": matrix_to_json(code.G, mode), "H": matrix_to_json(code.H, mode)}
    if code.config is not None:
        out["S"] = elements_to_json(F, code.config.points, mode)
        out["v"] = elements_to_json(F, code.config.mults, mode)
    out["extras"] = _jsonable(code.extras)
    if code.d is not None:
        out["d"] = code.d
        out["d_method"] = code.d_method
    return out


def code_from_json(d: dict) -> CodeDescriptor:
    F = field_from_json(d["field"])
    G = matrix_from_json(F, d["G"])
    H = matrix_from_json(F, d["H"])
    cfg = None
    if "S" in d:
        cfg = EvalConfig.create(F, elements_from_json(F, d["S"]).tolist(),
                                elements_from_json(F, d["v"]).tolist() if "v" in d else None)
    code = CodeDescriptor(d["kind"], G, H, cfg, dict(d.get("extras", {})), d.get("d"), d.get("d_method"))
    if (code.N, code.K) != (int(d.get("N", code.N)), int(d.get("K", code.K))):
        raise ParseError("declared N/K disagree with the generator matrix")
    return code


def code_hash(code: CodeDescriptor) -> str:
    """Short digest of field and generator, used as a provenance reference."""
    blob = dumps({"field": field_to_json(code.field), "G": code.G.tolist()}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


# --- pairs ---------------------------------------------------------------------------------

def pair_to_json(pair: EcpPair, mode: str = "int") -> dict:
    F = pair.G_A.field
    out: dict[str, Any] = {"case": pair.case_tag, "ell": pair.ell,
                           "G_A": matrix_to_json(pair.G_A, mode), "G_B": matrix_to_json(pair.G_B, mode)}
    t = pair.transform
    if t is not None:
        out["gamma"] = format_value(t.gamma, F, mode)
        out["v_prime_exponent"] = t.exponent
        out["S_prime"] = elements_to_json(F, t.S_prime, mode)
        out["v_prime"] = elements_to_json(F, t.v_prime, mode)
        out["u_prime"] = elements_to_json(F, t.u_prime, mode)
    return out


def pair_from_json(F: FieldSpec, d: dict) -> EcpPair:
    transform = None
    if "gamma" in d:
        ints = lambda key: tuple(int(x) for x in elements_from_json(F, d.get(key, [])))
        transform = TransformedConfig(_parse_value(str(d["gamma"]), F), d.get("v_prime_exponent", "k"),
                                      ints("S_prime"), ints("v_prime"), ints("u_prime"))
    return EcpPair(d["case"], int(d["ell"]), matrix_from_json(F, d["G_A"]),
                   matrix_from_json(F, d["G_B"]), transform)


# --- queries and certificates --------------------------------------------------------------

def query_to_json(q: DeepHoleQuery, mode: str = "int") -> dict:
    F = q.code.field
    fmt = lambda v: format_value(int(v), F, mode)
    return {"code": code_hash(q.code), "g_kp1": fmt(q.g_kp1), "g_km1": fmt(q.g_km1),
            "f": elements_to_json(F, q.f.coeffs, mode), "u_last": fmt(q.u_last), "v_last": fmt(q.v_last)}


def query_from_json(code: CodeDescriptor, d: dict) -> DeepHoleQuery:
    F = code.field
    val = lambda key, default="0": _parse_value(str(d.get(key, default)), F)
    f = Polynomial(F, elements_from_json(F, d.get("f", [])).tolist())
    return DeepHoleQuery(code, val("g_kp1"), val("g_km1"), f, val("u_last"), val("v_last", "1"))


def certificate_to_json(cert, mode: str = "int") -> dict:
    F = cert.child.field
    return {"parent": code_to_json(cert.parent, mode), "parent_hash": code_hash(cert.parent),
            "row": elements_to_json(F, cert.deep_hole_row, mode),
            "child": code_to_json(cert.child, mode), "branch": cert.branch,
            "query": _jsonable(cert.query), "mds_proof": cert.mds_proof,
            "nongrs": _jsonable(cert.nongrs_proof), "rl_equiv": _jsonable(cert.rl_equivalence or {})}

"""JSON documents emitted by the command line tool.

Rationals are always exact ``"p/q"`` (or ``"p"``) strings. Keys are emitted
in a fixed order so output is byte-for-byte deterministic.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Any, Optional

from .boundary import BoundarySpec, TripleReport
from .classify import SingularityReport
from .cycles import Cycle
from .graph import DualGraph, serialize_graph
from .reider import ReiderQuery, ReiderVerdict, SmoothPointCriterion
from .verify import VerificationResult

SCHEMA_VERSION = 1


def rat(x) -> Optional[str]:
    if x is None:
        return None
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cycle_map(c: Optional[Cycle]):
    return None if c is None else c.as_dict()


def graph_echo(g: DualGraph, boundary: Optional[BoundarySpec] = None) -> dict:
    lines = boundary.to_lines() if boundary is not None else ()
    return {
        "source": serialize_graph(g, lines),
        "smooth_point_mode": g.smooth_point_mode,
        "vertices": [{"name": v.name, "w": v.w, "g": v.g} for v in g.vertices],
        "edges": [[g.vertices[i].name, g.vertices[j].name, m] for i, j, m in g.edges],
    }


def classification_doc(r: SingularityReport) -> dict:
    ends = r.chain_end_coefficients
    return {
        "is_smooth": r.is_smooth,
        "is_rational": r.is_rational,
        "is_rdp": r.is_rdp,
        "is_canonical": r.is_canonical,
        "is_elliptic_gorenstein": r.is_elliptic_gorenstein,
        "is_log_terminal": r.is_log_terminal,
        "is_log_canonical": r.is_log_canonical,
        "multiplicity": r.multiplicity,
        "minus_delta2": rat(r.minus_delta2),
        "shape": str(r.shape),
        "truly_lc_type": r.truly_lc_type,
        "chain_end_coefficients": None if ends is None else [rat(a) for a in ends],
        "fork_legs_minus2": r.fork_legs_minus2,
    }


def invariants_doc(r: SingularityReport) -> dict:
    inv = r.invariants
    g = inv.graph
    return {
        "Z": cycle_map(inv.Z),
        "Delta": cycle_map(inv.Delta),
        "pa_Z": inv.pa_Z,
        "delta_y": rat(inv.delta_y),
        "Z2": inv.Z2,
        "Delta2": rat(inv.Delta2),
        "KxFj": {v.name: k for v, k in zip(g.vertices, inv.KxFj)},
    }


def triple_doc(t: TripleReport) -> dict:
    return {
        "b_prime": cycle_map(t.b_prime),
        "is_lt_triple": t.is_lt_triple,
        "is_lc_triple": t.is_lc_triple,
        "mu": rat(t.mu),
    }


def verdict_doc(v: ReiderVerdict) -> dict:
    refined = None
    if v.refined_an is not None:
        refined = {"threshold": rat(v.refined_an.threshold), "met": v.refined_an.met,
                   "status": "guaranteed by theorem"}
    return {
        "mu": rat(v.mu),
        "delta_y": rat(v.delta_y),
        "theorem5": {"applies": v.theorem5.applies, "status": "guaranteed by theorem"},
        "theorem6": {
            "hypotheses_met": v.theorem6.hypotheses_met,
            "margin_m2": rat(v.theorem6.margin_m2),
            "margin_mc": rat(v.theorem6.margin_mc),
            "status": "guaranteed by theorem",
        },
        "theorem7": {
            "applicable_shape": v.theorem7.applicable_shape,
            "hypotheses_met": v.theorem7.hypotheses_met,
            "status": "guaranteed by theorem",
        },
        "refined_an": refined,
        "open_problem": {
            "threshold": rat(v.open_problem.threshold),
            "met": v.open_problem.met,
            "status": "conjectural",
        },
    }


def query_doc(q: ReiderQuery) -> dict:
    return {
        "m2": rat(q.m2),
        "mc_min": rat(q.mc_min),
        "mc_all_nonneg": q.mc_all_nonneg,
        "mc_strict_positive": q.mc_strict_positive,
    }


def smooth_doc(s: SmoothPointCriterion) -> dict:
    return {
        "mult_b": rat(s.mult_b),
        "m2_threshold": rat(s.m2_threshold),
        "mc_threshold": rat(s.mc_threshold),
        "met": s.met,
        "note": s.note,
    }


def analysis_document(
    g: DualGraph,
    report: SingularityReport,
    boundary: Optional[BoundarySpec] = None,
    triple: Optional[TripleReport] = None,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "analysis",
        "graph": graph_echo(g, boundary),
        "invariants": invariants_doc(report),
        "classification": classification_doc(report),
        "triple": None if triple is None else triple_doc(triple),
    }


def classification_document(g: DualGraph, report: SingularityReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "classification",
        "classification": classification_doc(report),
    }


def reider_document(
    g: DualGraph,
    boundary: BoundarySpec,
    triple: TripleReport,
    q: ReiderQuery,
    verdict: Optional[ReiderVerdict],
    smooth: Optional[SmoothPointCriterion] = None,
    note: Optional[str] = None,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "reider",
        "graph": graph_echo(g, boundary),
        "query": query_doc(q),
        "triple": triple_doc(triple),
        "verdict": None if verdict is None else verdict_doc(verdict),
        "smooth_point": None if smooth is None else smooth_doc(smooth),
        "note": note,
    }


def _jsonable(x: Any):
    if isinstance(x, Cycle):
        return x.as_dict()
    if isinstance(x, Fraction):
        return rat(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def verification_document(res: VerificationResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "verification",
        "claim": res.claim,
        "search_space": res.search_space,
        "asserted": res.asserted,
        "holds": res.holds,
        "witness": cycle_map(res.witness),
        "extremal_value": rat(res.extremal_value),
        "details": _jsonable(res.details),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_schema() -> dict:
    text = resources.files("singan").joinpath("schema/document.schema.json").read_text("utf-8")
    return json.loads(text)


def validate_document(doc: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if ``doc`` does not match the shipped schema."""
    import jsonschema

    jsonschema.validate(doc, load_schema())

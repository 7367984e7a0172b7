"""Canonical JSON projections of analyses and comparisons.

Documents are plain dicts built in a fixed key order. Every integer that can
outgrow 64 bits (discriminants, indices, Gram entries, primes, basis
numerators) is serialized as a decimal string so that consumers with
double-precision JSON parsers never silently round. Small structural counts
(degrees, exponents, e_i, f_i, signature entries) stay JSON numbers.

The `meta` key is the non-canonical envelope (timing, cache notes); the
canonical byte form of a document is the compact sorted-key dump with `meta`
removed, and is what determinism guarantees cover.
"""

import json

from .arith import PrimeFactorization
from .genus import NOT_APPLICABLE
from .orders import MaximalOrder, Order
from .polys import IntPoly, poly_to_string
from .splitting import SplittingType
from .traceform import (
    AlphaClass,
    FieldAnalysis,
    GammaClassification,
    GammaTest,
    TraceForm,
)

ANALYSIS_SCHEMA = "tracegenus/analysis/v1"
COMPARE_SCHEMA = "tracegenus/compare/v1"
SCAN_SCHEMA = "tracegenus/scan/v1"
ERROR_SCHEMA = "tracegenus/error/v1"


def _s(value):
    return str(int(value))


def _splitting_doc(st):
    return {
        "p": _s(st.p),
        "pairs": [[e, f] for e, f in st.pairs],
        "g": st.g,
        "residue_degree_sum": st.residue_degree_sum,
        "tame": st.is_tame,
        "homogeneous": st.is_homogeneous,
    }


def _alpha_doc(a):
    return {
        "p": _s(a.p),
        "representative": _s(a.representative),
        "nonresidue": _s(a.nonresidue),
        "unit_rep": _s(a.unit_rep),
        "legendre": a.legendre,
    }


def _gamma_doc(g):
    return {
        "is_tame": g.is_tame,
        "is_gamma": g.is_gamma,
        "exceptional": None if g.exceptional is None else _s(g.exceptional),
        "failing": [_s(p) for p in g.failing],
        "tests": [
            {
                "p": _s(t.p),
                "homogeneous": t.homogeneous,
                "g_odd": t.g_odd,
                "quotient_odd": t.quotient_odd,
                "passes": t.passes,
            }
            for t in g.tests
        ],
    }


def analysis_document(analysis, source_text):
    """Canonical AnalysisDocument for one FieldAnalysis."""
    mo = analysis.max_order
    order = mo.order
    sign = -1 if analysis.disc < 0 else 1
    return {
        "schema": ANALYSIS_SCHEMA,
        "input": source_text,
        "polynomial": poly_to_string(analysis.poly),
        "coefficients": [_s(c) for c in analysis.poly.coeffs],
        "degree": analysis.degree,
        "signature": list(analysis.signature),
        "disc": _s(analysis.disc),
        "disc_factorization": {
            "sign": sign,
            "factors": [[_s(p), e] for p, e in analysis.disc_factored],
        },
        "index": _s(analysis.index),
        "basis": {
            "denominator": _s(order.denom),
            "matrix": [[_s(c) for c in row] for row in order.basis_num],
        },
        "splittings": [_splitting_doc(st) for st in analysis.splittings],
        "alphas": [_alpha_doc(a) for a in analysis.alphas],
        "gamma": _gamma_doc(analysis.gamma),
        "trace_form": {
            "gram": [[_s(c) for c in row] for row in analysis.trace_form.gram],
            "det": _s(analysis.trace_form.det),
            "signature": list(analysis.trace_form.signature),
        },
    }


def comparison_document(left_doc, right_doc, comparison, prediction, crossval):
    doc = {
        "schema": COMPARE_SCHEMA,
        "left": left_doc,
        "right": right_doc,
        "comparison": {
            "verdict": comparison.verdict,
            "reason": comparison.reason,
            "disc_equal": comparison.disc_equal,
            "signature_equal": comparison.signature_equal,
            "alpha": [
                {
                    "p": _s(r.p),
                    "left": r.left,
                    "right": r.right,
                    "equal": r.equal,
                    "informational": r.informational,
                }
                for r in comparison.alpha_rows
            ],
        },
        "prediction": {
            "applicable": prediction.applicable,
            "reason": prediction.reason,
            "predicted_same": prediction.predicted_same,
            "isometry_claim": prediction.isometry_claim,
            "exceptional_union": [_s(p) for p in prediction.exceptional_union],
        },
        "cross_validation": None
        if crossval is None
        else {"consistent": crossval.consistent},
    }
    return doc


def error_document(exc, factors=None):
    doc = {
        "schema": ERROR_SCHEMA,
        "error": {
            "type": type(exc).__name__,
            "message": str(exc),
        },
    }
    if factors is not None:
        doc["error"]["factors"] = [poly_to_string(g) for g in factors]
    return doc


def scan_document(records, summary):
    return {
        "schema": SCAN_SCHEMA,
        "count": len(records),
        "ok": sum(1 for r in records if r["ok"]),
        "failed": sum(1 for r in records if not r["ok"]),
        "records": records,
        "summary": summary,
    }


def analysis_from_document(doc):
    """Rebuild a FieldAnalysis from its document; inverse of
    analysis_document up to the input echo. Lets cached documents feed the
    comparators without recomputation."""
    poly = IntPoly([int(c) for c in doc["coefficients"]])
    disc = int(doc["disc"])
    factors = tuple((int(p), e) for p, e in doc["disc_factorization"]["factors"])
    order = Order(
        poly=poly,
        basis_num=tuple(tuple(int(c) for c in row) for row in doc["basis"]["matrix"]),
        denom=int(doc["basis"]["denominator"]),
        disc=disc,
    )
    mo = MaximalOrder(
        order=order,
        index=int(doc["index"]),
        disc_factored=PrimeFactorization(doc["disc_factorization"]["sign"], factors),
    )
    splittings = tuple(
        SplittingType(p=int(st["p"]), pairs=tuple((e, f) for e, f in st["pairs"]))
        for st in doc["splittings"]
    )
    alphas = tuple(
        AlphaClass(
            p=int(a["p"]),
            representative=int(a["representative"]),
            nonresidue=int(a["nonresidue"]),
            legendre=a["legendre"],
        )
        for a in doc["alphas"]
    )
    g = doc["gamma"]
    gamma = GammaClassification(
        is_tame=g["is_tame"],
        is_gamma=g["is_gamma"],
        exceptional=None if g["exceptional"] is None else int(g["exceptional"]),
        failing=tuple(int(p) for p in g["failing"]),
        tests=tuple(
            GammaTest(
                p=int(t["p"]),
                homogeneous=t["homogeneous"],
                g_odd=t["g_odd"],
                quotient_odd=t["quotient_odd"],
            )
            for t in g["tests"]
        ),
    )
    tf = TraceForm(
        gram=tuple(tuple(int(c) for c in row) for row in doc["trace_form"]["gram"]),
        det=int(doc["trace_form"]["det"]),
        signature=tuple(doc["trace_form"]["signature"]),
    )
    return FieldAnalysis(
        poly=poly,
        degree=doc["degree"],
        signature=tuple(doc["signature"]),
        disc=disc,
        disc_factored=factors,
        index=int(doc["index"]),
        max_order=mo,
        splittings=splittings,
        alphas=alphas,
        gamma=gamma,
        trace_form=tf,
    )


def canonical_bytes(doc):
    """The byte form covered by determinism guarantees: meta stripped,
    compact separators, sorted keys, trailing newline."""
    trimmed = {k: v for k, v in doc.items() if k != "meta"}
    return (json.dumps(trimmed, sort_keys=True, separators=(",", ":")) + "\n").encode(
        "ascii"
    )


def dump_pretty(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _table(rows):
    widths = [max(len(str(cell)) for cell in col) for col in zip(*rows)]
    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_analysis(doc):
    """Human-readable rendering of an AnalysisDocument."""
    g = doc["gamma"]
    lines = [
        "polynomial   %s" % doc["polynomial"],
        "degree       %d" % doc["degree"],
        "signature    (r, s) = (%d, %d)" % tuple(doc["signature"]),
        "disc         %s = %s%s"
        % (
            doc["disc"],
            "-" if doc["disc_factorization"]["sign"] < 0 else "",
            " * ".join(
                "%s^%d" % (p, e) if e > 1 else p
                for p, e in doc["disc_factorization"]["factors"]
            )
            or "1",
        ),
        "index        %s" % doc["index"],
        "tame         %s" % g["is_tame"],
        "gamma        %s%s"
        % (
            g["is_gamma"],
            "" if g["exceptional"] is None else " (exceptional prime %s)" % g["exceptional"],
        ),
    ]
    if doc["splittings"]:
        rows = [("p", "pairs (e,f)", "g", "F", "tame", "alpha")]
        alphas = {a["p"]: a for a in doc["alphas"]}
        for st in doc["splittings"]:
            a = alphas.get(st["p"])
            rows.append(
                (
                    st["p"],
                    " ".join("(%d,%d)" % (e, f) for e, f in st["pairs"]),
                    st["g"],
                    st["residue_degree_sum"],
                    "yes" if st["tame"] else "no",
                    "" if a is None else "%+d" % a["legendre"],
                )
            )
        lines.append("")
        lines.append(_table(rows))
    lines.append("")
    lines.append("trace form   det %s, signature %s" % (doc["trace_form"]["det"], tuple(doc["trace_form"]["signature"])))
    return "\n".join(lines) + "\n"


def render_comparison(doc):
    c = doc["comparison"]
    p = doc["prediction"]
    lines = [
        "left         %s" % doc["left"]["polynomial"],
        "right        %s" % doc["right"]["polynomial"],
        "verdict      %s%s" % (c["verdict"], "" if not c["reason"] else " (%s)" % c["reason"]),
    ]
    if c["verdict"] != NOT_APPLICABLE:
        lines.append("disc equal   %s" % c["disc_equal"])
        lines.append("sig equal    %s" % c["signature_equal"])
        if c["alpha"]:
            rows = [("p", "left", "right", "equal")]
            for r in c["alpha"]:
                rows.append((r["p"], "%+d" % r["left"], "%+d" % r["right"], "yes" if r["equal"] else "NO"))
            lines.append(_table(rows))
    lines.append(
        "prediction   %s"
        % (
            "not applicable (%s)" % p["reason"]
            if not p["applicable"]
            else "same spinor genus: %s%s"
            % (
                p["predicted_same"],
                ", isometry claimed" if p["isometry_claim"] else "",
            )
        )
    )
    if doc["cross_validation"] is not None:
        lines.append("cross-check  consistent: %s" % doc["cross_validation"]["consistent"])
    return "\n".join(lines) + "\n"


def render_scan(doc):
    lines = [
        "records      %d (%d ok, %d failed)" % (doc["count"], doc["ok"], doc["failed"]),
    ]
    s = doc["summary"]
    lines.append("tame         %d" % s["tame_count"])
    lines.append("gamma        %d" % s["gamma_count"])
    if s["exceptional_histogram"]:
        lines.append(
            "exceptional  "
            + "  ".join("%s:%d" % (p, c) for p, c in s["exceptional_histogram"])
        )
    if s.get("pairs") is not None:
        lines.append(
            "pairs        %d compared, %d consistent, %d inconsistent"
            % (
                s["pairs"]["compared"],
                s["pairs"]["consistent"],
                s["pairs"]["inconsistent"],
            )
        )
    failed = [r for r in doc["records"] if not r["ok"]]
    for r in failed:
        lines.append("FAILED %s: %s" % (r["label"], r["error"]["message"]))
    return "\n".join(lines) + "\n"

"""Command-line surface: analyze / compare / scan with a content-addressed
on-disk cache.

Exit codes: 0 success (or verdict same), 1 verdict different (or every scan
record failed), 2 unparseable or ill-formed input, 3 reducible polynomial,
4 comparison not applicable.
"""

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor

from . import report
from .corpus import read_corpus
from .errors import (
    DegenerateInputError,
    NonMonicInputError,
    ParseError,
    ReducibleInputError,
    TraceGenusError,
)
from .genus import (
    NOT_APPLICABLE,
    SAME,
    compare_spinor_genus,
    cross_validate,
    predict_equivalence,
)
from .polys import coeff_csv, parse_poly
from .traceform import analyze_field

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_PARSE = 2
EXIT_REDUCIBLE = 3
EXIT_NOT_APPLICABLE = 4

CACHE_ENV_VAR = "TRACEGENUS_CACHE_DIR"


def default_cache_dir():
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache"
    )
    return os.path.join(base, "tracegenus")


def resolve_cache_dir(args):
    if args.cache_dir:
        return args.cache_dir
    return os.environ.get(CACHE_ENV_VAR) or default_cache_dir()


def cache_key(poly):
    payload = report.ANALYSIS_SCHEMA + "\n" + coeff_csv(poly)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def cache_load(cache_dir, key):
    """(document, warning): document None on miss; warning set when an entry
    existed but was unusable and will be recomputed."""
    path = os.path.join(cache_dir, key + ".json")
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError:
        return None, None
    try:
        doc = json.loads(raw)
    except ValueError:
        return None, "corrupt cache entry %s ignored" % key
    if not isinstance(doc, dict) or doc.get("schema") != report.ANALYSIS_SCHEMA:
        return None, "stale cache entry %s ignored" % key
    return doc, None


def cache_store(cache_dir, key, doc):
    """Atomic write (temp file then rename); returns a warning on failure."""
    path = os.path.join(cache_dir, key + ".json")
    data = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode("ascii")
    try:
        os.makedirs(cache_dir, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=key, suffix=".tmp", dir=cache_dir)
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
    except OSError as exc:
        return "cache not writable (%s); proceeding uncached" % exc
    return None


def analyze_text(text, cache_dir, use_cache):
    """(document, warnings). Cache hits skip all computation; the returned
    document is byte-for-byte the one a fresh computation would produce."""
    warnings = []
    poly = parse_poly(text)
    key = cache_key(poly)
    if use_cache:
        doc, warn = cache_load(cache_dir, key)
        if warn:
            warnings.append(warn)
        if doc is not None:
            if doc.get("input") != text:
                # key is by coefficients, so another spelling of the same
                # field can hit; re-stamp the echo so cached and fresh output
                # stay byte-identical
                doc = dict(doc)
                doc["input"] = text
            return doc, warnings
    analysis = analyze_field(poly)
    doc = report.analysis_document(analysis, text)
    if use_cache:
        warn = cache_store(cache_dir, key, doc)
        if warn:
            warnings.append(warn)
    return doc, warnings


def _emit(doc, args, render):
    if args.human:
        sys.stdout.write(render(doc))
    else:
        sys.stdout.write(report.dump_pretty(doc))


def _emit_input_error(exc, args):
    factors = getattr(exc, "factors", None)
    doc = report.error_document(exc, factors=factors)
    if args.human:
        sys.stdout.write("error: %s\n" % doc["error"]["message"])
        for g in doc["error"].get("factors", []):
            sys.stdout.write("  factor: %s\n" % g)
    else:
        sys.stdout.write(report.dump_pretty(doc))
    print("error: %s" % exc, file=sys.stderr)
    if isinstance(exc, ReducibleInputError):
        return EXIT_REDUCIBLE
    return EXIT_PARSE


def cmd_analyze(args):
    t0 = time.monotonic()
    try:
        doc, warnings = analyze_text(
            args.polynomial, resolve_cache_dir(args), not args.no_cache
        )
    except (ParseError, NonMonicInputError, DegenerateInputError, ReducibleInputError) as exc:
        return _emit_input_error(exc, args)
    doc = dict(doc)
    doc["meta"] = _meta(t0, warnings)
    _emit(doc, args, report.render_analysis)
    return EXIT_OK


def cmd_compare(args):
    t0 = time.monotonic()
    cache_dir = resolve_cache_dir(args)
    use_cache = not args.no_cache
    warnings = []
    analyses = []
    docs = []
    try:
        for text in (args.left, args.right):
            doc, warns = analyze_text(text, cache_dir, use_cache)
            warnings.extend(warns)
            docs.append(doc)
            analyses.append(report.analysis_from_document(doc))
    except (ParseError, NonMonicInputError, DegenerateInputError, ReducibleInputError) as exc:
        return _emit_input_error(exc, args)
    comparison = compare_spinor_genus(*analyses)
    prediction = predict_equivalence(*analyses)
    crossval = None
    if comparison.verdict != NOT_APPLICABLE and prediction.applicable:
        crossval = cross_validate(*analyses)
    doc = report.comparison_document(docs[0], docs[1], comparison, prediction, crossval)
    doc["meta"] = _meta(t0, warnings)
    _emit(doc, args, report.render_comparison)
    if comparison.verdict == SAME:
        return EXIT_OK
    if comparison.verdict == NOT_APPLICABLE:
        return EXIT_NOT_APPLICABLE
    return EXIT_DIFFERENT


def _scan_one(task):
    """Worker for scan: analyze one corpus record. Top-level so it pickles."""
    label, text, cache_dir, use_cache = task
    try:
        doc, warnings = analyze_text(text, cache_dir, use_cache)
        record = {"label": label, "input": text, "ok": True, "analysis": doc}
    except TraceGenusError as exc:
        err = report.error_document(exc, factors=getattr(exc, "factors", None))
        record = {"label": label, "input": text, "ok": False, "error": err["error"]}
        warnings = []
    return record, warnings


def _pair_sweep(records):
    """Cross-validate every applicable pair, bucketed by (disc, signature)."""
    analyses = []
    for r in records:
        if r["ok"]:
            analyses.append((r["label"], report.analysis_from_document(r["analysis"])))
    buckets = {}
    for label, fa in analyses:
        buckets.setdefault((fa.disc, fa.signature), []).append((label, fa))
    details = []
    consistent = inconsistent = 0
    for key in sorted(buckets, key=lambda k: (k[0], k[1])):
        group = buckets[key]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                la, fa = group[i]
                lb, fb = group[j]
                prediction = predict_equivalence(fa, fb)
                if not prediction.applicable:
                    continue
                cv = cross_validate(fa, fb)
                details.append(
                    {
                        "left": la,
                        "right": lb,
                        "verdict": cv.comparison.verdict,
                        "predicted_same": cv.prediction.predicted_same,
                        "consistent": cv.consistent,
                    }
                )
                if cv.consistent:
                    consistent += 1
                else:
                    inconsistent += 1
    return {
        "compared": consistent + inconsistent,
        "consistent": consistent,
        "inconsistent": inconsistent,
        "details": details,
    }


def cmd_scan(args):
    t0 = time.monotonic()
    cache_dir = resolve_cache_dir(args)
    use_cache = not args.no_cache
    try:
        corpus = read_corpus(args.corpus)
    except ParseError as exc:
        return _emit_input_error(exc, args)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    tasks = [(r.label, r.text, cache_dir, use_cache) for r in corpus]
    warnings = []
    records = []
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_scan_one, tasks))
    else:
        results = [_scan_one(t) for t in tasks]
    for record, warns in results:
        records.append(record)
        warnings.extend(warns)
    gamma_count = tame_count = 0
    histogram = {}
    for r in records:
        if not r["ok"]:
            continue
        g = r["analysis"]["gamma"]
        tame_count += g["is_tame"]
        gamma_count += g["is_gamma"]
        if g["exceptional"] is not None:
            p = g["exceptional"]
            histogram[p] = histogram.get(p, 0) + 1
    summary = {
        "tame_count": tame_count,
        "gamma_count": gamma_count,
        "exceptional_histogram": sorted(histogram.items(), key=lambda kv: int(kv[0])),
        "pairs": _pair_sweep(records) if args.pairs else None,
    }
    doc = report.scan_document(records, summary)
    doc["meta"] = _meta(t0, warnings)
    _emit(doc, args, report.render_scan)
    if records and not any(r["ok"] for r in records):
        return EXIT_DIFFERENT
    return EXIT_OK


def _meta(t0, warnings):
    meta = {"elapsed_ms": int((time.monotonic() - t0) * 1000)}
    if warnings:
        meta["warnings"] = warnings
    return meta


def _add_common_flags(sub):
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--human", action="store_true", help="human-readable output")
    sub.add_argument("--no-cache", action="store_true", help="bypass the cache")
    sub.add_argument(
        "--cache-dir",
        metavar="PATH",
        help="cache directory (default: $%s or %s)" % (CACHE_ENV_VAR, default_cache_dir()),
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tracegenus",
        description="Integral trace forms of number fields: analysis and "
        "spinor-genus comparison.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_analyze = subs.add_parser("analyze", help="analyze one field")
    p_analyze.add_argument("polynomial", help='e.g. "x^4 - 41*x^2 + 144" or "144,0,-41,0,1"')
    _add_common_flags(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_compare = subs.add_parser("compare", help="compare two fields")
    p_compare.add_argument("left")
    p_compare.add_argument("right")
    _add_common_flags(p_compare)
    p_compare.set_defaults(func=cmd_compare)

    p_scan = subs.add_parser("scan", help="analyze a corpus CSV")
    p_scan.add_argument("corpus", help="CSV file: label,polynomial")
    p_scan.add_argument("--pairs", action="store_true", help="cross-validate applicable pairs")
    p_scan.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    _add_common_flags(p_scan)
    p_scan.set_defaults(func=cmd_scan)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Batch command-line interface.

One command per invocation:

    validate | cofactors | span | matrix | enum | count | mindist
    | gray | dual | oracle-check

Code documents are JSON with ascending-power coefficient arrays:

    {"n": 3, "alphas": [8, 5, 5],
     "a": [[[1,0,1]], [[3,0,2],[3]], [[3,2],[3],[3,0,2]]],
     "l": [[[1,1]], [[1,1],[0,3]]]}

Out-of-range coefficients are schema errors, never silently reduced.
Stdout is deterministic for identical invocations (wall time goes to
stderr); exit codes are 0 on success, 1 on validation failure, 2 on
budget or schema errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .closure import module_closure
from .codespace import AlphabetProfile, BudgetExceeded
from .duality import brute_force_dual
from .generators import StructuredGenerators, derive_cofactors, validate_generators
from .metrics import gray_map, mixed_weight
from .modring import Poly
from .spanning import (
    build_spanning_set,
    codeword_count_exponent,
    diff_against_reference,
    iter_codeword_range,
    matrix_to_csv,
    matrix_to_json_payload,
    parse_matrix_csv,
    span_size,
)

DEFAULT_ENUM_BUDGET = 1 << 16
DEFAULT_SPACE_BUDGET = 1 << 20


class SchemaError(ValueError):
    """Malformed code document; the message carries the offending path."""


@dataclass
class RunReport:
    command: str
    digest: str
    payload: dict
    warnings: list = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self):
        doc = {
            "command": self.command,
            "digest": self.digest,
            "payload": self.payload,
            "warnings": self.warnings,
        }
        return json.dumps(doc, sort_keys=True, indent=2)


def _expect(cond, path, msg):
    if not cond:
        raise SchemaError(f"{path}: {msg}")


def _coeff_array(raw, path, level, max_len=None):
    _expect(isinstance(raw, list), path, "expected a coefficient array")
    mod = 1 << level
    for pos, v in enumerate(raw):
        _expect(isinstance(v, int) and not isinstance(v, bool), f"{path}[{pos}]",
                "coefficient must be an integer")
        _expect(0 <= v < mod, f"{path}[{pos}]",
                f"coefficient {v} out of range [0, {mod}) for level {level}")
    if max_len is not None:
        trimmed = len(raw)
        while trimmed and raw[trimmed - 1] == 0:
            trimmed -= 1
        _expect(trimmed <= max_len, path,
                f"degree {trimmed - 1} too large (limit {max_len - 1})")
    return Poly(tuple(raw), level)


def load_code_spec(text: str) -> StructuredGenerators:
    """Parse and validate a code document; errors identify the field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"not valid JSON: {err}") from err
    _expect(isinstance(doc, dict), "$", "document must be a JSON object")
    allowed = {"n", "alphas", "a", "l", "allow_nonstandard_profile"}
    for key in doc:
        _expect(key in allowed, key, "unknown field")

    n = doc.get("n")
    _expect(isinstance(n, int) and n >= 1, "n", "must be an integer >= 1")
    alphas = doc.get("alphas")
    _expect(isinstance(alphas, list) and len(alphas) == n, "alphas",
            f"must be a list of {n} lengths")
    for i, a in enumerate(alphas):
        _expect(isinstance(a, int) and a >= 1, f"alphas[{i}]", "must be >= 1")
    allow = doc.get("allow_nonstandard_profile", False)
    _expect(isinstance(allow, bool), "allow_nonstandard_profile", "must be a boolean")
    try:
        profile = AlphabetProfile(alphas, allow_nonstandard=allow)
    except ValueError as err:
        raise SchemaError(f"alphas: {err}") from err

    a_doc = doc.get("a")
    _expect(isinstance(a_doc, list) and len(a_doc) == n, "a",
            f"must hold one layer list per level (n={n})")
    a_layers = []
    for i, layer in enumerate(a_doc, start=1):
        _expect(isinstance(layer, list) and len(layer) == i, f"a[{i - 1}]",
                f"level {i} needs exactly {i} layer arrays")
        polys = []
        for j, arr in enumerate(layer):
            p = _coeff_array(arr, f"a[{i - 1}][{j}]", i, max_len=alphas[i - 1] + 1)
            _expect(not p.is_zero(), f"a[{i - 1}][{j}]",
                    "zero layer; write x^alpha - 1 for an absent layer")
            polys.append(p)
        a_layers.append(tuple(polys))

    l_doc = doc.get("l", [])
    if n == 1:
        _expect(l_doc in ([],), "l", "must be absent or empty when n = 1")
    else:
        _expect(isinstance(l_doc, list) and len(l_doc) == n - 1, "l",
                f"must hold one mixing list per level 2..{n}")
    l_mix = []
    for i, mix in enumerate(l_doc, start=2):
        _expect(isinstance(mix, list) and len(mix) == i - 1, f"l[{i - 2}]",
                f"level {i} needs exactly {i - 1} mixing arrays")
        polys = []
        for j, arr in enumerate(mix, start=1):
            p = _coeff_array(arr, f"l[{i - 2}][{j - 1}]", i, max_len=alphas[j - 1])
            polys.append(p)
        l_mix.append(tuple(polys))

    try:
        return StructuredGenerators(profile, tuple(a_layers), tuple(l_mix))
    except ValueError as err:
        raise SchemaError(str(err)) from err


class ValidationFailure(Exception):
    def __init__(self, report):
        self.report = report
        super().__init__("generator family fails validation")


def _validated(gens, extend_iv=False):
    report = validate_generators(gens, extend_iv=extend_iv)
    if not report.passed:
        raise ValidationFailure(report)
    return report


def _chunks(total, workers):
    workers = max(1, min(workers, total)) if total else 1
    step = (total + workers - 1) // workers if total else 1
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _cmd_validate(gens, args):
    report = validate_generators(gens, extend_iv=args.extend_iv)
    payload = report.to_payload()
    lines = report.to_lines()
    return payload, lines, [dict(w) for w in report.warnings], not report.passed


def _cmd_cofactors(gens, args):
    _validated(gens)
    c = derive_cofactors(gens)
    lines = []
    payload = {"h": [], "m": [], "d": []}
    for (i, j), p in sorted(c.h.items()):
        lines.append(f"h[{i}][{j}] = {p} (rows {c.h_rows[(i, j)]})")
        payload["h"].append({"level": i, "index": j, "poly": list(p.coeffs),
                             "rows": c.h_rows[(i, j)]})
    for (i, j), p in sorted(c.m.items()):
        lines.append(f"m[{i}][{j}] = {p} (rows {c.m_rows[(i, j)]})")
        payload["m"].append({"level": i, "index": j, "poly": list(p.coeffs),
                             "rows": c.m_rows[(i, j)]})
    for i, p in sorted(c.d.items()):
        lines.append(f"d[{i}] = {p}")
        payload["d"].append({"level": i, "poly": list(p.coeffs)})
    return payload, lines, [dict(w) for w in c.warnings], False


def _spanning(gens):
    c = derive_cofactors(gens)
    return c, build_spanning_set(gens, c)


def _cmd_span(gens, args):
    _validated(gens)
    c, s = _spanning(gens)
    lines = [f"rows={len(s.rows)}"]
    for (i, j, k), row in s.rows:
        lines.append(f"{i},{j},{k}: {row.to_text()}")
    payload = {
        "counts": [
            {"level": i, "index": j, "rows": cnt}
            for (i, j), cnt in sorted(s.counts.items())
        ],
        "rows": [
            {"label": [i, j, k], "codeword": row.to_text()}
            for (i, j, k), row in s.rows
        ],
    }
    return payload, lines, [dict(w) for w in s.warnings], False


def _cmd_matrix(gens, args):
    _validated(gens)
    _, s = _spanning(gens)
    warnings = [dict(w) for w in s.warnings]
    if args.diff:
        with open(args.diff) as fh:
            ref = parse_matrix_csv(gens.profile, fh.read())
        diff = diff_against_reference(s, ref)
        payload = {"matrix": matrix_to_json_payload(s), "diff": diff}
        lines = [matrix_to_csv(s)] if s.rows else []
        lines.append(f"# diff against {args.diff}")
        for d in diff["duplicate_reference_rows"]:
            lines.append(
                f"# duplicate reference row {d['reference_row']} "
                f"(same as row {d['duplicate_of']})")
        for d in diff["unmatched_reference_rows"]:
            lines.append(f"# unexplained reference row {d['reference_row']}")
        for d in diff["unmatched_produced_rows"]:
            lab = ",".join(str(x) for x in d["label"])
            kind = "zero row" if d["zero_row"] else "row"
            lines.append(f"# produced {kind} {lab} absent from reference")
        return payload, lines, warnings, False
    if args.format == "json":
        payload = matrix_to_json_payload(s)
        lines = [json.dumps(payload, sort_keys=True, indent=2)]
    else:
        payload = matrix_to_json_payload(s)
        lines = [matrix_to_csv(s)] if s.rows else []
    return payload, lines, warnings, False


def _cmd_enum(gens, args):
    _validated(gens)
    c, s = _spanning(gens)
    total = span_size(s)
    if total > args.budget_enum:
        raise BudgetExceeded(f"2^{codeword_count_exponent(c)} combinations, "
                             f"budget {args.budget_enum}")
    def render(rng):
        return [w.to_text() for w in iter_codeword_range(s, *rng)]

    chunks = _chunks(total, args.threads)
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rendered = list(pool.map(render, chunks))
    else:
        rendered = [render(rng) for rng in chunks]
    lines = []
    distinct = set()
    for chunk in rendered:
        lines.extend(chunk)
        distinct.update(chunk)
    expected = codeword_count_exponent(c)
    warnings = [dict(w) for w in s.warnings]
    if len(distinct) != 1 << expected:
        warnings.append({
            "code": "minimality_violation",
            "detail": f"distinct {len(distinct)} != 2^{expected}"})
    lines.append(f"# distinct={len(distinct)} stream={total}")
    payload = {"distinct": len(distinct), "stream": total, "exponent": expected}
    return payload, lines, warnings, False


def _cmd_count(gens, args):
    _validated(gens)
    c = derive_cofactors(gens)
    t = codeword_count_exponent(c)
    lines = [f"t={t}, |C|={1 << t}"]
    return {"exponent": t, "count": 1 << t}, lines, [dict(w) for w in c.warnings], False


def _cmd_mindist(gens, args):
    _validated(gens)
    c, s = _spanning(gens)
    total = span_size(s)
    if total > args.budget_enum:
        raise BudgetExceeded(f"2^{codeword_count_exponent(c)} combinations, "
                             f"budget {args.budget_enum}")

    def scan(rng):
        best = None
        dist = {}
        for w in iter_codeword_range(s, *rng):
            wt = mixed_weight(w)
            dist[wt] = dist.get(wt, 0) + 1
            if wt and (best is None or wt < best):
                best = wt
        return best, dist

    chunks = _chunks(total, args.threads)
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(scan, chunks))
    else:
        results = [scan(rng) for rng in chunks]
    best = None
    dist = {}
    for b, d in results:
        if b is not None and (best is None or b < best):
            best = b
        for wt, cnt in d.items():
            dist[wt] = dist.get(wt, 0) + cnt
    lines = ["d=undefined (no nonzero codeword)" if best is None else f"d={best}"]
    if args.distribution:
        lines.append("weight,count")
        for wt in sorted(dist):
            lines.append(f"{wt},{dist[wt]}")
    payload = {"min_distance": best,
               "distribution": {str(wt): dist[wt] for wt in sorted(dist)},
               "stream": total}
    return payload, lines, [dict(w) for w in s.warnings], False


def _cmd_dual(gens, args):
    _validated(gens)
    res = brute_force_dual(gens.generator_codewords(), gens.profile,
                           budget=args.budget_space, threads=args.threads)
    lines = [f"dual_count={res.dual_count}",
             f"cyclic={'true' if res.cyclic_flag else 'false'}"]
    lines.extend(w.to_text() for w in res.dual_codewords)
    payload = {"dual_count": res.dual_count, "cyclic": res.cyclic_flag,
               "dual": [w.to_text() for w in res.dual_codewords]}
    return payload, lines, [], False


def _cmd_oracle_check(gens, args):
    _validated(gens)
    c, s = _spanning(gens)
    total = span_size(s)
    if total > args.budget_enum:
        raise BudgetExceeded(f"2^{codeword_count_exponent(c)} combinations, "
                             f"budget {args.budget_enum}")
    enumerated = {w.flat() for w in iter_codeword_range(s, 0, total)}
    oracle = module_closure(gens.generator_codewords(), budget=args.budget_enum)
    if not oracle.saturated:
        raise BudgetExceeded("module closure exceeded the enumeration budget")
    equal = enumerated == set(oracle.elements)
    lines = [f"equal={'true' if equal else 'false'}",
             f"enumerated={len(enumerated)}",
             f"closure={len(oracle)}"]
    payload = {"equal": equal, "enumerated": len(enumerated), "closure": len(oracle)}
    warnings = [] if equal else [{"code": "oracle_mismatch",
                                  "detail": "enumeration differs from module closure"}]
    return payload, lines, warnings, False


def _cmd_gray(args):
    bits = gray_map(args.value, args.level)
    text = "".join(str(b) for b in bits)
    return {"level": args.level, "value": args.value, "bits": text}, [text], [], False


_FILE_COMMANDS = {
    "validate": _cmd_validate,
    "cofactors": _cmd_cofactors,
    "span": _cmd_span,
    "matrix": _cmd_matrix,
    "enum": _cmd_enum,
    "count": _cmd_count,
    "mindist": _cmd_mindist,
    "dual": _cmd_dual,
    "oracle-check": _cmd_oracle_check,
}


def dispatch(command, args) -> tuple[RunReport, list, int]:
    """Run one command; returns (report, output lines, exit code)."""
    start = time.perf_counter()
    if command == "gray":
        digest = hashlib.sha256(f"gray:{args.level}:{args.value}".encode()).hexdigest()
        payload, lines, warnings, failed = _cmd_gray(args)
    else:
        with open(args.document) as fh:
            text = fh.read()
        digest = hashlib.sha256(text.encode()).hexdigest()
        gens = load_code_spec(text)
        try:
            payload, lines, warnings, failed = _FILE_COMMANDS[command](gens, args)
        except ValidationFailure as err:
            payload = {"validation": err.report.to_payload()}
            lines = err.report.to_lines()
            warnings = [dict(w) for w in err.report.warnings]
            failed = True
    report = RunReport(command, digest, payload, warnings,
                       time.perf_counter() - start)
    return report, lines, 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mixedcyclic",
        description="additive cyclic codes over Z2 x Z4 x ... x Z2^n")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, document=True):
        if document:
            p.add_argument("document", help="JSON code document")
        p.add_argument("--json", action="store_true",
                       help="emit the full run report as JSON")
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap for partitioned scans")
        p.add_argument("--budget-enum", type=int, default=DEFAULT_ENUM_BUDGET,
                       help="max enumerated codewords")
        p.add_argument("--budget-space", type=int, default=DEFAULT_SPACE_BUDGET,
                       help="max ambient-space scan size")

    p = sub.add_parser("validate", help="check the generator conditions")
    common(p)
    p.add_argument("--extend-iv", action="store_true",
                   help="note the (vacuous) extension of condition (iv) to i=n")
    for name in ("cofactors", "span", "count", "dual", "oracle-check"):
        common(sub.add_parser(name))
    p = sub.add_parser("matrix", help="emit the generator matrix")
    common(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--diff", metavar="REFERENCE.csv",
                   help="structured diff against a reference matrix")
    common(sub.add_parser("enum", help="stream all codewords"))
    p = sub.add_parser("mindist", help="exhaustive minimum distance")
    common(p)
    p.add_argument("--distribution", action="store_true",
                   help="also print the weight distribution CSV")
    p = sub.add_parser("gray", help="Gray image of one residue")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, lines, code = dispatch(args.command, args)
    except (SchemaError, BudgetExceeded, OSError, ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.json:
        print(report.to_json())
    else:
        for line in lines:
            print(line)
    print(f"# wall_time={report.wall_time:.6f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

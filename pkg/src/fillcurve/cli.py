"""Command-line front end.

    fillcurve verify --q 2,3 [--deep]
    fillcurve classify --q 4 [--format csv]
    fillcurve curve --q 2 --cubic 0,1,1
    fillcurve centralizer --q 3 --n 2 --poly 1,0

``--cubic c,b,a`` means t^3 - (c t^2 + b t + a).  ``--poly`` lists the
ordinary coefficients c_0, ..., c_{n-1} of the monic t^n + ... + c_0.
Exit status: 0 all checks pass, 1 some check fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import suite
from .autgroup import enumerate_aut
from .centralizer import centralizer_report
from .classify import classes
from .ffield import field_of_order, prime_power
from .forms import build_FA, format_form
from .linalg import MonicPoly, split_top_level
from .smooth import cubic_companion, smoothness_report

SCHEMA = "fillcurve/1"


class UsageError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("FILLCURVE_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"FILLCURVE_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise UsageError("FILLCURVE_THREADS must be a positive integer")
    return n


def _parse_q_list(text: str) -> list[int]:
    try:
        qs = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"malformed --q {text!r}")
    if not qs:
        raise UsageError("--q is empty")
    return qs


def _field(q: int, limit: int = 5):
    if prime_power(q) is None:
        raise UsageError(f"q = {q} is not a prime power")
    if q > limit:
        raise UsageError(f"q = {q} is not supported (q <= {limit})")
    return field_of_order(q)


def _parse_elements(text: str, ctx, count: int, flag: str):
    parts = split_top_level(text)
    if len(parts) != count:
        raise UsageError(f"{flag} needs {count} comma-separated entries, got {len(parts)}")
    try:
        return [ctx.parse(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"malformed {flag}: {exc}")


# --------------------------------------------------------------------------
# commands; each returns (checks, report)

def cmd_verify(args):
    qs = _parse_q_list(args.q)
    for q in qs:
        try:
            suite.validate_q(q, args.deep)
        except ValueError as exc:
            raise UsageError(str(exc))
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        per_q = list(pool.map(lambda q: suite.run_checks(q, args.deep), qs))
    return [c for checks in per_q for c in checks], None


def cmd_classify(args):
    q = _single_q(args.q)
    _field(q, limit=9)
    rep = classes(q)
    ok = sum(rep.class_sizes) == (q ** 3 - q) // 3
    check = suite.Check("class_partition", q, ok,
                        None if ok else {"sizes": rep.class_sizes})
    return [check], rep.to_dict()


def cmd_curve(args):
    q = _single_q(args.q)
    ctx = _field(q)
    if args.cubic is None:
        raise UsageError("curve needs --cubic c,b,a")
    cubic = tuple(_parse_elements(args.cubic, ctx, 3, "--cubic"))
    degrees = suite.scan_degrees(q, args.deep)
    rep = smoothness_report(q, cubic, degrees)
    A = cubic_companion(cubic, ctx)
    report = {
        "F": format_form(build_FA(A)),
        "smooth": rep.criterion_result,
        **{k: v for k, v in rep.to_dict().items() if k not in ("q",)},
    }
    checks = [suite.Check("criterion_matches_scan", q, rep.consistent,
                          None if rep.consistent else {"cubic": report["cubic"]})]
    bad = [k for k, v in rep.identity_results.items() if not v]
    if rep.identity_results:
        checks.append(suite.Check("proof_identities", q, not bad,
                                  {"failed": bad} if bad else None))
    if rep.criterion_result:
        aut = enumerate_aut(A)
        report["automorphisms"] = aut.to_dict(with_elements=args.elements and q <= 4)
    return checks, report


def cmd_centralizer(args):
    q = _single_q(args.q)
    ctx = _field(q)
    if args.poly is None or args.n is None:
        raise UsageError("centralizer needs --n and --poly")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    f = MonicPoly(_parse_elements(args.poly, ctx, args.n, "--poly"), ctx)
    if not f.is_irreducible():
        raise UsageError(f"{f} is reducible over F_{q}")
    rep = centralizer_report(f)
    d = rep.to_dict()
    n = args.n
    checks = [
        suite.Check("z_gl_order", q, rep.z_gl_order == q ** n - 1),
        suite.Check("pgl_image_order", q, rep.pgl_image_order == (q ** n - 1) // (q - 1)),
        suite.Check("support_biconditional", q,
                    (rep.pi_image_order > 1) == rep.support_condition_holds),
        suite.Check("z_pgl_product", q,
                    rep.z_pgl_order == rep.pgl_image_order * rep.pi_image_order),
    ]
    for c in checks:
        if not c.ok:
            c.witness = {"poly": d["poly"]}
    return checks, d


def _single_q(text: str) -> int:
    qs = _parse_q_list(text)
    if len(qs) != 1:
        raise UsageError("this command takes a single q")
    return qs[0]


COMMANDS = {
    "verify": cmd_verify,
    "classify": cmd_classify,
    "curve": cmd_curve,
    "centralizer": cmd_centralizer,
}


# --------------------------------------------------------------------------
# output

def build_result(argv_echo, checks, report) -> dict:
    passed = sum(c.ok for c in checks)
    out = {
        "schema": SCHEMA,
        "command": argv_echo,
        "checks": [c.to_dict() for c in checks],
        "counts": {"total": len(checks), "passed": passed, "failed": len(checks) - passed},
    }
    if report is not None:
        out["report"] = report
    out["status"] = "pass" if passed == len(checks) else "fail"
    out["exit_status"] = 0 if passed == len(checks) else 1
    return out


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        report = result.get("report") or {}
        if "classes" in report:
            w.writerow(["q", "representative", "size", "labels"])
            for c in report["classes"]:
                w.writerow([report["q"], c["representative"], c["size"], ";".join(c["labels"])])
        else:
            w.writerow(["q", "check", "status", "witness"])
            for c in result["checks"]:
                wit = json.dumps(c["witness"], ensure_ascii=False) if "witness" in c else ""
                w.writerow([c["q"], c["name"], c["status"], wit])
        return buf.getvalue()
    lines = [f"fillcurve {' '.join(result['command'])}"]
    report = result.get("report")
    if report is not None:
        lines.extend(_text_report(report))
    for c in result["checks"]:
        line = f"  [{c['status'].upper()}] q={c['q']} {c['name']}"
        if "witness" in c:
            line += f"  witness={json.dumps(c['witness'], ensure_ascii=False)}"
        lines.append(line)
    counts = result["counts"]
    lines.append(f"{counts['passed']}/{counts['total']} checks passed")
    return "\n".join(lines) + "\n"


def _text_report(report: dict) -> list[str]:
    if "classes" in report:
        out = [f"q={report['q']}: {report['irreducible_cubics']} irreducible cubics, "
               f"{len(report['classes'])} classes"]
        for c in report["classes"]:
            out.append(f"  {c['representative']}  size {c['size']}  {','.join(c['labels'])}")
        return out
    if "F" in report:
        out = [f"cubic {report['cubic']}", f"F = {report['F']}",
               f"smooth: {report['smooth']}"]
        for m, pts in report["scan"]["singular_points"].items():
            if pts:
                out.append(f"  singular over F_q^{m}: {' '.join(pts)}")
        if "automorphisms" in report:
            a = report["automorphisms"]
            out.append(f"|Aut| = {a['order']} (Singer {a['singer_order']}, "
                       f"quotient {a['quotient']})")
        return out
    return [f"  {k}: {v}" for k, v in report.items()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fillcurve", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", required=True, help="field order (comma list for verify)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p = sub.add_parser("verify", help="run the verification suite for each q")
    common(p)
    p.add_argument("--deep", action="store_true", help="add the m = 6 scan layer (q <= 4)")

    p = sub.add_parser("classify", help="projective classes of the smooth curves")
    common(p)

    p = sub.add_parser("curve", help="F, smoothness evidence and |Aut| for one cubic")
    common(p)
    p.add_argument("--cubic", help="c,b,a for t^3 - (c t^2 + b t + a)")
    p.add_argument("--deep", action="store_true", help="add the m = 6 scan layer (q <= 4)")
    p.add_argument("--elements", action="store_true", help="list Aut elements (q <= 4)")

    p = sub.add_parser("centralizer", help="centralizer report for a monic irreducible poly")
    common(p)
    p.add_argument("--n", type=int, help="degree")
    p.add_argument("--poly", help="c_0,...,c_{n-1} of t^n + ... + c_0")
    return parser


def _echo(argv: list[str]) -> list[str]:
    """The argument list without --out, so output bytes do not depend on the destination."""
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a == "--out":
            skip = True
        elif not a.startswith("--out="):
            out.append(a)
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)           # exits with status 2 on bad flags
    start = time.perf_counter()
    try:
        checks, report = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fillcurve: error: {exc}", file=sys.stderr)
        return 2
    result = build_result(_echo(argv), checks, report)
    text = render(result, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    if args.format == "text":
        print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return result["exit_status"]


if __name__ == "__main__":
    raise SystemExit(main())

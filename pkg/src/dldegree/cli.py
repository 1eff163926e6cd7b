"""Command-line front end.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage
errors and exceeded enumeration budgets.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from math import factorial

from . import hermitian, qseries
from .multipoly import degree_via_coeff
from .partitions import (
    Partition,
    SkewShape,
    aitken_count,
    box_partitions,
    count_skew_syt,
    count_skew_syt_det,
    dl_outer,
    dl_skew_shape,
    dual,
    ordered_partition_count,
)
from .qseries import QPoly, q_double_factorial
from .schubert import GrassBox, SchubertExpr, degree_via_schubert, dl_class, pairing
from .schur import verify_dual_cauchy

DEFAULT_LIMITS = {"coeff": 5, "schubert": 6, "closed": None}


class UsageError(Exception):
    pass


def encode(value):
    """JSON form of a computed value."""
    if isinstance(value, QPoly):
        return value.to_json()
    if isinstance(value, SchubertExpr):
        return value.to_json()
    if isinstance(value, (Partition, SkewShape)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def render(value):
    """Text form of a computed value."""
    if isinstance(value, (QPoly, SchubertExpr, Partition, SkewShape)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(render(v) for v in value) + ")"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    results: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    elapsed_ms: int = 0

    def result(self, name, value):
        self.results.append({"name": name, "value": encode(value), "text": render(value)})

    def check(self, name, expected, actual):
        e, a = encode(expected), encode(actual)
        ok = e == a
        self.checks.append(
            {"name": name, "expected": e, "actual": a, "pass": ok,
             "expected_text": render(expected), "actual_text": render(actual)}
        )
        return ok

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)

    def to_json(self):
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))

    def to_text(self):
        lines = [f"command: {self.command}"]
        for k, v in self.inputs.items():
            lines.append(f"  {k} = {v}")
        for r in self.results:
            lines.append(f"{r['name']}: {r['text']}")
        for c in self.checks:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(f"[{status}] {c['name']}: expected {c['expected_text']}, got {c['actual_text']}")
        if self.checks:
            total = len(self.checks)
            good = sum(c["pass"] for c in self.checks)
            lines.append(f"{good}/{total} checks passed")
        lines.append(f"elapsed: {self.elapsed_ms} ms")
        return "\n".join(lines) + "\n"


def _require(cond, message):
    if not cond:
        raise UsageError(message)


# -- commands -----------------------------------------------------------------


def cmd_degree(d, method="all", max_d=None):
    _require(d is not None and d >= 1, "--d must be a positive integer")
    methods = ["closed", "schubert", "coeff"] if method == "all" else [method]
    for m in methods:
        limit = DEFAULT_LIMITS[m] if max_d is None else max_d
        if m != "closed" or max_d is not None:
            _require(limit is None or d <= limit, f"d={d} exceeds the limit {limit} for method {m}")
    report = RunReport("degree", {"d": d, "method": method})
    compute = {"closed": q_double_factorial, "schubert": degree_via_schubert, "coeff": degree_via_coeff}
    values = {}
    for m in methods:
        values[m] = compute[m](d)
        report.result(m, values[m])
    if method == "all":
        report.check("closed == schubert", values["closed"], values["schubert"])
        report.check("closed == coeff", values["closed"], values["coeff"])
        report.check("schubert == coeff", values["schubert"], values["coeff"])
    return report


def cmd_class(d):
    _require(d is not None and 1 <= d <= 5, "--d must be between 1 and 5")
    report = RunReport("class", {"d": d})
    expr = dl_class(d)
    report.result("dl_class", expr)
    report.check("codimension", [d * d], sorted(expr.codimensions()))
    return report


def _syt_rows(d, l):
    rows = []
    for c in box_partitions(d, l):
        shape = dl_skew_shape(c, d)
        if shape is None:
            rows.append((c, f"{dl_outer(c, d)}/{c}", 0))
        else:
            rows.append((c, str(shape), count_skew_syt(shape)))
    return rows


def cmd_syt(d, l=None):
    _require(d is not None and 1 <= d <= 6, "--d must be between 1 and 6")
    _require(l is None or 0 <= l <= d * d, f"--l must lie in [0, {d * d}]")
    report = RunReport("syt", {"d": d, "l": l})
    levels = range(d * d + 1) if l is None else [l]
    closed = q_double_factorial(d)
    for lv in levels:
        rows = _syt_rows(d, lv)
        for c, shape, count in rows:
            report.result(f"l={lv} c={c} shape={shape}", count)
        total = sum(r[2] for r in rows)
        report.check(f"l={lv} SYT total == ordered partitions", ordered_partition_count(d, lv), total)
        report.check(f"l={lv} SYT total == q^{lv} coefficient", closed[lv], total)
    return report


def cmd_cauchy(d):
    _require(d is not None and 1 <= d <= 5, "--d must be between 1 and 5")
    report = RunReport("cauchy", {"d": d})
    report.check(f"dual Cauchy d={d}", True, verify_dual_cauchy(d))
    return report


def cmd_finite(q, check, n=None, d=None, budget=hermitian.DEFAULT_BUDGET):
    _require(q in hermitian.CONWAY, f"--q must be one of {sorted(hermitian.CONWAY)}")
    report = RunReport("finite", {"q": q, "check": check, "n": n, "d": d, "budget": budget})
    if check in ("isotropic", "special"):
        _require(n is not None and n >= 1 and n % 2 == 1, "--n must be an odd positive integer")
        formula = qseries.isotropic_line_count_formula(n)(q)
        if check == "isotropic":
            count = hermitian.count_isotropic_lines(n, q, budget)
            report.result("isotropic lines", count)
            report.check("brute force == formula", formula, count)
        else:
            hs = hermitian.HermSpace(q, n, budget)
            special = hermitian.enumerate_special_subspaces(1, hs)
            report.result("codim-1 special subspaces", len(special))
            report.check("count == formula", formula, len(special))
            bad = sum(1 for W in special if not (W.orth().dim == 1 and W.orth().is_totally_isotropic()))
            report.check("every W^perp is an isotropic line", 0, bad)
    elif check == "dl":
        _require(d is not None and d >= 0, "--d must be a nonnegative integer")
        count = hermitian.count_dl_points(d, q, budget)
        report.result("DL points", count)
        if d == 0:
            report.check("d=0 gives V itself", 1, count)
        elif d == 1:
            report.check("Fermat curve points", hermitian.fermat_point_count(q, budget), count)
            report.check("1 + q^3", qseries.isotropic_line_count_formula(3)(q), count)
        else:
            hs = hermitian.HermSpace(q, 2 * d + 1, budget)
            frames = hermitian.count_isotropic_frames(hs, d)
            report.check("isotropic frames / |GL_d|", frames // hermitian.gl_order(d, q * q), count)
    elif check == "pairs":
        _require(d is not None and d >= 2, "--d must be at least 2")
        a, b, c = hermitian.classify_pairs(d, q, budget)
        report.result("case counts (a, b, c)", [a, b, c])
        report.check("case a formula", qseries.line_count_formula(d - 1)(q), a)
        report.check("case b formula", qseries.case_b_count_formula(d)(q), b)
        report.check("a + b + c == isotropic lines", qseries.isotropic_line_count_formula(2 * d + 1)(q), a + b + c)
    else:
        raise UsageError(f"unknown --check {check!r}")
    return report


def cmd_verify(max_d, with_finite=False, budget=hermitian.DEFAULT_BUDGET):
    _require(max_d is not None and 1 <= max_d <= 6, "--max-d must be between 1 and 6")
    report = RunReport("verify", {"max_d": max_d, "with_finite": with_finite})
    for d in range(1, max_d + 1):
        closed = q_double_factorial(d)
        report.check(f"d={d} closed == schubert", closed, degree_via_schubert(d))
        if d <= 5:
            report.check(f"d={d} closed == coeff", closed, degree_via_coeff(d))
        report.check(f"d={d} palindromic", True, closed.is_palindromic())
        report.check(f"d={d} value at q=1", 2 ** d * factorial(d), closed(1))
    for d in range(1, min(max_d, 4) + 1):
        report.check(f"dual Cauchy d={d}", True, verify_dual_cauchy(d))
    for d in range(1, max_d + 1):
        mismatches = 0
        for lv in range(d * d + 1):
            total = 0
            for c in box_partitions(d, lv):
                shape = dl_skew_shape(c, d)
                if shape is None:
                    mismatches += aitken_count(dl_outer(c, d), c) != 0
                    continue
                count = count_skew_syt(shape)
                mismatches += count != count_skew_syt_det(shape)
                total += count
            report.check(f"d={d} l={lv} SYT == ordered partitions", ordered_partition_count(d, lv), total)
        report.check(f"d={d} SYT backtracking == determinant", 0, mismatches)
    pair_bound = min(max_d + 2, 7)
    bad = 0
    for size in range(2, pair_bound + 1):
        for m in range(1, size):
            box = GrassBox(m, size - m)
            for a in box.partitions():
                for b in box.partitions(box.dim - a.weight):
                    bad += pairing(a, b, box) != int(b == dual(a, box.m, box.w))
    report.check(f"duality pairing, boxes with m+w <= {pair_bound}", 0, bad)
    if with_finite:
        for n in (3, 5, 7):
            report.check(
                f"isotropic lines n={n} q=2",
                qseries.isotropic_line_count_formula(n)(2),
                hermitian.count_isotropic_lines(n, 2, budget),
            )
        report.check("DL points d=1 q=2", 9, hermitian.count_dl_points(1, 2, budget))
        a, b, c = hermitian.classify_pairs(2, 2, budget)
        report.check("pairs d=2 q=2 case a", 1, a)
        report.check("pairs d=2 q=2 case b", 36, b)
        report.check("pairs d=2 q=2 total", 165, a + b + c)
    return report


# -- argument parsing ---------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dldegree",
        description="Degrees of odd unitary Deligne-Lusztig varieties, cross-checked three ways.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", parents=[common], help="degree by closed form, Schubert calculus, or coefficient")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=["closed", "schubert", "coeff", "all"], default="all")
    p.add_argument("--max-d", type=int, default=None, help="override the per-method limit on d")

    p = sub.add_parser("class", parents=[common], help="class of DL(V) in the Schubert basis")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("syt", parents=[common], help="skew SYT counts against ordered partitions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l", type=int, default=None)

    p = sub.add_parser("cauchy", parents=[common], help="check the dual Cauchy identity")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("finite", parents=[common], help="brute-force hermitian geometry counts")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--check", choices=["isotropic", "special", "dl", "pairs"], required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--budget", type=int, default=hermitian.DEFAULT_BUDGET)

    p = sub.add_parser("verify", parents=[common], help="run every identity check")
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--with-finite", action="store_true")
    p.add_argument("--budget", type=int, default=hermitian.DEFAULT_BUDGET)
    return parser


def run(args):
    if args.command == "degree":
        return cmd_degree(args.d, args.method, args.max_d)
    if args.command == "class":
        return cmd_class(args.d)
    if args.command == "syt":
        return cmd_syt(args.d, args.l)
    if args.command == "cauchy":
        return cmd_cauchy(args.d)
    if args.command == "finite":
        return cmd_finite(args.q, args.check, args.n, args.d, args.budget)
    if args.command == "verify":
        return cmd_verify(args.max_d, args.with_finite, args.budget)
    raise UsageError(f"unknown command {args.command}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = run(args)
    except (UsageError, hermitian.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    out = report.to_json() if args.format == "json" else report.to_text()
    sys.stdout.write(out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

``--n`` is the polynomial subscript (matrix dimension) for the O, L, P and R
families, so ``dist --family R --n 3`` prints R_3. For ``--family total`` it is
the ladder parameter: the graph is R_{n-1} with (n+1) x (n+1) overlap matrices.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import distributions as dist
from .errata import DEFAULT_LIMIT, errata_report, render_report
from .exact_poly import ExactPoly, TotalPoly
from .families import Family
from .overlap_enum import InfeasibleError, brute_rank_distribution
from .rotation_oracle import total_poly_by_tracing, trace_audit

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INFEASIBLE = 2
EXIT_USAGE = 64

FAMILIES = ("O", "L", "P", "R", "total")
DIST_METHODS = ("bruteforce", "recurrence", "closed", "chebyshev", "trace")

# Printed total embedding polynomials for n = 2..6.
PUBLISHED_LINES = (
    "2+14x+14y+42y^2+56y^3",
    "2+38x+24x^2+22y+122y^2+424y^3+392y^4",
    "2+70x+184x^2+30y+242y^2+1448y^3+3272y^4+2944y^5",
    "2+118x+648x^2+256x^3+38y+410y^2+3496y^3+12952y^4+26880y^5+20736y^6",
    "2+198x+1656x^2+2240x^3+46y+642y^2+7240y^3+36808y^4+120832y^5+207168y^6+147456y^7",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class OutputRecord:
    family: str
    n: int
    method: str
    genus: Optional[list[str]] = None
    crosscap: Optional[list[str]] = None
    coeffs: Optional[list[str]] = None
    elapsed_ms: int = 0
    checks: dict[str, bool] = field(default_factory=dict)

    @classmethod
    def for_poly(cls, family: str, n: int, method: str, poly: ExactPoly, **kw) -> OutputRecord:
        return cls(family, n, method, coeffs=[str(c) for c in poly.to_ints()], **kw)

    @classmethod
    def for_total(cls, n: int, method: str, total: TotalPoly, **kw) -> OutputRecord:
        return cls(
            "total", n, method,
            genus=[str(c) for c in total.genus.to_ints()],
            crosscap=[str(c) for c in total.crosscap.to_ints()],
            **kw,
        )

    def poly(self) -> ExactPoly:
        return ExactPoly(int(c) for c in self.coeffs or ())

    def total(self) -> TotalPoly:
        return TotalPoly(
            ExactPoly(int(c) for c in self.genus or ()),
            ExactPoly(int(c) for c in self.crosscap or ()),
        )

    def to_json(self) -> str:
        d = {k: v for k, v in asdict(self).items() if v is not None}
        if not d["checks"]:
            del d["checks"]
        return json.dumps(d)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls(**json.loads(text))

    def to_text(self) -> str:
        if self.family == "total":
            return self.total().render()
        return self.poly().render()

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.family == "total":
            w.writerow(["part", "exponent", "count"])
            for part, cs in (("genus", self.genus), ("crosscap", self.crosscap)):
                for e, c in enumerate(cs or ()):
                    w.writerow([part, e, c])
        else:
            w.writerow(["rank", "count"])
            for e, c in enumerate(self.coeffs or ()):
                w.writerow([e, c])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_text() + "\n"


# -- computations ---------------------------------------------------------

def _require(ok: bool, message: str) -> None:
    if not ok:
        raise UsageError(message)


def family_by_method(fam: Family, k: int, method: str, workers: int, caps) -> ExactPoly:
    _require(k >= fam.min_index, f"{fam.value}_{k} undefined; --n must be >= {fam.min_index}")
    if method == "bruteforce":
        n = fam.param_for(k)
        if n > caps.max_n_brute:
            raise InfeasibleError(f"brute force capped at n <= {caps.max_n_brute}")
        return brute_rank_distribution(fam, n, workers=workers).poly
    if method == "trace":
        _require(fam.bordered, "trace only produces the bordered families P, R and total")
        n = k - 1
        _require(n >= 2, f"trace needs the ladder parameter n = {n} >= 2")
        if fam is Family.P:
            genus = total_poly_by_tracing(n, workers, caps.max_n_trace, orientable_only=True).genus
            # every zero-diagonal matrix comes from two systems
            return ExactPoly(c // 2 for c in genus.substitute_square())
        t = total_poly_by_tracing(n, workers, caps.max_n_trace)
        return ExactPoly(c // 2 for c in t.genus.substitute_square() + t.crosscap)
    if method in ("closed", "chebyshev") and k > caps.max_n_closed:
        raise InfeasibleError(f"closed forms capped at n <= {caps.max_n_closed}")
    return dist.family_poly(fam, k, method, workers)


def total_by_method(n: int, method: str, workers: int, caps) -> TotalPoly:
    _require(n >= 2, "--n must be >= 2 for the total polynomial")
    if method == "trace":
        return total_poly_by_tracing(n, workers, caps.max_n_trace)
    p = family_by_method(Family.P, n + 1, method, workers, caps)
    r = family_by_method(Family.R, n + 1, method, workers, caps)
    return dist.assemble_total(p, r)


def family_sum_checks(fam: Family, k: int, poly: ExactPoly) -> dict[str, bool]:
    return {
        "coefficient_sum": poly(1) == 1 << fam.domain_bits(k),
        "degree_within_dim": poly.degree <= k,
        "nonnegative": all(c >= 0 for c in poly),
    }


def total_sum_checks(n: int, t: TotalPoly) -> dict[str, bool]:
    return {
        "genus_sum": t.genus_sum == 1 << (2 * n),
        "crosscap_sum": t.crosscap_sum == ((1 << (n + 1)) - 1) << (2 * n),
        "total_sum": t.total == 1 << (3 * n + 1),
    }


# -- commands -------------------------------------------------------------

def cmd_dist(args) -> int:
    start = time.perf_counter()
    if args.family == "total":
        t = total_by_method(args.n, args.method, args.workers, args)
        checks = total_sum_checks(args.n, t)
        rec = OutputRecord.for_total(args.n, args.method, t)
    else:
        fam = Family.parse(args.family)
        poly = family_by_method(fam, args.n, args.method, args.workers, args)
        checks = family_sum_checks(fam, args.n, poly)
        rec = OutputRecord.for_poly(fam.value, args.n, args.method, poly)
    rec.elapsed_ms = int((time.perf_counter() - start) * 1000)
    rec.checks = checks
    sys.stdout.write(rec.render(args.format))
    if not all(checks.values()):
        failed = ", ".join(k for k, v in checks.items() if not v)
        print(f"invariant failure: {failed}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


class Verifier:
    """Runs every cross-method comparison and records each outcome."""

    def __init__(self, workers: int = 1):
        self.workers = workers
        self.checks: list[dict] = []

    @property
    def first_failure(self) -> Optional[dict]:
        return next((c for c in self.checks if not c["passed"]), None)

    def record(self, name: str, family: str, n: int, expected=None, got=None, rank=None, passed=None):
        if passed is None:
            passed = expected == got
        entry = {"check": name, "family": family, "n": n, "passed": bool(passed)}
        if not passed:
            entry.update(rank=rank, expected=str(expected), got=str(got))
        self.checks.append(entry)

    def compare_poly(self, name: str, fam: str, n: int, expected: ExactPoly, compute) -> None:
        width = max(expected.degree, 0) + 1
        for m in range(width):
            try:
                got = compute(m)
            except dist.InvariantError as exc:
                self.record(name, fam, n, expected[m], exc, rank=m, passed=False)
                return
            if got != expected[m]:
                self.record(name, fam, n, expected[m], got, rank=m)
                return
        self.record(name, fam, n, passed=True)

    def closed(self, cap: int) -> None:
        for fam in Family:
            for k in range(fam.min_index, cap + 1):
                ref = dist.recurrence_poly(fam, k)
                coeff = dist.CLOSED_COEFF[fam]
                self.compare_poly("closed_vs_recurrence", fam.value, k, ref, lambda m: coeff(k, m))
                cheb = dist.chebyshev_poly(fam, k)
                self.compare_poly("chebyshev_vs_recurrence", fam.value, k, ref, lambda m: cheb[m])
                ok = family_sum_checks(fam, k, ref)
                self.record("family_sums", fam.value, k, passed=all(ok.values()))
        for n in range(2, cap + 1):
            t = dist.total_embedding_poly(n)
            self.record("total_sums", "total", n, passed=all(total_sum_checks(n, t).values()))

    def brute(self, cap: int) -> None:
        for fam in Family:
            for n in range(1, cap + 1):
                k = fam.index_for(n)
                got = brute_rank_distribution(fam, n, workers=self.workers).poly
                ref = dist.recurrence_poly(fam, k)
                self.compare_poly("bruteforce_vs_recurrence", fam.value, k, ref, lambda m: got[m])

    def trace(self, cap: int) -> None:
        for n in range(2, cap + 1):
            audit = trace_audit(n, self.workers, checks=True, max_n=max(cap, n))
            ref = dist.total_embedding_poly(n)
            self.record("trace_vs_recurrence", "total", n, ref.render(), audit.total.render())
            self.record("mohar_rank", "total", n, 0, audit.mohar_exceptions)
            self.record("two_preimages", "total", n, ((2, 1 << (3 * n)),), audit.preimage_histogram)

    def report(self, caps: dict) -> dict:
        return {
            "caps": caps,
            "passed": self.first_failure is None,
            "first_failure": self.first_failure,
            "checks": self.checks,
        }


def run_verify(max_n_brute: int, max_n_trace: int, max_n_closed: int, workers: int = 1) -> dict:
    v = Verifier(workers)
    v.closed(max_n_closed)
    v.brute(max_n_brute)
    v.trace(max_n_trace)
    caps = {"max_n_brute": max_n_brute, "max_n_trace": max_n_trace, "max_n_closed": max_n_closed}
    return v.report(caps)


def cmd_verify(args) -> int:
    report = run_verify(args.max_n_brute, args.max_n_trace, args.max_n_closed, args.workers)
    print(json.dumps(report, indent=1 if args.format == "json" else None))
    bad = report["first_failure"]
    if bad:
        print(
            "first failure: ({family}, {n}, m={rank}, {expected}, {got}) in {check}".format(**bad),
            file=sys.stderr,
        )
        return EXIT_INVARIANT
    return EXIT_OK


def published_table_check() -> list[tuple[int, str, str, bool]]:
    rows = []
    for n, line in enumerate(PUBLISHED_LINES, start=2):
        got = dist.total_embedding_poly(n)
        rows.append((n, line, got.render(), got == TotalPoly.parse(line)))
    return rows


def cmd_table_check(args) -> int:
    rows = published_table_check()
    for n, printed, _got, ok in rows:
        print(f"{'PASS' if ok else 'FAIL'}  n={n}  graph=R_{n - 1}  {printed}")
    return EXIT_OK if all(r[3] for r in rows) else EXIT_INVARIANT


def cmd_errata(args) -> int:
    entries = errata_report(args.limit)
    if args.format == "json":
        print(json.dumps([e.to_dict() for e in entries], indent=1))
    else:
        sys.stdout.write(render_report(entries))
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ringel-ladders", description="Embedding distributions of Ringel ladders.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="print one polynomial",
                       description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    d.add_argument("--family", required=True, choices=FAMILIES)
    d.add_argument("--n", type=int, required=True,
                   help="subscript for O/L/P/R; ladder parameter (graph R_{n-1}) for total")
    d.add_argument("--method", default="recurrence", choices=DIST_METHODS)
    d.add_argument("--format", default="text", choices=("text", "json", "csv"))
    d.add_argument("--workers", type=_positive, default=1)
    d.add_argument("--max-n-brute", type=int, default=8)
    d.add_argument("--max-n-trace", type=int, default=6)
    d.add_argument("--max-n-closed", type=int, default=400)
    d.set_defaults(func=cmd_dist)

    v = sub.add_parser("verify", help="cross-check every method and invariant")
    v.add_argument("--max-n-brute", type=int, default=8)
    v.add_argument("--max-n-trace", type=int, default=5)
    v.add_argument("--max-n-closed", type=int, default=40)
    v.add_argument("--workers", type=_positive, default=1)
    v.add_argument("--format", default="json", choices=("json", "compact"))
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("paper-check", help="recompute the five printed total polynomials")
    c.set_defaults(func=cmd_table_check)

    e = sub.add_parser("errata", help="audit printed formulas against the oracles")
    e.add_argument("--limit", type=_positive, default=DEFAULT_LIMIT)
    e.add_argument("--format", default="text", choices=("text", "json"))
    e.set_defaults(func=cmd_errata)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except dist.InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())

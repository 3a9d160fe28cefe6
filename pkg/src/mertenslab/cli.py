"""Command-line front end: single checks, grid scans, and exact queries.

Subcommands:

* ``verify``    -- run one claim at one parameter point, print the record
                   as JSON; exit 0 on pass, 1 on measured failure.
* ``scan``      -- sweep a half-odd grid, write CSV or JSON-lines rows
                   plus a JSON manifest; data rows are byte-identical
                   across reruns with the same config (timings are blank
                   unless requested, timestamps live in the manifest).
* ``mertens``   -- print one exact Mertens value (plain, interval,
                   coprime or multiples variant).
* ``rough``     -- count rough integers in an interval by oracle or sieve.
* ``strategy``  -- print one decomposition report as JSON.

Exit codes: 0 all-pass, 1 any measured claim failure, 2 operational
errors (bad usage, capacity, unwritable output).
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .errors import CapacityError
from .intervals import OpenInterval, floor_rational, parse_half_odd
from .moebius import (
    MobiusTable,
    is_prime,
    mertens,
    mertens_coprime,
    mertens_interval,
    mertens_multiples,
    mobius_of,
    primes_below,
)
from .rough import (
    max_primorial_threshold,
    primorial_excluding,
    rough_count_oracle,
    rough_count_sieve,
    squarefree_family,
)
from .strategy import (
    Interpretation,
    StrategyScanRow,
    default_pair_selector,
    exponent_scan,
    strategy_decomposition,
)
from .verify import (
    VerificationRecord,
    check_bk_bridge,
    check_corollary1,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_theorem,
    check_theorem_s_side,
    sweep_lemma3,
)

CSV_COLUMNS = (
    "claim",
    "x_num",
    "x_den",
    "p",
    "q",
    "k",
    "a",
    "lhs",
    "rhs",
    "pass",
    "elapsed_ms",
    "interpretation_tag",
)

SCAN_CLAIMS = ("theorem", "lemma1", "corollary1", "lemma2", "lemma3", "bk_bridge", "mertens", "strategy")

OUTPUT_DIR_ENV = "MERTENSLAB_OUT_DIR"

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _exact_str(v: Fraction | int | None) -> str:
    if v is None:
        return ""
    f = Fraction(v)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _elapsed_str(elapsed_us: int, timings: bool) -> str:
    if not timings:
        return ""
    return f"{elapsed_us // 1000}.{elapsed_us % 1000:03d}"


def record_to_row(rec: VerificationRecord, timings: bool = False) -> dict[str, str]:
    return {
        "claim": rec.claim,
        "x_num": str(rec.x.numerator),
        "x_den": str(rec.x.denominator),
        "p": "" if rec.p is None else str(rec.p),
        "q": "" if rec.q is None else str(rec.q),
        "k": "" if rec.k is None else str(rec.k),
        "a": "" if rec.a is None else str(rec.a),
        "lhs": _exact_str(rec.lhs),
        "rhs": _exact_str(rec.rhs),
        "pass": "true" if rec.passed else "false",
        "elapsed_ms": _elapsed_str(rec.elapsed_us, timings),
        "interpretation_tag": rec.tag,
    }


def strategy_row_to_row(row: StrategyScanRow) -> dict[str, str]:
    # exponent-scan rows: lhs is the correction magnitude, the pass column
    # is the sqrt(x) comparison flag, rhs stays empty (nothing is asserted)
    return {
        "claim": "strategy",
        "x_num": str(row.x.numerator),
        "x_den": str(row.x.denominator),
        "p": str(row.p),
        "q": str(row.q),
        "k": "",
        "a": "",
        "lhs": _exact_str(row.correction),
        "rhs": "",
        "pass": "true" if row.within_sqrt else "false",
        "elapsed_ms": "",
        "interpretation_tag": row.interpretation,
    }


def rows_to_csv(rows: Sequence[dict[str, str]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_jsonl(rows: Sequence[dict[str, str]]) -> str:
    return "".join(json.dumps(row, separators=(", ", ": ")) + "\n" for row in rows)


@dataclass
class ScanConfig:
    """One scan request: grid, claims, prime filter, caps and output shape."""

    x_start: Fraction
    x_end: Fraction
    x_step: int = 1
    claims: tuple[str, ...] = ("theorem",)
    prime_filter: str = "all"  # all | odd | comma-separated primes
    k_values: str = "all"
    out_path: Optional[str] = None
    out_format: str = "csv"  # csv | json
    width: int = 1
    timings: bool = False
    bk_cap_multiplier: int = 1
    sieve_cap: int = 10**8
    subset_cap: int = 20
    enum_cap: int = 10**6
    interpretation: Interpretation = field(default_factory=Interpretation)

    def x_values(self) -> list[Fraction]:
        out = []
        x = self.x_start
        while x <= self.x_end:
            out.append(x)
            x += self.x_step
        return out

    def primes_for(self, x: Fraction) -> list[int]:
        ps = primes_below(x)
        if self.prime_filter == "all":
            return ps
        if self.prime_filter == "odd":
            return [p for p in ps if p != 2]
        wanted = {int(t) for t in self.prime_filter.split(",") if t.strip()}
        return [p for p in ps if p in wanted]

    def ks_for(self, p: int) -> list[int]:
        if self.k_values == "all":
            return list(range(1, p))
        wanted = [int(t) for t in self.k_values.split(",") if t.strip()]
        return [k for k in wanted if 1 <= k <= p - 1]

    def echo(self) -> dict:
        return {
            "x_start": _exact_str(self.x_start),
            "x_end": _exact_str(self.x_end),
            "x_step": self.x_step,
            "claims": list(self.claims),
            "prime_filter": self.prime_filter,
            "k_values": self.k_values,
            "format": self.out_format,
            "width": self.width,
            "timings": self.timings,
            "bk_cap_multiplier": self.bk_cap_multiplier,
            "caps": {"sieve": self.sieve_cap, "subsets": self.subset_cap, "enum": self.enum_cap},
            "interpretation": self.interpretation.tag,
        }


def _primorial_feasible(x: Fraction) -> bool:
    return x <= max_primorial_threshold()


def _subset_feasible(x: Fraction, cap: int) -> bool:
    return len(primes_below(x)) <= cap


def _enum_feasible(x: Fraction, cap: int) -> bool:
    # window claims enumerate about floor(x) integers per oracle call
    return floor_rational(x) + 1 <= cap


def scan_records_for_x(
    x: Fraction, config: ScanConfig, table: Optional[MobiusTable] = None
) -> tuple[list[dict[str, str]], dict[str, int]]:
    """All data rows for one grid point, plus counts of capacity-skipped rows."""
    rows: list[dict[str, str]] = []
    skipped: dict[str, int] = {}
    primes = config.primes_for(x)
    if table is None:
        table = MobiusTable.upto(max(1, floor_rational(x)), cap=config.sieve_cap)

    def skip(claim: str) -> None:
        skipped[claim] = skipped.get(claim, 0) + 1

    for claim in config.claims:
        if claim == "theorem":
            for p in primes:
                rows.append(record_to_row(check_theorem(x, p, table), config.timings))
                if _primorial_feasible(x):
                    rows.append(record_to_row(check_theorem_s_side(x, p), config.timings))
            continue
        if claim == "mertens":
            sieve_value = mertens(x, table)
            naive = sum(mobius_of(a) for a in range(1, floor_rational(x) + 1))
            rec = VerificationRecord(
                claim="mertens", x=x, lhs=sieve_value, rhs=naive, passed=sieve_value == naive
            )
            rows.append(record_to_row(rec, config.timings))
            continue
        if claim == "strategy":
            for srow in exponent_scan([x], default_pair_selector, config.interpretation, table):
                rows.append(strategy_row_to_row(srow))
            continue
        if claim in ("lemma1", "corollary1", "lemma2", "bk_bridge", "lemma3"):
            if not _primorial_feasible(x) or not _enum_feasible(x, config.enum_cap):
                skip(claim)
                continue
            if claim == "lemma2" and not _subset_feasible(x, config.subset_cap):
                skip(claim)
                continue
            all_primes = primes_below(x)
            family = squarefree_family(x) if claim == "lemma2" else None
            plain_residuals: dict = {}
            for p in primes:
                n_p = primorial_excluding(x, p, all_primes)
                for k in config.ks_for(p):
                    if claim == "lemma1":
                        rec = check_lemma1(x, p, k, n_p, all_primes)
                    elif claim == "corollary1":
                        rec = check_corollary1(x, p, k, n_p, all_primes)
                    elif claim == "lemma2":
                        rec = check_lemma2(x, p, k, family, n_p, all_primes, plain_residuals)
                    elif claim == "bk_bridge":
                        rec = check_bk_bridge(x, p, k, config.bk_cap_multiplier, n_p, all_primes)
                    else:
                        rec = sweep_lemma3(x, p, k, primorial=n_p)
                    rows.append(record_to_row(rec, config.timings))
            continue
        raise ValueError(f"unknown claim {claim!r}")
    return rows, skipped


def _scan_worker(args: tuple) -> tuple[list[dict[str, str]], dict[str, int]]:
    x, config = args
    return scan_records_for_x(x, config)


def run_scan(config: ScanConfig) -> tuple[list[dict[str, str]], dict]:
    """Execute a scan: returns the ordered data rows and the manifest document."""
    started = datetime.datetime.now(datetime.timezone.utc)
    xs = config.x_values()
    all_rows: list[dict[str, str]] = []
    skipped_total: dict[str, int] = {}
    if config.width > 1 and len(xs) > 1:
        import multiprocessing

        with multiprocessing.Pool(config.width) as pool:
            results = pool.map(_scan_worker, [(x, config) for x in xs])
    else:
        table = None
        if xs:
            bound = max(1, floor_rational(max(xs)))
            table = MobiusTable.upto(bound, cap=config.sieve_cap)
        results = [scan_records_for_x(x, config, table) for x in xs]
    for rows, skipped in results:
        all_rows.extend(rows)
        for claim, n in skipped.items():
            skipped_total[claim] = skipped_total.get(claim, 0) + n

    all_rows.sort(
        key=lambda r: (
            r["claim"],
            Fraction(int(r["x_num"]), int(r["x_den"])),
            int(r["p"] or 0),
            int(r["q"] or 0),
            int(r["k"] or 0),
            int(r["a"] or 0),
            r["interpretation_tag"],
        )
    )
    finished = datetime.datetime.now(datetime.timezone.utc)
    counts: dict[str, dict[str, int]] = {}
    for row in all_rows:
        c = counts.setdefault(row["claim"], {"pass": 0, "fail": 0})
        c["pass" if row["pass"] == "true" else "fail"] += 1
    manifest = {
        "artifact_version": __version__,
        "config": config.echo(),
        "started_at": started.isoformat(),
        "finished_at": finished.isoformat(),
        "row_counts": counts,
        "rows_total": len(all_rows),
        "skipped_for_capacity": skipped_total,
    }
    return all_rows, manifest


# --- argument parsing helpers -------------------------------------------------

def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _parse_x_range(text: str) -> tuple[Fraction, Fraction]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return parse_half_odd(lo), parse_half_odd(hi)
    x = parse_half_odd(text)
    return x, x


def _load_config_file(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line (want key=value): {line!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _parse_caps(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for part in text.split(","):
        if not part.strip():
            continue
        key, value = part.split("=", 1)
        out[key.strip()] = int(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mertenslab",
        description="Exact-arithmetic verification workbench for Mertens-sum identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run one claim at one parameter point")
    pv.add_argument("claim", choices=("lemma1", "corollary1", "lemma2", "lemma3", "bk_bridge", "theorem", "strategy"))
    pv.add_argument("--x", required=True, help="half-odd threshold, e.g. 10.5")
    pv.add_argument("--p", type=int)
    pv.add_argument("--q", type=int)
    pv.add_argument("--k", type=int)
    pv.add_argument("--a", type=int)
    pv.add_argument("--side", choices=("m", "s"), default="m", help="theorem side to check")
    pv.add_argument("--gap-sign", choices=("neg", "pos"), default="neg")
    pv.add_argument("--leftover-measure", choices=("p", "q"), default="p")
    pv.add_argument("--timings", action="store_true", help="include measured timings in output")

    ps = sub.add_parser("scan", help="sweep a half-odd grid and write rows plus a manifest")
    ps.add_argument("--claims", help=f"comma list from {','.join(SCAN_CLAIMS)} (default theorem)")
    ps.add_argument("--x", help="grid, either 10.5 or 3.5..100.5")
    ps.add_argument("--step", type=int, help="integer grid step, default 1 (keeps x half-odd)")
    ps.add_argument("--primes", help="all | odd | comma list of primes (default all)")
    ps.add_argument("--k", help="all | comma list of k values (default all)")
    ps.add_argument("--out", help=f"output path (default: scan.csv under ${OUTPUT_DIR_ENV} or cwd)")
    ps.add_argument("--format", choices=("csv", "json"))
    ps.add_argument("--width", type=int, help="worker processes (default: cpu count)")
    ps.add_argument("--caps", help="e.g. sieve=100000000,subsets=20,enum=1000000")
    ps.add_argument("--bk-cap", type=int, help="B_k candidate cap multiplier (a <= N*p*x)")
    ps.add_argument("--gap-sign", choices=("neg", "pos"), default="neg")
    ps.add_argument("--leftover-measure", choices=("p", "q"), default="p")
    ps.add_argument("--timings", action="store_true")
    ps.add_argument("--config", help="key=value config file; command line wins")

    pm = sub.add_parser("mertens", help="print one exact Mertens value")
    pm.add_argument("--x", help="half-odd threshold for M(x)")
    pm.add_argument("--interval", nargs=2, metavar=("LO", "HI"), help="exact rational endpoints")
    pm.add_argument("--coprime-to", type=int, help="restrict to integers not divisible by this prime")
    pm.add_argument("--divisible-by", type=int, help="restrict to squarefree multiples of this prime")
    pm.add_argument("--max-factor", help="with --divisible-by: largest prime factor must sit below this")

    pr = sub.add_parser("rough", help="count rough integers in an interval")
    pr.add_argument("--interval", nargs=2, metavar=("LO", "HI"), required=True)
    pr.add_argument("--threshold", required=True, help="roughness threshold (exact rational)")
    pr.add_argument("--method", choices=("oracle", "sieve"), default="oracle")
    pr.add_argument("--members", action="store_true", help="print the member list too")

    pt = sub.add_parser("strategy", help="print one decomposition report")
    pt.add_argument("--x", required=True)
    pt.add_argument("--p", type=int, required=True)
    pt.add_argument("--q", type=int, required=True)
    pt.add_argument("--gap-sign", choices=("neg", "pos"), default="neg")
    pt.add_argument("--leftover-measure", choices=("p", "q"), default="p")
    return parser


def _interpretation_from(args: argparse.Namespace) -> Interpretation:
    return Interpretation(
        gap_sign=-1 if args.gap_sign == "neg" else 1,
        leftover_measure=args.leftover_measure,
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    x = parse_half_odd(args.x)
    claim = args.claim
    if claim == "strategy":
        if args.p is None or args.q is None:
            raise ValueError("strategy needs --p and --q")
        report = strategy_decomposition(x, args.p, args.q, _interpretation_from(args))
        rec = VerificationRecord(
            claim="strategy", x=x, p=args.p, q=args.q,
            lhs=report.total, rhs=report.expected, passed=report.passed,
            tag=report.interpretation,
        )
    elif claim == "theorem":
        if args.p is None:
            raise ValueError("theorem needs --p")
        rec = check_theorem(x, args.p) if args.side == "m" else check_theorem_s_side(x, args.p)
    else:
        if args.p is None or args.k is None:
            raise ValueError(f"{claim} needs --p and --k")
        if claim == "lemma1":
            rec = check_lemma1(x, args.p, args.k)
        elif claim == "corollary1":
            rec = check_corollary1(x, args.p, args.k)
        elif claim == "lemma2":
            rec = check_lemma2(x, args.p, args.k)
        elif claim == "bk_bridge":
            rec = check_bk_bridge(x, args.p, args.k)
        else:  # lemma3
            if args.a is not None:
                rec = check_lemma3(args.a, args.p, args.k, x)
            else:
                rec = sweep_lemma3(x, args.p, args.k)
    print(json.dumps(record_to_row(rec, timings=args.timings)))
    return EXIT_PASS if rec.passed else EXIT_FAIL


def _cmd_scan(args: argparse.Namespace) -> int:
    file_defaults = _load_config_file(args.config) if args.config else {}

    def setting(key: str, cli_value, builtin):
        # precedence: explicit flag, then config file, then builtin
        if cli_value is not None:
            return cli_value
        if key in file_defaults:
            return file_defaults[key]
        return builtin

    claims = tuple(t.strip() for t in str(setting("claims", args.claims, "theorem")).split(",") if t.strip())
    unknown = [c for c in claims if c not in SCAN_CLAIMS]
    if unknown:
        raise ValueError(f"unknown claims: {unknown}; choose from {SCAN_CLAIMS}")
    x_setting = setting("x", args.x, None)
    if x_setting is None:
        raise ValueError("scan needs --x (or an x= line in the config file)")
    x_lo, x_hi = _parse_x_range(str(x_setting))
    caps = _parse_caps(str(setting("caps", args.caps, "")))
    width = int(setting("width", args.width, 0)) or os.cpu_count() or 1
    config = ScanConfig(
        x_start=x_lo,
        x_end=x_hi,
        x_step=int(setting("step", args.step, 1)),
        claims=claims,
        prime_filter=str(setting("primes", args.primes, "all")),
        k_values=str(setting("k", args.k, "all")),
        out_format=str(setting("format", args.format, "csv")),
        width=max(1, width),
        timings=bool(args.timings or file_defaults.get("timings") == "true"),
        bk_cap_multiplier=int(setting("bk_cap", args.bk_cap, 1)),
        sieve_cap=caps.get("sieve", 10**8),
        subset_cap=caps.get("subsets", 20),
        enum_cap=caps.get("enum", 10**6),
        interpretation=_interpretation_from(args),
    )
    if config.x_step < 1:
        raise ValueError("--step must be a positive integer")

    out_path = args.out or file_defaults.get("out")
    if out_path is None:
        out_dir = os.environ.get(OUTPUT_DIR_ENV, ".")
        ext = "csv" if config.out_format == "csv" else "jsonl"
        out_path = os.path.join(out_dir, f"scan.{ext}")
    config.out_path = out_path

    rows, manifest = run_scan(config)
    payload = rows_to_csv(rows) if config.out_format == "csv" else rows_to_jsonl(rows)
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
        manifest_path = out_path + ".manifest.json"
        with open(manifest_path, "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_ERROR
    failures = sum(c["fail"] for c in manifest["row_counts"].values())
    print(
        f"wrote {len(rows)} rows to {out_path} "
        f"(fail {failures}; manifest {manifest_path})"
    )
    return EXIT_FAIL if failures else EXIT_PASS


def _parse_endpoint(text: str) -> Fraction:
    return Fraction(text)


def _cmd_mertens(args: argparse.Namespace) -> int:
    if args.x is not None:
        x = parse_half_odd(args.x)
        iv = OpenInterval(Fraction(0), x)
    elif args.interval is not None:
        iv = OpenInterval(_parse_endpoint(args.interval[0]), _parse_endpoint(args.interval[1]))
    else:
        raise ValueError("mertens needs --x or --interval")
    if args.coprime_to is not None:
        if not is_prime(args.coprime_to):
            raise ValueError(f"--coprime-to must be prime, got {args.coprime_to}")
        value = mertens_coprime(iv, args.coprime_to)
    elif args.divisible_by is not None:
        if not is_prime(args.divisible_by):
            raise ValueError(f"--divisible-by must be prime, got {args.divisible_by}")
        cap = Fraction(args.max_factor) if args.max_factor else None
        value = mertens_multiples(iv, args.divisible_by, cap)
    else:
        value = mertens_interval(iv)
    print(value)
    return EXIT_PASS


def _cmd_rough(args: argparse.Namespace) -> int:
    iv = OpenInterval(_parse_endpoint(args.interval[0]), _parse_endpoint(args.interval[1]))
    threshold = Fraction(args.threshold)
    if args.method == "oracle":
        result = rough_count_oracle(iv, threshold)
        print(result.count)
        if args.members:
            print(" ".join(map(str, result.members)))
    else:
        print(rough_count_sieve(iv, threshold))
    return EXIT_PASS


def _cmd_strategy(args: argparse.Namespace) -> int:
    x = parse_half_odd(args.x)
    report = strategy_decomposition(x, args.p, args.q, _interpretation_from(args))
    doc = {
        "x": _exact_str(report.x),
        "p": report.p,
        "q": report.q,
        "interpretation": report.interpretation,
        "regime_ok": report.regime_ok,
        "term_main": report.term_main,
        "term_gaps": report.term_gaps,
        "term_leftover": report.term_leftover,
        "total": report.total,
        "expected": report.expected,
        "pass": report.passed,
        "correction": _exact_str(report.correction),
    }
    print(json.dumps(doc))
    return EXIT_PASS if report.passed else EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "scan": _cmd_scan,
        "mertens": _cmd_mertens,
        "rough": _cmd_rough,
        "strategy": _cmd_strategy,
    }
    try:
        return handlers[args.command](args)
    except (CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

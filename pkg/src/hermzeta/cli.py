"""Command-line front end: ``hermzeta verify|table|count|eisenstein|oracle``.

Ranges are written ``a..b`` (inclusive); lists are space separated. Exit codes:
0 all checks passed, 1 a check failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, List, Optional, Sequence

from .characters import QuadraticCharacter, sigma_functional_check
from .discriminants import chi_factorization_check, enumerate_F_D, is_fundamental
from .eisenstein import (
    F_expansion,
    eisenstein_combination,
    eisenstein_expansion,
    fricke_check,
    g_combination,
    g_constant_check,
    special_value_Z,
    verify_main_theorem,
)
from .euler import theta0_charsum_check
from .exact_arith import neg_one_pow
from .hermitian import egm_coefficient_oracle, r_count, r_star_count

THREADS_ENV = "HERMZETA_THREADS"
COMMANDS = ("verify", "table", "count", "eisenstein", "oracle")
TABLE_HEADER = ["D", "k", "j", "Delta", "num", "den", "pi_exp", "sqrtD_exp", "float_approx"]
Z_FORMULA = "(-1)^j Delta^(2k) Z((-1)^(j-1) Delta, 2k) = C_{k,D} sum_{F_D} |D2|^(2k) chi_D2((-1)^(j-1)) sigma_2k(chi_D1, chi_D2; Delta)"
COUNT_FORMULA = "r: #{beta in O/nO : beta*conj(beta) = Delta mod n}; r*: #{beta in O*/nO : |D| beta*conj(beta) = Delta mod n|D|}"
E_FORMULA = "E_w(chi1, chi2) = delta_{N2,1} L(chi1, 1-w)/2 + sum_n sigma_{w-1}(chi1, chi2; n) q^n"

_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


class ConfigError(ValueError):
    pass


def parse_int_list(tokens: Sequence[str]) -> List[int]:
    out: List[int] = []
    for tok in tokens:
        m = _RANGE.match(tok)
        if m:
            a, b = int(m.group(1)), int(m.group(2))
            if a > b:
                raise ConfigError(f"empty range {tok}")
            out.extend(range(a, b + 1))
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise ConfigError(f"not an integer or a..b range: {tok!r}") from None
    if not out:
        raise ConfigError("empty list")
    return out


@dataclass
class RunConfig:
    command: str
    discs: List[int]
    ks: List[int] = field(default_factory=lambda: [1])
    js: List[int] = field(default_factory=lambda: [0, 1])
    deltas: Optional[List[int]] = None
    ns: Optional[List[int]] = None
    N: int = 200
    fmt: str = "text"
    out: Optional[str] = None
    threads: int = 1
    series: str = "pairs"

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command}")
        for D in self.discs:
            if D >= 0:
                raise ConfigError(f"discriminant {D} must be negative")
            if not is_fundamental(D):
                raise ConfigError(f"discriminant {D} is not fundamental")
        if any(k < 1 for k in self.ks):
            raise ConfigError("k must be >= 1")
        if any(j not in (0, 1) for j in self.js):
            raise ConfigError("j must be 0 or 1")
        if self.N < 1:
            raise ConfigError("N must be >= 1")
        if self.ns is not None and any(n < 1 for n in self.ns):
            raise ConfigError("n must be >= 1")
        if self.command == "table" and self.deltas and any(d < 1 for d in self.deltas):
            raise ConfigError("table needs Delta >= 1")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")


def _pool_map(fn: Callable, items: Iterable, threads: int) -> list:
    items = list(items)
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ------------------------------------------------------------------ commands


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _verify_one(args) -> List[CheckResult]:
    D, k, j, N = args
    out = []
    for idx in ("all", "coprime"):
        rep = verify_main_theorem(k, D, j, N, indices=idx)
        detail = rep.summary()
        if not rep.ok:
            detail += "; first: " + ", ".join(f"{n}: {a} != {b}" for n, a, b in rep.mismatches[:3])
        out.append(CheckResult(f"main_theorem[{idx}] D={D} k={k} j={j}", rep.ok, detail))
    out.append(CheckResult(f"fricke D={D} k={k} j={j}", fricke_check(k, D, j, N)))
    out.append(CheckResult(f"g_constant D={D} k={k} j={j}", g_constant_check(k, D, j)))
    bad = [d for d in range(1, min(N, 500) + 1) if gcd(d, 2 * D) == 1 and not theta0_charsum_check(d, D, k, j)]
    out.append(CheckResult(f"theta0_charsum D={D} k={k} j={j}", not bad, f"failing Delta: {bad[:5]}" if bad else ""))
    return out


def _verify_disc(args) -> List[CheckResult]:
    D, N = args
    out = []
    bound = max(N, 100)
    bad = [n for n in range(-bound, bound + 1) if not chi_factorization_check(D, n)]
    out.append(CheckResult(f"chi_factorization D={D} |n|<={bound}", not bad, str(bad[:5]) if bad else ""))
    chi = QuadraticCharacter(D)
    bad_sigma = [
        (s, d)
        for s in range(1, 7)
        for d in range(-min(N, 200), min(N, 200) + 1)
        if d and gcd(d, D) == 1 and not sigma_functional_check(chi, s, d)
    ]
    out.append(CheckResult(f"sigma_functional D={D}", not bad_sigma, str(bad_sigma[:5]) if bad_sigma else ""))
    n_max = min(N, 60)
    bad_egm = []
    for delta in range(-10, 11):
        predicted = egm_coefficient_oracle(delta, D, n_max)
        for n in range(1, n_max + 1):
            if predicted[n - 1] != r_count(delta, n, D, method="brute"):
                bad_egm.append((delta, n))
    out.append(CheckResult(f"egm_oracle D={D} |Delta|<=10 n<={n_max}", not bad_egm, str(bad_egm[:5]) if bad_egm else ""))
    return out


def cmd_verify(cfg: RunConfig) -> tuple:
    grid = [(D, k, j, cfg.N) for D in cfg.discs for k in cfg.ks for j in cfg.js]
    results: List[CheckResult] = []
    for chunk in _pool_map(_verify_one, grid, cfg.threads):
        results.extend(chunk)
    for chunk in _pool_map(_verify_disc, [(D, cfg.N) for D in cfg.discs], cfg.threads):
        results.extend(chunk)
    records = [{"check": r.name, "ok": r.ok, "detail": r.detail} for r in results]
    if cfg.fmt == "json":
        text = json.dumps({"ok": all(r.ok for r in results), "checks": records}, indent=2) + "\n"
    elif cfg.fmt == "csv":
        text = _csv(["check", "ok", "detail"], [[r.name, int(r.ok), r.detail] for r in results])
    else:
        lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if r.detail else "") for r in results]
        lines.append(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
        text = "\n".join(lines) + "\n"
    return (0 if all(r.ok for r in results) else 1), text


def _table_row(args) -> dict:
    D, k, j, delta = args
    v = special_value_Z(delta, j, D, k)
    return {
        "D": D,
        "k": k,
        "j": j,
        "Delta": delta,
        "num": v.rational.numerator,
        "den": v.rational.denominator,
        "pi_exp": v.pi_exp,
        "sqrtD_exp": v.sqrt_exp,
        "float_approx": float(v),
        "quantity": f"Z({neg_one_pow(j - 1) * delta}, {2 * k})",
        "paper_eq": Z_FORMULA,
    }


def cmd_table(cfg: RunConfig) -> tuple:
    deltas = cfg.deltas or list(range(1, 11))
    grid = sorted((D, k, j, d) for D in cfg.discs for k in cfg.ks for j in cfg.js for d in deltas)
    rows = _pool_map(_table_row, grid, cfg.threads)
    if cfg.fmt == "json":
        return 0, json.dumps(rows, indent=2) + "\n"
    if cfg.fmt == "csv":
        return 0, _csv(TABLE_HEADER, [[r[h] for h in TABLE_HEADER] for r in rows])
    lines = [
        f"D={r['D']} k={r['k']} j={r['j']} {r['quantity']} = {r['num']}/{r['den']} * pi^{r['pi_exp']} * |D|^({r['sqrtD_exp']}/2) ~ {r['float_approx']!r}"
        for r in rows
    ]
    return 0, "\n".join(lines) + "\n"


def _count_row(args) -> dict:
    D, delta, n = args
    return {"D": D, "Delta": delta, "n": n, "r": r_count(delta, n, D), "r_star": r_star_count(delta, n, D), "paper_eq": COUNT_FORMULA}


def cmd_count(cfg: RunConfig) -> tuple:
    deltas = cfg.deltas or [1]
    ns = cfg.ns or list(range(1, 11))
    rows = _pool_map(_count_row, [(D, d, n) for D in cfg.discs for d in deltas for n in ns], cfg.threads)
    header = ["D", "Delta", "n", "r", "r_star"]
    if cfg.fmt == "json":
        return 0, json.dumps(rows, indent=2) + "\n"
    if cfg.fmt == "csv":
        return 0, _csv(header, [[r[h] for h in header] for r in rows])
    return 0, "\n".join(f"D={r['D']} Delta={r['Delta']} n={r['n']} r={r['r']} r*={r['r_star']}" for r in rows) + "\n"


def _series_rows(args) -> List[dict]:
    D, k, j, N, series = args
    w = 2 * k + 1
    if series == "pairs":
        blocks = []
        for d1, d2 in enumerate_F_D(D):
            e = eisenstein_expansion(QuadraticCharacter(d1), QuadraticCharacter(d2), w, N)
            blocks.append((f"E_{w}(chi_{d1}, chi_{d2})", None, e))
    elif series == "F":
        blocks = [(f"F_{k},{D}^{j}", j, F_expansion(k, D, j, N))]
    elif series == "combination":
        blocks = [(f"eisenstein_combination k={k} D={D} j={j}", j, eisenstein_combination(k, D, j).expand(N))]
    else:
        blocks = [(f"g_combination k={k} D={D} j={j}", j, g_combination(k, D, j).expand(N))]
    rows = []
    for label, jj, e in blocks:
        for n, a in enumerate(e.coefficients):
            rows.append(
                {"D": D, "k": k, "j": jj, "series": label, "index": n, "num": a.numerator, "den": a.denominator, "paper_eq": E_FORMULA}
            )
    return rows


def cmd_eisenstein(cfg: RunConfig) -> tuple:
    js = [None] if cfg.series == "pairs" else cfg.js
    grid = [(D, k, j, cfg.N, cfg.series) for D in cfg.discs for k in cfg.ks for j in js]
    rows = [r for chunk in _pool_map(_series_rows, grid, cfg.threads) for r in chunk]
    header = ["D", "k", "j", "series", "index", "num", "den"]
    if cfg.fmt == "json":
        return 0, json.dumps(rows, indent=2) + "\n"
    if cfg.fmt == "csv":
        return 0, _csv(header, [["" if r[h] is None else r[h] for h in header] for r in rows])
    return 0, "\n".join(f"{r['series']} a_{r['index']} = {r['num']}/{r['den']}" for r in rows) + "\n"


def _oracle_one(args) -> List[tuple]:
    D, delta, ns = args
    predicted = egm_coefficient_oracle(delta, D, max(ns))
    return [(D, delta, n, predicted[n - 1], r_count(delta, n, D, method="brute")) for n in ns]


def cmd_oracle(cfg: RunConfig) -> tuple:
    deltas = cfg.deltas or list(range(-10, 11))
    ns = cfg.ns or list(range(1, 41))
    rows = [r for chunk in _pool_map(_oracle_one, [(D, d, ns) for D in cfg.discs for d in deltas], cfg.threads) for r in chunk]
    bad = [r for r in rows if r[3] != r[4]]
    summary = {"ok": not bad, "compared": len(rows), "mismatches": [list(r) for r in bad]}
    if cfg.fmt == "json":
        text = json.dumps(summary, indent=2) + "\n"
    elif cfg.fmt == "csv":
        text = _csv(["D", "Delta", "n", "predicted", "brute_force"], [list(r) for r in rows])
    else:
        text = f"{len(rows) - len(bad)}/{len(rows)} coefficients agree\n" + "".join(
            f"MISMATCH D={D} Delta={d} n={n}: predicted {p}, counted {c}\n" for D, d, n, p, c in bad
        )
    return (0 if not bad else 1), text


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(x) if isinstance(x, float) else x for x in row])
    return buf.getvalue()


# ---------------------------------------------------------------------- main

_NEGATIVE = re.compile(r"^-\d+(\.\.-?\d+)?$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--disc", nargs="+", required=True, help="negative fundamental discriminants")
        p.add_argument("--k", nargs="+", default=["1"], help="k values or a..b")
        p.add_argument("--j", nargs="+", default=["0", "1"])
        p.add_argument("--delta", nargs="+")
        p.add_argument("--n", nargs="+")
        p.add_argument("--N", type=int, default=200, help="truncation (default 200)")
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--out")
        p.add_argument("--threads", type=int, default=int(os.environ.get(THREADS_ENV, "1")))
        if name == "eisenstein":
            p.add_argument("--series", choices=["pairs", "F", "combination", "g"], default="pairs")
        # let "-3" and "-10..10" through as values
        p._negative_number_matcher = _NEGATIVE
    parser._negative_number_matcher = _NEGATIVE
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=ns.command,
        discs=parse_int_list(ns.disc),
        ks=parse_int_list(ns.k),
        js=parse_int_list(ns.j),
        deltas=parse_int_list(ns.delta) if ns.delta else None,
        ns=parse_int_list(ns.n) if ns.n else None,
        N=ns.N,
        fmt=ns.format,
        out=ns.out,
        threads=ns.threads,
        series=getattr(ns, "series", "pairs"),
    )
    cfg.validate()
    return cfg


HANDLERS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "count": cmd_count,
    "eisenstein": cmd_eisenstein,
    "oracle": cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = config_from_args(ns)
    except ConfigError as exc:
        print(f"hermzeta: {exc}", file=sys.stderr)
        return 2
    status, text = HANDLERS[cfg.command](cfg)
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"hermzeta: cannot write {cfg.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

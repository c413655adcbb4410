"""Cross-validation sweep: closed form vs criterion vs brute force.

One cell per (q, n, r) with q a prime power admissible for r and n coprime
to (q-1)/r. The admissible-a set depends on n only through n mod 2 (r = 2)
or 2n mod 3 (r = 3), so the criterion enumeration runs once per residue
class of n and every cell is compared against its class set; the closed
form is evaluated per cell. Brute force confirms every cell for small q
and a fixed-seed sample above that (O(q^2) per cell dominates runtime).

Disagreements are recorded as failures, never raised, so one bad cell
cannot mask others. Cells are merged in (q, n, r) order, which makes
reports byte-identical across runs and worker counts; elapsed_ms is the
one field that varies.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .counts import closed_count_r3, closed_count_r2, epsilons, masuda_zieve_bounds, refined_bounds_r3
from .curves import pi_trace
from .errors import DivisibilityViolationError
from .fields import ensure_enumerable, make_field
from .permtest import enumerate_perm_binomials
from .primes import prime_power_decompose, prime_powers_upto

KNOWN_METHODS = ("criterion", "bruteforce", "wanlidl")


@dataclass(frozen=True)
class SweepConfig:
    """Knobs for one verification sweep.

    The criterion route always runs; methods only selects the extra
    routes checked against it. jobs > 1 distributes whole (q, r) blocks
    across processes.
    """

    q_max: int = 343
    r_set: tuple[int, ...] = (2, 3)
    methods: tuple[str, ...] = ("criterion", "bruteforce")
    brute_full_max: int = 100
    brute_sample_rate: float = 0.1
    seed: int = 0
    jobs: int = 1
    force: bool = False


class SweepFailure(NamedTuple):
    q: int
    n: int
    r: int
    route_a: str
    route_b: str
    diff: str


@dataclass(frozen=True)
class SweepResult:
    cells: tuple[dict, ...]
    failures: tuple[SweepFailure, ...]
    elapsed_ms: int


def valid_exponents(q: int, r: int) -> list[int]:
    """All n in [1, q-1] with gcd(n, (q-1)/r) = 1, ascending."""
    d = (q - 1) // r
    return [n for n in range(1, q) if gcd(n, d) == 1]


def _class_key(n: int, r: int) -> int:
    return n % 2 if r == 2 else n % 3


def _set_diff(a: frozenset, b: frozenset) -> str:
    only_a = sorted(a - b)[:8]
    only_b = sorted(b - a)[:8]
    return f"|a|={len(a)} |b|={len(b)} a-only={only_a} b-only={only_b}"


def _field_task(args: tuple) -> tuple[list[dict], list[tuple]]:
    """All cells and failures for one (q, r) block. Top level so it pickles."""
    p, k, r, methods, brute_full_max, rate, seed, force = args
    q = p**k
    spec = make_field(p, k)
    cells: list[dict] = []
    failures: list[tuple] = []
    ns = valid_exponents(q, r)

    class_sets: dict[int, frozenset[int]] = {}
    for n in ns:
        key = _class_key(n, r)
        if key in class_sets:
            continue
        crit = frozenset(
            a.encode() for a in enumerate_perm_binomials(spec, n, r, method="criterion", force=force)
        )
        class_sets[key] = crit
        if "wanlidl" in methods:
            wl = frozenset(
                a.encode() for a in enumerate_perm_binomials(spec, n, r, method="wanlidl", force=force)
            )
            if wl != crit:
                failures.append((q, n, r, "criterion", "wanlidl", _set_diff(crit, wl)))

    mz_lo, mz_hi = masuda_zieve_bounds(q, r)
    cor_lo, cor_hi = refined_bounds_r3(q) if r == 3 else (None, None)
    s_k = pi_trace(p, k) if r == 3 else None
    brute_wanted = "bruteforce" in methods
    rng = random.Random(f"{seed}:{q}:{r}")

    for n in ns:
        crit_set = class_sets[_class_key(n, r)]
        crit_count = len(crit_set)
        ok = True
        e1 = e2 = None
        closed: int | None
        if r == 2:
            closed = closed_count_r2(q, n)
        else:
            e1, e2 = epsilons(q, n)
            try:
                closed = closed_count_r3(p, k, n)
            except DivisibilityViolationError as exc:
                failures.append((q, n, r, "closed", "divisibility", str(exc)))
                closed = None
                ok = False
        if closed is not None and closed != crit_count:
            failures.append((q, n, r, "closed", "criterion", f"{closed} != {crit_count}"))
            ok = False

        brute_count = None
        if brute_wanted and (q <= brute_full_max or rng.random() < rate):
            brute = frozenset(
                a.encode() for a in enumerate_perm_binomials(spec, n, r, method="bruteforce", force=force)
            )
            brute_count = len(brute)
            if brute != crit_set:
                failures.append((q, n, r, "criterion", "bruteforce", _set_diff(crit_set, brute)))
                ok = False

        if closed is not None:
            if not max(mz_lo, 0) <= closed <= mz_hi:
                failures.append((q, n, r, "closed", "mz-bounds", f"{closed} outside [{max(mz_lo, 0)}, {mz_hi}]"))
                ok = False
            if r == 3 and not cor_lo <= closed <= cor_hi:
                failures.append((q, n, r, "closed", "refined-bounds", f"{closed} outside [{cor_lo}, {cor_hi}]"))
                ok = False

        cells.append(
            {
                "q": q,
                "p": p,
                "k": k,
                "n": n,
                "r": r,
                "epsilon1": e1,
                "epsilon2": e2,
                "s_k": None if s_k is None else str(s_k),
                "closed_count": closed,
                "criterion_count": crit_count,
                "brute_count": brute_count,
                "mz_lower": str(mz_lo),
                "mz_upper": str(mz_hi),
                "cor_lower": cor_lo,
                "cor_upper": cor_hi,
                "ok": ok,
            }
        )
    return cells, failures


def _validate_config(config: SweepConfig) -> None:
    if config.q_max < 2:
        raise ValueError("q_max must be at least 2")
    ensure_enumerable(config.q_max, config.force)
    if not set(config.r_set) <= {2, 3}:
        raise ValueError(f"r_set must be a subset of {{2, 3}}, got {config.r_set}")
    unknown = set(config.methods) - set(KNOWN_METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    if not 0.0 <= config.brute_sample_rate <= 1.0:
        raise ValueError("brute_sample_rate must lie in [0, 1]")
    if config.jobs < 1:
        raise ValueError("jobs must be positive")


def run_verify_sweep(config: SweepConfig) -> SweepResult:
    """Sweep all admissible (q, n, r) cells up to config.q_max."""
    started = time.monotonic()
    _validate_config(config)
    tasks = []
    for q in prime_powers_upto(config.q_max):
        p, k = prime_power_decompose(q)
        for r in sorted(set(config.r_set)):
            if r == 2 and p == 2:
                continue
            if r == 3 and q % 3 != 1:
                continue
            tasks.append(
                (p, k, r, tuple(config.methods), config.brute_full_max,
                 config.brute_sample_rate, config.seed, config.force)
            )
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            parts = list(pool.map(_field_task, tasks))
    else:
        parts = [_field_task(t) for t in tasks]
    cells: list[dict] = []
    failures: list[SweepFailure] = []
    for cell_part, fail_part in parts:
        cells.extend(cell_part)
        failures.extend(SweepFailure(*f) for f in fail_part)
    cells.sort(key=lambda c: (c["q"], c["n"], c["r"]))
    failures.sort()
    elapsed_ms = int((time.monotonic() - started) * 1000)
    return SweepResult(cells=tuple(cells), failures=tuple(failures), elapsed_ms=elapsed_ms)


CSV_COLUMNS = (
    "q", "p", "k", "n", "r", "closed_count", "criterion_count", "brute_count",
    "epsilon1", "epsilon2", "s_k", "mz_lower", "mz_upper", "cor_lower", "cor_upper", "ok",
)


def emit_report(result: SweepResult, fmt: str = "json") -> bytes:
    """Serialize a sweep result; big integers ride as decimal strings."""
    if fmt == "json":
        payload = {
            "cells": list(result.cells),
            "failures": [f._asdict() for f in result.failures],
            "elapsed_ms": result.elapsed_ms,
        }
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for cell in result.cells:
            writer.writerow(["" if cell[col] is None else cell[col] for col in CSV_COLUMNS])
        return buf.getvalue().encode()
    if fmt == "text":
        lines = [f"cells={len(result.cells)} failures={len(result.failures)} elapsed_ms={result.elapsed_ms}"]
        blocks: dict[tuple[int, int], list[dict]] = {}
        for cell in result.cells:
            blocks.setdefault((cell["q"], cell["r"]), []).append(cell)
        for (q, r), group in sorted(blocks.items()):
            n_ok = sum(1 for c in group if c["ok"])
            n_brute = sum(1 for c in group if c["brute_count"] is not None)
            counts = sorted({c["criterion_count"] for c in group})
            lines.append(f"q={q} r={r} cells={len(group)} ok={n_ok} brute={n_brute} counts={counts}")
        for f in result.failures:
            lines.append(f"FAIL q={f.q} n={f.n} r={f.r} {f.route_a} vs {f.route_b}: {f.diff}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")

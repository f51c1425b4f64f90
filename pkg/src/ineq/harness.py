"""Suite runner: deterministic sampling, aggregation, sharpness probing
and report emission over the registered check catalogs.

Determinism contract: per-trial randomness is derived by hashing
(master seed, check id, field, trial index), so results are identical
for any worker count and any execution order.  Violations never abort a
run; suites always complete and the caller inspects the aggregates.
"""

from __future__ import annotations

import csv
import hashlib
import importlib
import io
import json
import numbers
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import catalog
from .catalog import (HOLDS, HYPOTHESIS_FAILED, VIOLATED, CheckInstance,
                      CheckReport, get_check, hypothesis_holds)
from .core import DIM_CAP, GeneratorExhausted, IneqError

_CATALOG_MODULES = ("checks_forms", "checks_schwarz", "checks_triangle",
                    "continuous", "subspace")
_REJECTION_CAP = 10_000


def load_catalogs() -> None:
    """Import every catalog module so its checks register."""
    for name in _CATALOG_MODULES:
        importlib.import_module(f"{__package__}.{name}")


# ---------------------------------------------------------- configuration


@dataclass(frozen=True)
class SuiteConfig:
    """What to run: suite or explicit ids, trial count, dims, fields."""

    suite: str = "all"
    check_ids: tuple[str, ...] = ()
    trials: int = 100
    dim_lo: int = 2
    dim_hi: int = 8
    fields: str = "both"
    seed: int = 0
    force: bool = False
    rel_tol: float = 1e-9

    def __post_init__(self):
        if self.trials < 1:
            raise IneqError("trials must be >= 1")
        if not (1 <= self.dim_lo <= self.dim_hi <= DIM_CAP):
            raise IneqError(
                f"dims must satisfy 1 <= lo <= hi <= {DIM_CAP}")
        if self.fields not in ("real", "complex", "both"):
            raise IneqError("fields must be real, complex or both")
        if not self.check_ids and self.suite != "all" \
                and self.suite not in catalog.SUITES:
            raise IneqError(f"unknown suite {self.suite!r}")

    def field_tags(self) -> tuple[str, ...]:
        if self.fields == "both":
            return ("real", "complex")
        return (self.fields,)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite, "check_ids": list(self.check_ids),
            "trials": self.trials, "dim_lo": self.dim_lo,
            "dim_hi": self.dim_hi, "fields": self.fields,
            "seed": self.seed, "force": self.force,
            "rel_tol": self.rel_tol,
        }


# ------------------------------------------------------- seed derivation


def trial_seed(master: int, check_id: str, field_tag: str,
               trial: int) -> int:
    """Counter-based per-trial seed; order- and thread-independent."""
    key = f"{master}:{check_id}:{field_tag}:{trial}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(),
                          "big")


def _digest_update(h, obj) -> None:
    if obj is None:
        h.update(b"~")
    elif isinstance(obj, np.ndarray):
        h.update(np.ascontiguousarray(obj).tobytes())
    elif isinstance(obj, (numbers.Complex, np.generic)):
        h.update(repr(complex(obj)).encode())
    elif isinstance(obj, str):
        h.update(obj.encode())
    elif isinstance(obj, dict):
        for k in sorted(obj):
            h.update(str(k).encode())
            _digest_update(h, obj[k])
    elif isinstance(obj, (list, tuple)):
        for item in obj:
            _digest_update(h, item)
    elif hasattr(obj, "matrix"):
        _digest_update(h, np.asarray(obj.matrix))
    elif hasattr(obj, "vectors"):
        _digest_update(h, np.asarray(obj.vectors))
    elif hasattr(obj, "re") and hasattr(obj, "im"):
        _digest_update(h, obj.re)
        _digest_update(h, obj.im)
    elif callable(obj):
        h.update(getattr(obj, "__name__", "callable").encode())
    else:
        h.update(repr(obj).encode())


def instance_digest(inst: CheckInstance) -> str:
    """Stable short fingerprint of an instance's numeric content."""
    h = hashlib.blake2b(digest_size=10)
    _digest_update(h, inst.field_tag)
    _digest_update(h, inst.dim)
    for table in (inst.vectors, inst.families, inst.reals, inst.scalars,
                  inst.seq, inst.meta):
        _digest_update(h, table)
    _digest_update(h, inst.weights)
    return h.hexdigest()


# --------------------------------------------------------------- sampling


def sample(check_id: str, dim: int, field_tag: str,
           seed: int) -> CheckInstance:
    """A hypothesis-satisfying instance for the check.

    Samplers are constructive, so the first draw almost always passes;
    a rejection loop capped at 10,000 attempts covers the rest and ends
    in GeneratorExhausted rather than silence.
    """
    chk = get_check(check_id)
    if field_tag not in chk.fields:
        raise IneqError(f"{check_id} does not support field {field_tag}")
    if dim < chk.min_dim:
        raise IneqError(f"{check_id} needs dim >= {chk.min_dim}")
    rng = np.random.default_rng(seed)
    for _ in range(_REJECTION_CAP):
        inst = chk.sampler(rng, dim, field_tag)
        ok, _ = hypothesis_holds(check_id, inst)
        if ok:
            return inst
    raise GeneratorExhausted(
        f"{check_id}: no hypothesis-satisfying instance in "
        f"{_REJECTION_CAP} attempts")


def _run_trial(chk, cfg: SuiteConfig, field_tag: str,
               trial: int) -> tuple[CheckInstance, CheckReport]:
    seed_t = trial_seed(cfg.seed, chk.id, field_tag, trial)
    rng = np.random.default_rng(seed_t)
    lo = max(cfg.dim_lo, chk.min_dim)
    if lo > cfg.dim_hi:
        raise IneqError(
            f"{chk.id} needs dim >= {chk.min_dim}, above configured range")
    dim = int(rng.integers(lo, cfg.dim_hi + 1))
    inst = chk.sampler(rng, dim, field_tag)
    rep = catalog.evaluate(chk.id, inst, force=cfg.force)
    return inst, rep


def replay_trial(cfg: SuiteConfig, check_id: str, field_tag: str,
                 trial: int) -> tuple[CheckInstance, CheckReport]:
    """Reproduce the exact instance and report of one suite trial."""
    return _run_trial(get_check(check_id), cfg, field_tag, trial)


# ------------------------------------------------------------ aggregation


@dataclass
class CheckAggregate:
    """Per-(check, field) tallies over a suite run."""

    check_id: str
    field_tag: str
    trials: int = 0
    holds: int = 0
    violations: int = 0
    rejections: int = 0
    equality_hits: int = 0
    min_relative_margin: float = float("inf")
    argmin_trial: int = -1
    argmin_digest: str = ""
    violation_triples: list = field(default_factory=list)

    def add(self, trial: int, inst: CheckInstance, rep: CheckReport,
            cfg: SuiteConfig) -> None:
        self.trials += 1
        if rep.verdict == HOLDS:
            self.holds += 1
        elif rep.verdict == VIOLATED:
            self.violations += 1
            self.violation_triples.append(
                (self.check_id,
                 trial_seed(cfg.seed, self.check_id, self.field_tag,
                            trial), trial))
        else:
            self.rejections += 1
        if rep.equality_flag:
            self.equality_hits += 1
        if rep.hypothesis_ok and rep.relative_margin \
                < self.min_relative_margin:
            self.min_relative_margin = rep.relative_margin
            self.argmin_trial = trial
            self.argmin_digest = instance_digest(inst)

    def to_dict(self) -> dict:
        margin = self.min_relative_margin
        return {
            "check_id": self.check_id, "field": self.field_tag,
            "trials": self.trials, "holds": self.holds,
            "violations": self.violations,
            "rejections": self.rejections,
            "equality_hits": self.equality_hits,
            "min_relative_margin":
                None if margin == float("inf") else margin,
            "argmin_trial": self.argmin_trial,
            "argmin_digest": self.argmin_digest,
            "violation_triples":
                [list(t) for t in self.violation_triples],
        }


@dataclass
class SuiteReport:
    """Aggregates for every (check, field) pair plus the config echo."""

    config: SuiteConfig
    aggregates: list[CheckAggregate]
    wall_time: float = 0.0

    @property
    def total_violations(self) -> int:
        return sum(a.violations for a in self.aggregates)

    @property
    def total_rejections(self) -> int:
        return sum(a.rejections for a in self.aggregates)

    def to_dict(self) -> dict:
        rows = sorted(self.aggregates,
                      key=lambda a: (a.check_id, a.field_tag))
        return {
            "config": self.config.to_dict(),
            "checks": [a.to_dict() for a in rows],
            "summary": {
                "checks": len(rows),
                "trials": sum(a.trials for a in rows),
                "holds": sum(a.holds for a in rows),
                "violations": self.total_violations,
                "rejections": self.total_rejections,
                "wall_time_s": round(self.wall_time, 3),
            },
        }


def _resolve_checks(cfg: SuiteConfig):
    if cfg.check_ids:
        return [get_check(cid) for cid in cfg.check_ids]
    checks = catalog.checks_in_suite(cfg.suite)
    if not checks:
        raise IneqError(f"suite {cfg.suite!r} has no registered checks")
    return checks


def _worker_count() -> int:
    env = os.environ.get("INEQ_THREADS", "")
    if env.strip():
        try:
            n = int(env)
        except ValueError:
            raise IneqError(f"INEQ_THREADS must be an integer, got {env!r}")
        return max(1, n)
    return min(4, os.cpu_count() or 1)


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Run every requested check for cfg.trials trials per field.

    Trials are independent; per-trial seeds are counter-derived, so the
    aggregates are identical for any number of workers.
    """
    checks = _resolve_checks(cfg)
    units = [(chk, ft) for chk in checks for ft in cfg.field_tags()
             if ft in chk.fields]

    def run_unit(unit):
        chk, ft = unit
        agg = CheckAggregate(chk.id, ft)
        for trial in range(cfg.trials):
            inst, rep = _run_trial(chk, cfg, ft, trial)
            agg.add(trial, inst, rep, cfg)
        return agg

    start = time.perf_counter()
    workers = _worker_count()
    if workers == 1 or len(units) <= 1:
        aggs = [run_unit(u) for u in units]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            aggs = list(pool.map(run_unit, units))
    return SuiteReport(cfg, aggs, time.perf_counter() - start)


# --------------------------------------------------------------- sharpness


def _slot_names(inst: CheckInstance) -> list[tuple[str, str]]:
    """(table, key) names of numeric slots a search may perturb."""
    slots = []
    for tname in ("vectors", "seq", "reals"):
        for k, v in getattr(inst, tname).items():
            if isinstance(v, np.ndarray) or isinstance(v, numbers.Real):
                slots.append((tname, k))
    if isinstance(inst.weights, np.ndarray):
        slots.append(("weights", ""))
    return slots


def _clone_instance(inst: CheckInstance) -> CheckInstance:
    def cp(table):
        return {k: (v.copy() if isinstance(v, np.ndarray) else v)
                for k, v in table.items()}
    return CheckInstance(
        field_tag=inst.field_tag, dim=inst.dim, vectors=cp(inst.vectors),
        families=inst.families.copy(), reals=dict(inst.reals),
        scalars=dict(inst.scalars),
        weights=(inst.weights.copy()
                 if isinstance(inst.weights, np.ndarray)
                 else inst.weights),
        seq=cp(inst.seq), funcs=inst.funcs.copy(), meta=inst.meta.copy())


def _perturb(inst: CheckInstance, slot: tuple[str, str], step: float,
             rng) -> CheckInstance:
    """A copy of the instance with one numeric slot nudged by step."""
    cand = _clone_instance(inst)
    tname, key = slot
    if tname == "weights":
        base = cand.weights
        bump = step * rng.standard_normal(base.shape)
        object.__setattr__(cand, "weights", np.clip(base + bump, 0.0,
                                                    None))
        return cand
    table = getattr(cand, tname)
    base = table[key]
    if isinstance(base, np.ndarray):
        bump = step * rng.standard_normal(base.shape)
        if np.iscomplexobj(base):
            bump = bump + 1j * step * rng.standard_normal(base.shape)
        table[key] = base + bump
    else:
        table[key] = float(base) * (1.0 + step * rng.standard_normal())
    return cand


def probe_sharpness(check_id: str, budget: int = 2048, dim: int = 4,
                    field_tag: str | None = None,
                    seed: int = 2024) -> float:
    """Best attained/stated ratio found for a check's top comparison.

    Tries the registered extremal witness first, then a random-restart
    coordinate search (32 restarts, step shrinking by half over 8
    levels) over the instance's numeric slots, rejecting steps that
    leave the hypothesis set.  Returns the best ratio; 1 means the
    stated bound is attained.
    """
    chk = get_check(check_id)
    ft = field_tag or chk.fields[0]
    best = 0.0
    spent = 0
    witness = catalog.equality_witness(check_id)
    if witness is not None:
        best = catalog.sharpness_ratio(check_id, witness)
        spent += 1
    restarts = 32
    dim = max(dim, chk.min_dim)
    for restart in range(restarts):
        if spent >= budget:
            break
        inst = sample(check_id, dim, ft,
                      trial_seed(seed, check_id, ft, restart))
        current = catalog.sharpness_ratio(check_id, inst)
        spent += 1
        best = max(best, current)
        rng = np.random.default_rng(
            trial_seed(seed + 1, check_id, ft, restart))
        step = 0.5
        for _ in range(8):
            improved = False
            for slot in _slot_names(inst):
                if spent >= budget:
                    return best
                cand = _perturb(inst, slot, step, rng)
                ok, _ = hypothesis_holds(check_id, cand)
                if not ok:
                    continue
                ratio = catalog.sharpness_ratio(check_id, cand)
                spent += 1
                if ratio > current:
                    current, inst = ratio, cand
                    improved = True
            best = max(best, current)
            if not improved:
                step *= 0.5
    return best


# ---------------------------------------------------------------- reports


def report_to_json(report: SuiteReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def report_to_csv(report: SuiteReport) -> str:
    doc = report.to_dict()
    buf = io.StringIO()
    fields = ["check_id", "field", "trials", "holds", "violations",
              "rejections", "equality_hits", "min_relative_margin",
              "argmin_trial", "argmin_digest", "violation_triples"]
    writer = csv.DictWriter(buf, fieldnames=fields)
    writer.writeheader()
    for row in doc["checks"]:
        row = dict(row)
        row["violation_triples"] = ";".join(
            f"{c}:{s}:{t}" for c, s, t in row["violation_triples"])
        writer.writerow(row)
    return buf.getvalue()


def report_to_text(report: SuiteReport) -> str:
    doc = report.to_dict()
    lines = [
        "suite {suite} trials {trials} dims {dim_lo}..{dim_hi} "
        "fields {fields} seed {seed}".format(**doc["config"]),
        "",
    ]
    for row in doc["checks"]:
        margin = row["min_relative_margin"]
        lines.append(
            "{:<24s} {:8s} trials {:5d} holds {:5d} violations {:3d} "
            "rejections {:3d} min margin {}".format(
                row["check_id"], row["field"], row["trials"],
                row["holds"], row["violations"], row["rejections"],
                "n/a" if margin is None else f"{margin:+.3e}"))
    s = doc["summary"]
    lines += ["", "checks {checks} trials {trials} holds {holds} "
              "violations {violations} rejections {rejections} "
              "wall {wall_time_s}s".format(**s)]
    return "\n".join(lines) + "\n"


_FORMATS = {"json": report_to_json, "csv": report_to_csv,
            "text": report_to_text}


def emit_report(report: SuiteReport, fmt: str = "json",
                path: str | None = None) -> str:
    """Render the report; write it to path when given."""
    try:
        render = _FORMATS[fmt]
    except KeyError:
        raise IneqError(f"unknown report format {fmt!r}")
    payload = render(report)
    if path is not None:
        try:
            with open(path, "w") as fh:
                fh.write(payload)
        except OSError as exc:
            raise IneqError(f"cannot write report to {path}: {exc}")
    return payload


def ingest_report(payload: str) -> dict:
    """Parse a JSON report back into its aggregate dictionary."""
    return json.loads(payload)

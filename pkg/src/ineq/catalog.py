"""Check registry, instances and reports.

Every verifiable statement in the package is a *check*: a named recipe
that receives a CheckInstance (vectors, families, numbers bound to named
slots), tests the statement's hypothesis, and evaluates the displayed
quantities into a numeric chain.

Chains are stored in ascending order: chain[k] <= chain[k+1] must hold
up to tolerance, and the report's margin is the smallest adjacent gap.
Statements displayed as "A >= B >= C" therefore appear as (C, B, A).
Identities "A = B" are encoded as the closed chain (A, B, A), whose
margin equals -|A - B|; they hold iff the sides agree within tolerance.

Verdicts: Holds, Violated (hypothesis satisfied but some gap below
-1e-9 relative), HypothesisFailed (soft; never an exception).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

import numpy as np

from .core import ABS_FLOOR, EQUALITY_TOL, SlotMissing

SUITES = ("ch1", "ch2", "ch3", "ch4", "ch5", "ch6")

HOLDS = "Holds"
VIOLATED = "Violated"
HYPOTHESIS_FAILED = "HypothesisFailed"


# ------------------------------------------------------------- instances


@dataclass
class CheckInstance:
    """Named slots holding everything a check's statement quantifies over."""

    field_tag: str = "real"
    dim: int = 2
    vectors: dict[str, Any] = field(default_factory=dict)
    families: dict[str, Any] = field(default_factory=dict)
    reals: dict[str, float] = field(default_factory=dict)
    scalars: dict[str, Any] = field(default_factory=dict)
    weights: Any = None
    seq: dict[str, Any] = field(default_factory=dict)
    funcs: dict[str, Any] = field(default_factory=dict)
    meta: dict[str, Any] = field(default_factory=dict)

    def _get(self, table: dict, kind: str, name: str):
        try:
            return table[name]
        except KeyError:
            raise SlotMissing(f"{kind} slot {name!r} missing") from None

    def vec(self, name: str):
        return self._get(self.vectors, "vector", name)

    def fam(self, name: str):
        return self._get(self.families, "family", name)

    def real(self, name: str) -> float:
        return float(self._get(self.reals, "real", name))

    def scalar(self, name: str):
        return self._get(self.scalars, "scalar", name)

    def lst(self, name: str):
        return self._get(self.seq, "sequence", name)

    def func(self, name: str):
        return self._get(self.funcs, "function", name)


# --------------------------------------------------------------- reports


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    hypothesis_ok: bool
    chain: tuple[tuple[str, float], ...]
    margin: float
    relative_margin: float
    scale: float
    verdict: str
    equality_flag: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "hypothesis_ok": self.hypothesis_ok,
            "chain": [[label, value] for label, value in self.chain],
            "margin": self.margin,
            "relative_margin": self.relative_margin,
            "scale": self.scale,
            "verdict": self.verdict,
            "equality_flag": self.equality_flag,
            "note": self.note,
        }


def make_report(check_id: str, chain: Iterable[tuple[str, float]],
                scale: Optional[float] = None, hypothesis_ok: bool = True,
                note: str = "") -> CheckReport:
    """Assemble a report from an ascending chain of labeled values."""
    ch = tuple((str(label), float(value)) for label, value in chain)
    if len(ch) >= 2:
        values = [v for _, v in ch]
        margin = min(values[k + 1] - values[k] for k in range(len(values) - 1))
        if scale is None:
            scale = max(abs(v) for v in values)
    else:
        margin = 0.0
        if scale is None:
            scale = 0.0
    scale = max(float(scale), ABS_FLOOR)
    rel = margin / scale
    if not hypothesis_ok:
        verdict = HYPOTHESIS_FAILED
    elif rel < -EQUALITY_TOL:
        verdict = VIOLATED
    else:
        verdict = HOLDS
    return CheckReport(
        check_id=check_id,
        hypothesis_ok=hypothesis_ok,
        chain=ch,
        margin=float(margin),
        relative_margin=float(rel),
        scale=scale,
        verdict=verdict,
        equality_flag=bool(abs(rel) <= EQUALITY_TOL),
        note=note,
    )


def identity_chain(label_a: str, a: float, label_b: str,
                   b: float) -> list[tuple[str, float]]:
    """Closed chain for an identity a = b; margin becomes -|a - b|."""
    return [(label_a, a), (label_b, b), (label_a, a)]


def slack_chain(parts) -> tuple[list[tuple[str, float]], float]:
    """Cumulative chain for a bundle of displayed claims lhs <= rhs.

    parts holds (label, slack, scale) triples, one per claim, with
    slack = rhs - lhs in the claim's own units. The chain starts at zero
    and accumulates the normalized slacks, so it ascends iff every claim
    holds, and the report margin is the worst normalized slack. The
    returned scale is 1 and must be passed through unchanged.
    """
    chain = [("origin", 0.0)]
    total = 0.0
    for label, slack, scale in parts:
        total += float(slack) / max(float(scale), ABS_FLOOR)
        chain.append((str(label), total))
    return chain, 1.0


def bool_chain(label: str, agree: bool) \
        -> tuple[list[tuple[str, float]], float]:
    """Chain encoding a boolean agreement; violated iff agree is False.

    Used for statements of the form "condition A holds iff condition B
    holds": the first entry is the disagreement indicator, so the
    report margin is 0 on agreement and -1 on disagreement.
    """
    return [(str(label), 0.0 if agree else 1.0), ("agreement", 0.0)], 1.0


# -------------------------------------------------------------- registry


@dataclass(frozen=True)
class Check:
    """A registered statement.

    sampler(rng, dim, field) must return instances satisfying the
    hypothesis by construction (hard constraints may reject and retry
    internally; they raise GeneratorExhausted after their cap).
    chain_fn(inst) returns (ascending labeled chain, scale or None).
    witness() returns an equality instance when the statement has an
    explicit extremal configuration, else None.
    sharpness(inst) optionally maps an instance to an attained/stated
    ratio for the sharpness prober; defaults to the last two chain
    entries.
    """

    id: str
    suite: str
    title: str
    fields: tuple[str, ...]
    sampler: Callable[[np.random.Generator, int, str], CheckInstance]
    hypothesis: Callable[[CheckInstance], tuple[bool, str]]
    chain_fn: Callable[[CheckInstance], tuple[list, Optional[float]]]
    witness: Optional[Callable[[], CheckInstance]] = None
    min_dim: int = 1
    notes: str = ""


_REGISTRY: dict[str, Check] = {}


def register(check: Check) -> Check:
    if check.id in _REGISTRY:
        raise ValueError(f"duplicate check id {check.id}")
    if check.suite not in SUITES:
        raise ValueError(f"unknown suite {check.suite}")
    _REGISTRY[check.id] = check
    return check


def get_check(check_id: str) -> Check:
    try:
        return _REGISTRY[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None


def all_checks() -> list[Check]:
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def checks_in_suite(suite: str) -> list[Check]:
    if suite == "all":
        return all_checks()
    return [c for c in all_checks() if c.suite == suite]


def trivial_hypothesis(inst: CheckInstance) -> tuple[bool, str]:
    return True, ""


# ------------------------------------------------------------ evaluation


def hypothesis_holds(check_id: str, inst: CheckInstance) -> tuple[bool, str]:
    """Evaluate the named check's hypothesis; returns (ok, diagnostics)."""
    return get_check(check_id).hypothesis(inst)


def evaluate(check_id: str, inst: CheckInstance,
             force: bool = False) -> CheckReport:
    """Evaluate a check on an instance into a CheckReport.

    A failed hypothesis yields verdict HypothesisFailed; with force the
    chain is still evaluated (flag semantics: never counts as Violated).
    """
    chk = get_check(check_id)
    ok, why = chk.hypothesis(inst)
    if ok:
        chain, scale = chk.chain_fn(inst)
        return make_report(check_id, chain, scale, hypothesis_ok=True)
    if force:
        try:
            chain, scale = chk.chain_fn(inst)
        except Exception as exc:  # chain may be undefined off-hypothesis
            return make_report(check_id, (), None, hypothesis_ok=False,
                               note=f"{why}; evaluation failed: {exc}")
        return make_report(check_id, chain, scale, hypothesis_ok=False,
                           note=why)
    return make_report(check_id, (), None, hypothesis_ok=False, note=why)


def equality_witness(check_id: str):
    """Paper-style extremal instance for the check, or None."""
    chk = get_check(check_id)
    return chk.witness() if chk.witness is not None else None


def sharpness_ratio(check_id: str, inst: CheckInstance) -> float:
    """Attained/stated ratio used by the sharpness prober.

    For a reverse inequality gap <= bound the ratio is gap/bound; for a
    longer refinement chain it is the ratio of the two topmost entries.
    Values are clipped into [0, +inf); 1 means the bound is attained.
    """
    rep = evaluate(check_id, inst)
    if not rep.hypothesis_ok or len(rep.chain) < 2:
        return 0.0
    hi = rep.chain[-1][1]
    lo = rep.chain[-2][1]
    if abs(hi) <= ABS_FLOOR:
        return 1.0 if abs(lo) <= ABS_FLOOR else 0.0
    return max(0.0, lo / hi)

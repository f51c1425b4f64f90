"""Catalog checks for reverses of the triangle inequality (suite ch3).

For a finite family x_1..x_n the triangle inequality caps the norm of
the sum by the sum of norms.  Each check certifies a reverse: keeping
the family directionally aligned (cone floors, ball or band
memberships, pairwise spread or ratio caps, bounded forward
differences) buys an explicit lower bound on the norm of the sum, a
cap on the additive gap, or a coupling between the squared sums.  The
registered checks cover:

* T-DM, T-DM-FAM: cosine floors against a unit vector or an
  orthonormal family scale the whole norm sum;
* T-BALL, T-MM, T-BALL-FAM, T-MM-FAM: ball radii or two-sided band
  data around reference directions turn into multiplicative floors;
* T-ADD, T-ADD-FAM: per-member defects ||x_i|| - Re<x_i, e> cap the
  additive gap;
* T-SMALL, T-SMALL-MM, T-ARB, T-ARB-MM: gap caps proportional to the
  aligned component of the sum or to summed squared radii;
* T-SCHWARZ-BALL, T-SCHWARZ-MM: the normalized two-vector gap is
  capped by squared radius or relative band width;
* T-QUAD, T-QUAD-REF, T-PAIR-r: pairwise gap caps and floors couple
  the squared norm sum to the squared sum norm, with a shared
  diameter as a special case;
* T-FD-SUM, T-FD-SUP, T-FD-HOLDER, T-FD-22, T-QUAD-MM: forward
  differences or pairwise ratio bands cap the squared-sum defect;
* T-KLEM, T-KCOARSE, T-KBETTER, T-RHO, T-MM-QUAD, T-ETA: pairwise
  product-to-inner-product ratio caps blend the squared norm sum and
  the sum of squares below the squared sum norm;
* T-C2, T-C2-BALL, T-C2-MM, T-C2-FAM: simultaneous alignment with e
  and ie in complex spaces doubles the cone or band information;
* T-ARG, T-DISK: the same double alignment for complex scalars via
  argument ranges or intersecting disks;
* TX-*: supplementary gap caps from normalized distances, vectors
  outside the unit ball, complex weight ratios and power brackets;
* TR-*: quadratic-mean chains that thread the norm sum through
  root-mean-square and aligned-component bounds, with additive
  versions and complex scalar-endpoint variants.

The sequence slot "xs" holds the family as stacked rows and "zs"
holds complex scalar families; bound data sits in real or sequence
slots so the sharpness search can tighten it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import catalog, core
from .catalog import Check, CheckInstance, register, slack_chain
from .core import IneqError
from .forms import random_orthonormal

FLOOR = core.ABS_FLOOR
SUITE = "ch3"

__all__ = ["VectorFamily", "forward_differences", "evaluate_triangle"]


# ------------------------------------------------------------ public API


@dataclass(frozen=True)
class VectorFamily:
    """Finite ordered family of same-space vectors, stored as rows."""

    vectors: np.ndarray

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vectors))
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise IneqError("a vector family needs at least one member")
        object.__setattr__(self, "vectors", v)

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def items(self) -> list:
        return [self.vectors[k] for k in range(self.size)]

    @property
    def min_norm(self) -> float:
        return float(np.linalg.norm(self.vectors, axis=1).min())


def forward_differences(family) -> list[float]:
    """Norms of the consecutive differences x_{k+1} - x_k.

    Accepts a VectorFamily or stacked rows; a singleton family has no
    differences and raises instead of returning an empty list.
    """
    rows = family.vectors if isinstance(family, VectorFamily) \
        else np.atleast_2d(np.asarray(family))
    if rows.shape[0] < 2:
        raise IneqError("forward differences need at least two members")
    return [float(np.linalg.norm(rows[k + 1] - rows[k]))
            for k in range(rows.shape[0] - 1)]


def evaluate_triangle(check_id: str, inst: CheckInstance,
                      force: bool = False):
    """Evaluate a triangle-suite check instance into a CheckReport."""
    chk = catalog.get_check(check_id)
    if chk.suite != SUITE:
        raise IneqError(f"{check_id} is not a triangle-suite check")
    return catalog.evaluate(check_id, inst, force=force)


# --------------------------------------------------------------- helpers


def _sqrt0(v) -> float:
    return math.sqrt(max(float(v), 0.0))


def _re(z) -> float:
    return float(np.real(z))


def _im(z) -> float:
    return float(np.imag(z))


def _rows(inst, name="xs") -> np.ndarray:
    return np.atleast_2d(np.asarray(inst.lst(name)))


def _norms(xs) -> np.ndarray:
    return np.linalg.norm(xs, axis=1)


def _sum_norm(xs) -> float:
    return float(_norms(xs).sum())


def _norm_sum(xs) -> float:
    return float(np.linalg.norm(xs.sum(axis=0)))


def _sq_sum(xs) -> float:
    return float((_norms(xs) ** 2).sum())


def _unit(rng, dim, field) -> np.ndarray:
    return core.random_unit(rng, dim, field)


def _perp_unit(rng, dim, field, against) -> np.ndarray:
    """Unit vector orthogonal to every row of `against`."""
    rows = np.atleast_2d(np.asarray(against))
    for _ in range(64):
        v = _unit(rng, dim, field)
        for a in rows:
            v = v - core.inner(v, a) * a
        nv = float(np.linalg.norm(v))
        if nv > 1e-8:
            return v / nv
    raise core.GeneratorExhausted("orthogonal complement sampler")


def _n_members(rng, lo=1, hi=10) -> int:
    return int(rng.integers(lo, hi + 1))


def _band(scale) -> float:
    """Roundoff allowance for re-verifying a sampled condition."""
    return 1e-10 * max(float(scale), 1.0)


def _unit_ok(v) -> bool:
    return abs(core.norm(v) - 1.0) <= 1e-9


def _members_nonzero(xs) -> bool:
    return float(_norms(xs).min()) >= 1e-12


def _in_ball(x, center, radius) -> bool:
    return core.norm(x - center) <= radius + _band(radius + core.norm(x))


def _band_cond(x, ref, lo, hi) -> bool:
    """Re<hi*ref - x, x - lo*ref> >= 0 up to roundoff."""
    val = _re(core.inner(hi * ref - x, x - lo * ref))
    return val >= -_band((abs(hi) + abs(lo)) ** 2 + core.norm_sq(x))


def _ball_cloud(rng, dim, field, center, radius, n) -> np.ndarray:
    """Rows sampled strictly inside the ball around `center`."""
    return np.array([center + radius * rng.uniform(0.0, 0.98)
                     * _unit(rng, dim, field) for _ in range(n)])


# --------------------------------------------------- cone floors (T-DM)


def _sample_dm(rng, dim, field):
    a = _unit(rng, dim, field)
    n = _n_members(rng)
    xs = []
    for _ in range(n):
        c = rng.uniform(0.3, 2.0)
        d = rng.uniform(0.0, 0.8) * c
        xs.append(c * a + d * _perp_unit(rng, dim, field, a))
    xs = np.array(xs)
    floor = min(_re(core.inner(x, a)) / core.norm(x) for x in xs)
    r = max(0.0, floor * (1.0 - rng.uniform(0.0, 0.3)))
    return CheckInstance(field_tag=field, dim=dim, vectors={"a": a},
                         seq={"xs": xs}, reals={"r": r})


def _hyp_dm(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    r = inst.real("r")
    if not _unit_ok(a):
        return False, "reference vector is not unit"
    if not _members_nonzero(xs):
        return False, "a family member is numerically zero"
    if r < 0.0:
        return False, "cone floor is negative"
    for x in xs:
        if r * core.norm(x) > _re(core.inner(x, a)) + _band(core.norm(x)):
            return False, "a member leaves the cone"
    return True, ""


def _chain_dm(inst):
    xs = _rows(inst)
    S = _sum_norm(xs)
    chain = [("cone floor times the norm sum", inst.real("r") * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


def _witness_dm():
    a = np.zeros(4)
    a[0] = 1.0
    return CheckInstance(field_tag="real", dim=4, vectors={"a": a},
                         seq={"xs": np.tile(a, (5, 1))}, reals={"r": 1.0})


register(Check(
    id="T-DM", suite=SUITE,
    title="a uniform cosine floor against a unit vector scales the "
          "norm sum below the sum norm",
    fields=("real", "complex"), sampler=_sample_dm, hypothesis=_hyp_dm,
    chain_fn=_chain_dm, witness=_witness_dm, min_dim=2,
    notes="equality holds when the sum is the floor times the norm sum "
          "times the reference vector"))


def _sample_dm_fam(rng, dim, field):
    m = int(rng.integers(1, min(dim - 1, 4) + 1))
    fam = random_orthonormal(rng, dim, m, field)
    n = _n_members(rng)
    xs = []
    for _ in range(n):
        x = sum(rng.uniform(0.2, 1.5) * fam.vectors[k] for k in range(m))
        x = x + rng.uniform(0.0, 0.5) * _perp_unit(rng, dim, field,
                                                   fam.vectors)
        xs.append(x)
    xs = np.array(xs)
    floors = []
    for k in range(m):
        fl = min(_re(core.inner(x, fam.vectors[k])) / core.norm(x)
                 for x in xs)
        floors.append(max(0.0, fl * (1.0 - rng.uniform(0.0, 0.3))))
    return CheckInstance(field_tag=field, dim=dim,
                         families={"basis": fam}, seq={
                             "xs": xs,
                             "floors": np.array(floors)})


def _hyp_dm_fam(inst):
    xs = _rows(inst)
    fam = inst.fam("basis")
    floors = np.asarray(inst.lst("floors"), dtype=float)
    if fam.gram_defect > 1e-10:
        return False, "reference family is not orthonormal"
    if not _members_nonzero(xs):
        return False, "a family member is numerically zero"
    if floors.min() < 0.0:
        return False, "a cone floor is negative"
    for x in xs:
        nx = core.norm(x)
        for k in range(fam.size):
            if floors[k] * nx > _re(core.inner(x, fam.vectors[k])) \
                    + _band(nx):
                return False, "a member leaves a cone"
    return True, ""


def _chain_dm_fam(inst):
    xs = _rows(inst)
    floors = np.asarray(inst.lst("floors"), dtype=float)
    S = _sum_norm(xs)
    coef = _sqrt0((floors ** 2).sum())
    chain = [("combined cone floor times the norm sum", coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-DM-FAM", suite=SUITE,
    title="cosine floors against an orthonormal family combine in "
          "quadrature to scale the norm sum",
    fields=("real", "complex"), sampler=_sample_dm_fam,
    hypothesis=_hyp_dm_fam, chain_fn=_chain_dm_fam, min_dim=2))


# ------------------------------------------- ball and band memberships


def _sample_ball(rng, dim, field):
    a = _unit(rng, dim, field)
    rho = rng.uniform(0.05, 0.95)
    xs = _ball_cloud(rng, dim, field, a, rho, _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"a": a},
                         seq={"xs": xs}, reals={"rho": rho})


def _hyp_ball(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    rho = inst.real("rho")
    if not _unit_ok(a):
        return False, "reference vector is not unit"
    if not 0.0 < rho < 1.0:
        return False, "radius is outside (0, 1)"
    for x in xs:
        if not _in_ball(x, a, rho):
            return False, "a member leaves the ball"
    return True, ""


def _chain_ball(inst):
    xs = _rows(inst)
    S = _sum_norm(xs)
    coef = _sqrt0(1.0 - inst.real("rho") ** 2)
    chain = [("radius floor times the norm sum", coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-BALL", suite=SUITE,
    title="membership in a ball around a unit vector scales the norm "
          "sum below the sum norm",
    fields=("real", "complex"), sampler=_sample_ball,
    hypothesis=_hyp_ball, chain_fn=_chain_ball, min_dim=2))


def _sample_mm(rng, dim, field):
    a = _unit(rng, dim, field)
    lo = rng.uniform(0.2, 1.0)
    hi = lo + rng.uniform(0.1, 2.0)
    xs = _ball_cloud(rng, dim, field, 0.5 * (hi + lo) * a,
                     0.5 * (hi - lo), _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"a": a},
                         seq={"xs": xs}, reals={"lo": lo, "hi": hi})


def _hyp_mm(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    lo, hi = inst.real("lo"), inst.real("hi")
    if not _unit_ok(a):
        return False, "reference vector is not unit"
    if not 0.0 < lo <= hi:
        return False, "band endpoints are not ordered positives"
    for x in xs:
        if not _in_ball(x, 0.5 * (hi + lo) * a, 0.5 * (hi - lo)):
            return False, "a member leaves the band ball"
    return True, ""


def _chain_mm(inst):
    xs = _rows(inst)
    lo, hi = inst.real("lo"), inst.real("hi")
    S, N = _sum_norm(xs), _norm_sum(xs)
    gm = math.sqrt(lo * hi)
    parts = [
        ("geometric-mean floor on the sum norm",
         N - 2.0 * gm / (lo + hi) * S, max(S, FLOOR)),
        ("band cap on the additive gap",
         (math.sqrt(hi) - math.sqrt(lo)) ** 2 / (2.0 * gm) * N - (S - N),
         max(S, FLOOR)),
    ]
    return slack_chain(parts)


register(Check(
    id="T-MM", suite=SUITE,
    title="a two-sided band along a unit vector floors the sum norm "
          "and caps the additive gap",
    fields=("real", "complex"), sampler=_sample_mm, hypothesis=_hyp_mm,
    chain_fn=_chain_mm, min_dim=2,
    notes="the multiplicative floor and the additive cap are the same "
          "display rearranged; both slacks are reported"))


def _sample_ball_fam(rng, dim, field):
    m = int(rng.integers(1, min(dim, 4) + 1))
    fam = random_orthonormal(rng, dim, m, field)
    center = fam.vectors.mean(axis=0)
    dist = _sqrt0(1.0 - 1.0 / m)
    rhos = np.array([rng.uniform(dist + 0.02, 0.99) for _ in range(m)])
    slack = float((rhos - dist).min())
    xs = _ball_cloud(rng, dim, field, center, 0.9 * slack,
                     _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim,
                         families={"basis": fam},
                         seq={"xs": xs, "radii": rhos})


def _hyp_ball_fam(inst):
    xs = _rows(inst)
    fam = inst.fam("basis")
    rhos = np.asarray(inst.lst("radii"), dtype=float)
    if fam.gram_defect > 1e-10:
        return False, "reference family is not orthonormal"
    if not (0.0 < rhos.min() and rhos.max() < 1.0):
        return False, "a radius is outside (0, 1)"
    for x in xs:
        for k in range(fam.size):
            if not _in_ball(x, fam.vectors[k], rhos[k]):
                return False, "a member leaves a ball"
    return True, ""


def _chain_ball_fam(inst):
    xs = _rows(inst)
    rhos = np.asarray(inst.lst("radii"), dtype=float)
    S = _sum_norm(xs)
    coef = _sqrt0(len(rhos) - float((rhos ** 2).sum()))
    chain = [("combined radius floor times the norm sum", coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-BALL-FAM", suite=SUITE,
    title="memberships in balls around an orthonormal family combine "
          "into one floor on the sum norm",
    fields=("real", "complex"), sampler=_sample_ball_fam,
    hypothesis=_hyp_ball_fam, chain_fn=_chain_ball_fam, min_dim=2))


def _band_endpoints(rng, xs, align):
    """Band (lo, hi) capturing every member against a unit direction.

    align maps a member to its aligned component; lo sits below the
    smallest component and hi above the smallest admissible upper
    endpoint, so every member satisfies the two-sided condition."""
    vals = [align(x) for x in xs]
    lo = rng.uniform(0.3, 0.8) * min(vals)
    hi = (1.0 + rng.uniform(0.05, 0.5)) * max(
        (core.norm_sq(x) - lo * v) / (v - lo) for x, v in zip(xs, vals))
    return lo, hi


def _sample_mm_fam(rng, dim, field):
    m = int(rng.integers(1, min(dim - 1, 4) + 1))
    fam = random_orthonormal(rng, dim, m, field)
    n = _n_members(rng)
    xs = []
    for _ in range(n):
        x = sum(rng.uniform(0.4, 1.2) * fam.vectors[k] for k in range(m))
        x = x + rng.uniform(0.0, 0.15) * _perp_unit(rng, dim, field,
                                                    fam.vectors)
        xs.append(x)
    xs = np.array(xs)
    los, his = [], []
    for k in range(m):
        lo, hi = _band_endpoints(
            rng, xs, lambda x, k=k: _re(core.inner(x, fam.vectors[k])))
        los.append(lo)
        his.append(hi)
    return CheckInstance(field_tag=field, dim=dim,
                         families={"basis": fam},
                         seq={"xs": xs, "band_lo": np.array(los),
                              "band_hi": np.array(his)})


def _hyp_mm_fam(inst):
    xs = _rows(inst)
    fam = inst.fam("basis")
    los = np.asarray(inst.lst("band_lo"), dtype=float)
    his = np.asarray(inst.lst("band_hi"), dtype=float)
    if fam.gram_defect > 1e-10:
        return False, "reference family is not orthonormal"
    if not (0.0 < los.min() and np.all(los <= his)):
        return False, "band endpoints are not ordered positives"
    for x in xs:
        for k in range(fam.size):
            if not _band_cond(x, fam.vectors[k], los[k], his[k]):
                return False, "a member leaves a band"
    return True, ""


def _chain_mm_fam(inst):
    xs = _rows(inst)
    los = np.asarray(inst.lst("band_lo"), dtype=float)
    his = np.asarray(inst.lst("band_hi"), dtype=float)
    S = _sum_norm(xs)
    coef = 2.0 * _sqrt0(float((los * his / (los + his) ** 2).sum()))
    chain = [("combined band floor times the norm sum", coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-MM-FAM", suite=SUITE,
    title="two-sided bands along an orthonormal family combine into "
          "one floor on the sum norm",
    fields=("real", "complex"), sampler=_sample_mm_fam,
    hypothesis=_hyp_mm_fam, chain_fn=_chain_mm_fam, min_dim=2))


# -------------------------------------------------------- additive caps


def _free_rows(rng, dim, field, n) -> np.ndarray:
    return np.array([rng.uniform(0.25, 2.0) * _unit(rng, dim, field)
                     for _ in range(n)])


def _defect(x, e) -> float:
    return core.norm(x) - _re(core.inner(x, e))


def _sample_add(rng, dim, field):
    e = _unit(rng, dim, field)
    xs = _free_rows(rng, dim, field, _n_members(rng))
    caps = np.array([_defect(x, e) * (1.0 + rng.uniform(0.0, 1.0))
                     for x in xs])
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs, "caps": caps})


def _hyp_add(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    caps = np.asarray(inst.lst("caps"), dtype=float)
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if caps.min() < 0.0:
        return False, "a defect cap is negative"
    for x, cap in zip(xs, caps):
        if _defect(x, e) > cap + _band(core.norm(x)):
            return False, "a member defect exceeds its cap"
    return True, ""


def _chain_add(inst):
    xs = _rows(inst)
    caps = np.asarray(inst.lst("caps"), dtype=float)
    S, N = _sum_norm(xs), _norm_sum(xs)
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("summed defect caps", float(caps.sum()))]
    return chain, max(S, FLOOR)


def _witness_add():
    e = np.zeros(3)
    e[0] = 1.0
    w1 = np.array([0.0, 0.4, 0.0])
    w2 = np.array([0.0, 0.0, 0.3])
    ws = [w1, w2, -(w1 + w2)]
    cs = [1.0, 0.8, 1.2]
    xs = np.array([c * e + w for c, w in zip(cs, ws)])
    caps = np.array([_defect(x, e) for x in xs])
    return CheckInstance(field_tag="real", dim=3, vectors={"e": e},
                         seq={"xs": xs, "caps": caps})


register(Check(
    id="T-ADD", suite=SUITE,
    title="summed defects against a unit vector cap the additive "
          "triangle gap",
    fields=("real", "complex"), sampler=_sample_add,
    hypothesis=_hyp_add, chain_fn=_chain_add, witness=_witness_add,
    min_dim=2,
    notes="exact caps on a family whose sum is an exact multiple of "
          "the reference vector attain equality"))


def _sample_add_fam(rng, dim, field):
    m = int(rng.integers(1, min(dim, 4) + 1))
    fam = random_orthonormal(rng, dim, m, field)
    xs = _free_rows(rng, dim, field, _n_members(rng))
    caps = np.array([[_defect(x, fam.vectors[k])
                      * (1.0 + rng.uniform(0.0, 1.0))
                      for k in range(m)] for x in xs])
    return CheckInstance(field_tag=field, dim=dim,
                         families={"basis": fam},
                         seq={"xs": xs, "caps": caps})


def _hyp_add_fam(inst):
    xs = _rows(inst)
    fam = inst.fam("basis")
    caps = np.asarray(inst.lst("caps"), dtype=float)
    if fam.gram_defect > 1e-10:
        return False, "reference family is not orthonormal"
    if caps.shape != (xs.shape[0], fam.size):
        return False, "cap table shape does not match the family"
    for i, x in enumerate(xs):
        for k in range(fam.size):
            if _defect(x, fam.vectors[k]) > caps[i, k] \
                    + _band(core.norm(x)):
                return False, "a member defect exceeds its cap"
    return True, ""


def _chain_add_fam(inst):
    xs = _rows(inst)
    fam = inst.fam("basis")
    caps = np.asarray(inst.lst("caps"), dtype=float)
    S, N = _sum_norm(xs), _norm_sum(xs)
    m = fam.size
    rhs = N / math.sqrt(m) + float(caps.sum()) / m
    chain = [("norm sum", S),
             ("scaled sum norm plus averaged caps", rhs)]
    return chain, max(S, FLOOR)


register(Check(
    id="T-ADD-FAM", suite=SUITE,
    title="defect caps against an orthonormal family bound the norm "
          "sum by a damped sum norm plus averaged caps",
    fields=("real", "complex"), sampler=_sample_add_fam,
    hypothesis=_hyp_add_fam, chain_fn=_chain_add_fam, min_dim=2))


# --------------------------------- gap caps through a unit direction


def _sample_small(rng, dim, field):
    e = _unit(rng, dim, field)
    rho = rng.uniform(0.05, 0.9)
    xs = _ball_cloud(rng, dim, field, e, rho, _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs}, reals={"rho": rho})


def _hyp_small(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    rho = inst.real("rho")
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if not 0.0 < rho < 1.0:
        return False, "radius is outside (0, 1)"
    for x in xs:
        if not _in_ball(x, e, rho):
            return False, "a member leaves the ball"
    return True, ""


def _chain_small(inst):
    xs = _rows(inst)
    rho = inst.real("rho")
    S, N = _sum_norm(xs), _norm_sum(xs)
    root = _sqrt0(1.0 - rho * rho)
    c = rho * rho / max(root * (1.0 + root), FLOOR)
    aligned = _re(core.inner(xs.sum(axis=0), inst.vec("e")))
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("cap through the aligned component", c * aligned),
             ("cap through the sum norm", c * N)]
    return chain, max(S, FLOOR)


register(Check(
    id="T-SMALL", suite=SUITE,
    title="a small ball around a unit vector caps the gap by the "
          "aligned component of the sum",
    fields=("real", "complex"), sampler=_sample_small,
    hypothesis=_hyp_small, chain_fn=_chain_small, min_dim=2))


def _sample_small_mm(rng, dim, field):
    e = _unit(rng, dim, field)
    lo = rng.uniform(0.2, 1.0)
    hi = lo + rng.uniform(0.1, 2.0)
    xs = _ball_cloud(rng, dim, field, 0.5 * (hi + lo) * e,
                     0.5 * (hi - lo), _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs}, reals={"lo": lo, "hi": hi})


def _hyp_small_mm(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    lo, hi = inst.real("lo"), inst.real("hi")
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if not 0.0 < lo <= hi:
        return False, "band endpoints are not ordered positives"
    for x in xs:
        if not _in_ball(x, 0.5 * (hi + lo) * e, 0.5 * (hi - lo)):
            return False, "a member leaves the band ball"
    return True, ""


def _chain_small_mm(inst):
    xs = _rows(inst)
    lo, hi = inst.real("lo"), inst.real("hi")
    S, N = _sum_norm(xs), _norm_sum(xs)
    c = (math.sqrt(hi) - math.sqrt(lo)) ** 2 \
        / (2.0 * math.sqrt(lo * hi))
    aligned = _re(core.inner(xs.sum(axis=0), inst.vec("e")))
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("band cap through the aligned component", c * aligned),
             ("band cap through the sum norm", c * N)]
    return chain, max(S, FLOOR)


register(Check(
    id="T-SMALL-MM", suite=SUITE,
    title="a two-sided band along a unit vector caps the gap by the "
          "aligned component of the sum",
    fields=("real", "complex"), sampler=_sample_small_mm,
    hypothesis=_hyp_small_mm, chain_fn=_chain_small_mm, min_dim=2,
    notes="the reference vector is taken unit so the aligned component "
          "comparison is meaningful"))


def _sample_arb(rng, dim, field):
    e = _unit(rng, dim, field)
    n = _n_members(rng)
    radii = np.array([rng.uniform(0.05, 1.5) for _ in range(n)])
    xs = np.array([e + r * rng.uniform(0.0, 1.0)
                   * _unit(rng, dim, field) for r in radii])
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs, "radii": radii})


def _hyp_arb(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    radii = np.asarray(inst.lst("radii"), dtype=float)
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if radii.min() <= 0.0:
        return False, "a radius is not positive"
    for x, r in zip(xs, radii):
        if not _in_ball(x, e, r):
            return False, "a member leaves its ball"
    return True, ""


def _chain_arb(inst):
    xs = _rows(inst)
    radii = np.asarray(inst.lst("radii"), dtype=float)
    S, N = _sum_norm(xs), _norm_sum(xs)
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("half the summed squared radii",
              0.5 * float((radii ** 2).sum()))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-ARB", suite=SUITE,
    title="per-member balls of any radius around a unit vector cap "
          "the gap by half the summed squared radii",
    fields=("real", "complex"), sampler=_sample_arb,
    hypothesis=_hyp_arb, chain_fn=_chain_arb, min_dim=2))


def _sample_arb_mm(rng, dim, field):
    e = _unit(rng, dim, field)
    n = _n_members(rng)
    los = np.array([rng.uniform(0.1, 1.0) for _ in range(n)])
    his = los + rng.uniform(0.05, 2.0, size=n)
    xs = np.array([0.5 * (hi + lo) * e + 0.5 * (hi - lo)
                   * rng.uniform(0.0, 1.0) * _unit(rng, dim, field)
                   for lo, hi in zip(los, his)])
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs, "band_lo": los,
                              "band_hi": his})


def _hyp_arb_mm(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    los = np.asarray(inst.lst("band_lo"), dtype=float)
    his = np.asarray(inst.lst("band_hi"), dtype=float)
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if not (0.0 < los.min() and np.all(los <= his)):
        return False, "band endpoints are not ordered positives"
    for x, lo, hi in zip(xs, los, his):
        if not _in_ball(x, 0.5 * (hi + lo) * e, 0.5 * (hi - lo)):
            return False, "a member leaves its band ball"
    return True, ""


def _chain_arb_mm(inst):
    xs = _rows(inst)
    los = np.asarray(inst.lst("band_lo"), dtype=float)
    his = np.asarray(inst.lst("band_hi"), dtype=float)
    S, N = _sum_norm(xs), _norm_sum(xs)
    cap = 0.25 * float(((his - los) ** 2 / (his + los)).sum())
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("quarter the summed relative band widths", cap)]
    return chain, max(S, FLOOR)


register(Check(
    id="T-ARB-MM", suite=SUITE,
    title="per-member bands along a unit vector cap the gap by the "
          "summed squared band widths over band sums",
    fields=("real", "complex"), sampler=_sample_arb_mm,
    hypothesis=_hyp_arb_mm, chain_fn=_chain_arb_mm, min_dim=2))


# ------------------------------------------- two-vector quadratic caps


def _pair_gap(x, y) -> float:
    return core.norm(x) * core.norm(y) - _re(core.inner(x, y))


def _sample_schwarz_ball(rng, dim, field):
    x = core.random_vector(rng, dim, field)
    y = core.random_vector(rng, dim, field)
    rel = core.norm(x - y) / (core.norm(x) + core.norm(y))
    r = rel * (1.0 + rng.uniform(0.02, 0.5))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y}, reals={"r": r})


def _hyp_schwarz_ball(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r = inst.real("r")
    denom = core.norm(x) + core.norm(y)
    if denom < 1e-12:
        return False, "both vectors are numerically zero"
    if r < 0.0:
        return False, "relative radius is negative"
    if core.norm(x - y) > r * denom + _band(denom):
        return False, "the pair leaves the relative ball"
    return True, ""


def _chain_schwarz_ball(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r = inst.real("r")
    denom = (core.norm(x) + core.norm(y)) ** 2
    chain = [("origin", 0.0),
             ("normalized two-vector gap", _pair_gap(x, y) / denom),
             ("half the squared relative radius", 0.5 * r * r)]
    return chain, 1.0


register(Check(
    id="T-SCHWARZ-BALL", suite=SUITE,
    title="the two-vector gap normalized by the squared norm sum is "
          "capped by half the squared relative distance",
    fields=("real", "complex"), sampler=_sample_schwarz_ball,
    hypothesis=_hyp_schwarz_ball, chain_fn=_chain_schwarz_ball,
    notes="the constant half is attained in the small-radius limit"))


def _sample_schwarz_mm(rng, dim, field):
    y = core.random_vector(rng, dim, field)
    lo = rng.uniform(0.4, 0.9)
    hi = lo + rng.uniform(0.1, 1.5)
    x = 0.5 * (hi + lo) * y + 0.5 * (hi - lo) * core.norm(y) \
        * rng.uniform(0.0, 0.98) * _unit(rng, dim, field)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y},
                         reals={"lo": lo, "hi": hi})


def _hyp_schwarz_mm(inst):
    x, y = inst.vec("x"), inst.vec("y")
    lo, hi = inst.real("lo"), inst.real("hi")
    if core.norm(y) < 1e-12:
        return False, "the reference vector is numerically zero"
    if not 0.0 < lo <= hi:
        return False, "band endpoints are not ordered positives"
    if not _band_cond(x, y, lo, hi):
        return False, "the pair leaves the ratio band"
    return True, ""


def _chain_schwarz_mm(inst):
    x, y = inst.vec("x"), inst.vec("y")
    lo, hi = inst.real("lo"), inst.real("hi")
    denom = (core.norm(x) + core.norm(y)) ** 2
    cap = 0.5 * ((hi - lo) / (hi + lo)) ** 2
    chain = [("origin", 0.0),
             ("normalized two-vector gap", _pair_gap(x, y) / denom),
             ("half the squared relative band width", cap)]
    return chain, 1.0


register(Check(
    id="T-SCHWARZ-MM", suite=SUITE,
    title="a ratio band between two vectors caps the normalized gap "
          "by half the squared relative band width",
    fields=("real", "complex"), sampler=_sample_schwarz_mm,
    hypothesis=_hyp_schwarz_mm, chain_fn=_chain_schwarz_mm))


# ------------------------------------------- squared-sum gap couplings


def _gap_matrix(xs) -> np.ndarray:
    norms = _norms(xs)
    g = np.outer(norms, norms) - np.real(xs @ xs.conj().T)
    return 0.5 * (g + g.T)


def _upper_sum(mat) -> float:
    m = np.asarray(mat, dtype=float)
    return float(np.triu(m, k=1).sum())


def _sample_quad(rng, dim, field):
    xs = _free_rows(rng, dim, field, _n_members(rng))
    g = _gap_matrix(xs)
    infl = 1.0 + rng.uniform(0.0, 1.0, size=g.shape)
    caps = g * 0.5 * (infl + infl.T)
    np.fill_diagonal(caps, 0.0)
    return CheckInstance(field_tag=field, dim=dim,
                         seq={"xs": xs, "caps": caps})


def _hyp_quad(inst):
    xs = _rows(inst)
    caps = np.asarray(inst.lst("caps"), dtype=float)
    n = xs.shape[0]
    if caps.shape != (n, n):
        return False, "cap matrix shape does not match the family"
    g = _gap_matrix(xs)
    for i in range(n):
        for j in range(i + 1, n):
            if g[i, j] > caps[i, j] + _band(g[i, j]):
                return False, "a pairwise gap exceeds its cap"
    return True, ""


def _chain_quad(inst):
    xs = _rows(inst)
    caps = np.asarray(inst.lst("caps"), dtype=float)
    S2 = _sum_norm(xs) ** 2
    rhs = _norm_sum(xs) ** 2 + 2.0 * _upper_sum(caps)
    chain = [("squared norm sum", S2),
             ("squared sum norm plus doubled caps", rhs)]
    return chain, max(S2, FLOOR)


def _witness_quad():
    xs = np.array([[1.0, 0.0, 0.0], [0.5, 1.0, 0.0], [0.0, 0.3, 2.0]])
    caps = _gap_matrix(xs)
    np.fill_diagonal(caps, 0.0)
    return CheckInstance(field_tag="real", dim=3,
                         seq={"xs": xs, "caps": caps})


register(Check(
    id="T-QUAD", suite=SUITE,
    title="pairwise gap caps couple the squared norm sum to the "
          "squared sum norm",
    fields=("real", "complex"), sampler=_sample_quad,
    hypothesis=_hyp_quad, chain_fn=_chain_quad, witness=_witness_quad,
    notes="caps equal to the exact pairwise gaps turn the comparison "
          "into an identity"))


def _sample_quad_ref(rng, dim, field):
    xs = _free_rows(rng, dim, field, _n_members(rng))
    g = _gap_matrix(xs)
    shrink = rng.uniform(0.0, 1.0, size=g.shape)
    floors = g * 0.5 * (shrink + shrink.T)
    np.fill_diagonal(floors, 0.0)
    return CheckInstance(field_tag=field, dim=dim,
                         seq={"xs": xs, "floors": floors})


def _hyp_quad_ref(inst):
    xs = _rows(inst)
    floors = np.asarray(inst.lst("floors"), dtype=float)
    n = xs.shape[0]
    if floors.shape != (n, n):
        return False, "floor matrix shape does not match the family"
    g = _gap_matrix(xs)
    for i in range(n):
        for j in range(i + 1, n):
            if not 0.0 <= floors[i, j] <= g[i, j] + _band(g[i, j]):
                return False, "a pairwise floor leaves [0, gap]"
    return True, ""


def _chain_quad_ref(inst):
    xs = _rows(inst)
    floors = np.asarray(inst.lst("floors"), dtype=float)
    N2 = _norm_sum(xs) ** 2
    S2 = _sum_norm(xs) ** 2
    chain = [("squared sum norm", N2),
             ("squared sum norm plus doubled floors",
              N2 + 2.0 * _upper_sum(floors)),
             ("squared norm sum", S2)]
    return chain, max(S2, FLOOR)


register(Check(
    id="T-QUAD-REF", suite=SUITE,
    title="pairwise gap floors interpolate between the squared sum "
          "norm and the squared norm sum",
    fields=("real", "complex"), sampler=_sample_quad_ref,
    hypothesis=_hyp_quad_ref, chain_fn=_chain_quad_ref))


def _sample_pair_r(rng, dim, field):
    n = _n_members(rng)
    center = core.random_vector(rng, dim, field)
    r = rng.uniform(0.1, 1.5)
    xs = np.array([center + 0.5 * r * rng.uniform(0.0, 0.98)
                   * _unit(rng, dim, field) for _ in range(n)])
    return CheckInstance(field_tag=field, dim=dim, seq={"xs": xs},
                         reals={"r": r})


def _hyp_pair_r(inst):
    xs = _rows(inst)
    r = inst.real("r")
    if r < 0.0:
        return False, "diameter cap is negative"
    n = xs.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if core.norm(xs[i] - xs[j]) > r + _band(r):
                return False, "a pair exceeds the diameter cap"
    return True, ""


def _chain_pair_r(inst):
    xs = _rows(inst)
    r = inst.real("r")
    n = xs.shape[0]
    S2 = _sum_norm(xs) ** 2
    rhs = _norm_sum(xs) ** 2 + 0.5 * n * (n - 1) * r * r
    chain = [("squared norm sum", S2),
             ("squared sum norm plus the diameter term", rhs)]
    return chain, max(S2, FLOOR)


def _witness_pair_r():
    e = np.zeros(2)
    e[0] = 1.0
    xs = np.array([0.5 * e, -0.5 * e])
    return CheckInstance(field_tag="real", dim=2, seq={"xs": xs},
                         reals={"r": 1.0})


register(Check(
    id="T-PAIR-r", suite=SUITE,
    title="a shared pairwise diameter caps the squared-sum defect "
          "with one pair-count term",
    fields=("real", "complex"), sampler=_sample_pair_r,
    hypothesis=_hyp_pair_r, chain_fn=_chain_pair_r,
    witness=_witness_pair_r,
    notes="two opposite vectors at distance equal to the cap attain "
          "equality"))


# ------------------------------ forward differences and ratio bands


def _sample_walk(rng, dim, field):
    n = _n_members(rng, lo=2)
    x = core.random_vector(rng, dim, field)
    xs = [x]
    for _ in range(n - 1):
        x = x + rng.uniform(0.1, 0.6) * _unit(rng, dim, field)
        xs.append(x)
    return CheckInstance(field_tag=field, dim=dim,
                         seq={"xs": np.array(xs)})


def _hyp_walk(inst):
    if _rows(inst).shape[0] < 2:
        return False, "forward differences need at least two members"
    return True, ""


def _fd_norms(xs) -> np.ndarray:
    return _norms(np.diff(xs, axis=0))


def _fd_witness():
    e = np.zeros(2)
    e[0] = 1.0
    return CheckInstance(field_tag="real", dim=2,
                         seq={"xs": np.array([-0.5 * e, 0.5 * e])})


def _chain_fd_sum(inst):
    xs = _rows(inst)
    n = xs.shape[0]
    S2 = _sum_norm(xs) ** 2
    total = float(_fd_norms(xs).sum())
    rhs = _norm_sum(xs) ** 2 + 0.5 * n * (n - 1) * total ** 2
    chain = [("squared norm sum", S2),
             ("squared sum norm plus the total-increment term", rhs)]
    return chain, max(S2, FLOOR)


register(Check(
    id="T-FD-SUM", suite=SUITE,
    title="the squared total forward increment caps the squared-sum "
          "defect with one pair-count term",
    fields=("real", "complex"), sampler=_sample_walk,
    hypothesis=_hyp_walk, chain_fn=_chain_fd_sum, witness=_fd_witness,
    min_dim=1,
    notes="the cap is quadratic in the summed forward differences; "
          "the linear variant fails on scaled two-member families"))


def _chain_fd_sup(inst):
    xs = _rows(inst)
    n = xs.shape[0]
    S2 = _sum_norm(xs) ** 2
    sup = float(_fd_norms(xs).max())
    rhs = _norm_sum(xs) ** 2 \
        + n * n * (n * n - 1) / 12.0 * sup * sup
    chain = [("squared norm sum", S2),
             ("squared sum norm plus the largest-increment term", rhs)]
    return chain, max(S2, FLOOR)


register(Check(
    id="T-FD-SUP", suite=SUITE,
    title="the largest forward increment caps the squared-sum defect "
          "with a quartic member-count constant",
    fields=("real", "complex"), sampler=_sample_walk,
    hypothesis=_hyp_walk, chain_fn=_chain_fd_sup, witness=_fd_witness,
    min_dim=1))


def _sample_walk_p(rng, dim, field):
    inst = _sample_walk(rng, dim, field)
    inst.reals["p"] = float(rng.choice([1.5, 2.0, 3.0]))
    return inst


def _hyp_walk_p(inst):
    ok, why = _hyp_walk(inst)
    if not ok:
        return ok, why
    if inst.real("p") <= 1.0:
        return False, "the exponent must exceed one"
    return True, ""


def _chain_fd_holder(inst):
    xs = _rows(inst)
    n = xs.shape[0]
    p = inst.real("p")
    q = p / (p - 1.0)
    S2 = _sum_norm(xs) ** 2
    d = _fd_norms(xs)
    lag = sum((j - i) ** (2.0 / q)
              for i in range(n) for j in range(i + 1, n))
    rhs = _norm_sum(xs) ** 2 \
        + lag * float((d ** p).sum()) ** (2.0 / p)
    chain = [("squared norm sum", S2),
             ("squared sum norm plus the paired-exponent term", rhs)]
    return chain, max(S2, FLOOR)


def _witness_fd_holder():
    inst = _fd_witness()
    inst.reals["p"] = 2.0
    return inst


register(Check(
    id="T-FD-HOLDER", suite=SUITE,
    title="paired-exponent means of the forward increments cap the "
          "squared-sum defect",
    fields=("real", "complex"), sampler=_sample_walk_p,
    hypothesis=_hyp_walk_p, chain_fn=_chain_fd_holder,
    witness=_witness_fd_holder, min_dim=1))


def _chain_fd_22(inst):
    xs = _rows(inst)
    n = xs.shape[0]
    S2 = _sum_norm(xs) ** 2
    d = _fd_norms(xs)
    rhs = _norm_sum(xs) ** 2 \
        + n * (n * n - 1) / 6.0 * float((d ** 2).sum())
    chain = [("squared norm sum", S2),
             ("squared sum norm plus the squared-increment term", rhs)]
    return chain, max(S2, FLOOR)


register(Check(
    id="T-FD-22", suite=SUITE,
    title="summed squared forward increments cap the squared-sum "
          "defect with a cubic member-count constant",
    fields=("real", "complex"), sampler=_sample_walk,
    hypothesis=_hyp_walk, chain_fn=_chain_fd_22, witness=_fd_witness,
    min_dim=1))


def _ratio_cloud(rng, dim, field, n, lo, hi):
    """Family whose every ordered pair satisfies the (lo, hi) band."""
    for _ in range(200):
        v = _unit(rng, dim, field)
        s = rng.uniform(0.5, 2.0)
        xs = np.array([s * rng.uniform(0.95, 1.05) * v
                       + 0.01 * s * rng.uniform(0.0, 1.0)
                       * _unit(rng, dim, field) for _ in range(n)])
        if all(_band_cond(xs[i], xs[j], lo, hi)
               for i in range(n) for j in range(i + 1, n)):
            return xs
    raise core.GeneratorExhausted("ratio band cloud sampler")


def _sample_ratio(rng, dim, field):
    lo = rng.uniform(0.5, 0.9)
    hi = rng.uniform(1.15, 2.5)
    xs = _ratio_cloud(rng, dim, field, _n_members(rng), lo, hi)
    return CheckInstance(field_tag=field, dim=dim, seq={"xs": xs},
                         reals={"lo": lo, "hi": hi})


def _hyp_ratio(inst):
    xs = _rows(inst)
    lo, hi = inst.real("lo"), inst.real("hi")
    if not 0.0 < lo <= hi:
        return False, "band endpoints are not ordered positives"
    if not _members_nonzero(xs):
        return False, "a family member is numerically zero"
    n = xs.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if not _band_cond(xs[i], xs[j], lo, hi):
                return False, "a pair leaves the ratio band"
    return True, ""


def _chain_quad_mm(inst):
    xs = _rows(inst)
    lo, hi = inst.real("lo"), inst.real("hi")
    n = xs.shape[0]
    S2 = _sum_norm(xs) ** 2
    norms = _norms(xs)
    tail = sum(k * norms[k] ** 2 for k in range(1, n))
    rhs = _norm_sum(xs) ** 2 \
        + 0.5 * (hi - lo) ** 2 / (hi + lo) * tail
    chain = [("squared norm sum", S2),
             ("squared sum norm plus the band tail term", rhs)]
    return chain, max(S2, FLOOR)


register(Check(
    id="T-QUAD-MM", suite=SUITE,
    title="a shared pairwise ratio band caps the squared-sum defect "
          "through index-weighted squared norms",
    fields=("real", "complex"), sampler=_sample_ratio,
    hypothesis=_hyp_ratio, chain_fn=_chain_quad_mm))


def _chain_mm_quad(inst):
    xs = _rows(inst)
    lo, hi = inst.real("lo"), inst.real("hi")
    S, N = _sum_norm(xs), _norm_sum(xs)
    Q2 = _sq_sum(xs)
    beta = (math.sqrt(hi) - math.sqrt(lo)) ** 2 / (hi + lo)
    alpha = 1.0 - beta
    parts = [
        ("blended square floor on the squared sum norm",
         N * N - (alpha * S * S + beta * Q2), max(S * S, FLOOR)),
        ("damped norm sum below the sum norm",
         N - math.sqrt(alpha) * S, max(S, FLOOR)),
    ]
    return slack_chain(parts)


register(Check(
    id="T-MM-QUAD", suite=SUITE,
    title="a shared pairwise ratio band floors the squared sum norm "
          "by a blend of the two squared sums",
    fields=("real", "complex"), sampler=_sample_ratio,
    hypothesis=_hyp_ratio, chain_fn=_chain_mm_quad))


def _pos_cluster(rng, dim, field, n):
    v = _unit(rng, dim, field)
    xs = []
    for _ in range(n):
        c = rng.uniform(0.3, 2.0)
        d = rng.uniform(0.0, 0.5) * c
        xs.append(c * v + d * _perp_unit(rng, dim, field, v))
    return np.array(xs)


def _kmin(xs) -> float:
    n = xs.shape[0]
    best = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            prod = core.norm(xs[i]) * core.norm(xs[j])
            re = _re(core.inner(xs[i], xs[j]))
            if re <= 0.0:
                return math.inf
            best = max(best, prod / re)
    return best


def _sample_kband(rng, dim, field):
    xs = _pos_cluster(rng, dim, field, _n_members(rng))
    k = _kmin(xs) * (1.0 + rng.uniform(0.0, 0.5))
    return CheckInstance(field_tag=field, dim=dim, seq={"xs": xs},
                         reals={"k": k})


def _hyp_kband(inst):
    xs = _rows(inst)
    k = inst.real("k")
    if k < 1.0 - 1e-12:
        return False, "the ratio cap is below one"
    if not _members_nonzero(xs):
        return False, "a family member is numerically zero"
    n = xs.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            prod = core.norm(xs[i]) * core.norm(xs[j])
            re = _re(core.inner(xs[i], xs[j]))
            if prod > k * re + _band(prod):
                return False, "a pair exceeds the ratio cap"
    return True, ""


def _chain_klem(inst):
    xs = _rows(inst)
    k = inst.real("k")
    S2, N2 = _sum_norm(xs) ** 2, _norm_sum(xs) ** 2
    chain = [("squared norm sum plus the weighted square defect",
              S2 + (k - 1.0) * _sq_sum(xs)),
             ("cap times the squared sum norm", k * N2)]
    return chain, max(k * N2, FLOOR)


def _witness_klem():
    v = np.array([0.6, 0.8, 0.0])
    return CheckInstance(field_tag="real", dim=3,
                         seq={"xs": np.tile(v, (4, 1))},
                         reals={"k": 1.0})


register(Check(
    id="T-KLEM", suite=SUITE,
    title="a pairwise product-to-inner-product cap blends the two "
          "squared sums below the scaled squared sum norm",
    fields=("real", "complex"), sampler=_sample_kband,
    hypothesis=_hyp_kband, chain_fn=_chain_klem, witness=_witness_klem,
    notes="copies of one vector with cap one attain equality"))


def _chain_kcoarse(inst):
    xs = _rows(inst)
    k = inst.real("k")
    S, N = _sum_norm(xs), _norm_sum(xs)
    S2, N2, Q2 = S * S, N * N, _sq_sum(xs)
    parts = [
        ("sum of squares below the squared norm sum",
         S2 - Q2, max(S2, FLOOR)),
        ("banded coupling of the two square defects",
         k * (N2 - Q2) - (S2 - Q2), max(k * N2, S2, FLOOR)),
        ("root-cap damped sum norm floor",
         math.sqrt(k) * N - S, max(S, FLOOR)),
    ]
    return slack_chain(parts)


register(Check(
    id="T-KCOARSE", suite=SUITE,
    title="the ratio cap couples the square defects and floors the "
          "sum norm after root-cap damping",
    fields=("real", "complex"), sampler=_sample_kband,
    hypothesis=_hyp_kband, chain_fn=_chain_kcoarse))


def _chain_kbetter(inst):
    xs = _rows(inst)
    k = inst.real("k")
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    mid = math.sqrt(n * k / (n + k - 1.0)) * N
    chain = [("norm sum", S),
             ("member-count sharpened cap", mid),
             ("root-cap scaled sum norm", math.sqrt(k) * N)]
    return chain, max(math.sqrt(k) * N, S, FLOOR)


register(Check(
    id="T-KBETTER", suite=SUITE,
    title="the member count sharpens the root-cap floor on the norm "
          "sum",
    fields=("real", "complex"), sampler=_sample_kband,
    hypothesis=_hyp_kband, chain_fn=_chain_kbetter))


def _sample_rho_pair(rng, dim, field):
    unit_mode = bool(rng.integers(0, 2))
    n = _n_members(rng)
    for _ in range(200):
        v = _unit(rng, dim, field)
        if unit_mode:
            xs = []
            for _ in range(n):
                w = v + 0.25 * rng.uniform(0.0, 1.0) \
                    * _unit(rng, dim, field)
                xs.append(w / np.linalg.norm(w))
            xs = np.array(xs)
        else:
            xs = np.array([rng.uniform(0.8, 1.2) * v
                           + 0.1 * rng.uniform(0.0, 1.0)
                           * _unit(rng, dim, field) for _ in range(n)])
        norms = _norms(xs)
        req = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                req = max(req, core.norm(xs[i] - xs[j])
                          / min(norms[i], norms[j]))
        if req < 0.9:
            rho = req + rng.uniform(0.05, 0.95) * (0.98 - req)
            return CheckInstance(field_tag=field, dim=dim,
                                 seq={"xs": xs}, reals={"rho": rho},
                                 meta={"unit_family": unit_mode})
    raise core.GeneratorExhausted("relative spread cloud sampler")


def _hyp_rho_pair(inst):
    xs = _rows(inst)
    rho = inst.real("rho")
    if not 0.0 < rho < 1.0:
        return False, "relative spread cap is outside (0, 1)"
    if not _members_nonzero(xs):
        return False, "a family member is numerically zero"
    norms = _norms(xs)
    n = xs.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            lim = rho * min(norms[i], norms[j])
            if core.norm(xs[i] - xs[j]) > lim + _band(norms[i]):
                return False, "a pair exceeds the relative spread cap"
    if inst.meta.get("unit_family") and \
            float(np.abs(norms - 1.0).max()) > 1e-9:
        return False, "a member of the unit family is not unit"
    return True, ""


def _chain_rho_pair(inst):
    xs = _rows(inst)
    rho = inst.real("rho")
    n = xs.shape[0]
    S2, N2, Q2 = _sum_norm(xs) ** 2, _norm_sum(xs) ** 2, _sq_sum(xs)
    root = _sqrt0(1.0 - rho * rho)
    parts = [("blended square floor on the squared sum norm",
              N2 - (root * S2 + (1.0 - root) * Q2),
              max(S2, FLOOR))]
    if inst.meta.get("unit_family"):
        parts.append(("unit-family floor on the squared sum norm",
                      N2 - (n + n * (n - 1) * root),
                      float(n * n)))
    return slack_chain(parts)


register(Check(
    id="T-RHO", suite=SUITE,
    title="a relative pairwise spread cap floors the squared sum norm "
          "by a blend of the two squared sums",
    fields=("real", "complex"), sampler=_sample_rho_pair,
    hypothesis=_hyp_rho_pair, chain_fn=_chain_rho_pair,
    notes="unit families add a closed-form member-count floor as a "
          "second comparison"))


def _sample_eta(rng, dim, field):
    n = _n_members(rng)
    center = (1.5 + rng.uniform(0.0, 1.0)) * _unit(rng, dim, field)
    spread = 0.3 * rng.uniform(0.1, 1.0)
    xs = np.array([center + spread * rng.uniform(0.0, 0.5)
                   * _unit(rng, dim, field) for _ in range(n)])
    low = float(_norms(xs).min())
    eta = spread + rng.uniform(0.1, 0.9) * (0.9 * low - spread)
    return CheckInstance(field_tag=field, dim=dim, seq={"xs": xs},
                         reals={"eta": eta})


def _hyp_eta(inst):
    xs = _rows(inst)
    eta = inst.real("eta")
    if eta <= 0.0:
        return False, "the spread cap is not positive"
    if eta >= float(_norms(xs).min()):
        return False, "the spread cap reaches a member norm"
    n = xs.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if core.norm(xs[i] - xs[j]) > eta + _band(eta):
                return False, "a pair exceeds the spread cap"
    return True, ""


def _chain_eta(inst):
    xs = _rows(inst)
    eta = inst.real("eta")
    S = _sum_norm(xs)
    trimmed = float(sum(_sqrt0(core.norm_sq(x) - eta * eta)
                        for x in xs))
    chain = [("norm sum times the trimmed norm sum", S * trimmed),
             ("squared sum norm", _norm_sum(xs) ** 2)]
    return chain, max(S * S, FLOOR)


register(Check(
    id="T-ETA", suite=SUITE,
    title="a spread cap below every member norm floors the squared "
          "sum norm by a trimmed product",
    fields=("real", "complex"), sampler=_sample_eta,
    hypothesis=_hyp_eta, chain_fn=_chain_eta))


# --------------------------------- complex double cones and disks


def _sample_c2(rng, dim, field):
    e = _unit(rng, dim, field)
    n = _n_members(rng)
    xs = []
    for _ in range(n):
        a = rng.uniform(0.3, 1.5)
        b = rng.uniform(0.3, 1.5)
        x = (a + 1j * b) * e + 0.2 * rng.uniform(0.0, 1.0) \
            * _perp_unit(rng, dim, field, e)
        xs.append(x)
    xs = np.array(xs)
    damp = 1.0 - rng.uniform(0.0, 0.3)
    r1 = damp * min(_re(core.inner(x, e)) / core.norm(x) for x in xs)
    r2 = damp * min(_im(core.inner(x, e)) / core.norm(x) for x in xs)
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs},
                         reals={"r1": max(r1, 0.0),
                                "r2": max(r2, 0.0)})


def _hyp_c2(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    r1, r2 = inst.real("r1"), inst.real("r2")
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if r1 < 0.0 or r2 < 0.0:
        return False, "a cone floor is negative"
    if not _members_nonzero(xs):
        return False, "a family member is numerically zero"
    for x in xs:
        nx = core.norm(x)
        z = core.inner(x, e)
        if r1 * nx > _re(z) + _band(nx) or r2 * nx > _im(z) + _band(nx):
            return False, "a member leaves the double cone"
    return True, ""


def _chain_c2(inst):
    xs = _rows(inst)
    r1, r2 = inst.real("r1"), inst.real("r2")
    S = _sum_norm(xs)
    coef = math.hypot(r1, r2)
    chain = [("double-cone floor times the norm sum", coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-C2", suite=SUITE,
    title="simultaneous real and imaginary cosine floors combine in "
          "quadrature to scale the norm sum",
    fields=("complex",), sampler=_sample_c2, hypothesis=_hyp_c2,
    chain_fn=_chain_c2, min_dim=2))


def _fit_radius(rng, xs, center, cap=0.998):
    top = max(core.norm(x - center) for x in xs)
    return min(cap, top * (1.0 + rng.uniform(0.02, 0.15)))


def _sample_c2_ball(rng, dim, field):
    e = _unit(rng, dim, field)
    mid = 0.5 * (1.0 + 1j) * e
    xs = np.array([mid + 0.15 * rng.uniform(0.0, 1.0)
                   * _unit(rng, dim, field)
                   for _ in range(_n_members(rng))])
    rho1 = _fit_radius(rng, xs, e)
    rho2 = _fit_radius(rng, xs, 1j * e)
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs},
                         reals={"rho1": rho1, "rho2": rho2})


def _hyp_c2_ball(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    rho1, rho2 = inst.real("rho1"), inst.real("rho2")
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if not (0.0 < rho1 < 1.0 and 0.0 < rho2 < 1.0):
        return False, "a radius is outside (0, 1)"
    for x in xs:
        if not (_in_ball(x, e, rho1) and _in_ball(x, 1j * e, rho2)):
            return False, "a member leaves a ball"
    return True, ""


def _chain_c2_ball(inst):
    xs = _rows(inst)
    rho1, rho2 = inst.real("rho1"), inst.real("rho2")
    S = _sum_norm(xs)
    coef = _sqrt0(2.0 - rho1 * rho1 - rho2 * rho2)
    chain = [("double-ball floor times the norm sum", coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-C2-BALL", suite=SUITE,
    title="membership in balls around a unit vector and its rotation "
          "by i floors the sum norm",
    fields=("complex",), sampler=_sample_c2_ball,
    hypothesis=_hyp_c2_ball, chain_fn=_chain_c2_ball, min_dim=2,
    notes="the two balls intersect only when the radii cover the "
          "root-two gap between the centers"))


def _sample_c2_mm(rng, dim, field):
    e = _unit(rng, dim, field)
    n = _n_members(rng)
    xs = np.array([(1.0 + 1j) * rng.uniform(0.5, 1.5) * e
                   + 0.05 * rng.uniform(0.0, 1.0)
                   * _unit(rng, dim, field) for _ in range(n)])
    lo1, hi1 = _band_endpoints(rng, xs,
                               lambda x: _re(core.inner(x, e)))
    lo2, hi2 = _band_endpoints(rng, xs,
                               lambda x: _im(core.inner(x, e)))
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs},
                         reals={"lo1": lo1, "hi1": hi1,
                                "lo2": lo2, "hi2": hi2})


def _hyp_c2_mm(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    lo1, hi1 = inst.real("lo1"), inst.real("hi1")
    lo2, hi2 = inst.real("lo2"), inst.real("hi2")
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if not (0.0 < lo1 <= hi1 and 0.0 < lo2 <= hi2):
        return False, "band endpoints are not ordered positives"
    for x in xs:
        if not (_band_cond(x, e, lo1, hi1)
                and _band_cond(x, 1j * e, lo2, hi2)):
            return False, "a member leaves a band"
    return True, ""


def _chain_c2_mm(inst):
    xs = _rows(inst)
    lo1, hi1 = inst.real("lo1"), inst.real("hi1")
    lo2, hi2 = inst.real("lo2"), inst.real("hi2")
    S = _sum_norm(xs)
    coef = 2.0 * _sqrt0(lo1 * hi1 / (lo1 + hi1) ** 2
                        + lo2 * hi2 / (lo2 + hi2) ** 2)
    chain = [("double-band floor times the norm sum", coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-C2-MM", suite=SUITE,
    title="two-sided bands along a unit vector and its rotation by i "
          "combine into one floor on the sum norm",
    fields=("complex",), sampler=_sample_c2_mm, hypothesis=_hyp_c2_mm,
    chain_fn=_chain_c2_mm, min_dim=2))


def _sample_c2_fam(rng, dim, field):
    m = int(rng.integers(1, min(dim - 1, 4) + 1))
    fam = random_orthonormal(rng, dim, m, field)
    n = _n_members(rng)
    regime = str(rng.choice(["cone", "ball", "band"]))
    if regime == "cone":
        xs = []
        for _ in range(n):
            x = sum((rng.uniform(0.3, 1.2) + 1j
                     * rng.uniform(0.3, 1.2)) * fam.vectors[k]
                    for k in range(m))
            x = x + 0.2 * rng.uniform(0.0, 1.0) \
                * _perp_unit(rng, dim, field, fam.vectors)
            xs.append(x)
        xs = np.array(xs)
        damp = 1.0 - rng.uniform(0.0, 0.3)
        re_f, im_f = [], []
        for k in range(m):
            zs = [core.inner(x, fam.vectors[k]) for x in xs]
            ns = [core.norm(x) for x in xs]
            re_f.append(max(0.0, damp * min(
                _re(z) / nx for z, nx in zip(zs, ns))))
            im_f.append(max(0.0, damp * min(
                _im(z) / nx for z, nx in zip(zs, ns))))
        extra = {"re_floors": np.array(re_f),
                 "im_floors": np.array(im_f)}
    elif regime == "ball":
        mid = (1.0 + 1j) / (2.0 * m) * fam.vectors.sum(axis=0)
        xs = np.array([mid + 0.05 * rng.uniform(0.0, 1.0)
                       * _unit(rng, dim, field) for _ in range(n)])
        re_r = [_fit_radius(rng, xs, fam.vectors[k]) for k in range(m)]
        im_r = [_fit_radius(rng, xs, 1j * fam.vectors[k])
                for k in range(m)]
        extra = {"radii_re": np.array(re_r), "radii_im": np.array(im_r)}
    else:
        base = (1.0 + 1j) * fam.vectors.sum(axis=0)
        xs = np.array([rng.uniform(0.5, 1.0) * base
                       + 0.02 * rng.uniform(0.0, 1.0)
                       * _unit(rng, dim, field) for _ in range(n)])
        re_lo, re_hi, im_lo, im_hi = [], [], [], []
        for k in range(m):
            lo, hi = _band_endpoints(
                rng, xs,
                lambda x, k=k: _re(core.inner(x, fam.vectors[k])))
            re_lo.append(lo)
            re_hi.append(hi)
            lo, hi = _band_endpoints(
                rng, xs,
                lambda x, k=k: _im(core.inner(x, fam.vectors[k])))
            im_lo.append(lo)
            im_hi.append(hi)
        extra = {"re_lo": np.array(re_lo), "re_hi": np.array(re_hi),
                 "im_lo": np.array(im_lo), "im_hi": np.array(im_hi)}
    seq = {"xs": xs}
    seq.update(extra)
    return CheckInstance(field_tag=field, dim=dim,
                         families={"basis": fam}, seq=seq,
                         meta={"regime": regime})


def _hyp_c2_fam(inst):
    xs = _rows(inst)
    fam = inst.fam("basis")
    regime = inst.meta.get("regime")
    if fam.gram_defect > 1e-10:
        return False, "reference family is not orthonormal"
    if regime == "cone":
        re_f = np.asarray(inst.lst("re_floors"), dtype=float)
        im_f = np.asarray(inst.lst("im_floors"), dtype=float)
        if min(re_f.min(), im_f.min()) < 0.0:
            return False, "a cone floor is negative"
        if not _members_nonzero(xs):
            return False, "a family member is numerically zero"
        for x in xs:
            nx = core.norm(x)
            for k in range(fam.size):
                z = core.inner(x, fam.vectors[k])
                if re_f[k] * nx > _re(z) + _band(nx) \
                        or im_f[k] * nx > _im(z) + _band(nx):
                    return False, "a member leaves a double cone"
        return True, ""
    if regime == "ball":
        re_r = np.asarray(inst.lst("radii_re"), dtype=float)
        im_r = np.asarray(inst.lst("radii_im"), dtype=float)
        if not (0.0 < re_r.min() and re_r.max() < 1.0
                and 0.0 < im_r.min() and im_r.max() < 1.0):
            return False, "a radius is outside (0, 1)"
        for x in xs:
            for k in range(fam.size):
                if not (_in_ball(x, fam.vectors[k], re_r[k])
                        and _in_ball(x, 1j * fam.vectors[k], im_r[k])):
                    return False, "a member leaves a ball"
        return True, ""
    if regime == "band":
        re_lo = np.asarray(inst.lst("re_lo"), dtype=float)
        re_hi = np.asarray(inst.lst("re_hi"), dtype=float)
        im_lo = np.asarray(inst.lst("im_lo"), dtype=float)
        im_hi = np.asarray(inst.lst("im_hi"), dtype=float)
        if not (0.0 < re_lo.min() and np.all(re_lo <= re_hi)
                and 0.0 < im_lo.min() and np.all(im_lo <= im_hi)):
            return False, "band endpoints are not ordered positives"
        for x in xs:
            for k in range(fam.size):
                if not (_band_cond(x, fam.vectors[k], re_lo[k],
                                   re_hi[k])
                        and _band_cond(x, 1j * fam.vectors[k],
                                       im_lo[k], im_hi[k])):
                    return False, "a member leaves a band"
        return True, ""
    return False, "unknown alignment regime"


def _chain_c2_fam(inst):
    xs = _rows(inst)
    regime = inst.meta.get("regime")
    if regime == "cone":
        re_f = np.asarray(inst.lst("re_floors"), dtype=float)
        im_f = np.asarray(inst.lst("im_floors"), dtype=float)
        coef = _sqrt0(float((re_f ** 2).sum() + (im_f ** 2).sum()))
    elif regime == "ball":
        re_r = np.asarray(inst.lst("radii_re"), dtype=float)
        im_r = np.asarray(inst.lst("radii_im"), dtype=float)
        coef = _sqrt0(float((2.0 - re_r ** 2 - im_r ** 2).sum()))
    else:
        re_lo = np.asarray(inst.lst("re_lo"), dtype=float)
        re_hi = np.asarray(inst.lst("re_hi"), dtype=float)
        im_lo = np.asarray(inst.lst("im_lo"), dtype=float)
        im_hi = np.asarray(inst.lst("im_hi"), dtype=float)
        coef = 2.0 * _sqrt0(float(
            (re_lo * re_hi / (re_lo + re_hi) ** 2).sum()
            + (im_lo * im_hi / (im_lo + im_hi) ** 2).sum()))
    S = _sum_norm(xs)
    chain = [("combined double-alignment floor times the norm sum",
              coef * S),
             ("norm of the sum", _norm_sum(xs))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-C2-FAM", suite=SUITE,
    title="double alignment with an orthonormal family through cones, "
          "balls, or bands floors the sum norm",
    fields=("complex",), sampler=_sample_c2_fam,
    hypothesis=_hyp_c2_fam, chain_fn=_chain_c2_fam, min_dim=2,
    notes="the alignment regime is sampled per instance and sets the "
          "combined coefficient"))


def _sample_arg(rng, dim, field):
    n = _n_members(rng)
    phi1 = rng.uniform(0.1, 1.2)
    phi2 = phi1 + rng.uniform(0.0, 1.0) * (math.pi / 2 - 0.05 - phi1)
    zs = np.array([rng.uniform(0.3, 2.0)
                   * np.exp(1j * rng.uniform(phi1, phi2))
                   for _ in range(n)])
    return CheckInstance(field_tag=field, dim=dim, seq={"zs": zs},
                         reals={"phi1": phi1, "phi2": phi2})


def _hyp_arg(inst):
    zs = np.asarray(inst.lst("zs"))
    phi1, phi2 = inst.real("phi1"), inst.real("phi2")
    if not 0.0 <= phi1 <= phi2 < math.pi / 2:
        return False, "the argument range leaves the first quadrant"
    if float(np.abs(zs).min()) < 1e-12:
        return False, "a scalar member is numerically zero"
    args = np.angle(zs)
    if float(args.min()) < phi1 - 1e-12 \
            or float(args.max()) > phi2 + 1e-12:
        return False, "a scalar argument leaves the range"
    return True, ""


def _chain_arg(inst):
    zs = np.asarray(inst.lst("zs"))
    phi1, phi2 = inst.real("phi1"), inst.real("phi2")
    S = float(np.abs(zs).sum())
    coef = math.sqrt(math.sin(phi1) ** 2 + math.cos(phi2) ** 2)
    chain = [("argument-range floor times the modulus sum", coef * S),
             ("modulus of the sum", float(np.abs(zs.sum())))]
    return chain, max(S, FLOOR)


def _witness_arg():
    zs = np.array([0.5, 1.0, 2.0]) * np.exp(1j * math.pi / 4)
    return CheckInstance(field_tag="complex", dim=1, seq={"zs": zs},
                         reals={"phi1": math.pi / 4,
                                "phi2": math.pi / 4})


register(Check(
    id="T-ARG", suite=SUITE,
    title="a first-quadrant argument range floors the modulus of a "
          "complex sum",
    fields=("complex",), sampler=_sample_arg, hypothesis=_hyp_arg,
    chain_fn=_chain_arg, witness=_witness_arg,
    notes="a degenerate range puts every member on one ray and "
          "attains equality"))


def _sample_disk(rng, dim, field):
    n = _n_members(rng)
    c = complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
    mid = 0.5 * (1.0 + 1j) * c
    zs = np.array([mid + 0.15 * rng.uniform(0.0, 1.0)
                   * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
                   for _ in range(n)])
    rho1 = min(0.998, max(abs(z - c) for z in zs)
               * (1.0 + rng.uniform(0.02, 0.15)))
    rho2 = min(0.998, max(abs(z - 1j * c) for z in zs)
               * (1.0 + rng.uniform(0.02, 0.15)))
    return CheckInstance(field_tag=field, dim=dim, seq={"zs": zs},
                         scalars={"center": c},
                         reals={"rho1": rho1, "rho2": rho2})


def _hyp_disk(inst):
    zs = np.asarray(inst.lst("zs"))
    c = complex(inst.scalar("center"))
    rho1, rho2 = inst.real("rho1"), inst.real("rho2")
    if abs(abs(c) - 1.0) > 1e-9:
        return False, "the disk center is not unimodular"
    if not (0.0 < rho1 < 1.0 and 0.0 < rho2 < 1.0):
        return False, "a disk radius is outside (0, 1)"
    for z in zs:
        if abs(z - c) > rho1 + _band(1.0) \
                or abs(z - 1j * c) > rho2 + _band(1.0):
            return False, "a scalar member leaves a disk"
    return True, ""


def _chain_disk(inst):
    zs = np.asarray(inst.lst("zs"))
    rho1, rho2 = inst.real("rho1"), inst.real("rho2")
    S = float(np.abs(zs).sum())
    coef = _sqrt0(2.0 - rho1 * rho1 - rho2 * rho2)
    chain = [("double-disk floor times the modulus sum", coef * S),
             ("modulus of the sum", float(np.abs(zs.sum())))]
    return chain, max(S, FLOOR)


register(Check(
    id="T-DISK", suite=SUITE,
    title="membership in disks around a unimodular center and its "
          "rotation by i floors the modulus of a complex sum",
    fields=("complex",), sampler=_sample_disk, hypothesis=_hyp_disk,
    chain_fn=_chain_disk,
    notes="the two disks intersect only when the radius sum reaches "
          "the root-two gap between the centers"))


# ------------------------------------ supplementary perturbation caps


def _sample_tx_add(rng, dim, field):
    e = _unit(rng, dim, field)
    xs = _free_rows(rng, dim, field, _n_members(rng))
    caps = np.array([0.5 * core.norm_sq(x - e)
                     * (1.0 + rng.uniform(0.0, 1.0)) for x in xs])
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs, "caps": caps})


def _hyp_tx_add(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    caps = np.asarray(inst.lst("caps"), dtype=float)
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    for x, cap in zip(xs, caps):
        half = 0.5 * core.norm_sq(x - e)
        if half > cap + _band(half):
            return False, "a squared distance exceeds its cap"
    return True, ""


def _chain_tx_add(inst):
    xs = _rows(inst)
    caps = np.asarray(inst.lst("caps"), dtype=float)
    S, N = _sum_norm(xs), _norm_sum(xs)
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("summed half squared distances", float(caps.sum()))]
    return chain, max(S, FLOOR)


def _witness_tx_add():
    e = np.zeros(3)
    e[0] = 1.0
    w1 = np.array([0.0, 0.6, 0.0])
    w2 = np.array([0.0, 0.0, 0.6])
    ws = [w1, w2, -(w1 + w2)]
    xs = np.array([_sqrt0(1.0 - core.norm_sq(w)) * e + w for w in ws])
    caps = np.array([0.5 * core.norm_sq(x - e) for x in xs])
    return CheckInstance(field_tag="real", dim=3, vectors={"e": e},
                         seq={"xs": xs, "caps": caps})


register(Check(
    id="TX-ADD", suite=SUITE,
    title="half squared distances to a unit vector cap the additive "
          "triangle gap",
    fields=("real", "complex"), sampler=_sample_tx_add,
    hypothesis=_hyp_tx_add, chain_fn=_chain_tx_add,
    witness=_witness_tx_add, min_dim=2,
    notes="unit members whose sum is a multiple of the reference "
          "vector attain equality with exact caps"))


def _sample_tx_norm(rng, dim, field):
    e = _unit(rng, dim, field)
    xs = _free_rows(rng, dim, field, _n_members(rng))
    radii = np.array([core.norm(x / core.norm(x) - e)
                      * (1.0 + rng.uniform(0.0, 0.5)) for x in xs])
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs, "radii": radii},
                         reals={"p": float(rng.choice([1.5, 2.0, 3.0]))})


def _hyp_tx_norm(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    radii = np.asarray(inst.lst("radii"), dtype=float)
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if not _members_nonzero(xs):
        return False, "a family member is numerically zero"
    if inst.real("p") <= 1.0:
        return False, "the exponent must exceed one"
    for x, r in zip(xs, radii):
        if core.norm(x / core.norm(x) - e) > r + _band(1.0):
            return False, "a direction leaves its sphere cap"
    return True, ""


def _chain_tx_norm(inst):
    xs = _rows(inst)
    radii = np.asarray(inst.lst("radii"), dtype=float)
    p = inst.real("p")
    q = p / (p - 1.0)
    norms = _norms(xs)
    S, N = _sum_norm(xs), _norm_sum(xs)
    refined = 0.5 * float((radii ** 2 * norms).sum())
    holder = 0.5 * float((radii ** (2.0 * p)).sum()) ** (1.0 / p) \
        * float((norms ** q).sum()) ** (1.0 / q)
    parts = [
        ("gap cap from directional distances",
         refined - (S - N), max(S, FLOOR)),
        ("uniform coarse cap",
         0.5 * float(radii.max()) ** 2 * S - refined, max(S, FLOOR)),
        ("paired-exponent coarse cap",
         holder - refined, max(S, FLOOR)),
        ("largest-member coarse cap",
         0.5 * float(norms.max()) * float((radii ** 2).sum())
         - refined, max(S, FLOOR)),
    ]
    return slack_chain(parts)


register(Check(
    id="TX-NORM", suite=SUITE,
    title="distances between member directions and a unit vector cap "
          "the gap, with three coarse relaxations",
    fields=("real", "complex"), sampler=_sample_tx_norm,
    hypothesis=_hyp_tx_norm, chain_fn=_chain_tx_norm, min_dim=2))


def _sample_tx_min(rng, dim, field):
    e = _unit(rng, dim, field)
    xs = _free_rows(rng, dim, field, _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs})


def _hyp_tx_min(inst):
    if not _unit_ok(inst.vec("e")):
        return False, "reference vector is not unit"
    if not _members_nonzero(_rows(inst)):
        return False, "a family member is numerically zero"
    return True, ""


def _chain_tx_min(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    S, N = _sum_norm(xs), _norm_sum(xs)
    scaled = 2.0 * float(sum(
        core.norm(x) * (core.norm(x - e) / (core.norm(x) + 1.0)) ** 2
        for x in xs))
    inflated = 0.5 * float(sum(
        (core.norm(x) + 1.0) ** 2 * core.norm_sq(x - e) / core.norm(x)
        for x in xs))
    parts = [
        ("gap cap from scaled sphere distances",
         scaled - (S - N), max(S, FLOOR)),
        ("gap cap from inflated sphere distances",
         inflated - (S - N), max(S, FLOOR)),
    ]
    return slack_chain(parts)


register(Check(
    id="TX-MIN", suite=SUITE,
    title="distances to a unit vector, rescaled by member norms, cap "
          "the additive gap two ways",
    fields=("real", "complex"), sampler=_sample_tx_min,
    hypothesis=_hyp_tx_min, chain_fn=_chain_tx_min, min_dim=2,
    notes="the tighter cap is exact on members antiparallel to the "
          "reference vector"))


def _sample_tx_out(rng, dim, field):
    e = _unit(rng, dim, field)
    n = _n_members(rng)
    xs = np.array([(1.05 + rng.uniform(0.0, 1.5))
                   * _unit(rng, dim, field) for _ in range(n)])
    if rng.integers(0, 2):
        p = rng.uniform(1.0, 3.0)
    else:
        p = rng.uniform(0.25, 0.9)
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs}, reals={"p": p})


def _hyp_tx_out(inst):
    xs = _rows(inst)
    if not _unit_ok(inst.vec("e")):
        return False, "reference vector is not unit"
    if inst.real("p") <= 0.0:
        return False, "the exponent is not positive"
    if float(_norms(xs).min()) < 1.0 - 1e-12:
        return False, "a member enters the unit ball"
    return True, ""


def _chain_tx_out(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    p = inst.real("p")
    S, N = _sum_norm(xs), _norm_sum(xs)
    if p >= 1.0:
        cap = 0.5 * p * p * float(sum(
            core.norm(x) ** (p - 1.0) * core.norm_sq(x - e)
            for x in xs))
        label = "power-weighted cap outside the unit ball"
    else:
        cap = 0.5 * float(sum(
            core.norm(x) ** (1.0 - p) * core.norm_sq(x - e)
            for x in xs))
        label = "inverse-power cap outside the unit ball"
    chain = [("origin", 0.0), ("additive gap", S - N), (label, cap)]
    return chain, max(S, FLOOR)


register(Check(
    id="TX-OUT", suite=SUITE,
    title="members outside the unit ball admit power-weighted gap "
          "caps on either side of exponent one",
    fields=("real", "complex"), sampler=_sample_tx_out,
    hypothesis=_hyp_tx_out, chain_fn=_chain_tx_out, min_dim=2))


def _sample_tx_cplx(rng, dim, field):
    e = _unit(rng, dim, field)
    n = _n_members(rng)
    alphas = rng.uniform(0.3, 2.0, size=n) \
        + 1j * rng.uniform(0.3, 2.0, size=n)
    lams = np.imag(alphas) / np.real(alphas)
    dists = lams * rng.uniform(0.1, 0.8, size=n)
    xs = np.array([lam * e + d * rng.uniform(0.0, 0.95)
                   * _unit(rng, dim, field)
                   for lam, d in zip(lams, dists)])
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs, "alphas": alphas,
                              "dists": dists})


def _hyp_tx_cplx(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    alphas = np.asarray(inst.lst("alphas"))
    dists = np.asarray(inst.lst("dists"), dtype=float)
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if float(np.real(alphas).min()) < 1e-12 \
            or float(np.imag(alphas).min()) < 1e-12:
        return False, "a weight leaves the open first quadrant"
    if dists.min() <= 0.0:
        return False, "a ball radius is not positive"
    lams = np.imag(alphas) / np.real(alphas)
    for x, lam, d in zip(xs, lams, dists):
        if not _in_ball(x, lam * e, d):
            return False, "a member leaves its weight ball"
    return True, ""


def _chain_tx_cplx(inst):
    xs = _rows(inst)
    alphas = np.asarray(inst.lst("alphas"))
    dists = np.asarray(inst.lst("dists"), dtype=float)
    S, N = _sum_norm(xs), _norm_sum(xs)
    cap = 0.5 * float((np.real(alphas) / np.imag(alphas)
                       * dists ** 2).sum())
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("weight-ratio cap", cap)]
    return chain, max(S, FLOOR)


register(Check(
    id="TX-CPLX", suite=SUITE,
    title="first-quadrant complex weights place members in balls "
          "whose ratio-scaled radii cap the gap",
    fields=("complex",), sampler=_sample_tx_cplx,
    hypothesis=_hyp_tx_cplx, chain_fn=_chain_tx_cplx, min_dim=2))


def _sample_tx_pow(rng, dim, field):
    e = _unit(rng, dim, field)
    xs = _free_rows(rng, dim, field, _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs},
                         reals={"p": float(rng.choice(
                             [1.0, 1.5, 2.0, 3.0]))})


def _hyp_tx_pow(inst):
    if not _unit_ok(inst.vec("e")):
        return False, "reference vector is not unit"
    if inst.real("p") < 1.0:
        return False, "the exponent is below one"
    return True, ""


def _chain_tx_pow(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    p = inst.real("p")
    S, N = _sum_norm(xs), _norm_sum(xs)
    outer = 0.0
    inner_cap = 0.0
    for x in xs:
        nx = core.norm(x)
        t1 = (nx + 1.0) ** (2.0 * p) - core.norm(x + e) ** (2.0 * p)
        t2 = core.norm(x - e) ** (2.0 * p) - abs(nx - 1.0) ** (2.0 * p)
        outer += max(t1, 0.0) ** (1.0 / p)
        inner_cap += max(t2, 0.0) ** (1.0 / p)
    parts = [
        ("gap cap from the outer power bracket",
         0.5 * outer - (S - N), max(S, FLOOR)),
        ("gap cap from the inner power bracket",
         0.5 * inner_cap - (S - N), max(S, FLOOR)),
    ]
    return slack_chain(parts)


register(Check(
    id="TX-POW", suite=SUITE,
    title="power brackets of shifted norms cap the additive gap from "
          "both sides of the reference vector",
    fields=("real", "complex"), sampler=_sample_tx_pow,
    hypothesis=_hyp_tx_pow, chain_fn=_chain_tx_pow, min_dim=2))


# ------------------------------------- quadratic-mean reverse chains


def _sample_tr_ball(rng, dim, field):
    a = (1.2 + rng.uniform(0.0, 1.0)) * _unit(rng, dim, field)
    r = core.norm(a) * rng.uniform(0.2, 0.8)
    xs = _ball_cloud(rng, dim, field, a, 0.95 * r, _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"a": a},
                         seq={"xs": xs}, reals={"r": r})


def _hyp_tr_ball(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    r = inst.real("r")
    if r <= 0.0:
        return False, "the ball radius is not positive"
    if core.norm_sq(a) - r * r < 1e-12:
        return False, "the ball reaches the origin"
    for x in xs:
        if not _in_ball(x, a, r):
            return False, "a member leaves the ball"
    return True, ""


def _chain_tr_cbs(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    r = inst.real("r")
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    Q = _sqrt0(_sq_sum(xs))
    alpha = _sqrt0(core.norm_sq(a) - r * r)
    aligned = _re(core.inner(xs.sum(axis=0), a))
    chain = [("norm sum", S),
             ("scaled quadratic mean", math.sqrt(n) * Q),
             ("aligned component over the ball margin",
              aligned / alpha),
             ("scaled sum norm over the ball margin",
              core.norm(a) * N / alpha)]
    return chain, max(core.norm(a) * N / alpha, S, FLOOR)


register(Check(
    id="TR-CBS", suite=SUITE,
    title="a ball away from the origin threads the norm sum through "
          "the quadratic mean and the aligned component",
    fields=("real", "complex"), sampler=_sample_tr_ball,
    hypothesis=_hyp_tr_ball, chain_fn=_chain_tr_cbs, min_dim=2))


def _chain_tr_cbs_add(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    r = inst.real("r")
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    rootnq = math.sqrt(n) * _sqrt0(_sq_sum(xs))
    na = core.norm(a)
    alpha = _sqrt0(core.norm_sq(a) - r * r)
    c = r * r / (alpha * (na + alpha))
    aligned = _re(core.inner(xs.sum(axis=0), a)) / na
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("quadratic-mean gap", rootnq - N),
             ("quadratic-mean defect against the aligned component",
              rootnq - aligned),
             ("margin cap times the aligned component", c * aligned),
             ("margin cap times the sum norm", c * N)]
    return chain, max(S, FLOOR)


register(Check(
    id="TR-CBS-ADD", suite=SUITE,
    title="the ball margin caps the additive gap through the "
          "quadratic-mean defect",
    fields=("real", "complex"), sampler=_sample_tr_ball,
    hypothesis=_hyp_tr_ball, chain_fn=_chain_tr_cbs_add, min_dim=2))


def _sample_tr_unit(rng, dim, field):
    a = _unit(rng, dim, field)
    r = rng.uniform(0.1, 0.9)
    xs = _ball_cloud(rng, dim, field, a, 0.95 * r, _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"a": a},
                         seq={"xs": xs}, reals={"r": r})


def _hyp_tr_unit(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    r = inst.real("r")
    if not _unit_ok(a):
        return False, "reference vector is not unit"
    if not 0.0 < r < 1.0:
        return False, "the ball radius is outside (0, 1)"
    for x in xs:
        if not _in_ball(x, a, r):
            return False, "a member leaves the ball"
    return True, ""


def _chain_tr_unit(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    r = inst.real("r")
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    Q = _sqrt0(_sq_sum(xs))
    alpha = _sqrt0(1.0 - r * r)
    aligned = _re(core.inner(xs.sum(axis=0), a))
    chain = [("ball margin times the norm sum", alpha * S),
             ("ball margin times the scaled quadratic mean",
              alpha * math.sqrt(n) * Q),
             ("aligned component of the sum", aligned),
             ("norm of the sum", N)]
    return chain, max(S, N, FLOOR)


register(Check(
    id="TR-CBS-UNIT", suite=SUITE,
    title="a ball around a unit vector floors the sum norm through "
          "the damped quadratic mean",
    fields=("real", "complex"), sampler=_sample_tr_unit,
    hypothesis=_hyp_tr_unit, chain_fn=_chain_tr_unit, min_dim=2))


def _chain_tr_unit_add(inst):
    xs = _rows(inst)
    a = inst.vec("a")
    r = inst.real("r")
    S, N = _sum_norm(xs), _norm_sum(xs)
    alpha = _sqrt0(1.0 - r * r)
    c = r * r / (alpha * (1.0 + alpha))
    aligned = _re(core.inner(xs.sum(axis=0), a))
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("margin cap times the aligned component", c * aligned),
             ("margin cap times the sum norm", c * N)]
    return chain, max(S, FLOOR)


register(Check(
    id="TR-CBS-UNIT-ADD", suite=SUITE,
    title="the unit-ball margin caps the additive gap by the aligned "
          "component of the sum",
    fields=("real", "complex"), sampler=_sample_tr_unit,
    hypothesis=_hyp_tr_unit, chain_fn=_chain_tr_unit_add, min_dim=2))


def _endpoint_pair(rng):
    """Complex endpoints with positive pairing and separated values."""
    for _ in range(200):
        th1 = rng.uniform(0.0, 2.0 * math.pi)
        th2 = th1 + rng.uniform(-1.2, 1.2)
        fa = rng.uniform(0.4, 2.0) * np.exp(1j * th1)
        fb = rng.uniform(0.4, 2.0) * np.exp(1j * th2)
        if _re(fa * np.conj(fb)) > 0.05 and abs(fa - fb) > 0.05 \
                and abs(fa + fb) > 0.2:
            return complex(fa), complex(fb)
    raise core.GeneratorExhausted("complex endpoint sampler")


def _sample_tr_cplx(rng, dim, field):
    e = _unit(rng, dim, field)
    fa, fb = _endpoint_pair(rng)
    xs = _ball_cloud(rng, dim, field, 0.5 * (fa + fb) * e,
                     0.95 * 0.5 * abs(fa - fb), _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs},
                         scalars={"end_a": fa, "end_b": fb})


def _hyp_tr_cplx(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    fa, fb = complex(inst.scalar("end_a")), complex(inst.scalar("end_b"))
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if _re(fa * np.conj(fb)) < 1e-12:
        return False, "the endpoint pairing is not positive"
    center = 0.5 * (fa + fb)
    radius = 0.5 * abs(fa - fb)
    for x in xs:
        if not _in_ball(x, center * e, radius):
            return False, "a member leaves the endpoint ball"
    return True, ""


def _chain_tr_cplx(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    fa, fb = complex(inst.scalar("end_a")), complex(inst.scalar("end_b"))
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    Q = _sqrt0(_sq_sum(xs))
    beta = _sqrt0(_re(fa * np.conj(fb)))
    s_e = core.inner(xs.sum(axis=0), e)
    paired = _re((np.conj(fa) + np.conj(fb)) * s_e)
    chain = [("norm sum", S),
             ("scaled quadratic mean", math.sqrt(n) * Q),
             ("paired component over the endpoint margin",
              paired / (2.0 * beta)),
             ("scaled sum norm over the endpoint margin",
              abs(fa + fb) * N / (2.0 * beta))]
    return chain, max(abs(fa + fb) * N / (2.0 * beta), S, FLOOR)


register(Check(
    id="TR-CBS-CPLX", suite=SUITE,
    title="complex endpoints with positive pairing thread the norm "
          "sum through the endpoint-paired component",
    fields=("complex",), sampler=_sample_tr_cplx,
    hypothesis=_hyp_tr_cplx, chain_fn=_chain_tr_cplx, min_dim=2))


def _chain_tr_cplx_add(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    fa, fb = complex(inst.scalar("end_a")), complex(inst.scalar("end_b"))
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    rootnq = math.sqrt(n) * _sqrt0(_sq_sum(xs))
    beta = _sqrt0(_re(fa * np.conj(fb)))
    mu = abs(fa + fb)
    c = abs(fa - fb) ** 2 / (2.0 * beta * (mu + 2.0 * beta))
    s_e = core.inner(xs.sum(axis=0), e)
    t = _re(np.conj(fa + fb) / mu * s_e)
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("quadratic-mean gap", rootnq - N),
             ("quadratic-mean defect against the paired component",
              rootnq - t),
             ("endpoint cap times the paired component", c * t),
             ("endpoint cap times the sum norm", c * N)]
    return chain, max(S, FLOOR)


register(Check(
    id="TR-CBS-CPLX-ADD", suite=SUITE,
    title="the endpoint spread caps the additive gap through the "
          "quadratic-mean defect",
    fields=("complex",), sampler=_sample_tr_cplx,
    hypothesis=_hyp_tr_cplx, chain_fn=_chain_tr_cplx_add, min_dim=2,
    notes="the paired component carries a unit-modulus endpoint "
          "multiplier so the comparison with the sum norm ascends"))


def _sample_tr_mean(rng, dim, field):
    v = (0.8 + rng.uniform(0.0, 1.2)) * _unit(rng, dim, field)
    r = core.norm(v) * rng.uniform(0.15, 0.9)
    xs = _ball_cloud(rng, dim, field, v, 0.95 * r, _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"v": v},
                         seq={"xs": xs}, reals={"r": r})


def _hyp_tr_mean(inst):
    xs = _rows(inst)
    v = inst.vec("v")
    r = inst.real("r")
    if core.norm(v) < 1e-8:
        return False, "the ball center is numerically zero"
    if r <= 0.0:
        return False, "the ball radius is not positive"
    for x in xs:
        if not _in_ball(x, v, r):
            return False, "a member leaves the ball"
    return True, ""


def _chain_tr_mean(inst):
    xs = _rows(inst)
    v = inst.vec("v")
    r = inst.real("r")
    n = xs.shape[0]
    qn = _sqrt0(_sq_sum(xs) / n)
    xbar = xs.mean(axis=0)
    t0 = core.inner(xbar, v / core.norm(v))
    cap = 0.5 * r * r / core.norm(v)
    chain = [("origin", 0.0),
             ("quadratic mean above the mean norm",
              qn - core.norm(xbar)),
             ("quadratic mean above the full aligned modulus",
              qn - abs(t0)),
             ("quadratic mean above the aligned modulus",
              qn - abs(_re(t0))),
             ("quadratic mean above the aligned component",
              qn - _re(t0)),
             ("half squared radius over the center norm", cap)]
    return chain, max(qn, cap, FLOOR)


register(Check(
    id="TR-MEAN", suite=SUITE,
    title="a ball around a nonzero center caps the quadratic mean "
          "defect of the averaged family",
    fields=("real", "complex"), sampler=_sample_tr_mean,
    hypothesis=_hyp_tr_mean, chain_fn=_chain_tr_mean, min_dim=2))


def _chain_tr_mean_add(inst):
    xs = _rows(inst)
    v = inst.vec("v")
    r = inst.real("r")
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    qn = _sqrt0(_sq_sum(xs) / n)
    xbar = xs.mean(axis=0)
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("scaled quadratic-mean gap",
              n * (qn - core.norm(xbar))),
             ("scaled radius cap",
              0.5 * n * r * r / core.norm(v))]
    return chain, max(S, FLOOR)


register(Check(
    id="TR-MEAN-ADD", suite=SUITE,
    title="the ball radius caps the additive gap through the scaled "
          "quadratic-mean defect",
    fields=("real", "complex"), sampler=_sample_tr_mean,
    hypothesis=_hyp_tr_mean, chain_fn=_chain_tr_mean_add, min_dim=2))


def _sample_tr_mean_cplx(rng, dim, field):
    e = _unit(rng, dim, field)
    ga, gb = _endpoint_pair(rng)
    xs = _ball_cloud(rng, dim, field, 0.5 * (ga + gb) * e,
                     0.95 * 0.5 * abs(ga - gb), _n_members(rng))
    return CheckInstance(field_tag=field, dim=dim, vectors={"e": e},
                         seq={"xs": xs},
                         scalars={"end_a": ga, "end_b": gb})


def _hyp_tr_mean_cplx(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    ga, gb = complex(inst.scalar("end_a")), complex(inst.scalar("end_b"))
    if not _unit_ok(e):
        return False, "reference vector is not unit"
    if abs(ga + gb) < 1e-8:
        return False, "the endpoint sum is numerically zero"
    center = 0.5 * (ga + gb)
    radius = 0.5 * abs(ga - gb)
    for x in xs:
        if not _in_ball(x, center * e, radius):
            return False, "a member leaves the endpoint ball"
    return True, ""


def _chain_tr_mean_cplx(inst):
    xs = _rows(inst)
    e = inst.vec("e")
    ga, gb = complex(inst.scalar("end_a")), complex(inst.scalar("end_b"))
    n = xs.shape[0]
    qn = _sqrt0(_sq_sum(xs) / n)
    xbar = xs.mean(axis=0)
    mu = abs(ga + gb)
    t0 = core.inner(xbar, e)
    t = _re(np.conj(ga + gb) / mu * t0)
    cap = 0.25 * abs(ga - gb) ** 2 / mu
    chain = [("origin", 0.0),
             ("quadratic mean above the mean norm",
              qn - core.norm(xbar)),
             ("quadratic mean above the full aligned modulus",
              qn - abs(t0)),
             ("quadratic mean above the paired modulus",
              qn - abs(t)),
             ("quadratic mean above the paired component", qn - t),
             ("quarter squared spread over the endpoint sum", cap)]
    return chain, max(qn, cap, FLOOR)


register(Check(
    id="TR-MEAN-CPLX", suite=SUITE,
    title="complex endpoints cap the quadratic-mean defect of the "
          "averaged family by their relative spread",
    fields=("complex",), sampler=_sample_tr_mean_cplx,
    hypothesis=_hyp_tr_mean_cplx, chain_fn=_chain_tr_mean_cplx,
    min_dim=2))


def _chain_tr_mean_cplx_add(inst):
    xs = _rows(inst)
    ga, gb = complex(inst.scalar("end_a")), complex(inst.scalar("end_b"))
    n = xs.shape[0]
    S, N = _sum_norm(xs), _norm_sum(xs)
    qn = _sqrt0(_sq_sum(xs) / n)
    xbar = xs.mean(axis=0)
    cap = 0.25 * n * abs(ga - gb) ** 2 / abs(ga + gb)
    chain = [("origin", 0.0), ("additive gap", S - N),
             ("scaled quadratic-mean gap",
              n * (qn - core.norm(xbar))),
             ("scaled spread cap", cap)]
    return chain, max(S, FLOOR)


register(Check(
    id="TR-MEAN-CPLX-ADD", suite=SUITE,
    title="the endpoint spread caps the additive gap through the "
          "scaled quadratic-mean defect",
    fields=("complex",), sampler=_sample_tr_mean_cplx,
    hypothesis=_hyp_tr_mean_cplx, chain_fn=_chain_tr_mean_cplx_add,
    min_dim=2))

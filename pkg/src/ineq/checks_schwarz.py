"""Catalog checks for Schwarz-type refinements and reverses (suite ch2).

delta(x, y) = ||x||^2 ||y||^2 - |<x, y>|^2 denotes the quadratic Schwarz
gap and gap(x, y) = ||x|| ||y|| - |<x, y>| the multiplicative one. The
registered checks cover:

* S-3VEC .. S-FUNC: structure of the quadratic gap (three-vector
  coupling, a seminorm triangle inequality, shift invariance, cosine
  sums, refinements through a unit vector or an operator, and the split
  of a functional over a subspace and its orthogonal complement);
* S-COND, S-BALL: reverses from translated-ball conditions, and
  S-ACZEL for the deficiency coupling of dominated vectors;
* S-FAMREF, S-FAMORTH: refinements through orthonormal families;
* S-DEBRUIJN, S-KUREPA, S-KUR-*: real-weighted bounds for complex or
  complexified vectors that beat the plain quadratic bound by a
  conjugate-coupling term;
* S-SUPLEMMA .. S-VWT: the trigonometric quadratic supremum and the
  two-vector coupling bounds it yields;
* S-BUZANO .. S-BUZ-A1, S-RICHARD: interpolated bounds for the product
  of two couplings through a common vector, with weighted, recentered
  and rotated variants;
* S-FAM-*, S-2FAM-*: the same interpolations through one or two
  orthonormal families, including real-case two-sided versions;
* S-PRECU*, S-MOORE*, S-COND-DELTA: two-vector recombination bounds
  and transfer of near-parallelism lower bounds;
* S-RADIUS .. S-DISC-R: annulus-conditioned lower bounds for Schwarz
  and triangle gaps, their exact quadratic reformulations, and the
  weighted-sequence analogues;
* X-*: quadratic reverses under distance, phase, cone or box
  constraints, including the exact complement-energy identity;
* REV-*, REV2-*: multiplicative and additive reverses from ball
  conditions with scalar endpoints.
"""

from __future__ import annotations

import math

import numpy as np

from . import core, forms
from .catalog import (Check, CheckInstance, bool_chain, identity_chain,
                      register, slack_chain, trivial_hypothesis)

FLOOR = core.ABS_FLOOR


def _sqrt0(v) -> float:
    return math.sqrt(max(float(v), 0.0))


def _re(z) -> float:
    return float(np.real(z))


def _im(z) -> float:
    return float(np.imag(z))


def _delta(x, y) -> float:
    return core.norm_sq(x) * core.norm_sq(y) - abs(core.inner(x, y)) ** 2


def _gap_abs(x, y) -> float:
    return core.norm(x) * core.norm(y) - abs(core.inner(x, y))


def _gap_re(x, y) -> float:
    return core.norm(x) * core.norm(y) - _re(core.inner(x, y))


def _rv(rng, dim, field, lo=0.25, hi=2.0):
    """Random vector with norm uniform in [lo, hi], so checks stay
    well conditioned."""
    return core.random_unit(rng, dim, field) * rng.uniform(lo, hi)


def _sample_plain(*names):
    def sampler(rng, dim, field):
        return CheckInstance(field_tag=field, dim=dim,
                             vectors={nm: _rv(rng, dim, field)
                                      for nm in names})
    return sampler


def _nonzero_hyp(*names):
    def hyp(inst):
        for nm in names:
            if core.norm(inst.vec(nm)) <= 1e-8:
                return False, f"vector {nm} is numerically zero"
        return True, ""
    return hyp


def _unit_hyp(name):
    def hyp(inst):
        if abs(core.norm(inst.vec(name)) - 1.0) > 1e-9:
            return False, f"vector {name} is not unit"
        return True, ""
    return hyp


def _orthogonal_to(rng, dim, field, against):
    """Nonzero vector orthogonal to `against`."""
    base = core.norm_sq(against)
    for _ in range(64):
        v = _rv(rng, dim, field)
        w = v - (core.inner(v, against) / base) * against
        if core.norm(w) > 1e-6:
            return w
    raise core.GeneratorExhausted("orthogonal complement sampler")


def _unit_phase(z):
    a = abs(z)
    return z / a if a > FLOOR else 1.0 + 0.0j


def _signs_agree(pv, qv, ps, qs) -> bool:
    """Sign agreement with a roundoff band near the predicate boundary."""
    if abs(pv) <= 1e-12 * max(ps, 1.0) or abs(qv) <= 1e-12 * max(qs, 1.0):
        return True
    return (pv > 0.0) == (qv > 0.0)


def _unit_scalar(rng, field, lo, hi):
    """Scalar with modulus in [lo, hi]; sign or phase is uniform."""
    mag = rng.uniform(lo, hi)
    if field == "complex":
        return mag * complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
    return float(mag if rng.uniform() < 0.5 else -mag)


# ------------------------------------------ quadratic gap properties


def _chain_three_vector(inst):
    x, y, z = inst.vec("x"), inst.vec("y"), inst.vec("z")
    coupling = abs(core.inner(x, z) * core.norm_sq(y)
                   - core.inner(x, y) * core.inner(y, z)) ** 2
    scale = (core.norm(x) * core.norm_sq(y) * core.norm(z)) ** 2
    return [("zero", 0.0),
            ("determinant coupling", coupling),
            ("gap product", _delta(x, y) * _delta(y, z))], max(scale, FLOOR)


register(Check(
    id="S-3VEC", suite="ch2",
    title="three-vector coupling is dominated by the quadratic gap "
          "product",
    fields=("real", "complex"), sampler=_sample_plain("x", "y", "z"),
    hypothesis=trivial_hypothesis, chain_fn=_chain_three_vector))


def _chain_gap_seminorm(inst):
    x, y, z = inst.vec("x"), inst.vec("y"), inst.vec("z")
    scale = (core.norm(x) + core.norm(z)) * core.norm(y)
    return [("gap seminorm of the sum", _sqrt0(_delta(x + z, y))),
            ("sum of gap seminorms",
             _sqrt0(_delta(x, y)) + _sqrt0(_delta(z, y)))], max(scale, FLOOR)


register(Check(
    id="S-3VEC-TRI", suite="ch2",
    title="square root of the quadratic gap is subadditive in its first "
          "slot",
    fields=("real", "complex"), sampler=_sample_plain("x", "y", "z"),
    hypothesis=trivial_hypothesis, chain_fn=_chain_gap_seminorm))


def _sample_shift(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    lams = [0.0, 1.0, -1.0, 0.5, -0.5, 2.0, -2.0]
    lams += [float(u) for u in rng.uniform(-2.0, 2.0, size=9)]
    if field == "complex":
        lams = [complex(l) for l in lams] + [1j, -1j]
        lams += [complex(u, v)
                 for u, v in rng.uniform(-2.0, 2.0, size=(6, 2))]
    inst.meta["shifts"] = lams
    return inst


def _chain_shift(inst):
    x, y = inst.vec("x"), inst.vec("y")
    shifted = max(_delta(x + lam * y, y) for lam in inst.meta["shifts"])
    scale = ((core.norm(x) + 2.0 * core.norm(y)) * core.norm(y)) ** 2
    return [("zero", 0.0),
            ("largest shifted gap", shifted),
            ("unshifted gap", _delta(x, y))], max(scale, FLOOR)


register(Check(
    id="S-SHIFT", suite="ch2",
    title="quadratic gap is invariant under shifts along the second "
          "vector",
    fields=("real", "complex"), sampler=_sample_shift,
    hypothesis=trivial_hypothesis, chain_fn=_chain_shift,
    notes="every shift attains the supremum, so the top step is an "
          "identity and the equality flag stays on"))


def _chain_cosine_sum(inst):
    x, y, z = inst.vec("x"), inst.vec("y"), inst.vec("z")
    nx, ny, nz = core.norm_sq(x), core.norm_sq(y), core.norm_sq(z)
    p = abs(core.inner(x, y) * core.inner(y, z)
            * core.inner(z, x)) / (nx * ny * nz)
    cs = (abs(core.inner(x, y)) ** 2 / (nx * ny)
          + abs(core.inner(y, z)) ** 2 / (ny * nz)
          + abs(core.inner(z, x)) ** 2 / (nz * nx))
    return [("three cosine products", 3.0 * p),
            ("cosine square sum", cs),
            ("one plus two cosine products", 1.0 + 2.0 * p)], 3.0


register(Check(
    id="S-COS3", suite="ch2",
    title="squared cosine sum of three vectors sits between cosine "
          "product bounds",
    fields=("real", "complex"), sampler=_sample_plain("x", "y", "z"),
    hypothesis=_nonzero_hyp("x", "y", "z"), chain_fn=_chain_cosine_sum))


def _sample_xye(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    inst.vectors["e"] = core.random_unit(rng, dim, field)
    return inst


def _chain_unit_refine(inst):
    x, y, e = inst.vec("x"), inst.vec("y"), inst.vec("e")
    cross = core.inner(x, e) * core.inner(e, y)
    nprod = core.norm(x) * core.norm(y)
    return [("coupling modulus", abs(core.inner(x, y))),
            ("split refinement",
             abs(core.inner(x, y) - cross) + abs(cross)),
            ("norm product", nprod)], max(nprod, FLOOR)


register(Check(
    id="S-REFINE1", suite="ch2",
    title="splitting off one unit direction refines the Schwarz bound",
    fields=("real", "complex"), sampler=_sample_xye,
    hypothesis=_unit_hyp("e"), chain_fn=_chain_unit_refine))


def _sample_orth_pair_e(rng, dim, field):
    x = _rv(rng, dim, field)
    y = _orthogonal_to(rng, dim, field, x)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y,
                                  "e": core.random_unit(rng, dim, field)})


def _orth_pair_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    if abs(core.inner(x, y)) > 1e-9 * (core.norm(x) * core.norm(y) + 1.0):
        return False, "x and y are not orthogonal"
    return _unit_hyp("e")(inst)


def _chain_orth_refine(inst):
    x, y, e = inst.vec("x"), inst.vec("y"), inst.vec("e")
    nprod = core.norm(x) * core.norm(y)
    return [("zero", 0.0),
            ("twice the split product",
             2.0 * abs(core.inner(x, e) * core.inner(e, y))),
            ("norm product", nprod)], max(nprod, FLOOR)


register(Check(
    id="S-ORTH2", suite="ch2", min_dim=2,
    title="orthogonal pairs absorb twice the split product under the "
          "norm product",
    fields=("real", "complex"), sampler=_sample_orth_pair_e,
    hypothesis=_orth_pair_hyp, chain_fn=_chain_orth_refine))


def _sample_operator_refine(rng, dim, field):
    if field == "complex":
        mat = rng.standard_normal((dim, dim)) \
            + 1j * rng.standard_normal((dim, dim))
    else:
        mat = rng.standard_normal((dim, dim))
    probes = [core.random_unit(rng, dim, field) for _ in range(24)]
    pairs = [(core.random_unit(rng, dim, field),
              core.random_unit(rng, dim, field)) for _ in range(24)]
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"x": core.random_unit(rng, dim, field),
                 "y": core.random_unit(rng, dim, field),
                 "e": core.random_unit(rng, dim, field)},
        meta={"op": mat, "probes": probes, "pairs": pairs})


def _split_mid(x, w, e):
    cross = core.inner(x, e) * core.inner(e, w)
    return abs(core.inner(x, w) - cross) + abs(cross)


def _chain_operator_refine(inst):
    x0, y0, e = inst.vec("x"), inst.vec("y"), inst.vec("e")
    mat = inst.meta["op"]
    ay0 = mat @ y0
    nay = core.norm(ay0)
    mids = [_split_mid(x0, ay0, e)]
    mids += [_split_mid(p, ay0, e) for p in inst.meta["probes"]]
    if nay > FLOOR:
        mids.append(_split_mid(ay0 / nay, ay0, e))
    u, s, vh = np.linalg.svd(mat)
    top = float(s[0])
    pair_mids = [mids[0]]
    pair_mids += [_split_mid(p, mat @ q, e) for p, q in inst.meta["pairs"]]
    pair_mids.append(_split_mid(u[:, 0], mat @ np.conj(vh[0]), e))
    return [("operator coupling modulus", abs(core.inner(x0, ay0))),
            ("split refinement", mids[0]),
            ("split supremum over left probes", max(mids)),
            ("image norm", nay),
            ("split supremum over probe pairs", max(pair_mids)),
            ("operator norm", top)], max(top, FLOOR)


register(Check(
    id="S-OPREP", suite="ch2", min_dim=2,
    title="split refinement interpolates between operator coupling, "
          "image norm and operator norm",
    fields=("real", "complex"), sampler=_sample_operator_refine,
    hypothesis=_unit_hyp("e"), chain_fn=_chain_operator_refine,
    notes="the image-normalized probe and the top singular pair attain "
          "the two suprema exactly"))


def _project_span(fam, v):
    return fam.vectors.T @ (np.conj(fam.vectors) @ v)


def _sample_functional_split(rng, dim, field):
    size = int(rng.integers(1, dim))
    fam = forms.random_orthonormal(rng, dim, size, field)
    coeffs = rng.standard_normal(size)
    if field == "complex":
        coeffs = coeffs + 1j * rng.standard_normal(size)
    x = fam.vectors.T @ coeffs
    x = x / core.norm(x)
    for _ in range(64):
        v = _rv(rng, dim, field)
        w = v - _project_span(fam, v)
        if core.norm(w) > 1e-6:
            break
    else:
        raise core.GeneratorExhausted("complement sampler")
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": w / core.norm(w),
                                  "e": _rv(rng, dim, field, 0.4, 2.0)},
                         families={"E": fam})


def _functional_split_hyp(inst):
    fam = inst.fam("E")
    x, y = inst.vec("x"), inst.vec("y")
    if abs(core.norm(x) - 1.0) > 1e-9 or abs(core.norm(y) - 1.0) > 1e-9:
        return False, "x or y is not unit"
    if core.norm(x - _project_span(fam, x)) > 1e-8:
        return False, "x leaves the subspace"
    if core.norm(_project_span(fam, y)) > 1e-8:
        return False, "y leaves the orthogonal complement"
    return True, ""


def _chain_functional_split(inst):
    fam = inst.fam("E")
    x, y, e = inst.vec("x"), inst.vec("y"), inst.vec("e")
    pe = _project_span(fam, e)
    ne = core.norm_sq(e)
    return [("zero", 0.0),
            ("witness pair product",
             2.0 * abs(core.inner(e, x)) * abs(core.inner(e, y))),
            ("split norm product",
             2.0 * core.norm(pe) * core.norm(e - pe)),
            ("functional energy", ne)], max(ne, FLOOR)


register(Check(
    id="S-FUNC", suite="ch2", min_dim=2,
    title="subspace and complement witnesses bound the split energy of "
          "a functional",
    fields=("real", "complex"), sampler=_sample_functional_split,
    hypothesis=_functional_split_hyp, chain_fn=_chain_functional_split))


# ---------------------------------------- translated-ball reverses


def _sample_dominated_pair(rng, dim, field):
    x = _rv(rng, dim, field, 0.4, 2.0)
    y = _rv(rng, dim, field, 0.4, 2.0)
    a = x - core.random_unit(rng, dim, field) \
        * (rng.uniform(0.0, 0.95) * core.norm(x))
    b = y - core.random_unit(rng, dim, field) \
        * (rng.uniform(0.0, 0.95) * core.norm(y))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y, "a": a, "b": b})


def _dominated_defects(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.vec("a"), inst.vec("b")
    return (2.0 * _re(core.inner(x, a)) - core.norm_sq(a),
            2.0 * _re(core.inner(y, b)) - core.norm_sq(b))


def _dominated_hyp(inst):
    da, db = _dominated_defects(inst)
    if da < 0.0:
        return False, "first translate dominates its center"
    if db < 0.0:
        return False, "second translate dominates its center"
    return True, ""


def _chain_dominated(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.vec("a"), inst.vec("b")
    da, db = _dominated_defects(inst)
    rem = abs(core.inner(x, y) - core.inner(x, b)
              - core.inner(a, y) + core.inner(a, b))
    nprod = core.norm(x) * core.norm(y)
    return [("defect product plus recentered coupling",
             _sqrt0(da) * _sqrt0(db) + rem),
            ("norm product", nprod)], max(nprod, FLOOR)


register(Check(
    id="S-COND", suite="ch2",
    title="dominated translates reverse the Schwarz bound up to the "
          "recentered coupling",
    fields=("real", "complex"), sampler=_sample_dominated_pair,
    hypothesis=_dominated_hyp, chain_fn=_chain_dominated))


def _sample_small_ball(rng, dim, field):
    hi = math.sqrt(2.0) * 0.995
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": _rv(rng, dim, field, 0.15, hi),
                                  "y": _rv(rng, dim, field, 0.15, hi)})


def _small_ball_hyp(inst):
    for nm in ("x", "y"):
        if core.norm_sq(inst.vec(nm)) > 2.0 + 1e-12:
            return False, f"vector {nm} leaves the radius sqrt(2) ball"
    return True, ""


def _chain_small_ball(inst):
    x, y = inst.vec("x"), inst.vec("y")
    nx, ny = core.norm_sq(x), core.norm_sq(y)
    c = abs(core.inner(x, y))
    lower = c * c * _sqrt0(2.0 - nx) * _sqrt0(2.0 - ny) \
        + c * abs(1.0 - nx - ny + c * c)
    return [("conditional lower bound", lower),
            ("norm product", core.norm(x) * core.norm(y))], 2.0


register(Check(
    id="S-BALL√2", suite="ch2",
    title="inside the radius sqrt(2) ball the coupling reverses the "
          "norm product",
    fields=("real", "complex"), sampler=_sample_small_ball,
    hypothesis=_small_ball_hyp, chain_fn=_chain_small_ball))


# ------------------------------------------- family refinements


def _sample_family_xy(rng, dim, field):
    size = int(rng.integers(1, dim + 1))
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"x": _rv(rng, dim, field), "y": _rv(rng, dim, field)},
        families={"E": forms.random_orthonormal(rng, dim, size, field)})


def _family_cross_terms(fam, x, y):
    """Array of <x, e_i> <e_i, y> over the family."""
    return forms.family_coefficients(fam, x) \
        * np.conj(forms.family_coefficients(fam, y))


def _chain_family_refine(inst):
    x, y = inst.vec("x"), inst.vec("y")
    terms = _family_cross_terms(inst.fam("E"), x, y)
    s = complex(np.sum(terms))
    ip = core.inner(x, y)
    nprod = core.norm(x) * core.norm(y)
    return [("coupling modulus", abs(ip)),
            ("recentered plus partial sum", abs(ip - s) + abs(s)),
            ("recentered plus term moduli",
             abs(ip - s) + float(np.sum(np.abs(terms)))),
            ("norm product", nprod)], max(nprod, FLOOR)


register(Check(
    id="S-FAMREF", suite="ch2", min_dim=2,
    title="orthonormal family splits refine the Schwarz bound twice",
    fields=("real", "complex"), sampler=_sample_family_xy,
    hypothesis=trivial_hypothesis, chain_fn=_chain_family_refine))


def _sample_family_orth(rng, dim, field):
    x = _rv(rng, dim, field)
    y = _orthogonal_to(rng, dim, field, x)
    size = int(rng.integers(1, dim + 1))
    return CheckInstance(
        field_tag=field, dim=dim, vectors={"x": x, "y": y},
        families={"E": forms.random_orthonormal(rng, dim, size, field)})


def _family_orth_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    if abs(core.inner(x, y)) > 1e-9 * (core.norm(x) * core.norm(y) + 1.0):
        return False, "x and y are not orthogonal"
    return True, ""


def _chain_family_orth(inst):
    x, y = inst.vec("x"), inst.vec("y")
    terms = _family_cross_terms(inst.fam("E"), x, y)
    s = complex(np.sum(terms))
    nprod = core.norm(x) * core.norm(y)
    return [("twice the partial sum modulus", 2.0 * abs(s)),
            ("partial sum plus term moduli",
             abs(s) + float(np.sum(np.abs(terms)))),
            ("norm product", nprod)], max(nprod, FLOOR)


register(Check(
    id="S-FAMORTH", suite="ch2", min_dim=2,
    title="orthogonal pairs double the family partial sum under the "
          "norm product",
    fields=("real", "complex"), sampler=_sample_family_orth,
    hypothesis=_family_orth_hyp, chain_fn=_chain_family_orth))


# -------------------------------------------- deficiency coupling


def _sample_deficient(rng, dim, field):
    u = _rv(rng, dim, field)
    v = _rv(rng, dim, field)
    return CheckInstance(
        field_tag=field, dim=dim, vectors={"u": u, "v": v},
        reals={"alpha": core.norm(u) * (1.0 + rng.uniform(0.02, 1.0)),
               "beta": core.norm(v) * (1.0 + rng.uniform(0.02, 1.0))})


def _deficient_hyp(inst):
    if inst.real("alpha") ** 2 < core.norm_sq(inst.vec("u")):
        return False, "alpha does not dominate the first norm"
    if inst.real("beta") ** 2 < core.norm_sq(inst.vec("v")):
        return False, "beta does not dominate the second norm"
    return True, ""


def _chain_deficient(inst):
    u, v = inst.vec("u"), inst.vec("v")
    alpha, beta = inst.real("alpha"), inst.real("beta")
    da = alpha ** 2 - core.norm_sq(u)
    db = beta ** 2 - core.norm_sq(v)
    coupling = (alpha * beta - _re(core.inner(u, v))) ** 2
    return [("zero", 0.0),
            ("deficiency product", da * db),
            ("coupling deficiency squared", coupling)], (alpha * beta) ** 2


register(Check(
    id="S-ACZEL", suite="ch2",
    title="deficiency product is dominated by the squared coupling "
          "deficiency",
    fields=("real",), sampler=_sample_deficient,
    hypothesis=_deficient_hyp, chain_fn=_chain_deficient))


# --------------------------------------- complexification bounds


def _sample_weighted_complex(rng, dim, field):
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"z": core.random_vector(rng, dim, "complex")},
        seq={"a": rng.standard_normal(dim)})


def _chain_weighted_complex(inst):
    a = np.asarray(inst.lst("a"), dtype=float)
    z = inst.vec("z")
    sa = float(np.sum(a * a))
    sz = float(np.sum(np.abs(z) ** 2))
    zz = complex(np.sum(z * z))
    scale = max(sa * sz, FLOOR)
    return [("weighted sum modulus squared",
             abs(complex(np.sum(a * z))) ** 2),
            ("conjugate-refined bound", 0.5 * sa * (sz + abs(zz))),
            ("plain quadratic bound", sa * sz)], scale


def _weighted_complex_witness():
    return CheckInstance(
        field_tag="complex", dim=2,
        vectors={"z": np.array([1.0 + 0.0j, 1.0j])},
        seq={"a": np.array([1.0, 1.0])},
        meta={"equality_scalar": 1.0 - 1.0j})


register(Check(
    id="S-DEBRUIJN", suite="ch2",
    title="real weights against complex entries beat the plain "
          "quadratic bound by the square-sum term",
    fields=("complex",), sampler=_sample_weighted_complex,
    hypothesis=trivial_hypothesis, chain_fn=_chain_weighted_complex,
    witness=_weighted_complex_witness,
    notes="equality holds when the weights are the real parts of a "
          "unimodular rotation of the entries; the witness stores one "
          "such rotation"))


def _lift(a):
    return core.CVector(np.asarray(a, dtype=float), np.zeros(len(a)))


def _sample_complexified(rng, dim, field):
    w = core.CVector(rng.standard_normal(dim), rng.standard_normal(dim))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"a": _rv(rng, dim, "real")},
                         meta={"w": w})


def _chain_complexified(inst):
    a, w = inst.vec("a"), inst.meta["w"]
    na = core.norm_sq(a)
    nw = core.cplx_norm_sq(w)
    cross = abs(core.complex_inner(w, core.conj_vector(w)))
    lhs = abs(core.complex_inner(w, _lift(a))) ** 2
    return [("complexified coupling squared", lhs),
            ("conjugate-refined bound", 0.5 * na * (nw + cross)),
            ("plain quadratic bound", na * nw)], max(na * nw, FLOOR)


register(Check(
    id="S-KUREPA", suite="ch2",
    title="coupling of a complexified vector against a real one obeys "
          "the conjugate-refined bound",
    fields=("real",), sampler=_sample_complexified,
    hypothesis=trivial_hypothesis, chain_fn=_chain_complexified))


# ------------------------------------- trigonometric supremum lemma


def _sample_trig_sup(rng, dim, field):
    lam, bet, gam = (float(v) for v in rng.normal(0.0, 1.5, size=3))
    grid = [float(t) for t in np.linspace(0.0, 2.0 * math.pi, 97)]
    grid += [float(t) for t in rng.uniform(0.0, 2.0 * math.pi, size=31)]
    return CheckInstance(field_tag=field, dim=dim,
                         reals={"lam": lam, "bet": bet, "gam": gam},
                         meta={"grid": grid})


def _chain_trig_sup(inst):
    lam = inst.real("lam")
    bet = inst.real("bet")
    gam = inst.real("gam")

    def f(t):
        s, c = math.sin(t), math.cos(t)
        return lam * s * s + 2.0 * bet * s * c + gam * c * c

    star = 0.5 * math.atan2(2.0 * bet, gam - lam)
    closed = 0.5 * (lam + gam) + 0.5 * math.hypot(gam - lam, 2.0 * bet)
    best = max(max(f(t) for t in inst.meta["grid"]), f(star))
    scale = abs(lam) + abs(gam) + 2.0 * abs(bet) + 1.0
    return identity_chain("closed-form supremum", closed,
                          "sampled supremum", best), scale


register(Check(
    id="S-SUPLEMMA", suite="ch2",
    title="quadratic trigonometric expression attains its closed-form "
          "supremum",
    fields=("real",), sampler=_sample_trig_sup,
    hypothesis=trivial_hypothesis, chain_fn=_chain_trig_sup,
    notes="the sampled grid includes the exact maximizing angle, so "
          "the two suprema agree to roundoff"))


def _two_vector_bound(nx2, ny2, re_xy):
    return 0.5 * (nx2 + ny2 + math.hypot(nx2 - ny2, 2.0 * re_xy))


def _sample_real_coupling_complex(rng, dim, field):
    z = _rv(rng, dim, "complex", 0.4, 2.0)
    nz = core.norm_sq(z)

    def fix(v):
        return v - 1j * (_im(core.inner(v, z)) / nz) * z

    return CheckInstance(field_tag="complex", dim=dim,
                         vectors={"x": fix(_rv(rng, dim, "complex")),
                                  "y": fix(_rv(rng, dim, "complex")),
                                  "z": z})


def _real_coupling_hyp(inst):
    z = inst.vec("z")
    for nm in ("x", "y"):
        v = inst.vec(nm)
        if abs(_im(core.inner(v, z))) \
                > 1e-8 * (core.norm(v) * core.norm(z) + 1.0):
            return False, f"coupling of {nm} with z is not real"
    return True, ""


def _chain_two_vector_sup(inst):
    x, y, z = inst.vec("x"), inst.vec("y"), inst.vec("z")
    lhs = _re(core.inner(x, z)) ** 2 + _re(core.inner(y, z)) ** 2
    mid = core.norm_sq(z) * _two_vector_bound(
        core.norm_sq(x), core.norm_sq(y), _re(core.inner(x, y)))
    top = (core.norm_sq(x) + core.norm_sq(y)) * core.norm_sq(z)
    return [("real coupling square sum", lhs),
            ("rotation supremum bound", mid),
            ("energy sum bound", top)], max(top, FLOOR)


register(Check(
    id="S-IMZERO", suite="ch2",
    title="real couplings against a common vector obey the rotation "
          "supremum bound",
    fields=("complex",), sampler=_sample_real_coupling_complex,
    hypothesis=_real_coupling_hyp, chain_fn=_chain_two_vector_sup))


register(Check(
    id="S-REAL2", suite="ch2",
    title="two real couplings against a common vector obey the "
          "rotation supremum bound",
    fields=("real",), sampler=_sample_plain("x", "y", "z"),
    hypothesis=trivial_hypothesis, chain_fn=_chain_two_vector_sup))


def _sample_decoupled_pair(rng, dim, field):
    z = _rv(rng, dim, field, 0.4, 2.0)
    nz = core.norm_sq(z)

    def fix(v):
        if field == "complex":
            return v - 1j * (_im(core.inner(v, z)) / nz) * z
        return v

    x = fix(_rv(rng, dim, field))
    for _ in range(64):
        y = fix(_rv(rng, dim, field))
        # subtracting a real multiple of x keeps the couplings with z real
        y = y - (_re(core.inner(y, x)) / core.norm_sq(x)) * x
        if core.norm(y) > 1e-6:
            break
    else:
        raise core.GeneratorExhausted("decoupled pair sampler")
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y, "z": z})


def _decoupled_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    if inst.field_tag == "complex":
        ok, why = _real_coupling_hyp(inst)
        if not ok:
            return ok, why
        if abs(_re(core.inner(x, y))) \
                > 1e-8 * (core.norm(x) * core.norm(y) + 1.0):
            return False, "x and y are not really decoupled"
        return True, ""
    return _family_orth_hyp(inst)


def _chain_decoupled_max(inst):
    x, y, z = inst.vec("x"), inst.vec("y"), inst.vec("z")
    lhs = math.sqrt(_re(core.inner(x, z)) ** 2
                    + _re(core.inner(y, z)) ** 2)
    top = core.norm(z) * max(core.norm(x), core.norm(y))
    return [("coupled energy", lhs), ("max norm bound", top)], \
        max(top, FLOOR)


register(Check(
    id="S-MAX2", suite="ch2", min_dim=2,
    title="decoupled real couplings aggregate below the larger norm",
    fields=("real", "complex"), sampler=_sample_decoupled_pair,
    hypothesis=_decoupled_hyp, chain_fn=_chain_decoupled_max))


def _chain_paired_sup(inst):
    v, w, t = inst.vec("v"), inst.vec("w"), inst.vec("t")
    ivt, iwt = core.inner(v, t), core.inner(w, t)
    coupling = _re(ivt) * _re(iwt) + _im(ivt) * _im(iwt)
    lhs = 0.5 * (abs(ivt) ** 2 + abs(iwt) ** 2
                 + math.hypot(abs(ivt) ** 2 - abs(iwt) ** 2,
                              2.0 * coupling))
    mid = core.norm_sq(t) * _two_vector_bound(
        core.norm_sq(v), core.norm_sq(w), _re(core.inner(v, w)))
    top = (core.norm_sq(v) + core.norm_sq(w)) * core.norm_sq(t)
    return [("paired coupling supremum", lhs),
            ("rotation supremum bound", mid),
            ("energy sum bound", top)], max(top, FLOOR)


register(Check(
    id="S-VWT", suite="ch2",
    title="paired coupling supremum sits under the rotation supremum "
          "for arbitrary vectors",
    fields=("real", "complex"), sampler=_sample_plain("v", "w", "t"),
    hypothesis=trivial_hypothesis, chain_fn=_chain_paired_sup))


# --------------------------------- double-coupling interpolations


def _chain_double_coupling(inst):
    a, b, x = inst.vec("a"), inst.vec("b"), inst.vec("x")
    nx = core.norm_sq(x)
    nprod = core.norm(a) * core.norm(b)
    return [("double coupling modulus",
             abs(core.inner(a, x) * core.inner(x, b))),
            ("interpolated bound",
             0.5 * (nprod + abs(core.inner(a, b))) * nx)], \
        max(nprod * nx, FLOOR)


def _double_coupling_witness():
    return CheckInstance(
        field_tag="real", dim=2,
        vectors={"a": np.array([1.0, 0.0]), "b": np.array([0.0, 1.0]),
                 "x": np.array([1.0, 1.0]) / math.sqrt(2.0)})


register(Check(
    id="S-BUZANO", suite="ch2",
    title="double coupling through a common vector is at most the "
          "interpolated bound",
    fields=("real", "complex"), sampler=_sample_plain("a", "b", "x"),
    hypothesis=_nonzero_hyp("x"), chain_fn=_chain_double_coupling,
    witness=_double_coupling_witness))


def _wip(w, u, v):
    return complex(np.sum(w * u * np.conj(v)))


def _sample_weighted_triple(rng, dim, field):
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"a": _rv(rng, dim, field), "b": _rv(rng, dim, field),
                 "x": _rv(rng, dim, field)},
        weights=core.random_weights(rng, dim, normalized=False))


def _weighted_triple_hyp(inst):
    w = inst.weights.weights
    px = float(np.sum(w * np.abs(inst.vec("x")) ** 2))
    if px <= 1e-10:
        return False, "x is null for the weights"
    return True, ""


def _chain_weighted_double(inst):
    w = inst.weights.weights
    a, b, x = inst.vec("a"), inst.vec("b"), inst.vec("x")
    px = float(np.real(_wip(w, x, x)))
    pa = _sqrt0(np.real(_wip(w, a, a)))
    pb = _sqrt0(np.real(_wip(w, b, b)))
    lhs = abs(_wip(w, a, x) * _wip(w, x, b))
    rhs = 0.5 * (pa * pb + abs(_wip(w, a, b))) * px
    return [("weighted double coupling", lhs),
            ("weighted interpolated bound", rhs)], \
        max(pa * pb * px, FLOOR)


register(Check(
    id="S-BUZ-DISC", suite="ch2",
    title="weighted sequences obey the interpolated double coupling "
          "bound",
    fields=("real", "complex"), sampler=_sample_weighted_triple,
    hypothesis=_weighted_triple_hyp, chain_fn=_chain_weighted_double))


def _sample_recentered(rng, dim, field):
    inst = _sample_plain("a", "b", "x")(rng, dim, field)
    inst.scalars["alpha"] = _unit_scalar(rng, field, 0.3, 3.0)
    return inst


def _recentered_hyp(inst):
    if abs(inst.scalar("alpha")) < 1e-8:
        return False, "alpha is numerically zero"
    return _nonzero_hyp("x")(inst)


def _recentered_deviation(a, x):
    """Schwarz defect of a against the direction of x, as a norm."""
    return _sqrt0(core.norm_sq(x) * core.norm_sq(a)
                  - abs(core.inner(a, x)) ** 2) / core.norm(x)


def _chain_recentered(inst):
    a, b, x = inst.vec("a"), inst.vec("b"), inst.vec("x")
    al = inst.scalar("alpha")
    nx = core.norm_sq(x)
    lhs = abs(core.inner(a, x) * core.inner(x, b) / nx
              - core.inner(a, b) / al)
    rad = abs(al - 1.0) ** 2 * abs(core.inner(a, x)) ** 2 \
        + nx * core.norm_sq(a) - abs(core.inner(a, x)) ** 2
    rhs = core.norm(b) / (abs(al) * core.norm(x)) * _sqrt0(rad)
    return [("recentered double coupling", lhs),
            ("deviation bound", rhs)], \
        max(core.norm(a) * core.norm(b), FLOOR)


register(Check(
    id="S-BUZ-GEN", suite="ch2",
    title="recentering the double coupling by any scalar costs at most "
          "the deviation bound",
    fields=("real", "complex"), sampler=_sample_recentered,
    hypothesis=_recentered_hyp, chain_fn=_chain_recentered))


def _sample_rotated(rng, dim, field):
    inst = _sample_plain("a", "b", "x")(rng, dim, field)
    if field == "complex":
        theta = rng.uniform(-math.pi + 0.3, math.pi - 0.3)
        inst.scalars["eta"] = complex(math.cos(theta), math.sin(theta))
    else:
        inst.scalars["eta"] = 1.0
    return inst


def _rotated_hyp(inst):
    eta = inst.scalar("eta")
    if abs(abs(eta) - 1.0) > 1e-9:
        return False, "eta is not unimodular"
    if _re(eta) <= -0.99:
        return False, "eta is too close to minus one"
    return _nonzero_hyp("x")(inst)


def _chain_rotated(inst):
    a, b, x = inst.vec("a"), inst.vec("b"), inst.vec("x")
    eta = inst.scalar("eta")
    al = 1.0 + eta
    nx = core.norm_sq(x)
    nprod = core.norm(a) * core.norm(b)
    lhs = abs(core.inner(a, x) * core.inner(x, b) / nx
              - core.inner(a, b) / al)
    return [("rotated recentered coupling", lhs),
            ("modulus form bound", nprod / abs(al)),
            ("real-part form bound",
             nprod / (math.sqrt(2.0) * math.sqrt(1.0 + _re(eta))))], \
        max(nprod, FLOOR)


register(Check(
    id="S-BUZ-ETA", suite="ch2",
    title="unimodular recentering admits equal modulus and real-part "
          "bounds",
    fields=("real", "complex"), sampler=_sample_rotated,
    hypothesis=_rotated_hyp, chain_fn=_chain_rotated,
    notes="the two bound forms coincide identically, so the final gap "
          "is zero and the equality flag stays on"))


def _chain_two_sided_double(inst):
    a, b, x = inst.vec("a"), inst.vec("b"), inst.vec("x")
    nx = core.norm_sq(x)
    nprod = core.norm(a) * core.norm(b)
    ab = _re(core.inner(a, b))
    mid = _re(core.inner(a, x) * core.inner(x, b))
    return [("lower interpolation", 0.5 * (ab - nprod) * nx),
            ("double coupling", mid),
            ("upper interpolation", 0.5 * (ab + nprod) * nx)], \
        max(nprod * nx, FLOOR)


register(Check(
    id="S-RICHARD", suite="ch2",
    title="real double coupling is trapped between the two-sided "
          "interpolations",
    fields=("real",), sampler=_sample_plain("a", "b", "x"),
    hypothesis=_nonzero_hyp("x"), chain_fn=_chain_two_sided_double,
    notes="with a and b both orthogonal to x the middle term vanishes "
          "while the bounds stay at half the norm product"))


def _chain_double_refined(inst):
    a, b, x = inst.vec("a"), inst.vec("b"), inst.vec("x")
    nx = core.norm_sq(x)
    nprod = core.norm(a) * core.norm(b)
    prod = core.inner(a, x) * core.inner(x, b)
    ab = core.inner(a, b)
    return [("double coupling modulus", abs(prod)),
            ("recentered refinement",
             abs(prod - 0.5 * ab * nx) + 0.5 * abs(ab) * nx),
            ("interpolated bound",
             0.5 * (nprod + abs(ab)) * nx)], max(nprod * nx, FLOOR)


register(Check(
    id="S-BUZ-REF", suite="ch2",
    title="recentered split refines the interpolated double coupling "
          "bound",
    fields=("real", "complex"), sampler=_sample_plain("a", "b", "x"),
    hypothesis=_nonzero_hyp("x"), chain_fn=_chain_double_refined))


def _chain_centered_deviation(inst):
    a, b, x = inst.vec("a"), inst.vec("b"), inst.vec("x")
    nx = core.norm_sq(x)
    nprod = core.norm(a) * core.norm(b)
    prod = core.inner(a, x) * core.inner(x, b) / nx
    dev = core.norm(b) * _recentered_deviation(a, x)
    parts = [("centered deviation bound",
              dev - abs(prod - core.inner(a, b)), nprod)]
    if inst.field_tag == "real":
        ab = _re(core.inner(a, b))
        pr = _re(prod)
        parts.append(("upper branch", ab + dev - pr, nprod))
        parts.append(("lower branch", pr - (ab - dev), nprod))
    return slack_chain(parts)


register(Check(
    id="S-BUZ-A1", suite="ch2",
    title="unit recentering is controlled by the Schwarz deviation "
          "of the first vector",
    fields=("real", "complex"), sampler=_sample_plain("a", "b", "x"),
    hypothesis=_nonzero_hyp("x"), chain_fn=_chain_centered_deviation,
    notes="the real case restates the bound as a two-sided trap; both "
          "displays are kept"))


# --------------------------------- conjugate-coupling refinements


def _sample_complexified_unit(rng, dim, field):
    inst = _sample_complexified(rng, dim, field)
    inst.vectors["e"] = _rv(rng, dim, "real", 0.4, 2.0)
    del inst.vectors["a"]
    return inst


def _chain_conjugate_refined(inst):
    w, e = inst.meta["w"], inst.vec("e")
    ne = core.norm_sq(e)
    c = core.complex_inner(w, _lift(e))
    cross = core.complex_inner(w, core.conj_vector(w))
    nw = core.cplx_norm_sq(w)
    return [("coupling square modulus", abs(c) ** 2),
            ("conjugate split",
             abs(c * c - 0.5 * cross * ne) + 0.5 * abs(cross) * ne),
            ("conjugate-refined bound", 0.5 * ne * (nw + abs(cross))),
            ("plain quadratic bound", ne * nw)], max(ne * nw, FLOOR)


register(Check(
    id="S-KUR-REF", suite="ch2",
    title="conjugate split refines the complexified coupling bound",
    fields=("real",), sampler=_sample_complexified_unit,
    hypothesis=trivial_hypothesis, chain_fn=_chain_conjugate_refined))


def _sample_psd_coupling(rng, dim, field):
    m = rng.standard_normal((dim, dim))
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"z": core.random_vector(rng, dim, "complex")},
        seq={"a": rng.standard_normal(dim)},
        meta={"psd": m @ m.T + 0.25 * np.eye(dim)})


def _chain_psd_coupling(inst):
    mat = inst.meta["psd"]
    a = np.asarray(inst.lst("a"), dtype=float)
    z = inst.vec("z")
    qa = float(a @ mat @ a)
    qz = float(np.real(z @ mat @ np.conj(z)))
    qzz = complex(z @ mat @ z)
    lhs = abs(complex(a @ mat @ z)) ** 2
    return [("form coupling squared", lhs),
            ("conjugate-refined bound", 0.5 * qa * (qz + abs(qzz))),
            ("plain quadratic bound", qa * qz)], max(qa * qz, FLOOR)


register(Check(
    id="S-KUR-PSD", suite="ch2",
    title="positive definite forms couple real against complex entries "
          "within the conjugate-refined bound",
    fields=("complex",), sampler=_sample_psd_coupling,
    hypothesis=trivial_hypothesis, chain_fn=_chain_psd_coupling))


def _sample_weighted_moments(rng, dim, field):
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"z": core.random_vector(rng, dim, "complex")},
        seq={"a": rng.standard_normal(dim)},
        weights=core.random_weights(rng, dim, normalized=True))


def _chain_weighted_moments(inst):
    rho = inst.weights.weights
    a = np.asarray(inst.lst("a"), dtype=float)
    z = inst.vec("z")
    m1 = complex(np.sum(rho * a * z))
    m2 = float(np.sum(rho * a * a))
    mzz = complex(np.sum(rho * z * z))
    mza = float(np.sum(rho * np.abs(z) ** 2))
    scale = max(m2 * mza, FLOOR)
    return [("moment coupling squared", abs(m1) ** 2),
            ("conjugate split",
             abs(m1 * m1 - 0.5 * m2 * mzz) + 0.5 * m2 * abs(mzz)),
            ("conjugate-refined bound", 0.5 * m2 * (mza + abs(mzz))),
            ("plain quadratic bound", m2 * mza)], scale


register(Check(
    id="S-KUR-SEQ", suite="ch2",
    title="probability-weighted moments obey the refined conjugate "
          "coupling chain",
    fields=("complex",), sampler=_sample_weighted_moments,
    hypothesis=trivial_hypothesis, chain_fn=_chain_weighted_moments))


# ----------------------------------- family coupling interpolation


def _sample_family_ab(rng, dim, field):
    size = int(rng.integers(1, dim + 1))
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"a": _rv(rng, dim, field), "b": _rv(rng, dim, field)},
        families={"E": forms.random_orthonormal(rng, dim, size, field)})


def _chain_family_interp(inst):
    a, b = inst.vec("a"), inst.vec("b")
    s = complex(np.sum(_family_cross_terms(inst.fam("E"), a, b)))
    nprod = core.norm(a) * core.norm(b)
    return [("recentered family coupling",
             abs(s - 0.5 * core.inner(a, b))),
            ("half norm product", 0.5 * nprod)], max(nprod, FLOOR)


register(Check(
    id="S-FAM-BUZ", suite="ch2", min_dim=2,
    title="family coupling recentered at half the inner product stays "
          "within half the norm product",
    fields=("real", "complex"), sampler=_sample_family_ab,
    hypothesis=trivial_hypothesis, chain_fn=_chain_family_interp))


def _chain_family_interp_chain(inst):
    a, b = inst.vec("a"), inst.vec("b")
    s = complex(np.sum(_family_cross_terms(inst.fam("E"), a, b)))
    ab = core.inner(a, b)
    nprod = core.norm(a) * core.norm(b)
    return [("family coupling modulus", abs(s)),
            ("recentered split", abs(s - 0.5 * ab) + 0.5 * abs(ab)),
            ("interpolated bound", 0.5 * (nprod + abs(ab))),
            ("norm product", nprod)], max(nprod, FLOOR)


register(Check(
    id="S-FAM-CHAIN", suite="ch2", min_dim=2,
    title="family coupling climbs through the recentered split to the "
          "norm product",
    fields=("real", "complex"), sampler=_sample_family_ab,
    hypothesis=trivial_hypothesis, chain_fn=_chain_family_interp_chain))


def _chain_family_two_sided(inst):
    a, b = inst.vec("a"), inst.vec("b")
    s = _re(np.sum(_family_cross_terms(inst.fam("E"), a, b)))
    ab = _re(core.inner(a, b))
    nprod = core.norm(a) * core.norm(b)
    return [("lower interpolation", 0.5 * (ab - nprod)),
            ("family coupling", s),
            ("upper interpolation", 0.5 * (nprod + ab))], \
        max(nprod, FLOOR)


register(Check(
    id="S-FAM-REAL", suite="ch2", min_dim=2,
    title="real family coupling is trapped between the two-sided "
          "interpolations",
    fields=("real",), sampler=_sample_family_ab,
    hypothesis=trivial_hypothesis, chain_fn=_chain_family_two_sided))


def _sample_cosine_boxes(rng, dim, field):
    size = int(rng.integers(1, dim + 1))
    fam = forms.random_orthonormal(rng, dim, size, field)
    x, y = _rv(rng, dim, field), _rv(rng, dim, field)
    nprod = core.norm(x) * core.norm(y)
    cx = forms.family_coefficients(fam, x)
    cy = forms.family_coefficients(fam, y)
    q = np.real(cx) * np.real(cy) / nprod
    w = np.imag(cx) * np.imag(cy) / nprod
    lo_q = np.maximum(q - rng.uniform(0.0, 0.3, size=size), -1.0)
    hi_q = np.minimum(q + rng.uniform(0.0, 0.3, size=size), 1.0)
    lo_w = np.maximum(w - rng.uniform(0.0, 0.3, size=size), -1.0)
    hi_w = np.minimum(w + rng.uniform(0.0, 0.3, size=size), 1.0)
    return CheckInstance(
        field_tag=field, dim=dim, vectors={"x": x, "y": y},
        families={"E": fam},
        seq={"lo_q": lo_q, "hi_q": hi_q, "lo_w": lo_w, "hi_w": hi_w})


def _cosine_boxes_hyp(inst):
    ok, why = _nonzero_hyp("x", "y")(inst)
    if not ok:
        return ok, why
    fam = inst.fam("E")
    x, y = inst.vec("x"), inst.vec("y")
    nprod = core.norm(x) * core.norm(y)
    cx = forms.family_coefficients(fam, x)
    cy = forms.family_coefficients(fam, y)
    q = np.real(cx) * np.real(cy) / nprod
    w = np.imag(cx) * np.imag(cy) / nprod
    for lo, val, hi, tag in (
            (inst.lst("lo_q"), q, inst.lst("hi_q"), "real"),
            (inst.lst("lo_w"), w, inst.lst("hi_w"), "imaginary")):
        if np.any(lo < -1.0 - 1e-12) or np.any(hi > 1.0 + 1e-12):
            return False, f"{tag} part box leaves [-1, 1]"
        if np.any(val < lo - 1e-12) or np.any(val > hi + 1e-12):
            return False, f"{tag} part products leave their box"
    return True, ""


def _chain_cosine_boxes(inst):
    x, y = inst.vec("x"), inst.vec("y")
    cos_xy = _re(core.inner(x, y)) / (core.norm(x) * core.norm(y))
    lo = 2.0 * float(np.sum(inst.lst("lo_q")) + np.sum(inst.lst("lo_w"))) \
        - 1.0
    hi = 2.0 * float(np.sum(inst.lst("hi_q")) + np.sum(inst.lst("hi_w"))) \
        + 1.0
    scale = 1.0 + abs(lo) + abs(hi)
    return [("boxed lower bound", lo), ("cosine", cos_xy),
            ("boxed upper bound", hi)], scale


register(Check(
    id="S-FAM-COS", suite="ch2", min_dim=2,
    title="boxed coefficient products trap the cosine of two vectors",
    fields=("real", "complex"), sampler=_sample_cosine_boxes,
    hypothesis=_cosine_boxes_hyp, chain_fn=_chain_cosine_boxes))


def _sample_complexified_family(rng, dim, field):
    size = int(rng.integers(1, dim + 1))
    return CheckInstance(
        field_tag=field, dim=dim,
        families={"E": forms.random_orthonormal(rng, dim, size, "real")},
        meta={"w": core.CVector(rng.standard_normal(dim),
                                rng.standard_normal(dim))})


def _complexified_family_terms(w, fam):
    return np.array([core.complex_inner(w, _lift(row))
                     for row in fam.vectors])


def _chain_complexified_family(inst):
    w = inst.meta["w"]
    terms = _complexified_family_terms(w, inst.fam("E"))
    k = complex(np.sum(terms * terms))
    cross = core.complex_inner(w, core.conj_vector(w))
    nw = core.cplx_norm_sq(w)
    return [("family square sum modulus", abs(k)),
            ("conjugate split",
             abs(k - 0.5 * cross) + 0.5 * abs(cross)),
            ("conjugate-refined bound", 0.5 * (nw + abs(cross))),
            ("energy bound", nw)], max(nw, FLOOR)


register(Check(
    id="S-FAM-KUR", suite="ch2", min_dim=2,
    title="complexified family square sums obey the conjugate-refined "
          "chain",
    fields=("real",), sampler=_sample_complexified_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_complexified_family))


# --------------------------------------- two-vector recombination


def _recombination(x, y, a, b):
    nx, ny = core.norm_sq(x), core.norm_sq(y)
    return (_re(core.inner(x, a)) * _re(core.inner(x, b)) / nx
            + _re(core.inner(y, a)) * _re(core.inner(y, b)) / ny
            - 2.0 * _re(core.inner(x, a)) * _re(core.inner(y, b))
            * _re(core.inner(x, y)) / (nx * ny))


def _chain_recombination(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.vec("a"), inst.vec("b")
    nprod = core.norm(a) * core.norm(b)
    ab = _re(core.inner(a, b))
    return [("lower interpolation", 0.5 * (ab - nprod)),
            ("two-vector recombination", _recombination(x, y, a, b)),
            ("upper interpolation", 0.5 * (nprod + ab))], \
        max(nprod, FLOOR)


register(Check(
    id="S-PRECU", suite="ch2",
    title="two-vector recombination is trapped between the two-sided "
          "interpolations",
    fields=("real",), sampler=_sample_plain("x", "y", "a", "b"),
    hypothesis=_nonzero_hyp("x", "y"), chain_fn=_chain_recombination))


def _cosine(u, v):
    return _re(core.inner(u, v)) / (core.norm(u) * core.norm(v))


def _sample_recombination_proj(rng, dim, field):
    x, y, a = (_rv(rng, dim, field) for _ in range(3))
    b = _orthogonal_to(rng, dim, field, y)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y, "a": a, "b": b})


def _recombination_proj_hyp(inst):
    ok, why = _nonzero_hyp("x", "y", "a", "b")(inst)
    if not ok:
        return ok, why
    y, b = inst.vec("y"), inst.vec("b")
    if abs(core.inner(b, y)) > 1e-8 * (core.norm(b) * core.norm(y) + 1.0):
        return False, "b is not orthogonal to y"
    return True, ""


def _chain_recombination_parts(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.vec("a"), inst.vec("b")
    nx = core.norm_sq(x)
    nprod = core.norm(a) * core.norm(b)
    ab = _re(core.inner(a, b))
    mid = _re(core.inner(a, x)) * _re(core.inner(x, b))
    q = _recombination(x, y, a, a)
    na = core.norm_sq(a)
    csum = 0.5 * (_cosine(x, a) + _cosine(y, a)) ** 2
    parts = [
        ("upper trap for the projected coupling",
         0.5 * (ab + nprod) * nx - mid, nprod * nx),
        ("lower trap for the projected coupling",
         mid - 0.5 * (ab - nprod) * nx, nprod * nx),
        ("self recombination is nonnegative", q, na),
        ("self recombination stays under the energy", na - q, na),
        ("cosine recombination floor",
         _cosine(x, y) - csum + 1.5, 1.0),
    ]
    return slack_chain(parts)


register(Check(
    id="S-PRECU-COR", suite="ch2", min_dim=2,
    title="projected recombination keeps its traps, self-coupling "
          "energy bounds and the cosine floor",
    fields=("real",), sampler=_sample_recombination_proj,
    hypothesis=_recombination_proj_hyp,
    chain_fn=_chain_recombination_parts))


def _sample_near_parallel(rng, dim, field):
    x = _rv(rng, dim, field)
    xh = x / core.norm(x)

    def near():
        th = rng.uniform(0.0, 0.8)
        u = _orthogonal_to(rng, dim, field, x)
        v = math.cos(th) * xh + math.sin(th) * (u / core.norm(u))
        sign = 1.0 if rng.uniform() < 0.5 else -1.0
        return sign * rng.uniform(0.3, 1.5) * v, math.cos(th)

    y, cy = near()
    z, cz = near()
    eps = (max(1.0 - cy, 1.0 - cz) + 1e-9) * (1.0 + rng.uniform(0.02, 1.0))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y, "z": z},
                         reals={"eps": eps})


def _near_parallel_hyp(inst):
    eps = inst.real("eps")
    if eps <= 0.0:
        return False, "eps is not positive"
    x, y, z = inst.vec("x"), inst.vec("y"), inst.vec("z")
    for v, nm in ((y, "y"), (z, "z")):
        lhs = abs(core.inner(x, v))
        if lhs < (1.0 - eps) * core.norm(x) * core.norm(v) - 1e-12:
            return False, f"{nm} is not eps-parallel to x"
    return True, ""


def _chain_near_parallel(inst):
    y, z = inst.vec("y"), inst.vec("z")
    eps = inst.real("eps")
    bound = max(1.0 - eps - math.sqrt(2.0 * eps), 1.0 - 4.0 * eps, 0.0)
    nprod = core.norm(y) * core.norm(z)
    return [("transferred lower bound", bound * nprod),
            ("coupling modulus", abs(core.inner(y, z)))], \
        max(nprod, FLOOR)


register(Check(
    id="S-MOORE", suite="ch2", min_dim=2,
    title="near-parallelism to a common vector transfers to the pair",
    fields=("real",), sampler=_sample_near_parallel,
    hypothesis=_near_parallel_hyp, chain_fn=_chain_near_parallel))


def _sample_cone_pair(rng, dim, field):
    x = _rv(rng, dim, field)
    xh = x / core.norm(x)

    def cone():
        th = rng.uniform(0.05, 1.3)
        u = _orthogonal_to(rng, dim, field, x)
        v = math.cos(th) * xh + math.sin(th) * (u / core.norm(u))
        return rng.uniform(0.3, 1.5) * v, math.cos(th)

    a, ca = cone()
    b, cb = cone()
    eps1 = min(ca, cb) * rng.uniform(0.15, 0.999)
    eps2 = max(ca, cb) * (1.0 + rng.uniform(0.01, 0.5))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "a": a, "b": b},
                         reals={"eps1": eps1, "eps2": eps2})


def _cone_pair_hyp(inst):
    e1, e2 = inst.real("eps1"), inst.real("eps2")
    if not 0.0 < e1 < e2:
        return False, "cone levels are not ordered"
    x = inst.vec("x")
    for nm in ("a", "b"):
        v = inst.vec(nm)
        c = _re(core.inner(x, v))
        span = core.norm(x) * core.norm(v)
        if not e1 * span - 1e-12 <= c <= e2 * span + 1e-12:
            return False, f"{nm} leaves the cone shell"
    return True, ""


def _chain_cone_pair(inst):
    a, b = inst.vec("a"), inst.vec("b")
    e1 = inst.real("eps1")
    nprod = core.norm(a) * core.norm(b)
    return [("norm product reversed", -nprod),
            ("cone lower bound", (2.0 * e1 ** 2 - 1.0) * nprod),
            ("coupling", _re(core.inner(a, b))),
            ("cone upper bound", (2.0 * e1 ** 2 + 1.0) * nprod)], \
        max(nprod, FLOOR)


register(Check(
    id="S-PRECU-MOORE", suite="ch2", min_dim=2,
    title="a common cone shell traps the coupling of two vectors",
    fields=("real",), sampler=_sample_cone_pair,
    hypothesis=_cone_pair_hyp, chain_fn=_chain_cone_pair))


def _sample_near_parallel_pair(rng, dim, field):
    x = _rv(rng, dim, field)
    xh = x / core.norm(x)

    def near():
        th = rng.uniform(0.0, 0.7)
        u = _orthogonal_to(rng, dim, field, x)
        v = math.cos(th) * xh + math.sin(th) * (u / core.norm(u))
        if field == "complex":
            v = complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))) * v
        return rng.uniform(0.3, 1.5) * v, math.cos(th)

    a, ca = near()
    b, cb = near()
    eps = (1.0 - min(ca, cb) + 1e-9) * (1.0 + rng.uniform(0.02, 1.0))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "a": a, "b": b},
                         reals={"eps": eps})


def _near_parallel_pair_hyp(inst):
    eps = inst.real("eps")
    if eps <= 0.0:
        return False, "eps is not positive"
    x = inst.vec("x")
    for nm in ("a", "b"):
        v = inst.vec(nm)
        if abs(core.inner(x, v)) \
                < (1.0 - eps) * core.norm(x) * core.norm(v) - 1e-12:
            return False, f"{nm} is not eps-parallel to x"
    return True, ""


def _chain_near_parallel_pair(inst):
    a, b = inst.vec("a"), inst.vec("b")
    eps = inst.real("eps")
    nprod = core.norm(a) * core.norm(b)
    return [("quadratic transfer bound",
             (1.0 - 4.0 * eps + 2.0 * eps ** 2) * nprod),
            ("coupling modulus", abs(core.inner(a, b)))], \
        max(nprod, FLOOR)


register(Check(
    id="S-MOORE-C", suite="ch2", min_dim=2,
    title="near-parallelism transfers with the quadratic deficiency "
          "in both fields",
    fields=("real", "complex"), sampler=_sample_near_parallel_pair,
    hypothesis=_near_parallel_pair_hyp,
    chain_fn=_chain_near_parallel_pair))


def _sample_cosine_floors(rng, dim, field):
    a = _rv(rng, dim, field)
    ah = a / core.norm(a)

    def near():
        v = ah + rng.uniform(0.0, 0.25) * core.random_unit(rng, dim, field)
        return rng.uniform(0.3, 1.5) * v

    x, y, b = near(), near(), near()
    d1 = _cosine(x, a) * rng.uniform(0.85, 1.0)
    d2 = _cosine(y, a) * rng.uniform(0.85, 1.0)
    prod = _re(core.inner(x, a)) * _re(core.inner(x, b)) / core.norm_sq(x)
    cap = max(prod / (core.norm(a) * core.norm(b)), 0.0)
    mu1 = rng.uniform(0.2, 1.0) * min(cap, 1.0)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y, "a": a, "b": b},
                         reals={"d1": d1, "d2": d2, "mu1": mu1})


def _cosine_floors_hyp(inst):
    d1, d2 = inst.real("d1"), inst.real("d2")
    mu1 = inst.real("mu1")
    if not (0.0 < d1 <= 1.0 and 0.0 < d2 <= 1.0):
        return False, "cosine floors leave (0, 1]"
    if d1 + d2 < 1.0:
        return False, "cosine floors do not sum to one"
    if not 0.0 <= mu1 <= 1.0:
        return False, "mu leaves [0, 1]"
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.vec("a"), inst.vec("b")
    if _cosine(x, a) < d1 - 1e-12 or _cosine(y, a) < d2 - 1e-12:
        return False, "a cosine drops below its floor"
    prod = _re(core.inner(x, a)) * _re(core.inner(x, b)) / core.norm_sq(x)
    if prod < mu1 * core.norm(a) * core.norm(b) - 1e-12:
        return False, "projected coupling drops below mu"
    return True, ""


def _chain_cosine_floors(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.vec("a"), inst.vec("b")
    d1, d2 = inst.real("d1"), inst.real("d2")
    mu1 = inst.real("mu1")
    floor = 0.5 * (d1 + d2) ** 2 - 1.5
    parts = [
        ("floor dominates minus one", floor + 1.0, 1.0),
        ("cosine clears the floor", _cosine(x, y) - floor, 1.0),
        ("mu floor dominates minus one", 2.0 * mu1, 1.0),
        ("cosine clears the mu floor",
         _cosine(a, b) - (2.0 * mu1 - 1.0), 1.0),
    ]
    return slack_chain(parts)


register(Check(
    id="S-COND-DELTA", suite="ch2",
    title="cosine floors against a common vector push up the pair "
          "cosines",
    fields=("real",), sampler=_sample_cosine_floors,
    hypothesis=_cosine_floors_hyp, chain_fn=_chain_cosine_floors,
    notes="the bracketed second-level variant of the mu bound is a "
          "parenthetical remark and is not modeled"))


# ------------------------------------------- two-family couplings


def _sample_two_families(rng, dim, field):
    se = int(rng.integers(1, dim + 1))
    sf = int(rng.integers(1, dim + 1))
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"x": _rv(rng, dim, field), "y": _rv(rng, dim, field)},
        families={"E": forms.random_orthonormal(rng, dim, se, field),
                  "F": forms.random_orthonormal(rng, dim, sf, field)})


def _two_family_coupling(E, F, x, y):
    cxE = forms.family_coefficients(E, x)
    cyE = np.conj(forms.family_coefficients(E, y))
    cxF = forms.family_coefficients(F, x)
    cyF = np.conj(forms.family_coefficients(F, y))
    gram = E.vectors @ np.conj(F.vectors).T
    return complex(cxE @ cyE + cxF @ cyF - 2.0 * (cxE @ gram @ cyF))


def _chain_two_family(inst):
    x, y = inst.vec("x"), inst.vec("y")
    b = _two_family_coupling(inst.fam("E"), inst.fam("F"), x, y)
    nprod = core.norm(x) * core.norm(y)
    return [("recentered two-family coupling",
             abs(b - 0.5 * core.inner(x, y))),
            ("half norm product", 0.5 * nprod)], max(nprod, FLOOR)


register(Check(
    id="S-2FAM", suite="ch2", min_dim=2,
    title="two-family coupling recentered at half the inner product "
          "stays within half the norm product",
    fields=("real", "complex"), sampler=_sample_two_families,
    hypothesis=_nonzero_hyp("x", "y"), chain_fn=_chain_two_family))


def _sample_two_families_pairs(rng, dim, field):
    inst = _sample_two_families(rng, dim, field)
    inst.vectors["e"] = _rv(rng, dim, field, 0.4, 2.0)
    inst.vectors["f"] = _rv(rng, dim, field, 0.4, 2.0)
    return inst


def _pair_coupling(e, f, x, y):
    ne, nf = core.norm_sq(e), core.norm_sq(f)
    return (core.inner(x, e) * core.inner(e, y) / ne
            + core.inner(x, f) * core.inner(f, y) / nf
            - 2.0 * core.inner(x, e) * core.inner(f, y)
            * core.inner(e, f) / (ne * nf))


def _chain_two_family_parts(inst):
    E, F = inst.fam("E"), inst.fam("F")
    x, y = inst.vec("x"), inst.vec("y")
    e, f = inst.vec("e"), inst.vec("f")
    ip = core.inner(x, y)
    nx, ny = core.norm(x), core.norm(y)
    nprod = nx * ny
    bxy = _two_family_coupling(E, F, x, y)
    bxx = _two_family_coupling(E, F, x, x)
    sxy = complex(np.sum(_family_cross_terms(E, x, y)))
    pxy = _pair_coupling(e, f, x, y)
    pxx = _pair_coupling(e, f, x, x)
    parts = [
        ("diagonal two-family trap",
         0.5 * nx * nx - abs(bxx - 0.5 * nx * nx), nx * nx),
        ("single family trap",
         0.5 * nprod - abs(sxy - 0.5 * ip), nprod),
        ("normalized pair trap",
         0.5 * nprod - abs(pxy - 0.5 * ip), nprod),
        ("diagonal pair trap",
         0.5 * nx * nx - abs(pxx - 0.5 * nx * nx), nx * nx),
        ("recentered split dominates the coupling",
         0.5 * abs(ip) + abs(bxy - 0.5 * ip) - abs(bxy), nprod),
        ("interpolated bound absorbs the split",
         0.5 * (nprod + abs(ip)) - 0.5 * abs(ip) - abs(bxy - 0.5 * ip),
         nprod),
        ("diagonal split dominates the coupling",
         0.5 * nx * nx + abs(bxx - 0.5 * nx * nx) - abs(bxx), nx * nx),
        ("diagonal interpolation absorbs the split",
         nx * nx - 0.5 * nx * nx - abs(bxx - 0.5 * nx * nx), nx * nx),
        ("pair coupling within the interpolated bound",
         0.5 * (nprod + abs(ip)) - abs(pxy), nprod),
        ("diagonal pair coupling within the energy",
         nx * nx - abs(pxx), nx * nx),
    ]
    return slack_chain(parts)


register(Check(
    id="S-2FAM-SP", suite="ch2", min_dim=2,
    title="two-family and two-vector couplings keep their traps, "
          "splits and interpolated bounds",
    fields=("real", "complex"), sampler=_sample_two_families_pairs,
    hypothesis=_nonzero_hyp("x", "y", "e", "f"),
    chain_fn=_chain_two_family_parts))


def _chain_two_family_real(inst):
    E, F = inst.fam("E"), inst.fam("F")
    x, y = inst.vec("x"), inst.vec("y")
    ip = _re(core.inner(x, y))
    nprod = core.norm(x) * core.norm(y)
    bxy = _re(_two_family_coupling(E, F, x, y))
    bxx = _re(_two_family_coupling(E, F, x, x))
    nx2 = core.norm_sq(x)
    parts = [
        ("coupling clears the signed lower bound",
         bxy - 0.5 * (ip - nprod), nprod),
        ("coupling stays under the upper bound",
         0.5 * (nprod + abs(ip)) - bxy, nprod),
        ("diagonal coupling is nonnegative", bxx, nx2),
        ("diagonal coupling stays under the energy", nx2 - bxx, nx2),
    ]
    return slack_chain(parts)


register(Check(
    id="S-2FAM-REAL", suite="ch2", min_dim=2,
    title="real two-family coupling obeys signed two-sided bounds and "
          "diagonal energy bounds",
    fields=("real",), sampler=_sample_two_families,
    hypothesis=_nonzero_hyp("x", "y"), chain_fn=_chain_two_family_real,
    notes="the lower bound is the signed form; the absolute-value "
          "variant fails on explicit instances"))


def _sample_complexified_two_families(rng, dim, field):
    se = int(rng.integers(1, dim + 1))
    sf = int(rng.integers(1, dim + 1))
    return CheckInstance(
        field_tag=field, dim=dim,
        families={"E": forms.random_orthonormal(rng, dim, se, "real"),
                  "F": forms.random_orthonormal(rng, dim, sf, "real")},
        meta={"w": core.CVector(rng.standard_normal(dim),
                                rng.standard_normal(dim))})


def _chain_complexified_two_families(inst):
    w = inst.meta["w"]
    E, F = inst.fam("E"), inst.fam("F")
    ce = _complexified_family_terms(w, E)
    cf = _complexified_family_terms(w, F)
    gram = E.vectors @ F.vectors.T
    k = complex(np.sum(ce * ce) + np.sum(cf * cf)
                - 2.0 * (ce @ gram @ cf))
    cross = core.complex_inner(w, core.conj_vector(w))
    nw = core.cplx_norm_sq(w)
    return [("two-family square sum modulus", abs(k)),
            ("conjugate split",
             abs(k - 0.5 * cross) + 0.5 * abs(cross)),
            ("conjugate-refined bound", 0.5 * (nw + abs(cross))),
            ("energy bound", nw)], max(nw, FLOOR)


register(Check(
    id="S-2FAM-KUR", suite="ch2", min_dim=2,
    title="complexified two-family square sums obey the "
          "conjugate-refined chain",
    fields=("real",), sampler=_sample_complexified_two_families,
    hypothesis=trivial_hypothesis,
    chain_fn=_chain_complexified_two_families))


# --------------------------------------- annulus-conditioned gaps


def _sample_annulus(rng, dim, field):
    for _ in range(64):
        x, y = _rv(rng, dim, field), _rv(rng, dim, field)
        d = core.norm(x - y)
        if d > 1e-3:
            break
    else:
        raise core.GeneratorExhausted("annulus sampler")
    t = abs(core.norm(x) - core.norm(y))
    r1 = t + rng.uniform(0.02, 1.0) * (d - t)
    r2 = r1 + rng.uniform(0.0, 1.0) * (d - r1)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y},
                         reals={"r1": r1, "r2": r2})


def _annulus_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r1, r2 = inst.real("r1"), inst.real("r2")
    if not r1 > 0.0:
        return False, "inner radius is not positive"
    if not abs(core.norm(x) - core.norm(y)) <= r1 + 1e-12:
        return False, "inner radius misses the norm gap"
    if not r1 <= r2 + 1e-12:
        return False, "radii are not ordered"
    if not r2 <= core.norm(x - y) + 1e-12:
        return False, "outer radius exceeds the distance"
    return True, ""


def _chain_annulus_gap(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r1, r2 = inst.real("r1"), inst.real("r2")
    scale = core.norm(x) * core.norm(y) + r2 ** 2
    return [("zero", 0.0),
            ("annulus bound", 0.5 * (r2 ** 2 - r1 ** 2)),
            ("real-part gap", _gap_re(x, y))], max(scale, FLOOR)


def _annulus_witness():
    e = np.array([1.0, 0.0])
    return CheckInstance(field_tag="real", dim=2,
                         vectors={"x": 0.75 * e, "y": -0.25 * e},
                         reals={"r1": 0.5, "r2": 1.0})


register(Check(
    id="S-RADIUS", suite="ch2",
    title="a distance annulus around the norm gap bounds the Schwarz "
          "gap from below",
    fields=("real", "complex"), sampler=_sample_annulus,
    hypothesis=_annulus_hyp, chain_fn=_chain_annulus_gap,
    witness=_annulus_witness))


def _chain_annulus_triangle(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r1, r2 = inst.real("r1"), inst.real("r2")
    half = math.sqrt(2.0) / 2.0
    scale = core.norm(x) + core.norm(y) + r2
    return [("zero", 0.0),
            ("annulus bound", half * _sqrt0(r2 ** 2 - r1 ** 2)),
            ("damped triangle gap",
             core.norm(x) + core.norm(y) - half * core.norm(x + y))], \
        max(scale, FLOOR)


register(Check(
    id="S-RAD-TRI", suite="ch2",
    title="the same annulus bounds the damped triangle gap from below",
    fields=("real", "complex"), sampler=_sample_annulus,
    hypothesis=_annulus_hyp, chain_fn=_chain_annulus_triangle))


def _sample_bessel_annulus(rng, dim, field):
    for _ in range(64):
        size = int(rng.integers(1, dim))
        fam = forms.random_orthonormal(rng, dim, size, field)
        x = _rv(rng, dim, field, 0.5, 2.0)
        coeffs = forms.family_coefficients(fam, x)
        s = math.sqrt(float(np.sum(np.abs(coeffs) ** 2)))
        d = core.norm(x - _project_span(fam, x))
        if s > 1e-6 and d > 1e-6:
            break
    else:
        raise core.GeneratorExhausted("coefficient annulus sampler")
    t = core.norm(x) - s
    lo = max(t, 0.01 * d)
    r1 = lo + rng.uniform(0.0, 1.0) * (d - lo)
    r2 = r1 + rng.uniform(0.0, 1.0) * (d - r1)
    return CheckInstance(field_tag=field, dim=dim, vectors={"x": x},
                         families={"E": fam},
                         reals={"r1": r1, "r2": r2})


def _bessel_annulus_hyp(inst):
    fam = inst.fam("E")
    x = inst.vec("x")
    r1, r2 = inst.real("r1"), inst.real("r2")
    s = math.sqrt(float(
        np.sum(np.abs(forms.family_coefficients(fam, x)) ** 2)))
    if s <= 1e-10:
        return False, "coefficient energy vanishes"
    t = core.norm(x) - s
    if t < -1e-12:
        return False, "coefficient energy exceeds the norm"
    if not (t <= r1 + 1e-12 and r1 <= r2 + 1e-12):
        return False, "radii are not ordered over the coefficient gap"
    if r2 > core.norm(x - _project_span(fam, x)) + 1e-12:
        return False, "outer radius exceeds the residual distance"
    return True, ""


def _chain_bessel_annulus(inst):
    fam = inst.fam("E")
    x = inst.vec("x")
    r1, r2 = inst.real("r1"), inst.real("r2")
    s = math.sqrt(float(
        np.sum(np.abs(forms.family_coefficients(fam, x)) ** 2)))
    scale = core.norm(x) + r2 ** 2
    return [("zero", 0.0),
            ("annulus bound", 0.5 * (r2 ** 2 - r1 ** 2) / s),
            ("coefficient gap", core.norm(x) - s)], max(scale, FLOOR)


register(Check(
    id="S-BESSEL-REF", suite="ch2", min_dim=2,
    title="a residual-distance annulus bounds the coefficient energy "
          "gap from below",
    fields=("real", "complex"), sampler=_sample_bessel_annulus,
    hypothesis=_bessel_annulus_hyp, chain_fn=_chain_bessel_annulus))


def _sample_gap_annulus(rng, dim, field):
    for _ in range(64):
        x, y = _rv(rng, dim, field), _rv(rng, dim, field)
        if abs(core.inner(x, y)) >= 0.05 * core.norm(x) * core.norm(y):
            break
    else:
        raise core.GeneratorExhausted("coupled pair sampler")
    big = _sqrt0(_delta(x, y))
    t = _gap_abs(x, y)
    ny = core.norm(y)
    lo = max(t, 0.02 * big)
    r1y = lo + rng.uniform(0.0, 1.0) * (big - lo)
    r2y = r1y + rng.uniform(0.0, 1.0) * (big - r1y)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y},
                         reals={"r1": r1y / ny, "r2": r2y / ny})


def _gap_annulus_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r1, r2 = inst.real("r1"), inst.real("r2")
    if abs(core.inner(x, y)) <= 1e-10:
        return False, "coupling vanishes"
    if not 0.0 < r1 <= r2 + 1e-12:
        return False, "radii are not ordered"
    ny = core.norm(y)
    if r1 * ny < _gap_abs(x, y) - 1e-12:
        return False, "inner radius misses the gap"
    if r2 * ny > _sqrt0(_delta(x, y)) + 1e-12:
        return False, "outer radius exceeds the quadratic gap root"
    return True, ""


def _chain_gap_annulus(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r1, r2 = inst.real("r1"), inst.real("r2")
    ny2 = core.norm_sq(y)
    scale = core.norm(x) * core.norm(y)
    return [("zero", 0.0),
            ("annulus bound",
             0.5 * (r2 ** 2 - r1 ** 2) * ny2 / abs(core.inner(x, y))),
            ("modulus gap", _gap_abs(x, y))], max(scale, FLOOR)


register(Check(
    id="S-RAD-CBS", suite="ch2", min_dim=2,
    title="a quadratic-gap annulus bounds the modulus gap from below",
    fields=("real", "complex"), sampler=_sample_gap_annulus,
    hypothesis=_gap_annulus_hyp, chain_fn=_chain_gap_annulus))


def _sample_sum_ratio(rng, dim, field):
    for _ in range(64):
        x, y = _rv(rng, dim, field), _rv(rng, dim, field)
        s = core.norm(x + y)
        if s > 1e-3:
            break
    else:
        raise core.GeneratorExhausted("sum ratio sampler")
    r_true = (core.norm(x) + core.norm(y)) / s
    if rng.uniform() < 0.5:
        big = 1.0 + rng.uniform(0.0, 1.0) * (r_true - 1.0)
    else:
        big = r_true * (1.0 + rng.uniform(0.05, 1.0))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y}, reals={"R": big})


def _sum_ratio_hyp(inst):
    if inst.real("R") < 1.0 - 1e-12:
        return False, "ratio parameter is below one"
    if core.norm(inst.vec("x") + inst.vec("y")) <= 1e-10:
        return False, "the sum vanishes"
    return True, ""


def _chain_sum_ratio_equiv(inst):
    x, y = inst.vec("x"), inst.vec("y")
    big = inst.real("R")
    s = core.norm(x + y)
    pv = core.norm(x) + core.norm(y) - big * s
    qv = _gap_re(x, y) - 0.5 * (big ** 2 - 1.0) * s * s
    agree = _signs_agree(pv, qv,
                         core.norm(x) + core.norm(y) + big * s,
                         core.norm(x) * core.norm(y)
                         + big ** 2 * s * s)
    return bool_chain("norm-sum and gap forms disagree", agree)


register(Check(
    id="S-EQUIV-R", suite="ch2",
    title="the norm-sum ratio condition and the quadratic gap bound "
          "hold together or fail together",
    fields=("real", "complex"), sampler=_sample_sum_ratio,
    hypothesis=_sum_ratio_hyp, chain_fn=_chain_sum_ratio_equiv,
    notes="the sampler draws satisfying and violating ratio values in "
          "roughly equal proportion"))


def _sample_sum_ratio_floor(rng, dim, field):
    inst = _sample_sum_ratio(rng, dim, field)
    x, y = inst.vec("x"), inst.vec("y")
    s = core.norm(x + y)
    r_true = (core.norm(x) + core.norm(y)) / s
    inst.reals["R"] = 1.0 + rng.uniform(0.0, 1.0) * (r_true - 1.0)
    inst.reals["r"] = rng.uniform(0.0, 1.0) * s
    return inst


def _sum_ratio_floor_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    big, small = inst.real("R"), inst.real("r")
    if big < 1.0 - 1e-12 or small < 0.0:
        return False, "parameters leave their ranges"
    s = core.norm(x + y)
    if big * s > core.norm(x) + core.norm(y) + 1e-12:
        return False, "ratio condition fails"
    if s < small - 1e-12:
        return False, "floor condition fails"
    return True, ""


def _chain_sum_ratio_floor(inst):
    x, y = inst.vec("x"), inst.vec("y")
    big, small = inst.real("R"), inst.real("r")
    scale = core.norm(x) * core.norm(y) + small ** 2
    return [("zero", 0.0),
            ("ratio floor bound", 0.5 * (big ** 2 - 1.0) * small ** 2),
            ("real-part gap", _gap_re(x, y))], max(scale, FLOOR)


def _sum_ratio_floor_witness():
    e = np.array([1.0, 0.0])
    return CheckInstance(field_tag="real", dim=2,
                         vectors={"x": -0.5 * e, "y": 1.5 * e},
                         reals={"R": 2.0, "r": 1.0})


register(Check(
    id="S-TRI-R", suite="ch2",
    title="a norm-sum ratio with a sum floor bounds the Schwarz gap "
          "from below",
    fields=("real", "complex"), sampler=_sample_sum_ratio_floor,
    hypothesis=_sum_ratio_floor_hyp, chain_fn=_chain_sum_ratio_floor,
    witness=_sum_ratio_floor_witness))


def _sample_diff_ratio(rng, dim, field):
    for _ in range(64):
        x, y = _rv(rng, dim, field), _rv(rng, dim, field)
        d = core.norm(x - y)
        if d > 1e-3:
            break
    else:
        raise core.GeneratorExhausted("difference ratio sampler")
    t = abs(core.norm(x) - core.norm(y)) / d
    if t > 0.02 and rng.uniform() < 0.5:
        small = rng.uniform(0.01, 0.98 * t)
    else:
        small = max(t + rng.uniform(0.0, 1.0) * (1.0 - t), 1e-3)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y},
                         reals={"r": min(small, 1.0)})


def _diff_ratio_hyp(inst):
    small = inst.real("r")
    if not 0.0 < small <= 1.0:
        return False, "ratio parameter leaves (0, 1]"
    if core.norm(inst.vec("x") - inst.vec("y")) <= 1e-10:
        return False, "the difference vanishes"
    return True, ""


def _chain_diff_ratio_equiv(inst):
    x, y = inst.vec("x"), inst.vec("y")
    small = inst.real("r")
    d = core.norm(x - y)
    pv = small * d - abs(core.norm(x) - core.norm(y))
    qv = _gap_re(x, y) - 0.5 * (1.0 - small ** 2) * d * d
    agree = _signs_agree(pv, qv, small * d + core.norm(x) + core.norm(y),
                         core.norm(x) * core.norm(y) + d * d)
    return bool_chain("norm-difference and gap forms disagree", agree)


register(Check(
    id="S-EQUIV-r", suite="ch2",
    title="the norm-difference ratio condition and the quadratic gap "
          "bound hold together or fail together",
    fields=("real", "complex"), sampler=_sample_diff_ratio,
    hypothesis=_diff_ratio_hyp, chain_fn=_chain_diff_ratio_equiv,
    notes="the sampler draws satisfying and violating ratio values in "
          "roughly equal proportion"))


def _sample_sequence_annulus(rng, dim, field):
    n = int(rng.integers(3, 7))
    step = rng.uniform(0.8, 1.2)
    xs, ys = [], []
    for _ in range(n):
        for _ in range(64):
            x = _rv(rng, dim, field, 0.4, 1.8)
            y = x + step * core.random_unit(rng, dim, field)
            if core.norm(x + y) > 1e-3:
                break
        else:
            raise core.GeneratorExhausted("sequence annulus sampler")
        xs.append(x)
        ys.append(y)
    X, Y = np.stack(xs), np.stack(ys)
    t = np.array([abs(core.norm(x) - core.norm(y))
                  for x, y in zip(xs, ys)])
    tmax = float(np.max(t))
    r1 = tmax + rng.uniform(0.02, 1.0) * (step - tmax)
    r2 = r1 + rng.uniform(0.0, 1.0) * (step - r1)
    ratios = [(core.norm(x) + core.norm(y)) / core.norm(x + y)
              for x, y in zip(xs, ys)]
    big = 1.0 + rng.uniform(0.0, 1.0) * (min(ratios) - 1.0)
    rr = rng.uniform(0.0, 1.0) * min(core.norm(x + y)
                                     for x, y in zip(xs, ys))
    tq = tmax / step
    rq = min(tq + rng.uniform(0.0, 1.0) * (1.0 - tq) + 1e-9, 1.0)
    return CheckInstance(
        field_tag=field, dim=dim, seq={"X": X, "Y": Y},
        weights=core.random_weights(rng, n, normalized=True),
        reals={"r1": r1, "r2": r2, "R": big, "rr": rr, "rq": rq})


def _sequence_annulus_hyp(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    r1, r2 = inst.real("r1"), inst.real("r2")
    big, rr, rq = inst.real("R"), inst.real("rr"), inst.real("rq")
    if not (r1 > 0.0 and r1 <= r2 + 1e-12):
        return False, "annulus radii are not ordered"
    if big < 1.0 - 1e-12 or rr < 0.0 or not 0.0 < rq <= 1.0 + 1e-12:
        return False, "ratio parameters leave their ranges"
    for x, y in zip(X, Y):
        d = core.norm(x - y)
        t = abs(core.norm(x) - core.norm(y))
        s = core.norm(x + y)
        if not (t <= r1 + 1e-12 and r2 <= d + 1e-12):
            return False, "an index leaves the annulus"
        if big * s > core.norm(x) + core.norm(y) + 1e-12 or s < rr - 1e-12:
            return False, "an index violates the sum ratio or floor"
        if t > rq * d + 1e-12:
            return False, "an index violates the difference ratio"
    return True, ""


def _chain_sequence_annulus(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p = inst.weights
    r1, r2 = inst.real("r1"), inst.real("r2")
    big, rr, rq = inst.real("R"), inst.real("rr"), inst.real("rq")
    ex = float(np.real(core.weighted_inner(p, X, X)))
    ey = float(np.real(core.weighted_inner(p, Y, Y)))
    exy = float(np.real(core.weighted_inner(p, X, Y)))
    es = float(np.real(core.weighted_inner(p, X + Y, X + Y)))
    ed = float(np.real(core.weighted_inner(p, X - Y, X - Y)))
    gap = math.sqrt(ex * ey) - exy
    tgap = math.sqrt(ex) + math.sqrt(ey) \
        - (math.sqrt(2.0) / 2.0) * math.sqrt(es)
    scale = math.sqrt(ex * ey) + 1.0
    parts = [
        ("aggregate annulus bound",
         gap - 0.5 * (r2 ** 2 - r1 ** 2), scale),
        ("aggregate triangle annulus bound",
         tgap - (math.sqrt(2.0) / 2.0) * _sqrt0(r2 ** 2 - r1 ** 2),
         math.sqrt(ex) + math.sqrt(ey)),
        ("aggregate ratio floor bound",
         gap - 0.5 * (big ** 2 - 1.0) * rr ** 2, scale),
        ("aggregate difference ratio bound",
         gap - 0.5 * (1.0 - rq ** 2) * ed, scale),
    ]
    return slack_chain(parts)


register(Check(
    id="S-DISC-R", suite="ch2",
    title="per-index annulus and ratio conditions bound the weighted "
          "aggregate gaps",
    fields=("real", "complex"), sampler=_sample_sequence_annulus,
    hypothesis=_sequence_annulus_hyp, chain_fn=_chain_sequence_annulus))


# ------------------------------- ball-conditioned quadratic reverses


def _ball_defect(x, y, a, b):
    """Re <b y - x, x - a y>; nonnegative iff x lies in the scalar
    interval ball around y."""
    return _re(core.inner(b * y - x, x - a * y))


def ball_condition_pair(x, y, a, b):
    """The two displayed forms of the ball condition, as booleans.

    Returns (functional form, distance form); the two agree exactly in
    real arithmetic and the catalog treats their agreement as a check.
    """
    lhs = _ball_defect(x, y, a, b)
    rhs = 0.25 * abs(b - a) ** 2 * core.norm_sq(y) \
        - core.norm_sq(x - ((a + b) / 2.0) * y)
    band = 1e-10 * max((abs(a) + abs(b)) ** 2 * core.norm_sq(y)
                       + core.norm_sq(x), 1.0)
    return lhs >= -band, rhs >= -band


def _scalar_ratio_pair(rng, field):
    """Scalar endpoints (a, b) with Re(b conj(a)) > 0 and b != a."""
    mag = rng.uniform(0.3, 1.5)
    if field == "complex":
        a = mag * complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
        while True:
            q = complex(rng.uniform(0.05, 2.0), rng.uniform(-1.0, 1.0))
            if abs(q - 1.0) >= 0.05:
                break
        return a, q * a
    a = float(mag if rng.uniform() < 0.5 else -mag)
    while True:
        q = rng.uniform(0.05, 2.0)
        if abs(q - 1.0) >= 0.05:
            break
    return a, float(q * a)


def _ball_instance(rng, dim, field, a, b):
    y = _rv(rng, dim, field, 0.4, 1.8)
    radius = 0.5 * abs(b - a) * core.norm(y)
    xi = core.random_unit(rng, dim, field) \
        * (rng.uniform(0.0, 0.95) * radius)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": ((a + b) / 2.0) * y + xi, "y": y},
                         scalars={"a": a, "b": b})


def _sample_ball(rng, dim, field):
    a, b = _scalar_ratio_pair(rng, field)
    return _ball_instance(rng, dim, field, a, b)


def _ball_hyp(inst):
    ok, _ = ball_condition_pair(inst.vec("x"), inst.vec("y"),
                                inst.scalar("a"), inst.scalar("b"))
    if not ok:
        return False, "ball condition fails"
    return True, ""


def _ball_repos_hyp(inst):
    ok, why = _ball_hyp(inst)
    if not ok:
        return ok, why
    a, b = inst.scalar("a"), inst.scalar("b")
    if _re(b * np.conj(a)) <= 0.0:
        return False, "endpoint product has no positive real part"
    return True, ""


def _chain_ball_quadratic(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.scalar("a"), inst.scalar("b")
    ny = core.norm_sq(y)
    ip = core.inner(x, y)
    dq = _delta(x, y)
    quarter = 0.25 * abs(b - a) ** 2 * ny * ny
    center = abs(0.5 * (a + b) * ny - ip) ** 2
    defect = _ball_defect(x, y, a, b)
    repos = _re(b * np.conj(a))
    sr = math.sqrt(repos)
    s_ab = abs(a + b)
    u = np.conj(a + b) / s_ab
    re_u = _re(u * ip)
    mid = 0.5 * _re(np.conj(a + b) * ip) / sr
    nprod = core.norm(x) * core.norm(y)
    q4 = core.norm_sq(x) * ny + quarter
    parts = [
        ("quadratic gap is nonnegative", dq, q4),
        ("center-deficit route", quarter - center - dq, q4),
        ("ball-functional route", quarter - ny * defect - dq, q4),
        ("ball functional stays nonnegative", ny * defect, q4),
        ("normalized real coupling lower bound", mid - nprod, nprod),
        ("modulus coupling dominates",
         0.5 * s_ab * abs(ip) / sr - mid, nprod),
        ("quadratic coupling route",
         0.25 * abs(b - a) ** 2 / repos * abs(ip) ** 2 - dq, q4),
        ("rotation keeps the modulus", abs(ip) - abs(re_u), nprod),
        ("modulus dominates the rotated real part",
         abs(re_u) - re_u, nprod),
        ("rotated additive bound",
         0.25 * abs(b - a) ** 2 / s_ab * ny - (nprod - re_u), nprod),
    ]
    return slack_chain(parts)


register(Check(
    id="X-REV-QUAD", suite="ch2",
    title="scalar interval balls reverse the quadratic gap along four "
          "routes",
    fields=("real", "complex"), sampler=_sample_ball,
    hypothesis=_ball_repos_hyp, chain_fn=_chain_ball_quadratic))


def _sample_direction_ball(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    x, y = inst.vec("x"), inst.vec("y")
    d = core.norm(x / core.norm(x) - y / core.norm(y))
    if rng.uniform() < 0.5:
        rho = d * (1.0 + rng.uniform(0.02, 1.0)) + 1e-3
    else:
        rho = max(d * rng.uniform(0.05, 0.98), 1e-4)
    inst.reals["rho"] = rho
    return inst


def _direction_ball_hyp(inst):
    if inst.real("rho") <= 0.0:
        return False, "radius is not positive"
    return _nonzero_hyp("x", "y")(inst)


def _chain_direction_equiv(inst):
    x, y = inst.vec("x"), inst.vec("y")
    rho = inst.real("rho")
    nprod = core.norm(x) * core.norm(y)
    d = core.norm(x / core.norm(x) - y / core.norm(y))
    pv = rho - d
    qv = 0.5 * rho ** 2 * nprod - _gap_re(x, y)
    agree = _signs_agree(pv, qv, rho + d, rho ** 2 * nprod + nprod)
    return bool_chain("direction and gap forms disagree", agree)


register(Check(
    id="X-UNITDIR", suite="ch2",
    title="the unit-direction distance condition and the quadratic gap "
          "bound hold together or fail together",
    fields=("real", "complex"), sampler=_sample_direction_ball,
    hypothesis=_direction_ball_hyp, chain_fn=_chain_direction_equiv,
    notes="both implication directions are exact, so the agreement is "
          "tested on satisfying and violating radii alike"))


def _sample_diff_bound(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    x, y = inst.vec("x"), inst.vec("y")
    q = core.norm(x - y) / (core.norm(x) + core.norm(y))
    inst.reals["eta"] = min(q + rng.uniform(0.01, 1.0) * (1.0 - q), 1.0)
    return inst


def _diff_bound_hyp(inst):
    eta = inst.real("eta")
    if not 0.0 < eta <= 1.0:
        return False, "eta leaves (0, 1]"
    x, y = inst.vec("x"), inst.vec("y")
    if core.norm(x - y) > eta * (core.norm(x) + core.norm(y)) + 1e-12:
        return False, "difference exceeds the eta bound"
    return _nonzero_hyp("x", "y")(inst)


def _chain_diff_bound(inst):
    x, y = inst.vec("x"), inst.vec("y")
    eta = inst.real("eta")
    nx, ny = core.norm(x), core.norm(y)
    d = core.norm(x / nx - y / ny)
    q = core.norm(x - y) / (nx + ny)
    parts = [
        ("difference dominates the scaled direction gap",
         core.norm(x - y) - 0.5 * (nx + ny) * d, nx + ny),
        ("normalized gap bound", 2.0 * q ** 2 - _gap_re(x, y) / (nx * ny),
         1.0),
        ("eta gap bound", 2.0 * eta ** 2 * nx * ny - _gap_re(x, y),
         nx * ny),
    ]
    return slack_chain(parts)


register(Check(
    id="X-DW", suite="ch2",
    title="a relative difference bound reverses the Schwarz gap "
          "quadratically",
    fields=("real", "complex"), sampler=_sample_diff_bound,
    hypothesis=_diff_bound_hyp, chain_fn=_chain_diff_bound))


def _sample_cross_scaled(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    x, y = inst.vec("x"), inst.vec("y")
    d = core.norm(x / core.norm(y) - y / core.norm(x))
    inst.reals["rho"] = d * (1.0 + rng.uniform(0.0, 1.0)) + 1e-6
    return inst


def _cross_scaled_hyp(inst):
    ok, why = _nonzero_hyp("x", "y")(inst)
    if not ok:
        return ok, why
    x, y = inst.vec("x"), inst.vec("y")
    d = core.norm(x / core.norm(y) - y / core.norm(x))
    if d > inst.real("rho") + 1e-12:
        return False, "cross-scaled distance exceeds rho"
    return True, ""


def _chain_cross_scaled(inst):
    x, y = inst.vec("x"), inst.vec("y")
    rho = inst.real("rho")
    nprod = core.norm(x) * core.norm(y)
    return [("zero", 0.0),
            ("modulus gap", _gap_abs(x, y)),
            ("real-part gap", _gap_re(x, y)),
            ("cross-scaled bound", 0.5 * rho ** 2 * nprod)], \
        max(nprod * (1.0 + rho ** 2), FLOOR)


register(Check(
    id="X-CROSS", suite="ch2",
    title="a cross-scaled distance bound reverses both Schwarz gaps",
    fields=("real", "complex"), sampler=_sample_cross_scaled,
    hypothesis=_cross_scaled_hyp, chain_fn=_chain_cross_scaled))


def _sample_power_gap(rng, dim, field):
    for _ in range(64):
        x, y = _rv(rng, dim, field), _rv(rng, dim, field)
        if abs(core.norm(x) - core.norm(y)) \
                >= 0.08 * max(core.norm(x), core.norm(y)):
            break
    else:
        raise core.GeneratorExhausted("separated norm sampler")
    return CheckInstance(
        field_tag=field, dim=dim, vectors={"x": x, "y": y},
        reals={"v": float(rng.choice([0.5, 1.0, 2.0, 3.0]))})


def _power_gap_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    if abs(core.norm(x) - core.norm(y)) \
            <= 1e-6 * max(core.norm(x), core.norm(y)):
        return False, "norms are numerically equal"
    return _nonzero_hyp("x", "y")(inst)


def _chain_power_gap(inst):
    x, y = inst.vec("x"), inst.vec("y")
    v = inst.real("v")
    nx, ny = core.norm(x), core.norm(y)
    ratio = (nx ** (v + 1.0) - ny ** (v + 1.0)) / (nx - ny)
    parts = [
        ("power mean ratio dominates the scaled difference",
         ratio * core.norm(x - y) - core.norm(nx ** v * x - ny ** v * y),
         (nx + ny) ** (v + 1.0)),
        ("squared relative difference reverses the gap",
         0.5 * (nx + ny) ** 2 * core.norm_sq(x - y) / (nx * ny)
         - _gap_re(x, y), nx * ny),
    ]
    return slack_chain(parts)


register(Check(
    id="X-HILE", suite="ch2",
    title="power-scaled differences obey the mean ratio bound and the "
          "amplified gap reverse",
    fields=("real", "complex"), sampler=_sample_power_gap,
    hypothesis=_power_gap_hyp, chain_fn=_chain_power_gap))


def _sample_ordered_powers(rng, dim, field):
    x, y = _rv(rng, dim, field), _rv(rng, dim, field)
    if core.norm(x) < core.norm(y):
        x, y = y, x
    return CheckInstance(
        field_tag=field, dim=dim, vectors={"x": x, "y": y},
        reals={"r": float(rng.choice([0.5, 1.0, 2.0, 3.0]))})


def _ordered_powers_hyp(inst):
    ok, why = _nonzero_hyp("x", "y")(inst)
    if not ok:
        return ok, why
    if core.norm(inst.vec("x")) < core.norm(inst.vec("y")) - 1e-12:
        return False, "norms are not ordered"
    return True, ""


def _chain_ordered_powers(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r = inst.real("r")
    nx, ny = core.norm(x), core.norm(y)
    d2 = core.norm_sq(x - y)
    cos_term = 2.0 * nx ** r * ny ** r \
        * _re(core.inner(x, y)) / (nx * ny)
    if r >= 1.0:
        branch_a = r ** 2 * nx ** (2.0 * r - 2.0) * d2
        branch_b = 0.5 * r ** 2 * (nx / ny) ** (r - 1.0) * d2
    else:
        branch_a = ny ** (2.0 * r - 2.0) * d2
        branch_b = 0.5 * (nx / ny) ** (1.0 - r) * d2
    pscale = nx ** (2.0 * r) + ny ** (2.0 * r)
    parts = [
        ("power branch dominates the power gap",
         branch_a - (nx ** (2.0 * r) + ny ** (2.0 * r) - cos_term),
         pscale),
        ("modulus gap is nonnegative", _gap_abs(x, y), nx * ny),
        ("real gap dominates the modulus gap",
         _gap_re(x, y) - _gap_abs(x, y), nx * ny),
        ("ratio branch reverses the real gap",
         branch_b - _gap_re(x, y), nx * ny),
    ]
    return slack_chain(parts)


register(Check(
    id="X-GRC", suite="ch2",
    title="ordered norms admit power-branch reverses of the power and "
          "real gaps",
    fields=("real", "complex"), sampler=_sample_ordered_powers,
    hypothesis=_ordered_powers_hyp, chain_fn=_chain_ordered_powers))


def _sample_projection_ball(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    x, y = inst.vec("x"), inst.vec("y")
    dist = core.norm(x - (core.inner(x, y) / core.norm_sq(y)) * y)
    if rng.uniform() < 0.5:
        rho = dist * (1.0 + rng.uniform(0.02, 1.0)) + 1e-3
    else:
        rho = max(dist * rng.uniform(0.05, 0.98), 1e-4)
    inst.reals["rho"] = rho
    return inst


def _projection_ball_hyp(inst):
    if inst.real("rho") <= 0.0:
        return False, "radius is not positive"
    return _nonzero_hyp("y")(inst)


def _chain_projection_equiv(inst):
    x, y = inst.vec("x"), inst.vec("y")
    rho = inst.real("rho")
    ny = core.norm_sq(y)
    dist = core.norm(x - (core.inner(x, y) / ny) * y)
    pv = rho - dist
    qv = rho ** 2 * ny - _delta(x, y)
    agree = _signs_agree(pv, qv, rho + dist,
                         (rho ** 2 + core.norm_sq(x)) * ny)
    return bool_chain("projection and gap forms disagree", agree)


register(Check(
    id="X-PROJ", suite="ch2",
    title="the projection residual condition and the quadratic gap "
          "bound hold together or fail together",
    fields=("real", "complex"), sampler=_sample_projection_ball,
    hypothesis=_projection_ball_hyp, chain_fn=_chain_projection_equiv,
    notes="both implication directions are exact, so the agreement is "
          "tested on satisfying and violating radii alike"))


def _sample_phase_ball(rng, dim, field):
    for _ in range(64):
        x, y = _rv(rng, dim, field), _rv(rng, dim, field)
        if abs(core.inner(x, y)) >= 0.05 * core.norm(x) * core.norm(y):
            break
    else:
        raise core.GeneratorExhausted("phase ball sampler")
    sigma = _unit_phase(core.inner(x, y))
    if field == "real":
        sigma = float(np.real(sigma))
    rho = core.norm(x - sigma * y) * (1.0 + rng.uniform(0.0, 1.0)) + 1e-6
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y}, reals={"rho": rho})


def _phase_ball_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    ip = core.inner(x, y)
    if abs(ip) <= 1e-10 * (core.norm(x) * core.norm(y) + 1.0):
        return False, "coupling vanishes"
    sigma = _unit_phase(ip)
    if inst.field_tag == "real":
        sigma = float(np.real(sigma))
    if core.norm(x - sigma * y) > inst.real("rho") + 1e-12:
        return False, "phase-aligned distance exceeds rho"
    return True, ""


def _chain_phase_ball(inst):
    x, y = inst.vec("x"), inst.vec("y")
    rho = inst.real("rho")
    scale = core.norm(x) * core.norm(y) + rho ** 2
    return [("zero", 0.0),
            ("modulus gap", _gap_abs(x, y)),
            ("half squared radius", 0.5 * rho ** 2)], max(scale, FLOOR)


register(Check(
    id="X-PHASE", suite="ch2",
    title="phase-aligned closeness reverses the modulus gap with the "
          "half-square constant",
    fields=("real", "complex"), sampler=_sample_phase_ball,
    hypothesis=_phase_ball_hyp, chain_fn=_chain_phase_ball,
    notes="the half constant is best possible; a sharpness probe "
          "approaches it along vanishing radii"))


def _sample_quadrant_ball(rng, dim, field):
    al = complex(rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0))
    y = _rv(rng, dim, "complex", 0.4, 1.8)
    ratio = al.imag / al.real
    xi = core.random_unit(rng, dim, "complex") * rng.uniform(0.0, 1.5)
    x = ratio * y + xi
    r = core.norm(xi) * (1.0 + rng.uniform(0.0, 0.5)) + 1e-6
    return CheckInstance(field_tag="complex", dim=dim,
                         vectors={"x": x, "y": y},
                         scalars={"alpha": al}, reals={"r": r})


def _quadrant_ball_hyp(inst):
    al = inst.scalar("alpha")
    if _re(al) <= 0.0 or _im(al) <= 0.0:
        return False, "alpha leaves the open quadrant"
    x, y = inst.vec("x"), inst.vec("y")
    if core.norm(x - (_im(al) / _re(al)) * y) > inst.real("r") + 1e-12:
        return False, "scaled distance exceeds r"
    return True, ""


def _chain_quadrant_ball(inst):
    x, y = inst.vec("x"), inst.vec("y")
    al = inst.scalar("alpha")
    r = inst.real("r")
    bound = 0.5 * (_re(al) / _im(al)) * r ** 2
    scale = core.norm(x) * core.norm(y) + bound
    return [("zero", 0.0),
            ("modulus gap", _gap_abs(x, y)),
            ("real-part gap", _gap_re(x, y)),
            ("quadrant bound", bound)], max(scale, FLOOR)


register(Check(
    id="X-CPLX", suite="ch2",
    title="a quadrant scalar ratio ball reverses both gaps",
    fields=("complex",), sampler=_sample_quadrant_ball,
    hypothesis=_quadrant_ball_hyp, chain_fn=_chain_quadrant_ball))


def _sample_rotation_split(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    if field == "complex":
        while True:
            al = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
            if abs(al) >= 0.2:
                break
    else:
        al = float(rng.uniform(0.2, 1.5)
                   * (1.0 if rng.uniform() < 0.5 else -1.0))
    inst.scalars["alpha"] = al
    return inst


def _rotation_split_hyp(inst):
    if abs(inst.scalar("alpha")) < 1e-8:
        return False, "alpha is numerically zero"
    return trivial_hypothesis(inst)


def _chain_rotation_split(inst):
    x, y = inst.vec("x"), inst.vec("y")
    al = inst.scalar("alpha")
    aa = abs(al)
    re_a, im_a = abs(_re(al)), abs(_im(al))
    mu = al * al / (aa * aa)
    nprod = core.norm(x) * core.norm(y)
    rotgap = nprod - _re(mu * core.inner(x, y))
    dm, dp = core.norm(x - y), core.norm(x + y)
    t = (re_a * dm + im_a * dp) / aa
    ia = max(re_a, im_a) * (dm + dp) / aa
    ib = math.sqrt(dm * dm + dp * dp)
    ic = (re_a + im_a) * max(dm, dp) / aa
    sscale = (core.norm(x) + core.norm(y)) ** 2
    parts = [
        ("modulus gap is nonnegative", _gap_abs(x, y), nprod),
        ("rotated gap dominates the modulus gap",
         rotgap - _gap_abs(x, y), nprod),
        ("split bound reverses the rotated gap",
         0.5 * t * t - rotgap, sscale),
        ("max-split cap", 0.5 * ia * ia - 0.5 * t * t, sscale),
        ("quadratic-split cap", 0.5 * ib * ib - 0.5 * t * t, sscale),
        ("sum-split cap", 0.5 * ic * ic - 0.5 * t * t, sscale),
    ]
    return slack_chain(parts)


register(Check(
    id="X-ALPHA", suite="ch2",
    title="any nonzero scalar rotation admits the split reverse with "
          "its three caps",
    fields=("real", "complex"), sampler=_sample_rotation_split,
    hypothesis=_rotation_split_hyp, chain_fn=_chain_rotation_split))


def _sample_convex_split(rng, dim, field):
    inst = _sample_xye(rng, dim, field)
    inst.reals["lam"] = rng.uniform(0.05, 0.95)
    return inst


def _convex_split_hyp(inst):
    if not 0.0 < inst.real("lam") < 1.0:
        return False, "lambda leaves (0, 1)"
    return _unit_hyp("e")(inst)


def _chain_convex_split(inst):
    x, y, e = inst.vec("x"), inst.vec("y"), inst.vec("e")
    lam = inst.real("lam")
    rhs = _re(core.inner(x, y) - core.inner(x, e) * core.inner(e, y))

    def lhs(t):
        z = t * x + (1.0 - t) * y
        return (core.norm_sq(z) - abs(core.inner(z, e)) ** 2) \
            / (4.0 * t * (1.0 - t))

    scale = (core.norm(x) + core.norm(y)) ** 2
    parts = [
        ("convex split dominates the residual coupling",
         lhs(lam) - rhs, scale),
        ("midpoint split dominates the residual coupling",
         lhs(0.5) - rhs, scale),
    ]
    return slack_chain(parts)


register(Check(
    id="X-LAMBDA", suite="ch2",
    title="convex combinations bound the residual coupling through "
          "one unit direction",
    fields=("real", "complex"), sampler=_sample_convex_split,
    hypothesis=_convex_split_hyp, chain_fn=_chain_convex_split))


def _box_coupling(c, gam, big):
    return (_re(big) - _re(c)) * (_re(c) - _re(gam)) \
        + (_im(big) - _im(c)) * (_im(c) - _im(gam))


def _sample_box_scalars(rng, dim, field):
    inst = _sample_xye(rng, dim, field)
    inst.scalars["gam"] = core.random_scalar(rng, field, 1.5)
    inst.scalars["big"] = core.random_scalar(rng, field, 1.5)
    return inst


def _chain_box_identity(inst):
    x, e = inst.vec("x"), inst.vec("e")
    gam, big = inst.scalar("gam"), inst.scalar("big")
    c = core.inner(x, e)
    q = core.norm_sq(x) - abs(c) ** 2
    mid = (gam + big) / 2.0
    rhs = _box_coupling(c, gam, big) + core.norm_sq(x - mid * e) \
        - 0.25 * abs(big - gam) ** 2
    scale = core.norm_sq(x) + abs(gam) ** 2 + abs(big) ** 2 + 1.0
    return identity_chain("complement energy", q,
                          "box decomposition", rhs), scale


register(Check(
    id="X-IDENT", suite="ch2",
    title="complement energy equals the box decomposition exactly",
    fields=("real", "complex"), sampler=_sample_box_scalars,
    hypothesis=_unit_hyp("e"), chain_fn=_chain_box_identity))


def _chain_box_upper(inst):
    x, e = inst.vec("x"), inst.vec("e")
    gam, big = inst.scalar("gam"), inst.scalar("big")
    q = core.norm_sq(x) - abs(core.inner(x, e)) ** 2
    scale = core.norm_sq(x) + abs(gam) ** 2 + abs(big) ** 2 + 1.0
    return [("zero", 0.0),
            ("complement energy", q),
            ("midpoint distance",
             core.norm_sq(x - ((gam + big) / 2.0) * e))], scale


register(Check(
    id="X-GAMMA-UP", suite="ch2",
    title="any midpoint distance dominates the complement energy",
    fields=("real", "complex"), sampler=_sample_box_scalars,
    hypothesis=_unit_hyp("e"), chain_fn=_chain_box_upper))


def _sample_box_enclosing(rng, dim, field):
    inst = _sample_xye(rng, dim, field)
    c = core.inner(inst.vec("x"), inst.vec("e"))
    lo = rng.uniform(0.0, 1.5, size=2)
    hi = rng.uniform(0.0, 1.5, size=2)
    if field == "complex":
        inst.scalars["gam"] = complex(c) - complex(lo[0], lo[1])
        inst.scalars["big"] = complex(c) + complex(hi[0], hi[1])
    else:
        inst.scalars["gam"] = float(np.real(c)) - float(lo[0])
        inst.scalars["big"] = float(np.real(c)) + float(hi[0])
    return inst


def _box_enclosing_hyp(inst):
    ok, why = _unit_hyp("e")(inst)
    if not ok:
        return ok, why
    c = core.inner(inst.vec("x"), inst.vec("e"))
    gam, big = inst.scalar("gam"), inst.scalar("big")
    if not (_re(gam) <= _re(c) + 1e-12 and _re(c) <= _re(big) + 1e-12):
        return False, "real part leaves the box"
    if not (_im(gam) <= _im(c) + 1e-12 and _im(c) <= _im(big) + 1e-12):
        return False, "imaginary part leaves the box"
    return True, ""


def _chain_box_lower(inst):
    x, e = inst.vec("x"), inst.vec("e")
    gam, big = inst.scalar("gam"), inst.scalar("big")
    q = core.norm_sq(x) - abs(core.inner(x, e)) ** 2
    lower = core.norm_sq(x - ((gam + big) / 2.0) * e) \
        - 0.25 * abs(big - gam) ** 2
    scale = core.norm_sq(x) + abs(gam) ** 2 + abs(big) ** 2 + 1.0
    return [("boxed lower bound", lower),
            ("complement energy", q)], scale


register(Check(
    id="X-GAMMA-LO", suite="ch2",
    title="a coupling-enclosing box bounds the complement energy from "
          "below",
    fields=("real", "complex"), sampler=_sample_box_enclosing,
    hypothesis=_box_enclosing_hyp, chain_fn=_chain_box_lower))


def _sample_box_ball(rng, dim, field):
    e = core.random_unit(rng, dim, field)
    while True:
        gam = core.random_scalar(rng, field, 1.2)
        big = core.random_scalar(rng, field, 1.2)
        if abs(big - gam) >= 0.1:
            break
    x = ((gam + big) / 2.0) * e + core.random_unit(rng, dim, field) \
        * (rng.uniform(0.0, 0.97) * 0.5 * abs(big - gam))
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "e": e},
                         scalars={"gam": gam, "big": big})


def _box_ball_hyp(inst):
    ok, why = _unit_hyp("e")(inst)
    if not ok:
        return ok, why
    x, e = inst.vec("x"), inst.vec("e")
    gam, big = inst.scalar("gam"), inst.scalar("big")
    defect = 0.25 * abs(big - gam) ** 2 \
        - core.norm_sq(x - ((gam + big) / 2.0) * e)
    if defect < -1e-10 * (abs(gam) ** 2 + abs(big) ** 2 + 1.0):
        return False, "midpoint ball condition fails"
    return True, ""


def _chain_box_ball(inst):
    x, e = inst.vec("x"), inst.vec("e")
    gam, big = inst.scalar("gam"), inst.scalar("big")
    c = core.inner(x, e)
    q = core.norm_sq(x) - abs(c) ** 2
    b = _box_coupling(c, gam, big)
    bscale = 0.25 * abs(big - gam) ** 2 + core.norm_sq(x) + 1.0
    parts = [
        ("complement energy is nonnegative", q, core.norm_sq(x) + 1.0),
        ("box coupling dominates the energy", b - q, bscale),
        ("quarter square cap", 0.25 * abs(big - gam) ** 2 - b, bscale),
        ("endpoint product dominates the energy",
         abs(big - c) * abs(c - gam) - q, bscale),
    ]
    return slack_chain(parts)


register(Check(
    id="X-GAMMA-REV", suite="ch2",
    title="a midpoint ball turns the box coupling into an upper "
          "envelope for the complement energy",
    fields=("real", "complex"), sampler=_sample_box_ball,
    hypothesis=_box_ball_hyp, chain_fn=_chain_box_ball))


def _sample_discriminant_ball(rng, dim, field):
    alpha = rng.uniform(0.3, 2.0)
    gamma = rng.uniform(0.3, 2.0)
    excess = rng.uniform(0.05, 2.0)
    beta_mag = math.sqrt(alpha * gamma * (1.0 + excess))
    if field == "complex":
        beta = beta_mag * complex(
            np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
    else:
        beta = float(beta_mag if rng.uniform() < 0.5 else -beta_mag)
    a = _rv(rng, dim, field, 0.4, 1.8)
    radius = math.sqrt(beta_mag ** 2 - alpha * gamma) / alpha \
        * core.norm(a)
    x = (beta / alpha) * a + core.random_unit(rng, dim, field) \
        * (rng.uniform(0.0, 0.97) * radius)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "a": a},
                         scalars={"beta": beta},
                         reals={"alpha": alpha, "gamma": gamma})


def _discriminant_ball_hyp(inst):
    alpha, gamma = inst.real("alpha"), inst.real("gamma")
    beta = inst.scalar("beta")
    if alpha <= 0.0 or gamma <= 0.0:
        return False, "quadratic coefficients are not positive"
    disc = abs(beta) ** 2 - alpha * gamma
    if disc < 0.0:
        return False, "discriminant is negative"
    x, a = inst.vec("x"), inst.vec("a")
    if core.norm(a) <= 1e-8:
        return False, "vector a is numerically zero"
    if core.norm(x - (beta / alpha) * a) \
            > math.sqrt(disc) / alpha * core.norm(a) + 1e-12:
        return False, "discriminant ball condition fails"
    return True, ""


def _chain_discriminant_ball(inst):
    x, a = inst.vec("x"), inst.vec("a")
    alpha, gamma = inst.real("alpha"), inst.real("gamma")
    beta = inst.scalar("beta")
    sag = math.sqrt(alpha * gamma)
    ip = core.inner(x, a)
    re_beta = _re(np.conj(beta) * ip)
    nprod = core.norm(x) * core.norm(a)
    parts = [
        ("real coupling lower bound", re_beta / sag - nprod, nprod),
        ("modulus coupling dominates",
         abs(beta) * abs(ip) / sag - re_beta / sag, nprod),
        ("discriminant reverses the quadratic gap",
         (abs(beta) ** 2 - alpha * gamma) / (alpha * gamma)
         * abs(ip) ** 2 - _delta(x, a), nprod ** 2),
    ]
    return slack_chain(parts)


register(Check(
    id="X-ABG", suite="ch2",
    title="a positive discriminant ball reverses the coupling and the "
          "quadratic gap",
    fields=("real", "complex"), sampler=_sample_discriminant_ball,
    hypothesis=_discriminant_ball_hyp, chain_fn=_chain_discriminant_ball))


def _sample_phase_cone(rng, dim, field):
    phi = rng.uniform(0.0, 2.0 * math.pi)
    theta = rng.uniform(0.1, math.pi / 2.0 - 0.1)
    a = _rv(rng, dim, "complex", 0.4, 1.8)
    rho = math.cos(theta) * core.norm(a)
    x = complex(np.exp(1j * phi)) * a \
        + core.random_unit(rng, dim, "complex") \
        * (rng.uniform(0.0, 0.98) * rho)
    return CheckInstance(field_tag="complex", dim=dim,
                         vectors={"x": x, "a": a},
                         reals={"phi": phi, "theta": theta})


def _phase_cone_hyp(inst):
    phi, theta = inst.real("phi"), inst.real("theta")
    if not 0.0 <= phi < 2.0 * math.pi:
        return False, "phase leaves its range"
    if not 0.0 < theta < math.pi / 2.0:
        return False, "aperture leaves its range"
    x, a = inst.vec("x"), inst.vec("a")
    if core.norm(a) <= 1e-8:
        return False, "vector a is numerically zero"
    if core.norm(x - complex(np.exp(1j * phi)) * a) \
            > math.cos(theta) * core.norm(a) + 1e-12:
        return False, "phase cone ball condition fails"
    return True, ""


def _chain_phase_cone(inst):
    x, a = inst.vec("x"), inst.vec("a")
    phi, theta = inst.real("phi"), inst.real("theta")
    ip = core.inner(x, a)
    nprod = core.norm(x) * core.norm(a)
    return [("aperture lower bound", nprod * math.sin(theta)),
            ("rotated real coupling",
             math.cos(phi) * _re(ip) + math.sin(phi) * _im(ip))], \
        max(nprod, FLOOR)


register(Check(
    id="X-TRIG", suite="ch2",
    title="a phase cone ball keeps the rotated real coupling above "
          "the aperture bound",
    fields=("complex",), sampler=_sample_phase_cone,
    hypothesis=_phase_cone_hyp, chain_fn=_chain_phase_cone))


def _sample_power_pair(rng, dim, field):
    inst = _sample_plain("x", "y")(rng, dim, field)
    inst.reals["p"] = float(rng.choice([1.0, 1.5, 2.0, 3.0]))
    return inst


def _power_pair_hyp(inst):
    if inst.real("p") < 1.0:
        return False, "exponent is below one"
    return trivial_hypothesis(inst)


def _chain_power_pair(inst):
    x, y = inst.vec("x"), inst.vec("y")
    p = inst.real("p")
    nx, ny = core.norm(x), core.norm(y)
    nprod = nx * ny
    up = (nx + ny) ** (2.0 * p) - core.norm(x + y) ** (2.0 * p)
    dn = core.norm(x - y) ** (2.0 * p) - abs(nx - ny) ** (2.0 * p)
    scale = nprod + (nx + ny) ** 2
    parts = [
        ("modulus gap is nonnegative", _gap_abs(x, y), nprod),
        ("real gap dominates the modulus gap",
         _gap_re(x, y) - _gap_abs(x, y), nprod),
        ("sum power mean reverses the real gap",
         0.5 * max(up, 0.0) ** (1.0 / p) - _gap_re(x, y), scale),
        ("difference power mean reverses the real gap",
         0.5 * max(dn, 0.0) ** (1.0 / p) - _gap_re(x, y), scale),
    ]
    return slack_chain(parts)


register(Check(
    id="X-POW", suite="ch2",
    title="power means of sums and differences reverse the real gap "
          "for every exponent at least one",
    fields=("real", "complex"), sampler=_sample_power_pair,
    hypothesis=_power_pair_hyp, chain_fn=_chain_power_pair))


# ----------------------------- multiplicative and additive reverses


def _sample_radius_ball(rng, dim, field):
    y = _rv(rng, dim, field, 0.5, 2.0)
    r = rng.uniform(0.2, 0.95) * core.norm(y)
    x = y + core.random_unit(rng, dim, field) \
        * (rng.uniform(0.0, 0.98) * r)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y}, reals={"r": r})


def _radius_ball_hyp(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r = inst.real("r")
    if not 0.0 < r < core.norm(y):
        return False, "radius leaves (0, ||y||)"
    if core.norm(x - y) > r + 1e-12:
        return False, "x leaves the ball around y"
    return True, ""


def _chain_radius_ball(inst):
    x, y = inst.vec("x"), inst.vec("y")
    r = inst.real("r")
    ny = core.norm(y)
    root = math.sqrt(core.norm_sq(y) - r * r)
    ip = core.inner(x, y)
    re_ip, a_ip = _re(ip), abs(ip)
    nprod = core.norm(x) * ny
    k = ny / root
    nq = core.norm_sq(x) * core.norm_sq(y)
    parts = [
        ("modulus ratio exceeds one", nprod / a_ip - 1.0, k),
        ("real ratio dominates the modulus ratio",
         nprod / re_ip - nprod / a_ip, k),
        ("ratio bound", k - nprod / re_ip, k),
        ("modulus gap is nonnegative", nprod - a_ip, nprod),
        ("real gap dominates the modulus gap", a_ip - re_ip, nprod),
        ("additive bound",
         r * r / (root * (ny + root)) * re_ip - (nprod - re_ip), nprod),
        ("quadratic gap is nonnegative", _delta(x, y), nq),
        ("real quadratic gap dominates",
         a_ip ** 2 - re_ip ** 2, nq),
        ("quadratic bound",
         r * r * core.norm_sq(x) - (nq - re_ip ** 2), nq),
    ]
    return slack_chain(parts)


register(Check(
    id="REV-MUL", suite="ch2",
    title="a strict ball around one vector reverses the ratio, "
          "additive and quadratic gaps",
    fields=("real", "complex"), sampler=_sample_radius_ball,
    hypothesis=_radius_ball_hyp, chain_fn=_chain_radius_ball))


def _chain_interval_quadratic(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.scalar("a"), inst.scalar("b")
    ny = core.norm_sq(y)
    dq = _delta(x, y)
    quarter = 0.25 * abs(b - a) ** 2 * ny * ny
    center = abs(0.5 * (a + b) * ny - core.inner(x, y)) ** 2
    defect = _ball_defect(x, y, a, b)
    q4 = core.norm_sq(x) * ny + quarter
    parts = [
        ("quadratic gap is nonnegative", dq, q4),
        ("center-deficit route", quarter - center - dq, q4),
        ("ball-functional route", quarter - ny * defect - dq, q4),
        ("ball functional stays nonnegative", ny * defect, q4),
    ]
    return slack_chain(parts)


register(Check(
    id="REV-AA", suite="ch2",
    title="scalar interval balls cap the quadratic gap through the "
          "center deficit and the ball functional",
    fields=("real", "complex"), sampler=_sample_ball,
    hypothesis=_ball_hyp, chain_fn=_chain_interval_quadratic))


def _chain_interval_real(inst):
    x, y = inst.vec("x"), inst.vec("y")
    a, b = inst.scalar("a"), inst.scalar("b")
    ip = core.inner(x, y)
    repos = _re(b * np.conj(a))
    sr = math.sqrt(repos)
    mid = 0.5 * _re(np.conj(a + b) * ip) / sr
    nprod = core.norm(x) * core.norm(y)
    parts = [
        ("normalized real coupling lower bound", mid - nprod, nprod),
        ("modulus coupling dominates",
         0.5 * abs(a + b) * abs(ip) / sr - mid, nprod),
        ("shifted coupling reverses the real gap",
         0.5 * _re((np.conj(a + b) - 2.0 * sr) * ip) / sr
         - _gap_re(x, y), nprod),
        ("quadratic coupling route",
         0.25 * abs(b - a) ** 2 / repos * abs(ip) ** 2 - _delta(x, y),
         nprod ** 2),
    ]
    return slack_chain(parts)


register(Check(
    id="REV-REAA", suite="ch2",
    title="interval endpoints with a positive real product reverse the "
          "coupling, the real gap and the quadratic gap",
    fields=("real", "complex"), sampler=_sample_ball,
    hypothesis=_ball_repos_hyp, chain_fn=_chain_interval_real,
    notes="the shifted-coupling display restates the lower bound; both "
          "forms are kept as printed"))


def _sample_positive_interval(rng, dim, field):
    m = rng.uniform(0.2, 1.5)
    big = m * (1.0 + rng.uniform(0.05, 3.0))
    return _ball_instance(rng, dim, field, m, big)


def _positive_interval_hyp(inst):
    m, big = inst.scalar("a"), inst.scalar("b")
    if not 0.0 < _re(m) <= _re(big):
        return False, "interval endpoints are not ordered positives"
    if abs(_im(m)) > 0.0 or abs(_im(big)) > 0.0:
        return False, "interval endpoints are not real"
    return _ball_hyp(inst)


def _chain_positive_interval(inst):
    x, y = inst.vec("x"), inst.vec("y")
    m, big = _re(inst.scalar("a")), _re(inst.scalar("b"))
    re_ip = _re(core.inner(x, y))
    nprod = core.norm(x) * core.norm(y)
    geo = 2.0 * math.sqrt(m * big)
    parts = [
        ("arithmetic-geometric reverse",
         (big + m) / geo * re_ip - nprod, nprod),
        ("root-gap reverse of the real gap",
         (math.sqrt(big) - math.sqrt(m)) ** 2 / geo * re_ip
         - _gap_re(x, y), nprod),
    ]
    return slack_chain(parts)


register(Check(
    id="REV-MM", suite="ch2",
    title="positive interval endpoints give the arithmetic-geometric "
          "reverse in both displayed forms",
    fields=("real", "complex"), sampler=_sample_positive_interval,
    hypothesis=_positive_interval_hyp, chain_fn=_chain_positive_interval,
    notes="the two displays are algebraically identical; both labels "
          "are kept"))


def _sample_center_ball(rng, dim, field):
    a = _rv(rng, dim, field, 0.4, 2.0)
    r = rng.uniform(0.1, 1.5)
    x = a + core.random_unit(rng, dim, field) \
        * (rng.uniform(0.0, 0.98) * r)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "a": a}, reals={"r": r})


def _center_ball_hyp(inst):
    if inst.real("r") <= 0.0:
        return False, "radius is not positive"
    if core.norm(inst.vec("x") - inst.vec("a")) \
            > inst.real("r") + 1e-12:
        return False, "x leaves the ball around a"
    return True, ""


def _chain_center_ball(inst):
    x, a = inst.vec("x"), inst.vec("a")
    r = inst.real("r")
    ip = core.inner(x, a)
    nprod = core.norm(x) * core.norm(a)
    scale = nprod + r ** 2
    return [("zero", 0.0),
            ("modulus gap", nprod - abs(ip)),
            ("real modulus gap", nprod - abs(_re(ip))),
            ("real-part gap", nprod - _re(ip)),
            ("half squared radius", 0.5 * r ** 2)], max(scale, FLOOR)


register(Check(
    id="REV2-HALF", suite="ch2",
    title="a plain ball caps all three gaps by half the squared radius",
    fields=("real", "complex"), sampler=_sample_center_ball,
    hypothesis=_center_ball_hyp, chain_fn=_chain_center_ball))


def _sample_endpoint_ball(rng, dim, field):
    while True:
        gam = _unit_scalar(rng, field, 0.3, 1.5)
        big = _unit_scalar(rng, field, 0.3, 1.5)
        if abs(gam + big) >= 0.25 and abs(big - gam) >= 0.05:
            break
    return _ball_instance(rng, dim, field, gam, big)


def _endpoint_ball_hyp(inst):
    if abs(inst.scalar("a") + inst.scalar("b")) <= 1e-8:
        return False, "endpoints cancel"
    return _ball_hyp(inst)


def _chain_endpoint_ball(inst):
    x, y = inst.vec("x"), inst.vec("y")
    gam, big = inst.scalar("a"), inst.scalar("b")
    ip = core.inner(x, y)
    u = np.conj(gam + big) / abs(gam + big)
    re_u = _re(u * ip)
    nprod = core.norm(x) * core.norm(y)
    bound = 0.25 * abs(big - gam) ** 2 / abs(big + gam) \
        * core.norm_sq(y)
    return [("zero", 0.0),
            ("modulus gap", nprod - abs(ip)),
            ("rotated real modulus gap", nprod - abs(re_u)),
            ("rotated real gap", nprod - re_u),
            ("quarter endpoint bound", bound)], \
        max(nprod + bound, FLOOR)


register(Check(
    id="REV2-QUAR", suite="ch2",
    title="an endpoint midpoint ball caps the rotated gaps by the "
          "quarter endpoint bound",
    fields=("real", "complex"), sampler=_sample_endpoint_ball,
    hypothesis=_endpoint_ball_hyp, chain_fn=_chain_endpoint_ball,
    notes="the quarter constant is best possible along vanishing "
          "endpoint widths"))


def _chain_positive_interval_additive(inst):
    x, y = inst.vec("x"), inst.vec("y")
    m, big = _re(inst.scalar("a")), _re(inst.scalar("b"))
    ip = core.inner(x, y)
    nprod = core.norm(x) * core.norm(y)
    bound = 0.25 * (big - m) ** 2 / (big + m) * core.norm_sq(y)
    return [("zero", 0.0),
            ("modulus gap", nprod - abs(ip)),
            ("real modulus gap", nprod - abs(_re(ip))),
            ("real-part gap", _gap_re(x, y)),
            ("quarter endpoint bound", bound)], \
        max(nprod + bound, FLOOR)


register(Check(
    id="REV2-MM", suite="ch2",
    title="positive interval endpoints cap all three gaps by the "
          "quarter endpoint bound",
    fields=("real", "complex"), sampler=_sample_positive_interval,
    hypothesis=_positive_interval_hyp,
    chain_fn=_chain_positive_interval_additive))

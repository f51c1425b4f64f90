"""Catalog checks for the form functionals (suite ch1).

Each check instantiates one superadditivity/monotonicity/refinement
statement about the Schwarz-gap functionals sigma, delta, beta, gamma:

* F-SIGMA-*/F-DELTA-*/F-BETA-*/F-GAMMA-*: the functionals over random
  nonnegative form pairs, including the delta determinant bonuses and
  the max-ratio improvements for definite pairs;
* F-TAU-ID: the triangle-gap identity tau = 2*sigma_r;
* F-INF-LEMMA: the variational characterization of gamma;
* F-BESSEL, F-IDX-*: orthonormal-family forms as index-set mappings;
* F-REF-*: the Schwarz refinement chains through family and complement
  forms;
* F-GRAM-*: Gram determinant bounds and the bordered p/q form chains;
* F-OP-*: operator-induced forms (norm bound, lower bound, [0, I]
  splitting, positive definite domination);
* F-SEQ-*: the same functionals realized on weighted vector sequences
  (weight superadditivity, index splits, sin^2/cos^2 and even/odd
  splitting generators, the nondecreasing partial-gap sequence).
"""

from __future__ import annotations

import numpy as np

from . import core, forms
from .catalog import (Check, CheckInstance, identity_chain, register,
                      trivial_hypothesis)

FLOOR = core.ABS_FLOOR


def _pair(rng, dim, field):
    return (core.random_vector(rng, dim, field),
            core.random_vector(rng, dim, field))


def _f(kind, G, x, y):
    return float(forms.functional(kind, G, x, y))


# --------------------------------------------------- functional checks


def _sample_form_pair(definite):
    def sampler(rng, dim, field):
        x, y = _pair(rng, dim, field)
        return CheckInstance(
            field_tag=field, dim=dim, vectors={"x": x, "y": y},
            meta={"G1": forms.random_psd_form(rng, dim, field, definite),
                  "G2": forms.random_psd_form(rng, dim, field, definite)})
    return sampler


def _form_slots(inst):
    return (inst.meta["G1"], inst.meta["G2"], inst.vec("x"), inst.vec("y"))


def _needs_definite(inst):
    g1, g2, x, y = _form_slots(inst)
    for g, v, name in ((g1, x, "x"), (g1, y, "y"), (g2, x, "x"),
                       (g2, y, "y")):
        if forms.seminorm_sq(g, v) <= 1e-10:
            return False, f"{name} is null for one of the forms"
    return True, ""


def _sigma_scale(g, x, y):
    return max(forms.seminorm(g, x) * forms.seminorm(g, y), FLOOR)


def _delta_scale(g, x, y):
    return max(forms.seminorm_sq(g, x) * forms.seminorm_sq(g, y), FLOOR)


def _chain_super(kind):
    def chain(inst):
        g1, g2, x, y = _form_slots(inst)
        tot = g1 + g2
        scale = (_sigma_scale(tot, x, y) if kind in ("sigma", "sigma_r",
                                                     "beta")
                 else _delta_scale(tot, x, y))
        return [("zero", 0.0),
                ("sum of parts", _f(kind, g1, x, y) + _f(kind, g2, x, y)),
                ("combined form", _f(kind, tot, x, y))], scale
    return chain


def _chain_mono(kind):
    def chain(inst):
        g1, g2, x, y = _form_slots(inst)
        tot = g1 + g2
        scale = (_sigma_scale(tot, x, y) if kind in ("sigma", "sigma_r")
                 else _delta_scale(tot, x, y))
        return [("zero", 0.0),
                ("smaller form", _f(kind, g1, x, y)),
                ("larger form", _f(kind, tot, x, y))], scale
    return chain


def _chain_delta_super_bonus(inst):
    g1, g2, x, y = _form_slots(inst)
    tot = g1 + g2
    bonus = (forms.seminorm(g1, x) * forms.seminorm(g2, y)
             - forms.seminorm(g1, y) * forms.seminorm(g2, x)) ** 2
    gain = _f("delta", tot, x, y) - _f("delta", g1, x, y) \
        - _f("delta", g2, x, y)
    return [("zero", 0.0), ("determinant bonus", bonus),
            ("superadditivity gain", gain)], _delta_scale(tot, x, y)


def _chain_delta_mono_bonus(inst):
    g1, g2, x, y = _form_slots(inst)
    tot = g1 + g2
    dx = np.sqrt(max(forms.seminorm_sq(tot, x)
                     - forms.seminorm_sq(g1, x), 0.0))
    dy = np.sqrt(max(forms.seminorm_sq(tot, y)
                     - forms.seminorm_sq(g1, y), 0.0))
    bonus = (forms.seminorm(g1, x) * dy - forms.seminorm(g1, y) * dx) ** 2
    return [("zero", 0.0), ("determinant bonus", bonus),
            ("monotonicity gain",
             _f("delta", tot, x, y) - _f("delta", g1, x, y))], \
        _delta_scale(tot, x, y)


def _chain_gamma(kind):
    def chain(inst):
        g1, g2, x, y = _form_slots(inst)
        tot = g1 + g2
        scale = max(forms.seminorm_sq(tot, x), FLOOR)
        if kind == "super":
            mid = _f("gamma", g1, x, y) + _f("gamma", g2, x, y)
        else:
            mid = _f("gamma", g1, x, y)
        return [("zero", 0.0), ("parts", mid),
                ("combined form", _f("gamma", tot, x, y))], scale
    return chain


def _chain_max_ratio(inst):
    g1, g2, x, y = _form_slots(inst)
    tot = g1 + g2
    ratio = max(forms.seminorm_sq(tot, y) / forms.seminorm_sq(g1, y),
                forms.seminorm_sq(tot, x) / forms.seminorm_sq(g1, x))
    d1 = _f("delta", g1, x, y)
    return [("zero", 0.0), ("smaller form gap", d1),
            ("ratio-scaled gap", ratio * d1),
            ("larger form gap", _f("delta", tot, x, y))], \
        _delta_scale(tot, x, y)


def _chain_strong_bonus(inst):
    g1, g2, x, y = _form_slots(inst)
    tot = g1 + g2
    d1, d2 = _f("delta", g1, x, y), _f("delta", g2, x, y)
    ry = forms.seminorm_sq(g2, y) / forms.seminorm_sq(g1, y)
    rx = forms.seminorm_sq(g2, x) / forms.seminorm_sq(g1, x)
    bonus = max(ry * d1 + d2 / ry, rx * d1 + d2 / rx)
    return [("zero", 0.0), ("cross-ratio bonus", bonus),
            ("superadditivity gain",
             _f("delta", tot, x, y) - d1 - d2)], _delta_scale(tot, x, y)


def _chain_tau_identity(inst):
    g1, _, x, y = _form_slots(inst)
    return identity_chain(
        "triangle gap", _f("tau", g1, x, y),
        "twice the real gap", 2.0 * _f("sigma_r", g1, x, y)), \
        _sigma_scale(g1, x, y) ** 2 + 1.0


def _chain_infimum(inst):
    g1, _, x, y = _form_slots(inst)
    rep = forms.lemma_infimum_check(g1, x, y)
    return list(rep.chain), rep.scale


register(Check(
    id="F-SIGMA-SUPER", suite="ch1",
    title="sigma gap is superadditive over nonnegative forms",
    fields=("real", "complex"), sampler=_sample_form_pair(False),
    hypothesis=trivial_hypothesis, chain_fn=_chain_super("sigma")))

register(Check(
    id="F-SIGMAR-SUPER", suite="ch1",
    title="real-part sigma gap is superadditive over nonnegative forms",
    fields=("real", "complex"), sampler=_sample_form_pair(False),
    hypothesis=trivial_hypothesis, chain_fn=_chain_super("sigma_r")))

register(Check(
    id="F-SIGMA-MONO", suite="ch1",
    title="sigma gap is nondecreasing for the form order",
    fields=("real", "complex"), sampler=_sample_form_pair(False),
    hypothesis=trivial_hypothesis, chain_fn=_chain_mono("sigma")))

register(Check(
    id="F-TAU-ID", suite="ch1",
    title="triangle gap equals twice the real sigma gap",
    fields=("real", "complex"), sampler=_sample_form_pair(False),
    hypothesis=trivial_hypothesis, chain_fn=_chain_tau_identity))

register(Check(
    id="F-DELTA-SUPER", suite="ch1",
    title="delta gap superadditivity with determinant bonus",
    fields=("real", "complex"), sampler=_sample_form_pair(False),
    hypothesis=trivial_hypothesis, chain_fn=_chain_delta_super_bonus))

register(Check(
    id="F-DELTA-MONO", suite="ch1",
    title="delta gap strong monotonicity with determinant bonus",
    fields=("real", "complex"), sampler=_sample_form_pair(False),
    hypothesis=trivial_hypothesis, chain_fn=_chain_delta_mono_bonus))

register(Check(
    id="F-BETA-SUPER", suite="ch1",
    title="beta (square-root delta) gap is superadditive",
    fields=("real", "complex"), sampler=_sample_form_pair(False),
    hypothesis=trivial_hypothesis, chain_fn=_chain_super("beta")))

register(Check(
    id="F-GAMMA-SUPER", suite="ch1",
    title="gamma (normalized delta) is superadditive on definite forms",
    fields=("real", "complex"), sampler=_sample_form_pair(True),
    hypothesis=_needs_definite, chain_fn=_chain_gamma("super")))

register(Check(
    id="F-GAMMA-MONO", suite="ch1",
    title="gamma is nondecreasing for the form order on definite forms",
    fields=("real", "complex"), sampler=_sample_form_pair(True),
    hypothesis=_needs_definite, chain_fn=_chain_gamma("mono")))

register(Check(
    id="F-MAXRATIO", suite="ch1",
    title="delta monotonicity improved by the max seminorm ratio",
    fields=("real", "complex"), sampler=_sample_form_pair(True),
    hypothesis=_needs_definite, chain_fn=_chain_max_ratio))

register(Check(
    id="F-STRONG-BONUS", suite="ch1",
    title="delta superadditivity with the cross-ratio bonus",
    fields=("real", "complex"), sampler=_sample_form_pair(True),
    hypothesis=_needs_definite, chain_fn=_chain_strong_bonus))

register(Check(
    id="F-INF-LEMMA", suite="ch1",
    title="gamma is the infimum of the shifted seminorm squared",
    fields=("real", "complex"), sampler=_sample_form_pair(True),
    hypothesis=_needs_definite, chain_fn=_chain_infimum))


# ------------------------------------------- orthonormal family checks


def _sample_family_split(rng, dim, field):
    total = int(rng.integers(2, dim + 1))
    cut = int(rng.integers(1, total))
    fam = forms.random_orthonormal(rng, dim, total, field)
    x, y = _pair(rng, dim, field)
    return CheckInstance(
        field_tag=field, dim=dim, vectors={"x": x, "y": y},
        families={"first": forms.OrthonormalFamily(fam.vectors[:cut]),
                  "second": forms.OrthonormalFamily(fam.vectors[cut:])})


def _sample_family(rng, dim, field):
    size = int(rng.integers(1, dim + 1))
    return CheckInstance(
        field_tag=field, dim=dim,
        vectors={"x": core.random_vector(rng, dim, field),
                 "y": core.random_vector(rng, dim, field)},
        families={"family": forms.random_orthonormal(rng, dim, size,
                                                     field)})


def _family_forms(inst):
    f1 = inst.fam("first")
    f2 = inst.fam("second")
    return (forms.family_form(f1), forms.family_form(f2),
            forms.family_form(forms.family_union(f1, f2)),
            inst.vec("x"), inst.vec("y"))


def _idx_hypothesis(inst):
    g1, g2, _, _, y = _family_forms(inst)
    if forms.seminorm_sq(g1, y) <= 1e-10 or forms.seminorm_sq(g2, y) <= 1e-10:
        return False, "y has no component along one subfamily"
    return True, ""


def _chain_idx(kind):
    def chain(inst):
        g1, g2, gu, x, y = _family_forms(inst)
        scale = max(core.norm(x) * core.norm(y), FLOOR)
        if kind in ("delta", "gamma"):
            scale = scale ** 2
        return [("zero", 0.0),
                ("sum over subfamilies",
                 _f(kind, g1, x, y) + _f(kind, g2, x, y)),
                ("union family", _f(kind, gu, x, y))], scale
    return chain


def _chain_idx_delta_bonus(inst):
    g1, g2, gu, x, y = _family_forms(inst)
    bonus = (forms.seminorm(g1, x) * forms.seminorm(g2, y)
             - forms.seminorm(g1, y) * forms.seminorm(g2, x)) ** 2
    gain = _f("delta", gu, x, y) - _f("delta", g1, x, y) \
        - _f("delta", g2, x, y)
    return [("zero", 0.0), ("determinant bonus", bonus),
            ("index superadditivity gain", gain)], \
        max(core.norm_sq(x) * core.norm_sq(y), FLOOR)


def _chain_bessel(inst):
    fam = inst.fam("family")
    x = inst.vec("x")
    coeffs = forms.family_coefficients(fam, x)
    return [("zero", 0.0),
            ("coefficient energy", float(np.sum(np.abs(coeffs) ** 2))),
            ("norm squared", core.norm_sq(x))], \
        max(core.norm_sq(x), FLOOR)


def _bessel_witness():
    x = np.array([0.6, 0.8, 0.0])
    return CheckInstance(
        field_tag="real", dim=3, vectors={"x": x, "y": x},
        families={"family": forms.OrthonormalFamily(np.eye(3))})


register(Check(
    id="F-IDX-SIGMA", suite="ch1", min_dim=2,
    title="family sigma gap is superadditive over disjoint index sets",
    fields=("real", "complex"), sampler=_sample_family_split,
    hypothesis=trivial_hypothesis, chain_fn=_chain_idx("sigma")))

register(Check(
    id="F-IDX-DELTA", suite="ch1", min_dim=2,
    title="family delta gap superadditivity with determinant bonus",
    fields=("real", "complex"), sampler=_sample_family_split,
    hypothesis=trivial_hypothesis, chain_fn=_chain_idx_delta_bonus))

register(Check(
    id="F-IDX-BETA", suite="ch1", min_dim=2,
    title="family beta gap is superadditive over disjoint index sets",
    fields=("real", "complex"), sampler=_sample_family_split,
    hypothesis=trivial_hypothesis, chain_fn=_chain_idx("beta")))

register(Check(
    id="F-IDX-GAMMA", suite="ch1", min_dim=2,
    title="family gamma gap is superadditive over disjoint index sets",
    fields=("real", "complex"), sampler=_sample_family_split,
    hypothesis=_idx_hypothesis, chain_fn=_chain_idx("gamma")))

register(Check(
    id="F-BESSEL", suite="ch1", min_dim=2,
    title="coefficient energy against an orthonormal family is bounded "
          "by the norm",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_bessel,
    witness=_bessel_witness))


# --------------------------------------------------- refinement chains


def _family_gap_terms(fam, x, y):
    cx = forms.family_coefficients(fam, x)
    cy = forms.family_coefficients(fam, y)
    fx = float(np.sum(np.abs(cx) ** 2))
    fy = float(np.sum(np.abs(cy) ** 2))
    fxy = complex(np.sum(cx * np.conj(cy)))
    return fx, fy, fxy


def _chain_ref(kind, complement):
    def chain(inst):
        fam = inst.fam("family")
        x, y = inst.vec("x"), inst.vec("y")
        ip = core.inner(x, y)
        fx, fy, fxy = _family_gap_terms(fam, x, y)
        if complement:
            fx, fy = core.norm_sq(x) - fx, core.norm_sq(y) - fy
            fxy = ip - fxy
            fx, fy = max(fx, 0.0), max(fy, 0.0)
        if kind == "sigma":
            part = np.sqrt(fx * fy) - abs(fxy)
            full = core.norm(x) * core.norm(y) - abs(ip)
            scale = max(core.norm(x) * core.norm(y), FLOOR)
        else:
            part = fx * fy - abs(fxy) ** 2
            full = core.norm_sq(x) * core.norm_sq(y) - abs(ip) ** 2
            scale = max(core.norm_sq(x) * core.norm_sq(y), FLOOR)
        return [("zero", 0.0), ("family part", float(part)),
                ("full gap", float(full))], scale
    return chain


def _chain_ref_ratio(inst):
    fam = inst.fam("family")
    x, y = inst.vec("x"), inst.vec("y")
    fx, fy, fxy = _family_gap_terms(fam, x, y)
    dpart = fx * fy - abs(fxy) ** 2
    ratio = max(core.norm_sq(y) / fy, core.norm_sq(x) / fx)
    full = core.norm_sq(x) * core.norm_sq(y) - abs(core.inner(x, y)) ** 2
    return [("zero", 0.0), ("family gap", dpart),
            ("ratio-scaled family gap", ratio * dpart),
            ("full gap", full)], \
        max(core.norm_sq(x) * core.norm_sq(y), FLOOR)


def _ref_ratio_hypothesis(inst):
    fam = inst.fam("family")
    fx, fy, _ = _family_gap_terms(fam, inst.vec("x"), inst.vec("y"))
    if fx <= 1e-10 or fy <= 1e-10:
        return False, "x or y orthogonal to the family span"
    return True, ""


def _chain_split(kind):
    def chain(inst):
        fam = inst.fam("family")
        x, y = inst.vec("x"), inst.vec("y")
        ip = core.inner(x, y)
        fx, fy, fxy = _family_gap_terms(fam, x, y)
        cxn = max(core.norm_sq(x) - fx, 0.0)
        cyn = max(core.norm_sq(y) - fy, 0.0)
        cxy = ip - fxy
        if kind == "sigma":
            part = (np.sqrt(fx * fy) - abs(fxy)
                    + np.sqrt(cxn * cyn) - abs(cxy))
            full = core.norm(x) * core.norm(y) - abs(ip)
            scale = max(core.norm(x) * core.norm(y), FLOOR)
        elif kind == "delta":
            part = (fx * fy - abs(fxy) ** 2 + cxn * cyn - abs(cxy) ** 2)
            full = core.norm_sq(x) * core.norm_sq(y) - abs(ip) ** 2
            scale = max(core.norm_sq(x) * core.norm_sq(y), FLOOR)
        else:  # beta
            part = (np.sqrt(max(fx * fy - abs(fxy) ** 2, 0.0))
                    + np.sqrt(max(cxn * cyn - abs(cxy) ** 2, 0.0)))
            full = np.sqrt(max(
                core.norm_sq(x) * core.norm_sq(y) - abs(ip) ** 2, 0.0))
            scale = max(core.norm(x) * core.norm(y), FLOOR)
        return [("zero", 0.0), ("split parts", float(part)),
                ("full gap", float(full))], scale
    return chain


register(Check(
    id="F-REF-SIGMA", suite="ch1", min_dim=2,
    title="sigma gap dominates the family-form sigma gap",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_ref("sigma", False)))

register(Check(
    id="F-REF-SIGMA-C", suite="ch1", min_dim=2,
    title="sigma gap dominates the complement-form sigma gap",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_ref("sigma", True)))

register(Check(
    id="F-REF-DELTA", suite="ch1", min_dim=2,
    title="delta gap dominates the family-form delta gap",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_ref("delta", False)))

register(Check(
    id="F-REF-DELTA-C", suite="ch1", min_dim=2,
    title="delta gap dominates the complement-form delta gap",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_ref("delta", True)))

register(Check(
    id="F-REF-RATIO", suite="ch1", min_dim=2,
    title="delta gap dominates the ratio-improved family delta gap",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=_ref_ratio_hypothesis, chain_fn=_chain_ref_ratio))

register(Check(
    id="F-REF-SPLIT-SIGMA", suite="ch1", min_dim=2,
    title="sigma gap dominates the family plus complement split",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_split("sigma")))

register(Check(
    id="F-REF-SPLIT-DELTA", suite="ch1", min_dim=2,
    title="delta gap dominates the family plus complement split",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_split("delta")))

register(Check(
    id="F-REF-SPLIT-BETA", suite="ch1", min_dim=2,
    title="beta gap dominates the family plus complement split",
    fields=("real", "complex"), sampler=_sample_family,
    hypothesis=trivial_hypothesis, chain_fn=_chain_split("beta")))


# ----------------------------------------------------- Gram form checks


def _sample_gram(rng, dim, field):
    n = int(rng.integers(1, dim))
    basis = np.stack([core.random_vector(rng, dim, field)
                      for _ in range(n)])
    x, y = _pair(rng, dim, field)
    return CheckInstance(field_tag=field, dim=dim,
                         vectors={"x": x, "y": y}, seq={"basis": basis})


def _sample_gram_family(rng, dim, field):
    n = int(rng.integers(2, dim + 1))
    basis = np.stack([core.random_vector(rng, dim, field)
                      for _ in range(n)])
    return CheckInstance(field_tag=field, dim=dim, seq={"basis": basis})


def _gram_nonzero(inst):
    basis = inst.lst("basis")
    if np.any(np.linalg.norm(basis, axis=1) <= 1e-12):
        return False, "basis contains a null vector"
    return True, ""


def _gram_terms(inst):
    basis = inst.lst("basis")
    x, y = inst.vec("x"), inst.vec("y")
    prod = float(np.prod(np.sum(np.abs(basis) ** 2, axis=1)))
    gx = forms.gram_det([x] + list(basis))
    gy = forms.gram_det([y] + list(basis))
    p = forms.bordered_gram(basis, x, y)
    q = core.inner(x, y) * prod - p
    qx = max(core.norm_sq(x) * prod - gx, 0.0)
    qy = max(core.norm_sq(y) * prod - gy, 0.0)
    return prod, max(gx, 0.0), max(gy, 0.0), p, q, qx, qy


def _chain_hadamard(inst):
    basis = inst.lst("basis")
    prod = float(np.prod(np.sum(np.abs(basis) ** 2, axis=1)))
    return [("zero", 0.0), ("gram determinant", forms.gram_det(basis)),
            ("product of norms", prod)], max(prod, FLOOR)


def _hadamard_witness():
    basis = np.diag([2.0, 0.5, 1.0])
    return CheckInstance(field_tag="real", dim=3, seq={"basis": basis})


def _chain_gram_schwarz(inst):
    prod, gx, gy, p, _, _, _ = _gram_terms(inst)
    x, y = inst.vec("x"), inst.vec("y")
    scale = max((core.norm_sq(x) * core.norm_sq(y)) * prod ** 2, FLOOR)
    return [("zero", 0.0), ("bordered form squared", abs(p) ** 2),
            ("gram product", gx * gy)], scale


def _chain_gram_q(inst):
    prod, _, _, _, q, qx, qy = _gram_terms(inst)
    x, y = inst.vec("x"), inst.vec("y")
    scale = max((core.norm_sq(x) * core.norm_sq(y)) * prod ** 2, FLOOR)
    return [("zero", 0.0), ("q form squared", abs(q) ** 2),
            ("q diagonal product", qx * qy)], scale


def _chain_gram_sigma(inst):
    prod, gx, gy, p, q, qx, qy = _gram_terms(inst)
    x, y = inst.vec("x"), inst.vec("y")
    part = (np.sqrt(gx * gy) - abs(p)) + (np.sqrt(qx * qy) - abs(q))
    full = (core.norm(x) * core.norm(y) - abs(core.inner(x, y))) * prod
    return [("zero", 0.0), ("split parts", float(part)),
            ("scaled sigma gap", float(full))], \
        max(core.norm(x) * core.norm(y) * prod, FLOOR)


def _chain_gram_delta(inst):
    prod, gx, gy, p, q, qx, qy = _gram_terms(inst)
    x, y = inst.vec("x"), inst.vec("y")
    part = (gx * gy - abs(p) ** 2) + (qx * qy - abs(q) ** 2)
    full = (core.norm_sq(x) * core.norm_sq(y)
            - abs(core.inner(x, y)) ** 2) * prod ** 2
    return [("zero", 0.0), ("split parts", float(part)),
            ("scaled delta gap", float(full))], \
        max(core.norm_sq(x) * core.norm_sq(y) * prod ** 2, FLOOR)


def _chain_gram_beta(inst):
    prod, gx, gy, p, q, qx, qy = _gram_terms(inst)
    x, y = inst.vec("x"), inst.vec("y")
    part = (np.sqrt(max(gx * gy - abs(p) ** 2, 0.0))
            + np.sqrt(max(qx * qy - abs(q) ** 2, 0.0)))
    full = np.sqrt(max(core.norm_sq(x) * core.norm_sq(y)
                       - abs(core.inner(x, y)) ** 2, 0.0)) * prod
    return [("zero", 0.0), ("split parts", float(part)),
            ("scaled beta gap", float(full))], \
        max(core.norm(x) * core.norm(y) * prod, FLOOR)


def _chain_gram_pq_identity(inst):
    prod, _, _, p, q, _, _ = _gram_terms(inst)
    x, y = inst.vec("x"), inst.vec("y")
    want = core.inner(x, y) * prod
    resid = abs((p + q) - want)
    return identity_chain("p plus q residual", resid, "zero", 0.0), \
        max(abs(want), core.norm(x) * core.norm(y) * prod, FLOOR)


register(Check(
    id="F-GRAM-HADAMARD", suite="ch1", min_dim=2,
    title="gram determinant sits between zero and the norm product",
    fields=("real", "complex"), sampler=_sample_gram_family,
    hypothesis=_gram_nonzero, chain_fn=_chain_hadamard,
    witness=_hadamard_witness))

register(Check(
    id="F-GRAM-SCHWARZ", suite="ch1", min_dim=2,
    title="bordered gram form obeys its Schwarz inequality",
    fields=("real", "complex"), sampler=_sample_gram,
    hypothesis=_gram_nonzero, chain_fn=_chain_gram_schwarz))

register(Check(
    id="F-GRAM-Q", suite="ch1", min_dim=2,
    title="complementary q form obeys its Schwarz inequality",
    fields=("real", "complex"), sampler=_sample_gram,
    hypothesis=_gram_nonzero, chain_fn=_chain_gram_q))

register(Check(
    id="F-GRAM-CHAIN-SIGMA", suite="ch1", min_dim=2,
    title="scaled sigma gap dominates the p/q split at root level",
    fields=("real", "complex"), sampler=_sample_gram,
    hypothesis=_gram_nonzero, chain_fn=_chain_gram_sigma))

register(Check(
    id="F-GRAM-CHAIN-DELTA", suite="ch1", min_dim=2,
    title="scaled delta gap dominates the p/q split at squared level",
    fields=("real", "complex"), sampler=_sample_gram,
    hypothesis=_gram_nonzero, chain_fn=_chain_gram_delta))

register(Check(
    id="F-GRAM-CHAIN-BETA", suite="ch1", min_dim=2,
    title="scaled beta gap dominates the p/q split at square-root level",
    fields=("real", "complex"), sampler=_sample_gram,
    hypothesis=_gram_nonzero, chain_fn=_chain_gram_beta))

register(Check(
    id="F-GRAM-PQ-ID", suite="ch1", min_dim=2,
    title="p and q forms sum to the scaled inner product",
    fields=("real", "complex"), sampler=_sample_gram,
    hypothesis=_gram_nonzero, chain_fn=_chain_gram_pq_identity))


# ------------------------------------------------------ operator checks


def _sample_operator(kind):
    def sampler(rng, dim, field):
        a = rng.standard_normal((dim, dim))
        if field == "complex":
            a = a + 1j * rng.standard_normal((dim, dim))
        if kind == "norm":
            mat = a
        elif kind == "lower":
            mat = a + (2.0 + float(np.linalg.norm(a, 2))) * np.eye(dim)
        elif kind == "interval":
            g = a.conj().T @ a
            mat = g / (float(np.linalg.eigvalsh(g)[-1]) + 1e-2)
        else:  # posdef
            mat = a.conj().T @ a + 1e-2 * np.eye(dim)
        x, y = _pair(rng, dim, field)
        return CheckInstance(field_tag=field, dim=dim,
                             vectors={"x": x, "y": y}, meta={"op": mat})
    return sampler


def _op_check(idx, builder):
    def chain(inst):
        rep = builder(inst.meta["op"], inst.vec("x"), inst.vec("y"))[idx]
        return list(rep.chain), rep.scale
    return chain


def _op_hyp(kind):
    def hyp(inst):
        a = inst.meta["op"]
        if (np.linalg.norm(inst.vec("x")) <= FLOOR
                or np.linalg.norm(inst.vec("y")) <= FLOOR):
            return False, "x or y is the zero vector"
        if kind == "lower":
            m = forms.operator_lower_bound(a)
            return (m > 0, "smallest singular value vanishes" if m <= 0
                    else "")
        if kind == "interval":
            h = 0.5 * (a + a.conj().T)
            eigs = np.linalg.eigvalsh(h)
            ok = (float(np.abs(a - a.conj().T).max()) <= 1e-10
                  and eigs[0] >= -1e-10 and eigs[-1] <= 1 + 1e-10)
            return ok, "" if ok else "operator not in [0, I]"
        if kind == "posdef":
            h = 0.5 * (a + a.conj().T)
            ok = (float(np.abs(a - a.conj().T).max()) <= 1e-10
                  and float(np.linalg.eigvalsh(h)[0]) > 0)
            return ok, "" if ok else "operator not positive definite"
        return True, ""
    return hyp


def _op_nonzero_images(inst):
    a = inst.meta["op"]
    if (np.linalg.norm(a @ inst.vec("x")) <= 1e-12
            or np.linalg.norm(a @ inst.vec("y")) <= 1e-12):
        return False, "operator annihilates x or y"
    return True, ""


_OP_TABLE = [
    ("F-OP-NORM-SIGMA", "norm", forms.operator_norm_chain, 0,
     "operator norm dominates the transformed sigma gap", None),
    ("F-OP-NORM-DELTA", "norm", forms.operator_norm_chain, 1,
     "operator norm dominates the transformed delta gap", None),
    ("F-OP-NORM-RATIO", "norm", forms.operator_norm_chain, 2,
     "ratio-improved operator norm delta domination", _op_nonzero_images),
    ("F-OP-LOWER-SIGMA", "lower", forms.operator_lower_chain, 0,
     "lower-bounded operator dominates the plain sigma gap", None),
    ("F-OP-LOWER-DELTA", "lower", forms.operator_lower_chain, 1,
     "lower-bounded operator dominates the plain delta gap", None),
    ("F-OP-LOWER-RATIO", "lower", forms.operator_lower_chain, 2,
     "ratio-improved lower-bound delta domination", None),
    ("F-OP-SPLIT-SIGMA", "interval", forms.operator_interval_chain, 0,
     "interval operator splits the sigma gap", None),
    ("F-OP-SPLIT-DELTA", "interval", forms.operator_interval_chain, 1,
     "interval operator splits the delta gap", None),
    ("F-OP-SPLIT-BETA", "interval", forms.operator_interval_chain, 2,
     "interval operator splits the beta gap", None),
    ("F-OP-POSDEF-SIGMA", "posdef", forms.operator_posdef_chain, 0,
     "positive definite operator dominates the sigma gap", None),
    ("F-OP-POSDEF-DELTA", "posdef", forms.operator_posdef_chain, 1,
     "positive definite operator dominates the delta gap", None),
    ("F-OP-POSDEF-RATIO", "posdef", forms.operator_posdef_chain, 2,
     "ratio-improved positive definite delta domination", None),
]

for _id, _kind, _builder, _idx, _title, _extra_hyp in _OP_TABLE:
    _base_hyp = _op_hyp(_kind)
    if _extra_hyp is not None:
        def _combined(inst, a=_base_hyp, b=_extra_hyp):
            ok, why = a(inst)
            if not ok:
                return ok, why
            return b(inst)
        _hyp = _combined
    else:
        _hyp = _base_hyp
    register(Check(
        id=_id, suite="ch1", title=_title, fields=("real", "complex"),
        sampler=_sample_operator(_kind), hypothesis=_hyp,
        chain_fn=_op_check(_idx, _builder)))


# ---------------------------------------------- weighted sequence checks


def seq_stats(p: np.ndarray, X: np.ndarray, Y: np.ndarray):
    """(sum p|x_i|^2, sum p|y_i|^2, sum p<x_i,y_i>) for vector rows."""
    a = float(np.einsum("i,ik->", p, np.abs(X) ** 2))
    b = float(np.einsum("i,ik->", p, np.abs(Y) ** 2))
    c = complex(np.einsum("i,ik,ik->", p, X, np.conj(Y)))
    return a, b, c


def seq_functional(kind: str, p, X, Y) -> float:
    a, b, c = seq_stats(np.asarray(p, float), X, Y)
    if kind == "sigma":
        return float(np.sqrt(a * b) - abs(c))
    if kind == "delta":
        return float(a * b - abs(c) ** 2)
    if kind == "beta":
        return float(np.sqrt(max(a * b - abs(c) ** 2, 0.0)))
    if kind == "gamma":
        return float((a * b - abs(c) ** 2) / b)
    raise ValueError(kind)


def _sample_seq(rng, dim, field, n_min=2):
    n = int(rng.integers(n_min, n_min + 5))
    X = np.stack([core.random_vector(rng, dim, field) for _ in range(n)])
    Y = np.stack([core.random_vector(rng, dim, field) for _ in range(n)])
    return n, X, Y


def _seq_scale(p, q, X, Y):
    a1, b1, _ = seq_stats(p, X, Y)
    a2, b2, _ = seq_stats(q, X, Y)
    return max((a1 + a2) * (b1 + b2), FLOOR)


def _sample_seq_weight_pair(rng, dim, field):
    n, X, Y = _sample_seq(rng, dim, field)
    return CheckInstance(
        field_tag=field, dim=dim, seq={"X": X, "Y": Y},
        meta={"p": rng.uniform(0.1, 1.0, n), "q": rng.uniform(0.1, 1.0, n)})


def _sample_seq_weight_mono(rng, dim, field):
    n, X, Y = _sample_seq(rng, dim, field)
    q = rng.uniform(0.1, 1.0, n)
    return CheckInstance(
        field_tag=field, dim=dim, seq={"X": X, "Y": Y},
        meta={"p": q + rng.uniform(0.05, 1.0, n), "q": q})


def _sample_seq_split(rng, dim, field):
    n, X, Y = _sample_seq(rng, dim, field)
    return CheckInstance(
        field_tag=field, dim=dim, seq={"X": X, "Y": Y},
        meta={"p": rng.uniform(0.1, 1.0, n),
              "alpha": rng.uniform(0.0, np.pi, n)})


def _seq_weights_ok(inst):
    p = np.asarray(inst.meta["p"], float)
    if np.any(p < 0):
        return False, "negative weight"
    if "q" in inst.meta and np.any(np.asarray(inst.meta["q"], float) < 0):
        return False, "negative weight"
    return True, ""


def _seq_mono_ok(inst):
    ok, why = _seq_weights_ok(inst)
    if not ok:
        return ok, why
    p = np.asarray(inst.meta["p"], float)
    q = np.asarray(inst.meta["q"], float)
    if np.any(p < q):
        return False, "weights not ordered p >= q"
    a, b, _ = seq_stats(p, inst.lst("X"), inst.lst("Y"))
    if a <= 1e-12 or b <= 1e-12:
        return False, "degenerate weighted energy"
    return True, ""


def _seq_pair_positive(inst):
    ok, why = _seq_weights_ok(inst)
    if not ok:
        return ok, why
    X, Y = inst.lst("X"), inst.lst("Y")
    for w in (inst.meta["p"], inst.meta["q"]):
        a, b, _ = seq_stats(np.asarray(w, float), X, Y)
        if a <= 1e-12 or b <= 1e-12:
            return False, "degenerate weighted energy"
    return True, ""


def _seq_cut_positive(inst):
    ok, why = _seq_weights_ok(inst)
    if not ok:
        return ok, why
    X, Y = inst.lst("X"), inst.lst("Y")
    p = np.asarray(inst.meta["p"], float)
    cut = inst.meta["cut"]
    for sl in (slice(None, cut), slice(cut, None)):
        a, b, _ = seq_stats(p[sl], X[sl], Y[sl])
        if a <= 1e-12 or b <= 1e-12:
            return False, "degenerate weighted energy on a block"
    return True, ""


def _chain_seq_weight_super(kind):
    def chain(inst):
        X, Y = inst.lst("X"), inst.lst("Y")
        p, q = inst.meta["p"], inst.meta["q"]
        return [("zero", 0.0),
                ("sum of parts", seq_functional(kind, p, X, Y)
                 + seq_functional(kind, q, X, Y)),
                ("combined weights",
                 seq_functional(kind, p + q, X, Y))], \
            _seq_scale(p, q, X, Y)
    return chain


def _chain_seq_delta_super_bonus(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p, q = inst.meta["p"], inst.meta["q"]
    ap, bp, _ = seq_stats(p, X, Y)
    aq, bq, _ = seq_stats(q, X, Y)
    dp = seq_functional("delta", p, X, Y)
    dq = seq_functional("delta", q, X, Y)
    bonus = max((ap / aq) * dq + (aq / ap) * dp,
                (bp / bq) * dq + (bq / bp) * dp)
    gain = seq_functional("delta", p + q, X, Y) - dp - dq
    return [("zero", 0.0), ("cross-ratio bonus", bonus),
            ("superadditivity gain", gain)], _seq_scale(p, q, X, Y)


def _chain_seq_delta_mono(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p, q = inst.meta["p"], inst.meta["q"]
    ap, bp, _ = seq_stats(p, X, Y)
    ad, bd, _ = seq_stats(p - q, X, Y)
    dp = seq_functional("delta", p, X, Y)
    ratio = max(ad / ap, bd / bp)
    return [("zero", 0.0), ("ratio-scaled gap", ratio * dp),
            ("monotonicity gain",
             dp - seq_functional("delta", q, X, Y))], \
        max(ap * bp, FLOOR)


def _chain_seq_idx(kind, bonus):
    def chain(inst):
        X, Y = inst.lst("X"), inst.lst("Y")
        p = inst.meta["p"]
        cut = inst.meta["cut"]
        Xi, Yi, pi = X[:cut], Y[:cut], p[:cut]
        Xj, Yj, pj = X[cut:], Y[cut:], p[cut:]
        fi = seq_functional(kind, pi, Xi, Yi)
        fj = seq_functional(kind, pj, Xj, Yj)
        fu = seq_functional(kind, p, X, Y)
        a, b, _ = seq_stats(p, X, Y)
        scale = max(a * b, FLOOR) if kind != "sigma" else max(
            np.sqrt(a * b), FLOOR)
        if not bonus:
            return [("zero", 0.0), ("sum over halves", fi + fj),
                    ("whole index set", fu)], scale
        ai, bi, _ = seq_stats(pi, Xi, Yi)
        aj, bj, _ = seq_stats(pj, Xj, Yj)
        extra = max((ai / aj) * fj + (aj / ai) * fi,
                    (bi / bj) * fj + (bj / bi) * fi)
        return [("zero", 0.0), ("cross-ratio bonus", extra),
                ("index superadditivity gain", fu - fi - fj)], scale
    return chain


def _chain_seq_idx_mono(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p = inst.meta["p"]
    cut = inst.meta["cut"]
    dI = seq_functional("delta", p, X, Y)
    dJ = seq_functional("delta", p[:cut], X[:cut], Y[:cut])
    aI, bI, _ = seq_stats(p, X, Y)
    aK, bK, _ = seq_stats(p[cut:], X[cut:], Y[cut:])
    ratio = max(aK / aI, bK / bI)
    return [("zero", 0.0), ("ratio-scaled subset gap", ratio * dJ),
            ("inclusion gain", dI - dJ)], max(aI * bI, FLOOR)


def _sample_seq_cut(rng, dim, field):
    n, X, Y = _sample_seq(rng, dim, field, n_min=3)
    cut = int(rng.integers(1, n))
    return CheckInstance(field_tag=field, dim=dim, seq={"X": X, "Y": Y},
                         meta={"p": rng.uniform(0.1, 1.0, n), "cut": cut})


def _chain_seq_sincos(kind):
    def chain(inst):
        X, Y = inst.lst("X"), inst.lst("Y")
        p = inst.meta["p"]
        alpha = inst.meta["alpha"]
        ws = p * np.sin(alpha) ** 2
        wc = p * np.cos(alpha) ** 2
        fs = seq_functional(kind, ws, X, Y)
        fc = seq_functional(kind, wc, X, Y)
        fu = seq_functional(kind, p, X, Y)
        a, b, _ = seq_stats(p, X, Y)
        scale = max(a * b, FLOOR) if kind != "sigma" else max(
            np.sqrt(a * b), FLOOR)
        return [("zero", 0.0), ("trigonometric split", fs + fc),
                ("full weights", fu)], scale
    return chain


def _chain_seq_sincos_delta_bonus(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p = inst.meta["p"]
    alpha = inst.meta["alpha"]
    ws = p * np.sin(alpha) ** 2
    wc = p * np.cos(alpha) ** 2
    as_, bs, _ = seq_stats(ws, X, Y)
    ac, bc, _ = seq_stats(wc, X, Y)
    det = np.sqrt(as_) * np.sqrt(bc) - np.sqrt(bs) * np.sqrt(ac)
    gain = (seq_functional("delta", p, X, Y)
            - seq_functional("delta", ws, X, Y)
            - seq_functional("delta", wc, X, Y))
    a, b, _ = seq_stats(p, X, Y)
    return [("zero", 0.0), ("determinant bonus", float(det ** 2)),
            ("split gain", gain)], max(a * b, FLOOR)


def _chain_seq_evenodd_beta(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p = inst.meta["p"]
    even = slice(0, None, 2)
    odd = slice(1, None, 2)
    fe = seq_functional("beta", p[even], X[even], Y[even])
    fo = seq_functional("beta", p[odd], X[odd], Y[odd])
    fu = seq_functional("beta", p, X, Y)
    a, b, _ = seq_stats(p, X, Y)
    return [("zero", 0.0), ("even plus odd parts", fe + fo),
            ("full sequence", fu)], max(np.sqrt(a * b), FLOOR)


def _chain_seq_partial_monotone(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p = inst.meta["p"]
    chain = [("zero", 0.0)]
    for k in range(2, len(p) + 1):
        chain.append((f"partial gap at {k} terms",
                      seq_functional("sigma", p[:k], X[:k], Y[:k])))
    a, b, _ = seq_stats(p, X, Y)
    return chain, max(np.sqrt(a * b), FLOOR)


def _chain_seq_maxpair(inst):
    X, Y = inst.lst("X"), inst.lst("Y")
    p = inst.meta["p"]
    n = len(p)
    best = -np.inf
    for i in range(n):
        for j in range(i + 1, n):
            sel = [i, j]
            best = max(best, seq_functional("sigma", p[sel], X[sel], Y[sel]))
    a, b, _ = seq_stats(p, X, Y)
    return [("zero", 0.0), ("best pair gap", best),
            ("full sequence gap", seq_functional("sigma", p, X, Y))], \
        max(np.sqrt(a * b), FLOOR)


register(Check(
    id="F-SEQ-SIGMA-SUPER", suite="ch1",
    title="weighted sequence sigma gap is superadditive in the weights",
    fields=("real", "complex"), sampler=_sample_seq_weight_pair,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_weight_super("sigma")))

register(Check(
    id="F-SEQ-BETA-SUPER", suite="ch1",
    title="weighted sequence beta gap is superadditive in the weights",
    fields=("real", "complex"), sampler=_sample_seq_weight_pair,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_weight_super("beta")))

register(Check(
    id="F-SEQ-DELTA-SUPER", suite="ch1",
    title="weighted sequence delta superadditivity with cross-ratio bonus",
    fields=("real", "complex"), sampler=_sample_seq_weight_pair,
    hypothesis=_seq_pair_positive, chain_fn=_chain_seq_delta_super_bonus))

register(Check(
    id="F-SEQ-DELTA-MONO", suite="ch1",
    title="weighted sequence delta monotonicity with ratio bonus",
    fields=("real", "complex"), sampler=_sample_seq_weight_mono,
    hypothesis=_seq_mono_ok, chain_fn=_chain_seq_delta_mono))

register(Check(
    id="F-SEQ-IDX-SUPER", suite="ch1",
    title="weighted sequence delta index superadditivity with bonus",
    fields=("real", "complex"), sampler=_sample_seq_cut,
    hypothesis=_seq_cut_positive, chain_fn=_chain_seq_idx("delta", True)))

register(Check(
    id="F-SEQ-IDX-MONO", suite="ch1",
    title="weighted sequence delta index monotonicity with ratio bonus",
    fields=("real", "complex"), sampler=_sample_seq_cut,
    hypothesis=_seq_cut_positive, chain_fn=_chain_seq_idx_mono))

register(Check(
    id="F-SEQ-SIGMA-SPLIT", suite="ch1",
    title="trigonometric weight split refines the sequence sigma gap",
    fields=("real", "complex"), sampler=_sample_seq_split,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_sincos("sigma")))

register(Check(
    id="F-SEQ-BETA-SPLIT", suite="ch1",
    title="trigonometric weight split refines the sequence beta gap",
    fields=("real", "complex"), sampler=_sample_seq_split,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_sincos("beta")))

register(Check(
    id="F-SEQ-DELTA-SPLIT", suite="ch1",
    title="trigonometric split of the delta gap with determinant bonus",
    fields=("real", "complex"), sampler=_sample_seq_split,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_sincos_delta_bonus))

register(Check(
    id="F-SEQ-EVENODD-BETA", suite="ch1",
    title="even/odd index split refines the sequence beta gap",
    fields=("real", "complex"), sampler=_sample_seq_cut,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_evenodd_beta))

register(Check(
    id="F-SEQ-PARTIAL-MONO", suite="ch1",
    title="partial-sum sigma gaps form a nondecreasing sequence",
    fields=("real", "complex"), sampler=_sample_seq_cut,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_partial_monotone))

register(Check(
    id="F-SEQ-MAXPAIR", suite="ch1",
    title="full sequence sigma gap dominates the best two-term gap",
    fields=("real", "complex"), sampler=_sample_seq_cut,
    hypothesis=_seq_weights_ok, chain_fn=_chain_seq_maxpair))

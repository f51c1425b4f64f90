"""Tests for the ch2 check catalog: registry integrity, bulk random
evaluation, extremal witnesses, equivalence-pair agreement, and
hand-computed oracle instances."""

import math

import numpy as np
import pytest

import ineq.checks_schwarz as cs
from ineq import catalog, core, forms, harness
from ineq.catalog import CheckInstance

REAL_ONLY = {
    "S-ACZEL", "S-RICHARD", "S-FAM-REAL", "S-PRECU", "S-PRECU-COR",
    "S-MOORE", "S-PRECU-MOORE", "S-COND-DELTA", "S-2FAM-REAL", "S-REAL2",
    "S-SUPLEMMA", "S-KUREPA", "S-KUR-REF", "S-FAM-KUR", "S-2FAM-KUR",
}
COMPLEX_ONLY = {
    "S-DEBRUIJN", "S-IMZERO", "X-CPLX", "X-TRIG", "S-KUR-PSD",
    "S-KUR-SEQ",
}
EQUIVALENCE_PAIRS = ("S-EQUIV-R", "S-EQUIV-r", "X-UNITDIR", "X-PROJ")


def ch2_checks():
    return catalog.checks_in_suite("ch2")


def test_registry_shape():
    checks = ch2_checks()
    ids = [c.id for c in checks]
    assert len(ids) == 78
    assert len(ids) == len(set(ids))
    prefixes = {"S": 0, "X": 0, "REV": 0, "REV2": 0}
    for i in ids:
        prefixes[i.split("-")[0]] += 1
    assert prefixes == {"S": 53, "X": 18, "REV": 4, "REV2": 3}
    for c in checks:
        if c.id in REAL_ONLY:
            assert c.fields == ("real",), c.id
        elif c.id in COMPLEX_ONLY:
            assert c.fields == ("complex",), c.id
        else:
            assert c.fields == ("real", "complex"), c.id
        assert c.suite == "ch2"
        assert c.min_dim in (1, 2)


@pytest.mark.parametrize("field", ["real", "complex"])
def test_all_checks_hold_on_sampled_instances(field):
    rng = np.random.default_rng(424242)
    for chk in ch2_checks():
        if field not in chk.fields:
            continue
        for _ in range(10):
            dim = int(rng.integers(max(chk.min_dim, 2), 9))
            inst = chk.sampler(rng, dim, field)
            rep = catalog.evaluate(chk.id, inst)
            assert rep.hypothesis_ok, (chk.id, rep.note)
            assert rep.verdict == "Holds", (chk.id, rep.to_dict())


def test_chain_is_ascending_within_tolerance():
    rng = np.random.default_rng(17)
    for chk in ch2_checks():
        field = chk.fields[0]
        inst = chk.sampler(rng, max(chk.min_dim, 3), field)
        rep = catalog.evaluate(chk.id, inst)
        vals = [v for _, v in rep.chain]
        for a, b in zip(vals, vals[1:]):
            assert b - a >= -1e-9 * rep.scale, chk.id


def test_annulus_witness_gap_and_sharpness():
    w = catalog.equality_witness("S-RADIUS")
    rep = catalog.evaluate("S-RADIUS", w)
    assert rep.verdict == "Holds"
    assert rep.equality_flag
    assert rep.chain[1][1] == pytest.approx(0.375, abs=1e-15)
    assert rep.chain[2][1] == pytest.approx(0.375, abs=1e-15)
    assert harness.probe_sharpness("S-RADIUS", budget=64) == \
        pytest.approx(1.0, abs=1e-9)


def test_double_coupling_witness_half_equality():
    rep = catalog.evaluate("S-BUZANO", catalog.equality_witness("S-BUZANO"))
    assert rep.verdict == "Holds"
    assert rep.equality_flag
    assert rep.chain[0][1] == pytest.approx(0.5)
    assert rep.chain[1][1] == pytest.approx(0.5)


def test_weighted_complex_witness_equality():
    w = catalog.equality_witness("S-DEBRUIJN")
    rep = catalog.evaluate("S-DEBRUIJN", w)
    assert rep.verdict == "Holds"
    assert rep.equality_flag
    assert rep.chain[0][1] == pytest.approx(2.0)
    assert rep.chain[1][1] == pytest.approx(2.0)
    # the stored rotation reproduces the weights as real parts
    lam = w.meta["equality_scalar"]
    assert abs(lam - (1.0 - 1.0j)) == 0.0
    rebuilt = np.real(lam * w.vec("z"))
    assert np.allclose(rebuilt, np.asarray(w.lst("a"), dtype=float))


def test_sum_ratio_floor_witness_equality():
    rep = catalog.evaluate("S-TRI-R", catalog.equality_witness("S-TRI-R"))
    assert rep.verdict == "Holds"
    assert rep.equality_flag
    assert rep.chain[1][1] == pytest.approx(1.5)
    assert rep.chain[2][1] == pytest.approx(1.5)


def test_two_sided_double_coupling_orthogonal_oracle():
    # a, b, x pairwise orthogonal units: chain is exactly [-1/2, 0, 1/2]
    inst = CheckInstance(field_tag="real", dim=3,
                         vectors={"a": np.eye(3)[1], "b": np.eye(3)[2],
                                  "x": np.eye(3)[0]})
    rep = catalog.evaluate("S-RICHARD", inst)
    assert rep.verdict == "Holds"
    assert rep.chain[0][1] == pytest.approx(-0.5, abs=1e-15)
    assert rep.chain[1][1] == pytest.approx(0.0, abs=1e-15)
    assert rep.chain[2][1] == pytest.approx(0.5, abs=1e-15)


def test_recentered_bound_is_equality_in_dimension_one():
    # with one coordinate the deviation bound collapses onto the
    # recentered coupling for every nonzero alpha
    rng = np.random.default_rng(5)
    for _ in range(25):
        vals = rng.uniform(0.3, 2.0, size=3) * rng.choice([-1.0, 1.0], 3)
        alpha = float(rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0]))
        inst = CheckInstance(
            field_tag="real", dim=1,
            vectors={"a": vals[:1], "b": vals[1:2], "x": vals[2:]},
            scalars={"alpha": alpha})
        rep = catalog.evaluate("S-BUZ-GEN", inst)
        assert rep.verdict == "Holds"
        assert rep.equality_flag, rep.to_dict()


def test_quarter_bound_boundary_instance_is_nearly_sharp():
    eps = 1e-3
    inst = CheckInstance(field_tag="real", dim=2,
                         vectors={"x": np.array([1.0, eps]),
                                  "y": np.array([1.0, 0.0])},
                         scalars={"a": 1.0 - eps, "b": 1.0 + eps})
    rep = catalog.evaluate("REV2-QUAR", inst)
    assert rep.verdict == "Holds"
    assert catalog.sharpness_ratio("REV2-QUAR", inst) >= 0.999


@pytest.mark.parametrize("check_id", EQUIVALENCE_PAIRS)
@pytest.mark.parametrize("field", ["real", "complex"])
def test_equivalent_formulations_agree(check_id, field):
    # samplers deliberately draw condition-violating parameters too;
    # the check demands the two formulations agree either way
    chk = catalog.get_check(check_id)
    rng = np.random.default_rng(99)
    for _ in range(250):
        dim = int(rng.integers(max(chk.min_dim, 2), 7))
        inst = chk.sampler(rng, dim, field)
        rep = catalog.evaluate(check_id, inst)
        assert rep.verdict == "Holds", (check_id, rep.to_dict())


def test_ball_condition_forms_agree_everywhere():
    # functional and distance forms of the ball condition are the same
    # predicate, also on instances that violate it
    rng = np.random.default_rng(7)
    for _ in range(1000):
        dim = int(rng.integers(1, 6))
        field = "complex" if rng.uniform() < 0.5 else "real"
        x = core.random_vector(rng, dim, field)
        y = core.random_vector(rng, dim, field)
        if field == "complex":
            a = complex(rng.normal(), rng.normal())
            b = complex(rng.normal(), rng.normal())
        else:
            a, b = float(rng.normal()), float(rng.normal())
        p, q = cs.ball_condition_pair(x, y, a, b)
        assert p == q


def test_complement_energy_identity_is_exact():
    chk = catalog.get_check("X-IDENT")
    rng = np.random.default_rng(31)
    for field in ("real", "complex"):
        for _ in range(100):
            dim = int(rng.integers(2, 8))
            inst = chk.sampler(rng, dim, field)
            rep = catalog.evaluate("X-IDENT", inst)
            assert rep.verdict == "Holds"
            assert rep.equality_flag
            gap = abs(rep.chain[0][1] - rep.chain[1][1])
            assert gap <= 1e-10 * rep.scale


def test_shift_invariance_is_an_identity():
    chk = catalog.get_check("S-SHIFT")
    rng = np.random.default_rng(13)
    for field in ("real", "complex"):
        rep = catalog.evaluate("S-SHIFT", chk.sampler(rng, 5, field))
        assert rep.verdict == "Holds"
        assert rep.equality_flag


def test_trig_supremum_closed_form_matches_grid():
    chk = catalog.get_check("S-SUPLEMMA")
    rng = np.random.default_rng(23)
    for _ in range(20):
        rep = catalog.evaluate("S-SUPLEMMA", chk.sampler(rng, 2, "real"))
        assert rep.verdict == "Holds"
        assert rep.equality_flag


def test_rotated_bound_forms_coincide():
    # the modulus and real-part displays of the unimodular recentering
    # bound are one identity written twice
    chk = catalog.get_check("S-BUZ-ETA")
    rng = np.random.default_rng(37)
    for _ in range(30):
        inst = chk.sampler(rng, 4, "complex")
        rep = catalog.evaluate("S-BUZ-ETA", inst)
        assert rep.verdict == "Holds"
        hi, top = rep.chain[1][1], rep.chain[2][1]
        assert hi == pytest.approx(top, rel=1e-12)


def test_operator_refinement_suprema_are_attained():
    # the image-normalized probe pins the third step to the image norm
    # and the top singular pair pins the fifth step to the operator norm
    chk = catalog.get_check("S-OPREP")
    rng = np.random.default_rng(41)
    for field in ("real", "complex"):
        for _ in range(10):
            inst = chk.sampler(rng, 5, field)
            rep = catalog.evaluate("S-OPREP", inst)
            assert rep.verdict == "Holds"
            vals = [v for _, v in rep.chain]
            assert vals[2] == pytest.approx(vals[3], rel=1e-9)
            assert vals[4] == pytest.approx(vals[5], rel=1e-9)
            u, s, vh = np.linalg.svd(inst.meta["op"])
            assert vals[5] == pytest.approx(float(s[0]), rel=1e-12)


def test_two_family_lower_bound_is_signed():
    # explicit instance where the absolute-value form of the lower
    # bound fails while the signed form is an equality
    E = forms.OrthonormalFamily(np.eye(2)[:1])
    F = forms.OrthonormalFamily(np.eye(2)[1:2])
    x = np.array([1.0, 0.0])
    y = np.array([-1.0, 0.0])
    inst = CheckInstance(field_tag="real", dim=2,
                         vectors={"x": x, "y": y},
                         families={"E": E, "F": F})
    rep = catalog.evaluate("S-2FAM-REAL", inst)
    assert rep.verdict == "Holds"
    coupling = cs._two_family_coupling(E, F, x, y).real
    assert coupling == pytest.approx(-1.0)
    ip = core.inner(x, y)
    nprod = core.norm(x) * core.norm(y)
    assert coupling < 0.5 * (abs(ip) - nprod) - 0.5  # absolute form fails
    assert coupling >= 0.5 * (ip - nprod) - 1e-12    # signed form holds


def test_homogeneity_of_verdicts_under_scaling():
    rng = np.random.default_rng(53)
    for check_id in ("S-3VEC", "S-BUZANO", "S-VWT", "S-COS3"):
        chk = catalog.get_check(check_id)
        inst = chk.sampler(rng, 4, "complex")
        base = catalog.evaluate(check_id, inst)
        # extreme shrinking hits the absolute scale floor, which only
        # rescales the margin, never the verdict
        for t in (1e-3, 0.25, 4.0, 1e3):
            scaled = CheckInstance(
                field_tag=inst.field_tag, dim=inst.dim,
                vectors={k: t * v for k, v in inst.vectors.items()},
                scalars=dict(inst.scalars), reals=dict(inst.reals))
            rep = catalog.evaluate(check_id, scaled)
            assert rep.verdict == base.verdict == "Holds"
            if t in (0.25, 4.0):
                assert rep.relative_margin == pytest.approx(
                    base.relative_margin, rel=1e-6, abs=1e-12)


def test_annulus_hypothesis_rejects_bad_radii():
    e = np.array([1.0, 0.0])
    inst = CheckInstance(field_tag="real", dim=2,
                         vectors={"x": 0.75 * e, "y": -0.25 * e},
                         reals={"r1": 0.0, "r2": 1.0})
    rep = catalog.evaluate("S-RADIUS", inst)
    assert rep.verdict == "HypothesisFailed"
    assert not rep.hypothesis_ok
    inst2 = CheckInstance(field_tag="real", dim=2,
                          vectors={"x": 0.75 * e, "y": -0.25 * e},
                          reals={"r1": 0.5, "r2": 5.0})
    rep2 = catalog.evaluate("S-RADIUS", inst2)
    assert rep2.verdict == "HypothesisFailed"


def test_sequence_annulus_hypothesis_reverifies_indices():
    chk = catalog.get_check("S-DISC-R")
    rng = np.random.default_rng(61)
    inst = chk.sampler(rng, 3, "real")
    assert catalog.evaluate("S-DISC-R", inst).verdict == "Holds"
    inst.reals["r1"] = 1e6
    rep = catalog.evaluate("S-DISC-R", inst)
    assert rep.verdict == "HypothesisFailed"


def test_box_hypothesis_rejects_coupling_outside_box():
    e = np.array([1.0, 0.0])
    inst = CheckInstance(field_tag="real", dim=2,
                         vectors={"x": 2.0 * e, "e": e},
                         scalars={"gam": 3.0, "big": 4.0})
    rep = catalog.evaluate("X-GAMMA-LO", inst)
    assert rep.verdict == "HypothesisFailed"


def test_weighted_aggregates_use_weight_vector():
    chk = catalog.get_check("S-DISC-R")
    rng = np.random.default_rng(71)
    inst = chk.sampler(rng, 4, "complex")
    assert isinstance(inst.weights, core.WeightVector)
    assert float(np.sum(inst.weights.weights)) == pytest.approx(1.0)

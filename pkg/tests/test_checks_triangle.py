"""Tests for the ch3 check catalog: registry integrity, bulk random
evaluation, extremal witnesses, report invariances, and hand-computed
oracle instances for the forward-difference constants."""

import math

import numpy as np
import pytest

import ineq.checks_triangle as ct
from ineq import catalog, core, harness
from ineq.catalog import CheckInstance

COMPLEX_ONLY = {
    "T-C2", "T-C2-BALL", "T-C2-MM", "T-C2-FAM", "T-ARG", "T-DISK",
    "TX-CPLX", "TR-CBS-CPLX", "TR-CBS-CPLX-ADD", "TR-MEAN-CPLX",
    "TR-MEAN-CPLX-ADD",
}
MANDATED = {
    "T-DM", "T-DM-FAM", "T-BALL", "T-MM", "T-BALL-FAM", "T-MM-FAM",
    "T-ADD", "T-ADD-FAM", "T-SMALL", "T-SMALL-MM", "T-ARB", "T-ARB-MM",
    "T-SCHWARZ-BALL", "T-SCHWARZ-MM", "T-QUAD", "T-QUAD-REF",
    "T-PAIR-r", "T-FD-SUM", "T-FD-SUP", "T-FD-HOLDER", "T-FD-22",
    "T-QUAD-MM", "T-KLEM", "T-KCOARSE", "T-KBETTER", "T-RHO",
    "T-MM-QUAD", "T-ETA", "T-C2", "T-C2-BALL", "T-C2-MM", "T-C2-FAM",
    "T-ARG", "T-DISK",
}


def ch3_checks():
    return catalog.checks_in_suite("ch3")


def test_registry_shape():
    checks = ch3_checks()
    ids = [c.id for c in checks]
    assert len(ids) == 50
    assert len(ids) == len(set(ids))
    assert MANDATED <= set(ids)
    assert sum(i.startswith("TX-") for i in ids) == 6
    assert sum(i.startswith("TR-") for i in ids) == 10
    for c in checks:
        if c.id in COMPLEX_ONLY:
            assert c.fields == ("complex",), c.id
        else:
            assert c.fields == ("real", "complex"), c.id
        assert c.suite == "ch3"
        assert c.title


@pytest.mark.parametrize("field", ["real", "complex"])
def test_all_checks_hold_on_sampled_instances(field):
    rng = np.random.default_rng(31337)
    for chk in ch3_checks():
        if field not in chk.fields:
            continue
        for _ in range(10):
            dim = int(rng.integers(max(chk.min_dim, 2), 9))
            inst = chk.sampler(rng, dim, field)
            rep = catalog.evaluate(chk.id, inst)
            assert rep.hypothesis_ok, (chk.id, rep.note)
            assert rep.verdict == "Holds", (chk.id, rep.to_dict())


def test_chain_is_ascending_within_tolerance():
    rng = np.random.default_rng(23)
    for chk in ch3_checks():
        field = chk.fields[0]
        inst = chk.sampler(rng, max(chk.min_dim, 3), field)
        rep = catalog.evaluate(chk.id, inst)
        vals = [v for _, v in rep.chain]
        for a, b in zip(vals, vals[1:]):
            assert b - a >= -1e-9 * rep.scale, chk.id


def test_cone_floor_witness_and_oracle():
    w = catalog.equality_witness("T-DM")
    rep = catalog.evaluate("T-DM", w)
    assert rep.verdict == "Holds"
    assert rep.equality_flag
    assert rep.chain[0][1] == pytest.approx(5.0, abs=1e-12)
    assert rep.chain[1][1] == pytest.approx(5.0, abs=1e-12)
    # two members along e1 and e1+e2, floor one over root two
    inst = CheckInstance(field_tag="real", dim=2,
                         vectors={"a": np.array([1.0, 0.0])},
                         seq={"xs": np.array([[1.0, 0.0], [1.0, 1.0]])},
                         reals={"r": 2 ** -0.5})
    rep = catalog.evaluate("T-DM", inst)
    assert rep.verdict == "Holds"
    assert rep.chain[0][1] == pytest.approx(1.0 + math.sqrt(2) / 2,
                                            abs=1e-12)
    assert rep.chain[1][1] == pytest.approx(math.sqrt(5.0), abs=1e-12)


def test_equality_witnesses_are_exact():
    for cid in ("T-ADD", "TX-ADD", "T-QUAD", "T-PAIR-r", "T-KLEM",
                "T-ARG", "T-FD-SUM", "T-FD-SUP", "T-FD-HOLDER",
                "T-FD-22"):
        w = catalog.equality_witness(cid)
        rep = catalog.evaluate(cid, w)
        assert rep.verdict == "Holds", cid
        assert rep.equality_flag, (cid, rep.to_dict())


def _fd_progression(n, v):
    xs = np.array([k * v for k in range(1, n + 1)])
    return CheckInstance(field_tag="real", dim=len(v), seq={"xs": xs})


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_forward_difference_constants(n):
    # arithmetic progressions isolate the member-count constants
    v = np.array([0.3, -0.4, 0.5])
    inst = _fd_progression(n, v)
    N2 = float(np.linalg.norm(inst.lst("xs").sum(axis=0)) ** 2)
    vv = float(np.dot(v, v))
    rep = catalog.evaluate("T-FD-SUP", inst)
    c_sup = (rep.chain[1][1] - N2) / vv
    assert c_sup == pytest.approx(n * n * (n * n - 1) / 12.0,
                                  rel=1e-12)
    rep = catalog.evaluate("T-FD-22", inst)
    c_sq = (rep.chain[1][1] - N2) / (vv * (n - 1))
    assert c_sq == pytest.approx(n * (n * n - 1) / 6.0, rel=1e-12)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_paired_exponent_cap_holds_per_exponent(p):
    rng = np.random.default_rng(int(p * 100))
    chk = catalog.get_check("T-FD-HOLDER")
    for _ in range(20):
        inst = chk.sampler(rng, 4, "real")
        inst.reals["p"] = p
        rep = catalog.evaluate("T-FD-HOLDER", inst)
        assert rep.verdict == "Holds", rep.to_dict()


def test_exact_pairwise_caps_give_identity():
    rng = np.random.default_rng(99)
    chk = catalog.get_check("T-QUAD")
    for _ in range(50):
        inst = chk.sampler(rng, int(rng.integers(2, 7)), "complex")
        xs = inst.lst("xs")
        norms = np.linalg.norm(xs, axis=1)
        g = np.outer(norms, norms) - np.real(xs @ xs.conj().T)
        g = 0.5 * (g + g.T)
        np.fill_diagonal(g, 0.0)
        inst.seq["caps"] = g
        rep = catalog.evaluate("T-QUAD", inst)
        assert rep.verdict == "Holds"
        assert abs(rep.margin) <= 1e-10 * rep.scale


def test_reports_are_permutation_invariant():
    rng = np.random.default_rng(7)
    for cid in ("T-DM", "T-QUAD", "T-KLEM"):
        chk = catalog.get_check(cid)
        inst = chk.sampler(rng, 4, "complex")
        before = [v for _, v in catalog.evaluate(cid, inst).chain]
        perm = rng.permutation(inst.lst("xs").shape[0])
        inst.seq["xs"] = inst.lst("xs")[perm]
        if "caps" in inst.seq:
            inst.seq["caps"] = np.asarray(
                inst.seq["caps"])[np.ix_(perm, perm)]
        after = [v for _, v in catalog.evaluate(cid, inst).chain]
        assert after == pytest.approx(before, abs=1e-12), cid


def test_forward_differences_oracles():
    e1 = np.array([1.0, 0.0])
    e2 = np.array([0.0, 1.0])
    const = ct.VectorFamily(np.tile(e1, (4, 1)))
    assert ct.forward_differences(const) == pytest.approx([0.0] * 3)
    steps = ct.VectorFamily(np.array([0 * e1, e1, e1 + e2]))
    assert ct.forward_differences(steps) == pytest.approx([1.0, 1.0])
    v = np.array([0.3, -0.4])
    prog = np.array([k * v for k in range(1, 6)])
    assert ct.forward_differences(prog) == pytest.approx([0.5] * 4)
    with pytest.raises(core.IneqError):
        ct.forward_differences(ct.VectorFamily(e1.reshape(1, -1)))


def test_vector_family_accessors():
    fam = ct.VectorFamily(np.array([[3.0, 4.0], [0.0, 1.0]]))
    assert fam.size == 2
    assert fam.dim == 2
    assert fam.min_norm == pytest.approx(1.0)
    assert [tuple(x) for x in fam.items] == [(3.0, 4.0), (0.0, 1.0)]
    with pytest.raises(core.IneqError):
        ct.VectorFamily(np.zeros((0, 3)))


def test_tampered_instances_fail_hypothesis():
    rng = np.random.default_rng(11)
    chk = catalog.get_check("T-BALL")
    inst = chk.sampler(rng, 3, "real")
    inst.reals["rho"] = 1e-6
    rep = catalog.evaluate("T-BALL", inst)
    assert rep.verdict == "HypothesisFailed"
    chk = catalog.get_check("T-DM")
    inst = chk.sampler(rng, 3, "real")
    inst.reals["r"] = 1.5
    rep = catalog.evaluate("T-DM", inst)
    assert rep.verdict == "HypothesisFailed"
    chk = catalog.get_check("T-ETA")
    inst = chk.sampler(rng, 3, "real")
    inst.reals["eta"] = 100.0
    rep = catalog.evaluate("T-ETA", inst)
    assert rep.verdict == "HypothesisFailed"


def test_evaluate_triangle_rejects_other_suites():
    rng = np.random.default_rng(5)
    harness.load_catalogs()
    other = catalog.checks_in_suite("ch2")[0]
    inst = other.sampler(rng, 3, other.fields[0])
    with pytest.raises(core.IneqError):
        ct.evaluate_triangle(other.id, inst)
    chk = catalog.get_check("T-PAIR-r")
    rep = ct.evaluate_triangle("T-PAIR-r", chk.sampler(rng, 3, "real"))
    assert rep.verdict == "Holds"


def test_double_ball_radii_cover_the_center_gap():
    rng = np.random.default_rng(13)
    for _ in range(25):
        chk = catalog.get_check("T-C2-BALL")
        inst = chk.sampler(rng, 4, "complex")
        assert inst.real("rho1") + inst.real("rho2") \
            >= math.sqrt(2.0) - 1e-9
        chk = catalog.get_check("T-DISK")
        inst = chk.sampler(rng, 1, "complex")
        assert inst.real("rho1") + inst.real("rho2") \
            >= math.sqrt(2.0) - 1e-9


def test_sharpness_probe_reaches_witnesses():
    for cid in ("T-DM", "T-PAIR-r", "T-FD-SUP"):
        assert harness.probe_sharpness(cid, budget=64) \
            == pytest.approx(1.0, abs=1e-9)


def test_harness_can_sample_every_triangle_check():
    for chk in ch3_checks():
        ft = chk.fields[0]
        inst = harness.sample(chk.id, max(chk.min_dim, 3), ft,
                              seed=1234)
        rep = catalog.evaluate(chk.id, inst)
        assert rep.verdict == "Holds", chk.id

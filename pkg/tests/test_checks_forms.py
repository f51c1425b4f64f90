"""Tests for the ch1 check catalog: registry integrity, bulk random
evaluation, hand-computed oracle instances, and flag semantics."""

import numpy as np
import pytest

import ineq.checks_forms as cf
from ineq import catalog, core, forms
from ineq.catalog import CheckInstance


def ch1_checks():
    return catalog.checks_in_suite("ch1")


def test_registry_shape():
    checks = ch1_checks()
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids))
    assert len(ids) >= 40
    assert all(i.startswith("F-") for i in ids)
    assert all(c.fields == ("real", "complex") for c in checks)


@pytest.mark.parametrize("field", ["real", "complex"])
def test_all_checks_hold_on_sampled_instances(field):
    rng = np.random.default_rng(101)
    for chk in ch1_checks():
        for _ in range(12):
            dim = int(rng.integers(max(chk.min_dim, 2), 8))
            inst = chk.sampler(rng, dim, field)
            rep = catalog.evaluate(chk.id, inst)
            assert rep.verdict == "Holds", (chk.id, rep.to_dict())


def test_chain_is_ascending_within_tolerance():
    rng = np.random.default_rng(11)
    for chk in ch1_checks():
        inst = chk.sampler(rng, max(chk.min_dim, 3), "real")
        rep = catalog.evaluate(chk.id, inst)
        vals = [v for _, v in rep.chain]
        for a, b in zip(vals, vals[1:]):
            assert b - a >= -1e-9 * rep.scale


def test_tau_identity_is_equality():
    rng = np.random.default_rng(3)
    chk = catalog.get_check("F-TAU-ID")
    rep = catalog.evaluate("F-TAU-ID", chk.sampler(rng, 4, "complex"))
    assert rep.verdict == "Holds"
    assert rep.equality_flag


def test_index_sigma_oracle_orthogonal_split():
    # families {e1}, {e2}; x = e1, y = e2: parts vanish, union gap is 1
    f1 = forms.OrthonormalFamily(np.eye(3)[:1])
    f2 = forms.OrthonormalFamily(np.eye(3)[1:2])
    inst = CheckInstance(
        field_tag="real", dim=3,
        vectors={"x": np.eye(3)[0], "y": np.eye(3)[1]},
        families={"first": f1, "second": f2})
    rep = catalog.evaluate("F-IDX-SIGMA", inst)
    assert rep.verdict == "Holds"
    assert rep.chain[1][1] == pytest.approx(0.0, abs=1e-12)
    assert rep.chain[2][1] == pytest.approx(1.0)


def test_bessel_witness_is_parseval_equality():
    rep = catalog.evaluate("F-BESSEL", catalog.equality_witness("F-BESSEL"))
    assert rep.verdict == "Holds"
    assert rep.equality_flag
    assert catalog.sharpness_ratio(
        "F-BESSEL", catalog.equality_witness("F-BESSEL")) == \
        pytest.approx(1.0)


def test_hadamard_witness_orthogonal_equality():
    rep = catalog.evaluate("F-GRAM-HADAMARD",
                           catalog.equality_witness("F-GRAM-HADAMARD"))
    assert rep.verdict == "Holds"
    assert rep.equality_flag


def test_gram_pq_identity_residual_is_zero():
    rng = np.random.default_rng(5)
    chk = catalog.get_check("F-GRAM-PQ-ID")
    for field in ("real", "complex"):
        rep = catalog.evaluate("F-GRAM-PQ-ID", chk.sampler(rng, 5, field))
        assert rep.verdict == "Holds"
        assert rep.equality_flag


def test_collinear_pair_gives_equality_chain():
    g = forms.identity_form(4)
    x = np.array([1.0, 2.0, -1.0, 0.5])
    inst = CheckInstance(field_tag="real", dim=4,
                         vectors={"x": x, "y": 2.0 * x},
                         meta={"G1": g, "G2": g})
    rep = catalog.evaluate("F-SIGMA-SUPER", inst)
    assert rep.verdict == "Holds"
    assert rep.equality_flag  # every gap in the chain vanishes


def test_gamma_check_reports_hypothesis_failure():
    g = forms.identity_form(3)
    inst = CheckInstance(field_tag="real", dim=3,
                         vectors={"x": np.zeros(3), "y": np.ones(3)},
                         meta={"G1": g, "G2": g})
    rep = catalog.evaluate("F-GAMMA-SUPER", inst)
    assert rep.verdict == "HypothesisFailed"
    assert rep.note
    forced = catalog.evaluate("F-GAMMA-SUPER", inst, force=True)
    assert forced.verdict == "HypothesisFailed"


def test_seq_mono_rejects_unordered_weights():
    rng = np.random.default_rng(9)
    X = np.stack([core.random_vector(rng, 3, "real") for _ in range(4)])
    Y = np.stack([core.random_vector(rng, 3, "real") for _ in range(4)])
    inst = CheckInstance(
        field_tag="real", dim=3, seq={"X": X, "Y": Y},
        meta={"p": np.array([1.0, 1.0, 1.0, 0.1]),
              "q": np.array([0.5, 0.5, 0.5, 0.5])})
    rep = catalog.evaluate("F-SEQ-DELTA-MONO", inst)
    assert rep.verdict == "HypothesisFailed"
    assert "ordered" in rep.note


def test_seq_functional_oracle_two_terms():
    # x1=y1=e1, x2=y2=e2, weights (1, 1): gaps all vanish
    X = np.eye(2)
    p = np.ones(2)
    assert cf.seq_functional("sigma", p, X, X) == pytest.approx(0.0)
    # y2 = -e2 flips the cross term: sigma = 2 - 0 = 2
    Y = np.array([[1.0, 0.0], [0.0, -1.0]])
    assert cf.seq_functional("sigma", p, X, Y) == pytest.approx(2.0)
    assert cf.seq_functional("delta", p, X, Y) == pytest.approx(4.0)
    assert cf.seq_functional("beta", p, X, Y) == pytest.approx(2.0)


def test_seq_maxpair_two_terms_is_equality():
    X = np.array([[1.0, 0.0], [0.0, 2.0]])
    Y = np.array([[0.5, 0.5], [1.0, -1.0]])
    inst = CheckInstance(field_tag="real", dim=2, seq={"X": X, "Y": Y},
                         meta={"p": np.array([0.7, 0.3]), "cut": 1})
    rep = catalog.evaluate("F-SEQ-MAXPAIR", inst)
    assert rep.verdict == "Holds"
    assert rep.chain[1][1] == pytest.approx(rep.chain[2][1])


def test_seq_partial_monotone_collinear_all_zero():
    rng = np.random.default_rng(21)
    X = np.stack([core.random_vector(rng, 3, "real") for _ in range(5)])
    inst = CheckInstance(field_tag="real", dim=3, seq={"X": X, "Y": X},
                         meta={"p": rng.uniform(0.1, 1, 5), "cut": 2})
    rep = catalog.evaluate("F-SEQ-PARTIAL-MONO", inst)
    assert rep.verdict == "Holds"
    assert all(abs(v) < 1e-12 for _, v in rep.chain)


def test_operator_interval_hypothesis_failure_is_soft():
    inst = CheckInstance(
        field_tag="real", dim=3,
        vectors={"x": np.array([1.0, 0, 0]), "y": np.array([0, 1.0, 0])},
        meta={"op": 3.0 * np.eye(3)})  # outside [0, I]
    rep = catalog.evaluate("F-OP-SPLIT-SIGMA", inst)
    assert rep.verdict == "HypothesisFailed"


def test_refinement_full_basis_equality():
    # family spans the space: family gap equals the full gap
    rng = np.random.default_rng(2)
    fam = forms.random_orthonormal(rng, 4, 4, "complex")
    x, y = (core.random_vector(rng, 4, "complex"),
            core.random_vector(rng, 4, "complex"))
    inst = CheckInstance(field_tag="complex", dim=4,
                         vectors={"x": x, "y": y},
                         families={"family": fam})
    rep = catalog.evaluate("F-REF-DELTA", inst)
    assert rep.verdict == "Holds"
    assert rep.chain[1][1] == pytest.approx(rep.chain[2][1], rel=1e-9,
                                            abs=1e-9 * rep.scale)

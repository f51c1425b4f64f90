"""Hermitian form functionals, family/Gram/operator forms, oracles first."""

import numpy as np
import pytest

from ineq import core, forms


def rand_pair(rng, dim, field):
    return (core.random_vector(rng, dim, field),
            core.random_vector(rng, dim, field))


def F(kind, G, x, y):
    return float(forms.functional(kind, G, x, y))


# ------------------------------------------------------------- form_eval


def test_form_eval_examples():
    x = core.as_vector([1, 1], "real")
    y = core.as_vector([1, 0], "real")
    ident = forms.identity_form(2)
    assert forms.form_eval(ident, x, y) == pytest.approx(core.inner(x, y))
    zero = forms.HermitianForm(np.zeros((2, 2)))
    assert forms.form_eval(zero, x, y) == 0.0
    diag = forms.HermitianForm(np.diag([2.0, 3.0]))
    # entrywise sum oracle: 2*1*1 + 3*1*0
    assert forms.form_eval(diag, x, y) == pytest.approx(2.0)


def test_form_eval_axioms():
    rng = np.random.default_rng(0)
    for field in core.FIELDS:
        G = forms.random_psd_form(rng, 4, field)
        x, y = rand_pair(rng, 4, field)
        z = core.random_vector(rng, 4, field)
        lam = core.random_scalar(rng, field)
        lhs = forms.form_eval(G, lam * x + z, y)
        rhs = lam * forms.form_eval(G, x, y) + forms.form_eval(G, z, y)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))
        sym = forms.form_eval(G, y, x)
        assert abs(np.conj(sym) - forms.form_eval(G, x, y)) <= 1e-10 * max(
            1.0, abs(sym))
        assert forms.seminorm_sq(G, x) >= 0.0


def test_hermitian_form_validation():
    with pytest.raises(ValueError):
        forms.HermitianForm(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        forms.HermitianForm(np.diag([1.0, -1.0]))
    with pytest.raises(core.DimensionMismatch):
        forms.HermitianForm(np.zeros((2, 3)))


# ------------------------------------------------------------ functionals


def test_functional_examples():
    ident = forms.identity_form(2)
    e1 = core.as_vector([1, 0], "real")
    e2 = core.as_vector([0, 1], "real")
    assert F("sigma", ident, e1, e1) == pytest.approx(0.0)
    x = core.as_vector([3, 4], "real")
    y = core.as_vector([4, 3], "real")
    assert F("sigma", ident, x, y) == pytest.approx(1.0)  # 25 - 24
    # tau = 2 sigma_r; for e1, e2: (1+1)^2 - 2 = 2
    assert F("tau", ident, e1, e2) == pytest.approx(2.0)
    assert F("tau", ident, e1, e2) == pytest.approx(
        2 * F("sigma_r", ident, e1, e2))


def test_functionals_nonnegative_and_tau_identity():
    rng = np.random.default_rng(1)
    for field in core.FIELDS:
        for _ in range(60):
            dim = int(rng.integers(2, 7))
            G = forms.random_psd_form(rng, dim, field)
            x, y = rand_pair(rng, dim, field)
            scale = max(forms.seminorm_sq(G, x) * forms.seminorm_sq(G, y),
                        1.0)
            for kind in ("sigma", "sigma_r", "tau", "delta", "delta_r",
                         "beta"):
                assert F(kind, G, x, y) >= -1e-9 * scale, kind
            assert F("tau", G, x, y) == pytest.approx(
                2 * F("sigma_r", G, x, y), abs=1e-9 * scale)
            if forms.seminorm(G, y) > 1e-6:
                assert F("gamma", G, x, y) >= -1e-9 * scale


def test_gamma_degenerate_denominator():
    G = forms.HermitianForm(np.diag([1.0, 0.0]))
    x = core.as_vector([1, 0], "real")
    y = core.as_vector([0, 1], "real")  # G-null
    with pytest.raises(core.DegenerateDenominator):
        forms.functional("gamma", G, x, y)


def test_superadditivity_and_monotonicity():
    rng = np.random.default_rng(2)
    for field in core.FIELDS:
        for _ in range(80):
            dim = int(rng.integers(2, 6))
            G1 = forms.random_psd_form(rng, dim, field)
            G2 = forms.random_psd_form(rng, dim, field)
            x, y = rand_pair(rng, dim, field)
            tot = G1 + G2
            s = max(forms.seminorm_sq(tot, x) * forms.seminorm_sq(tot, y),
                    1.0)
            for kind in ("sigma", "sigma_r", "beta"):
                gain = F(kind, tot, x, y) - F(kind, G1, x, y) \
                    - F(kind, G2, x, y)
                assert gain >= -1e-9 * s, kind
            # delta: strong superadditivity with the determinant bonus
            bonus = (forms.seminorm(G1, x) * forms.seminorm(G2, y)
                     - forms.seminorm(G1, y) * forms.seminorm(G2, x)) ** 2
            gain = F("delta", tot, x, y) - F("delta", G1, x, y) \
                - F("delta", G2, x, y)
            assert gain >= bonus - 1e-9 * s
            # monotonicity along G1 <= G1 + G2
            assert forms.form_order_leq(G1, tot)
            for kind in ("sigma", "sigma_r", "delta"):
                assert F(kind, tot, x, y) >= F(kind, G1, x, y) - 1e-9 * s
            # delta: strong monotonicity bonus
            bonus2 = (forms.seminorm(G1, x) * np.sqrt(max(
                forms.seminorm_sq(tot, y) - forms.seminorm_sq(G1, y), 0.0))
                - forms.seminorm(G1, y) * np.sqrt(max(
                    forms.seminorm_sq(tot, x) - forms.seminorm_sq(G1, x),
                    0.0))) ** 2
            assert F("delta", tot, x, y) - F("delta", G1, x, y) \
                >= bonus2 - 1e-9 * s


def test_gamma_superadditive_and_monotone_definite():
    rng = np.random.default_rng(3)
    for field in core.FIELDS:
        for _ in range(60):
            dim = int(rng.integers(2, 6))
            G1 = forms.random_psd_form(rng, dim, field, definite=True)
            G2 = forms.random_psd_form(rng, dim, field, definite=True)
            x, y = rand_pair(rng, dim, field)
            tot = G1 + G2
            s = max(forms.seminorm_sq(tot, x), 1.0)
            gain = F("gamma", tot, x, y) - F("gamma", G1, x, y) \
                - F("gamma", G2, x, y)
            assert gain >= -1e-9 * s
            assert F("gamma", tot, x, y) >= F("gamma", G1, x, y) - 1e-9 * s


def test_max_ratio_monotonicity_and_strong_bonus():
    rng = np.random.default_rng(4)
    for field in core.FIELDS:
        for _ in range(60):
            dim = int(rng.integers(2, 6))
            G1 = forms.random_psd_form(rng, dim, field, definite=True)
            H = forms.random_psd_form(rng, dim, field, definite=True)
            G2 = G1 + H
            x, y = rand_pair(rng, dim, field)
            s = max(forms.seminorm_sq(G2, x) * forms.seminorm_sq(G2, y), 1.0)
            ratio = max(
                forms.seminorm_sq(G2, y) / forms.seminorm_sq(G1, y),
                forms.seminorm_sq(G2, x) / forms.seminorm_sq(G1, x))
            assert F("delta", G2, x, y) >= ratio * F("delta", G1, x, y) \
                - 1e-9 * s
            # strong bonus for a definite pair
            d1, dh = F("delta", G1, x, y), F("delta", H, x, y)
            ry = forms.seminorm_sq(H, y) / forms.seminorm_sq(G1, y)
            rx = forms.seminorm_sq(H, x) / forms.seminorm_sq(G1, x)
            bonus = max(ry * d1 + dh / ry if ry > 0 else -np.inf,
                        rx * d1 + dh / rx if rx > 0 else -np.inf)
            gain = F("delta", G2, x, y) - d1 - dh
            assert gain >= bonus - 1e-9 * s


def test_lemma_infimum():
    ident = forms.identity_form(3)
    x = core.as_vector([1, 0, 0], "real")
    y = core.as_vector([0, 1, 0], "real")
    rep = forms.lemma_infimum_check(ident, x, y)
    assert rep.verdict == "Holds"
    # orthogonal: minimum is |x|^2 at lam = 0
    assert rep.chain[0][1] == pytest.approx(1.0)
    rep = forms.lemma_infimum_check(ident, 2 * y, y)
    assert rep.chain[0][1] == pytest.approx(0.0, abs=1e-12)
    rng = np.random.default_rng(5)
    for field in core.FIELDS:
        G = forms.random_psd_form(rng, 4, field, definite=True)
        x, y = rand_pair(rng, 4, field)
        rep = forms.lemma_infimum_check(G, x, y)
        assert rep.verdict == "Holds"
    with pytest.raises(core.DegenerateDenominator):
        forms.lemma_infimum_check(forms.HermitianForm(np.diag([1.0, 0.0])),
                                  np.array([1.0, 0.0]),
                                  np.array([0.0, 1.0]))


def test_form_order_examples():
    ident = forms.identity_form(2)
    zero = forms.HermitianForm(np.zeros((2, 2)))
    assert forms.form_order_leq(zero, ident)
    assert forms.form_order_leq(ident, ident)
    assert not forms.form_order_leq(forms.HermitianForm(np.diag([2.0, 0.0])),
                                    ident)


# --------------------------------------------------- orthonormal families


def test_family_form_examples():
    basis = forms.OrthonormalFamily(np.eye(2))
    assert np.allclose(forms.family_form(basis).matrix, np.eye(2))
    single = forms.OrthonormalFamily(np.array([[1.0, 0.0]]))
    assert np.allclose(forms.family_form(single).matrix, np.diag([1.0, 0.0]))
    with pytest.raises(core.NonOrthonormalFamily):
        forms.OrthonormalFamily(np.array([[1.0, 0.0], [1.0, 0.0]]))


def test_family_form_union_additive_and_bessel():
    rng = np.random.default_rng(6)
    for field in core.FIELDS:
        fam = forms.random_orthonormal(rng, 6, 4, field)
        assert fam.gram_defect <= 1e-12
        f1 = forms.OrthonormalFamily(fam.vectors[:2])
        f2 = forms.OrthonormalFamily(fam.vectors[2:])
        lhs = forms.family_form(forms.family_union(f1, f2)).matrix
        rhs = forms.family_form(f1).matrix + forms.family_form(f2).matrix
        assert np.allclose(lhs, rhs)
        # Bessel: family form below the identity; complement exact
        ff = forms.family_form(fam)
        assert forms.form_order_leq(ff, forms.identity_form(6))
        total = ff.matrix + forms.complement_form(fam).matrix
        assert np.allclose(total, np.eye(6))
        x = core.random_vector(rng, 6, field)
        coeffs = forms.family_coefficients(fam, x)
        assert forms.seminorm_sq(ff, x) == pytest.approx(
            float(np.sum(np.abs(coeffs) ** 2)))


# -------------------------------------------------------------- Gram forms


def test_gram_hadamard_bounds():
    rng = np.random.default_rng(7)
    for field in core.FIELDS:
        for _ in range(30):
            dim = int(rng.integers(2, 7))
            n = int(rng.integers(1, dim + 1))
            vs = [core.random_vector(rng, dim, field) for _ in range(n)]
            g = forms.gram_det(vs)
            prod = float(np.prod([core.norm_sq(v) for v in vs]))
            assert g >= -1e-12 * max(prod, 1.0)
            assert g <= prod * (1 + 1e-10)
        # dependent family: determinant collapses to zero
        v = core.random_vector(rng, 4, field)
        assert forms.gram_det([v, 2 * v]) == pytest.approx(0.0, abs=1e-9)
        # orthogonal family: equality on the product side
        fam = forms.random_orthonormal(rng, 5, 3, field)
        scaled = [3.0 * fam.vectors[0], 0.5 * fam.vectors[1],
                  2.0 * fam.vectors[2]]
        assert forms.gram_det(scaled) == pytest.approx(
            float(np.prod([core.norm_sq(v) for v in scaled])))


def test_gram_form_p_against_bordered_oracle():
    rng = np.random.default_rng(8)
    for field in core.FIELDS:
        for _ in range(20):
            dim = int(rng.integers(2, 6))
            n = int(rng.integers(1, dim))
            basis = [core.random_vector(rng, dim, field) for _ in range(n)]
            x, y = rand_pair(rng, dim, field)
            P = forms.gram_form_p(basis)
            want = forms.bordered_gram(basis, x, y)
            got = forms.form_eval(P, x, y)
            assert abs(got - want) <= 1e-9 * max(1.0, abs(want))
            # p(x, x) equals the Gram determinant of the extended family
            want_xx = forms.gram_det([x] + basis)
            assert forms.form_eval(P, x, x) == pytest.approx(
                want_xx, rel=1e-8, abs=1e-9)
            # p + q = prod |x_i|^2 * <.,.>
            Q = forms.gram_form_q(basis)
            prod = float(np.prod([core.norm_sq(b) for b in basis]))
            tot = forms.form_eval(P, x, y) + forms.form_eval(Q, x, y)
            want_tot = prod * core.inner(x, y)
            assert abs(tot - want_tot) <= 1e-9 * max(1.0, abs(want_tot))


def test_gram_form_examples_and_errors():
    # n = 1, x1 = e1, dim 2: p(x,x) = |x|^2 - |<x,e1>|^2
    e1 = core.as_vector([1, 0], "real")
    x = core.as_vector([2, 3], "real")
    P = forms.gram_form_p([e1])
    assert forms.form_eval(P, x, x) == pytest.approx(
        core.norm_sq(x) - core.inner(x, e1) ** 2)
    # x inside the span: p(x,x) = 0
    assert forms.form_eval(P, e1, e1) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(core.ZeroVector):
        forms.gram_form_p([np.zeros(2)])


# ----------------------------------------------------------- operator forms


def test_operator_norm_chain_identity_equality():
    x = core.as_vector([1, 2], "real")
    y = core.as_vector([3, -1], "real")
    reports = forms.operator_norm_chain(np.eye(2), x, y)
    assert reports[0].verdict == "Holds"
    assert reports[0].equality_flag  # both sides equal under the identity


def test_operator_interval_half_identity():
    rng = np.random.default_rng(9)
    x, y = rand_pair(rng, 3, "real")
    reports = forms.operator_interval_chain(0.5 * np.eye(3), x, y)
    sigma_rep, delta_rep, beta_rep = reports
    # sigma and beta split exactly in half; equality pattern
    assert sigma_rep.chain[1][1] == pytest.approx(sigma_rep.chain[2][1])
    assert beta_rep.chain[1][1] == pytest.approx(beta_rep.chain[2][1])
    assert delta_rep.verdict == "Holds"


def test_operator_posdef_chain_eigen_oracle():
    rng = np.random.default_rng(10)
    d = np.diag([2.0, 3.0])
    assert np.linalg.eigvalsh(d)[0] == pytest.approx(2.0)
    for _ in range(20):
        x, y = rand_pair(rng, 2, "real")
        for rep in forms.operator_posdef_chain(d, x, y):
            assert rep.verdict == "Holds"
            assert rep.margin >= -1e-9 * rep.scale


def test_operator_chains_random():
    rng = np.random.default_rng(11)
    for field in core.FIELDS:
        for _ in range(25):
            dim = int(rng.integers(2, 6))
            x, y = rand_pair(rng, dim, field)
            a = rng.standard_normal((dim, dim))
            if field == "complex":
                a = a + 1j * rng.standard_normal((dim, dim))
            for rep in forms.operator_norm_chain(a, x, y):
                assert rep.verdict == "Holds", rep
            for rep in forms.operator_lower_chain(a + 3 * np.eye(dim), x, y):
                if rep.hypothesis_ok:
                    assert rep.verdict == "Holds", rep
            # squash a PSD matrix into [0, I]
            g = forms.random_psd_form(rng, dim, field).matrix
            u = g / (np.linalg.eigvalsh(g)[-1] + 1e-3)
            for rep in forms.operator_interval_chain(u, x, y):
                assert rep.verdict == "Holds", rep
            d = forms.random_psd_form(rng, dim, field, definite=True).matrix
            for rep in forms.operator_posdef_chain(d, x, y):
                assert rep.verdict == "Holds", rep
    # inapplicable families come back HypothesisFailed, not raised
    sheared = np.array([[0.0, 1.0], [0.0, 0.0]])
    x = core.as_vector([1, 0], "real")
    y = core.as_vector([0, 1], "real")
    all_reports = forms.operator_forms(sheared, x, y)
    assert any(not r.hypothesis_ok for r in all_reports)
    assert all(r.verdict in ("Holds", "HypothesisFailed")
               for r in all_reports)

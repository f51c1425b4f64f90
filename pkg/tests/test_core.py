"""Core inner product primitives against independent oracles."""

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ineq import core

finite = st.floats(min_value=-100, max_value=100, allow_nan=False,
                   allow_infinity=False, width=64)


def vec_strategy(dim, cplx=False):
    base = st.lists(finite, min_size=dim, max_size=dim)
    if not cplx:
        return base.map(lambda v: np.asarray(v, dtype=np.float64))
    return st.tuples(base, base).map(
        lambda p: np.asarray(p[0], dtype=np.float64)
        + 1j * np.asarray(p[1], dtype=np.float64))


# ----------------------------------------------------------------- inner


def test_inner_examples():
    e1 = core.as_vector([1, 0], "real")
    e2 = core.as_vector([0, 1], "real")
    assert core.inner(e1, e1) == 1.0
    assert core.inner(e1, e2) == 0.0
    # componentwise sum oracle: 1*3 + 2*4
    x = core.as_vector([1, 2], "real")
    y = core.as_vector([3, 4], "real")
    oracle = sum(a * b for a, b in zip([1, 2], [3, 4]))
    assert core.inner(x, y) == oracle == 11


def test_norm_examples():
    assert core.norm(core.as_vector([1, 0, 0], "real")) == 1.0
    assert core.norm(core.as_vector([3, 4], "real")) == 5.0
    assert core.norm(core.as_vector([0, 0], "real")) == 0.0


def test_inner_errors():
    x = core.as_vector([1, 2], "real")
    with pytest.raises(core.DimensionMismatch):
        core.inner(x, core.as_vector([1, 2, 3], "real"))
    with pytest.raises(core.FieldMismatch):
        core.inner(x, core.as_vector([1, 2], "complex"))


@given(vec_strategy(4, cplx=True), vec_strategy(4, cplx=True))
@settings(max_examples=60, deadline=None)
def test_inner_axioms(x, y):
    # conjugate symmetry and nonnegativity of the quadratic term
    assert core.inner(x, y) == pytest.approx(
        np.conj(core.inner(y, x)), abs=1e-10)
    xx = core.inner(x, x)
    assert abs(xx.imag) <= 1e-12
    assert xx.real >= 0.0


@given(vec_strategy(3, cplx=True), vec_strategy(3, cplx=True),
       vec_strategy(3, cplx=True))
@settings(max_examples=40, deadline=None)
def test_inner_linearity_first_argument(x, y, z):
    lam = 2.0 - 0.5j
    lhs = core.inner(lam * x + y, z)
    rhs = lam * core.inner(x, z) + core.inner(y, z)
    scale = max(1.0, abs(lhs), abs(rhs))
    assert abs(lhs - rhs) <= 1e-10 * scale


@given(vec_strategy(5, cplx=True), vec_strategy(5, cplx=True))
@settings(max_examples=60, deadline=None)
def test_schwarz_and_parallelogram(x, y):
    ip = core.inner(x, y)
    nx2, ny2 = core.norm_sq(x), core.norm_sq(y)
    scale = max(nx2 * ny2, 1e-14)
    assert abs(ip) ** 2 <= nx2 * ny2 + 1e-10 * scale
    # parallelogram: |x+y|^2 + |x-y|^2 = 2(|x|^2 + |y|^2)
    lhs = core.norm_sq(x + y) + core.norm_sq(x - y)
    rhs = 2 * (nx2 + ny2)
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, rhs)


def test_schwarz_equality_iff_rank_one():
    rng = np.random.default_rng(7)
    for field in core.FIELDS:
        x = core.random_vector(rng, 4, field)
        lam = core.random_scalar(rng, field)
        y = lam * x
        nx2, ny2 = core.norm_sq(x), core.norm_sq(y)
        gap = nx2 * ny2 - abs(core.inner(x, y)) ** 2
        assert abs(gap) <= 1e-10 * max(nx2 * ny2, 1.0)
        # independent pair: 2x2 Gram determinant strictly positive
        z = core.random_vector(rng, 4, field)
        gram = nx2 * core.norm_sq(z) - abs(core.inner(x, z)) ** 2
        assert gram > 1e-12 * nx2 * core.norm_sq(z)


@given(vec_strategy(4, cplx=True), vec_strategy(4, cplx=True))
@settings(max_examples=60, deadline=None)
def test_polarization_complex(x, y):
    # 4<x,y> = |x+y|^2 - |x-y|^2 + i|x+iy|^2 - i|x-iy|^2
    rec = (core.norm_sq(x + y) - core.norm_sq(x - y)
           + 1j * core.norm_sq(x + 1j * y) - 1j * core.norm_sq(x - 1j * y))
    ip = core.inner(x, y)
    assert abs(rec / 4 - ip) <= 1e-10 * max(1.0, abs(ip))


@given(vec_strategy(4), vec_strategy(4))
@settings(max_examples=60, deadline=None)
def test_polarization_real(x, y):
    rec = 0.25 * (core.norm_sq(x + y) - core.norm_sq(x - y))
    ip = core.inner(x, y)
    assert abs(rec - ip) <= 1e-10 * max(1.0, abs(ip))


# -------------------------------------------------------- complexification


def test_complex_inner_reductions():
    e1 = core.as_vector([1, 0], "real")
    e2 = core.as_vector([0, 1], "real")
    zero = core.as_vector([0, 0], "real")
    rng = np.random.default_rng(3)
    x, xp = rng.standard_normal(2), rng.standard_normal(2)
    w = core.CVector(x, zero)
    wp = core.CVector(xp, zero)
    got = core.complex_inner(w, wp)
    assert got == pytest.approx(core.inner(x, xp))
    assert got.imag == pytest.approx(0.0)

    w = core.CVector(e1, e2)
    val = core.complex_inner(w, core.conj_vector(w))
    # oracle: (|x|^2 - |y|^2) + 2i<x,y>
    oracle = (core.norm_sq(e1) - core.norm_sq(e2)
              + 2j * core.inner(e1, e2))
    assert val == pytest.approx(oracle)
    assert val == pytest.approx(0.0)

    w = core.CVector(e1, e1)
    assert core.complex_inner(w, w) == pytest.approx(2.0)


def test_complex_inner_matches_isomorphism():
    rng = np.random.default_rng(11)
    for _ in range(40):
        dim = int(rng.integers(1, 7))
        w = core.CVector(rng.standard_normal(dim), rng.standard_normal(dim))
        v = core.CVector(rng.standard_normal(dim), rng.standard_normal(dim))
        got = core.complex_inner(w, v)
        want = core.inner(core.to_complex_array(w), core.to_complex_array(v))
        assert got == pytest.approx(want, abs=1e-12)


def test_complexification_consistency_squared():
    # |<w, conj(w)>|^2 = (|x|^2 - |y|^2)^2 + 4<x,y>^2
    rng = np.random.default_rng(5)
    for _ in range(50):
        dim = int(rng.integers(1, 8))
        x, y = rng.standard_normal(dim), rng.standard_normal(dim)
        w = core.CVector(x, y)
        lhs = abs(core.complex_inner(w, core.conj_vector(w))) ** 2
        rhs = (core.norm_sq(x) - core.norm_sq(y)) ** 2 \
            + 4 * core.inner(x, y) ** 2
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


def test_conj_vector_involution_and_scaling():
    rng = np.random.default_rng(9)
    x, y = rng.standard_normal(3), rng.standard_normal(3)
    w = core.CVector(x, y)
    back = core.conj_vector(core.conj_vector(w))
    assert np.allclose(back.re, w.re) and np.allclose(back.im, w.im)
    # |lam * w| = |lam| |w| and scaling acts like multiplication by i
    lam = 1.25 - 0.75j
    scaled = core.cplx_scale(lam, w)
    assert core.cplx_norm(scaled) == pytest.approx(
        abs(lam) * core.cplx_norm(w))
    v = core.CVector(rng.standard_normal(3), rng.standard_normal(3))
    got = core.complex_inner(core.cplx_scale(1j, w), v)
    assert got == pytest.approx(1j * core.complex_inner(w, v))


# ---------------------------------------------------------------- weights


def test_weighted_inner_examples():
    e1 = core.as_vector([1, 0], "real")
    e2 = core.as_vector([0, 1], "real")
    rng = np.random.default_rng(2)
    x, y = rng.standard_normal(2), rng.standard_normal(2)
    assert core.weighted_inner([1.0], [x], [y]) == pytest.approx(
        core.inner(x, y))
    p = core.WeightVector(np.array([0.5, 0.5]), normalized=True)
    assert core.weighted_inner(p, [e1, e2], [e1, e2]) == pytest.approx(1.0)
    assert core.weighted_inner(p, [e1, e1], [e2, e2]) == pytest.approx(0.0)


def test_weight_validation():
    with pytest.raises(ValueError):
        core.WeightVector(np.array([0.5, -0.1]))
    with pytest.raises(ValueError):
        core.WeightVector(np.array([0.5, 0.2]), normalized=True)
    with pytest.raises(core.DimensionMismatch):
        core.weighted_inner([1.0, 1.0], [np.ones(2)], [np.ones(2)])
    with pytest.raises(ValueError):
        core.weighted_inner([-1.0], [np.ones(2)], [np.ones(2)])


# ---------------------------------------------------------- serialization


def test_scalar_tokens_roundtrip():
    vals = [0.0, 1.5, -2.25, 1e-17, 3.141592653589793]
    for v in vals:
        assert core.parse_scalar(core.format_scalar(v)) == v
    zs = [1 + 2j, -1.5 - 0.25j, 0 - 1j, 2.5 + 0j]
    for z in zs:
        assert core.parse_scalar(core.format_scalar(z)) == z
    assert core.parse_scalar("1+2i") == 1 + 2j
    assert core.parse_scalar("-3.5i") == -3.5j
    assert core.parse_scalar("4") == 4.0


def test_csv_roundtrip(tmp_path):
    rng = np.random.default_rng(4)
    vectors = [rng.standard_normal(3),
               rng.standard_normal(4) + 1j * rng.standard_normal(4)]
    path = tmp_path / "vectors.csv"
    core.write_vectors_csv(path, vectors)
    back = core.read_vectors_csv(path)
    assert len(back) == 2
    assert np.array_equal(back[0], vectors[0])
    assert np.array_equal(back[1], vectors[1])


def test_json_roundtrip():
    rng = np.random.default_rng(6)
    x = rng.standard_normal(5)
    z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    for v in (x, z):
        data = json.loads(json.dumps(core.vector_to_json(v)))
        assert np.array_equal(core.vector_from_json(data), v)


# ----------------------------------------------------------------- misc


def test_random_unit_has_unit_norm():
    rng = np.random.default_rng(8)
    for field in core.FIELDS:
        u = core.random_unit(rng, 6, field)
        assert core.norm(u) == pytest.approx(1.0)
        assert core.field_of(u) == field

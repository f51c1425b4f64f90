"""Nonnegative Hermitian forms and the gap functionals built on them.

A Hermitian form on K^n is held as its matrix G, acting through

    (x, y)_G = conj(y)^T G x,

linear in x and conjugate symmetric; it is *nonnegative* when (x, x)_G
>= 0 for every x, i.e. G is positive semidefinite.  The identity matrix
recovers the ambient inner product.  Forms are ordered by G1 <= G2 iff
G2 - G1 is nonnegative, equivalently the G2-seminorm dominates the
G1-seminorm everywhere.

On this cone live the Schwarz-gap functionals (all nonnegative):

    sigma   = |x|_G |y|_G - |(x,y)_G|
    sigma_r = |x|_G |y|_G - Re (x,y)_G
    tau     = (|x|_G + |y|_G)^2 - |x+y|_G^2          (= 2 sigma_r)
    delta   = |x|_G^2 |y|_G^2 - |(x,y)_G|^2
    delta_r = |x|_G^2 |y|_G^2 - (Re (x,y)_G)^2
    beta    = sqrt(delta)
    gamma   = delta / |y|_G^2                        (needs |y|_G > 0)

sigma, sigma_r, delta, beta and gamma are superadditive in G and
nondecreasing for the form order; delta is *strongly* superadditive
with the determinant bonus (|x|_1 |y|_2 - |y|_1 |x|_2)^2, and gamma is
the infimum of |x - lam*y|_G^2 over scalars lam, attained at
lam* = (x,y)_G / |y|_G^2.

The module also builds the concrete form families the functionals are
applied to: orthonormal-family forms (x,y)_F = sum_i <x,e_i><e_i,y>
with their complements, bordered Gram determinant forms p and q, and
operator-induced forms <Ax, Ay>, <Dx, y>.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .catalog import CheckReport, make_report
from .core import (ABS_FLOOR, DegenerateDenominator, DimensionMismatch,
                   NonOrthonormalFamily, ZeroVector)

FUNCTIONAL_KINDS = ("sigma", "sigma_r", "tau", "delta", "delta_r",
                    "beta", "gamma")


# ----------------------------------------------------------------- forms


@dataclass(frozen=True)
class HermitianForm:
    """Matrix of a nonnegative Hermitian form on K^n."""

    matrix: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.matrix)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise DimensionMismatch("form matrix must be square")
        if not np.iscomplexobj(g):
            g = g.astype(np.float64)
        object.__setattr__(self, "matrix", g)
        top = max(1.0, float(np.abs(g).max(initial=0.0)))
        if np.abs(g - g.conj().T).max(initial=0.0) > 1e-12 * top:
            raise ValueError("form matrix is not Hermitian")
        eigs = np.linalg.eigvalsh(g)
        lo, hi = float(eigs[0]), float(eigs[-1])
        if lo < -1e-10 * max(hi, 1.0):
            raise ValueError(f"form is not nonnegative (min eig {lo:g})")

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def field_tag(self) -> str:
        return "complex" if np.iscomplexobj(self.matrix) else "real"

    def __add__(self, other: "HermitianForm") -> "HermitianForm":
        return HermitianForm(self.matrix + _mat(other))


@dataclass(frozen=True)
class FunctionalValue:
    kind: str
    value: float

    def __post_init__(self):
        if self.kind not in FUNCTIONAL_KINDS:
            raise ValueError(f"unknown functional kind {self.kind!r}")

    def __float__(self) -> float:
        return self.value


def _mat(G) -> np.ndarray:
    return G.matrix if isinstance(G, HermitianForm) else np.asarray(G)


def identity_form(dim: int) -> HermitianForm:
    return HermitianForm(np.eye(dim))


def form_eval(G, x: np.ndarray, y: np.ndarray):
    """(x, y)_G = conj(y)^T G x; linear in x, conjugate symmetric."""
    g = _mat(G)
    if g.shape[0] != x.shape[0] or g.shape[0] != y.shape[0]:
        raise DimensionMismatch("form and vectors differ in dimension")
    v = np.vdot(y, g @ x)
    if np.iscomplexobj(g) or np.iscomplexobj(x) or np.iscomplexobj(y):
        return complex(v)
    return float(v.real)


def seminorm_sq(G, x: np.ndarray) -> float:
    """(x, x)_G clipped at zero against roundoff."""
    v = np.vdot(x, _mat(G) @ x)
    return max(float(v.real), 0.0)


def seminorm(G, x: np.ndarray) -> float:
    return float(np.sqrt(seminorm_sq(G, x)))


def form_order_leq(G1, G2, tol: float = 1e-10) -> bool:
    """True iff G2 - G1 is nonnegative (form order G1 <= G2)."""
    h = _mat(G2) - _mat(G1)
    eigs = np.linalg.eigvalsh(h)
    scale = max(1.0, float(np.abs(eigs).max(initial=0.0)))
    return float(eigs[0]) >= -tol * scale


# ----------------------------------------------------------- functionals


def functional(kind: str, G, x: np.ndarray, y: np.ndarray) -> FunctionalValue:
    """Evaluate one of the Schwarz-gap functionals of the form G at (x, y)."""
    g = _mat(G)
    nx = seminorm(g, x)
    ny = seminorm(g, y)
    if kind in ("sigma", "sigma_r", "delta", "delta_r", "beta", "gamma"):
        ip = form_eval(g, x, y)
        if kind == "sigma":
            val = nx * ny - abs(ip)
        elif kind == "sigma_r":
            val = nx * ny - float(np.real(ip))
        elif kind == "delta":
            val = nx * nx * ny * ny - abs(ip) ** 2
        elif kind == "delta_r":
            val = nx * nx * ny * ny - float(np.real(ip)) ** 2
        elif kind == "beta":
            val = float(np.sqrt(max(nx * nx * ny * ny - abs(ip) ** 2, 0.0)))
        else:  # gamma
            d = ny * ny
            if d <= 1e-12 * max(1.0, nx * nx):
                raise DegenerateDenominator("gamma needs |y|_G > 0")
            val = (nx * nx * ny * ny - abs(ip) ** 2) / d
    elif kind == "tau":
        val = (nx + ny) ** 2 - seminorm_sq(g, x + y)
    else:
        raise ValueError(f"unknown functional kind {kind!r}")
    return FunctionalValue(kind, float(val))


def lemma_infimum_check(G, x: np.ndarray, y: np.ndarray,
                        grid: int = 24) -> CheckReport:
    """Variational characterization of gamma.

    min over scalars lam of |x - lam*y|_G^2 equals
    gamma = (|x|_G^2 |y|_G^2 - |(x,y)_G|^2) / |y|_G^2, attained at
    lam* = (x,y)_G / |y|_G^2.  The sampled minimum over a lam-grid
    around lam* must stay above gamma, and the value at lam* must hit
    it.  Returned as a report whose chain encodes both facts.
    """
    g = _mat(G)
    ny2 = seminorm_sq(g, y)
    nx2 = seminorm_sq(g, x)
    if ny2 <= 1e-12 * max(1.0, nx2):
        raise DegenerateDenominator("infimum lemma needs |y|_G > 0")
    ip = form_eval(g, x, y)
    gam = (nx2 * ny2 - abs(ip) ** 2) / ny2
    lam_star = ip / ny2
    radius = 2.0 * max(abs(lam_star), np.sqrt(max(nx2 / ny2, 0.0)), 1.0)

    def val(lam) -> float:
        return seminorm_sq(g, x - lam * y)

    offs = np.linspace(-radius, radius, grid)
    if np.iscomplexobj(g) or np.iscomplexobj(x) or np.iscomplexobj(y):
        samples = [val(lam_star + a + 1j * b) for a in offs for b in offs]
    else:
        samples = [val(float(np.real(lam_star)) + a) for a in offs]
    sampled_min = min(samples)
    at_star = val(lam_star)
    scale = max(nx2, ny2, 1.0)
    # gamma = value at lam* (closed pair), and gamma <= any sampled value
    chain = [("closed form", gam),
             ("value at minimizer", at_star),
             ("closed form", gam),
             ("sampled min", sampled_min)]
    return make_report("forms.infimum", chain, scale)


# ------------------------------------------------- orthonormal families


@dataclass(frozen=True)
class OrthonormalFamily:
    """Rows of `vectors` are pairwise orthonormal vectors."""

    vectors: np.ndarray

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vectors))
        object.__setattr__(self, "vectors", v)
        gram = v @ v.conj().T
        defect = float(np.abs(gram - np.eye(v.shape[0])).max())
        object.__setattr__(self, "_defect", defect)
        if defect > 1e-10:
            raise NonOrthonormalFamily(f"gram defect {defect:g}")

    @property
    def gram_defect(self) -> float:
        return self._defect

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])


def family_coefficients(F: OrthonormalFamily, x: np.ndarray) -> np.ndarray:
    """Coefficients <x, e_i> for every member of the family."""
    return F.vectors.conj() @ x


def family_form(F: OrthonormalFamily) -> HermitianForm:
    """(x,y)_F = sum_i <x,e_i><e_i,y>; matrix sum_i e_i e_i^H."""
    v = F.vectors
    return HermitianForm(v.T @ v.conj())


def complement_form(F: OrthonormalFamily) -> HermitianForm:
    """<x,y> - (x,y)_F; nonnegative by Bessel's inequality."""
    v = F.vectors
    return HermitianForm(np.eye(v.shape[1]) - v.T @ v.conj())


def family_union(F: OrthonormalFamily,
                 G: OrthonormalFamily) -> OrthonormalFamily:
    return OrthonormalFamily(np.vstack([F.vectors, G.vectors]))


def random_orthonormal(rng: np.random.Generator, dim: int, size: int,
                       field: str) -> OrthonormalFamily:
    """QR of a Gaussian matrix; first `size` columns."""
    if size > dim:
        raise DimensionMismatch("family larger than the ambient dimension")
    a = rng.standard_normal((dim, size))
    if field == "complex":
        a = a + 1j * rng.standard_normal((dim, size))
    q, r = np.linalg.qr(a)
    # fix the phase so the sampler is insensitive to QR sign conventions
    phase = np.sign(np.diagonal(r).real)
    phase[phase == 0] = 1.0
    return OrthonormalFamily((q * phase).T)


# ------------------------------------------------------------ Gram forms


def gram_matrix(vectors: Sequence[np.ndarray]) -> np.ndarray:
    v = np.atleast_2d(np.asarray(vectors))
    return v @ v.conj().T


def gram_det(vectors: Sequence[np.ndarray]) -> float:
    """Gram determinant; >= 0, zero iff the family is dependent."""
    d = np.linalg.det(gram_matrix(vectors))
    return float(d.real)


def _adjugate(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    if n == 1:
        return np.ones_like(m)
    adj = np.empty_like(m)
    rows = np.arange(n)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(m, i, axis=0), j, axis=1)
            adj[j, i] = (-1) ** (i + j) * np.linalg.det(minor)
    return adj


def bordered_gram(vectors: Sequence[np.ndarray], x: np.ndarray,
                  y: np.ndarray):
    """Determinant of the Gram-type matrix bordered by x (rows) and y
    (columns): first row (<x,y>, <x,x_1>, ..), first column below it
    (<x_i,y>), trailing block the plain Gram matrix.  Sesquilinear in
    (x, y); equals the Gram determinant of (x, x_1, ..., x_n) when
    y = x."""
    v = np.atleast_2d(np.asarray(vectors))
    n = v.shape[0]
    dtype = np.result_type(v.dtype, x.dtype, y.dtype)
    m = np.empty((n + 1, n + 1), dtype=dtype)
    m[0, 0] = np.vdot(y, x)
    m[0, 1:] = v.conj() @ x
    m[1:, 0] = v @ np.conj(y)
    m[1:, 1:] = v @ v.conj().T
    d = np.linalg.det(m)
    return complex(d) if np.iscomplexobj(m) else float(d)


def gram_form_p(basis: Sequence[np.ndarray]) -> HermitianForm:
    """The bordered-determinant form p(x,y); p(x,x) is the Gram
    determinant of (x, basis...), always >= 0, vanishing iff x lies in
    the span of the basis."""
    v = np.atleast_2d(np.asarray(basis))
    norms = np.linalg.norm(v, axis=1)
    if np.any(norms <= 0):
        raise ZeroVector("basis contains the null vector")
    x_cols = v.T  # columns are the basis vectors
    m = x_cols.conj().T @ x_cols
    det_m = np.linalg.det(m)
    p = det_m.real * np.eye(v.shape[1], dtype=v.dtype) \
        - x_cols @ _adjugate(m) @ x_cols.conj().T
    p = 0.5 * (p + p.conj().T)
    return HermitianForm(p)


def gram_form_q(basis: Sequence[np.ndarray]) -> HermitianForm:
    """q(x,y) = <x,y> * prod |x_i|^2 - p(x,y); nonnegative as well."""
    v = np.atleast_2d(np.asarray(basis))
    norms_sq = np.sum(np.abs(v) ** 2, axis=1)
    if np.any(norms_sq <= 0):
        raise ZeroVector("basis contains the null vector")
    prod = float(np.prod(norms_sq))
    q = prod * np.eye(v.shape[1], dtype=v.dtype) - gram_form_p(basis).matrix
    q = 0.5 * (q + q.conj().T)
    return HermitianForm(q)


# --------------------------------------------------------- operator forms


def operator_norm(a: np.ndarray) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(a, 2))


def operator_lower_bound(a: np.ndarray) -> float:
    """Largest m with |Ax| >= m|x| for all x: the smallest singular
    value."""
    return float(np.linalg.svd(a, compute_uv=False)[-1])


def _sigma_terms(gx, gy, gxy):
    return float(np.sqrt(max(gx, 0.0) * max(gy, 0.0))) - abs(gxy)


def _delta_terms(gx, gy, gxy):
    return float(gx * gy - abs(gxy) ** 2)


def _pair_stats(a: np.ndarray, x: np.ndarray, y: np.ndarray):
    ax, ay = a @ x, a @ y
    return (float(np.vdot(ax, ax).real), float(np.vdot(ay, ay).real),
            complex(np.vdot(ay, ax)))


def operator_norm_chain(a: np.ndarray, x: np.ndarray,
                        y: np.ndarray) -> list[CheckReport]:
    """Gap domination by the operator norm: with N = |A|,

      (a) N^2 (|x||y| - |<x,y>|)     >= |Ax||Ay| - |<Ax,Ay>|      (>= 0)
      (b) N^4 (|x|^2|y|^2 - |<x,y>|^2) >= same with squares        (>= 0)
      (c) N^2 (delta of x,y) >= max(|x|^2/|Ax|^2, |y|^2/|Ay|^2) *
          (delta of Ax,Ay), an improvement of (b) when Ax, Ay != 0.
    """
    big_n = operator_norm(a)
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    ip = np.vdot(y, x)
    gax, gay, gaxy = _pair_stats(a, x, y)
    scale = max(big_n ** 4 * (nx * ny) ** 2, 1.0)
    reports = [
        make_report("forms.op_norm.sigma", [
            ("zero", 0.0),
            ("transformed gap", _sigma_terms(gax, gay, gaxy)),
            ("norm-scaled gap", big_n ** 2 * (nx * ny - abs(ip))),
        ], max(big_n ** 2 * nx * ny, 1.0)),
        make_report("forms.op_norm.delta", [
            ("zero", 0.0),
            ("transformed gap", _delta_terms(gax, gay, gaxy)),
            ("norm-scaled gap",
             big_n ** 4 * _delta_terms(nx * nx, ny * ny, ip)),
        ], scale),
    ]
    if gax > ABS_FLOOR and gay > ABS_FLOOR:
        ratio = max(nx * nx / gax, ny * ny / gay)
        reports.append(make_report("forms.op_norm.delta_ratio", [
            ("zero", 0.0),
            ("ratio-scaled transformed gap",
             ratio * _delta_terms(gax, gay, gaxy)),
            ("norm-scaled gap",
             big_n ** 2 * _delta_terms(nx * nx, ny * ny, ip)),
        ], scale))
    return reports


def operator_lower_chain(b: np.ndarray, x: np.ndarray,
                         y: np.ndarray) -> list[CheckReport]:
    """Lower-bounded operators |Bx| >= m|x| dominate the plain gaps:

      (a) |Bx||By| - |<Bx,By>|        >= m^2 (|x||y| - |<x,y>|)   (>= 0)
      (b) squared version with m^4                                 (>= 0)
      (c) delta of Bx,By >= m^2 max(|Bx|^2/|x|^2, |By|^2/|y|^2) *
          (delta of x,y) for x, y != 0, improving (b).
    """
    m = operator_lower_bound(b)
    hyp_ok = m > 0
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    ip = np.vdot(y, x)
    gbx, gby, gbxy = _pair_stats(b, x, y)
    scale = max(gbx * gby, 1.0)
    reports = [
        make_report("forms.op_lower.sigma", [
            ("zero", 0.0),
            ("m-scaled gap", m ** 2 * (nx * ny - abs(ip))),
            ("transformed gap", _sigma_terms(gbx, gby, gbxy)),
        ], max(np.sqrt(gbx * gby), 1.0), hypothesis_ok=hyp_ok),
        make_report("forms.op_lower.delta", [
            ("zero", 0.0),
            ("m-scaled gap", m ** 4 * _delta_terms(nx * nx, ny * ny, ip)),
            ("transformed gap", _delta_terms(gbx, gby, gbxy)),
        ], scale, hypothesis_ok=hyp_ok),
    ]
    if nx > ABS_FLOOR and ny > ABS_FLOOR:
        ratio = max(gbx / (nx * nx), gby / (ny * ny))
        reports.append(make_report("forms.op_lower.delta_ratio", [
            ("zero", 0.0),
            ("ratio-scaled gap",
             m ** 2 * ratio * _delta_terms(nx * nx, ny * ny, ip)),
            ("transformed gap", _delta_terms(gbx, gby, gbxy)),
        ], scale, hypothesis_ok=hyp_ok))
    return reports


def _psd_stats(p: np.ndarray, x: np.ndarray, y: np.ndarray):
    px = p @ x
    return (max(float(np.vdot(x, px).real), 0.0),
            max(float(np.vdot(y, p @ y).real), 0.0),
            complex(np.vdot(y, px)))


def operator_interval_chain(u: np.ndarray, x: np.ndarray,
                            y: np.ndarray) -> list[CheckReport]:
    """Splitting by an operator 0 <= U <= I refines the Schwarz gap:
    the U-part gap plus the (I-U)-part gap sits between 0 and the full
    gap, at sigma, delta and beta (square root) levels.
    """
    eigs = np.linalg.eigvalsh(0.5 * (u + u.conj().T))
    herm_ok = float(np.abs(u - u.conj().T).max()) <= 1e-10 * max(
        1.0, float(np.abs(u).max()))
    hyp_ok = herm_ok and eigs[0] >= -1e-10 and eigs[-1] <= 1.0 + 1e-10
    note = "" if hyp_ok else "operator not in [0, I]"
    comp = np.eye(u.shape[0], dtype=u.dtype) - u
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    ip = np.vdot(y, x)
    ux, uy, uxy = _psd_stats(u, x, y)
    cx, cy, cxy = _psd_stats(comp, x, y)
    s_split = _sigma_terms(ux, uy, uxy) + _sigma_terms(cx, cy, cxy)
    d_split = _delta_terms(ux, uy, uxy) + _delta_terms(cx, cy, cxy)
    b_split = (np.sqrt(max(_delta_terms(ux, uy, uxy), 0.0))
               + np.sqrt(max(_delta_terms(cx, cy, cxy), 0.0)))
    dxy = _delta_terms(nx * nx, ny * ny, ip)
    return [
        make_report("forms.op_interval.sigma", [
            ("zero", 0.0), ("split gaps", s_split),
            ("full gap", nx * ny - abs(ip)),
        ], max(nx * ny, 1.0), hypothesis_ok=hyp_ok, note=note),
        make_report("forms.op_interval.delta", [
            ("zero", 0.0), ("split gaps", d_split), ("full gap", dxy),
        ], max((nx * ny) ** 2, 1.0), hypothesis_ok=hyp_ok, note=note),
        make_report("forms.op_interval.beta", [
            ("zero", 0.0), ("split gaps", b_split),
            ("full gap", np.sqrt(max(dxy, 0.0))),
        ], max(nx * ny, 1.0), hypothesis_ok=hyp_ok, note=note),
    ]


def operator_posdef_chain(d: np.ndarray, x: np.ndarray,
                          y: np.ndarray) -> list[CheckReport]:
    """Positive definite D >= gamma*I dominates the plain gaps:

      (a) <Dx,x>^1/2 <Dy,y>^1/2 - |<Dx,y>| >= gamma * sigma gap  (>= 0)
      (b) delta-level version with gamma^2                        (>= 0)
      (c) delta-level with gamma * max(<Dx,x>/|x|^2, <Dy,y>/|y|^2),
          improving (b) for x, y != 0.
    """
    eigs = np.linalg.eigvalsh(0.5 * (d + d.conj().T))
    herm_ok = float(np.abs(d - d.conj().T).max()) <= 1e-10 * max(
        1.0, float(np.abs(d).max()))
    gam = float(eigs[0])
    hyp_ok = herm_ok and gam > 0
    note = "" if hyp_ok else "operator not positive definite"
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    ip = np.vdot(y, x)
    dx, dy, dxy = _psd_stats(d, x, y)
    dgap = _delta_terms(dx, dy, dxy)
    plain = _delta_terms(nx * nx, ny * ny, ip)
    scale = max(dx * dy, 1.0)
    reports = [
        make_report("forms.op_posdef.sigma", [
            ("zero", 0.0),
            ("gamma-scaled gap", gam * (nx * ny - abs(ip))),
            ("transformed gap", _sigma_terms(dx, dy, dxy)),
        ], max(np.sqrt(dx * dy), 1.0), hypothesis_ok=hyp_ok, note=note),
        make_report("forms.op_posdef.delta", [
            ("zero", 0.0),
            ("gamma-scaled gap", gam ** 2 * plain),
            ("transformed gap", dgap),
        ], scale, hypothesis_ok=hyp_ok, note=note),
    ]
    if nx > ABS_FLOOR and ny > ABS_FLOOR:
        ratio = max(dx / (nx * nx), dy / (ny * ny))
        reports.append(make_report("forms.op_posdef.delta_ratio", [
            ("zero", 0.0),
            ("ratio-scaled gap", gam * ratio * plain),
            ("transformed gap", dgap),
        ], scale, hypothesis_ok=hyp_ok, note=note))
    return reports


def operator_forms(a: np.ndarray, x: np.ndarray,
                   y: np.ndarray) -> list[CheckReport]:
    """All operator-induced chains applicable to the matrix a.

    The norm chain always applies; the lower-bound chain needs a
    positive smallest singular value; the interval chain needs
    0 <= a <= I; the positive-definite chain needs a Hermitian with
    positive smallest eigenvalue.  Inapplicable families come back
    flagged HypothesisFailed rather than raising.
    """
    return (operator_norm_chain(a, x, y)
            + operator_lower_chain(a, x, y)
            + operator_interval_chain(a, x, y)
            + operator_posdef_chain(a, x, y))


# --------------------------------------------------------------- samplers


def random_psd_form(rng: np.random.Generator, dim: int, field: str,
                    definite: bool = False) -> HermitianForm:
    """A^H A for Gaussian A; adds 1e-3 * identity when definite."""
    a = rng.standard_normal((dim, dim))
    if field == "complex":
        a = a + 1j * rng.standard_normal((dim, dim))
    g = a.conj().T @ a
    if definite:
        g = g + 1e-3 * np.eye(dim)
    return HermitianForm(0.5 * (g + g.conj().T))

"""Primitives for finite dimensional real and complex inner product spaces.

A vector is a plain one dimensional numpy array: ``float64`` for a real
space, ``complex128`` for a complex one.  The inner product is linear in
the first argument and conjugate linear in the second,

    inner(x, y) = sum_k x[k] * conj(y[k]),

so on real arrays it is the ordinary dot product and ``inner(x, x)`` is
always real and nonnegative.  On top of that the module provides

* the complexification of a real space: pairs w = (re, im) standing for
  re + i*im, with the product
      complex_inner(w, v) = <w.re, v.re> + <w.im, v.im>
                            + i*(<w.im, v.re> - <w.re, v.im>),
  which reduces to the real inner product when both imaginary parts
  vanish and satisfies complex_inner(w, w) = |w.re|^2 + |w.im|^2;
* weighted direct sums: finite families X = (x_1, ..., x_n) with
  nonnegative weights p and
      weighted_inner(p, X, Y) = sum_i p_i * inner(x_i, y_i);
* deterministic vector/weight samplers driven by an explicit Generator;
* CSV and JSON serialization ("a+bi" tokens, [re] or [[re, im]] arrays).

Everything here is pure and operates on immutable data, so concurrent
evaluation from many workers is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# tolerances used across the package: margins are measured relative to the
# natural scale of each inequality (typically a product of norms), with an
# absolute floor guarding the zero-scale corner
REL_TOL = 1e-9
EQUALITY_TOL = 1e-9
ABS_FLOOR = 1e-14
DIM_CAP = 64

FIELDS = ("real", "complex")


# ---------------------------------------------------------------- errors


class IneqError(Exception):
    """Base class for all package specific failures."""


class DimensionMismatch(IneqError):
    pass


class FieldMismatch(IneqError):
    pass


class DegenerateDenominator(IneqError):
    """A functional that divides by a seminorm received a null vector."""


class NonOrthonormalFamily(IneqError):
    pass


class ZeroVector(IneqError):
    pass


class DependentSpanningSet(IneqError):
    pass


class OrthogonalQuery(IneqError):
    """Query vector orthogonal to the whole spanning set."""


class SlotMissing(IneqError):
    """A check instance lacks a slot the check requires."""


class GeneratorExhausted(IneqError):
    """A constrained sampler hit its rejection cap."""


# ---------------------------------------------------------------- vectors


def field_of(x: np.ndarray) -> str:
    """Return 'real' or 'complex' according to the array dtype."""
    if x.dtype.kind == "c":
        return "complex"
    return "real"


def as_vector(data: Iterable, field: str = "real") -> np.ndarray:
    """Build a vector of the given field from any numeric iterable."""
    if field not in FIELDS:
        raise FieldMismatch(f"unknown field {field!r}")
    dtype = np.complex128 if field == "complex" else np.float64
    x = np.asarray(list(data) if not isinstance(data, np.ndarray) else data,
                   dtype=dtype)
    if x.ndim != 1 or x.size == 0:
        raise DimensionMismatch("vectors are nonempty one dimensional arrays")
    return x


def _check_pair(x: np.ndarray, y: np.ndarray) -> None:
    if x.shape != y.shape:
        raise DimensionMismatch(f"dimensions {x.shape} vs {y.shape}")
    if (x.dtype.kind == "c") != (y.dtype.kind == "c"):
        raise FieldMismatch("mixing real and complex vectors")


def inner(x: np.ndarray, y: np.ndarray):
    """Inner product, linear in x and conjugate linear in y."""
    _check_pair(x, y)
    # vdot conjugates its first argument: vdot(y, x) = sum conj(y_k) x_k
    v = np.vdot(y, x)
    if x.dtype.kind != "c":
        return float(v)
    return complex(v)


def norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(x))


def norm_sq(x: np.ndarray) -> float:
    """Squared norm, computed without the square root detour."""
    v = np.vdot(x, x)
    return float(v.real)


# --------------------------------------------------- complexified vectors


@dataclass(frozen=True)
class CVector:
    """Element re + i*im of the complexification of a real space.

    Both parts are real vectors of a common dimension.  The class is a
    thin value holder; the algebra lives in the module functions below.
    """

    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        if self.re.shape != self.im.shape:
            raise DimensionMismatch("re/im parts differ in dimension")
        if self.re.dtype.kind == "c" or self.im.dtype.kind == "c":
            raise FieldMismatch("complexified parts must be real vectors")

    @property
    def dim(self) -> int:
        return int(self.re.shape[0])


def complex_inner(w: CVector, v: CVector) -> complex:
    """Inner product on the complexification.

    complex_inner(w, v) = <w.re, v.re> + <w.im, v.im>
                          + i*(<w.im, v.re> - <w.re, v.im>)
    """
    if w.re.shape != v.re.shape:
        raise DimensionMismatch("complexified vectors differ in dimension")
    rr = float(np.dot(w.re, v.re))
    ii = float(np.dot(w.im, v.im))
    ir = float(np.dot(w.im, v.re))
    ri = float(np.dot(w.re, v.im))
    return complex(rr + ii, ir - ri)


def conj_vector(w: CVector) -> CVector:
    """Conjugate re + i*im -> re - i*im; an involution."""
    return CVector(w.re, -w.im)


def cplx_scale(lam: complex, w: CVector) -> CVector:
    """Scalar multiplication (s + it)*(re + i*im)."""
    s, t = float(np.real(lam)), float(np.imag(lam))
    return CVector(s * w.re - t * w.im, t * w.re + s * w.im)


def cplx_add(w: CVector, v: CVector) -> CVector:
    if w.re.shape != v.re.shape:
        raise DimensionMismatch("complexified vectors differ in dimension")
    return CVector(w.re + v.re, w.im + v.im)


def cplx_norm_sq(w: CVector) -> float:
    return float(np.dot(w.re, w.re) + np.dot(w.im, w.im))


def cplx_norm(w: CVector) -> float:
    return float(np.sqrt(cplx_norm_sq(w)))


def to_complex_array(w: CVector) -> np.ndarray:
    """Isomorphism onto C^n: complex_inner(w, v) = inner(to(w), to(v))."""
    return w.re + 1j * w.im


# ---------------------------------------------------------------- weights


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights, optionally summing to one."""

    weights: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        object.__setattr__(self, "weights", w)
        if w.ndim != 1 or w.size == 0:
            raise DimensionMismatch("weights form a nonempty 1-d array")
        if np.any(w < 0):
            raise ValueError("negative weight")
        if self.normalized and abs(float(w.sum()) - 1.0) > 1e-12:
            raise ValueError("normalized weights must sum to 1")

    def __len__(self) -> int:
        return int(self.weights.size)


def weighted_inner(p, X, Y):
    """sum_i p_i * inner(x_i, y_i) over equal length vector families.

    With all p_i > 0 this is an inner product on the direct sum of
    len(p) copies of the base space; with zeros it is still a
    nonnegative Hermitian form.
    """
    w = p.weights if isinstance(p, WeightVector) else np.asarray(p, float)
    if np.any(w < 0):
        raise ValueError("negative weight")
    Xa = np.asarray(X)
    Ya = np.asarray(Y)
    if len(w) != Xa.shape[0] or len(w) != Ya.shape[0]:
        raise DimensionMismatch("weights and families differ in length")
    if Xa.shape != Ya.shape:
        raise DimensionMismatch("vector families differ in shape")
    val = np.einsum("i,ik,ik->", w, Xa, Ya.conj())
    if Xa.dtype.kind != "c" and Ya.dtype.kind != "c":
        return float(val.real)
    return complex(val)


# --------------------------------------------------------------- samplers


def random_vector(rng: np.random.Generator, dim: int, field: str,
                  scale: float = 1.0) -> np.ndarray:
    """Gaussian vector in the requested space."""
    if field == "complex":
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return (scale / np.sqrt(2.0)) * z
    return scale * rng.standard_normal(dim)


def random_unit(rng: np.random.Generator, dim: int, field: str) -> np.ndarray:
    for _ in range(64):
        x = random_vector(rng, dim, field)
        n = np.linalg.norm(x)
        if n > 1e-8:
            return x / n
    raise GeneratorExhausted("unit vector sampler")


def random_weights(rng: np.random.Generator, n: int,
                   normalized: bool = False) -> WeightVector:
    w = rng.uniform(0.1, 1.0, size=n)
    if normalized:
        w = w / w.sum()
    return WeightVector(w, normalized=normalized)


def random_scalar(rng: np.random.Generator, field: str,
                  scale: float = 1.0):
    if field == "complex":
        return complex(rng.standard_normal(), rng.standard_normal()) * scale
    return float(rng.standard_normal()) * scale


# ---------------------------------------------------------- serialization


def format_scalar(z) -> str:
    """Render a scalar as a CSV token; complex values as 'a+bi'."""
    if isinstance(z, complex) or (isinstance(z, np.generic)
                                  and z.dtype.kind == "c"):
        re, im = float(np.real(z)), float(np.imag(z))
        sign = "+" if im >= 0 or np.isnan(im) else "-"
        return f"{re!r}{sign}{abs(im)!r}i"
    return repr(float(z))


def parse_scalar(token: str):
    """Parse a CSV token: plain real, or complex written with an 'i'."""
    t = token.strip()
    if not t:
        raise ValueError("empty scalar token")
    if "i" in t or "I" in t or "j" in t or "J" in t:
        z = complex(t.replace(" ", "").replace("i", "j").replace("I", "j")
                    .replace("J", "j"))
        return z
    return float(t)


def vector_to_tokens(x: np.ndarray) -> list[str]:
    if x.dtype.kind == "c":
        return [format_scalar(complex(v)) for v in x]
    return [format_scalar(float(v)) for v in x]


def vector_from_tokens(tokens: Sequence[str]) -> np.ndarray:
    vals = [parse_scalar(t) for t in tokens]
    if any(isinstance(v, complex) for v in vals):
        return np.asarray(vals, dtype=np.complex128)
    return np.asarray(vals, dtype=np.float64)


def write_vectors_csv(path, vectors: Sequence[np.ndarray]) -> None:
    import csv

    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        for x in vectors:
            wr.writerow(vector_to_tokens(np.asarray(x)))


def read_vectors_csv(path) -> list[np.ndarray]:
    import csv

    out = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or all(not c.strip() for c in row):
                continue
            out.append(vector_from_tokens(row))
    return out


def vector_to_json(x: np.ndarray):
    """JSON form: [re, ...] for real vectors, [[re, im], ...] otherwise."""
    if x.dtype.kind == "c":
        return [[float(v.real), float(v.imag)] for v in x]
    return [float(v) for v in x]


def vector_from_json(data) -> np.ndarray:
    if data and isinstance(data[0], (list, tuple)):
        return np.asarray([complex(a, b) for a, b in data],
                          dtype=np.complex128)
    return np.asarray(data, dtype=np.float64)

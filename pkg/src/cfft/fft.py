"""Discrete Fourier transforms: reference oracle, fast path, inverse, n-D.

``dft_naive`` is the correctness oracle everything else is tested against.
``fft_fast`` produces identical values via recursive decimation-in-time
over the smallest prime factor of the length; a prime factor larger than
64 is transformed directly (quadratic in that factor), so any length
works without padding.
"""

from dataclasses import dataclass

import numpy as np

from . import field as fld
from .errors import NotInvertible, ShapeMismatch
from .field import FieldSpec


@dataclass(frozen=True, eq=False)
class Vector:
    """A length-s vector of field elements (1-D numpy array)."""

    elems: np.ndarray
    field: FieldSpec

    def __post_init__(self):
        arr = self.field.coerce(self.elems)
        if arr.ndim != 1 or arr.size < 1:
            raise ShapeMismatch("vector must be 1-D and non-empty")
        object.__setattr__(self, "elems", arr)

    def __len__(self):
        return self.elems.shape[0]


@dataclass(frozen=True, eq=False)
class Tensor:
    """An order-n tensor of field elements, row-major (C) layout."""

    elems: np.ndarray
    field: FieldSpec

    def __post_init__(self):
        arr = self.field.coerce(self.elems)
        if arr.ndim < 1 or arr.size < 1:
            raise ShapeMismatch("tensor must have at least one non-empty axis")
        object.__setattr__(self, "elems", arr)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.elems.shape


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def _transform_batch(a: np.ndarray, field: FieldSpec, sign: int) -> np.ndarray:
    """DFT of each row of ``a`` with root w_s^sign, recursive mixed radix."""
    s = a.shape[-1]
    if s == 1:
        return a.copy()
    r = _smallest_prime_factor(s)
    t = s // r
    # decimate: column u holds elements u, u+r, u+2r, ...
    parts = a.reshape(-1, t, r).swapaxes(-1, -2)  # (batch, r, t)
    sub = _transform_batch(parts.reshape(-1, t), field, sign).reshape(-1, r, t)
    # twiddle then combine with the length-r DFT across the part axis
    tw = fld.root_powers(field, s, sign * np.outer(np.arange(r), np.arange(t)))
    scaled = fld.mul(field, sub, tw)
    f_r = fld.root_powers(field, r, sign * np.outer(np.arange(r), np.arange(r)))
    out = fld.mat_apply(field, f_r, scaled)  # (batch, r, t); out[j, i'] = X[j*t + i']
    return out.reshape(a.shape)


def dft_naive(x: Vector) -> Vector:
    """Direct O(s^2) evaluation of X_i = sum_j x_j * w_s^(i*j).

    This is the oracle: every other transform in the package is validated
    against it.
    """
    s = len(x)
    table = fld.root_powers(x.field, s, np.arange(s))
    idx = np.arange(s)
    out = x.field.zeros(s)
    for j in range(s):
        out = fld.add(x.field, out, fld.mul(x.field, x.elems[j], table[(idx * j) % s]))
    return Vector(out, x.field)


def fft_fast(x: Vector) -> Vector:
    """Fast transform; same output contract as dft_naive."""
    return Vector(_transform_batch(x.elems.reshape(1, -1), x.field, +1)[0], x.field)


def idft(x: Vector) -> Vector:
    """Inverse transform: conjugate-root pass scaled by 1/s."""
    s = len(x)
    f = x.field
    if f.is_prime_field and s % f.p == 0:
        raise NotInvertible(f"length {s} is not invertible mod {f.p}")
    raw = _transform_batch(x.elems.reshape(1, -1), f, -1)[0]
    return Vector(fld.mul(f, raw, fld.inv_scalar(f, s)), f)


def dft_nd(t: Tensor) -> Tensor:
    """n-D transform, applied axis by axis via the fast 1-D kernel."""
    arr = t.elems
    for axis in range(arr.ndim):
        moved = np.moveaxis(arr, axis, -1)
        flat = moved.reshape(-1, moved.shape[-1])
        flat = _transform_batch(flat, t.field, +1)
        arr = np.moveaxis(flat.reshape(moved.shape), -1, axis)
    return Tensor(arr, t.field)

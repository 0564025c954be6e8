"""Decimation into m sub-problems, sub-DFTs, and recombination.

The 1-D split is c_i[j] = x[i + j*m]: m strided subvectors of length s/m.
Transforming each part with the (s/m)-th root (which equals w_s^m) and
recombining with twiddles w_s^(i*k) reconstructs the full DFT.  The n-D
analogue decimates axis k with stride m_k, where the per-axis factors
multiply to m.
"""

from dataclasses import dataclass
from math import gcd, prod

import numpy as np

from . import field as fld
from .errors import IndivisibleLength, NoFactorization, ShapeMismatch
from .fft import Tensor, Vector, _transform_batch
from .field import FieldSpec


@dataclass(frozen=True, eq=False)
class InterleavedSet:
    """m vectors of length s/m: the decimated parts, or their sub-DFTs."""

    parts: np.ndarray  # (m, s/m)
    s: int
    m: int
    field: FieldSpec

    def __post_init__(self):
        arr = self.field.coerce(self.parts)
        if self.m < 1 or self.s % self.m != 0:
            raise ShapeMismatch(f"m={self.m} does not divide s={self.s}")
        if arr.shape != (self.m, self.s // self.m):
            raise ShapeMismatch(f"parts shape {arr.shape} != ({self.m}, {self.s // self.m})")
        object.__setattr__(self, "parts", arr)

    def part(self, i: int) -> Vector:
        return Vector(self.parts[i], self.field)


@dataclass(frozen=True)
class NdFactors:
    """Per-axis interleaving factors; their product is the global m."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if any(f < 1 for f in self.factors):
            raise ShapeMismatch("factors must be positive")

    @property
    def m(self) -> int:
        return prod(self.factors)


def interleave_1d(x: Vector, m: int) -> InterleavedSet:
    """Split x into m parts with part i element j = x[i + j*m]."""
    s = len(x)
    if m < 1 or s % m != 0:
        raise IndivisibleLength(f"m={m} does not divide s={s}")
    parts = np.ascontiguousarray(x.elems.reshape(s // m, m).T)
    return InterleavedSet(parts, s, m, x.field)


def deinterleave_1d(iset: InterleavedSet) -> Vector:
    """Inverse rearrangement: x[i + j*m] = parts[i][j]."""
    return Vector(np.ascontiguousarray(iset.parts.T).reshape(iset.s), iset.field)


def sub_dft(iset: InterleavedSet) -> InterleavedSet:
    """Length-(s/m) DFT of every part (the root w_s^m = w_{s/m})."""
    out = _transform_batch(iset.parts, iset.field, +1)
    return InterleavedSet(out, iset.s, iset.m, iset.field)


def recombine_1d(c: InterleavedSet) -> Vector:
    """Rebuild the full transform X from the m sub-DFTs.

    Computed as s/m twiddled length-m DFTs: for each position i < s/m the
    vector (C[k, i] * w_s^(i*k))_k is transformed, and its j-th output is
    X[i + j*s/m].
    """
    s, m, f = c.s, c.m, c.field
    t = s // m
    tw = fld.root_powers(f, s, np.outer(np.arange(m), np.arange(t)))
    scaled = fld.mul(f, c.parts, tw)
    out = fld.mat_apply(f, fld.dft_matrix(f, m), scaled)  # out[j, i] = X[j*t + i]
    return Vector(out.reshape(s), f)


def choose_factors_nd(shape, m: int) -> NdFactors:
    """Deterministic per-axis split of m: greedy gcd along the axes in order."""
    shape = tuple(int(d) for d in shape)
    if m < 1 or prod(shape) % m != 0:
        raise NoFactorization(f"m={m} does not divide the element count {prod(shape)}")
    remaining = m
    factors = []
    for dim in shape:
        g = gcd(dim, remaining)  # largest divisor of dim dividing `remaining`
        remaining //= g
        factors.append(g)
    if remaining != 1:
        raise NoFactorization(f"cannot split m={m} across shape {shape}")
    return NdFactors(tuple(factors))


def interleave_nd(t: Tensor, factors: NdFactors) -> list[Tensor]:
    """Decimate axis k with stride m_k: part (i_0..i_{n-1}) element (j_0..j_{n-1})
    is t[i_0 + j_0*m_0, ..., i_{n-1} + j_{n-1}*m_{n-1}].

    The per-axis stride (m_k, not the global m) is what makes this map a
    bijection onto m tensors of shape (s_0/m_0, ..., s_{n-1}/m_{n-1});
    parts are ordered by their index tuple in row-major order.
    """
    arr = t.elems
    mk = factors.factors
    if len(mk) != arr.ndim or any(s % f != 0 for s, f in zip(arr.shape, mk)):
        raise ShapeMismatch(f"factors {mk} incompatible with shape {arr.shape}")
    n = arr.ndim
    split = []
    for s_k, m_k in zip(arr.shape, mk):
        split += [s_k // m_k, m_k]
    resh = arr.reshape(split)  # axes (j_0, i_0, j_1, i_1, ...)
    perm = [2 * k + 1 for k in range(n)] + [2 * k for k in range(n)]
    part_shape = tuple(s_k // m_k for s_k, m_k in zip(arr.shape, mk))
    stacked = resh.transpose(perm).reshape((factors.m,) + part_shape)
    return [Tensor(stacked[i], t.field) for i in range(factors.m)]


def recombine_nd(c_tensors, shape, factors: NdFactors) -> Tensor:
    """Rebuild the n-D transform from the m sub-transforms.

    Inverse of the decimation on the frequency side: axis by axis, the
    part-index axis is twiddled by w_{s_k}^(i'*j) and contracted with the
    length-m_k DFT matrix, merging into the full axis of length s_k.
    """
    shape = tuple(int(d) for d in shape)
    mk = factors.factors
    n = len(shape)
    if len(mk) != n:
        raise ShapeMismatch(f"{len(mk)} factors for {n} axes")
    part_shape = tuple(s // f for s, f in zip(shape, mk))
    tensors = list(c_tensors)
    if len(tensors) != factors.m:
        raise ShapeMismatch(f"expected {factors.m} tensors, got {len(tensors)}")
    f = tensors[0].field
    for c in tensors:
        if c.shape != part_shape:
            raise ShapeMismatch(f"part shape {c.shape} != {part_shape}")
        if c.field != f:
            raise ShapeMismatch("parts disagree about the field")
    arr = np.stack([c.elems for c in tensors]).reshape(mk + part_shape)
    for k in range(n):
        m_k, t_k, s_k = mk[k], part_shape[k], shape[k]
        # layout: (m_k, m_{k+1}.., s_0..s_{k-1}, t_k, t_{k+1}..); t_k at axis n
        tw = fld.root_powers(f, s_k, np.outer(np.arange(m_k), np.arange(t_k)))
        tw = tw.reshape((m_k,) + (1,) * (n - 1) + (t_k,) + (1,) * (n - k - 1))
        scaled = fld.mul(f, arr, tw)
        merged = fld.contract_first(f, fld.dft_matrix(f, m_k), scaled)
        merged = np.moveaxis(merged, 0, n - 1)  # put the frequency axis next to t_k
        arr = merged.reshape(merged.shape[: n - 1] + (s_k,) + merged.shape[n + 1 :])
    return Tensor(arr, f)

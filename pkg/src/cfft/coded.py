"""The coded transform pipeline: encode, per-worker compute, master decode.

Workers each store a 1/m fraction of the input: the m decimated parts are
MDS-encoded into N coded vectors, one per worker.  Because the transform
is linear, each worker transforming its coded vector yields the same MDS
combination of the parts' sub-DFTs, so any m results decode to all the
sub-DFTs and a twiddle recombination finishes the job.  The recovery
threshold is therefore exactly m, independent of N.
"""

from dataclasses import dataclass
from math import gcd, prod

import numpy as np

from .errors import (
    IndivisibleLength,
    InfeasibleThreshold,
    InsufficientShares,
    NoFactorization,
    ShapeMismatch,
)
from .fft import Tensor, Vector, dft_nd, fft_fast
from .field import FieldSpec
from .interleave import (
    InterleavedSet,
    NdFactors,
    choose_factors_nd,
    interleave_1d,
    interleave_nd,
    recombine_1d,
    recombine_nd,
)
from .mds import MdsCode, Share, decode_shares, encode_shares, make_code


@dataclass(frozen=True)
class ProblemConfig:
    """Problem size: input shape, storage fraction 1/m, worker count."""

    shape: tuple[int, ...]
    m: int
    n_workers: int
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(int(d) for d in self.shape))
        if any(d < 1 for d in self.shape) or not self.shape:
            raise ShapeMismatch("shape must be non-empty and positive")
        if self.m < 1 or self.n_workers < 1:
            raise ShapeMismatch("m and n_workers must be positive")

    @property
    def s(self) -> int:
        return prod(self.shape)


@dataclass(frozen=True, eq=False)
class Strategy:
    """A planned computation: the code plus the threshold it guarantees."""

    config: ProblemConfig
    code: MdsCode
    recovery_threshold: int


@dataclass(frozen=True, eq=False)
class WorkerResult:
    """The transformed payload a worker sends back."""

    worker_index: int
    payload: Vector


def plan_strategy(config: ProblemConfig, custom_generator=None) -> Strategy:
    """Plan the coded computation; threshold is m with a default RS code."""
    if config.m > config.n_workers:
        raise InfeasibleThreshold(f"m={config.m} exceeds N={config.n_workers}")
    if config.s % config.m != 0:
        raise IndivisibleLength(f"m={config.m} does not divide s={config.s}")
    kind = "vandermonde" if custom_generator is None else "custom"
    code = make_code(config.field, config.n_workers, config.m, kind, custom_generator)
    return Strategy(config, code, config.m)


def encode_input(strategy: Strategy, x: Vector) -> list[Share]:
    """Share i = row i of the code applied to the m decimated parts of x."""
    cfg = strategy.config
    if len(x) != cfg.s or x.field != cfg.field:
        raise ShapeMismatch(f"input length {len(x)} != configured s={cfg.s}")
    parts = interleave_1d(x, cfg.m)
    return encode_shares(strategy.code, [parts.part(i) for i in range(cfg.m)])


def worker_compute(share: Share) -> WorkerResult:
    """A worker's whole job: the DFT of its stored vector."""
    return WorkerResult(share.worker_index, fft_fast(share.payload))


def master_decode(strategy: Strategy, results) -> Vector:
    """Recover the full transform from any >= m worker results."""
    cfg = strategy.config
    results = list(results)
    if len(results) < strategy.recovery_threshold:
        raise InsufficientShares(
            f"{len(results)} results < threshold {strategy.recovery_threshold}")
    shares = [Share(r.worker_index, r.payload) for r in results]
    messages = decode_shares(strategy.code, shares)
    c = InterleavedSet(np.stack([v.elems for v in messages]), cfg.s, cfg.m, cfg.field)
    return recombine_1d(c)


def _respond_set(n_workers: int, respond) -> list[int]:
    if respond is None:
        return list(range(n_workers))
    idx = sorted(set(int(i) for i in respond))
    if idx and (idx[0] < 0 or idx[-1] >= n_workers):
        raise ShapeMismatch(f"worker indices {idx} out of range for N={n_workers}")
    return idx


def coded_fft_nd(config: ProblemConfig, t: Tensor, respond=None) -> Tensor:
    """End-to-end n-D coded transform, decoding from the responding workers.

    respond: worker indices whose results arrive (None = all).  Any m of
    them suffice; fewer raise InsufficientShares.
    """
    if t.shape != config.shape or t.field != config.field:
        raise ShapeMismatch(f"tensor shape {t.shape} != configured {config.shape}")
    if config.m > config.n_workers:
        raise InfeasibleThreshold(f"m={config.m} exceeds N={config.n_workers}")
    factors = choose_factors_nd(config.shape, config.m)
    parts = interleave_nd(t, factors)
    part_shape = parts[0].shape
    code = make_code(config.field, config.n_workers, config.m)
    shares = encode_shares(code, [p.elems.reshape(-1) for p in parts])
    avail = _respond_set(config.n_workers, respond)
    results = []
    for i in avail:
        coded_tensor = Tensor(shares[i].payload.elems.reshape(part_shape), config.field)
        results.append(Share(i, Vector(dft_nd(coded_tensor).elems.reshape(-1), config.field)))
    if len(results) < config.m:
        raise InsufficientShares(f"{len(results)} results < threshold {config.m}")
    messages = decode_shares(code, results)
    c_tensors = [Tensor(v.elems.reshape(part_shape), config.field) for v in messages]
    return recombine_nd(c_tensors, config.shape, factors)


@dataclass(frozen=True)
class BundlePlan:
    """How q inputs share the storage budget: m = m_tilde * prod(factors).

    The q inputs are bundled into m_tilde equal subsets; inputs inside a
    subset are decimated by the per-axis factors and stacked into one
    message symbol per interleave tuple.
    """

    m_tilde: int
    subsets: tuple[tuple[int, ...], ...]
    nd_factors: NdFactors

    @property
    def q(self) -> int:
        return sum(len(s) for s in self.subsets)

    @property
    def m(self) -> int:
        return self.m_tilde * self.nd_factors.m


def bundle_inputs(q: int, shape, m: int) -> BundlePlan:
    """Deterministic bundling: the largest divisor of gcd(m, q) such that
    the rest of m still factors across the tensor axes."""
    shape = tuple(int(d) for d in shape)
    if q < 1:
        raise ShapeMismatch("q must be positive")
    if (q * prod(shape)) % m != 0:
        raise NoFactorization(f"m={m} does not divide q*s={q * prod(shape)}")
    g = gcd(m, q)
    for m_tilde in sorted((d for d in range(1, g + 1) if g % d == 0), reverse=True):
        try:
            factors = choose_factors_nd(shape, m // m_tilde)
        except NoFactorization:
            continue
        block = q // m_tilde
        subsets = tuple(tuple(range(b * block, (b + 1) * block)) for b in range(m_tilde))
        return BundlePlan(m_tilde, subsets, factors)
    raise NoFactorization(f"no bundling of q={q} fits m={m} over shape {shape}")


def coded_fft_multi(plan: BundlePlan, inputs, n_workers: int, respond=None) -> list[Tensor]:
    """Coded transform of q inputs at once; threshold is still m.

    Message symbol (g, v) stacks part v of every input in subset g (inputs
    ascending, interleave tuples in row-major order); symbols are indexed
    g * (m / m_tilde) + v.  Each worker holds one coded symbol of
    q*s/m elements and transforms every tensor slot in it.
    """
    inputs = list(inputs)
    if len(inputs) != plan.q:
        raise ShapeMismatch(f"expected {plan.q} inputs, got {len(inputs)}")
    f = inputs[0].field
    shape = inputs[0].shape
    for t in inputs:
        if t.shape != shape or t.field != f:
            raise ShapeMismatch("inputs must share one shape and field")
    m = plan.m
    if m > n_workers:
        raise InfeasibleThreshold(f"m={m} exceeds N={n_workers}")
    factors = plan.nd_factors
    n_parts = factors.m  # interleaved tensors per input
    per_subset = plan.q // plan.m_tilde
    parts = [interleave_nd(t, factors) for t in inputs]
    part_shape = parts[0][0].shape
    part_len = prod(part_shape)

    symbols = []
    for subset in plan.subsets:
        for v in range(n_parts):
            stack = np.concatenate([parts[h][v].elems.reshape(-1) for h in subset])
            symbols.append(stack)
    code = make_code(f, n_workers, m)
    shares = encode_shares(code, symbols)

    avail = _respond_set(n_workers, respond)
    results = []
    for i in avail:
        payload = shares[i].payload.elems.reshape(per_subset, *part_shape)
        slots = [dft_nd(Tensor(payload[r], f)).elems.reshape(-1) for r in range(per_subset)]
        results.append(Share(i, Vector(np.concatenate(slots), f)))
    if len(results) < m:
        raise InsufficientShares(f"{len(results)} results < threshold {m}")
    messages = decode_shares(code, results)

    outputs = []
    for g, subset in enumerate(plan.subsets):
        for r, h in enumerate(subset):
            c_tensors = []
            for v in range(n_parts):
                sym = messages[g * n_parts + v].elems
                slot = sym[r * part_len : (r + 1) * part_len]
                c_tensors.append(Tensor(slot.reshape(part_shape), f))
            outputs.append((h, recombine_nd(c_tensors, shape, factors)))
    outputs.sort(key=lambda pair: pair[0])
    return [t for _, t in outputs]

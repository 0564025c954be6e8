"""(N, m) MDS erasure codes applied position-wise to vectors.

The code is held as an explicit N x m generator matrix whose every m x m
row-submatrix is invertible, so any m of the N coded shares determine the
m message vectors.  The default construction is Vandermonde-style
(Reed-Solomon): rows (a_i^0, ..., a_i^(m-1)) over pairwise-distinct
points, which is roots-of-unity on the complex field and 0..N-1 on a
prime field.  Arbitrary generators are accepted too; the MDS property is
verified at construction, exhaustively when there are at most 10000 row
subsets and on 1000 pseudorandom subsets otherwise.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import field as fld
from .errors import (
    DegeneratePoints,
    DuplicateShare,
    FieldMismatch,
    InsufficientShares,
    NotMds,
    ShapeMismatch,
)
from .fft import Vector
from .field import FieldSpec

log = logging.getLogger(__name__)

_EXHAUSTIVE_LIMIT = 10_000
_SPOT_CHECKS = 1_000


def _invert_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Gauss-Jordan inverse of a small matrix over Z_p; NotMds if singular."""
    m = a.shape[0]
    work = np.mod(a.astype(np.int64), p)
    aug = np.concatenate([work, np.eye(m, dtype=np.int64)], axis=1)
    for col in range(m):
        pivots = np.nonzero(aug[col:, col])[0]
        if pivots.size == 0:
            raise NotMds("singular submatrix over the prime field")
        r = col + int(pivots[0])
        if r != col:
            aug[[col, r]] = aug[[r, col]]
        inv_p = pow(int(aug[col, col]), p - 2, p)
        aug[col] = (aug[col] * inv_p) % p
        others = [r for r in range(m) if r != col and aug[r, col]]
        for r in others:
            aug[r] = (aug[r] - aug[r, col] * aug[col]) % p
    return aug[:, m:]


def _invert_complex(a: np.ndarray, eps: float) -> tuple[np.ndarray, float]:
    """Inverse plus 1-norm condition estimate; NotMds when numerically singular."""
    try:
        inv = np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise NotMds("singular submatrix") from exc
    cond = float(np.linalg.norm(a, 1) * np.linalg.norm(inv, 1))
    if not np.isfinite(cond) or cond > 1 / max(eps * eps, 1e-300):
        raise NotMds(f"numerically singular submatrix (cond ~ {cond:.3g})")
    return inv, cond


def _submatrix_invertible(field: FieldSpec, sub: np.ndarray) -> bool:
    try:
        if field.is_prime_field:
            _invert_mod(sub, field.p)
        else:
            _invert_complex(sub, field.eps)
    except NotMds:
        return False
    return True


@dataclass(frozen=True, eq=False)
class MdsCode:
    """An (N, m) generator-matrix code with every m x m minor invertible."""

    n_total: int
    k_msg: int
    generator: np.ndarray  # (N, m)
    field: FieldSpec
    kind: str  # "vandermonde" | "custom"


@dataclass(frozen=True, eq=False)
class Share:
    """One worker's stored coded vector."""

    worker_index: int
    payload: Vector


def _verify_mds(field: FieldSpec, gen: np.ndarray) -> None:
    n, m = gen.shape
    total = comb(n, m)
    if total <= _EXHAUSTIVE_LIMIT:
        subsets = combinations(range(n), m)
    else:
        rng = np.random.default_rng(np.random.SeedSequence((n, m, 0xC0DE)))
        subsets = (sorted(rng.choice(n, size=m, replace=False)) for _ in range(_SPOT_CHECKS))
    for rows in subsets:
        if not _submatrix_invertible(field, gen[list(rows)]):
            raise NotMds(f"rows {tuple(rows)} form a singular submatrix")


def make_code(field: FieldSpec, n_total: int, k_msg: int, kind: str = "vandermonde",
              custom_generator=None) -> MdsCode:
    """Build an (N, m) MDS code.

    Vandermonde points: complex uses the N-th roots of unity (rows of the
    N-point DFT matrix, well conditioned); prime uses 0..N-1, which needs
    N <= p.  A custom generator is taken as given and verified.
    """
    if not 1 <= k_msg <= n_total:
        raise ShapeMismatch(f"need 1 <= m <= N, got m={k_msg}, N={n_total}")
    if kind == "vandermonde":
        if custom_generator is not None:
            raise ValueError("custom_generator only valid with kind='custom'")
        if field.is_prime_field:
            if n_total > field.p:
                raise DegeneratePoints(f"N={n_total} points repeat mod p={field.p}")
            points = np.arange(n_total, dtype=np.int64)
            gen = np.ones((n_total, k_msg), dtype=np.int64)
            for j in range(1, k_msg):
                gen[:, j] = (gen[:, j - 1] * points) % field.p
        else:
            gen = fld.root_powers(field, n_total,
                                  np.outer(np.arange(n_total), np.arange(k_msg)))
    elif kind == "custom":
        if custom_generator is None:
            raise ValueError("kind='custom' requires a generator matrix")
        gen = field.coerce(custom_generator)
        if gen.shape != (n_total, k_msg):
            raise ShapeMismatch(f"generator shape {gen.shape} != ({n_total}, {k_msg})")
    else:
        raise ValueError(f"unknown code kind {kind!r}")
    _verify_mds(field, gen)
    gen = gen.copy()
    gen.flags.writeable = False
    return MdsCode(n_total, k_msg, gen, field, kind)


def _stack_messages(code: MdsCode, messages) -> np.ndarray:
    rows = []
    width = None
    for msg in messages:
        if isinstance(msg, Vector):
            if msg.field != code.field:
                raise FieldMismatch("message field differs from code field")
            row = msg.elems
        else:
            row = code.field.coerce(msg)
        if width is None:
            width = row.shape[-1]
        elif row.shape[-1] != width:
            raise ShapeMismatch("messages have unequal lengths")
        rows.append(row)
    if len(rows) != code.k_msg:
        raise ShapeMismatch(f"expected {code.k_msg} messages, got {len(rows)}")
    return np.stack(rows)


def encode_shares(code: MdsCode, messages) -> list[Share]:
    """Position-wise encode m message vectors into N shares."""
    stacked = _stack_messages(code, messages)
    coded = fld.mat_apply(code.field, code.generator, stacked)
    return [Share(i, Vector(coded[i], code.field)) for i in range(code.n_total)]


def _ordered_shares(code: MdsCode, shares) -> list[Share]:
    shares = sorted(shares, key=lambda sh: sh.worker_index)
    seen = set()
    width = None
    for sh in shares:
        if not 0 <= sh.worker_index < code.n_total:
            raise ShapeMismatch(f"worker index {sh.worker_index} out of range")
        if sh.worker_index in seen:
            raise DuplicateShare(f"worker {sh.worker_index} appears twice")
        seen.add(sh.worker_index)
        if sh.payload.field != code.field:
            raise FieldMismatch("share field differs from code field")
        if width is None:
            width = len(sh.payload)
        elif len(sh.payload) != width:
            raise ShapeMismatch("share payloads have unequal lengths")
    return shares


def decode_shares(code: MdsCode, shares, return_condition: bool = False):
    """Recover the m message vectors from any >= m distinct shares.

    Deterministic selection: the first m shares by ascending worker index.
    One m x m solve, then applied to all positions, so the cost is
    O(m^3 + len * m).  On the complex field a 1-norm condition estimate of
    the decode submatrix is logged (and returned when asked).
    """
    shares = _ordered_shares(code, shares)
    m = code.k_msg
    if len(shares) < m:
        raise InsufficientShares(f"have {len(shares)} shares, need {m}")
    chosen = shares[:m]
    sub = code.generator[[sh.worker_index for sh in chosen]]
    payloads = np.stack([sh.payload.elems for sh in chosen])
    if code.field.is_prime_field:
        inv = _invert_mod(sub, code.field.p)
        cond = 1.0
    else:
        inv, cond = _invert_complex(sub, code.field.eps)
        log.debug("decode submatrix 1-norm condition estimate: %.3g", cond)
    decoded = fld.mat_apply(code.field, inv, payloads)
    messages = [Vector(decoded[i], code.field) for i in range(m)]
    if return_condition:
        return messages, cond
    return messages


@dataclass(frozen=True)
class ConsistencyVerdict:
    consistent: bool
    corrupt: frozenset  # of (worker_index, position)


def check_consistency(code: MdsCode, shares) -> ConsistencyVerdict:
    """Detect corrupted shares using the redundancy beyond m.

    Decodes from the first m shares, re-encodes, and compares against the
    remaining ones elementwise; any mismatch is reported as a
    (worker, position) pair.  Needs strictly more than m shares.
    """
    shares = _ordered_shares(code, shares)
    m = code.k_msg
    if len(shares) <= m:
        raise InsufficientShares("need more than m shares to cross-check")
    messages = decode_shares(code, shares[:m])
    stacked = np.stack([v.elems for v in messages])
    bad = set()
    for sh in shares[m:]:
        expect = fld.mat_apply(code.field, code.generator[[sh.worker_index]], stacked)[0]
        got = sh.payload.elems
        if code.field.is_prime_field:
            mism = np.nonzero(expect != got)[0]
        else:
            eps = code.field.eps
            bound = eps * np.maximum(1.0, np.maximum(np.abs(expect), np.abs(got)))
            mism = np.nonzero(np.abs(expect - got) > bound)[0]
        bad.update((sh.worker_index, int(pos)) for pos in mism)
    return ConsistencyVerdict(not bad, frozenset(bad))

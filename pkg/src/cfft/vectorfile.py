"""Binary tensor file format (little-endian, fixed width).

Layout:
    magic    5 bytes  b"CFFT1"
    field    u32      0 = complex, 1 = prime
    modulus  u64      0 for complex
    rank     u32      number of axes n
    shape    n * u64
    payload  row-major elements:
                 complex -> (re, im) float64 pairs
                 prime   -> u64 residues, each < modulus

Exact round-trips by construction: prime residues are stored verbatim and
complex values keep their IEEE-754 bits.
"""

import struct

import numpy as np

from .errors import VectorFileError
from .fft import Tensor
from .field import FieldSpec

MAGIC = b"CFFT1"
_HEADER = struct.Struct("<IQI")  # field tag, modulus, rank

TAG_COMPLEX = 0
TAG_PRIME = 1


def write_tensor(path, t: Tensor) -> None:
    arr = t.elems
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        if t.field.is_prime_field:
            fh.write(_HEADER.pack(TAG_PRIME, t.field.p, arr.ndim))
        else:
            fh.write(_HEADER.pack(TAG_COMPLEX, 0, arr.ndim))
        fh.write(np.asarray(arr.shape, dtype="<u8").tobytes())
        if t.field.is_prime_field:
            fh.write(arr.astype("<u8").tobytes())
        else:
            fh.write(arr.astype("<c16").tobytes())


def read_tensor(path) -> Tensor:
    with open(path, "rb") as fh:
        raw = fh.read()
    if raw[: len(MAGIC)] != MAGIC:
        raise VectorFileError("bad magic; not a tensor file")
    off = len(MAGIC)
    if len(raw) < off + _HEADER.size:
        raise VectorFileError("truncated header")
    tag, modulus, rank = _HEADER.unpack_from(raw, off)
    off += _HEADER.size
    if rank < 1:
        raise VectorFileError("rank must be at least 1")
    if len(raw) < off + 8 * rank:
        raise VectorFileError("truncated shape")
    shape = tuple(int(d) for d in np.frombuffer(raw, "<u8", count=rank, offset=off))
    off += 8 * rank
    if any(d < 1 for d in shape):
        raise VectorFileError(f"non-positive axis in shape {shape}")
    count = int(np.prod(shape))
    if tag == TAG_COMPLEX:
        if modulus != 0:
            raise VectorFileError("complex file carries a modulus")
        field = FieldSpec.complex_field()
        esize = 16
    elif tag == TAG_PRIME:
        try:
            field = FieldSpec.prime_field(modulus)
        except ValueError as exc:
            raise VectorFileError(f"unusable modulus {modulus}: {exc}") from exc
        esize = 8
    else:
        raise VectorFileError(f"unknown field tag {tag}")
    if len(raw) != off + esize * count:
        raise VectorFileError(
            f"payload is {len(raw) - off} bytes, expected {esize * count}")
    if tag == TAG_PRIME:
        vals = np.frombuffer(raw, "<u8", count=count, offset=off)
        if np.any(vals >= modulus):
            raise VectorFileError("residue not below the modulus")
        arr = vals.astype(np.int64).reshape(shape)
    else:
        arr = np.frombuffer(raw, "<c16", count=count, offset=off).reshape(shape).copy()
    return Tensor(arr, field)

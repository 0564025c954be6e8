"""Scalar arithmetic over the two supported base fields.

A ``FieldSpec`` names either the complex numbers (tolerance-based equality,
``numpy.complex128`` storage) or a prime field Z_p (exact ``numpy.int64``
arithmetic, residues kept in ``[0, p)``).  Primes are limited to
``p <= 2**31 - 1`` so that a single product always fits in int64; the
default prime 65537 = 2**16 + 1 supports every power-of-two transform
length up to 65536.

All n-th roots of unity are derived from one canonical generator per
field, so powers nest consistently: the n-th root equals the (k*n)-th
root raised to the k.  Complex roots land exactly on 1, -i, -1, i at the
quarter points, which keeps small-integer examples exact.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import FieldMismatch, RootUnavailable

DEFAULT_PRIME = 65537
DEFAULT_EPS = 1e-9

# (p-1)^2 + p must fit in int64, with room for one extra addition.
_MAX_PRIME = 2**31 - 1

Scalar = complex | int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The working field: kind, modulus (prime only), comparison tolerance."""

    kind: str  # "complex" | "prime"
    p: int | None = None
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if self.kind == "complex":
            if self.p is not None:
                raise ValueError("complex field takes no modulus")
            if not self.eps > 0:
                raise ValueError("tolerance must be positive")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
            if self.p > _MAX_PRIME:
                raise ValueError(f"modulus {self.p} exceeds int64-exact limit {_MAX_PRIME}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def complex_field(cls, eps: float = DEFAULT_EPS) -> "FieldSpec":
        return cls("complex", None, eps)

    @classmethod
    def prime_field(cls, p: int = DEFAULT_PRIME) -> "FieldSpec":
        return cls("prime", p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    @property
    def cardinality(self):
        return self.p if self.kind == "prime" else math.inf

    @property
    def dtype(self):
        return np.int64 if self.kind == "prime" else np.complex128

    def coerce(self, data) -> np.ndarray:
        """Convert ``data`` to this field's array representation.

        Prime: values must be integral; they are reduced into [0, p).
        Complex: anything castable to complex128.
        """
        arr = np.asarray(data)
        if self.kind == "complex":
            return arr.astype(np.complex128)
        if arr.dtype == object or arr.dtype.kind not in "iuf":
            if np.iscomplexobj(arr):
                raise FieldMismatch("complex values in a prime field")
            # object arrays (e.g. big Python ints): reduce elementwise
            flat = [int(v) % self.p for v in arr.reshape(-1)]
            return np.array(flat, dtype=np.int64).reshape(arr.shape)
        if arr.dtype.kind == "f":
            if not np.all(arr == np.round(arr)):
                raise FieldMismatch("non-integral values in a prime field")
            arr = arr.astype(np.int64)
        return np.mod(arr.astype(np.int64), self.p)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def __repr__(self):
        if self.kind == "prime":
            return f"FieldSpec(prime, p={self.p})"
        return f"FieldSpec(complex, eps={self.eps})"


# ---------------------------------------------------------------------------
# elementwise arithmetic helpers (arrays or scalars, already in-field)
# ---------------------------------------------------------------------------

def add(field: FieldSpec, a, b):
    if field.is_prime_field:
        return (np.asarray(a, np.int64) + np.asarray(b, np.int64)) % field.p
    return np.asarray(a, np.complex128) + np.asarray(b, np.complex128)


def sub(field: FieldSpec, a, b):
    if field.is_prime_field:
        return (np.asarray(a, np.int64) - np.asarray(b, np.int64)) % field.p
    return np.asarray(a, np.complex128) - np.asarray(b, np.complex128)


def mul(field: FieldSpec, a, b):
    if field.is_prime_field:
        return (np.asarray(a, np.int64) * np.asarray(b, np.int64)) % field.p
    return np.asarray(a, np.complex128) * np.asarray(b, np.complex128)


def neg(field: FieldSpec, a):
    if field.is_prime_field:
        return (-np.asarray(a, np.int64)) % field.p
    return -np.asarray(a, np.complex128)


def inv_scalar(field: FieldSpec, a) -> Scalar:
    """Multiplicative inverse of one scalar; zero raises ZeroDivisionError."""
    if field.is_prime_field:
        a = int(a) % field.p
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, field.p - 2, field.p)
    a = complex(a)
    if a == 0:
        raise ZeroDivisionError("zero has no inverse")
    return 1 / a


def div(field: FieldSpec, a, b):
    return mul(field, a, inv_scalar(field, b))


def mat_apply(field: FieldSpec, m: np.ndarray, x: np.ndarray) -> np.ndarray:
    """``m @ x`` contracting m's columns with x's second-to-last axis.

    Prime path stays exact: the int64 matmul is used only when the
    accumulated sum provably fits, otherwise a short reduce-per-term loop.
    """
    if not field.is_prime_field:
        return np.matmul(m, x)
    p = field.p
    k = m.shape[-1]
    if k * (p - 1) ** 2 < 2**63 - 1:
        return np.matmul(m, x) % p
    out = np.zeros(x.shape[:-2] + (m.shape[0], x.shape[-1]), dtype=np.int64)
    for j in range(k):
        out = (out + m[:, j].reshape(-1, 1) * x[..., j : j + 1, :]) % p
    return out


def contract_first(field: FieldSpec, m: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Contract m's columns against x's FIRST axis: out[i,...] = sum_j m[i,j] x[j,...]."""
    if not field.is_prime_field:
        return np.tensordot(m, x, axes=([1], [0]))
    p = field.p
    k = m.shape[-1]
    if k * (p - 1) ** 2 < 2**63 - 1:
        return np.tensordot(m, x, axes=([1], [0])) % p
    out = np.zeros((m.shape[0],) + x.shape[1:], dtype=np.int64)
    for j in range(k):
        out = (out + m[:, j].reshape((-1,) + (1,) * (x.ndim - 1)) * x[j]) % p
    return out


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _smallest_primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of Z_p."""
    if p == 2:
        return 1
    phi = p - 1
    factors = set()
    m, d = phi, 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    raise RuntimeError(f"no primitive root mod {p}")  # unreachable for prime p


_QUARTER = np.array([1, -1j, -1, 1j], dtype=np.complex128)


@lru_cache(maxsize=256)
def _root_table(field: FieldSpec, n: int) -> np.ndarray:
    """Powers w^0 .. w^{n-1} of the canonical primitive n-th root."""
    if n < 1:
        raise ValueError("n must be positive")
    if field.is_prime_field:
        p = field.p
        if (p - 1) % n != 0:
            raise RootUnavailable(f"{n} does not divide p-1 = {p - 1}")
        w = pow(_smallest_primitive_root(p), (p - 1) // n, p)
        # vectorized square-and-multiply: table[k] = w^k mod p
        table = np.ones(n, dtype=np.int64)
        exps = np.arange(n, dtype=np.int64)
        base = w
        while np.any(exps):
            odd = (exps & 1).astype(bool)
            table[odd] = (table[odd] * base) % p
            exps >>= 1
            base = (base * base) % p
    else:
        k = np.arange(n)
        table = np.exp((-2j * np.pi / n) * k)
        # exact values at the quarter points keep integer examples exact
        snap = (4 * k) % n == 0
        table[snap] = _QUARTER[(4 * k[snap] // n) % 4]
    table.flags.writeable = False
    return table


def primitive_root_of_unity(field: FieldSpec, n: int) -> Scalar:
    """Canonical primitive n-th root of unity.

    Complex: exp(-2*pi*i/n).  Prime: g**((p-1)//n) for the smallest
    primitive root g of Z_p, provided n divides p-1 (else RootUnavailable).
    Either way w**n = 1 and w**k != 1 for 0 < k < n, and roots nest:
    the n-th root is the (k*n)-th root raised to the k.
    """
    table = _root_table(field, n)
    val = table[1] if n > 1 else table[0]
    return int(val) if field.is_prime_field else complex(val)


def root_powers(field: FieldSpec, n: int, exponents) -> np.ndarray:
    """w_n raised to each entry of ``exponents`` (any integer array)."""
    table = _root_table(field, n)
    return table[np.mod(np.asarray(exponents), n)]


def dft_matrix(field: FieldSpec, n: int) -> np.ndarray:
    """The n x n matrix F[i, j] = w_n^(i*j)."""
    idx = np.arange(n)
    return root_powers(field, n, np.outer(idx, idx))


# ---------------------------------------------------------------------------
# equality
# ---------------------------------------------------------------------------

def _check_prime_value(field: FieldSpec, a) -> int:
    if isinstance(a, (bool, np.bool_)):
        a = int(a)
    if isinstance(a, (complex, np.complexfloating)):
        if a.imag != 0:
            raise FieldMismatch("complex value in a prime field")
        a = a.real
    if isinstance(a, (float, np.floating)):
        if a != round(a):
            raise FieldMismatch("non-integral value in a prime field")
        a = int(a)
    if not isinstance(a, (int, np.integer)):
        raise FieldMismatch(f"cannot interpret {type(a).__name__} in a prime field")
    return int(a) % field.p


def scalar_eq(a: Scalar, b: Scalar, field: FieldSpec) -> bool:
    """Field equality: exact on primes, relative-with-floor on complex.

    Complex test: |a - b| <= eps * max(1, |a|, |b|).
    """
    if field.is_prime_field:
        return _check_prime_value(field, a) == _check_prime_value(field, b)
    a, b = complex(a), complex(b)
    return abs(a - b) <= field.eps * max(1.0, abs(a), abs(b))


def arrays_equal(field: FieldSpec, a, b) -> bool:
    """Elementwise scalar_eq over two same-shape arrays."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    if field.is_prime_field:
        return bool(np.array_equal(np.mod(a, field.p), np.mod(b, field.p)))
    bound = field.eps * np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    return bool(np.all(np.abs(a - b) <= bound))

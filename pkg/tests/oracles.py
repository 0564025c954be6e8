"""Independent brute-force oracles, kept deliberately separate from the
library's own transform paths (pure Python loops, literal formulas)."""

import numpy as np

from cfft import root_powers


def dft_prime_bruteforce(values, p, w):
    """Direct X_i = sum_j x_j w^(ij) mod p with an explicit root."""
    s = len(values)
    return [sum(int(v) * pow(w, i * j, p) for j, v in enumerate(values)) % p
            for i in range(s)]


def idft_prime_bruteforce(values, p, w):
    """Inverse with the explicit root: conjugate pass scaled by s^-1."""
    s = len(values)
    w_inv = pow(w, p - 2, p)
    s_inv = pow(s, p - 2, p)
    raw = dft_prime_bruteforce(values, p, w_inv)
    return [(v * s_inv) % p for v in raw]


def dft_complex_bruteforce(values, s=None):
    """Direct evaluation over C with w = exp(-2*pi*i/s)."""
    vals = [complex(v) for v in values]
    s = len(vals) if s is None else s
    w = np.exp(-2j * np.pi / s)
    return [sum(v * w ** (i * j) for j, v in enumerate(vals)) for i in range(s)]


def dft_nd_bruteforce(arr, field):
    """Literal n-fold sum, elementwise in pure Python."""
    arr = np.asarray(arr)
    shape = arr.shape
    if field.is_prime_field:
        tables = [[int(v) for v in root_powers(field, s, np.arange(s))] for s in shape]
    else:
        tables = [[complex(v) for v in root_powers(field, s, np.arange(s))] for s in shape]
    out = np.empty(shape, dtype=object)
    for out_idx in np.ndindex(*shape):
        acc = 0
        for in_idx in np.ndindex(*shape):
            term = int(arr[in_idx]) if field.is_prime_field else complex(arr[in_idx])
            for k in range(len(shape)):
                term = term * tables[k][(out_idx[k] * in_idx[k]) % shape[k]]
            acc = acc + term
        if field.is_prime_field:
            acc = acc % field.p
        out[out_idx] = acc
    if field.is_prime_field:
        return out.astype(np.int64)
    return out.astype(np.complex128)


def recombine_direct(parts, s, m, field):
    """Literal remainder-index recombination: X_i = sum_k C[k][i mod s/m] * w_s^(ik)."""
    t = s // m
    table = root_powers(field, s, np.arange(s))
    out = []
    for i in range(s):
        acc = 0
        for k in range(m):
            acc = acc + parts[k][i % t] * table[(i * k) % s]
        out.append(int(acc) % field.p if field.is_prime_field else complex(acc))
    return out

"""Self-contained invariant battery behind the `verify` CLI command.

Each check raises on failure; run_all returns (name, ok, detail) rows.
The battery is a compact mirror of the test suite, runnable from an
installed package without test files.
"""

from itertools import combinations

import numpy as np

from . import field as fld
from .coded import (
    ProblemConfig,
    bundle_inputs,
    coded_fft_multi,
    coded_fft_nd,
    encode_input,
    master_decode,
    plan_strategy,
    worker_compute,
)
from .errors import InsufficientShares
from .fft import Tensor, Vector, dft_naive, dft_nd, fft_fast, idft
from .field import FieldSpec
from .interleave import interleave_1d, recombine_1d, sub_dft
from .mds import Share, check_consistency, decode_shares, encode_shares, make_code
from .sim import (
    LatencyModel,
    SimConfig,
    baseline_threshold,
    comm_load,
    converse_witness,
    outcomes_to_csv,
    run_campaign,
)

_C = FieldSpec.complex_field()
_GF = FieldSpec.prime_field()


def _rand_vec(field, s, rng):
    if field.is_prime_field:
        return Vector(rng.integers(0, field.p, size=s), field)
    return Vector(rng.standard_normal(s) + 1j * rng.standard_normal(s), field)


def check_field_axioms():
    rng = np.random.default_rng(11)
    for field in (_C, _GF, FieldSpec.prime_field(17)):
        for _ in range(200):
            if field.is_prime_field:
                a, b, c = (int(v) for v in rng.integers(0, field.p, 3))
            else:
                a, b, c = (complex(x, y) for x, y in rng.standard_normal((3, 2)))
            assert fld.arrays_equal(field, fld.add(field, fld.add(field, a, b), c),
                                    fld.add(field, a, fld.add(field, b, c)))
            assert fld.arrays_equal(field, fld.mul(field, a, fld.add(field, b, c)),
                                    fld.add(field, fld.mul(field, a, b), fld.mul(field, a, c)))
            if not fld.scalar_eq(a, 0, field):
                assert fld.scalar_eq(
                    fld.mul(field, a, fld.inv_scalar(field, a)).item(), 1, field)


def check_roots():
    for field, ns in ((_C, (1, 2, 3, 4, 12, 360)), (_GF, (1, 2, 16, 4096)),
                      (FieldSpec.prime_field(97), (2, 3, 12, 96))):
        for n in ns:
            table = fld.root_powers(field, n, np.arange(n))
            assert fld.scalar_eq(
                fld.mul(field, table[n - 1], table[1]).item() if n > 1 else table[0].item(),
                1, field)
            if field.is_prime_field:
                assert len(set(int(v) for v in table)) == n
            else:
                assert len(set(np.round(table, 9).tolist())) == n


def check_fft_matches_oracle():
    rng = np.random.default_rng(12)
    cases = [(_C, s) for s in (1, 2, 6, 12, 67, 128)]
    cases += [(_GF, s) for s in (1, 8, 256)]
    cases += [(FieldSpec.prime_field(97), s) for s in (12, 48, 96)]
    for field, s in cases:
        x = _rand_vec(field, s, rng)
        assert fld.arrays_equal(field, fft_fast(x).elems, dft_naive(x).elems)
        assert fld.arrays_equal(field, idft(dft_naive(x)).elems, x.elems)


def check_interleave_identity():
    rng = np.random.default_rng(13)
    for field in (_C, _GF):
        for s, m in ((8, 2), (64, 8), (60 if field is _C else 64, 4)):
            x = _rand_vec(field, s, rng)
            got = recombine_1d(sub_dft(interleave_1d(x, m)))
            assert fld.arrays_equal(field, got.elems, dft_naive(x).elems)


def check_mds_roundtrip():
    rng = np.random.default_rng(14)
    for field in (_GF, _C):
        code = make_code(field, 6, 3)
        msgs = [_rand_vec(field, 10, rng) for _ in range(3)]
        shares = encode_shares(code, msgs)
        for rows in combinations(range(6), 3):
            out = decode_shares(code, [shares[i] for i in rows])
            for got, want in zip(out, msgs):
                assert fld.arrays_equal(field, got.elems, want.elems)
    # single corrupted extra share is flagged
    code = make_code(_GF, 5, 2)
    msgs = [_rand_vec(_GF, 6, rng) for _ in range(2)]
    shares = encode_shares(code, msgs)
    bad = shares[4].payload.elems.copy()
    bad[3] = (bad[3] + 1) % _GF.p
    tampered = shares[:4] + [Share(4, Vector(bad, _GF))]
    verdict = check_consistency(code, tampered)
    assert not verdict.consistent and verdict.corrupt == {(4, 3)}


def check_recovery_threshold():
    rng = np.random.default_rng(15)
    for field in (_GF, _C):
        for m in (2, 4):
            cfg = ProblemConfig((32,), m, m + 2, field)
            strat = plan_strategy(cfg)
            x = _rand_vec(field, 32, rng)
            oracle = dft_naive(x)
            shares = encode_input(strat, x)
            results = [worker_compute(sh) for sh in shares]
            for rows in combinations(range(m + 2), m):
                got = master_decode(strat, [results[i] for i in rows])
                assert fld.arrays_equal(field, got.elems, oracle.elems)
            try:
                master_decode(strat, results[: m - 1])
            except InsufficientShares:
                pass
            else:
                raise AssertionError("m-1 results must not decode")
            assert all(len(sh.payload) == 32 // m for sh in shares)


def check_nd_and_multi():
    rng = np.random.default_rng(16)
    t = Tensor(rng.integers(0, _GF.p, size=(4, 4)), _GF)
    cfg = ProblemConfig((4, 4), 4, 6, _GF)
    oracle = dft_nd(t)
    for rows in combinations(range(6), 4):
        got = coded_fft_nd(cfg, t, respond=rows)
        assert fld.arrays_equal(_GF, got.elems, oracle.elems)
    plan = bundle_inputs(2, (4,), 4)
    inputs = [Tensor(rng.integers(0, _GF.p, size=(4,)), _GF) for _ in range(2)]
    outs = coded_fft_multi(plan, inputs, 6, respond=(1, 2, 4, 5))
    for got, t_in in zip(outs, inputs):
        assert fld.arrays_equal(_GF, got.elems, dft_nd(t_in).elems)


def check_thresholds_and_comm():
    assert baseline_threshold("coded", 12, 2) == 2
    assert baseline_threshold("shortdot", 12, 2) == 8
    assert baseline_threshold("repetition", 12, 2) == 10
    for m in range(2, 8):
        for n in range(m * m + 1, 65):
            if n % (m * m):
                continue
            c = baseline_threshold("coded", n, m)
            sd = baseline_threshold("shortdot", n, m)
            rep = baseline_threshold("repetition", n, m)
            assert c < sd < rep, (n, m, c, sd, rep)
    cfg = SimConfig(ProblemConfig((64,), 2, 12, _GF),
                    LatencyModel.shifted_exp(0.5, 1.0), 4, 7)
    outs = run_campaign(cfg)
    assert all(comm_load(o) == 64 for o in outs)


def check_witness():
    x, x2, subset = converse_witness(FieldSpec.prime_field(5), 2, 2)
    assert x != x2 and subset == (0,)


def check_sim_determinism():
    cfg = SimConfig(ProblemConfig((16,), 2, 6, _GF),
                    LatencyModel.shifted_exp(0.1, 2.0, 0.001), 5, 99)
    a = outcomes_to_csv(run_campaign(cfg))
    b = outcomes_to_csv(run_campaign(cfg))
    assert a == b


CHECKS = [
    ("field axioms", check_field_axioms),
    ("roots of unity", check_roots),
    ("fft equals direct evaluation", check_fft_matches_oracle),
    ("interleave/recombine identity", check_interleave_identity),
    ("mds round-trip and detection", check_mds_roundtrip),
    ("recovery threshold", check_recovery_threshold),
    ("n-d and multi-input pipelines", check_nd_and_multi),
    ("baseline thresholds and comm load", check_thresholds_and_comm),
    ("ambiguity witness", check_witness),
    ("simulator determinism", check_sim_determinism),
]


def run_all():
    rows = []
    for name, fn in CHECKS:
        try:
            fn()
            rows.append((name, True, ""))
        except Exception as exc:  # noqa: BLE001 - report, do not abort the battery
            rows.append((name, False, f"{type(exc).__name__}: {exc}"))
    return rows

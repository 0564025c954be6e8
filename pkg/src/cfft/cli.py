"""Command-line surface: transform | simulate | demo | verify."""

import argparse
import os
import sys

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
from .errors import CfftError, InsufficientShares, VectorFileError
from .fft import Tensor, Vector, dft_naive
from .field import FieldSpec
from .interleave import interleave_1d
from .sim import LatencyModel, SimConfig, outcomes_to_csv, run_campaign, summarize
from .vectorfile import read_tensor, write_tensor


def _parse_field(text: str) -> FieldSpec:
    if text == "complex":
        return FieldSpec.complex_field()
    if text.startswith("prime:"):
        return FieldSpec.prime_field(int(text.split(":", 1)[1]))
    raise ValueError(f"field must be 'complex' or 'prime:P', got {text!r}")


def _parse_latency(text: str) -> LatencyModel:
    kind, _, rest = text.partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            key, _, val = item.partition("=")
            params[key] = val
    if kind == "shifted-exp":
        return LatencyModel.shifted_exp(
            shift=float(params.get("shift", 0.0)),
            rate=float(params.get("mu", 1.0)),
            work=float(params.get("work", 0.0)),
        )
    if kind == "deterministic":
        return LatencyModel.deterministic(
            shift=float(params.get("shift", 0.0)), work=float(params.get("work", 0.0)))
    if kind == "trace":
        return LatencyModel.trace(
            params["path"], shift=float(params.get("shift", 0.0)),
            work=float(params.get("work", 0.0)))
    raise ValueError(f"unknown latency model {kind!r}")


def _parse_straggle(text: str, n_workers: int) -> set[int]:
    if not text:
        return set()
    idx = {int(v) for v in text.split(",")}
    if any(i < 0 or i >= n_workers for i in idx):
        raise ValueError(f"straggler index out of range 0..{n_workers - 1}")
    return idx


def _cmd_transform(args) -> int:
    tensor = read_tensor(args.input)
    if args.field is not None:
        want = _parse_field(args.field)
        if want != tensor.field:
            raise CfftError(
                f"file field {tensor.field} does not match requested {want}")
    n, m = args.workers, args.m
    straggle = _parse_straggle(args.straggle, n)
    respond = [i for i in range(n) if i not in straggle]
    if len(respond) < m:
        raise InsufficientShares(
            f"straggling {len(straggle)} of {n} workers leaves {len(respond)} < m={m}")
    if args.multi:
        shape = tensor.shape[1:]
        if not shape:
            raise CfftError("--multi needs the first axis to index the inputs")
        q = tensor.shape[0]
        plan = bundle_inputs(q, shape, m)
        inputs = [Tensor(tensor.elems[h], tensor.field) for h in range(q)]
        outs = coded_fft_multi(plan, inputs, n, respond=respond)
        out_tensor = Tensor(np.stack([t.elems for t in outs]), tensor.field)
    elif len(tensor.shape) == 1:
        cfg = ProblemConfig(tensor.shape, m, n, tensor.field)
        strategy = plan_strategy(cfg)
        shares = encode_input(strategy, Vector(tensor.elems, tensor.field))
        results = [worker_compute(shares[i]) for i in respond]
        out_tensor = Tensor(master_decode(strategy, results).elems, tensor.field)
    else:
        cfg = ProblemConfig(tensor.shape, m, n, tensor.field)
        out_tensor = Tensor(coded_fft_nd(cfg, tensor, respond=respond).elems, tensor.field)
    write_tensor(args.output, out_tensor)
    used = respond[:m]
    print(f"threshold m = {m} of N = {n} workers")
    print(f"workers used: {','.join(str(i) for i in used)}")
    print(f"communication: {out_tensor.elems.size} field elements")
    return 0


def _cmd_simulate(args) -> int:
    seed = args.seed
    env = os.environ.get("CFFT_SEED")
    if env is not None:
        seed = int(env)
    field = FieldSpec.prime_field()
    cfg = SimConfig(
        ProblemConfig((args.s,), args.m, args.n, field),
        _parse_latency(args.latency), args.trials, seed)
    outcomes = run_campaign(cfg)
    if outcomes and outcomes[0].skipped:
        for kind in outcomes[0].skipped:
            print(f"note: {kind} threshold undefined for N={args.n}, m={args.m}; "
                  "rows omitted", file=sys.stderr)
    with open(args.csv, "w", newline="") as fh:
        fh.write(outcomes_to_csv(outcomes))
    print(summarize(outcomes), end="")
    return 0


def _fmt_val(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    z = complex(v)
    re, im = z.real, z.imag
    if re == int(re) and im == int(im):
        re, im = int(re), int(im)
        if im == 0:
            return str(re)
        sign = "+" if im >= 0 else "-"
        mag = abs(im)
        return f"{re}{sign}{mag if mag != 1 else ''}i"
    return format(z, "g")


def _fmt_vec(arr) -> str:
    return "[" + ", ".join(_fmt_val(v) for v in arr) + "]"


def _cmd_demo(_args) -> int:
    """Walk the 4-point example: 3 workers, half storage each, threshold 2."""
    f = FieldSpec.complex_field()
    x = Vector([1, 2, 3, 4], f)
    cfg = ProblemConfig((4,), 2, 3, f)
    generator = [[1, 0], [0, 1], [1, 1]]
    strategy = plan_strategy(cfg, custom_generator=generator)
    parts = interleave_1d(x, 2)
    shares = encode_input(strategy, x)
    print(f"input x = {_fmt_vec(x.elems)}")
    print("decimated parts:")
    print(f"  c0 = {_fmt_vec(parts.parts[0])}")
    print(f"  c1 = {_fmt_vec(parts.parts[1])}")
    print("stored shares under generator [[1,0],[0,1],[1,1]]:")
    print(f"  a0 = c0      = {_fmt_vec(shares[0].payload.elems)}")
    print(f"  a1 = c1      = {_fmt_vec(shares[1].payload.elems)}")
    print(f"  a2 = c0 + c1 = {_fmt_vec(shares[2].payload.elems)}")
    b1 = worker_compute(shares[1])
    b2 = worker_compute(shares[2])
    print("worker 0 straggles; results received:")
    print(f"  b1 = {_fmt_vec(b1.payload.elems)}")
    print(f"  b2 = {_fmt_vec(b2.payload.elems)}")
    b0 = fld.sub(f, b2.payload.elems, b1.payload.elems)
    print(f"recovered b0 = b2 - b1 = {_fmt_vec(b0)}")
    out = master_decode(strategy, [b1, b2])
    print(f"output X = {_fmt_vec(out.elems)}")
    oracle = dft_naive(x)
    print(f"direct evaluation = {_fmt_vec(oracle.elems)}")
    ok = bool(np.array_equal(out.elems, oracle.elems))
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_verify(_args) -> int:
    from .selfcheck import run_all

    rows = run_all()
    failed = 0
    for name, ok, detail in rows:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name}"
        if detail:
            line += f"  ({detail})"
        print(line)
        failed += 0 if ok else 1
    print(f"{len(rows) - failed}/{len(rows)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfft",
        description="Erasure-coded distributed DFT with straggler simulation.")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("transform", help="transform a tensor file with injected stragglers")
    tr.add_argument("--input", required=True)
    tr.add_argument("--output", required=True)
    tr.add_argument("--m", type=int, required=True, help="storage fraction denominator")
    tr.add_argument("--workers", type=int, required=True, help="worker count N")
    tr.add_argument("--straggle", default="", help="comma-separated worker indices that never reply")
    tr.add_argument("--field", default=None, help="assert the file field: complex | prime:P")
    tr.add_argument("--multi", action="store_true",
                    help="treat the first axis as a batch of q independent inputs")
    tr.set_defaults(fn=_cmd_transform)

    si = sub.add_parser("simulate", help="run seeded straggler trials, write per-trial CSV")
    si.add_argument("--n", type=int, required=True, help="worker count N")
    si.add_argument("--m", type=int, required=True)
    si.add_argument("--s", type=int, required=True, help="input length")
    si.add_argument("--trials", type=int, default=100)
    si.add_argument("--seed", type=int, default=0, help="overridden by env CFFT_SEED")
    si.add_argument("--latency", default="shifted-exp:mu=1.0,shift=0.5,work=0.0",
                    help="shifted-exp:mu=F,shift=F,work=F | deterministic:shift=F,work=F "
                         "| trace:path=FILE")
    si.add_argument("--csv", required=True, help="output path for per-trial rows")
    si.set_defaults(fn=_cmd_simulate)

    de = sub.add_parser("demo", help="walk the 4-point worked example and self-check it")
    de.set_defaults(fn=_cmd_demo)

    ve = sub.add_parser("verify", help="run the invariant battery; nonzero exit on failure")
    ve.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InsufficientShares as exc:
        print(f"error: InsufficientShares: {exc}", file=sys.stderr)
        return 2
    except VectorFileError as exc:
        print(f"error: malformed tensor file: {exc}", file=sys.stderr)
        return 3
    except (CfftError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

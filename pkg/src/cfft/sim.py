"""Deterministic virtual-time straggler simulator.

Worker i's completion time in trial t is

    shift + work * (payload elements) + E

where E is an Exp(rate) draw from a splittable stream keyed by
(seed, t, i), zero for the deterministic model, or a file entry for
traces.  Streams are derived with numpy's SeedSequence, so campaigns are
bit-identical across hosts and thread schedules.  Strategies
are compared by their recovery threshold k: a strategy finishes at the
k-th smallest of the N worker times.  The coded strategy (k = m) also
runs the real encode / transform / decode pipeline each trial and checks
the answer against the direct-evaluation oracle before reporting.

Per-trial CSV schema (the external interface):
    trial,strategy,threshold_k,completion_time_s,comm_elements
"""

import io
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import field as fld
from .coded import ProblemConfig, Strategy, encode_input, master_decode, plan_strategy, worker_compute
from .errors import InapplicableBaseline, WitnessNotFound
from .fft import Vector, _transform_batch, dft_naive
from .field import FieldSpec

STRATEGIES = ("coded", "shortdot", "repetition")

# RNG stream entropy: a tag word right after the seed keeps the latency
# streams (seed, 0, trial, worker) and the input stream (seed, 1) disjoint.
_LATENCY_TAG = 0
_INPUT_TAG = 1


@dataclass(frozen=True)
class LatencyModel:
    """Completion-time model; sampled time is always >= shift."""

    kind: str  # "shifted-exp" | "deterministic" | "trace"
    shift: float = 0.0
    rate: float = 1.0
    work: float = 0.0
    trace_path: str | None = None

    def __post_init__(self):
        if self.kind not in ("shifted-exp", "deterministic", "trace"):
            raise ValueError(f"unknown latency model {self.kind!r}")
        if self.shift < 0 or self.work < 0:
            raise ValueError("shift and work must be nonnegative")
        if self.kind == "shifted-exp" and not self.rate > 0:
            raise ValueError("rate must be positive")
        if self.kind == "trace" and not self.trace_path:
            raise ValueError("trace model needs a file path")

    @classmethod
    def shifted_exp(cls, shift: float, rate: float, work: float = 0.0) -> "LatencyModel":
        return cls("shifted-exp", shift, rate, work)

    @classmethod
    def deterministic(cls, shift: float, work: float = 0.0) -> "LatencyModel":
        return cls("deterministic", shift, work=work)

    @classmethod
    def trace(cls, path: str, shift: float = 0.0, work: float = 0.0) -> "LatencyModel":
        return cls("trace", shift, work=work, trace_path=path)


@lru_cache(maxsize=8)
def _load_trace(path: str) -> tuple[float, ...]:
    # one float per line: the stochastic delay term, cycled over (trial, worker)
    with open(path) as fh:
        vals = tuple(float(line) for line in fh.read().split())
    if not vals:
        raise ValueError(f"trace file {path} is empty")
    return vals


@dataclass(frozen=True)
class SimConfig:
    problem: ProblemConfig
    latency: LatencyModel
    trials: int
    seed: int

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class StrategyOutcome:
    strategy: str
    threshold: int
    completion_time: float
    comm_elements: int


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    results: tuple[StrategyOutcome, ...]
    skipped: tuple[str, ...]  # strategies whose threshold is undefined here

    def outcome(self, strategy: str) -> StrategyOutcome:
        for r in self.results:
            if r.strategy == strategy:
                return r
        raise KeyError(strategy)


def baseline_threshold(kind: str, n_workers: int, m: int) -> int:
    """Recovery threshold of each strategy family at (N, m).

    coded: m.  shortdot: N - N/m + m (needs m | N and N >= m^2).
    repetition: N - N/m^2 + 1 (needs m^2 | N).
    """
    if kind == "coded":
        if m > n_workers:
            raise InapplicableBaseline(f"m={m} exceeds N={n_workers}")
        return m
    if kind == "shortdot":
        if n_workers % m != 0 or n_workers < m * m:
            raise InapplicableBaseline(f"shortdot undefined for N={n_workers}, m={m}")
        return n_workers - n_workers // m + m
    if kind == "repetition":
        if n_workers % (m * m) != 0:
            raise InapplicableBaseline(f"repetition undefined for N={n_workers}, m={m}")
        return n_workers - n_workers // (m * m) + 1
    raise ValueError(f"unknown strategy kind {kind!r}")


def _worker_times(cfg: SimConfig, trial: int) -> np.ndarray:
    n = cfg.problem.n_workers
    payload = cfg.problem.s // cfg.problem.m
    lat = cfg.latency
    base = lat.shift + lat.work * payload
    times = np.full(n, base, dtype=np.float64)
    if lat.kind == "shifted-exp":
        for i in range(n):
            ss = np.random.SeedSequence((cfg.seed, _LATENCY_TAG, trial, i))
            times[i] += np.random.default_rng(ss).exponential(1.0 / lat.rate)
    elif lat.kind == "trace":
        trace = _load_trace(lat.trace_path)
        for i in range(n):
            times[i] += trace[(trial * n + i) % len(trace)]
    return times


def _trial_input(cfg: SimConfig) -> Vector:
    prob = cfg.problem
    rng = np.random.default_rng(np.random.SeedSequence((cfg.seed, _INPUT_TAG)))
    if prob.field.is_prime_field:
        elems = rng.integers(0, prob.field.p, size=prob.s)
    else:
        elems = rng.standard_normal(prob.s) + 1j * rng.standard_normal(prob.s)
    return Vector(elems, prob.field)


def _coded_pipeline_check(strategy: Strategy, x: Vector, oracle: Vector,
                          times: np.ndarray) -> None:
    m = strategy.recovery_threshold
    fastest = np.argsort(times, kind="stable")[:m]  # ties broken by worker index
    shares = encode_input(strategy, x)
    results = [worker_compute(shares[i]) for i in sorted(int(i) for i in fastest)]
    out = master_decode(strategy, results)
    if not fld.arrays_equal(strategy.config.field, out.elems, oracle.elems):
        raise RuntimeError("coded pipeline output disagrees with the oracle")


def _run_trial_inner(cfg: SimConfig, trial: int, strategy: Strategy,
                     x: Vector, oracle: Vector) -> TrialOutcome:
    prob = cfg.problem
    times = _worker_times(cfg, trial)
    ordered = np.sort(times)
    payload = prob.s // prob.m
    results, skipped = [], []
    for kind in STRATEGIES:
        try:
            k = baseline_threshold(kind, prob.n_workers, prob.m)
        except InapplicableBaseline:
            skipped.append(kind)
            continue
        results.append(StrategyOutcome(kind, k, float(ordered[k - 1]), k * payload))
    _coded_pipeline_check(strategy, x, oracle, times)
    return TrialOutcome(trial, tuple(results), tuple(skipped))


def run_trial(cfg: SimConfig, trial_index: int) -> TrialOutcome:
    """One simulated trial; bit-identical for identical (config, index)."""
    strategy = plan_strategy(cfg.problem)
    x = _trial_input(cfg)
    return _run_trial_inner(cfg, trial_index, strategy, x, dft_naive(x))


def run_campaign(cfg: SimConfig) -> list[TrialOutcome]:
    """All trials of a config; the input and oracle are computed once."""
    strategy = plan_strategy(cfg.problem)
    x = _trial_input(cfg)
    oracle = dft_naive(x)
    return [_run_trial_inner(cfg, t, strategy, x, oracle) for t in range(cfg.trials)]


def comm_load(outcome: TrialOutcome) -> int:
    """Field elements the master pulls for the coded strategy: m * s/m = s."""
    return outcome.outcome("coded").comm_elements


def converse_witness(field: FieldSpec, s: int, m: int):
    """Two distinct inputs whose results agree on a fixed (m-1)-worker subset.

    Exhaustive search over all |F|^s inputs under the default strategy;
    demonstrates constructively that m-1 results cannot pin down the
    output.  Keep |F|^s small (<= ~1e6).  Returns (x, x_prime, subset) as
    tuples of ints; for m = 1 the subset is empty and any two inputs tie.
    """
    if not field.is_prime_field:
        raise ValueError("witness search needs a finite field")
    p = field.p
    if p**s > 2 * 10**6:
        raise ValueError(f"|F|^s = {p**s} too large for exhaustive search")
    total = p**s
    inputs = np.indices((p,) * s).reshape(s, -1).T  # lexicographic rows
    subset = tuple(range(m - 1))
    if m == 1:
        return tuple(inputs[0]), tuple(inputs[1]), subset
    strategy = plan_strategy(ProblemConfig((s,), m, m, field))
    gen = strategy.code.generator
    t = s // m
    parts = inputs.reshape(total, t, m).swapaxes(-1, -2)  # (total, m, t): c_i[j]
    keys = []
    for w in subset:
        payload = fld.mat_apply(field, gen[[w]], parts)[:, 0, :]  # (total, t)
        keys.append(_transform_batch(payload, field, +1))
    key_mat = np.concatenate(keys, axis=1) if keys else np.zeros((total, 0), np.int64)
    _, inverse, counts = np.unique(key_mat, axis=0, return_inverse=True, return_counts=True)
    dup_groups = np.nonzero(counts >= 2)[0]
    if dup_groups.size == 0:
        raise WitnessNotFound(f"no collision over GF({p})^{s} with m={m}")
    members = np.nonzero(inverse == dup_groups[0])[0][:2]
    return tuple(int(v) for v in inputs[members[0]]), tuple(int(v) for v in inputs[members[1]]), subset


def outcomes_to_csv(outcomes) -> str:
    """Per-trial rows in the external CSV schema."""
    buf = io.StringIO()
    buf.write("trial,strategy,threshold_k,completion_time_s,comm_elements\n")
    for out in outcomes:
        for r in out.results:
            buf.write(f"{out.trial},{r.strategy},{r.threshold},{r.completion_time!r},{r.comm_elements}\n")
    return buf.getvalue()


def summarize(outcomes) -> str:
    """Per-strategy aggregate CSV: mean / median / p95 completion time."""
    outcomes = sorted(outcomes, key=lambda o: o.trial)
    if not outcomes:
        raise ValueError("no outcomes to summarize")
    rows = ["strategy,threshold_k,trials,mean_s,median_s,p95_s,comm_elements"]
    for kind in STRATEGIES:
        times, threshold, comm = [], None, None
        for out in outcomes:
            for r in out.results:
                if r.strategy == kind:
                    times.append(r.completion_time)
                    threshold, comm = r.threshold, r.comm_elements
        if not times:
            continue
        arr = np.array(times)
        rows.append(
            f"{kind},{threshold},{arr.size},{float(arr.mean())!r},"
            f"{float(np.median(arr))!r},{float(np.percentile(arr, 95))!r},{comm}"
        )
    return "\n".join(rows) + "\n"

import numpy as np
import pytest

from cfft import (
    FieldSpec,
    LatencyModel,
    ProblemConfig,
    SimConfig,
    Vector,
    baseline_threshold,
    comm_load,
    converse_witness,
    encode_input,
    outcomes_to_csv,
    plan_strategy,
    run_campaign,
    run_trial,
    summarize,
    worker_compute,
)
from cfft.errors import InapplicableBaseline


def gf_config(s=16, m=2, n=6, trials=3, seed=5, latency=None):
    field = FieldSpec.prime_field()
    latency = latency or LatencyModel.shifted_exp(0.5, 1.0)
    return SimConfig(ProblemConfig((s,), m, n, field), latency, trials, seed)


def test_threshold_formulas():
    assert baseline_threshold("repetition", 12, 2) == 10
    assert baseline_threshold("shortdot", 12, 2) == 8
    assert baseline_threshold("coded", 12, 2) == 2


def test_threshold_applicability():
    with pytest.raises(InapplicableBaseline):
        baseline_threshold("shortdot", 10, 3)  # 3 does not divide 10
    with pytest.raises(InapplicableBaseline):
        baseline_threshold("shortdot", 6, 3)  # N < m^2: formula exceeds N
    with pytest.raises(InapplicableBaseline):
        baseline_threshold("repetition", 12, 3)  # 9 does not divide 12
    with pytest.raises(InapplicableBaseline):
        baseline_threshold("coded", 3, 4)


def test_threshold_dominance_algebraic():
    for m in range(2, 8):
        for n in range(m * m + 1, 65):
            if n % (m * m):
                continue
            assert (baseline_threshold("coded", n, m)
                    < baseline_threshold("shortdot", n, m)
                    < baseline_threshold("repetition", n, m))


def test_deterministic_latency_orders_by_threshold():
    cfg = gf_config(s=16, m=2, n=8, trials=1,
                    latency=LatencyModel.deterministic(shift=1.0, work=0.25))
    out = run_trial(cfg, 0)
    by_k = sorted(out.results, key=lambda r: r.threshold)
    times = [r.completion_time for r in by_k]
    assert times == sorted(times)
    # equal samples: every strategy sees the same k-th order statistic
    assert all(t == pytest.approx(1.0 + 0.25 * 8) for t in times)


def test_trial_determinism():
    cfg = gf_config(trials=2, seed=123)
    a = run_trial(cfg, 1)
    b = run_trial(cfg, 1)
    assert a == b
    c = run_trial(cfg, 0)
    assert c.results != a.results
    # campaign trials agree with standalone trials
    campaign = run_campaign(cfg)
    assert campaign[1] == a


def test_skipped_strategies_marked():
    field = FieldSpec.prime_field(101)  # 25 | p-1 = 100
    cfg = SimConfig(ProblemConfig((25,), 5, 12, field),
                    LatencyModel.shifted_exp(0.5, 1.0), 1, 5)
    out = run_trial(cfg, 0)
    assert set(out.skipped) == {"shortdot", "repetition"}
    assert [r.strategy for r in out.results] == ["coded"]


def test_mean_ordering_monte_carlo():
    cfg = gf_config(s=16, m=2, n=12, trials=200, seed=42)
    outs = run_campaign(cfg)
    means = {}
    for kind in ("coded", "shortdot", "repetition"):
        means[kind] = np.mean([o.outcome(kind).completion_time for o in outs])
    assert means["coded"] < means["shortdot"] < means["repetition"]


def test_comm_load_examples():
    out = run_trial(gf_config(s=4096, m=8, n=12, trials=1), 0)
    assert comm_load(out) == 4096
    out = run_trial(gf_config(s=16, m=1, n=4, trials=1), 0)
    assert comm_load(out) == 16
    for s, m in ((64, 2), (64, 8)):
        out = run_trial(gf_config(s=s, m=m, n=8, trials=1), 0)
        assert comm_load(out) == s  # m * (s/m) identically


def test_converse_witness_gf5():
    field = FieldSpec.prime_field(5)
    x, x2, subset = converse_witness(field, 2, 2)
    assert x != x2 and subset == (0,)
    # the two inputs really do collide at worker 0
    strat = plan_strategy(ProblemConfig((2,), 2, 2, field))
    results = []
    for vec in (x, x2):
        shares = encode_input(strat, Vector(list(vec), field))
        results.append(worker_compute(shares[0]).payload.elems)
    assert np.array_equal(results[0], results[1])


def test_converse_witness_gf3():
    field = FieldSpec.prime_field(3)
    x, x2, subset = converse_witness(field, 2, 2)
    assert x != x2 and len(subset) == 1


def test_converse_witness_trivial_m1():
    x, x2, subset = converse_witness(FieldSpec.prime_field(5), 2, 1)
    assert subset == () and x != x2


def test_converse_witness_larger_instance():
    # m-1 = 2 workers' results still cannot pin down 3 symbols
    x, x2, subset = converse_witness(FieldSpec.prime_field(5), 3, 3)
    assert subset == (0, 1) and x != x2


def test_pipeline_check_runs_every_trial():
    cfg = gf_config(s=32, m=4, n=6, trials=5)
    outs = run_campaign(cfg)
    assert len(outs) == 5
    assert all(o.outcome("coded").threshold == 4 for o in outs)


def test_csv_schema_and_determinism():
    cfg = gf_config(trials=4, seed=77)
    outs = run_campaign(cfg)
    csv = outcomes_to_csv(outs)
    lines = csv.strip().split("\n")
    assert lines[0] == "trial,strategy,threshold_k,completion_time_s,comm_elements"
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "coded" and first[2] == "2"
    assert csv == outcomes_to_csv(run_campaign(cfg))


def test_summarize_single_deterministic_trial():
    cfg = gf_config(trials=1, latency=LatencyModel.deterministic(shift=2.0))
    outs = run_campaign(cfg)
    text = summarize(outs)
    lines = text.strip().split("\n")
    assert lines[0] == "strategy,threshold_k,trials,mean_s,median_s,p95_s,comm_elements"
    coded = lines[1].split(",")
    assert coded[0] == "coded" and coded[2] == "1"
    assert float(coded[3]) == float(coded[4]) == float(coded[5]) == 2.0


def test_summarize_deterministic_text():
    cfg = gf_config(trials=50, seed=4242)
    assert summarize(run_campaign(cfg)) == summarize(run_campaign(cfg))


def test_trace_latency_model(tmp_path):
    trace = tmp_path / "trace.txt"
    trace.write_text("\n".join(str(0.1 * (i + 1)) for i in range(12)))
    cfg = gf_config(s=16, m=2, n=4, trials=2,
                    latency=LatencyModel.trace(str(trace), shift=1.0))
    out = run_trial(cfg, 0)
    # workers get entries 0.1..0.4; coded finishes at the 2nd smallest
    assert out.outcome("coded").completion_time == pytest.approx(1.2)
    out1 = run_trial(cfg, 1)  # entries cycle: 0.5..0.8
    assert out1.outcome("coded").completion_time == pytest.approx(1.6)

"""Erasure-coded distributed DFT with any-m-of-N recovery.

The input is decimated into m parts, MDS-encoded across N workers, each
worker transforms its coded share, and the master rebuilds the full
transform from any m results.  Includes an exact prime-field path, an
n-dimensional and a multi-input variant, a deterministic straggler
simulator, and a small CLI (``cfft``).
"""

from . import errors
from .coded import (
    BundlePlan,
    ProblemConfig,
    Strategy,
    WorkerResult,
    bundle_inputs,
    coded_fft_multi,
    coded_fft_nd,
    encode_input,
    master_decode,
    plan_strategy,
    worker_compute,
)
from .fft import Tensor, Vector, dft_naive, dft_nd, fft_fast, idft
from .field import (
    DEFAULT_PRIME,
    FieldSpec,
    arrays_equal,
    dft_matrix,
    primitive_root_of_unity,
    root_powers,
    scalar_eq,
)
from .interleave import (
    InterleavedSet,
    NdFactors,
    choose_factors_nd,
    deinterleave_1d,
    interleave_1d,
    interleave_nd,
    recombine_1d,
    recombine_nd,
    sub_dft,
)
from .mds import (
    ConsistencyVerdict,
    MdsCode,
    Share,
    check_consistency,
    decode_shares,
    encode_shares,
    make_code,
)
from .sim import (
    LatencyModel,
    SimConfig,
    StrategyOutcome,
    TrialOutcome,
    baseline_threshold,
    comm_load,
    converse_witness,
    outcomes_to_csv,
    run_campaign,
    run_trial,
    summarize,
)
from .vectorfile import read_tensor, write_tensor

__version__ = "0.1.0"

__all__ = [
    "BundlePlan",
    "ConsistencyVerdict",
    "DEFAULT_PRIME",
    "FieldSpec",
    "InterleavedSet",
    "LatencyModel",
    "MdsCode",
    "NdFactors",
    "ProblemConfig",
    "Share",
    "SimConfig",
    "Strategy",
    "StrategyOutcome",
    "Tensor",
    "TrialOutcome",
    "Vector",
    "WorkerResult",
    "arrays_equal",
    "baseline_threshold",
    "bundle_inputs",
    "check_consistency",
    "choose_factors_nd",
    "coded_fft_multi",
    "coded_fft_nd",
    "comm_load",
    "converse_witness",
    "decode_shares",
    "deinterleave_1d",
    "dft_matrix",
    "dft_naive",
    "dft_nd",
    "encode_input",
    "encode_shares",
    "errors",
    "fft_fast",
    "idft",
    "interleave_1d",
    "interleave_nd",
    "make_code",
    "master_decode",
    "outcomes_to_csv",
    "plan_strategy",
    "primitive_root_of_unity",
    "read_tensor",
    "recombine_1d",
    "recombine_nd",
    "root_powers",
    "run_campaign",
    "run_trial",
    "scalar_eq",
    "sub_dft",
    "summarize",
    "worker_compute",
    "write_tensor",
]

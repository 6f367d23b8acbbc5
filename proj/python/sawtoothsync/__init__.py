"""Sawtooth-model RTT clock synchronization and ranging toolkit."""

from sawtoothsync._core import (  # noqa: F401
    DensityGrid,
    DistanceResult,
    EstimationResult,
    EventSimConfig,
    EventTrace,
    GenericParams,
    GgsResult,
    GridConfig,
    KnownPhysical,
    Mat2,
    NoiseParams,
    OffsetTarget,
    PhysicalEstimate,
    PhysicalParams,
    PhysicalTarget,
    PsiModel,
    Trace,
    UnwrappedParams,
    WrappedNormal,
    ambiguous_pair,
    crlb_offset_known_line,
    crlb_physical,
    distribution_distance,
    epsilon_plus,
    epsilon_plus_limit,
    fisher,
    generic_to_physical,
    ggs_estimate,
    inverse_fisher,
    lgs_estimate,
    ls_offset,
    map_physical_to_unwrapped,
    mean_at,
    mod1,
    p_pdf,
    pcp_estimate,
    phase_error,
    physical_to_generic,
    prediction_mse,
    rtt_deterministic,
    run_experiment_json,
    run_protocol,
    sample_trace,
    slave_next_upflank,
    tdc_slave_deterministic,
    wrap_half,
    y_pdf,
)

__version__ = "0.1.0"

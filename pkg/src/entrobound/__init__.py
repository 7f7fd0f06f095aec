"""Energy-constrained entropic continuity bounds with empirical certification.

The package evaluates continuity bounds for entropic quantities under a
mean-energy constraint, constructs the purified mixing decompositions
behind them, and stress-tests every advertised inequality on randomized
state families.  All entropies are in nats.
"""
from .afw import AfwCertificate, afw_decompose, energy_estimate, jordan_vectors
from .bounds import (
    BoundDescriptor,
    BoundResult,
    PRESETS,
    bound_curve,
    bound_from_envelopes,
    continuity_bound,
    continuity_bound_finite,
    continuity_bound_oscillator,
)
from .channels import (
    Channel,
    amplitude_damping_channel,
    apply_channel,
    apply_local,
    attenuator_channel,
    channel_mi,
    channel_zoo,
    dephasing_channel,
    depolarizing_channel,
    identity_channel,
    make_channel,
    output_holevo,
    stinespring,
)
from .ensembles import (
    Ensemble,
    TransportPlan,
    ordered_distance,
    qc_state,
    split_ensemble,
    transport_distance,
    transport_plan,
)
from .entropy import (
    binary_entropy,
    checked_sub,
    conditional_entropy,
    holevo_chi,
    mutual_information,
    relative_entropy,
    thermal_entropy,
    von_neumann_entropy,
)
from .errors import BoundViolationError, NumericalError, ValidationError
from .gibbs import (
    GibbsSolution,
    GrowthReport,
    SpectrumModel,
    entropy_growth_diagnostic,
    gibbs_family_distance,
    gibbs_state,
    log_power_growth_diagnostic,
    max_entropy,
    max_entropy_with_tail,
    mean_energy,
    oscillator_entropy_cap,
    solve_inverse_temperature,
)
from .operators import (
    DensityMatrix,
    HermitianOperator,
    PureStateVector,
    SubsystemShape,
    aligned_purifications,
    fidelity,
    jordan_parts,
    partial_trace,
    purify,
    tensor,
    trace_norm,
)
from .verify import (
    LaaReport,
    SweepConfig,
    SweepReport,
    SweepRow,
    default_sweep_suite,
    laa_check,
    run_suite,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AfwCertificate",
    "BoundDescriptor",
    "BoundResult",
    "BoundViolationError",
    "Channel",
    "DensityMatrix",
    "Ensemble",
    "GibbsSolution",
    "GrowthReport",
    "HermitianOperator",
    "LaaReport",
    "NumericalError",
    "PRESETS",
    "PureStateVector",
    "SpectrumModel",
    "SubsystemShape",
    "SweepConfig",
    "SweepReport",
    "SweepRow",
    "TransportPlan",
    "ValidationError",
    "afw_decompose",
    "aligned_purifications",
    "amplitude_damping_channel",
    "apply_channel",
    "apply_local",
    "attenuator_channel",
    "binary_entropy",
    "bound_curve",
    "bound_from_envelopes",
    "channel_mi",
    "channel_zoo",
    "checked_sub",
    "conditional_entropy",
    "continuity_bound",
    "continuity_bound_finite",
    "continuity_bound_oscillator",
    "default_sweep_suite",
    "dephasing_channel",
    "depolarizing_channel",
    "energy_estimate",
    "entropy_growth_diagnostic",
    "fidelity",
    "gibbs_family_distance",
    "gibbs_state",
    "holevo_chi",
    "identity_channel",
    "jordan_parts",
    "jordan_vectors",
    "laa_check",
    "log_power_growth_diagnostic",
    "make_channel",
    "max_entropy",
    "max_entropy_with_tail",
    "mean_energy",
    "mutual_information",
    "ordered_distance",
    "oscillator_entropy_cap",
    "output_holevo",
    "partial_trace",
    "purify",
    "qc_state",
    "relative_entropy",
    "run_suite",
    "run_sweep",
    "solve_inverse_temperature",
    "split_ensemble",
    "stinespring",
    "tensor",
    "thermal_entropy",
    "trace_norm",
    "transport_distance",
    "transport_plan",
    "von_neumann_entropy",
]

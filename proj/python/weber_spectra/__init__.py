"""Weber hydrogen toolkit: fine-structure levels, radial actions, rosette orbits
and retarded-potential checks, backed by a C++ core."""

from ._core import (  # noqa: F401
    ActionMethod,
    ActionResult,
    EnergyLevel,
    Error,
    IntegratorConfig,
    LevelMethod,
    ModelParams,
    Model,
    Pair,
    PhaseState,
    QuantumNumbers,
    Scheme,
    TurningPoints,
    __version__,
    apsidal_angle,
    critical_radius,
    eval_hamiltonian,
    flow_field,
    integrate,
    level_coulomb,
    level_exact,
    level_second_order_weber,
    level_sommerfeld,
    measure_periproton_shift,
    metric_components,
    neumann_action,
    radial_action_closed_form,
    radial_action_quadrature,
    radial_momentum,
    retarded_action,
    rosette_closure,
    spectrum_table,
    taylor_coefficient_analytic,
    taylor_coefficient_numeric,
    transition_frequency,
    truncation_error,
    turning_points,
    weber_sommerfeld_split,
)

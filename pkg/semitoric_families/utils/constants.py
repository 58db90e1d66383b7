# Numerical policy shared by the analytic modules
from semitoric_families.enums.system_id_enum import SystemIdEnum

# Finite differences: central differences with one Richardson level.
# The step is relative: h = FD_STEP * (1 + |x|).
FD_STEP = 4e-3
FD_RICHARDSON_LEVELS = 1

# Residual accepted for a fixed point (gradient norm in chart coordinates)
FIXED_POINT_RESIDUAL = 1e-8

# Poisson bracket tolerance under finite differences
POISSON_TOLERANCE = 1e-8

# Chart-domain tolerance (radicands slightly below zero are clamped)
RADICAND_TOLERANCE = 1e-12
SPHERE_TOLERANCE = 1e-12

# Williamson classification
DIRECTION_NET_SIZE = 64
DIRECTION_NET_REFINEMENT = 4
DEGENERACY_MARGIN = 1e-7
STRUCTURAL_DEGENERACY_MARGIN = 1e-9
EVEN_POLYNOMIAL_TOLERANCE = 1e-10

# Transition times
TRANSITION_SAMPLES = 201
TRANSITION_TOLERANCE = 1e-10

# Reduced spaces
ENDPOINT_MARGIN = 1e-7
MORSE_TOLERANCE = 1e-8
RADIAL_SAMPLES = 2000
ROOT_TOLERANCE = 1e-13

# Fixed-point quartic for the moving A/B family
QUARTIC_TOLERANCE = 1e-12

# Heights
QUADRATURE_RELATIVE_TOLERANCE = 1e-10
QUADRATURE_LIMIT = 200
MONTE_CARLO_SAMPLES = 10_000_000
MONTE_CARLO_SEED = 20240131
MONTE_CARLO_CHUNK = 1_000_000
GAMMA_GRID_SIZE = 20
CROSSING_TOLERANCE = 1e-8

# Momentum images
MIN_RESOLUTION = 8

# Thread count for grid work
THREADS_ENV_VAR = "SEMITORIC_FAMILIES_THREADS"

# CLI exit codes
EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_NUMERICAL = 4

# CLI system slugs
SYSTEM_SLUGS = {
    "coupled": SystemIdEnum.COUPLED_ANGULAR,
    "hp-2param": SystemIdEnum.HP_TWO_PARAM,
    "w1-moving": SystemIdEnum.W1_MOVING_AB,
    "w1-switch": SystemIdEnum.W1_SWITCH,
    "w1-hyperbolic": SystemIdEnum.W1_HYPERBOLIC,
    "w2-trans-b": SystemIdEnum.W2_TRANS_B,
    "w2-trans-c": SystemIdEnum.W2_TRANS_C,
    "w2-2param": SystemIdEnum.W2_TWO_PARAM,
    "degen-appearance": SystemIdEnum.DEGEN_APPEARANCE,
    "degen-become": SystemIdEnum.DEGEN_BECOME,
    "degen-collapse": SystemIdEnum.DEGEN_COLLAPSE,
}

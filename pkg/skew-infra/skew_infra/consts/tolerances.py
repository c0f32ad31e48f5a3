LENGTHS_RESIDUAL = 1e-30
PF_RESIDUAL = 1e-12
DISCONTINUITY_DISTANCE = 1e-9
EVALUATION_RELATIVE = 1e-12
MEASURE_ABSOLUTE = 1e-10
MEASURE_RELATIVE = 1e-10
LENGTHS_AGREEMENT = 1e-10
BIRKHOFF_FREQUENCY = 5e-3
CONTINUITY_RATIO = 1.0

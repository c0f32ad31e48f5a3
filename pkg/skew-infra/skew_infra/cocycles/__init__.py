from .certificate import AperiodicityCertificate, amplify_for_common_prefix, common_prefix, verify_certificate
from .closure import (
    concatenate_cycles,
    cycle_difference,
    delta_closure_probe,
    random_cycle,
    validate_cycle,
)
from .floor import FloorCocycle, floor_cocycle_f
from .tail import (
    SkewedPathState,
    project_state,
    skewed_adic_step,
    skewed_adic_step_back,
    skewed_shift_step,
    tail_cocycle,
    tail_orbit_witness,
    tail_recurrence_residuals,
)

__all__ = [
    "AperiodicityCertificate",
    "amplify_for_common_prefix",
    "common_prefix",
    "verify_certificate",
    "concatenate_cycles",
    "cycle_difference",
    "delta_closure_probe",
    "random_cycle",
    "validate_cycle",
    "FloorCocycle",
    "floor_cocycle_f",
    "SkewedPathState",
    "project_state",
    "skewed_adic_step",
    "skewed_adic_step_back",
    "skewed_shift_step",
    "tail_cocycle",
    "tail_orbit_witness",
    "tail_recurrence_residuals",
]

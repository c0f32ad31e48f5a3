from .continuity import (
    ContinuityProfile,
    ContinuityRow,
    continuity_profile,
    cylinder_family,
    cylinder_id,
    grid_axes,
    psi_samples,
)
from .counting import b_counts, level_counting_matrix, path_enumeration_matrix
from .measure import (
    MaharamMeasure,
    MaharamParameter,
    MeasureRow,
    MeasureTable,
    birkhoff_consistency,
    boundary_orbit_has_no_atoms,
    invariance_recurrence_check,
    invariance_step_check,
    measure_table,
    sample_cylinders,
    table_marginal_check,
)
from .perron import PerronData, perron

__all__ = [
    "ContinuityProfile",
    "ContinuityRow",
    "continuity_profile",
    "cylinder_family",
    "cylinder_id",
    "grid_axes",
    "psi_samples",
    "b_counts",
    "level_counting_matrix",
    "path_enumeration_matrix",
    "MaharamMeasure",
    "MaharamParameter",
    "MeasureRow",
    "MeasureTable",
    "birkhoff_consistency",
    "boundary_orbit_has_no_atoms",
    "invariance_recurrence_check",
    "invariance_step_check",
    "measure_table",
    "sample_cylinders",
    "table_marginal_check",
    "PerronData",
    "perron",
]

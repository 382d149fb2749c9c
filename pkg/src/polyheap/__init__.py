"""Stacked heaps of dimers, Motzkin excursions with catastrophes, and the
size-preserving bijections between them (plus directed-animal images)."""

from .animals import (
    Animal,
    NotAnAnimal,
    ParityViolation,
    animal_to_heap,
    enumerate_directed_animals,
    heap_to_animal,
    is_directed,
    is_stacked_directed,
)
from .bijection import omega, omega_inv, phi, phi_inv, psi, psi_inv
from .heaps import (
    Dimer,
    Factorization,
    Heap,
    HeapError,
    HeapFlags,
    NotAPyramid,
    NotConnected,
    NotHalfPyramid,
    NotStacked,
    NotStrict,
    SizeTooLarge,
    classify,
    compose,
    enumerate_heaps,
    pyramidal_factors,
    refall,
    right_width,
    width,
)
from .paths import (
    InvalidPath,
    Mode,
    PathStats,
    altitude_profile,
    completion_table,
    enumerate_paths,
    exact_expectations,
    excursion_count,
    excursion_counts,
    sample_uniform,
    validate,
)
from .series import (
    BiSeries,
    Series,
    TriSeries,
    check_identities,
    series_catastrophe_excursions,
    series_half_pyramids,
    series_motzkin_excursions,
    series_motzkin_meanders,
    series_pyramids,
    series_stacked,
)
from .stats import (
    ASYMPTOTICS,
    AsymptoticConstants,
    StatReport,
    chi_square_uniform,
    expected_catastrophe_total,
    expected_minimal_dimers,
    expected_se_count,
    growth_check,
    instance_width_bounds,
    width_stats,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]

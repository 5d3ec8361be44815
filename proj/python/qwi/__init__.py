"""Bound states of piecewise-constant 1D potentials: matching, transfer matrices,
wave impedance and Green's functions, with a finite-difference cross-check."""

from ._qwi import (
    BoundState,
    CommandResult,
    ConvergenceError,
    DegenerateWavenumberError,
    DomainError,
    InconsistentStateError,
    Method,
    ParseError,
    PoleError,
    PotentialProfile,
    QwiError,
    UnitSystem,
    UnsupportedProfileError,
    ValidationError,
    compare,
    dispersion_residual,
    eigenfunction_density,
    find_bound_states,
    green_diagonal,
    input_impedance,
    interface_matrix,
    load_profile,
    normalization,
    oracle_energies,
    solve,
    total_transfer,
    wavefunction,
)

__version__ = "0.1.0"

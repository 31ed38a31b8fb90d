"""Heisenberg measurements in orthogonal geometries of arbitrary signature."""

from .bell import (
    BellReport,
    Witness,
    bell_check,
    bell_number,
    hilbert_feasibility,
    hilbert_rescaled_check,
    pair_expectation,
    violation_search,
)
from .errors import (
    DimensionError,
    GeometryError,
    NumericalFailure,
    PreconditionError,
    QlabError,
    SizeError,
    UnsupportedGeometryError,
)
from .evolution import (
    EvolutionTrace,
    InteractionSystem,
    cesaro_converged,
    evolve,
    hermitian_lift,
    interaction_value,
)
from .geometry import (
    GeometricSpace,
    Isometry,
    StateVector,
    block_unitary_isometry,
    inner,
    is_isometry,
    is_state,
    quadric_norm,
    same_time_slice,
    signed_parts,
)
from .linalg import SpectralDecomposition, adjoint, commute, is_hermitian, is_unitary, spectral_decompose
from .measurement import (
    Instrument,
    Reinterpretation,
    SignedDensity,
    density,
    eigen_groups,
    is_psd_in_state,
    jointly_observable_hilbert,
    marginal,
    marginal_psd,
    measure,
    observable_matrix,
    reinterpret,
)
from .scenario import Scenario, ScenarioError, load_fixture, parse_scenario, run, serialize

__version__ = "0.1.0"

__all__ = [
    "BellReport",
    "DimensionError",
    "EvolutionTrace",
    "GeometricSpace",
    "GeometryError",
    "Instrument",
    "InteractionSystem",
    "Isometry",
    "NumericalFailure",
    "PreconditionError",
    "QlabError",
    "Reinterpretation",
    "Scenario",
    "ScenarioError",
    "SignedDensity",
    "SizeError",
    "SpectralDecomposition",
    "StateVector",
    "UnsupportedGeometryError",
    "Witness",
    "adjoint",
    "bell_check",
    "bell_number",
    "block_unitary_isometry",
    "cesaro_converged",
    "commute",
    "density",
    "eigen_groups",
    "evolve",
    "hermitian_lift",
    "hilbert_feasibility",
    "hilbert_rescaled_check",
    "inner",
    "interaction_value",
    "is_hermitian",
    "is_isometry",
    "is_psd_in_state",
    "is_state",
    "is_unitary",
    "jointly_observable_hilbert",
    "load_fixture",
    "marginal",
    "marginal_psd",
    "measure",
    "observable_matrix",
    "pair_expectation",
    "parse_scenario",
    "quadric_norm",
    "reinterpret",
    "run",
    "same_time_slice",
    "serialize",
    "signed_parts",
    "spectral_decompose",
    "violation_search",
]

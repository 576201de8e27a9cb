"""epistrict: epistemically restricted classical theories of quadrature
variables, qudit stabilizer subtheories, the discrete Wigner
representation that connects them, and a discretized Moyal star product.

Backends: exact rational (QQ), odd prime fields (GF(d)) and floating
point (RR) for the classical side; dense NumPy for the quantum side.
"""

from .fields import GF, QQ, RR, FieldMismatchError, PrimeField
from .symplectic import (
    AffineSymplecticMap,
    QuadratureFunctional,
    Subspace,
    enumerate_isotropic,
    enumerate_lagrangian,
    functional,
    is_isotropic,
    is_lagrangian,
    omega_complement,
    poisson_bracket_oracle,
    random_symplectic,
    symplectic_product,
)
from .epistricted import (
    UNKNOWN,
    EpistemicState,
    NonIsotropicKnownSet,
    enumerate_pure_states,
    evaluate,
    make_state,
    maximally_mixed_state,
    measure,
    measure_real,
    ontic_support,
    transform,
)
from .weyl import QuditSystem
from .wigner import (
    WignerTable,
    inverse_wigner,
    phase_point_operator,
    wigner_function,
    wigner_overlap,
)
from .equivalence import (
    EquivalenceReport,
    check_measurement_statistics,
    check_transformation_covariance,
    check_wigner_support,
    epistemic_to_quantum,
    verify_finite_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "RR", "PrimeField", "FieldMismatchError",
    "QuadratureFunctional", "functional", "Subspace",
    "AffineSymplecticMap", "symplectic_product", "poisson_bracket_oracle",
    "is_isotropic", "is_lagrangian", "omega_complement",
    "enumerate_isotropic", "enumerate_lagrangian", "random_symplectic",
    "EpistemicState", "NonIsotropicKnownSet", "UNKNOWN", "make_state",
    "maximally_mixed_state", "evaluate", "ontic_support", "transform",
    "measure", "measure_real", "enumerate_pure_states",
    "QuditSystem",
    "WignerTable", "phase_point_operator", "wigner_function",
    "inverse_wigner", "wigner_overlap",
    "EquivalenceReport", "epistemic_to_quantum", "check_wigner_support",
    "check_measurement_statistics", "check_transformation_covariance",
    "verify_finite_equivalence",
]

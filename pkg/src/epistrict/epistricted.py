"""The epistemically restricted classical theory.

A state is an isotropic known set V with a valuation on its canonical
basis rows.  Validity (only Poisson-commuting quadratures may be jointly
known) is enforced at construction.  Over Z_d, measurement statistics are
exact rationals from support counting; over Q the backend reports
certainty flags instead of densities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .fields import PrimeField
from .symplectic import (
    AffineSymplecticMap,
    QuadratureFunctional,
    Subspace,
    is_isotropic,
    is_lagrangian,
    omega_complement,
)


class NonIsotropicKnownSet(ValueError):
    """Classical complementarity violation: known set is not isotropic."""


class _Unknown:
    def __repr__(self):
        return "Unknown"

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class EpistemicState:
    V: Subspace
    values: tuple

    def __post_init__(self):
        if not is_isotropic(self.V):
            raise NonIsotropicKnownSet(
                "known set must be isotropic (Poisson-commuting)"
            )
        vals = tuple(self.V.field.of(v) for v in self.values)
        if len(vals) != self.V.dim:
            raise ValueError("one value per canonical basis row of V required")
        object.__setattr__(self, "values", vals)

    @property
    def field(self):
        return self.V.field

    @property
    def n(self) -> int:
        return self.V.ambient_dim // 2

    def is_pure(self) -> bool:
        return is_lagrangian(self.V)


def make_state(V: Subspace, values) -> EpistemicState:
    return EpistemicState(V, tuple(values))


def maximally_mixed_state(field, n: int) -> EpistemicState:
    return EpistemicState(Subspace(field, 2 * n), ())


def evaluate(state: EpistemicState, f: QuadratureFunctional):
    """Value of f if its linear part is known, UNKNOWN otherwise."""
    field = state.field
    if not state.V.rows:
        coords = None
    else:
        coords = linalg.solve(field, linalg.transpose(state.V.rows), f.coeffs)
    if coords is None:
        if linalg.is_zero_vec(field, f.coeffs):
            return f.constant
        return UNKNOWN
    val = f.constant
    for c, v in zip(coords, state.values):
        val = field.add(val, field.mul(c, v))
    return val


@dataclass(frozen=True)
class OnticSupport:
    particular: tuple
    directions: Subspace

    def size(self) -> int:
        d = self.directions.field.char
        if not d:
            raise ValueError("finite support only over Z_d")
        return d ** self.directions.dim

    def points(self):
        field = self.directions.field
        return [
            linalg.vec_add(field, self.particular, v)
            for v in self.directions.vectors()
        ]


def ontic_support(state: EpistemicState) -> OnticSupport:
    """The affine solution set of {f.m = v(f), f in basis(V)}."""
    field = state.field
    dim = state.V.ambient_dim
    if not state.V.rows:
        particular = tuple(field.zero for _ in range(dim))
        directions = Subspace(field, dim, linalg.identity(field, dim))
    else:
        particular = linalg.solve(field, state.V.rows, state.values)
        directions = Subspace(field, dim, linalg.kernel(field, state.V.rows))
    return OnticSupport(particular, directions)


def transform(state: EpistemicState, T: AffineSymplecticMap) -> EpistemicState:
    """Push the state through m -> S m + a.

    Known functionals map to f o T^{-1}; values follow from transporting
    one support point, which transports the whole support exactly.
    """
    field = state.field
    S_inv = linalg.inverse(field, T.S)
    new_rows = linalg.mat_mul(field, state.V.rows, S_inv) if state.V.rows else ()
    new_V = Subspace(field, state.V.ambient_dim, new_rows)
    m0 = T.apply(ontic_support(state).particular)
    new_values = tuple(linalg.dot(field, row, m0) for row in new_V.rows)
    return EpistemicState(new_V, new_values)


@dataclass(frozen=True)
class MeasurementOutcome:
    valuation: tuple            # values on the canonical basis rows of W
    probability: Fraction
    post_state: EpistemicState


@dataclass(frozen=True)
class MeasurementOutcomeDistribution:
    W: Subspace
    outcomes: tuple

    def probabilities(self):
        return {o.valuation: o.probability for o in self.outcomes}


def measure(state: EpistemicState, W: Subspace) -> MeasurementOutcomeDistribution:
    """Sharp measurement of the isotropic set W on a Z_d state.

    Outcome probability is the fraction of the ontic support consistent
    with the outcome valuation; the post-state knows W plus whatever part
    of V commutes with W (retained values).
    """
    field = state.field
    if not isinstance(field, PrimeField):
        raise ValueError("exact distributions require the Z_d backend; "
                         "use measure_real over Q")
    if not is_isotropic(W):
        raise NonIsotropicKnownSet("measured set must be isotropic")
    d = field.char
    dim = state.V.ambient_dim
    total = d ** (dim - state.V.dim)
    retained = state.V.intersect(omega_complement(W))
    post_V = W.add(retained)

    outcomes = []
    for w in itertools.product(field.elements(), repeat=W.dim):
        A = state.V.rows + W.rows
        b = state.values + w
        m1 = linalg.solve(field, A, b)
        if m1 is None:
            continue
        count = d ** (dim - linalg.rank(field, A))
        post_values = tuple(linalg.dot(field, row, m1) for row in post_V.rows)
        outcomes.append(
            MeasurementOutcome(
                valuation=w,
                probability=Fraction(count, total),
                post_state=EpistemicState(post_V, post_values),
            )
        )
    return MeasurementOutcomeDistribution(W, tuple(outcomes))


@dataclass(frozen=True)
class RealMeasurementReport:
    W: Subspace
    known: tuple        # per basis row of W: value or UNKNOWN
    deterministic: bool


def measure_real(state: EpistemicState, W: Subspace) -> RealMeasurementReport:
    """Certainty report over R: continuous outcome densities are a non-goal."""
    if not is_isotropic(W):
        raise NonIsotropicKnownSet("measured set must be isotropic")
    known = tuple(
        evaluate(state, QuadratureFunctional(state.field, row, state.field.zero))
        for row in W.rows
    )
    deterministic = all(k is not UNKNOWN for k in known)
    return RealMeasurementReport(W, known, deterministic)


def enumerate_pure_states(field: PrimeField, n: int):
    """All (Lagrangian V, valuation) pairs over Z_d."""
    from .symplectic import enumerate_lagrangian

    states = []
    for V in enumerate_lagrangian(n, field):
        for vals in itertools.product(field.elements(), repeat=V.dim):
            states.append(EpistemicState(V, vals))
    return states

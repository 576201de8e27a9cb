"""Executable dictionary between the restricted classical theory over Z_d
and the qudit stabilizer subtheory.

An epistemic state (isotropic V, valuation v) maps to the normalized
projector onto the joint eigenspace of the quadrature observables in V at
the stated values.  The checks compare, side by side:

  * Wigner support: the quasiprobability of the mapped state is uniform
    and positive exactly on the ontic support;
  * measurement statistics and post-measurement updates (Lueders rule vs
    support counting and commutant retention);
  * dynamics: affine symplectic maps m -> S m + a against W(a) V(S).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .epistricted import (
    EpistemicState,
    enumerate_pure_states,
    measure,
    ontic_support,
    transform,
)
from .fields import PrimeField
from .symplectic import (
    AffineSymplecticMap,
    Subspace,
    enumerate_isotropic,
    random_symplectic,
)
from .weyl import QuditSystem
from .wigner import wigner_function


def epistemic_to_quantum(system: QuditSystem, state: EpistemicState) -> np.ndarray:
    """Density matrix of the quadrature eigenspace projector for (V, v)."""
    if system.field.char != state.field.char:
        raise ValueError("field mismatch between system and state")
    if not state.V.rows:
        return np.eye(system.dim, dtype=complex) / system.dim
    pvm = system.joint_pvm(state.V.rows)
    P = pvm[tuple(int(v) for v in state.values)]
    tr = np.trace(P).real
    if tr < 0.5:
        raise ValueError("empty joint eigenspace: inconsistent valuation")
    return P / tr


def stabilizer_projector_oracle(system: QuditSystem, state: EpistemicState) -> np.ndarray:
    """Independent construction: group average over the known set,

        P = d^{-k} sum_{f in V} omega^{-v(f)} W(-J f),

    with v extended linearly to all of V.  Used to cross-check
    epistemic_to_quantum.
    """
    d = system.d
    J = system.J()
    P = np.zeros((system.dim, system.dim), dtype=complex)
    k = state.V.dim
    rows = [np.array([int(x) for x in r], dtype=np.int64) for r in state.V.rows]
    vals = [int(v) for v in state.values]
    count = 0
    for coeffs in itertools.product(range(d), repeat=k):
        f = sum((c * r for c, r in zip(coeffs, rows)),
                np.zeros(2 * system.n, dtype=np.int64)) % d
        v = sum(c * val for c, val in zip(coeffs, vals)) % d
        P += system.omega ** (-v % d) * system.weyl(tuple((-(J @ f)) % d))
        count += 1
    if k == 0:
        return np.eye(system.dim, dtype=complex)
    return P / count


@dataclass
class EquivalenceReport:
    checks: int = 0
    failures: list = dc_field(default_factory=list)
    max_error: float = 0.0

    def record(self, name: str, err: float, tol: float):
        self.checks += 1
        self.max_error = max(self.max_error, err)
        if err > tol:
            self.failures.append((name, err))

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "EquivalenceReport"):
        self.checks += other.checks
        self.failures.extend(other.failures)
        self.max_error = max(self.max_error, other.max_error)


def check_wigner_support(system: QuditSystem, state: EpistemicState,
                         tol: float = 1e-10) -> EquivalenceReport:
    """Wigner(rho_state) == uniform distribution on the ontic support."""
    rep = EquivalenceReport()
    rho = epistemic_to_quantum(system, state)
    table = wigner_function(system, rho)
    points = {tuple(int(x) for x in p) for p in ontic_support(state).points()}
    w = 1.0 / len(points)
    err = 0.0
    for m, v in table.values.items():
        want = w if m in points else 0.0
        err = max(err, abs(v - want))
    rep.record(f"wigner-support V={state.V.rows} v={state.values}", err, tol)
    return rep


def check_measurement_statistics(system: QuditSystem, state: EpistemicState,
                                 W: Subspace, tol: float = 1e-10) -> EquivalenceReport:
    """Born probabilities and Lueders updates vs the classical account."""
    rep = EquivalenceReport()
    rho = epistemic_to_quantum(system, state)
    dist = measure(state, W)
    classical = dist.probabilities()
    pvm = system.joint_pvm(W.rows) if W.rows else {(): np.eye(system.dim, dtype=complex)}
    tag = f"V={state.V.rows} v={state.values} W={W.rows}"
    for outcome, P in pvm.items():
        p_quantum = float(np.trace(rho @ P).real)
        p_classical = float(classical.get(outcome, Fraction(0)))
        rep.record(f"prob {tag} out={outcome}",
                   abs(p_quantum - p_classical), tol)
        if p_classical > 0 and p_quantum > tol:
            post_q = P @ rho @ P / p_quantum
            post_c = next(o.post_state for o in dist.outcomes
                          if o.valuation == outcome)
            post_rho = epistemic_to_quantum(system, post_c)
            rep.record(f"post {tag} out={outcome}",
                       float(np.max(np.abs(post_q - post_rho))), tol)
    return rep


def check_transformation_covariance(system: QuditSystem, state: EpistemicState,
                                    T: AffineSymplecticMap,
                                    tol: float = 1e-10) -> EquivalenceReport:
    """Mapping then evolving equals evolving then mapping.

    The classical map m -> S m + a is represented by U = W(a) V(S).
    """
    rep = EquivalenceReport()
    S = np.array([[int(x) for x in row] for row in T.S], dtype=np.int64)
    a = tuple(int(x) for x in T.a)
    U = system.weyl(a) @ system.clifford_unitary(S)
    rho = epistemic_to_quantum(system, state)
    lhs = U @ rho @ U.conj().T
    rhs = epistemic_to_quantum(system, transform(state, T))
    rep.record(f"covariance V={state.V.rows} v={state.values} S={T.S} a={T.a}",
               float(np.max(np.abs(lhs - rhs))), tol)
    return rep


def verify_finite_equivalence(d: int, n: int = 1, tol: float = 1e-10,
                              exhaustive_transforms: bool = False,
                              n_random_transforms: int = 10,
                              seed: int = 7) -> EquivalenceReport:
    """Sweep all pure epistemic states of n qudits of dimension d.

    For each state: Wigner support, measurement statistics against every
    isotropic measured set (all dimensions), and covariance under either
    sampled or (for small d, n) user-requested exhaustive affine maps.
    """
    field = PrimeField(d)
    system = QuditSystem(d, n)
    rep = EquivalenceReport()
    states = enumerate_pure_states(field, n)
    measured_sets = [Subspace(field, 2 * n)]
    for k in range(1, n + 1):
        measured_sets.extend(enumerate_isotropic(n, field, k))
    transforms = []
    if exhaustive_transforms:
        transforms = _all_affine_maps(field, n)
    else:
        for i in range(n_random_transforms):
            transforms.append(random_symplectic(n, field, seed=seed + i))
    for state in states:
        rep.merge(check_wigner_support(system, state, tol))
        for W in measured_sets:
            rep.merge(check_measurement_statistics(system, state, W, tol))
        for T in transforms:
            rep.merge(check_transformation_covariance(system, state, T, tol))
    return rep


def _all_affine_maps(field: PrimeField, n: int):
    """Every affine symplectic map (use only for d=3, n=1: 216 maps)."""
    d = field.char
    maps = []
    for entries in itertools.product(range(d), repeat=(2 * n) ** 2):
        S = [entries[i * 2 * n:(i + 1) * 2 * n] for i in range(2 * n)]
        try:
            base = AffineSymplecticMap(field, S)
        except ValueError:
            continue
        for a in itertools.product(range(d), repeat=2 * n):
            maps.append(AffineSymplecticMap(field, S, a))
    return maps

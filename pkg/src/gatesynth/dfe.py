"""Direct fidelity estimation: measurement plans built from the target
gate's Pauli transfer matrix, an exact full-support estimator that
reproduces the closed-form average gate fidelity, and a sampled
estimator with optional single-shot noise for variance studies.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channels import PAULI_LETTERS, pauli_label, pauli_matrix

PLAN_SUPPORT_ATOL = 1e-12

_KET0 = np.array([1.0, 0.0], dtype=complex)
_KET1 = np.array([0.0, 1.0], dtype=complex)
_SQ2 = 1.0 / np.sqrt(2.0)

# (state, eigenvalue) lists per single-qubit letter. Identity letters use
# the sigma_z eigenstates with eigenvalue +1 for both, so every labelled
# preparation stays inside the six-state set {|0>,|1>,|+>,|->,|i+>,|i->}.
_LETTER_EIGENSYSTEM = {
    "I": [(_KET0, 1.0), (_KET1, 1.0)],
    "X": [(_SQ2 * (_KET0 + _KET1), 1.0), (_SQ2 * (_KET0 - _KET1), -1.0)],
    "Y": [(_SQ2 * (_KET0 + 1j * _KET1), 1.0), (_SQ2 * (_KET0 - 1j * _KET1), -1.0)],
    "Z": [(_KET0, 1.0), (_KET1, -1.0)],
}


@lru_cache(maxsize=4096)
def pauli_eigenbasis(label):
    """Orthonormal product eigenstates of the labelled Pauli with their
    eigenvalues, as a list of (state vector, +-1) in tensor order. Cached;
    treat the returned arrays as read-only."""
    out = []
    for parts in itertools.product(*(_LETTER_EIGENSYSTEM[c] for c in label)):
        state = parts[0][0]
        value = parts[0][1]
        for vec, lam in parts[1:]:
            state = np.kron(state, vec)
            value *= lam
        state.setflags(write=False)
        out.append((state, value))
    return out


def _is_pauli_observable(obs):
    obs = np.asarray(obs)
    return (
        np.allclose(obs, obs.conj().T, atol=1e-10)
        and np.allclose(obs @ obs, np.eye(obs.shape[0]), atol=1e-10)
    )


def simulate_expectation(u, rho, obs, shots=None, rng=None):
    """Expectation Tr[obs u rho u^dag], exact or shot-sampled.

    With finite `shots`, obs must square to identity (outcomes +-1); the
    return value is the mean of `shots` Bernoulli draws at the Born
    probability. rng is required in shot mode.
    """
    exact = float(np.real(np.trace(np.asarray(obs) @ u @ rho @ u.conj().T)))
    if shots is None:
        return exact
    if not _is_pauli_observable(obs):
        raise ValueError("shot sampling requires an observable with +-1 eigenvalues")
    if rng is None:
        raise ValueError("shot mode needs an rng")
    p_plus = min(1.0, max(0.0, 0.5 * (1.0 + exact)))
    ups = rng.binomial(int(shots), p_plus)
    return (2.0 * ups - shots) / shots


def ptm_entry_measured(u, i_label, j_label, shots=None, rng=None):
    """PTM entry R_ij of the unitary channel u from eigenstate
    preparations: (1/D) * sum_k lambda_jk * <sigma_i> on u|psi_jk>.

    Exact mode reproduces channels.ptm(u)[i, j]; with finite shots each
    eigenstate expectation is sampled independently.
    """
    dim = u.shape[0]
    obs = pauli_matrix(i_label)
    total = 0.0
    for state, lam in pauli_eigenbasis(j_label):
        rho = np.outer(state, state.conj())
        total += lam * simulate_expectation(u, rho, obs, shots=shots, rng=rng)
    return total / dim


@dataclass(frozen=True)
class DfePlan:
    """Measurement plan over PTM entries of a target gate.

    entries: tuples (i_label, j_label, target_value, weight) with weight
    the importance probability target_value**2 / D**2. full-support mode
    evaluates every entry; sampled mode draws entries by weight.
    """

    entries: tuple
    mode: str
    dim: int


@dataclass(frozen=True)
class DfeSamplingConfig:
    """Sampling budget: the number of measurement settings is
    ceil(1 / (eps_fail**2 * delta_acc)), each measured with
    shots_per_setting single-shot repetitions."""

    eps_fail: float
    delta_acc: float
    shots_per_setting: int = 1

    def __post_init__(self):
        if not 0 < self.eps_fail < 1:
            raise ValueError(f"eps_fail must be in (0,1), got {self.eps_fail}")
        if self.delta_acc <= 0:
            raise ValueError(f"delta_acc must be > 0, got {self.delta_acc}")
        if self.shots_per_setting < 1:
            raise ValueError("shots_per_setting must be >= 1")

    def num_settings(self):
        return math.ceil(1.0 / (self.eps_fail**2 * self.delta_acc))


def dfe_plan(r_target, mode="full"):
    """Build the measurement plan for a target PTM: all entries with
    |R_ij| above support tolerance, weighted by R_ij^2 / D^2."""
    if mode not in ("full", "sampled"):
        raise ValueError(f"mode must be 'full' or 'sampled', got {mode!r}")
    r_target = np.asarray(r_target)
    dim = int(round(np.sqrt(r_target.shape[0])))
    n = int(round(np.log2(dim)))
    if 4**n != r_target.shape[0]:
        raise ValueError(f"PTM side {r_target.shape[0]} is not a power of 4")
    rows, cols = np.nonzero(np.abs(r_target) > PLAN_SUPPORT_ATOL)
    if rows.size == 0:
        raise ValueError("target PTM has no support")
    entries = tuple(
        (pauli_label(i, n), pauli_label(j, n), float(r_target[i, j]),
         float(r_target[i, j] ** 2 / dim**2))
        for i, j in zip(rows, cols)
    )
    return DfePlan(entries=entries, mode=mode, dim=dim)


def dfe_estimate(u_actual, r_target, plan, cfg=None, shots=None, rng=None):
    """Average gate fidelity estimate of the channel u_actual against the
    target whose PTM is r_target.

    Full-support mode evaluates every plan entry (exactly when shots is
    None) and returns (D * sum_ij w_ij * R^actual_ij / R^target_ij + 1)
    / (D + 1), which equals the closed-form fidelity in exact mode.
    With cfg given, draws cfg.num_settings() entries by weight; each
    setting prepares one uniformly chosen eigenstate of the input Pauli
    and measures the output Pauli with cfg.shots_per_setting shots.
    """
    dim = plan.dim
    for _, _, target_value, _ in plan.entries:
        if abs(target_value) <= PLAN_SUPPORT_ATOL:
            raise ValueError("plan contains an entry with vanishing target value")
    if cfg is None:
        acc = 0.0
        for i_label, j_label, target_value, weight in plan.entries:
            measured = ptm_entry_measured(u_actual, i_label, j_label, shots=shots, rng=rng)
            acc += weight * measured / target_value
        return (dim * acc + 1.0) / (dim + 1.0)

    if rng is None:
        raise ValueError("sampled mode needs an rng")
    weights = np.array([e[3] for e in plan.entries])
    weights = weights / weights.sum()
    draws = rng.choice(len(plan.entries), size=cfg.num_settings(), p=weights)
    acc = 0.0
    for idx in draws:
        i_label, j_label, target_value, _ = plan.entries[idx]
        eigensystem = pauli_eigenbasis(j_label)
        state, lam = eigensystem[rng.integers(len(eigensystem))]
        rho = np.outer(state, state.conj())
        obs = pauli_matrix(i_label)
        outcome = simulate_expectation(
            u_actual, rho, obs, shots=cfg.shots_per_setting, rng=rng
        )
        acc += lam * outcome / target_value
    mean_ratio = acc / len(draws)
    return (dim * mean_ratio + 1.0) / (dim + 1.0)

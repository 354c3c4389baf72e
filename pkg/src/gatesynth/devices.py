"""Physical device models: cross-resonance (CR) drive Hamiltonians with
crosstalk for a 2-qubit pair and a 5-qubit star-coupled register, source
gates by time evolution, the fixed echoed-CR CNOT baseline (TPCX), and the
four-CNOT syndrome-extraction target.

Units: device parameters are ordinary frequencies in MHz and times in ns;
Hamiltonians are produced in angular units (rad/ns) via the conversion
factor 2*pi*1e-3. Register ordering for the 5-qubit system is
(Q1, Q2, Q3, Q4, Q0) with the measurement qubit Q0 as the last (least
significant) tensor factor.
"""

import json
from dataclasses import dataclass

import numpy as np

from .channels import I2, SIGMA_X
from .numkit import expm_hermitian, kron, kron_all

MHZ_TO_RAD_PER_NS = 2.0e-3 * np.pi

SIGMA_PLUS = np.array([[0, 0], [1, 0]], dtype=complex)
SIGMA_MINUS = np.array([[0, 1], [0, 0]], dtype=complex)


@dataclass(frozen=True)
class CrossResonancePair:
    """One driven qubit pair: detuning delta (MHz), exchange coupling g
    (MHz), crosstalk amplitude attenuation eps (>= 0, dimensionless), and
    crosstalk phase delay phi (rad)."""

    delta: float
    g: float
    eps: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.delta) and np.isfinite(self.g)):
            raise ValueError("delta and g must be finite")
        if not (np.isfinite(self.eps) and self.eps >= 0):
            raise ValueError(f"eps must be finite and >= 0, got {self.eps}")


@dataclass(frozen=True)
class DriveSpec:
    """A drive setting: amplitude omega (MHz, sign encodes drive phase)
    and gate time t (ns, >= 0)."""

    omega: float
    t: float

    def __post_init__(self):
        if not (np.isfinite(self.t) and self.t >= 0):
            raise ValueError(f"t must be finite and >= 0, got {self.t}")


@dataclass(frozen=True)
class FourQubitDevice:
    """Four data qubits, each CR-coupled to the shared measurement qubit
    Q0; entry i holds (delta_i, g_i, eps_i, phi_i) for data qubit Q_{i+1}."""

    pairs: tuple

    def __post_init__(self):
        if len(self.pairs) != 4:
            raise ValueError(f"need exactly 4 pairs, got {len(self.pairs)}")
        for p in self.pairs:
            if not isinstance(p, CrossResonancePair):
                raise ValueError("pairs must be CrossResonancePair instances")

    def with_crosstalk(self, enabled):
        """Copy of the device with crosstalk either kept or zeroed."""
        if enabled:
            return self
        return FourQubitDevice(
            tuple(CrossResonancePair(p.delta, p.g, 0.0, p.phi) for p in self.pairs)
        )


def cr_hamiltonian(pair, omega):
    """CR drive Hamiltonian (rad/ns) on (driven qubit, target qubit):

        2*pi*1e-3 * [ delta*n_1 + g*(sp_1 sm_2 + sm_1 sp_2)
                      + (omega/2)*((sp_1 + sm_1)
                                   + eps*(e^{-i phi} sm_2 + e^{i phi} sp_2)) ]
    """
    n1 = SIGMA_PLUS @ SIGMA_MINUS
    drive1 = SIGMA_PLUS + SIGMA_MINUS
    drive2 = np.exp(-1j * pair.phi) * SIGMA_MINUS + np.exp(1j * pair.phi) * SIGMA_PLUS
    h = (
        pair.delta * kron(n1, I2)
        + pair.g * (kron(SIGMA_PLUS, SIGMA_MINUS) + kron(SIGMA_MINUS, SIGMA_PLUS))
        + 0.5 * omega * (kron(drive1, I2) + pair.eps * kron(I2, drive2))
    )
    return MHZ_TO_RAD_PER_NS * h


def cr_gate(pair, drive):
    """Time evolution exp(-i*H*t) under the CR Hamiltonian."""
    return expm_hermitian(cr_hamiltonian(pair, drive.omega), drive.t)


def _embed(op, pos, n):
    """op acting on tensor slot `pos` of an n-qubit register."""
    mats = [I2] * n
    mats[pos] = op
    return kron_all(mats)


def four_cr_hamiltonian(dev, omegas):
    """Simultaneous CR drives from each data qubit onto the shared
    measurement qubit Q0 (32x32, rad/ns). Register order (Q1..Q4, Q0);
    term i is the 2-qubit CR Hamiltonian of pair i on slots (Q_{i+1}, Q0)."""
    omegas = np.asarray(omegas, dtype=float)
    if omegas.shape != (4,):
        raise ValueError(f"omegas must be 4 reals, got shape {omegas.shape}")
    n1 = SIGMA_PLUS @ SIGMA_MINUS
    sp0 = _embed(SIGMA_PLUS, 4, 5)
    sm0 = _embed(SIGMA_MINUS, 4, 5)
    h = np.zeros((32, 32), dtype=complex)
    for i, (pair, omega) in enumerate(zip(dev.pairs, omegas)):
        sp_i = _embed(SIGMA_PLUS, i, 5)
        sm_i = _embed(SIGMA_MINUS, i, 5)
        drive0 = np.exp(-1j * pair.phi) * sm0 + np.exp(1j * pair.phi) * sp0
        h += (
            pair.delta * _embed(n1, i, 5)
            + pair.g * (sp_i @ sm0 + sm_i @ sp0)
            + 0.5 * omega * ((sp_i + sm_i) + pair.eps * drive0)
        )
    return MHZ_TO_RAD_PER_NS * h


def four_cr_gate(dev, omegas, t):
    """Time evolution exp(-i*H*t) of the 5-qubit register."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return expm_hermitian(four_cr_hamiltonian(dev, omegas), t)


# Fixed single-qubit frames of the echoed-CR CNOT. In the ideal limit the
# two CR segments approach exp(+-i*(pi/8)*Z(x)X); the frames below turn
# that echoed pair into CNOT exactly (see tpcx docstring).
_S = np.diag([1.0, 1.0j])
TPCX_A = kron(_S @ SIGMA_X, I2)
TPCX_B = kron(SIGMA_X, I2)
TPCX_C = kron(I2, expm_hermitian(SIGMA_X, np.pi / 4))


def tpcx_ideal_limit_segments():
    """The two-qubit rotations the CR segments approach when detuning,
    coupling, and crosstalk idealize away: exp(-+i*(pi/8)*Z(x)X) for the
    (-omega, +omega) slots respectively."""
    zx = kron(np.diag([1.0, -1.0]).astype(complex), SIGMA_X)
    return expm_hermitian(zx, np.pi / 8), expm_hermitian(zx, -np.pi / 8)


def tpcx(pair, omega, t):
    """Two-pulse echoed-CR CNOT baseline:

        A @ cr_gate(pair, -omega, t) @ B @ cr_gate(pair, +omega, t) @ C

    with fixed frames A = (S X)(x)I, B = X(x)I (the echo pi-pulse on the
    driven qubit), C = I(x)exp(-i*(pi/4)*X). Substituting the ideal-limit
    segments exp(-+i*(pi/8)*Z(x)X) makes the product equal CNOT up to
    global phase.
    """
    seg_minus = cr_gate(pair, DriveSpec(-omega, t))
    seg_plus = cr_gate(pair, DriveSpec(omega, t))
    return TPCX_A @ seg_minus @ TPCX_B @ seg_plus @ TPCX_C


def syndrome_target():
    """Parity-accumulation target: four CNOTs, each controlled on a data
    qubit Q1..Q4 and targeting the measurement qubit Q0. The factors
    commute, so ordering is irrelevant; the product is its own inverse."""
    p0 = np.diag([1.0, 0.0]).astype(complex)
    p1 = np.diag([0.0, 1.0]).astype(complex)
    u = np.eye(32, dtype=complex)
    for i in range(4):
        cnot_i = _embed(p0, i, 5) + _embed(p1, i, 5) @ _embed(SIGMA_X, 4, 5)
        u = cnot_i @ u
    return u


def load_pair(path):
    """Read a CrossResonancePair from a JSON file with keys delta_mhz,
    g_mhz, eps, phi_rad."""
    with open(path) as fh:
        raw = json.load(fh)
    return pair_from_dict(raw)


def pair_from_dict(raw):
    try:
        return CrossResonancePair(
            delta=float(raw["delta_mhz"]),
            g=float(raw["g_mhz"]),
            eps=float(raw.get("eps", 0.0)),
            phi=float(raw.get("phi_rad", 0.0)),
        )
    except KeyError as exc:
        raise ValueError(f"pair parameters missing key {exc}") from exc


def load_device(path):
    """Read a FourQubitDevice from a JSON file with a `pairs` list of four
    pair dicts; returns (device, full dict) so callers can pick up extra
    keys such as reference amplitudes."""
    with open(path) as fh:
        raw = json.load(fh)
    try:
        pairs = tuple(pair_from_dict(p) for p in raw["pairs"])
    except KeyError as exc:
        raise ValueError(f"device file missing key {exc}") from exc
    return FourQubitDevice(pairs), raw

"""Device Hamiltonians, source gates, the echoed-CR baseline, and the
syndrome-extraction target."""

import numpy as np
import pytest

from gatesynth import devices
from gatesynth.channels import CNOT, agf_unitary, agi, ptm
from gatesynth.numkit import derive_rng, is_hermitian, is_unitary, kron, kron_all

RADS = devices.MHZ_TO_RAD_PER_NS


def test_cr_hamiltonian_zero():
    pair = devices.CrossResonancePair(0.0, 0.0)
    assert np.abs(devices.cr_hamiltonian(pair, 0.0)).max() == 0.0


def test_cr_hamiltonian_detuning_projector():
    pair = devices.CrossResonancePair(200.0, 0.0)
    h = devices.cr_hamiltonian(pair, 0.0)
    assert np.allclose(h, RADS * 200.0 * np.diag([0, 0, 1, 1]), atol=1e-12)


def test_cr_hamiltonian_phase_inert_without_crosstalk():
    pair_a = devices.CrossResonancePair(200.0, 5.0, 0.0, 0.3)
    pair_b = devices.CrossResonancePair(200.0, 5.0, 0.0, 1.3)
    ha = devices.cr_hamiltonian(pair_a, 60.0)
    hb = devices.cr_hamiltonian(pair_b, 60.0)
    assert np.array_equal(ha, hb)


def test_cr_hamiltonian_hermitian():
    rng = derive_rng(30)
    for k in range(20):
        pair = devices.CrossResonancePair(
            rng.uniform(-300, 300), rng.uniform(-10, 10),
            rng.uniform(0, 2), rng.uniform(0, 2 * np.pi),
        )
        assert is_hermitian(devices.cr_hamiltonian(pair, rng.uniform(-150, 150)))


def test_cr_gate_time_zero_and_detuning_phase():
    pair = devices.CrossResonancePair(200.0, 0.0)
    assert np.allclose(devices.cr_gate(pair, devices.DriveSpec(40.0, 0.0)), np.eye(4))
    u = devices.cr_gate(pair, devices.DriveSpec(0.0, 2.5))
    assert np.allclose(u, np.diag([1, 1, -1, -1]), atol=1e-10)


def test_cr_gate_unitary_and_series_oracle():
    pair = devices.CrossResonancePair(200.0, 5.0)
    assert is_unitary(devices.cr_gate(pair, devices.DriveSpec(63.5, 75.0)))
    # Taylor oracle at short time where the series converges in float64
    t = 0.4
    h = devices.cr_hamiltonian(pair, 63.5)
    u = devices.cr_gate(pair, devices.DriveSpec(63.5, t))
    series = np.zeros((4, 4), dtype=complex)
    term = np.eye(4, dtype=complex)
    for order in range(40):
        series += term
        term = term @ (-1j * t * h) / (order + 1)
    assert np.abs(u - series).max() < 1e-12


def test_cr_gate_composition():
    pair = devices.CrossResonancePair(200.0, 5.0, 0.4, 0.9)
    rng = derive_rng(31)
    for k in range(5):
        t1, t2 = rng.uniform(0, 100, 2)
        omega = rng.uniform(-120, 120)
        u12 = devices.cr_gate(pair, devices.DriveSpec(omega, t1 + t2))
        u2u1 = devices.cr_gate(pair, devices.DriveSpec(omega, t2)) @ devices.cr_gate(
            pair, devices.DriveSpec(omega, t1)
        )
        assert np.abs(u12 - u2u1).max() < 1e-10


def test_drive_spec_rejects_negative_time():
    with pytest.raises(ValueError):
        devices.DriveSpec(40.0, -1.0)


def test_four_cr_hamiltonian_zero_and_diagonal():
    dev = devices.FourQubitDevice(
        tuple(devices.CrossResonancePair(0.0, 0.0) for _ in range(4))
    )
    assert np.abs(devices.four_cr_hamiltonian(dev, [0, 0, 0, 0])).max() == 0.0
    deltas = [211.0, 223.0, 236.0, 248.0]
    dev = devices.FourQubitDevice(
        tuple(devices.CrossResonancePair(d, 0.0) for d in deltas)
    )
    h = devices.four_cr_hamiltonian(dev, [0, 0, 0, 0])
    # diagonal entry = sum of delta_i over excited data qubits
    for idx in range(32):
        bits = [(idx >> (4 - q)) & 1 for q in range(5)]  # (Q1..Q4, Q0)
        expect = RADS * sum(d * b for d, b in zip(deltas, bits[:4]))
        assert abs(h[idx, idx] - expect) < 1e-12
    assert np.abs(h - np.diag(np.diagonal(h))).max() == 0.0


def test_four_cr_single_pair_reduction():
    # oracle: 2-qubit Hamiltonian on (Q1, Q0) embedded by kron + index
    # permutation of the register (Q1, Q0, Q2, Q3, Q4) -> (Q1..Q4, Q0)
    pair = devices.CrossResonancePair(211.0, 5.0, 0.1, 0.2 * np.pi)
    zero = devices.CrossResonancePair(0.0, 0.0)
    dev = devices.FourQubitDevice((pair, zero, zero, zero))
    h = devices.four_cr_hamiltonian(dev, [74.5, 0, 0, 0])
    h2 = devices.cr_hamiltonian(pair, 74.5)
    big = kron_all([h2, np.eye(2), np.eye(2), np.eye(2)])
    perm = np.zeros(32, dtype=int)
    for idx in range(32):
        q1, q0, q2, q3, q4 = (
            (idx >> 4) & 1, (idx >> 3) & 1, (idx >> 2) & 1, (idx >> 1) & 1, idx & 1,
        )
        perm[idx] = (q1 << 4) | (q2 << 3) | (q3 << 2) | (q4 << 1) | q0
    oracle = np.zeros((32, 32), dtype=complex)
    oracle[np.ix_(perm, perm)] = big
    assert np.abs(h - oracle).max() < 1e-12


def test_four_cr_hamiltonian_hermitian_and_gate_unitary():
    from importlib import resources

    dev, _ = devices.load_device(
        resources.files("gatesynth").joinpath("fixtures", "syndrome_device.json")
    )
    h = devices.four_cr_hamiltonian(dev, [74.5, 79.1, 114.0, 115.0])
    assert is_hermitian(h)
    u = devices.four_cr_gate(dev, [74.5, 79.1, 114.0, 115.0], 75.0)
    assert is_unitary(u)
    assert np.allclose(devices.four_cr_gate(dev, [74.5, 79.1, 114.0, 115.0], 0.0),
                       np.eye(32), atol=1e-14)


def test_four_cr_pure_detuning_is_diagonal_evolution():
    deltas = [211.0, 223.0, 236.0, 248.0]
    dev = devices.FourQubitDevice(
        tuple(devices.CrossResonancePair(d, 0.0) for d in deltas)
    )
    t = 7.0
    u = devices.four_cr_gate(dev, [0, 0, 0, 0], t)
    h = devices.four_cr_hamiltonian(dev, [0, 0, 0, 0])
    assert np.abs(u - np.diag(np.exp(-1j * np.diagonal(h) * t))).max() < 1e-12


def test_four_qubit_device_validation():
    with pytest.raises(ValueError):
        devices.FourQubitDevice((devices.CrossResonancePair(1.0, 1.0),))


def test_tpcx_ideal_limit_is_cnot():
    seg_minus, seg_plus = devices.tpcx_ideal_limit_segments()
    ideal = devices.TPCX_A @ seg_minus @ devices.TPCX_B @ seg_plus @ devices.TPCX_C
    assert abs(agf_unitary(CNOT, ideal) - 1.0) < 1e-10


def test_tpcx_crosstalk_free_phase_independence():
    pair_a = devices.CrossResonancePair(200.0, 5.0, 0.0, 0.1)
    pair_b = devices.CrossResonancePair(200.0, 5.0, 0.0, 2.1)
    ua = devices.tpcx(pair_a, 63.5, 75.0)
    ub = devices.tpcx(pair_b, 63.5, 75.0)
    assert np.array_equal(ua, ub)


def test_tpcx_working_point():
    pair = devices.CrossResonancePair(200.0, 5.0, 0.0, np.pi / 4)
    val = agi(CNOT, devices.tpcx(pair, 63.5, 75.0))
    assert 0.01 <= val <= 0.07
    pair_x = devices.CrossResonancePair(200.0, 5.0, 0.1, np.pi / 4)
    val_x = agi(CNOT, devices.tpcx(pair_x, 36.4, 75.0))
    assert val_x >= 3 * val


def test_syndrome_target_parity_and_involution():
    u = devices.syndrome_target()
    assert is_unitary(u)

    def basis_state(bits):  # bits = (q1, q2, q3, q4, q0)
        idx = 0
        for b in bits:
            idx = 2 * idx + b
        v = np.zeros(32, dtype=complex)
        v[idx] = 1.0
        return v

    # even parity of excited data qubits leaves Q0 at |0>
    out = u @ basis_state((1, 0, 1, 0, 0))
    assert abs(out[int("10100", 2)] - 1.0) < 1e-12
    # odd parity flips Q0
    out = u @ basis_state((1, 0, 0, 0, 0))
    assert abs(out[int("10001", 2)] - 1.0) < 1e-12
    assert np.abs(u @ u - np.eye(32)).max() < 1e-12


def test_syndrome_target_is_clifford():
    # PTM of a Clifford is a signed permutation: entries in {0, +-1}
    r = ptm(devices.syndrome_target())
    assert np.all(np.isin(np.round(r, 9), [-1.0, 0.0, 1.0]))
    assert np.allclose(np.abs(r).sum(axis=1), 1.0)


def test_fixture_loaders(tmp_path):
    import json

    p = tmp_path / "pair.json"
    p.write_text(json.dumps({"delta_mhz": 200.0, "g_mhz": 5.0, "eps": 0.1, "phi_rad": 0.5}))
    pair = devices.load_pair(p)
    assert pair.delta == 200.0 and pair.eps == 0.1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"delta_mhz": 200.0}))
    with pytest.raises(ValueError):
        devices.load_pair(bad)


def test_with_crosstalk_toggle():
    pair = devices.CrossResonancePair(200.0, 5.0, 0.3, 1.0)
    dev = devices.FourQubitDevice((pair,) * 4)
    off = dev.with_crosstalk(False)
    assert all(p.eps == 0.0 for p in off.pairs)
    assert all(p.phi == 1.0 for p in off.pairs)
    assert dev.with_crosstalk(True) is dev

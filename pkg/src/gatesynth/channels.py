"""Pauli algebra, average gate fidelity, and Pauli transfer matrices.

Pauli labels are strings over {I, X, Y, Z}, one letter per qubit, qubit 1
first. Their integer index is the base-4 reading of the string with
I=0, X=1, Y=2, Z=3, so index 0 is always the all-identity label.
"""

from functools import lru_cache
from itertools import product

import numpy as np

from .numkit import dagger, kron_all

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"I": I2, "X": SIGMA_X, "Y": SIGMA_Y, "Z": SIGMA_Z}
PAULI_LETTERS = "IXYZ"

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S_GATE = np.diag([1, 1j]).astype(complex)
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def pauli_labels(n):
    """All 4**n labels in index order."""
    return ["".join(p) for p in product(PAULI_LETTERS, repeat=n)]


def pauli_index(label):
    idx = 0
    for ch in label:
        idx = 4 * idx + PAULI_LETTERS.index(ch)
    return idx


def pauli_label(index, n):
    letters = []
    for _ in range(n):
        letters.append(PAULI_LETTERS[index % 4])
        index //= 4
    return "".join(reversed(letters))


@lru_cache(maxsize=4096)
def pauli_matrix(label):
    """Tensor product of single-qubit Paulis for a label string. Cached;
    treat the returned array as read-only."""
    bad = set(label) - set(PAULI_LETTERS)
    if bad or not label:
        raise ValueError(f"invalid Pauli label {label!r}")
    mat = kron_all([PAULIS[ch] for ch in label])
    mat.flags.writeable = False
    return mat


@lru_cache(maxsize=8)
def pauli_basis(n):
    """Stacked array of all 4**n Pauli matrices, shape (4**n, 2**n, 2**n)."""
    basis = np.stack([pauli_matrix(lbl) for lbl in pauli_labels(n)])
    basis.flags.writeable = False
    return basis


def agf_unitary(u, v):
    """Average gate fidelity between two unitaries of equal dimension."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch {u.shape} vs {v.shape}")
    d = u.shape[0]
    overlap = abs(np.trace(dagger(u) @ v)) ** 2
    # rounding can push the overlap a few ulp past its exact ceiling D^2
    return min(1.0, (overlap / d + 1.0) / (d + 1.0))


def agi(u, v):
    """Average gate infidelity, 1 - AGF."""
    return 1.0 - agf_unitary(u, v)


def ptm(u):
    """Pauli transfer matrix R_ij = Tr[s_i u s_j u†]/D of a unitary channel."""
    u = np.asarray(u, dtype=complex)
    d = u.shape[0]
    n = int(round(np.log2(d)))
    if 2**n != d:
        raise ValueError(f"dimension {d} is not a power of two")
    basis = pauli_basis(n)
    conj = np.einsum("ab,jbc,dc->jad", u, basis, u.conj(), optimize=True)
    r = np.einsum("iab,jba->ij", basis, conj, optimize=True).real / d
    return r


def agf_from_ptms(r_target, r_channel):
    """AGF from two Pauli transfer matrices of the same size."""
    r_target = np.asarray(r_target)
    r_channel = np.asarray(r_channel)
    if r_target.shape != r_channel.shape:
        raise ValueError(f"size mismatch {r_target.shape} vs {r_channel.shape}")
    d = int(round(np.sqrt(r_target.shape[0])))
    return min(1.0, (np.sum(r_target * r_channel) / d + 1.0) / (d + 1.0))

"""Dense complex linear algebra and seeded randomness shared by all modules.

Conventions used throughout the package:
  * qubit 1 is the leftmost (most significant) Kronecker factor;
  * Hamiltonians are Hermitian matrices in angular units (rad/ns);
  * time evolution is exp(-i*H*t), computed by eigendecomposition so the
    result is unitary to rounding error.
"""

import numpy as np

HERMITIAN_ATOL = 1e-12
UNITARY_ATOL = 1e-10


def kron(a, b):
    """Kronecker product with the first argument as the most significant factor."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(mats):
    """Left-fold Kronecker product of a sequence of matrices."""
    mats = list(mats)
    if not mats:
        raise ValueError("kron_all needs at least one matrix")
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def dagger(a):
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def is_hermitian(h, atol=HERMITIAN_ATOL):
    h = np.asarray(h)
    return np.abs(h - dagger(h)).max() < atol


def is_unitary(u, atol=UNITARY_ATOL):
    u = np.asarray(u)
    return np.abs(u @ dagger(u) - np.eye(u.shape[0])).max() < atol


def expm_hermitian(h, t=1.0):
    """exp(-i*h*t) for Hermitian h (rad/ns) over duration t (ns)."""
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise ValueError("generator is not Hermitian")
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def partial_trace(rho, keep, dims):
    """Trace out all subsystems not listed in `keep`.

    `dims` lists the subsystem dimensions in tensor order; `keep` is an
    iterable of subsystem indices to retain (order preserved).
    """
    rho = np.asarray(rho)
    dims = list(dims)
    n = len(dims)
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ValueError(f"density matrix shape {rho.shape} does not match dims {dims}")
    keep = sorted(set(keep))
    if not keep or any(k < 0 or k >= n for k in keep):
        raise ValueError(f"invalid subsystem selection {keep} for {n} subsystems")
    resh = rho.reshape(dims + dims)
    traced = [i for i in range(n) if i not in keep]
    for offset, i in enumerate(traced):
        axis = i - offset
        naxes = resh.ndim
        resh = np.trace(resh, axis1=axis, axis2=axis + naxes // 2)
    d_keep = int(np.prod([dims[i] for i in keep]))
    return resh.reshape(d_keep, d_keep)


def derive_rng(seed, *key):
    """Deterministic child generator keyed by integers, safe for parallel use."""
    ss = np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)


def haar_state(dim, rng):
    """Haar-random pure state as a normalized complex Gaussian vector."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def derive_seed(seed, *key):
    """Deterministic 64-bit child seed keyed by integers (for configs that
    carry a plain integer seed rather than a generator)."""
    ss = np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0])


def haar_unitary(dim, rng):
    """Haar-distributed random unitary via QR of a complex Gaussian matrix
    with the standard phase correction."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))

"""Two routes to the 2x2 block structure of a Hermitian traceless generator.

Route one is generic: diagonalize, pair the eigenvalues under a rule, and
rotate each pair with unit-normalized coefficients (A, B); the generator is
then 2x2 block diagonal in the rotated basis by construction. Route two
starts from a matrix already expressed in a candidate basis (e.g. Bell
gems) and discovers the pairing from the coupling graph of its off-diagonal
entries. Each 2x2 block carries the Pauli-like parameters
(Delta+, Delta-, r_A, r_B, Gamma).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from bellgems.errors import (
    BlockStructureViolation,
    CoefficientMismatch,
    NonHermitian,
    NotNormalized,
    OddDimension,
)

__all__ = [
    "EigenPairing",
    "BlockDecomposition",
    "BlockParams",
    "eigen_pairing",
    "alpha_basis",
    "extract_blocks",
    "block_params",
    "block_params_from_block",
    "reconstruct_block",
    "split_block",
]

_HERM_TOL = 1e-12


def _check_hermitian(H: np.ndarray, tol: float = _HERM_TOL) -> np.ndarray:
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    dev = np.max(np.abs(H - H.conj().T))
    if dev > tol:
        raise NonHermitian(f"Hermiticity deviation {dev:.3e} exceeds {tol:.1e}")
    return H


@dataclass(frozen=True)
class EigenPairing:
    """Eigenvalues/vectors grouped into consecutive pairs."""

    energies: np.ndarray  # shape (2m,), pair i holds entries (2i, 2i+1)
    vectors: np.ndarray  # shape (dim, 2m), column j is the eigenvector of energies[j]

    @property
    def n_pairs(self) -> int:
        return self.energies.size // 2

    def pair(self, i: int) -> tuple[tuple[float, np.ndarray], tuple[float, np.ndarray]]:
        lo, hi = 2 * i, 2 * i + 1
        return (
            (float(self.energies[lo]), self.vectors[:, lo]),
            (float(self.energies[hi]), self.vectors[:, hi]),
        )


def eigen_pairing(H: np.ndarray, rule="ascending_consecutive") -> EigenPairing:
    """Spectral decomposition with eigenvalues grouped in pairs.

    `rule` is either "ascending_consecutive" or an explicit list of index
    pairs into the ascending spectrum.
    """
    H = _check_hermitian(H)
    dim = H.shape[0]
    if dim % 2 != 0:
        raise OddDimension(f"dimension {dim} is odd; cannot pair basis states")
    energies, vectors = np.linalg.eigh(H)
    if rule == "ascending_consecutive":
        order = list(range(dim))
    else:
        order = [idx for pair in rule for idx in pair]
        if sorted(order) != list(range(dim)):
            raise ValueError("custom pairing must cover every eigen-index exactly once")
    return EigenPairing(energies=energies[order], vectors=vectors[:, order])


def alpha_basis(pairing: EigenPairing, coeffs) -> np.ndarray:
    """Rotate each eigen-pair by its (A, B) coefficients.

    Returns a matrix whose columns (2i, 2i+1) are

        |alpha_j(i)> = A*_i |b_{2i-1}> - B_i |b_{2i}>
        |alpha_k(i)> = B*_i |b_{2i-1}> + A_i |b_{2i}>

    The result is orthonormal, and any Hermitian operator diagonal on the
    eigenvectors becomes 2x2 block diagonal on these columns.
    """
    coeffs = list(coeffs)
    if len(coeffs) != pairing.n_pairs:
        raise CoefficientMismatch(
            f"got {len(coeffs)} coefficient pairs for {pairing.n_pairs} eigen-pairs"
        )
    out = np.empty_like(pairing.vectors)
    for i, (A, B) in enumerate(coeffs):
        norm = abs(A) ** 2 + abs(B) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise NotNormalized(f"|A|^2 + |B|^2 = {norm} for pair {i}")
        b1 = pairing.vectors[:, 2 * i]
        b2 = pairing.vectors[:, 2 * i + 1]
        out[:, 2 * i] = np.conj(A) * b1 - B * b2
        out[:, 2 * i + 1] = np.conj(B) * b1 + A * b2
    return out


@dataclass(frozen=True)
class BlockDecomposition:
    """Pairing permutation plus the 2x2 blocks read off the matrix."""

    pairing: tuple[tuple[int, int], ...]
    blocks: tuple[np.ndarray, ...]
    residual: float


def extract_blocks(M: np.ndarray, tol: float | None = None) -> BlockDecomposition:
    """Discover the 2x2 block structure of M from its coupling graph.

    An edge joins I and K when |M_IK| > tol (default 1e-10 relative to the
    largest entry). Every connected component must have at most two
    vertices; isolated vertices are paired in ascending index order.
    """
    M = _check_hermitian(M, tol=1e-10)
    dim = M.shape[0]
    if dim % 2 != 0:
        raise OddDimension(f"dimension {dim} is odd")
    if tol is None:
        tol = 1e-10 * max(1.0, float(np.max(np.abs(M))) if M.size else 1.0)

    # union-find over the coupling graph
    parent = list(range(dim))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for I in range(dim):
        for K in range(I + 1, dim):
            if abs(M[I, K]) > tol:
                rI, rK = find(I), find(K)
                if rI != rK:
                    parent[rK] = rI

    components: dict[int, list[int]] = {}
    for I in range(dim):
        components.setdefault(find(I), []).append(I)

    pairs: list[tuple[int, int]] = []
    isolated: list[int] = []
    for comp in components.values():
        if len(comp) == 1:
            isolated.append(comp[0])
        elif len(comp) == 2:
            pairs.append((min(comp), max(comp)))
        else:
            raise BlockStructureViolation(comp)
    isolated.sort()
    pairs.extend(zip(isolated[0::2], isolated[1::2]))
    pairs.sort()

    blocks = []
    mask = np.zeros((dim, dim), dtype=bool)
    for j, k in pairs:
        blocks.append(M[np.ix_([j, k], [j, k])].copy())
        mask[np.ix_([j, k], [j, k])] = True
    residual = float(np.max(np.abs(np.where(mask, 0.0, M)))) if dim else 0.0
    return BlockDecomposition(pairing=tuple(pairs), blocks=tuple(blocks), residual=residual)


@dataclass(frozen=True)
class BlockParams:
    """Pauli-like coordinates of one 2x2 block (hbar = 1)."""

    delta_plus: float
    delta_minus: float
    r_a: float
    r_b: float
    gamma: float


def block_params(E_lo: float, E_hi: float, A: complex, B: complex) -> BlockParams:
    """Parameters of the block spanned by a rotated eigen-pair."""
    norm = abs(A) ** 2 + abs(B) ** 2
    if abs(norm - 1.0) > 1e-12:
        raise NotNormalized(f"|A|^2 + |B|^2 = {norm}")
    gamma = cmath.phase(A) - cmath.phase(B)
    # reduce to (-pi, pi]
    gamma = -((-gamma + np.pi) % (2 * np.pi) - np.pi)
    return BlockParams(
        delta_plus=(E_hi + E_lo) / 2.0,
        delta_minus=(E_hi - E_lo) / 2.0,
        r_a=abs(A),
        r_b=abs(B),
        gamma=float(gamma),
    )


def block_params_from_block(S: np.ndarray) -> BlockParams:
    """Parameters recovered from an explicit 2x2 Hermitian block."""
    S = _check_hermitian(np.asarray(S, dtype=complex), tol=1e-10)
    energies, vectors = np.linalg.eigh(S)
    A, B = vectors[0, 0], vectors[1, 0]
    return block_params(float(energies[0]), float(energies[1]), A, B)


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def reconstruct_block(p: BlockParams) -> np.ndarray:
    """2x2 block from its Pauli-like parameters."""
    rr = 2.0 * p.r_a * p.r_b * p.delta_minus
    return (
        p.delta_plus * np.eye(2, dtype=complex)
        - rr * np.cos(p.gamma) * _X
        + rr * np.sin(p.gamma) * _Y
        - (p.r_a**2 - p.r_b**2) * p.delta_minus * _Z
    )


def split_block(S: np.ndarray) -> tuple[float, np.ndarray]:
    """Separate a 2x2 Hermitian block into its mean energy and traceless part."""
    S = _check_hermitian(np.asarray(S, dtype=complex), tol=1e-10)
    delta_plus = float(np.real(np.trace(S))) / 2.0
    return delta_plus, S - delta_plus * np.eye(2)

"""Bell gems: an orthonormal entangled basis for n = 2d qubits.

Basis state I (base-4 with d digits i_1..i_d) has amplitude

    (sigma~_{i_1} x ... x sigma~_{i_d})_{E,D} / sqrt(2^d)

at computational index (E, D), where E and D are the d-bit values of the
first and second qubit registers, qubit 1 most significant, and sigma~
is the all-real gem Pauli variant. Sites i and i+d (1-based) occupy the
same slot in the two registers and are called correspondents.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bellgems.pauli import index_to_string, tensor_product

__all__ = [
    "D_MAX_DEFAULT",
    "BellGemsBasis",
    "build_basis",
    "gem_state",
    "correspondent",
    "correspondence_pairs",
]

D_MAX_DEFAULT = 4


@dataclass(frozen=True)
class BellGemsBasis:
    """Change-of-basis matrix whose column I is basis state I."""

    d: int
    matrix: np.ndarray

    @property
    def n(self) -> int:
        return 2 * self.d

    @property
    def dim(self) -> int:
        return 4**self.d

    def column(self, I: int) -> np.ndarray:
        if not 0 <= I < self.dim:
            raise ValueError(f"basis index {I} out of range for d={self.d}")
        return self.matrix[:, I].copy()


def build_basis(d: int, d_max: int = D_MAX_DEFAULT) -> BellGemsBasis:
    """Construct the full 2^2d x 2^2d real change-of-basis matrix."""
    if not 1 <= d <= d_max:
        raise ValueError(f"d must be in 1..{d_max}, got {d}")
    dim = 4**d
    B = np.zeros((dim, dim), dtype=complex)
    norm = 1.0 / np.sqrt(2.0**d)
    for I in range(dim):
        factors = index_to_string(I, d).matrices("gem")
        M = tensor_product(factors)
        # row-major flatten maps (E, D) to computational index E*2^d + D
        B[:, I] = M.reshape(-1) * norm
    return BellGemsBasis(d=d, matrix=B)


def gem_state(d: int, I: int, d_max: int = D_MAX_DEFAULT) -> np.ndarray:
    """Amplitudes of basis state I in the computational basis (unit norm)."""
    if not 1 <= d <= d_max:
        raise ValueError(f"d must be in 1..{d_max}, got {d}")
    if not 0 <= I < 4**d:
        raise ValueError(f"basis index {I} out of range for d={d}")
    factors = index_to_string(I, d).matrices("gem")
    M = tensor_product(factors)
    return M.reshape(-1) / np.sqrt(2.0**d)


def correspondent(i: int, d: int) -> int:
    """Partner of site i under the split into two d-site registers (1-based)."""
    if not 1 <= i <= 2 * d:
        raise ValueError(f"site {i} out of range for d={d}")
    return i + d if i <= d else i - d


def correspondence_pairs(d: int) -> list[tuple[int, int]]:
    """All correspondent pairs (k, k+d) for k = 1..d."""
    return [(k, k + d) for k in range(1, d + 1)]

"""Pauli matrices, base-4 string indexing, and the four-factor trace rule.

An n-site Pauli string is encoded as a base-4 integer I with n digits,
digit 1 most significant and attached to site 1:

    I = i_1 * 4^(n-1) + i_2 * 4^(n-2) + ... + i_n,   i_k in {0, 1, 2, 3}

where 0 is the identity and 1..3 are x, y, z. Two matrix variants are
provided: the ``standard`` Pauli set and the ``gem`` set, identical except
that the second matrix is multiplied by i so that all entries are real
(this is the convention that makes the entangled basis real-valued).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "SIGMA",
    "SIGMA_GEM",
    "PauliString",
    "TraceCase",
    "pauli_matrix",
    "index_to_string",
    "string_to_index",
    "tensor_product",
    "trace_product",
    "trace_case",
]

# standard Pauli matrices sigma_0..sigma_3
SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

# gem variant: sigma_2 replaced by i*sigma_2, all entries real
SIGMA_GEM = SIGMA.copy()
SIGMA_GEM[2] = np.array([[0, 1], [-1, 0]], dtype=complex)


def _check_axis(axis: int) -> int:
    axis = int(axis)
    if axis not in (0, 1, 2, 3):
        raise ValueError(f"Pauli axis must be in 0..3, got {axis}")
    return axis


def pauli_matrix(axis: int, variant: str = "standard") -> np.ndarray:
    """Return the 2x2 Pauli matrix for `axis` in the requested variant."""
    axis = _check_axis(axis)
    if variant == "standard":
        return SIGMA[axis].copy()
    if variant == "gem":
        return SIGMA_GEM[axis].copy()
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class PauliString:
    """An n-site product of Pauli factors with its base-4 index."""

    n: int
    axes: tuple[int, ...]

    def __post_init__(self):
        if len(self.axes) != self.n:
            raise ValueError(f"expected {self.n} axes, got {len(self.axes)}")
        object.__setattr__(self, "axes", tuple(_check_axis(a) for a in self.axes))

    @property
    def index(self) -> int:
        return string_to_index(self)

    @property
    def is_identity(self) -> bool:
        return all(a == 0 for a in self.axes)

    def support(self) -> tuple[int, ...]:
        """1-based sites on which the string acts nontrivially."""
        return tuple(k + 1 for k, a in enumerate(self.axes) if a != 0)

    def matrices(self, variant: str = "standard") -> list[np.ndarray]:
        return [pauli_matrix(a, variant) for a in self.axes]

    def to_matrix(self, variant: str = "standard") -> np.ndarray:
        return tensor_product(self.matrices(variant))


def index_to_string(I: int, n: int) -> PauliString:
    """Decode a base-4 index into its n-site Pauli string (digit 1 most significant)."""
    if not 0 <= I < 4**n:
        raise ValueError(f"index {I} out of range for n={n}")
    axes = []
    for k in range(n - 1, -1, -1):
        axes.append((I >> (2 * k)) & 3)
    return PauliString(n, tuple(axes))


def string_to_index(s: PauliString) -> int:
    """Base-4 encode the axes of a Pauli string."""
    I = 0
    for a in s.axes:
        I = (I << 2) | a
    return I


def tensor_product(factors: list[np.ndarray]) -> np.ndarray:
    """Kronecker product of the factors in list order."""
    if len(factors) == 0:
        raise ValueError("tensor_product requires at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


class TraceCase(Enum):
    ALL_EQUAL = "AllEqual"
    ALL_DIFFERENT = "AllDifferent"
    EQUAL_PAIRS = "EqualPairs"
    VANISHING = "Vanishing"


def trace_product(i: int, j: int, k: int, l: int) -> complex:
    """Tr of the four-factor product with gem matrices in slots 1 and 3.

    Computed by explicit 2x2 multiplication; the index-pattern shortcut
    lives in `trace_case` so the two can cross-check each other.
    """
    a = SIGMA_GEM[_check_axis(i)]
    b = SIGMA[_check_axis(j)]
    c = SIGMA_GEM[_check_axis(k)].T
    d = SIGMA[_check_axis(l)].T
    return complex(np.trace(a @ b @ c @ d))


def trace_case(i: int, j: int, k: int, l: int) -> TraceCase:
    """Classify a trace quadruple by its index pattern.

    The trace is nonzero exactly when the four indices are all equal, all
    different, or equal by pairs; anything else vanishes.
    """
    quad = tuple(_check_axis(v) for v in (i, j, k, l))
    counts = sorted(quad.count(v) for v in set(quad))
    if counts == [4]:
        return TraceCase.ALL_EQUAL
    if counts == [1, 1, 1, 1]:
        return TraceCase.ALL_DIFFERENT
    if counts == [2, 2]:
        return TraceCase.EQUAL_PAIRS
    return TraceCase.VANISHING


# 4x4x4x4 lookup of trace_product values, used by the matrix-element kernel
TRACE_TABLE = np.array(
    [
        [[[trace_product(i, j, k, l) for l in range(4)] for k in range(4)] for j in range(4)]
        for i in range(4)
    ],
    dtype=complex,
)

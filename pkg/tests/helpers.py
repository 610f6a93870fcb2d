"""Shared fixtures: random spec generators and dense oracles."""

from __future__ import annotations

import numpy as np
import scipy.linalg as sla

from bellgems.basis import build_basis
from bellgems.hamiltonian import (
    CoefficientSchedule,
    HamiltonianSpec,
    HamiltonianTerm,
    assemble_dense,
    gem_matrix,
)
from bellgems.pauli import PauliString

_BASIS_CACHE: dict[int, np.ndarray] = {}


def basis_matrix(d: int) -> np.ndarray:
    if d not in _BASIS_CACHE:
        _BASIS_CACHE[d] = build_basis(d, d_max=max(d, 4)).matrix
    return _BASIS_CACHE[d]


def gem_oracle(spec: HamiltonianSpec, t: float) -> np.ndarray:
    """Change-of-basis reference for the trace-rule gem matrix."""
    B = basis_matrix(spec.n // 2)
    return B.conj().T @ assemble_dense(spec, t) @ B


def random_schedule(rng, grid=(1.0,)) -> CoefficientSchedule:
    return CoefficientSchedule(tuple((t, rng.uniform(-1.0, 1.0)) for t in grid))


def term(n, axes_by_site: dict[int, int], schedule) -> HamiltonianTerm:
    """Build a term from a {1-based site: axis} map."""
    axes = [0] * n
    for site, axis in axes_by_site.items():
        axes[site - 1] = axis
    return HamiltonianTerm(PauliString(n, tuple(axes)), schedule)


def diagonal_terms(d, rng, grid=(1.0,), p_keep=0.7):
    """Equal-axis couplings on correspondent pairs (diagonal generators)."""
    n = 2 * d
    out = []
    for k in range(1, d + 1):
        for a in (1, 2, 3):
            if rng.random() < p_keep:
                out.append(term(n, {k: a, k + d: a}, random_schedule(rng, grid)))
    return out


def type_i_spec(d, rng, grid=(1.0,)) -> HamiltonianSpec:
    """Diagonal couplings plus local fields on one correspondent pair."""
    n = 2 * d
    a0 = rng.integers(1, 4)
    k0 = int(rng.integers(1, d + 1))
    terms = diagonal_terms(d, rng, grid)
    sites = [k0, k0 + d] if rng.random() < 0.5 else [int(rng.choice([k0, k0 + d]))]
    for s in sites:
        terms.append(term(n, {s: int(a0)}, random_schedule(rng, grid)))
    return HamiltonianSpec.from_terms(n, terms)


def type_ii_spec(d, rng, grid=(1.0,)) -> HamiltonianSpec:
    """Diagonal couplings plus the four-edge cross couplings of two pairs."""
    if d < 2:
        raise ValueError("Type II needs at least two correspondent pairs")
    n = 2 * d
    a0 = int(rng.integers(1, 4))
    k, kp = sorted(rng.choice(np.arange(1, d + 1), size=2, replace=False).tolist())
    edges = [(k, kp), (k, kp + d), (kp, k + d), (k + d, kp + d)]
    keep = [e for e in edges if rng.random() < 0.75]
    if not keep:
        keep = [edges[int(rng.integers(0, 4))]]
    terms = diagonal_terms(d, rng, grid)
    for i, j in keep:
        terms.append(term(n, {i: a0, j: a0}, random_schedule(rng, grid)))
    return HamiltonianSpec.from_terms(n, terms)


def random_dense_spec(d, rng, n_terms=None, grid=(1.0,)) -> HamiltonianSpec:
    """Random Pauli strings; almost surely unstructured."""
    n = 2 * d
    if n_terms is None:
        n_terms = 3 * n
    terms = []
    while len(terms) < n_terms:
        axes = tuple(int(a) for a in rng.integers(0, 4, size=n))
        if all(a == 0 for a in axes):
            continue
        terms.append(HamiltonianTerm(PauliString(n, axes), random_schedule(rng, grid)))
    return HamiltonianSpec.from_terms(n, terms)


def dense_propagator_oracle(spec: HamiltonianSpec, T: float) -> np.ndarray:
    """Segment-wise matrix-exponential product on the full gem-basis matrix."""
    cuts = [t for t in spec.grid if t < T] + [T]
    U = np.eye(4 ** (spec.n // 2), dtype=complex)
    t0 = 0.0
    for t1 in cuts:
        if t1 <= t0:
            continue
        M = gem_matrix(spec, 0.5 * (t0 + t1))
        U = sla.expm(-1j * M * (t1 - t0)) @ U
        t0 = t1
    return U

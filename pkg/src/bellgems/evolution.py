"""Blockwise time-ordered propagation through piecewise-constant schedules.

Each 2x2 block S = a*I + b.sigma exponentiates in closed form,

    exp(-i S tau) = e^{-i a tau} (cos(|b| tau) I - i sin(|b| tau) bhat.sigma),

and a schedule propagates as the ordered product of segment exponentials,
latest segment leftmost. The full evolution operator is assembled by
scattering the block unitaries through the pairing permutation, so entries
outside the paired 2x2 positions are exactly zero. The accumulated phases
phi_i = -int Delta+_i dt are the U(1) factors; the phase-stripped blocks
are the SU(2) factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bellgems.decomposition import extract_blocks
from bellgems.errors import EmptySchedule, PairingDrift, TimeOutOfRange
from bellgems.hamiltonian import HamiltonianSpec, gem_matrix

__all__ = [
    "BlockSchedule",
    "PropagatorResult",
    "segment_exponential",
    "block_propagator",
    "evolve",
    "verify_unitary",
    "verify_group_structure",
]


@dataclass(frozen=True)
class BlockSchedule:
    """Ordered (duration, 2x2 Hermitian block) segments for one pair."""

    segments: tuple[tuple[float, np.ndarray], ...]

    def __post_init__(self):
        if any(tau <= 0 for tau, _ in self.segments):
            raise ValueError("segment durations must be positive")


def segment_exponential(S: np.ndarray, tau: float) -> np.ndarray:
    """Closed-form exp(-i S tau) for a 2x2 Hermitian generator."""
    S = np.asarray(S, dtype=complex)
    a = float(np.real(S[0, 0] + S[1, 1])) / 2.0
    bx = float(np.real(S[0, 1]))
    by = -float(np.imag(S[0, 1]))
    bz = float(np.real(S[0, 0] - S[1, 1])) / 2.0
    b = np.sqrt(bx * bx + by * by + bz * bz)
    phase = np.exp(-1j * a * tau)
    if b == 0.0:
        return phase * np.eye(2, dtype=complex)
    c, s = np.cos(b * tau), np.sin(b * tau)
    nx, ny, nz = bx / b, by / b, bz / b
    rot = np.array(
        [
            [c - 1j * s * nz, -1j * s * (nx - 1j * ny)],
            [-1j * s * (nx + 1j * ny), c + 1j * s * nz],
        ],
        dtype=complex,
    )
    return phase * rot


def block_propagator(sched: BlockSchedule) -> np.ndarray:
    """Time-ordered product of segment exponentials, latest leftmost."""
    if not sched.segments:
        raise EmptySchedule("block schedule has no segments")
    U = np.eye(2, dtype=complex)
    for tau, S in sched.segments:
        U = segment_exponential(S, tau) @ U
    return U


@dataclass(frozen=True)
class PropagatorResult:
    pairing: tuple[tuple[int, int], ...]
    block_unitaries: tuple[np.ndarray, ...]
    global_phases: tuple[float, ...]  # phi_i = -int Delta+_i dt
    assembled: np.ndarray


def _segment_grid(spec: HamiltonianSpec, T: float) -> list[tuple[float, float]]:
    """Split [0, T] at the spec's schedule breakpoints."""
    if T <= 0:
        raise TimeOutOfRange(f"T={T} must be positive")
    duration = spec.duration
    if duration is not None and T > duration + 1e-12:
        raise TimeOutOfRange(f"T={T} exceeds schedule duration {duration}")
    cuts = [t for t in spec.grid if t < T] + [T]
    segments = []
    t0 = 0.0
    for t1 in cuts:
        if t1 > t0:
            segments.append((t0, t1))
            t0 = t1
    return segments


def evolve(spec: HamiltonianSpec, T: float, tol: float = 1e-10) -> PropagatorResult:
    """Blockwise propagator of the spec's gem-basis Hamiltonian over [0, T].

    Every segment must block under the same pairing; a change of pairing
    between segments raises PairingDrift (re-pairing is a separate run).
    """
    d = spec.half()
    dim = 4**d
    windows = _segment_grid(spec, T)

    pairing = None
    per_segment = []  # (tau, blocks)
    for t0, t1 in windows:
        M = gem_matrix(spec, 0.5 * (t0 + t1))
        dec = extract_blocks(M, tol=tol)
        if pairing is None:
            pairing = dec.pairing
        elif dec.pairing != pairing:
            raise PairingDrift(
                f"segment ({t0}, {t1}] pairs {dec.pairing}, expected {pairing}"
            )
        per_segment.append((t1 - t0, dec.blocks))

    assert pairing is not None
    unitaries = []
    phases = []
    assembled = np.zeros((dim, dim), dtype=complex)
    for b, (j, k) in enumerate(pairing):
        sched = BlockSchedule(tuple((tau, blocks[b]) for tau, blocks in per_segment))
        U = block_propagator(sched)
        phi = -sum(
            tau * float(np.real(np.trace(blocks[b]))) / 2.0 for tau, blocks in per_segment
        )
        unitaries.append(U)
        phases.append(phi)
        assembled[np.ix_([j, k], [j, k])] = U
    return PropagatorResult(
        pairing=pairing,
        block_unitaries=tuple(unitaries),
        global_phases=tuple(phases),
        assembled=assembled,
    )


def verify_unitary(U: np.ndarray, tol: float = 1e-9) -> dict:
    """Max-norm deviation of U^dag U from the identity."""
    U = np.asarray(U, dtype=complex)
    dev = float(np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))))
    return {"max_deviation": dev, "pass": dev <= tol}


def verify_group_structure(r: PropagatorResult, tol: float = 1e-9) -> dict:
    """Check the U(1)^{m-1} x SU(2)^m factorization of a propagator result.

    Per block: unitarity and det(S_U_i) = e^{2i phi_i}. Globally: the
    determinant product is 1 (special unitarity inherited from the
    traceless generator).
    """
    block_checks = []
    det_product = 1.0 + 0.0j
    for U, phi in zip(r.block_unitaries, r.global_phases):
        unit = verify_unitary(U, tol)
        det = complex(np.linalg.det(U))
        det_product *= det
        phase_dev = abs(det - np.exp(2j * phi))
        block_checks.append(
            {
                "unitary_deviation": unit["max_deviation"],
                "det_phase_deviation": phase_dev,
                "phase": phi,
                "pass": unit["pass"] and phase_dev <= tol,
            }
        )
    det_product_deviation = abs(det_product - 1.0)
    return {
        "blocks": block_checks,
        "det_product_deviation": det_product_deviation,
        "pass": all(b["pass"] for b in block_checks) and det_product_deviation <= tol,
    }

"""Time-dependent Pauli-string Hamiltonians and their entangled-basis elements.

A Hamiltonian is a sum of Pauli strings, each weighted by a real
piecewise-constant coefficient schedule (hbar = 1 throughout; energies and
times are reciprocal units). Matrix elements in the Bell gems basis are
evaluated through the per-site trace rule

    <I| H |K> = (1/2^d) sum_J h_J(t) prod_s Tr(sigma~_{i_s} sigma_{j_{d+s}}
                                               sigma~_{k_s}^T sigma_{j_s}^T)

iterating only over the strings J actually present in the spec. The dense
change-of-basis path B^dag H(t) B is kept as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from bellgems.basis import build_basis
from bellgems.errors import IdentityTermPresent, InconsistentArity, OddArity, TimeOutOfRange
from bellgems.pauli import TRACE_TABLE, PauliString, tensor_product

__all__ = [
    "CoefficientSchedule",
    "HamiltonianTerm",
    "HamiltonianSpec",
    "ValidationReport",
    "validate",
    "assemble_dense",
    "gem_matrix",
    "gem_matrix_element",
    "gem_matrix_oracle",
]


@dataclass(frozen=True)
class CoefficientSchedule:
    """Piecewise-constant real coefficient: value `v_i` on (t_{i-1}, t_i]."""

    segments: tuple[tuple[float, float], ...]

    def __post_init__(self):
        segs = tuple((float(t), float(v)) for t, v in self.segments)
        if not segs:
            raise ValueError("schedule needs at least one segment")
        ends = [t for t, _ in segs]
        if any(t2 <= t1 for t1, t2 in zip(ends, ends[1:])) or ends[0] <= 0:
            raise ValueError("segment end times must be positive and strictly increasing")
        if not all(np.isfinite(t) and np.isfinite(v) for t, v in segs):
            raise ValueError("schedule entries must be finite")
        object.__setattr__(self, "segments", segs)

    @classmethod
    def constant(cls, value: float, duration: float = 1.0) -> "CoefficientSchedule":
        return cls(((duration, value),))

    @property
    def duration(self) -> float:
        return self.segments[-1][0]

    def value_at(self, t: float) -> float:
        if t < 0 or t > self.duration:
            raise TimeOutOfRange(f"t={t} outside [0, {self.duration}]")
        for t_end, value in self.segments:
            if t <= t_end:
                return value
        return self.segments[-1][1]

    def refined(self, grid: tuple[float, ...]) -> "CoefficientSchedule":
        """Re-express on a finer breakpoint grid ending at the same duration."""
        return CoefficientSchedule(tuple((t, self.value_at(t)) for t in grid))


@dataclass(frozen=True)
class HamiltonianTerm:
    string: PauliString
    schedule: CoefficientSchedule


@dataclass(frozen=True)
class HamiltonianSpec:
    """A set of weighted Pauli strings sharing site count and segment grid."""

    n: int
    terms: tuple[HamiltonianTerm, ...] = field(default_factory=tuple)

    @classmethod
    def from_terms(cls, n: int, terms) -> "HamiltonianSpec":
        """Normalize raw terms: merge duplicate strings, refine to a common grid."""
        terms = list(terms)
        if not terms:
            return cls(n=n, terms=())
        durations = {t.schedule.duration for t in terms}
        if len(durations) > 1:
            raise ValueError(f"terms disagree on total duration: {sorted(durations)}")
        grid = tuple(sorted({t_end for t in terms for t_end, _ in t.schedule.segments}))
        refined = [HamiltonianTerm(t.string, t.schedule.refined(grid)) for t in terms]
        merged: dict[tuple[int, ...], list[float]] = {}
        order: list[tuple[int, ...]] = []
        for t in refined:
            key = t.string.axes
            if key not in merged:
                merged[key] = [v for _, v in t.schedule.segments]
                order.append(key)
            else:
                merged[key] = [a + b for a, b in zip(merged[key], (v for _, v in t.schedule.segments))]
        out = tuple(
            HamiltonianTerm(
                PauliString(len(axes), axes),
                CoefficientSchedule(tuple(zip(grid, merged[axes]))),
            )
            for axes in order
        )
        return cls(n=n, terms=out)

    @classmethod
    def from_dict(cls, data: dict) -> "HamiltonianSpec":
        """Build from the external-file layout {"n":, "terms":[{"axes":, "schedule":}]}."""
        n = int(data["n"])
        terms = []
        for i, td in enumerate(data.get("terms", [])):
            axes = tuple(int(a) for a in td["axes"])
            if len(axes) != n:
                raise InconsistentArity(f"term {i} has {len(axes)} axes, spec declares n={n}")
            for t_end, value in td["schedule"]:
                if isinstance(value, complex):
                    raise ValueError(f"term {i}: coefficients must be real")
            sched = CoefficientSchedule(tuple((float(t), float(v)) for t, v in td["schedule"]))
            terms.append(HamiltonianTerm(PauliString(n, axes), sched))
        return cls.from_terms(n, terms)

    @property
    def duration(self) -> float | None:
        return self.terms[0].schedule.duration if self.terms else None

    @property
    def grid(self) -> tuple[float, ...]:
        """Common segment end times (empty for the zero Hamiltonian)."""
        return tuple(t for t, _ in self.terms[0].schedule.segments) if self.terms else ()

    @property
    def dim(self) -> int:
        return 2**self.n

    def half(self) -> int:
        if self.n % 2 != 0:
            raise OddArity(f"n={self.n} is odd; the gem basis needs n = 2d")
        return self.n // 2


@dataclass(frozen=True)
class ValidationReport:
    n: int
    n_terms: int
    hermitian: bool
    traceless: bool
    duration: float | None


def validate(spec: HamiltonianSpec) -> ValidationReport:
    """Check structural invariants; Hermiticity and tracelessness follow from them."""
    for term in spec.terms:
        if term.string.n != spec.n:
            raise InconsistentArity(
                f"term on {term.string.n} sites in a spec with n={spec.n}"
            )
        if term.string.is_identity:
            raise IdentityTermPresent(
                "the all-identity string only contributes a global phase; drop it"
            )
    # real coefficients on Hermitian strings make H Hermitian; no identity
    # term makes it traceless
    return ValidationReport(
        n=spec.n,
        n_terms=len(spec.terms),
        hermitian=True,
        traceless=True,
        duration=spec.duration,
    )


def assemble_dense(spec: HamiltonianSpec, t: float) -> np.ndarray:
    """Dense 2^n x 2^n H(t) in the computational basis (standard Pauli variant)."""
    H = np.zeros((spec.dim, spec.dim), dtype=complex)
    for term in spec.terms:
        H += term.schedule.value_at(t) * term.string.to_matrix("standard")
    return H


def _term_gem_contribution(axes: tuple[int, ...], d: int) -> np.ndarray:
    """4^d x 4^d pattern of a single Pauli string in the gem basis (unit weight)."""
    factors = []
    for s in range(d):
        j_first = axes[s]
        j_second = axes[d + s]
        # G[a, b] = Tr(sigma~_a sigma_{j_second} sigma~_b^T sigma_{j_first}^T)
        factors.append(TRACE_TABLE[:, j_second, :, j_first])
    return tensor_product(factors) / 2.0**d


def gem_matrix(spec: HamiltonianSpec, t: float) -> np.ndarray:
    """H(t) in the Bell gems basis via the trace rule, summed over spec terms."""
    d = spec.half()
    dim = 4**d
    M = np.zeros((dim, dim), dtype=complex)
    for term in spec.terms:
        M += term.schedule.value_at(t) * _term_gem_contribution(term.string.axes, d)
    return M


def gem_matrix_element(spec: HamiltonianSpec, t: float, I: int, K: int) -> complex:
    """Single element <I| H(t) |K> via the trace rule."""
    d = spec.half()
    if not (0 <= I < 4**d and 0 <= K < 4**d):
        raise ValueError(f"basis indices must be in [0, {4**d}), got {I}, {K}")
    i_digits = [(I >> (2 * (d - 1 - s))) & 3 for s in range(d)]
    k_digits = [(K >> (2 * (d - 1 - s))) & 3 for s in range(d)]
    total = 0.0 + 0.0j
    for term in spec.terms:
        axes = term.string.axes
        prod = 1.0 + 0.0j
        for s in range(d):
            prod *= TRACE_TABLE[i_digits[s], axes[d + s], k_digits[s], axes[s]]
            if prod == 0:
                break
        if prod != 0:
            total += term.schedule.value_at(t) * prod
    return total / 2.0**d


def gem_matrix_oracle(spec: HamiltonianSpec, t: float) -> np.ndarray:
    """Independent change-of-basis path B^dag H(t) B (test oracle)."""
    d = spec.half()
    B = build_basis(d, d_max=max(d, 4)).matrix
    return B.conj().T @ assemble_dense(spec, t) @ B

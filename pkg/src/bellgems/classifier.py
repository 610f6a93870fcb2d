"""Structural classification of interaction patterns.

Two patterns guarantee that the Hamiltonian becomes 2x2 block diagonal in
the Bell gems basis:

* Type I: equal-axis couplings on correspondent pairs (which only produce
  diagonal entries) plus single-site fields along one common axis, confined
  to the sites of one correspondent pair.
* Type II: the same diagonal couplings plus equal-axis two-site couplings
  along one common axis on the four edges linking two correspondent pairs
  (k, k') with k < k' <= d: (k,k'), (k,k'+d), (k',k+d), (k+d,k'+d).

Everything else is reported as Unstructured, for which no block guarantee
is made.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from bellgems.basis import correspondent
from bellgems.hamiltonian import HamiltonianSpec

__all__ = ["PatternKind", "InteractionPattern", "classify", "predict_block_structure"]


class PatternKind(Enum):
    DIAGONAL_ONLY = "DiagonalOnly"
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    UNSTRUCTURED = "Unstructured"


@dataclass(frozen=True)
class InteractionPattern:
    kind: PatternKind
    active_pair: tuple[int, int] | None = None  # Type I: (k0, k0+d)
    pair_indices: tuple[int, int] | None = None  # Type II: (k, k') with k < k' <= d
    axis: int | None = None


_UNSTRUCTURED = InteractionPattern(kind=PatternKind.UNSTRUCTURED)


def classify(spec: HamiltonianSpec) -> InteractionPattern:
    """Decide which structural pattern (if any) the spec's term set matches."""
    d = spec.half()
    locals_: list[tuple[int, int]] = []  # (site, axis)
    noncorr: list[tuple[int, int, int]] = []  # (site_lo, site_hi, axis)
    for term in spec.terms:
        sup = term.string.support()
        if len(sup) == 1:
            locals_.append((sup[0], term.string.axes[sup[0] - 1]))
        elif len(sup) == 2:
            i, j = sup
            ai, aj = term.string.axes[i - 1], term.string.axes[j - 1]
            if ai != aj:
                return _UNSTRUCTURED
            if correspondent(i, d) == j:
                continue  # diagonal generator
            noncorr.append((i, j, ai))
        else:
            return _UNSTRUCTURED

    if not locals_ and not noncorr:
        return InteractionPattern(kind=PatternKind.DIAGONAL_ONLY)
    if locals_ and noncorr:
        return _UNSTRUCTURED

    if locals_:
        axes = {a for _, a in locals_}
        if len(axes) != 1:
            return _UNSTRUCTURED
        bases = {s if s <= d else s - d for s, _ in locals_}
        if len(bases) != 1:
            return _UNSTRUCTURED
        k0 = bases.pop()
        return InteractionPattern(
            kind=PatternKind.TYPE_I, active_pair=(k0, k0 + d), axis=axes.pop()
        )

    axes = {a for _, _, a in noncorr}
    if len(axes) != 1:
        return _UNSTRUCTURED
    base_pairs = set()
    for i, j, _ in noncorr:
        base_pairs.add(frozenset((i if i <= d else i - d, j if j <= d else j - d)))
    if len(base_pairs) != 1:
        return _UNSTRUCTURED
    bp = sorted(base_pairs.pop())
    if len(bp) != 2:
        return _UNSTRUCTURED
    k, kp = bp
    allowed = {(k, kp), (k, kp + d), (kp, k + d), (k + d, kp + d)}
    if not all((i, j) in allowed for i, j, _ in noncorr):
        return _UNSTRUCTURED
    return InteractionPattern(kind=PatternKind.TYPE_II, pair_indices=(k, kp), axis=axes.pop())


def predict_block_structure(pattern: InteractionPattern) -> bool:
    """True when the pattern guarantees a 2x2 block decomposition."""
    return pattern.kind is not PatternKind.UNSTRUCTURED

"""Command-line front end: basis, classify, transform, blocks, evolve.

Spec files are JSON: {"n": int, "terms": [{"axes": [int x n],
"schedule": [[t_end, value], ...]}, ...]}, with hbar = 1 units. Data goes
to stdout or --output; diagnostics go to stderr; the exit status is 0 only
on success.
"""

from __future__ import annotations

import argparse
import sys

from bellgems import errors
from bellgems.basis import build_basis
from bellgems.classifier import PatternKind, classify, predict_block_structure
from bellgems.decomposition import block_params_from_block, extract_blocks
from bellgems.evolution import evolve, verify_group_structure, verify_unitary
from bellgems.hamiltonian import gem_matrix, gem_matrix_oracle, validate
from bellgems.serialize import dump_json, load_spec_file, matrix_to_doc

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellgems",
        description="SU(2) block decomposition of 2d-qubit spin Hamiltonians "
        "in the Bell gems basis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="spec file (JSON)")
        p.add_argument("--tol", type=float, default=1e-10, help="numeric tolerance")
        p.add_argument("--output", help="write data here instead of stdout")
        p.add_argument(
            "--pairing",
            default="ascending",
            help="pairing rule: 'ascending' (custom:PATH reserved for the API)",
        )

    p = sub.add_parser("basis", help="dump the 2^2d x 2^2d basis matrix")
    p.add_argument("--d", type=int, required=True, help="half-system size, 1..4")
    add_common(p, needs_input=False)

    p = sub.add_parser("classify", help="report the interaction pattern")
    add_common(p)

    p = sub.add_parser("transform", help="dump H(t) in the gem basis")
    add_common(p)
    p.add_argument("--t", type=float, default=0.0, help="evaluation time")
    p.add_argument(
        "--check-oracle",
        action="store_true",
        help="also report the deviation from the dense change-of-basis path",
    )

    p = sub.add_parser("blocks", help="extract 2x2 blocks and their parameters")
    add_common(p)
    p.add_argument("--t", type=float, default=0.0, help="evaluation time")

    p = sub.add_parser("evolve", help="blockwise propagator over [0, T]")
    add_common(p)
    p.add_argument("--T", type=float, required=True, help="evolution time")
    return parser


def _emit(doc, args) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            dump_json(doc, fh)
    else:
        dump_json(doc, sys.stdout)


def _cmd_basis(args) -> int:
    if not 1 <= args.d <= 4:
        raise ValueError(f"--d must be in 1..4, got {args.d}")
    _emit(matrix_to_doc(build_basis(args.d).matrix), args)
    return 0


def _cmd_classify(args) -> int:
    spec = load_spec_file(args.input)
    validate(spec)
    pattern = classify(spec)
    doc = {"kind": pattern.kind.value}
    if pattern.kind is PatternKind.TYPE_I:
        doc["pair"] = list(pattern.active_pair)
        doc["axis"] = pattern.axis
    elif pattern.kind is PatternKind.TYPE_II:
        doc["pair"] = list(pattern.pair_indices)
        doc["axis"] = pattern.axis
    doc["block_decomposable"] = predict_block_structure(pattern)
    _emit(doc, args)
    return 0


def _cmd_transform(args) -> int:
    spec = load_spec_file(args.input)
    validate(spec)
    M = gem_matrix(spec, args.t)
    doc = matrix_to_doc(M)
    if args.check_oracle:
        import numpy as np

        doc["oracle_deviation"] = float(np.max(np.abs(M - gem_matrix_oracle(spec, args.t))))
    _emit(doc, args)
    return 0


def _cmd_blocks(args) -> int:
    spec = load_spec_file(args.input)
    validate(spec)
    dec = extract_blocks(gem_matrix(spec, args.t), tol=args.tol)
    params = []
    for S in dec.blocks:
        p = block_params_from_block(S)
        params.append(
            {
                "delta_plus": p.delta_plus,
                "delta_minus": p.delta_minus,
                "r_a": p.r_a,
                "r_b": p.r_b,
                "gamma": p.gamma,
            }
        )
    doc = {
        "pairing": [list(p) for p in dec.pairing],
        "blocks": [matrix_to_doc(S) for S in dec.blocks],
        "params": params,
        "residual": dec.residual,
    }
    _emit(doc, args)
    return 0


def _cmd_evolve(args) -> int:
    spec = load_spec_file(args.input)
    validate(spec)
    result = evolve(spec, args.T, tol=args.tol)
    unit = verify_unitary(result.assembled, tol=1e-9)
    group = verify_group_structure(result, tol=1e-9)
    doc = {
        "pairing": [list(p) for p in result.pairing],
        "block_unitaries": [matrix_to_doc(U) for U in result.block_unitaries],
        "phases": list(result.global_phases),
        "assembled": matrix_to_doc(result.assembled),
        "unitarity_deviation": unit["max_deviation"],
        "det_product_deviation": group["det_product_deviation"],
    }
    _emit(doc, args)
    return 0


_HANDLERS = {
    "basis": _cmd_basis,
    "classify": _cmd_classify,
    "transform": _cmd_transform,
    "blocks": _cmd_blocks,
    "evolve": _cmd_evolve,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.pairing != "ascending":
        print(f"error: unsupported pairing rule {args.pairing!r}", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args)
    except errors.BlockStructureViolation as exc:
        print(f"error: block structure violation, component {exc.component}", file=sys.stderr)
        return 1
    except (errors.BellGemsError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""JSON-compatible documents for specs, matrices, and reports.

Complex matrices travel as {"rows":, "cols":, "data": [[[re, im], ...], ...]}.
Floats are serialized with Python's shortest round-trip repr, so a re-read
dump reproduces every entry bit-exactly.
"""

from __future__ import annotations

import json

import numpy as np

from bellgems.hamiltonian import HamiltonianSpec

__all__ = [
    "matrix_to_doc",
    "doc_to_matrix",
    "load_spec_file",
    "dump_json",
]


def matrix_to_doc(M: np.ndarray) -> dict:
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    data = [[[float(v.real), float(v.imag)] for v in row] for row in M]
    return {"rows": M.shape[0], "cols": M.shape[1], "data": data}


def doc_to_matrix(doc: dict) -> np.ndarray:
    rows, cols = int(doc["rows"]), int(doc["cols"])
    M = np.empty((rows, cols), dtype=complex)
    for r, row in enumerate(doc["data"]):
        for c, (re, im) in enumerate(row):
            M[r, c] = complex(re, im)
    return M


def load_spec_file(path: str) -> HamiltonianSpec:
    with open(path) as fh:
        data = json.load(fh)
    return HamiltonianSpec.from_dict(data)


def dump_json(doc, stream) -> None:
    json.dump(doc, stream, indent=None, separators=(",", ":"))
    stream.write("\n")

"""JSON state-pair files and complex-number encoding.

A state-pair file is ``{"dimension": d, "a": [[re, im], ...], "b": [[re, im], ...]}``.
Floats are written with ``repr`` precision so values re-parse bit-for-bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .hilbert import InputError, as_state

__all__ = [
    "decode_vector",
    "dumps",
    "encode_complex",
    "encode_vector",
    "read_pair_file",
    "read_vector_file",
    "write_pair_file",
]


def encode_complex(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def encode_vector(x: ArrayLike) -> list[list[float]]:
    return [encode_complex(z) for z in np.asarray(x, dtype=np.complex128)]


def decode_vector(data: Any, name: str = "vector") -> NDArray[np.complex128]:
    if not isinstance(data, list):
        raise InputError(f"{name} must be a list of [re, im] pairs")
    out = np.empty(len(data), dtype=np.complex128)
    for i, entry in enumerate(data):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
        ):
            raise InputError(f"{name}[{i}] must be a [re, im] pair of numbers")
        if not all(math.isfinite(v) for v in entry):
            raise InputError(f"{name}[{i}] is not finite")
        out[i] = complex(entry[0], entry[1])
    return as_state(out, name)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def parse_pair(data: Any) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    if not isinstance(data, dict) or not {"dimension", "a", "b"} <= data.keys():
        raise InputError('state-pair file must be an object with "dimension", "a" and "b"')
    dim = data["dimension"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("dimension must be a positive integer")
    a = decode_vector(data["a"], "a")
    b = decode_vector(data["b"], "b")
    for name, v in (("a", a), ("b", b)):
        if v.shape[0] != dim:
            raise InputError(f"dimension mismatch: {name} has {v.shape[0]} entries, dimension is {dim}")
    for name, v in (("a", a), ("b", b)):
        if not np.any(v):
            raise InputError(f"zero input vector: {name}")
    return a, b


def read_pair_file(path: str | Path) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    return parse_pair(_load_json(path))


def write_pair_file(path: str | Path, a: ArrayLike, b: ArrayLike) -> None:
    a = as_state(a, "a")
    b = as_state(b, "b")
    if a.shape != b.shape:
        raise InputError(f"dimension mismatch: {a.shape[0]} != {b.shape[0]}")
    Path(path).write_text(dumps({"dimension": int(a.shape[0]), "a": encode_vector(a), "b": encode_vector(b)}))


def read_vector_file(path: str | Path) -> NDArray[np.complex128]:
    """Read a bare ``[[re, im], ...]`` list or an object with a ``"vector"`` key."""
    data = _load_json(path)
    if isinstance(data, dict):
        if "vector" not in data:
            raise InputError('vector file object must have a "vector" key')
        data = data["vector"]
    return decode_vector(data, "vector")

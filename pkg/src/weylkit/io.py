"""Serialization: JSON containers for signals and fields, binary tensors.

Signals and 2-D fields use a plain JSON container with separate real and
imaginary arrays.  Large objects (4-index STFT tensors, operator matrices)
use a binary row-major complex128 payload preceded by a single JSON header
line.  All writes are atomic (write to a temporary file in the target
directory, then rename).
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .grid import Field2, SampleGrid, Signal1
from .transforms import Stft2Result
from .quantization import OperatorMatrix

_MAGIC = "weylkit-binary"


def atomic_write_text(path: str, text: str) -> None:
    _atomic_write(path, text.encode("utf-8"))


def atomic_write_bytes(path: str, data: bytes) -> None:
    _atomic_write(path, data)


def _atomic_write(path: str, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-weylkit-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- JSON containers ---------------------------------------------------------


def signal_to_json(f: Signal1) -> dict:
    return {
        "n": f.grid.n_points,
        "delta": f.grid.spacing,
        "re": f.samples.real.tolist(),
        "im": f.samples.imag.tolist(),
    }


def signal_from_json(d: dict) -> Signal1:
    grid = SampleGrid(int(d["n"]), float(d["delta"]))
    samples = np.asarray(d["re"], dtype=float) + 1j * np.asarray(d["im"], dtype=float)
    return Signal1(grid, samples)


def field_to_json(a: Field2) -> dict:
    return {
        "n": a.grid.n_points,
        "delta": a.grid.spacing,
        "axes": a.axes,
        "re": a.samples.real.tolist(),
        "im": a.samples.imag.tolist(),
    }


def field_from_json(d: dict) -> Field2:
    grid = SampleGrid(int(d["n"]), float(d["delta"]))
    samples = np.asarray(d["re"], dtype=float) + 1j * np.asarray(d["im"], dtype=float)
    return Field2(grid, samples, axes=d.get("axes", "position_frequency"))


def write_signal(path: str, f: Signal1) -> None:
    atomic_write_text(path, json.dumps(signal_to_json(f), sort_keys=True) + "\n")


def read_signal(path: str) -> Signal1:
    with open(path, "r", encoding="utf-8") as handle:
        return signal_from_json(json.load(handle))


def write_field(path: str, a: Field2) -> None:
    atomic_write_text(path, json.dumps(field_to_json(a), sort_keys=True) + "\n")


def read_field(path: str) -> Field2:
    with open(path, "r", encoding="utf-8") as handle:
        return field_from_json(json.load(handle))


# -- binary tensors with a JSON header line ----------------------------------


def _binary_blob(kind: str, grid: SampleGrid, array: np.ndarray, extra: dict) -> bytes:
    header = {
        "magic": _MAGIC,
        "kind": kind,
        "n": grid.n_points,
        "delta": grid.spacing,
        "shape": list(array.shape),
        "dtype": "complex128",
    }
    header.update(extra)
    line = json.dumps(header, sort_keys=True) + "\n"
    payload = np.ascontiguousarray(array, dtype=np.complex128).tobytes()
    return line.encode("utf-8") + payload


def _read_binary(path: str, kind: str) -> tuple[SampleGrid, np.ndarray, dict]:
    with open(path, "rb") as handle:
        line = handle.readline()
        payload = handle.read()
    header = json.loads(line.decode("utf-8"))
    if header.get("magic") != _MAGIC or header.get("kind") != kind:
        raise ValueError(f"{path} is not a {kind} file")
    shape = tuple(int(s) for s in header["shape"])
    array = np.frombuffer(payload, dtype=np.complex128).reshape(shape)
    grid = SampleGrid(int(header["n"]), float(header["delta"]))
    return grid, array, header


def write_stft2(path: str, result: Stft2Result) -> None:
    atomic_write_bytes(
        path, _binary_blob("stft2", result.base_grid, result.values, {})
    )


def read_stft2(path: str) -> Stft2Result:
    grid, array, _ = _read_binary(path, "stft2")
    return Stft2Result(grid, array)


def write_operator(path: str, op: OperatorMatrix) -> None:
    atomic_write_bytes(path, _binary_blob("operator", op.grid, op.entries, {}))


def read_operator(path: str) -> OperatorMatrix:
    grid, array, _ = _read_binary(path, "operator")
    return OperatorMatrix(grid, array)

"""Feature-matrix container file and its label sidecar.

Layout: magic ``FMX1``, u32 row count, u32 column count (little
endian), then row-major float32 little-endian values.  Labels travel in
a companion CSV with columns (clip_id, action, variant).
"""

from __future__ import annotations

import csv
import struct

import numpy as np

MAGIC = b"FMX1"


def write_fmx(path, matrix: np.ndarray) -> None:
    m = np.ascontiguousarray(matrix, dtype="<f4")
    if m.ndim != 2:
        raise ValueError("feature matrix must be 2-D")
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(struct.pack("<II", m.shape[0], m.shape[1]))
        f.write(m.tobytes())


def read_fmx(path) -> np.ndarray:
    with open(path, "rb") as f:
        magic = f.read(4)
        if magic != MAGIC:
            raise ValueError(f"bad magic {magic!r}")
        rows, cols = struct.unpack("<II", f.read(8))
        data = f.read(rows * cols * 4)
    if len(data) != rows * cols * 4:
        raise ValueError("truncated feature matrix")
    return np.frombuffer(data, dtype="<f4").reshape(rows, cols).copy()


def write_labels_csv(path, rows: list[tuple[str, str, int]]) -> None:
    """Rows of (clip_id, action, variant)."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["clip_id", "action", "variant"])
        for clip_id, action, variant in rows:
            writer.writerow([clip_id, action, variant])


def read_labels_csv(path) -> list[tuple[str, str, int]]:
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        if header != ["clip_id", "action", "variant"]:
            raise ValueError(f"unexpected label header {header}")
        return [(r[0], r[1], int(r[2])) for r in reader]

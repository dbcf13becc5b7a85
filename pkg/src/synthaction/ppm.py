"""Binary PPM (P6) and PGM (P5) readers/writers.

Images cross this boundary as numpy arrays: RGB frames are uint8
``(H, W, 3)``, grayscale debug dumps are uint8 ``(H, W)``.  Optional
comment lines carry provenance (seed, config hash); they must be stable
across reruns, never timestamps.
"""

from __future__ import annotations

import numpy as np


def write_ppm(path, rgb: np.ndarray, comment: str | None = None) -> None:
    """Write a uint8 (H, W, 3) array as binary PPM."""
    rgb = np.asarray(rgb)
    if rgb.ndim != 3 or rgb.shape[2] != 3 or rgb.dtype != np.uint8:
        raise ValueError(f"expected uint8 (H, W, 3) array, got {rgb.dtype} {rgb.shape}")
    h, w = rgb.shape[:2]
    with open(path, "wb") as f:
        f.write(b"P6\n")
        if comment:
            f.write(b"# " + comment.encode("ascii") + b"\n")
        f.write(f"{w} {h}\n255\n".encode("ascii"))
        f.write(rgb.tobytes())


def write_pgm(path, gray: np.ndarray, comment: str | None = None) -> None:
    """Write a uint8 (H, W) array as binary PGM."""
    gray = np.asarray(gray)
    if gray.ndim != 2 or gray.dtype != np.uint8:
        raise ValueError(f"expected uint8 (H, W) array, got {gray.dtype} {gray.shape}")
    h, w = gray.shape
    with open(path, "wb") as f:
        f.write(b"P5\n")
        if comment:
            f.write(b"# " + comment.encode("ascii") + b"\n")
        f.write(f"{w} {h}\n255\n".encode("ascii"))
        f.write(gray.tobytes())


def _read_header(f):
    """Parse magic, dimensions and maxval, skipping comment lines."""
    magic = f.read(2)
    tokens = []
    while len(tokens) < 3:
        line = f.readline()
        if not line:
            raise ValueError("truncated netpbm header")
        stripped = line.split(b"#", 1)[0]
        tokens.extend(stripped.split())
    w, h, maxval = (int(t) for t in tokens[:3])
    if maxval != 255:
        raise ValueError(f"unsupported maxval {maxval}")
    return magic, w, h


def read_ppm(path) -> np.ndarray:
    """Read a binary PPM into a uint8 (H, W, 3) array."""
    with open(path, "rb") as f:
        magic, w, h = _read_header(f)
        if magic != b"P6":
            raise ValueError(f"not a P6 file: {magic!r}")
        data = f.read(w * h * 3)
    if len(data) != w * h * 3:
        raise ValueError("truncated PPM pixel data")
    return np.frombuffer(data, dtype=np.uint8).reshape(h, w, 3)


def read_pgm(path) -> np.ndarray:
    """Read a binary PGM into a uint8 (H, W) array."""
    with open(path, "rb") as f:
        magic, w, h = _read_header(f)
        if magic != b"P5":
            raise ValueError(f"not a P5 file: {magic!r}")
        data = f.read(w * h)
    if len(data) != w * h:
        raise ValueError("truncated PGM pixel data")
    return np.frombuffer(data, dtype=np.uint8).reshape(h, w)

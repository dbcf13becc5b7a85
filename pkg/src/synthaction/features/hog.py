"""Histogram-of-oriented-gradients descriptor.

Fixed configuration: centered [-1, 0, 1] gradients with edge
replication, unsigned orientations over 9 bins of 20 degrees (centers
at 0, 20, ..., 160 with circular bilinear voting), 2x2-pixel cells,
2x2-cell blocks at stride one cell, L2 norm clipped at 0.2 and
renormalized per block.  Descriptor layout is blocks row-major, then
cells row-major, then orientation bins.
"""

from __future__ import annotations

import numpy as np

N_BINS = 9
BIN_WIDTH = 180.0 / N_BINS
CELL = 2
BLOCK = 2
CLIP = 0.2
_EPS = 1e-12


def hog_length(height: int, width: int) -> int:
    """Descriptor length for a given input size (block-count formula)."""
    cy, cx = height // CELL, width // CELL
    by, bx = cy - BLOCK + 1, cx - BLOCK + 1
    return by * bx * BLOCK * BLOCK * N_BINS


def hog(img: np.ndarray) -> np.ndarray:
    """Compute the descriptor of a grayscale image in [0, 1]."""
    img = np.asarray(img, dtype=np.float64)
    if img.ndim != 2:
        raise ValueError("expected a grayscale image")
    h, w = img.shape
    if h % CELL or w % CELL:
        raise ValueError(f"image dims {h}x{w} not divisible by cell size {CELL}")
    cy, cx = h // CELL, w // CELL
    if cy < BLOCK or cx < BLOCK:
        raise ValueError("image too small for one block")

    padded = np.pad(img, 1, mode="edge")
    gx = padded[1:-1, 2:] - padded[1:-1, :-2]
    gy = padded[2:, 1:-1] - padded[:-2, 1:-1]
    mag = np.hypot(gx, gy)
    ang = np.degrees(np.arctan2(gy, gx)) % 180.0

    # circular bilinear vote between the two nearest bin centers
    pos = ang / BIN_WIDTH
    lo = np.floor(pos).astype(np.int64) % N_BINS
    hi = (lo + 1) % N_BINS
    w_hi = pos - np.floor(pos)
    votes = np.zeros((h, w, N_BINS))
    np.put_along_axis(votes, lo[..., None], (mag * (1.0 - w_hi))[..., None], axis=2)
    hi_votes = np.zeros_like(votes)
    np.put_along_axis(hi_votes, hi[..., None], (mag * w_hi)[..., None], axis=2)
    votes += hi_votes

    cells = votes.reshape(cy, CELL, cx, CELL, N_BINS).sum(axis=(1, 3))

    by, bx = cy - BLOCK + 1, cx - BLOCK + 1
    blocks = np.empty((by, bx, BLOCK, BLOCK, N_BINS))
    for dy in range(BLOCK):
        for dx in range(BLOCK):
            blocks[:, :, dy, dx, :] = cells[dy:dy + by, dx:dx + bx, :]
    flat = blocks.reshape(by, bx, -1)

    norm = np.sqrt((flat ** 2).sum(axis=2, keepdims=True))
    flat = flat / (norm + _EPS)
    flat = np.minimum(flat, CLIP)
    norm = np.sqrt((flat ** 2).sum(axis=2, keepdims=True))
    flat = flat / (norm + _EPS)
    return flat.ravel()

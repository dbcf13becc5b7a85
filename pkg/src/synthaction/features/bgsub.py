"""Sample-consensus background subtraction over a short frame window.

The six frames ending at the representative mid frame populate a
per-pixel color-sample history (capacity 30; uniform random
replacement once full, which a six-frame window never triggers).  A
mid-frame pixel is background when at least ``k`` stored samples lie
within L2 color distance ``t`` of it; the returned grayscale mid frame
has background pixels zeroed.
"""

from __future__ import annotations

import numpy as np

from ..imgproc import to_float, to_grayscale

HISTORY_CAPACITY = 30
K_NEIGHBOURS = 2
DISTANCE_T = 0.16
WINDOW = 6
_REPLACEMENT_SEED = 0x5A17


def bg_subtract_frames(frames, k: int = K_NEIGHBOURS, t: float = DISTANCE_T,
                       capacity: int = HISTORY_CAPACITY) -> np.ndarray:
    """Run the subtraction on an explicit window of RGB frames.

    The last frame is classified against the whole window (itself
    included).  Returns the masked grayscale last frame.
    """
    if len(frames) < WINDOW:
        raise ValueError(f"need at least {WINDOW} frames, got {len(frames)}")
    window = [to_float(f) for f in frames]
    if capacity < len(window):
        gen = np.random.Generator(np.random.Philox(_REPLACEMENT_SEED))
        kept = list(window[:capacity])
        for sample in window[capacity:]:
            slot = int(gen.integers(0, capacity))
            kept[slot] = sample
        window = kept
    history = np.stack(window, axis=0)  # (n, H, W, 3)
    mid = history[-1] if len(frames) <= capacity else to_float(frames[-1])

    dist_sq = ((history - mid[None]) ** 2).sum(axis=3)
    counts = (dist_sq < t * t).sum(axis=0)
    background = counts >= k

    gray = to_grayscale(mid)
    gray = np.where(background, np.float32(0.0), gray)
    return gray.astype(np.float32)


def bg_subtract(clip) -> np.ndarray:
    """Apply the subtraction to a clip's mid-frame window."""
    frames = getattr(clip, "frames", clip)
    n = len(frames)
    if n < WINDOW:
        raise ValueError(f"clip too short: {n} < {WINDOW} frames")
    mid = n // 2
    return bg_subtract_frames(frames[mid - 5:mid + 1])

"""Two-subiteration thinning down to unit-width skeletons.

Classic border-deletion rules: a foreground pixel is removed when it
has 2..6 foreground neighbours, exactly one 0->1 transition around its
8-neighbourhood, and the directional products of the active
subiteration vanish.  Subiterations alternate until a full pass deletes
nothing, so the result is a fixed point (re-running is the identity)
and always a subset of the input foreground.
"""

from __future__ import annotations

import numpy as np


def _neighbours(padded: np.ndarray):
    """The eight neighbour planes p2..p9 (N, NE, E, SE, S, SW, W, NW)."""
    p2 = padded[:-2, 1:-1]
    p3 = padded[:-2, 2:]
    p4 = padded[1:-1, 2:]
    p5 = padded[2:, 2:]
    p6 = padded[2:, 1:-1]
    p7 = padded[2:, :-2]
    p8 = padded[1:-1, :-2]
    p9 = padded[:-2, :-2]
    return p2, p3, p4, p5, p6, p7, p8, p9


def _subiteration(img: np.ndarray, first: bool) -> np.ndarray:
    padded = np.pad(img, 1, mode="constant")
    p = _neighbours(padded)
    b = sum(x.astype(np.int8) for x in p)
    ring = np.stack(p + (p[0],), axis=0).astype(np.int8)
    a = ((ring[1:] == 1) & (ring[:-1] == 0)).sum(axis=0)
    p2, _, p4, _, p6, _, p8, _ = p
    if first:
        cond_c = (p2 & p4 & p6) == 0
        cond_d = (p4 & p6 & p8) == 0
    else:
        cond_c = (p2 & p4 & p8) == 0
        cond_d = (p2 & p6 & p8) == 0
    deletable = img & (b >= 2) & (b <= 6) & (a == 1) & cond_c & cond_d
    return img & ~deletable


def skeletonize(img: np.ndarray, threshold: float = 0.5) -> np.ndarray:
    """Binarize at ``threshold`` then thin to a unit-width skeleton.

    Returns a float32 image of 0s and 1s with the input's shape.
    """
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError("expected a grayscale image")
    current = img > threshold
    while True:
        after = _subiteration(_subiteration(current, True), False)
        if np.array_equal(after, current):
            break
        current = after
    return current.astype(np.float32)

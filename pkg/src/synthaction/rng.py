"""Seedable, splittable random streams.

Every random draw in the toolkit comes from a named substream derived
from one master 64-bit seed.  Substreams are keyed by a path of small
integers (e.g. ``(STREAM_CLIP, clip_index)``) through numpy's
``SeedSequence.spawn_key`` mechanism on top of the counter-based Philox
generator, so streams are independent of each other and of the order in
which they are consumed.  That is what makes parallel clip rendering
schedule-independent.
"""

from __future__ import annotations

import numpy as np

# Stream kinds.  Values are part of the on-disk provenance contract:
# changing them changes every generated dataset.
STREAM_CLIP = 0
STREAM_STYLES = 1
STREAM_SPLIT = 2
STREAM_TRAIN = 3
STREAM_KMEANS = 4
STREAM_TSNE = 5


def substream(seed: int, *path: int) -> np.random.Generator:
    """Return the generator for the substream ``path`` under ``seed``."""
    ss = np.random.SeedSequence(entropy=int(seed) & 0xFFFFFFFFFFFFFFFF,
                                spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(ss))


def generator(seed: int) -> np.random.Generator:
    """Plain generator for ``seed`` (no substream path)."""
    return substream(seed)

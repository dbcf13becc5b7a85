import numpy as np
import pytest

from synthaction.features import bg_subtract, bg_subtract_frames
from synthaction.features.bgsub import DISTANCE_T, K_NEIGHBOURS


def knn_mask_oracle(frames, k=K_NEIGHBOURS, t=DISTANCE_T):
    """Per-pixel distance oracle: loop over pixels and history samples."""
    hist = [f.astype(np.float64) / 255.0 for f in frames]
    mid = hist[-1]
    h, w = mid.shape[:2]
    fg = np.zeros((h, w), dtype=bool)
    for r in range(h):
        for c in range(w):
            count = sum(1 for sample in hist
                        if np.linalg.norm(sample[r, c] - mid[r, c]) < t)
            fg[r, c] = count < k
    return fg


def test_static_scene_all_background():
    frame = np.full((16, 16, 3), 120, dtype=np.uint8)
    out = bg_subtract_frames([frame.copy() for _ in range(6)])
    assert out.shape == (16, 16)
    assert np.all(out == 0.0)


def test_bright_square_is_foreground():
    static = np.full((24, 24, 3), 60, dtype=np.uint8)
    frames = [static.copy() for _ in range(5)]
    last = static.copy()
    last[7:17, 4:14] = 240
    frames.append(last)

    out = bg_subtract_frames(frames)
    fg = out > 0.0
    expected = knn_mask_oracle(frames)
    assert np.array_equal(fg, expected)
    assert fg[7:17, 4:14].all()
    expected_outside = expected.copy()
    expected_outside[7:17, 4:14] = False
    assert not expected_outside.any()
    # foreground keeps the grayscale value of the mid frame
    assert np.allclose(out[7:17, 4:14], 240 / 255.0, atol=1e-6)


def test_small_color_shift_stays_background():
    base = np.full((8, 8, 3), 100, dtype=np.uint8)
    frames = [base.copy() for _ in range(5)]
    shifted = base.copy()
    shifted += 5  # ~0.03 L2 shift, well inside the threshold
    frames.append(shifted)
    out = bg_subtract_frames(frames)
    assert np.all(out == 0.0)


def test_clip_wrapper_uses_mid_window():
    h = w = 8
    frames = [np.full((h, w, 3), 50, dtype=np.uint8) for _ in range(30)]
    frames[15] = frames[15].copy()
    frames[15][2:4, 2:4] = 250  # mid frame of a 30-frame clip
    out = bg_subtract(frames)
    assert (out[2:4, 2:4] > 0).all()
    assert np.count_nonzero(out) == 4


def test_clip_too_short_rejected():
    frames = [np.zeros((4, 4, 3), dtype=np.uint8)] * 5
    with pytest.raises(ValueError):
        bg_subtract(frames)
    with pytest.raises(ValueError):
        bg_subtract_frames(frames)

"""Frame selection and pixel-level preprocessing.

Images are numpy float32 arrays with values in [0, 1]: grayscale is
``(H, W)``, RGB is ``(H, W, 3)``.  Renderer output (uint8) is converted
on the way in.  All functions are pure and bit-deterministic.
"""

from __future__ import annotations

import numpy as np

# ITU-R BT.601 luma weights.
LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114], dtype=np.float32)


def to_float(img: np.ndarray) -> np.ndarray:
    """uint8 image -> float32 in [0, 1] (float input passes through)."""
    img = np.asarray(img)
    if img.dtype == np.uint8:
        return img.astype(np.float32) / np.float32(255.0)
    return img.astype(np.float32, copy=False)


def to_u8(img: np.ndarray) -> np.ndarray:
    """float image in [0, 1] -> uint8 with round-half-away clamping."""
    return (np.clip(img, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)


def mid_frame_index(frame_count: int) -> int:
    """Index of the representative frame: floor(frame_count / 2)."""
    if frame_count < 1:
        raise ValueError("empty clip")
    return frame_count // 2


def extract_mid_frame(clip) -> np.ndarray:
    """Return the mid frame of a clip as a float32 RGB image.

    Accepts anything with a ``frames`` sequence or a plain sequence of
    frames.
    """
    frames = getattr(clip, "frames", clip)
    n = len(frames)
    if n == 0:
        raise ValueError("empty clip")
    return to_float(frames[mid_frame_index(n)])


def to_grayscale(img: np.ndarray) -> np.ndarray:
    """RGB -> luma (BT.601): 0.299 R + 0.587 G + 0.114 B."""
    img = to_float(img)
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) image, got shape {img.shape}")
    return img @ LUMA_WEIGHTS


def resize(img: np.ndarray, new_w: int, new_h: int) -> np.ndarray:
    """Bilinear resize with edge clamping; works on gray or RGB images.

    Pixel centers are aligned: target center (i + 0.5) samples source
    coordinate (i + 0.5) * src/dst - 0.5, clamped to the source grid.
    """
    if new_w < 1 or new_h < 1:
        raise ValueError(f"target dimensions must be >= 1, got {new_w}x{new_h}")
    img = to_float(img)
    src_h, src_w = img.shape[:2]

    def axis_coords(dst: int, src: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        pos = (np.arange(dst, dtype=np.float64) + 0.5) * (src / dst) - 0.5
        pos = np.clip(pos, 0.0, src - 1.0)
        lo = np.floor(pos).astype(np.intp)
        hi = np.minimum(lo + 1, src - 1)
        frac = (pos - lo).astype(np.float32)
        return lo, hi, frac

    y0, y1, fy = axis_coords(new_h, src_h)
    x0, x1, fx = axis_coords(new_w, src_w)

    fy = fy[:, None] if img.ndim == 2 else fy[:, None, None]
    fx = fx[None, :] if img.ndim == 2 else fx[None, :, None]

    top = img[y0][:, x0] * (1.0 - fx) + img[y0][:, x1] * fx
    bot = img[y1][:, x0] * (1.0 - fx) + img[y1][:, x1] * fx
    return (top * (1.0 - fy) + bot * fy).astype(np.float32)


def resize_scale(img: np.ndarray, scale: float) -> np.ndarray:
    """Resize by a fractional scale; target dims are floor(dim * scale)."""
    h, w = img.shape[:2]
    return resize(img, int(w * scale), int(h * scale))


def crop(img: np.ndarray, top: int, bottom: int, left: int, right: int) -> np.ndarray:
    """Remove the given pixel margins; rejects over-cropping."""
    if min(top, bottom, left, right) < 0:
        raise ValueError("crop margins must be non-negative")
    h, w = img.shape[:2]
    if top + bottom >= h or left + right >= w:
        raise ValueError(f"crop ({top},{bottom},{left},{right}) exceeds image {w}x{h}")
    return img[top:h - bottom, left:w - right]


def center_crop(img: np.ndarray, size: int) -> np.ndarray:
    """Crop the centered size x size window (odd remainders go right/bottom)."""
    h, w = img.shape[:2]
    if size > h or size > w:
        raise ValueError(f"center crop {size} exceeds image {w}x{h}")
    top = (h - size) // 2
    left = (w - size) // 2
    return img[top:top + size, left:left + size]

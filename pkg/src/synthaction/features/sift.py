"""Scale-invariant keypoints and descriptors.

Difference-of-Gaussian extrema over a pyramid (base sigma 1.6, three
scales per octave, octaves until the short side drops under 16 pixels)
are refined to subpixel accuracy by a quadratic fit, filtered by a 0.03
contrast threshold and a principal-curvature ratio of 10, assigned one
orientation per 36-bin histogram peak at or above 80% of the maximum,
and described by a 4x4 spatial x 8 orientation grid with Gaussian
weighting, 0.2 clipping and renormalization to unit length.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

SIGMA = 1.6
INTERVALS = 3
ASSUMED_BLUR = 0.5
CONTRAST_THRESH = 0.03
EDGE_RATIO = 10.0
ORI_BINS = 36
ORI_SIGMA_FACTOR = 1.5
ORI_RADIUS_FACTOR = 3.0
PEAK_RATIO = 0.8
DESCR_WIDTH = 4
DESCR_ORI_BINS = 8
DESCR_SCALE_FACTOR = 3.0
DESCR_CLIP = 0.2
MIN_IMAGE_DIM = 32
MIN_OCTAVE_DIM = 16
BORDER = 5
MAX_REFINE_STEPS = 5


@dataclass
class SiftKeypoint:
    """Subpixel location in input coordinates, scale, orientation, descriptor."""

    x: float
    y: float
    scale: float
    orientation: float
    descriptor: np.ndarray
    response: float


def _gaussian_pyramid(img: np.ndarray) -> list[list[np.ndarray]]:
    n_images = INTERVALS + 3
    k = 2.0 ** (1.0 / INTERVALS)
    sigmas = [SIGMA * k ** i for i in range(n_images)]
    increments = [np.sqrt(max(sigmas[i] ** 2 - sigmas[i - 1] ** 2, 1e-8))
                  for i in range(1, n_images)]

    base = ndimage.gaussian_filter(
        img, np.sqrt(max(SIGMA ** 2 - ASSUMED_BLUR ** 2, 0.01)), mode="mirror")
    pyramid = []
    current = base
    while min(current.shape) >= MIN_OCTAVE_DIM:
        octave = [current]
        for inc in increments:
            octave.append(ndimage.gaussian_filter(octave[-1], inc, mode="mirror"))
        pyramid.append(octave)
        current = octave[INTERVALS][::2, ::2]
    return pyramid


def _dog_stack(octave: list[np.ndarray]) -> np.ndarray:
    return np.stack([octave[i + 1] - octave[i] for i in range(len(octave) - 1)])


def _find_candidates(dog: np.ndarray) -> np.ndarray:
    """Integer (s, y, x) extrema of 3x3x3 neighbourhoods, interior only."""
    maxf = ndimage.maximum_filter(dog, size=3, mode="constant", cval=-np.inf)
    minf = ndimage.minimum_filter(dog, size=3, mode="constant", cval=np.inf)
    strong = np.abs(dog) > 0.5 * CONTRAST_THRESH
    mask = ((dog == maxf) | (dog == minf)) & strong
    mask[0] = mask[-1] = False
    mask[:, :BORDER + 1, :] = mask[:, -(BORDER + 1):, :] = False
    mask[:, :, :BORDER + 1] = mask[:, :, -(BORDER + 1):] = False
    return np.argwhere(mask)


def _refine(dog: np.ndarray, s: int, y: int, x: int):
    """Quadratic subpixel fit; returns (s, y, x, offsets, value) or None."""
    n_s, h, w = dog.shape
    for _ in range(MAX_REFINE_STEPS):
        d = dog
        g = np.array([
            (d[s, y, x + 1] - d[s, y, x - 1]) / 2.0,
            (d[s, y + 1, x] - d[s, y - 1, x]) / 2.0,
            (d[s + 1, y, x] - d[s - 1, y, x]) / 2.0,
        ])
        dxx = d[s, y, x + 1] - 2 * d[s, y, x] + d[s, y, x - 1]
        dyy = d[s, y + 1, x] - 2 * d[s, y, x] + d[s, y - 1, x]
        dss = d[s + 1, y, x] - 2 * d[s, y, x] + d[s - 1, y, x]
        dxy = (d[s, y + 1, x + 1] - d[s, y + 1, x - 1]
               - d[s, y - 1, x + 1] + d[s, y - 1, x - 1]) / 4.0
        dxs = (d[s + 1, y, x + 1] - d[s + 1, y, x - 1]
               - d[s - 1, y, x + 1] + d[s - 1, y, x - 1]) / 4.0
        dys = (d[s + 1, y + 1, x] - d[s + 1, y - 1, x]
               - d[s - 1, y + 1, x] + d[s - 1, y - 1, x]) / 4.0
        hess = np.array([[dxx, dxy, dxs], [dxy, dyy, dys], [dxs, dys, dss]])
        try:
            offset = -np.linalg.solve(hess, g)
        except np.linalg.LinAlgError:
            return None
        if np.all(np.abs(offset) < 0.5):
            value = d[s, y, x] + 0.5 * g @ offset
            if abs(value) < CONTRAST_THRESH:
                return None
            tr = dxx + dyy
            det = dxx * dyy - dxy * dxy
            if det <= 0 or tr * tr / det >= (EDGE_RATIO + 1) ** 2 / EDGE_RATIO:
                return None
            return s, y, x, offset, value
        x += int(round(offset[0]))
        y += int(round(offset[1]))
        s += int(round(offset[2]))
        if not (1 <= s <= n_s - 2 and BORDER < y < h - BORDER - 1
                and BORDER < x < w - BORDER - 1):
            return None
    return None


def _gradients(img: np.ndarray):
    dy, dx = np.gradient(img)
    mag = np.hypot(dx, dy)
    ang = np.degrees(np.arctan2(dy, dx)) % 360.0
    return mag, ang


def _orientations(mag, ang, y, x, sigma_oct) -> list[float]:
    h, w = mag.shape
    sigma_ori = ORI_SIGMA_FACTOR * sigma_oct
    radius = int(round(ORI_RADIUS_FACTOR * sigma_ori))
    y0, y1 = max(1, y - radius), min(h - 1, y + radius + 1)
    x0, x1 = max(1, x - radius), min(w - 1, x + radius + 1)
    if y0 >= y1 or x0 >= x1:
        return []
    yy, xx = np.mgrid[y0:y1, x0:x1]
    weight = np.exp(-((yy - y) ** 2 + (xx - x) ** 2) / (2.0 * sigma_ori ** 2))
    bins = np.round(ang[y0:y1, x0:x1] * ORI_BINS / 360.0).astype(np.int64) % ORI_BINS
    hist = np.bincount(bins.ravel(), weights=(weight * mag[y0:y1, x0:x1]).ravel(),
                       minlength=ORI_BINS)
    kernel = np.array([1.0, 4.0, 6.0, 4.0, 1.0]) / 16.0
    for _ in range(2):
        hist = sum(np.roll(hist, shift) * kernel[shift + 2] for shift in range(-2, 3))
    peak = hist.max()
    if peak <= 0:
        return []
    out = []
    left = np.roll(hist, 1)
    right = np.roll(hist, -1)
    for i in np.nonzero((hist > left) & (hist > right) & (hist >= PEAK_RATIO * peak))[0]:
        denom = left[i] - 2.0 * hist[i] + right[i]
        interp = i + (0.5 * (left[i] - right[i]) / denom if denom != 0 else 0.0)
        out.append((interp % ORI_BINS) * 360.0 / ORI_BINS)
    return out


def _descriptor(mag, ang, y, x, sigma_oct, theta_deg) -> np.ndarray | None:
    h, w = mag.shape
    n_sp = DESCR_WIDTH
    hist_width = DESCR_SCALE_FACTOR * sigma_oct
    radius = int(round(hist_width * np.sqrt(2) * (n_sp + 1) * 0.5))
    radius = min(radius, int(np.sqrt(h * h + w * w)))
    y0, y1 = max(0, y - radius), min(h, y + radius + 1)
    x0, x1 = max(0, x - radius), min(w, x + radius + 1)
    if y0 >= y1 or x0 >= x1:
        return None
    yy, xx = np.mgrid[y0:y1, x0:x1]
    dyp = (yy - y).astype(np.float64).ravel()
    dxp = (xx - x).astype(np.float64).ravel()
    theta = np.deg2rad(theta_deg)
    c, s = np.cos(theta), np.sin(theta)
    # rotate into the keypoint frame
    xr = (c * dxp + s * dyp) / hist_width
    yr = (-s * dxp + c * dyp) / hist_width
    rbin = yr + 0.5 * n_sp - 0.5
    cbin = xr + 0.5 * n_sp - 0.5
    inside = (rbin > -1) & (rbin < n_sp) & (cbin > -1) & (cbin < n_sp)
    if not inside.any():
        return None
    rbin, cbin = rbin[inside], cbin[inside]
    m = mag[y0:y1, x0:x1].ravel()[inside]
    a = (ang[y0:y1, x0:x1].ravel()[inside] - theta_deg) % 360.0
    obin = a * DESCR_ORI_BINS / 360.0
    weight = np.exp(-(xr[inside] ** 2 + yr[inside] ** 2) / (0.5 * n_sp ** 2)) * m

    hist = np.zeros((n_sp + 2, n_sp + 2, DESCR_ORI_BINS))
    r0 = np.floor(rbin).astype(np.int64)
    c0 = np.floor(cbin).astype(np.int64)
    o0 = np.floor(obin).astype(np.int64)
    fr, fc, fo = rbin - r0, cbin - c0, obin - o0
    for dr in (0, 1):
        wr = weight * (fr if dr else 1 - fr)
        for dc in (0, 1):
            wc = wr * (fc if dc else 1 - fc)
            for do in (0, 1):
                wo = wc * (fo if do else 1 - fo)
                np.add.at(hist, (r0 + dr + 1, c0 + dc + 1, (o0 + do) % DESCR_ORI_BINS), wo)
    vec = hist[1:-1, 1:-1, :].ravel()
    norm = np.linalg.norm(vec)
    if norm < 1e-10:
        return None
    vec = np.minimum(vec / norm, DESCR_CLIP)
    vec = vec / np.linalg.norm(vec)
    return vec.astype(np.float64)


def sift(img: np.ndarray) -> list[SiftKeypoint]:
    """Detect and describe keypoints of a grayscale image in [0, 1]."""
    img = np.asarray(img, dtype=np.float64)
    if img.ndim != 2:
        raise ValueError("expected a grayscale image")
    if min(img.shape) < MIN_IMAGE_DIM:
        raise ValueError(f"image too small: short side must be >= {MIN_IMAGE_DIM}")

    pyramid = _gaussian_pyramid(img)
    keypoints: list[SiftKeypoint] = []
    for octave_idx, octave in enumerate(pyramid):
        dog = _dog_stack(octave)
        grads: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        for s, y, x in sorted(map(tuple, _find_candidates(dog))):
            refined = _refine(dog, int(s), int(y), int(x))
            if refined is None:
                continue
            rs, ry, rx, offset, value = refined
            layer = int(np.clip(round(rs + offset[2]), 0, len(octave) - 1))
            if layer not in grads:
                grads[layer] = _gradients(octave[layer])
            mag, ang = grads[layer]
            sigma_oct = SIGMA * 2.0 ** ((rs + offset[2]) / INTERVALS)
            scale_mult = 2.0 ** octave_idx
            for theta in _orientations(mag, ang, ry, rx, sigma_oct):
                desc = _descriptor(mag, ang, ry, rx, sigma_oct, theta)
                if desc is None:
                    continue
                keypoints.append(SiftKeypoint(
                    x=(rx + offset[0]) * scale_mult,
                    y=(ry + offset[1]) * scale_mult,
                    scale=sigma_oct * scale_mult,
                    orientation=theta,
                    descriptor=desc,
                    response=abs(value),
                ))
    keypoints.sort(key=lambda kp: (kp.y, kp.x, kp.scale, kp.orientation))
    return keypoints


def descriptor_matrix(keypoints: list[SiftKeypoint]) -> np.ndarray:
    """(n, 128) float32 matrix; empty (0, 128) when no keypoints."""
    if not keypoints:
        return np.zeros((0, DESCR_WIDTH * DESCR_WIDTH * DESCR_ORI_BINS), dtype=np.float32)
    return np.stack([kp.descriptor for kp in keypoints]).astype(np.float32)


def match_descriptors(d1: np.ndarray, d2: np.ndarray, ratio: float = 0.8):
    """Brute-force nearest neighbour with Lowe's ratio test.

    Returns (i, j) index pairs into d1/d2.
    """
    if len(d1) == 0 or len(d2) < 2:
        return []
    dist = ((d1[:, None, :] - d2[None, :, :]) ** 2).sum(axis=2)
    order = np.argsort(dist, axis=1)
    best, second = order[:, 0], order[:, 1]
    pairs = []
    for i in range(len(d1)):
        if dist[i, best[i]] < ratio ** 2 * dist[i, second[i]]:
            pairs.append((i, int(best[i])))
    return pairs

import numpy as np
import pytest
from scipy import ndimage

from synthaction.features import match_descriptors, sift
from synthaction.features.sift import descriptor_matrix


def gaussian_blob(size, cy, cx, sigma, amp=1.0):
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64)
    return amp * np.exp(-((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * sigma ** 2))


@pytest.fixture(scope="module")
def textured_image():
    """Structured test card: blobs, bars and a gradient patch."""
    img = np.zeros((128, 128))
    img += gaussian_blob(128, 32, 36, 3.0, 0.9)
    img += gaussian_blob(128, 90, 70, 5.0, 0.8)
    img[60:66, 20:52] = 0.7
    img[20:52, 96:102] = 0.6
    img[96:120, 18:42] += np.linspace(0, 0.8, 24)[None, :]
    img += gaussian_blob(128, 70, 108, 2.0, 0.5)
    return np.clip(img, 0, 1)


def test_constant_image_no_keypoints():
    assert sift(np.full((64, 64), 0.5)) == []


def test_too_small_image_rejected():
    with pytest.raises(ValueError):
        sift(np.zeros((31, 64)))


def test_blob_detected_near_center():
    img = gaussian_blob(64, 31.0, 33.0, sigma=4.0)
    kps = sift(img)
    assert kps
    near = [kp for kp in kps if np.hypot(kp.x - 33.0, kp.y - 31.0) <= 2.0]
    assert near


def test_blob_scale_grows_with_blob_size():
    small = gaussian_blob(96, 48.0, 48.0, sigma=4.0)
    large = gaussian_blob(96, 48.0, 48.0, sigma=8.0)

    def strongest(img):
        kps = sift(img)
        assert kps
        return max(kps, key=lambda kp: kp.response)

    assert strongest(large).scale > strongest(small).scale


def test_descriptors_unit_norm(textured_image):
    kps = sift(textured_image)
    assert len(kps) >= 5
    for kp in kps:
        assert kp.descriptor.shape == (128,)
        assert np.linalg.norm(kp.descriptor) == pytest.approx(1.0, abs=1e-6)
        assert kp.scale > 0


def test_deterministic(textured_image):
    a, b = sift(textured_image), sift(textured_image.copy())
    assert len(a) == len(b)
    for ka, kb in zip(a, b):
        assert (ka.x, ka.y, ka.scale, ka.orientation) == (kb.x, kb.y, kb.scale, kb.orientation)
        assert np.array_equal(ka.descriptor, kb.descriptor)


def test_rotation_90_matching(textured_image):
    img = textured_image
    rot = np.rot90(img).copy()
    kp1, kp2 = sift(img), sift(rot)
    d1, d2 = descriptor_matrix(kp1), descriptor_matrix(kp2)
    pairs = match_descriptors(d1, d2, ratio=0.8)
    assert len(pairs) >= 0.5 * min(len(kp1), len(kp2))

    # geometric consistency: rot90(ccw) maps (x, y) -> (y, W-1-x)
    w = img.shape[1]
    good = sum(1 for i, j in pairs
               if np.hypot(kp2[j].x - kp1[i].y, kp2[j].y - (w - 1 - kp1[i].x)) <= 3.0)
    assert good >= 0.8 * len(pairs)


def test_match_descriptors_empty_cases():
    assert match_descriptors(np.zeros((0, 128)), np.zeros((5, 128))) == []
    assert match_descriptors(np.zeros((3, 128)), np.zeros((1, 128))) == []

import numpy as np
import pytest
from scipy import ndimage

from synthaction.features import skeletonize


def thinning_oracle(binary):
    """Literal pixel-by-pixel reimplementation of the two deletion passes."""
    img = binary.astype(np.int8)

    def neighbours(arr, r, c):
        return [arr[r - 1, c], arr[r - 1, c + 1], arr[r, c + 1], arr[r + 1, c + 1],
                arr[r + 1, c], arr[r + 1, c - 1], arr[r, c - 1], arr[r - 1, c - 1]]

    def one_pass(arr, first):
        padded = np.pad(arr, 1)
        to_delete = []
        for r in range(1, padded.shape[0] - 1):
            for c in range(1, padded.shape[1] - 1):
                if not padded[r, c]:
                    continue
                p = neighbours(padded, r, c)
                b = sum(p)
                ring = p + [p[0]]
                a = sum(1 for i in range(8) if ring[i] == 0 and ring[i + 1] == 1)
                p2, p4, p6, p8 = p[0], p[2], p[4], p[6]
                if first:
                    cond = (p2 * p4 * p6 == 0) and (p4 * p6 * p8 == 0)
                else:
                    cond = (p2 * p4 * p8 == 0) and (p2 * p6 * p8 == 0)
                if 2 <= b <= 6 and a == 1 and cond:
                    to_delete.append((r - 1, c - 1))
        out = arr.copy()
        for r, c in to_delete:
            out[r, c] = 0
        return out

    while True:
        after = one_pass(one_pass(img, True), False)
        if np.array_equal(after, img):
            return after.astype(bool)
        img = after


def test_all_background_stays_background():
    img = np.zeros((12, 12), dtype=np.float32)
    assert not skeletonize(img).any()


def test_solid_bar_thins_to_horizontal_line():
    img = np.zeros((7, 11), dtype=np.float32)
    img[2:5, 2:9] = 1.0  # 3x7 solid bar
    out = skeletonize(img).astype(bool)
    expected = thinning_oracle(img > 0.5)
    assert np.array_equal(out, expected)
    rows = np.nonzero(out.any(axis=1))[0]
    assert len(rows) == 1  # 1 pixel thick
    assert rows[0] == 3    # the bar's middle row
    cols = np.nonzero(out[3])[0]
    assert np.all(np.diff(cols) == 1)  # contiguous line


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_matches_oracle_on_random_blobs(seed):
    gen = np.random.default_rng(seed)
    img = (ndimage.gaussian_filter(gen.random((28, 28)), 2.2) > 0.5).astype(np.float32)
    assert np.array_equal(skeletonize(img).astype(bool), thinning_oracle(img > 0.5))


def test_output_subset_of_input(rng):
    img = (ndimage.gaussian_filter(rng.random((40, 40)), 2.0) > 0.5).astype(np.float32)
    out = skeletonize(img)
    assert not np.any(out.astype(bool) & ~(img > 0.5))


def test_idempotent_fixed_point(rng):
    img = (ndimage.gaussian_filter(rng.random((40, 40)), 2.0) > 0.5).astype(np.float32)
    once = skeletonize(img)
    twice = skeletonize(once)
    assert np.array_equal(once, twice)


def test_threshold_binarization():
    img = np.full((8, 8), 0.4, dtype=np.float32)
    assert not skeletonize(img, threshold=0.5).any()
    assert skeletonize(img, threshold=0.3).any()


def test_connected_component_count_preserved(rng):
    img = np.zeros((40, 40), dtype=np.float32)
    img[4:12, 5:15] = 1.0
    img[20:30, 22:30] = 1.0
    img[30:36, 4:9] = 1.0
    out = skeletonize(img)
    _, n_in = ndimage.label(img > 0.5, structure=np.ones((3, 3)))
    _, n_out = ndimage.label(out > 0.5, structure=np.ones((3, 3)))
    assert n_in == n_out == 3

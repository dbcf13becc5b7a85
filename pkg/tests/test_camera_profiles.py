import numpy as np
import pytest
from scipy import stats

from synthaction import rng as rngmod
from synthaction.scene.profiles import (
    CameraConfig,
    DifficultyProfile,
    builtin_profiles,
    get_profile,
    load_profiles,
    sample_camera,
    write_profiles,
)


def test_builtin_profiles_exact_bounds():
    p = builtin_profiles()
    easy, medium, hard = p["easy"], p["medium"], p["hard"]

    assert easy.zoom_range == (80.0, 110.0)
    assert easy.x_offset_range == (-1.5, 1.5)
    assert easy.y_offset_range == (-1.5, 1.5)
    assert easy.x_angle_range == (-5.0, 10.0)
    assert easy.y_angle_range == (-30.0, 30.0)
    assert not easy.static_background and not easy.dynamic_background

    assert hard.zoom_range == (70.0, 120.0)
    assert hard.x_offset_range == (-3.0, 3.0)
    assert hard.y_offset_range == (-2.0, 2.0)
    assert hard.x_angle_range == (-5.0, 20.0)
    assert hard.y_angle_range == (-45.0, 45.0)
    assert hard.static_background and hard.dynamic_background


def test_easy_medium_identical_except_static_background():
    p = builtin_profiles()
    easy, medium = p["easy"], p["medium"]
    for field in ("zoom_range", "x_offset_range", "y_offset_range",
                  "x_angle_range", "y_angle_range", "dynamic_background"):
        assert getattr(easy, field) == getattr(medium, field)
    assert not easy.static_background
    assert medium.static_background


def test_sample_within_easy_bounds():
    easy = get_profile("easy")
    gen = rngmod.substream(3, 1)
    for _ in range(200):
        cam = sample_camera(easy, gen)
        assert 80.0 <= cam.zoom_pct <= 110.0
        assert -30.0 <= cam.angle_y <= 30.0
        assert easy.contains(cam)


def test_degenerate_profile_constant_camera():
    prof = DifficultyProfile("deg", (100.0, 100.0), (0.5, 0.5), (-0.25, -0.25),
                             (3.0, 3.0), (-7.0, -7.0), False, False)
    gen = rngmod.substream(11, 0)
    cams = {sample_camera(prof, gen) for _ in range(20)}
    assert cams == {CameraConfig(100.0, 0.5, -0.25, 3.0, -7.0)}


def test_hard_x_angle_uniformity_ks():
    hard = get_profile("hard")
    gen = rngmod.substream(42, 9)
    draws = np.array([sample_camera(hard, gen).angle_x for _ in range(10_000)])
    assert draws.min() >= -5.0 and draws.max() <= 20.0
    stat = stats.kstest(draws, stats.uniform(loc=-5.0, scale=25.0).cdf)
    assert stat.pvalue > 0.01


def test_sampling_deterministic_per_stream():
    hard = get_profile("hard")
    a = [sample_camera(hard, rngmod.substream(5, 2, i)) for i in range(10)]
    b = [sample_camera(hard, rngmod.substream(5, 2, i)) for i in range(10)]
    assert a == b


def test_profile_config_roundtrip(tmp_path):
    path = tmp_path / "profiles.cfg"
    write_profiles(path)
    loaded = load_profiles(path)
    assert loaded == builtin_profiles()
    text = path.read_text()
    assert "min_zoom" in text and "[hard]" in text


def test_unknown_level_rejected():
    with pytest.raises(KeyError):
        get_profile("nightmare")

"""Difficulty profiles and camera sampling.

A profile bounds the camera randomization (zoom percentage, x/y offset
in meters, x/y orbit angles in degrees) and toggles the static and
dynamic background layers.  The three built-in profiles are the
easy/medium/hard configurations; easy and medium differ only by the
static background flag.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, asdict

import numpy as np


@dataclass(frozen=True)
class CameraConfig:
    """One sampled camera: zoom percent, offsets in meters, orbit angles in degrees."""

    zoom_pct: float
    offset_x: float
    offset_y: float
    angle_x: float
    angle_y: float

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "CameraConfig":
        return cls(**{k: float(d[k]) for k in
                      ("zoom_pct", "offset_x", "offset_y", "angle_x", "angle_y")})


@dataclass(frozen=True)
class DifficultyProfile:
    """Closed sampling intervals plus background flags for one difficulty level."""

    name: str
    zoom_range: tuple[float, float]
    x_offset_range: tuple[float, float]
    y_offset_range: tuple[float, float]
    x_angle_range: tuple[float, float]
    y_angle_range: tuple[float, float]
    static_background: bool
    dynamic_background: bool

    def __post_init__(self):
        for rng in (self.zoom_range, self.x_offset_range, self.y_offset_range,
                    self.x_angle_range, self.y_angle_range):
            if rng[0] > rng[1]:
                raise ValueError(f"profile {self.name}: inverted interval {rng}")

    def contains(self, cam: CameraConfig) -> bool:
        """Camera admissibility check used by the manifest re-validation pass."""
        checks = (
            (cam.zoom_pct, self.zoom_range),
            (cam.offset_x, self.x_offset_range),
            (cam.offset_y, self.y_offset_range),
            (cam.angle_x, self.x_angle_range),
            (cam.angle_y, self.y_angle_range),
        )
        return all(lo <= v <= hi for v, (lo, hi) in checks)

    def to_dict(self) -> dict:
        d = asdict(self)
        for k in ("zoom_range", "x_offset_range", "y_offset_range",
                  "x_angle_range", "y_angle_range"):
            d[k] = list(d[k])
        return d


def builtin_profiles() -> dict[str, DifficultyProfile]:
    """The three shipped difficulty levels."""
    easy = DifficultyProfile(
        name="easy",
        zoom_range=(80.0, 110.0),
        x_offset_range=(-1.5, 1.5),
        y_offset_range=(-1.5, 1.5),
        x_angle_range=(-5.0, 10.0),
        y_angle_range=(-30.0, 30.0),
        static_background=False,
        dynamic_background=False,
    )
    medium = DifficultyProfile(
        name="medium",
        zoom_range=easy.zoom_range,
        x_offset_range=easy.x_offset_range,
        y_offset_range=easy.y_offset_range,
        x_angle_range=easy.x_angle_range,
        y_angle_range=easy.y_angle_range,
        static_background=True,
        dynamic_background=False,
    )
    hard = DifficultyProfile(
        name="hard",
        zoom_range=(70.0, 120.0),
        x_offset_range=(-3.0, 3.0),
        y_offset_range=(-2.0, 2.0),
        x_angle_range=(-5.0, 20.0),
        y_angle_range=(-45.0, 45.0),
        static_background=True,
        dynamic_background=True,
    )
    return {"easy": easy, "medium": medium, "hard": hard}


def get_profile(name: str) -> DifficultyProfile:
    profiles = builtin_profiles()
    if name not in profiles:
        raise KeyError(f"unknown difficulty level {name!r}; expected one of {sorted(profiles)}")
    return profiles[name]


_CFG_KEYS = {
    "min_zoom": ("zoom_range", 0), "max_zoom": ("zoom_range", 1),
    "min_x_offset": ("x_offset_range", 0), "max_x_offset": ("x_offset_range", 1),
    "min_y_offset": ("y_offset_range", 0), "max_y_offset": ("y_offset_range", 1),
    "min_x_angle": ("x_angle_range", 0), "max_x_angle": ("x_angle_range", 1),
    "min_y_angle": ("y_angle_range", 0), "max_y_angle": ("y_angle_range", 1),
}


def write_profiles(path, profiles: dict[str, DifficultyProfile] | None = None) -> None:
    """Write profiles as a plain-text config file (one section per level)."""
    profiles = profiles or builtin_profiles()
    lines = []
    for name, p in profiles.items():
        lines.append(f"[{name}]")
        for key, (field, idx) in _CFG_KEYS.items():
            lines.append(f"{key} = {getattr(p, field)[idx]:g}")
        lines.append(f"static_background = {'on' if p.static_background else 'off'}")
        lines.append(f"dynamic_background = {'on' if p.dynamic_background else 'off'}")
        lines.append("")
    with open(path, "w") as f:
        f.write("\n".join(lines))


def load_profiles(path) -> dict[str, DifficultyProfile]:
    """Parse a profile config file written by :func:`write_profiles`."""
    cp = configparser.ConfigParser()
    with open(path) as f:
        cp.read_file(f)
    out = {}
    for name in cp.sections():
        sec = cp[name]
        ranges: dict[str, list[float]] = {
            "zoom_range": [0.0, 0.0], "x_offset_range": [0.0, 0.0],
            "y_offset_range": [0.0, 0.0], "x_angle_range": [0.0, 0.0],
            "y_angle_range": [0.0, 0.0],
        }
        for key, (field, idx) in _CFG_KEYS.items():
            ranges[field][idx] = float(sec[key])
        out[name] = DifficultyProfile(
            name=name,
            zoom_range=tuple(ranges["zoom_range"]),
            x_offset_range=tuple(ranges["x_offset_range"]),
            y_offset_range=tuple(ranges["y_offset_range"]),
            x_angle_range=tuple(ranges["x_angle_range"]),
            y_angle_range=tuple(ranges["y_angle_range"]),
            static_background=sec["static_background"].strip().lower() in ("on", "true", "1", "yes"),
            dynamic_background=sec["dynamic_background"].strip().lower() in ("on", "true", "1", "yes"),
        )
    return out


def sample_camera(profile: DifficultyProfile, rng: np.random.Generator) -> CameraConfig:
    """Draw one camera uniformly within the profile's intervals.

    Consumes exactly five uniforms in a fixed order, so profiles with
    identical intervals yield identical cameras from the same stream.
    """
    draw = lambda lo_hi: float(rng.uniform(lo_hi[0], lo_hi[1]))
    return CameraConfig(
        zoom_pct=draw(profile.zoom_range),
        offset_x=draw(profile.x_offset_range),
        offset_y=draw(profile.y_offset_range),
        angle_x=draw(profile.x_angle_range),
        angle_y=draw(profile.y_angle_range),
    )

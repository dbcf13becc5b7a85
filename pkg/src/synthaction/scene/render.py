"""Clip rendering: animation ramp, idle sway, backgrounds, cameras.

A clip animates the avatar from the rest stance into the target pose
with a quadratic ease-in that completes at floor(0.3 * frame_count),
well before the representative mid frame.  After completion a small
deterministic idle sway keeps the figure gently moving (frame-indexed
sinusoids, identical for every clip) so temporal filters that model
background from consecutive frames can tell the avatar from the
scenery.  Static scenery is fixed; dynamic distractors drift linearly
with trajectories drawn from the clip seed.
"""

from __future__ import annotations

import math

import numpy as np

from .. import rng as rngmod
from .avatar import (
    AvatarStyle,
    Material,
    PATTERN_SOLID,
    Primitive,
    avatar_primitives,
    forward_kinematics,
    primitive_centroid,
    primitives_min_y,
    translate_primitives,
)
from .poses import JOINT_NAMES, PoseSpec
from .profiles import CameraConfig, DifficultyProfile
from .raster import make_camera, orbit_position, render

ORBIT_RADIUS = 4.0
MIN_FRAME_COUNT = 6

# Static scenery: three boxes placed behind the avatar's working volume
# (z <= -1.2) so they can never occlude it from any in-profile camera.
_STATIC_BOXES = (
    ((-2.05, 0.0, -2.45), (-1.15, 0.90, -1.55), (0.72, 0.40, 0.30)),
    ((1.25, 0.0, -2.80), (2.35, 0.60, -2.00), (0.30, 0.52, 0.60)),
    ((-0.15, 0.0, -3.35), (0.55, 1.50, -2.65), (0.62, 0.58, 0.35)),
)

_DISTRACTOR_COLORS = (
    (0.85, 0.25, 0.55), (0.25, 0.80, 0.75), (0.95, 0.60, 0.15), (0.50, 0.30, 0.80),
)

# Idle sway: (joint, axis, amplitude_deg, period_frames, phase).
_SWAY_TERMS = (
    ("spine", 0, 1.6, 16.0, 0.0),
    ("neck", 0, 1.1, 13.0, 0.7),
    ("l_shoulder", 2, 1.3, 11.0, 1.1),
    ("r_shoulder", 2, -1.3, 11.0, 1.1),
    ("l_elbow", 0, 1.0, 9.0, 2.0),
    ("r_elbow", 0, 1.0, 9.0, 2.6),
    ("root", 1, 1.4, 21.0, 0.4),
    ("l_hip", 0, 0.6, 17.0, 1.8),
    ("r_hip", 0, 0.6, 17.0, 2.4),
)
_SWAY_BOB = (0.006, 15.0, 0.9)  # root y bob: amplitude m, period, phase


def completion_frame(frame_count: int) -> int:
    """Frame index by which the target pose is fully reached."""
    return max(1, int(math.floor(0.3 * frame_count)))


def interp_parameter(frame_idx: int, frame_count: int) -> float:
    """Ease-in ramp value in [0, 1] for the given frame."""
    kc = completion_frame(frame_count)
    t = min(max(frame_idx / kc, 0.0), 1.0)
    return t * t


def _sway(frame_idx: int) -> tuple[dict[str, np.ndarray], float]:
    angles: dict[str, np.ndarray] = {}
    for joint, axis, amp, period, phase in _SWAY_TERMS:
        delta = angles.setdefault(joint, np.zeros(3))
        delta[axis] += amp * math.sin(2.0 * math.pi * frame_idx / period + phase)
    amp, period, phase = _SWAY_BOB
    bob = amp * math.sin(2.0 * math.pi * frame_idx / period + phase)
    return angles, bob


def pose_at_frame(pose: PoseSpec, frame_idx: int, frame_count: int):
    """Joint angles and root offset for one animation frame."""
    s = interp_parameter(frame_idx, frame_count)
    sway, bob = _sway(frame_idx)
    angles = {}
    for name in JOINT_NAMES:
        target = np.asarray(pose.joint_angles[name], dtype=np.float64)
        a = s * target
        if name in sway:
            a = a + sway[name]
        angles[name] = tuple(a)
    offset = s * np.asarray(pose.root_offset, dtype=np.float64) + np.array([0.0, bob, 0.0])
    return angles, offset


# Measured residual between the area-weighted centroid estimate and the
# rendered pixel centroid of the rest stance (self-occlusion bias).
_AIM_CALIB_Y = -0.0125

# Minimum clearance between the avatar and the ground plane.
GROUND_CLEARANCE = 0.01


def _ground_lift(prims) -> np.ndarray:
    """Vertical shift keeping every primitive above the ground plane."""
    lift = max(0.0, GROUND_CLEARANCE - primitives_min_y(prims))
    return np.array([0.0, lift, 0.0])


def _lifted_primitives(angles, offset, style: AvatarStyle):
    joints = forward_kinematics(angles, offset)
    prims = avatar_primitives(joints, style)
    return translate_primitives(prims, _ground_lift(prims))


_TARGET_CACHE: dict = {}


def camera_target(pose: PoseSpec, style: AvatarStyle) -> np.ndarray:
    """Aim point: silhouette centroid of the completed, ground-lifted pose."""
    key = (pose.action, pose.variant_id, pose.action_id, style.index)
    hit = _TARGET_CACHE.get(key)
    if hit is None:
        prims = _lifted_primitives(pose.joint_angles, pose.root_offset, style)
        c = primitive_centroid(prims)
        hit = np.array([c[0], c[1] + _AIM_CALIB_Y, c[2]])
        _TARGET_CACHE[key] = hit
    return hit


def _distractors(seed: int, frame_idx: int) -> list[Primitive]:
    """Four drifting shapes behind the avatar; trajectories from the clip seed."""
    gen = rngmod.substream(seed, 11)
    prims = []
    for i, col in enumerate(_DISTRACTOR_COLORS):
        base = np.array([
            gen.uniform(-2.4, 2.4),
            gen.uniform(0.3, 1.9),
            gen.uniform(-3.0, -1.5),
        ])
        vel = np.array([
            gen.uniform(-0.055, 0.055),
            gen.uniform(-0.03, 0.03),
            gen.uniform(-0.008, 0.008),
        ])
        size = gen.uniform(0.18, 0.34)
        pos = base + vel * frame_idx
        mat = Material(PATTERN_SOLID, col, col)
        if i % 2 == 0:
            prims.append(Primitive("sphere", pos, pos, size, mat))
        else:
            half = np.array([size, size, size])
            prims.append(Primitive("box", pos - half, pos + half, 0.0, mat))
    return prims


def scene_camera(camera: CameraConfig, target, width: int, height: int):
    pos = orbit_position(target, camera.angle_x, camera.angle_y, ORBIT_RADIUS)
    return make_camera(pos, target, camera.zoom_pct, camera.offset_x, camera.offset_y,
                       width, height, orbit_radius=ORBIT_RADIUS)


def render_frame(pose: PoseSpec, style: AvatarStyle, camera: CameraConfig,
                 profile: DifficultyProfile, seed: int, frame_idx: int,
                 frame_count: int, width: int, height: int) -> np.ndarray:
    """Render one frame to uint8 (H, W, 3)."""
    if frame_count < MIN_FRAME_COUNT:
        raise ValueError(f"frame_count must be >= {MIN_FRAME_COUNT}, got {frame_count}")
    if width != height:
        raise ValueError(f"frames must be square, got {width}x{height}")
    angles, offset = pose_at_frame(pose, frame_idx, frame_count)
    prims = _lifted_primitives(angles, offset, style)
    if profile.static_background:
        for lo, hi, col in _STATIC_BOXES:
            prims.append(Primitive("box", np.array(lo), np.array(hi), 0.0,
                                   Material(PATTERN_SOLID, col, col)))
    if profile.dynamic_background:
        prims.extend(_distractors(seed, frame_idx))
    cam = scene_camera(camera, camera_target(pose, style), width, height)
    return render(prims, cam, profile.static_background)


def render_clip_frames(pose, style, camera, profile, seed, frame_count, width, height,
                       frame_indices=None) -> list[np.ndarray]:
    """Render all (or selected) frames of one clip."""
    indices = range(frame_count) if frame_indices is None else frame_indices
    return [render_frame(pose, style, camera, profile, seed, k, frame_count, width, height)
            for k in indices]


def render_clip(request) -> "VideoClip":  # noqa: F821  (dataset imports us)
    """Render a full clip from a ClipRequest."""
    from .dataset import VideoClip
    frames = render_clip_frames(
        request.pose, request.style, request.camera, request.profile,
        request.seed, request.frame_count, request.width, request.height)
    return VideoClip(frames=frames, request=request, clip_id=request.clip_id)

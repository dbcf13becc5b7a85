"""Deterministic procedural renderer for labeled action-pose clips."""

from .profiles import (
    CameraConfig,
    DifficultyProfile,
    builtin_profiles,
    get_profile,
    load_profiles,
    sample_camera,
    write_profiles,
)
from .poses import PoseSpec, ACTIONS, JOINT_NAMES, build_pose_library, pose_distance
from .avatar import AvatarStyle, N_STYLE_COMBINATIONS
from .render import render_clip, render_frame
from .dataset import (
    ClipRequest,
    VideoClip,
    DatasetManifest,
    clip_output_dir,
    generate_dataset,
    load_clip_window,
    load_manifest,
    plan_dataset,
)

__all__ = [
    "ACTIONS",
    "AvatarStyle",
    "CameraConfig",
    "ClipRequest",
    "DatasetManifest",
    "DifficultyProfile",
    "JOINT_NAMES",
    "N_STYLE_COMBINATIONS",
    "PoseSpec",
    "VideoClip",
    "builtin_profiles",
    "clip_output_dir",
    "generate_dataset",
    "get_profile",
    "load_clip_window",
    "load_manifest",
    "load_profiles",
    "plan_dataset",
    "pose_distance",
    "render_clip",
    "render_frame",
    "sample_camera",
    "write_profiles",
]

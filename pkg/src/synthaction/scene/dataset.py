"""Dataset generation: request planning, rendering, manifest persistence.

Every clip request is a pure function of (profile, counts, master seed):
styles are drawn per label from a label-keyed substream, each clip gets
its own seed from a clip-indexed substream, and the camera is drawn
from that clip seed.  Rendering is therefore safe to parallelize; the
manifest is always written sorted by clip_id so output does not depend
on the schedule.

Frames are written as binary PPM under
``<root>/<level>/<action>_<variant>/<clip_id>/frame_%03d.ppm``.  The
``frames`` policy picks which indices are persisted: ``all``, ``mid``
(just the representative frame) or ``window`` (default: the mid frame
plus the five before it, exactly what the feature pipelines read).
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .. import __version__, rng as rngmod
from ..imgproc import mid_frame_index
from ..ppm import read_ppm, write_ppm
from .avatar import AvatarStyle, N_STYLE_COMBINATIONS
from .poses import PoseSpec, build_pose_library
from .profiles import CameraConfig, DifficultyProfile, get_profile, sample_camera
from .render import MIN_FRAME_COUNT, render_clip_frames

DEFAULT_FRAME_COUNT = 30
DEFAULT_SIZE = 351
FRAME_POLICIES = ("all", "window", "mid")


@dataclass(frozen=True)
class ClipRequest:
    """Everything needed to re-render one clip."""

    pose: PoseSpec
    style: AvatarStyle
    camera: CameraConfig
    profile: DifficultyProfile
    seed: int
    clip_id: str
    frame_count: int = DEFAULT_FRAME_COUNT
    width: int = DEFAULT_SIZE
    height: int = DEFAULT_SIZE

    def __post_init__(self):
        if self.frame_count < MIN_FRAME_COUNT:
            raise ValueError(f"frame_count must be >= {MIN_FRAME_COUNT}")
        if self.width != self.height:
            raise ValueError("frames must be square")

    @property
    def label(self) -> str:
        return self.pose.label


@dataclass
class VideoClip:
    """Ordered uint8 RGB frames plus the request that produced them."""

    frames: list
    request: ClipRequest
    clip_id: str

    def __post_init__(self):
        if len(self.frames) != self.request.frame_count:
            raise ValueError("frame count mismatch")
        shapes = {f.shape for f in self.frames}
        if len(shapes) > 1:
            raise ValueError("inconsistent frame dimensions")


def window_indices(frame_count: int) -> list[int]:
    """Mid frame and the five preceding it (temporal-filter input)."""
    mid = mid_frame_index(frame_count)
    return list(range(mid - 5, mid + 1))


def clip_output_dir(root, level: str, clip_id: str) -> Path:
    # clip_id is "<action>_<variant>_sXX_cYY"; the group dir drops the slots
    group = clip_id.split("_s", 1)[0]
    return Path(root) / level / group / clip_id


@dataclass
class DatasetManifest:
    """Index of all clips of one generated level."""

    meta: dict
    rows: list[dict] = field(default_factory=list)

    @property
    def level(self) -> str:
        return self.meta["level"]

    def labels(self) -> list[str]:
        return [r["label"] for r in self.rows]

    def request_for(self, row: dict, library: list[PoseSpec] | None = None) -> ClipRequest:
        library = library or build_pose_library()
        pose = next(p for p in library
                    if p.action == row["action"] and p.variant_id == row["variant_id"])
        return ClipRequest(
            pose=pose,
            style=AvatarStyle.from_dict(row["style"]),
            camera=CameraConfig.from_dict(row["camera"]),
            profile=get_profile(self.meta["level"]),
            seed=int(row["seed"]),
            clip_id=row["clip_id"],
            frame_count=self.meta["frame_count"],
            width=self.meta["width"],
            height=self.meta["height"],
        )

    def save(self, root) -> None:
        level_dir = Path(root) / self.level
        level_dir.mkdir(parents=True, exist_ok=True)
        with open(level_dir / "manifest.jsonl", "w") as f:
            for row in sorted(self.rows, key=lambda r: r["clip_id"]):
                f.write(json.dumps(row, sort_keys=True) + "\n")
        with open(level_dir / "manifest.meta.json", "w") as f:
            json.dump(self.meta, f, indent=2, sort_keys=True)


def load_manifest(root, level: str) -> DatasetManifest:
    level_dir = Path(root) / level
    meta_path = level_dir / "manifest.meta.json"
    jsonl_path = level_dir / "manifest.jsonl"
    if not jsonl_path.exists():
        raise FileNotFoundError(f"no manifest for level {level!r} under {root}")
    with open(meta_path) as f:
        meta = json.load(f)
    rows = []
    with open(jsonl_path) as f:
        for line in f:
            line = line.strip()
            if line:
                rows.append(json.loads(line))
    return DatasetManifest(meta=meta, rows=rows)


def _clip_seed(master_seed: int, clip_index: int) -> int:
    gen = rngmod.substream(master_seed, rngmod.STREAM_CLIP, clip_index)
    return int(gen.integers(0, 2 ** 63))


def _sample_styles(master_seed: int, label_index: int, count: int) -> list[AvatarStyle]:
    """Per-label style combinations, without replacement while they last."""
    gen = rngmod.substream(master_seed, rngmod.STREAM_STYLES, label_index)
    if count <= N_STYLE_COMBINATIONS:
        picks = gen.permutation(N_STYLE_COMBINATIONS)[:count]
    else:
        picks = gen.integers(0, N_STYLE_COMBINATIONS, size=count)
    return [AvatarStyle.from_index(int(i)) for i in picks]


def plan_dataset(profile: DifficultyProfile, styles_per_label: int,
                 cameras_per_scene: int, seed: int,
                 frame_count: int = DEFAULT_FRAME_COUNT,
                 width: int = DEFAULT_SIZE, height: int = DEFAULT_SIZE,
                 frames_policy: str = "window") -> tuple[DatasetManifest, list[ClipRequest]]:
    """Build the manifest and all clip requests without rendering anything."""
    if styles_per_label < 1 or cameras_per_scene < 1:
        raise ValueError("styles_per_label and cameras_per_scene must be >= 1")
    if frames_policy not in FRAME_POLICIES:
        raise ValueError(f"frames policy must be one of {FRAME_POLICIES}")
    library = build_pose_library()
    stored = {
        "all": list(range(frame_count)),
        "window": window_indices(frame_count),
        "mid": [mid_frame_index(frame_count)],
    }[frames_policy]

    rows, requests = [], []
    clip_index = 0
    for label_index, pose in enumerate(library):
        styles = _sample_styles(seed, label_index, styles_per_label)
        for style_slot, style in enumerate(styles):
            for camera_slot in range(cameras_per_scene):
                cseed = _clip_seed(seed, clip_index)
                camera = sample_camera(profile, rngmod.substream(cseed, 1))
                clip_id = f"{pose.action}_{pose.variant_id}_s{style_slot:02d}_c{camera_slot:02d}"
                req = ClipRequest(pose=pose, style=style, camera=camera, profile=profile,
                                  seed=cseed, clip_id=clip_id, frame_count=frame_count,
                                  width=width, height=height)
                requests.append(req)
                rows.append({
                    "clip_id": clip_id,
                    "label": pose.label,
                    "action": pose.action,
                    "action_id": pose.action_id,
                    "variant_id": pose.variant_id,
                    "label_index": label_index,
                    "style": style.to_dict(),
                    "camera": camera.to_dict(),
                    "seed": cseed,
                    "stored_frames": stored,
                })
                clip_index += 1

    meta = {
        "tool_version": __version__,
        "level": profile.name,
        "profile": profile.to_dict(),
        "seed": int(seed),
        "styles_per_label": styles_per_label,
        "cameras_per_scene": cameras_per_scene,
        "frame_count": frame_count,
        "width": width,
        "height": height,
        "frames_policy": frames_policy,
        "clip_count": len(rows),
        "clips_per_label": styles_per_label * cameras_per_scene,
    }
    return DatasetManifest(meta=meta, rows=rows), requests


def _render_one(args) -> str:
    """Worker: render the stored frames of one clip and write the PPMs."""
    req, stored, root = args
    try:
        frames = render_clip_frames(req.pose, req.style, req.camera, req.profile,
                                    req.seed, req.frame_count, req.width, req.height,
                                    frame_indices=stored)
        out_dir = clip_output_dir(root, req.profile.name, req.clip_id)
        out_dir.mkdir(parents=True, exist_ok=True)
        for idx, frame in zip(stored, frames):
            write_ppm(out_dir / f"frame_{idx:03d}.ppm", frame)
    except Exception as exc:  # surface clip identity with the failure
        raise RuntimeError(f"rendering failed for clip {req.clip_id}: {exc}") from exc
    return req.clip_id


def generate_dataset(profile: DifficultyProfile, styles_per_label: int,
                     cameras_per_scene: int, seed: int, out_root,
                     frame_count: int = DEFAULT_FRAME_COUNT,
                     width: int = DEFAULT_SIZE, height: int = DEFAULT_SIZE,
                     frames_policy: str = "window", jobs: int = 1,
                     overwrite: bool = False, dry_run: bool = False,
                     progress=None) -> DatasetManifest:
    """Render and persist one difficulty level; returns its manifest."""
    manifest, requests = plan_dataset(profile, styles_per_label, cameras_per_scene,
                                      seed, frame_count, width, height, frames_policy)
    if dry_run:
        return manifest

    level_dir = Path(out_root) / profile.name
    if (level_dir / "manifest.jsonl").exists() and not overwrite:
        raise FileExistsError(f"dataset already exists at {level_dir}; pass overwrite")

    stored = manifest.rows[0]["stored_frames"] if manifest.rows else []
    work = [(req, stored, out_root) for req in requests]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, _ in enumerate(pool.map(_render_one, work, chunksize=16)):
                if progress and (i + 1) % 100 == 0:
                    progress(i + 1, len(work))
    else:
        for i, item in enumerate(work):
            _render_one(item)
            if progress and (i + 1) % 100 == 0:
                progress(i + 1, len(work))

    manifest.save(out_root)
    return manifest


def load_clip_window(root, level: str, row: dict) -> list[np.ndarray]:
    """Load the stored mid-window frames of a clip (uint8 RGB, time order)."""
    out_dir = clip_output_dir(root, level, row["clip_id"])
    return [read_ppm(out_dir / f"frame_{idx:03d}.ppm") for idx in row["stored_frames"]]


def validate_manifest(manifest: DatasetManifest) -> None:
    """Re-validation pass: label balance and camera admissibility."""
    profile = get_profile(manifest.level)
    expected = manifest.meta["clips_per_label"]
    counts: dict[str, int] = {}
    for row in manifest.rows:
        counts[row["label"]] = counts.get(row["label"], 0) + 1
        cam = CameraConfig.from_dict(row["camera"])
        if not profile.contains(cam):
            raise ValueError(f"clip {row['clip_id']}: camera outside {profile.name} bounds")
    bad = {k: v for k, v in counts.items() if v != expected}
    if bad:
        raise ValueError(f"unbalanced labels (expected {expected} each): {bad}")
    if len(counts) != 40:
        raise ValueError(f"expected 40 labels, found {len(counts)}")

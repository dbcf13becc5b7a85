import hashlib
import json
from pathlib import Path

import numpy as np
import pytest

from synthaction.scene import (
    generate_dataset,
    get_profile,
    load_clip_window,
    load_manifest,
    plan_dataset,
)
from synthaction.scene.dataset import validate_manifest, window_indices


def dataset_digest(root, level):
    h = hashlib.sha256()
    for p in sorted(Path(root, level).rglob("*")):
        if p.is_file():
            h.update(p.name.encode())
            h.update(p.read_bytes())
    return h.hexdigest()


def test_paper_scale_counts_dry_run():
    manifest, requests = plan_dataset(get_profile("easy"), 25, 20, seed=7)
    assert manifest.meta["clip_count"] == 20_000
    assert len(requests) == 20_000
    labels = manifest.labels()
    per_label = {}
    per_action = {}
    for row in manifest.rows:
        per_label[row["label"]] = per_label.get(row["label"], 0) + 1
        per_action[row["action"]] = per_action.get(row["action"], 0) + 1
    assert set(per_label.values()) == {500}
    assert set(per_action.values()) == {2000}
    assert len(per_label) == 40


def test_minimal_dataset_one_clip_per_label(tmp_path):
    man = generate_dataset(get_profile("easy"), 1, 1, seed=7, out_root=tmp_path,
                           frame_count=6, width=64, height=64)
    assert len(man.rows) == 40
    labels = man.labels()
    assert len(set(labels)) == 40
    validate_manifest(man)


def test_generate_deterministic_across_runs_and_jobs(tmp_path):
    kwargs = dict(seed=7, frame_count=6, width=64, height=64)
    man1 = generate_dataset(get_profile("hard"), 2, 2, out_root=tmp_path / "a", **kwargs)
    man2 = generate_dataset(get_profile("hard"), 2, 2, out_root=tmp_path / "b", **kwargs)
    man3 = generate_dataset(get_profile("hard"), 2, 2, out_root=tmp_path / "c",
                            jobs=2, **kwargs)
    assert dataset_digest(tmp_path / "a", "hard") == dataset_digest(tmp_path / "b", "hard")
    assert dataset_digest(tmp_path / "a", "hard") == dataset_digest(tmp_path / "c", "hard")
    a = (tmp_path / "a" / "hard" / "manifest.jsonl").read_bytes()
    b = (tmp_path / "b" / "hard" / "manifest.jsonl").read_bytes()
    assert a == b


def test_camera_admissibility_revalidation(tmp_path):
    manifest, _ = plan_dataset(get_profile("hard"), 3, 3, seed=13)
    validate_manifest(manifest)
    # corrupt one camera -> caught
    manifest.rows[5]["camera"]["zoom_pct"] = 200.0
    with pytest.raises(ValueError, match="outside"):
        validate_manifest(manifest)


def test_output_collision_requires_overwrite(tmp_path):
    kwargs = dict(seed=7, frame_count=6, width=64, height=64)
    generate_dataset(get_profile("easy"), 1, 1, out_root=tmp_path, **kwargs)
    with pytest.raises(FileExistsError):
        generate_dataset(get_profile("easy"), 1, 1, out_root=tmp_path, **kwargs)
    generate_dataset(get_profile("easy"), 1, 1, out_root=tmp_path, overwrite=True, **kwargs)


def test_window_policy_stores_mid_window(tmp_path):
    man = generate_dataset(get_profile("easy"), 1, 1, seed=7, out_root=tmp_path,
                           frame_count=30, width=64, height=64)
    row = man.rows[0]
    assert row["stored_frames"] == window_indices(30) == [10, 11, 12, 13, 14, 15]
    frames = load_clip_window(tmp_path, "easy", row)
    assert len(frames) == 6
    assert frames[0].shape == (64, 64, 3)


def test_manifest_replay_requests(tmp_path):
    man = generate_dataset(get_profile("easy"), 2, 1, seed=21, out_root=tmp_path,
                           frame_count=6, width=64, height=64)
    reloaded = load_manifest(tmp_path, "easy")
    assert reloaded.meta == man.meta
    req = reloaded.request_for(reloaded.rows[7])
    assert req.clip_id == reloaded.rows[7]["clip_id"]
    assert req.frame_count == 6


def test_invalid_args_rejected(tmp_path):
    with pytest.raises(ValueError):
        plan_dataset(get_profile("easy"), 0, 1, seed=1)
    with pytest.raises(ValueError):
        plan_dataset(get_profile("easy"), 1, 1, seed=1, frames_policy="some")


def test_style_sampling_without_replacement():
    manifest, _ = plan_dataset(get_profile("easy"), 64, 1, seed=3)
    for action in ("camel", "lotus"):
        label_rows = [r for r in manifest.rows if r["label"] == f"{action}_0"]
        styles = {tuple(sorted(r["style"].items())) for r in label_rows}
        assert len(styles) == 64  # all combinations, no repeats

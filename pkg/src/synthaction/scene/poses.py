"""Hand-authored pose library: 10 actions x 4 variants.

Angles are degrees applied per joint as yaw(Y) * pitch(X) * roll(Z) in
the parent's frame (see avatar.py for the rest skeleton).  Sign
conventions, with the avatar facing +z and y up:

* pitch (x): positive swings a hanging bone backward, negative forward;
  positive bends an upward bone (spine) forward.
* roll (z): positive moves the left arm/leg outward, negative the right.
* yaw (y): twist about the bone.

Variant 0 of each action is the base pose; variants 1..3 change at
least one joint by 5 degrees or more but stay far closer to their base
than to any other action's poses (asserted in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

JOINT_NAMES = (
    "root", "spine", "neck", "head",
    "l_shoulder", "r_shoulder", "l_elbow", "r_elbow",
    "l_hip", "r_hip", "l_knee", "r_knee", "l_ankle", "r_ankle",
)

ACTIONS = (
    "camel", "chair", "childs", "lord_of_the_dance", "lotus",
    "thunderbolt", "triangle", "upward_dog", "warrior2", "warrior3",
)

N_VARIANTS = 4

Angles = tuple[float, float, float]


@dataclass(frozen=True)
class PoseSpec:
    """Target joint rotations plus a root translation for one labeled pose."""

    action_id: int
    variant_id: int
    action: str
    joint_angles: dict[str, Angles]
    root_offset: tuple[float, float, float]

    @property
    def label(self) -> str:
        return f"{self.action}_{self.variant_id}"

    def angles_array(self) -> np.ndarray:
        """(14, 3) array in JOINT_NAMES order."""
        return np.array([self.joint_angles[j] for j in JOINT_NAMES], dtype=np.float64)


def pose_distance(a: PoseSpec, b: PoseSpec) -> float:
    """Aggregate L2 distance over all joint angles, in degrees."""
    return float(np.linalg.norm(a.angles_array() - b.angles_array()))


def _full(angles: dict[str, Angles]) -> dict[str, Angles]:
    out = {name: (0.0, 0.0, 0.0) for name in JOINT_NAMES}
    for k, v in angles.items():
        if k not in out:
            raise KeyError(f"unknown joint {k!r}")
        out[k] = (float(v[0]), float(v[1]), float(v[2]))
    return out


def _merge(base: dict[str, Angles], overrides: dict[str, Angles]) -> dict[str, Angles]:
    out = dict(base)
    out.update({k: tuple(float(x) for x in v) for k, v in overrides.items()})
    return out


# Base pose for each action: (joint angle map, root offset).  Offsets
# put kneeling/seated poses at plausible pelvis heights.
_BASES: dict[str, tuple[dict[str, Angles], tuple[float, float, float]]] = {
    "camel": (
        {
            "spine": (-38.0, 0.0, 0.0),
            "neck": (-32.0, 0.0, 0.0),
            "head": (-12.0, 0.0, 0.0),
            "l_hip": (0.0, 0.0, 6.0),
            "r_hip": (0.0, 0.0, -6.0),
            "l_knee": (92.0, 0.0, 0.0),
            "r_knee": (92.0, 0.0, 0.0),
            "l_shoulder": (62.0, 0.0, 10.0),
            "r_shoulder": (62.0, 0.0, -10.0),
            "l_elbow": (8.0, 0.0, 0.0),
            "r_elbow": (8.0, 0.0, 0.0),
        },
        (0.0, -0.44, 0.0),
    ),
    "chair": (
        {
            "spine": (24.0, 0.0, 0.0),
            "neck": (-10.0, 0.0, 0.0),
            "l_hip": (-68.0, 0.0, 4.0),
            "r_hip": (-68.0, 0.0, -4.0),
            "l_knee": (78.0, 0.0, 0.0),
            "r_knee": (78.0, 0.0, 0.0),
            "l_ankle": (-12.0, 0.0, 0.0),
            "r_ankle": (-12.0, 0.0, 0.0),
            "l_shoulder": (-148.0, 0.0, 14.0),
            "r_shoulder": (-148.0, 0.0, -14.0),
            "l_elbow": (-10.0, 0.0, 0.0),
            "r_elbow": (-10.0, 0.0, 0.0),
        },
        (0.0, -0.27, 0.05),
    ),
    "childs": (
        {
            "spine": (68.0, 0.0, 0.0),
            "neck": (28.0, 0.0, 0.0),
            "head": (12.0, 0.0, 0.0),
            "l_hip": (-112.0, 0.0, 8.0),
            "r_hip": (-112.0, 0.0, -8.0),
            "l_knee": (138.0, 0.0, 0.0),
            "r_knee": (138.0, 0.0, 0.0),
            "l_shoulder": (-142.0, 0.0, 8.0),
            "r_shoulder": (-142.0, 0.0, -8.0),
        },
        (0.0, -0.60, -0.05),
    ),
    "lord_of_the_dance": (
        {
            "spine": (18.0, 0.0, 0.0),
            "neck": (-8.0, 0.0, 0.0),
            "r_hip": (52.0, 0.0, -10.0),
            "r_knee": (108.0, 0.0, 0.0),
            "l_shoulder": (-102.0, 0.0, 8.0),
            "l_elbow": (-8.0, 0.0, 0.0),
            "r_shoulder": (58.0, 0.0, -22.0),
            "r_elbow": (-30.0, 0.0, 0.0),
        },
        (0.0, -0.02, 0.0),
    ),
    "lotus": (
        {
            "l_hip": (-88.0, 0.0, 58.0),
            "r_hip": (-88.0, 0.0, -58.0),
            "l_knee": (132.0, 0.0, 0.0),
            "r_knee": (132.0, 0.0, 0.0),
            "l_shoulder": (-24.0, 0.0, 6.0),
            "r_shoulder": (-24.0, 0.0, -6.0),
            "l_elbow": (-22.0, 0.0, 0.0),
            "r_elbow": (-22.0, 0.0, 0.0),
        },
        (0.0, -0.80, 0.0),
    ),
    "thunderbolt": (
        {
            "l_hip": (-62.0, 0.0, 5.0),
            "r_hip": (-62.0, 0.0, -5.0),
            "l_knee": (150.0, 0.0, 0.0),
            "r_knee": (150.0, 0.0, 0.0),
            "l_shoulder": (-28.0, 0.0, 4.0),
            "r_shoulder": (-28.0, 0.0, -4.0),
            "l_elbow": (-42.0, 0.0, 0.0),
            "r_elbow": (-42.0, 0.0, 0.0),
        },
        (0.0, -0.58, 0.0),
    ),
    "triangle": (
        {
            "spine": (0.0, 0.0, 52.0),
            "neck": (0.0, 0.0, -14.0),
            "head": (0.0, -20.0, 0.0),
            "l_hip": (0.0, 0.0, 28.0),
            "r_hip": (0.0, 0.0, -28.0),
            "l_shoulder": (0.0, 0.0, 32.0),
            "r_shoulder": (0.0, 0.0, -168.0),
        },
        (0.0, -0.09, 0.0),
    ),
    "upward_dog": (
        {
            "root": (76.0, 0.0, 0.0),
            "spine": (-44.0, 0.0, 0.0),
            "neck": (-26.0, 0.0, 0.0),
            "head": (-10.0, 0.0, 0.0),
            "l_hip": (12.0, 0.0, 4.0),
            "r_hip": (12.0, 0.0, -4.0),
            "l_shoulder": (-28.0, 0.0, 8.0),
            "r_shoulder": (-28.0, 0.0, -8.0),
        },
        (0.0, -0.62, 0.10),
    ),
    "warrior2": (
        {
            "head": (0.0, 45.0, 0.0),
            "l_hip": (0.0, 0.0, 56.0),
            "l_knee": (0.0, 0.0, -52.0),
            "r_hip": (0.0, 0.0, -36.0),
            "l_shoulder": (0.0, 0.0, 86.0),
            "r_shoulder": (0.0, 0.0, -86.0),
        },
        (0.0, -0.19, 0.0),
    ),
    "warrior3": (
        {
            "root": (78.0, 0.0, 0.0),
            "neck": (-20.0, 0.0, 0.0),
            "r_hip": (-78.0, 0.0, -4.0),
            "l_hip": (10.0, 0.0, 4.0),
            "l_shoulder": (-168.0, 0.0, 6.0),
            "r_shoulder": (-168.0, 0.0, -6.0),
        },
        (0.0, -0.05, 0.0),
    ),
}

# Variant overrides, three per action.  Deltas are small (one to three
# joints, 8..25 degrees) so every variant stays far nearer its own
# action's poses than any other action's; bigger rewrites would break
# that dominance for the closest action pairs.
_VARIANTS: dict[str, list[tuple[dict[str, Angles], tuple[float, float, float] | None]]] = {
    "camel": [
        ({"l_shoulder": (44.0, 0.0, 10.0), "r_shoulder": (44.0, 0.0, -10.0)}, None),
        ({"spine": (-54.0, 0.0, 0.0), "neck": (-44.0, 0.0, 0.0)}, None),
        ({"head": (10.0, 0.0, 0.0), "neck": (-22.0, 0.0, 0.0)}, None),
    ],
    "chair": [
        ({"l_shoulder": (-128.0, 0.0, 14.0), "r_shoulder": (-128.0, 0.0, -14.0)}, None),
        ({"l_hip": (-56.0, 0.0, 4.0), "r_hip": (-56.0, 0.0, -4.0),
          "l_knee": (64.0, 0.0, 0.0), "r_knee": (64.0, 0.0, 0.0)},
         (0.0, -0.20, 0.05)),
        ({"l_elbow": (-30.0, 0.0, 0.0), "r_elbow": (-30.0, 0.0, 0.0)}, None),
    ],
    "childs": [
        ({"l_shoulder": (-142.0, 0.0, 26.0), "r_shoulder": (-142.0, 0.0, -26.0)}, None),
        ({"spine": (52.0, 0.0, 0.0), "neck": (20.0, 0.0, 0.0)},
         (0.0, -0.56, -0.05)),
        ({"l_hip": (-112.0, 0.0, 24.0), "r_hip": (-112.0, 0.0, -24.0)}, None),
    ],
    "lord_of_the_dance": [
        ({"r_hip": (34.0, 0.0, -10.0), "r_knee": (88.0, 0.0, 0.0)}, None),
        ({"spine": (34.0, 0.0, 0.0), "l_shoulder": (-118.0, 0.0, 8.0)}, None),
        ({"r_shoulder": (76.0, 0.0, -22.0), "r_elbow": (-14.0, 0.0, 0.0)}, None),
    ],
    "lotus": [
        ({"l_elbow": (-40.0, 0.0, 0.0), "r_elbow": (-40.0, 0.0, 0.0)}, None),
        ({"spine": (-10.0, 0.0, 0.0), "neck": (-12.0, 0.0, 0.0)}, None),
        ({"l_hip": (-88.0, 0.0, 46.0), "r_hip": (-88.0, 0.0, -46.0),
          "l_knee": (140.0, 0.0, 0.0), "r_knee": (140.0, 0.0, 0.0)}, None),
    ],
    "thunderbolt": [
        ({"l_elbow": (-22.0, 0.0, 0.0), "r_elbow": (-22.0, 0.0, 0.0)}, None),
        ({"spine": (18.0, 0.0, 0.0), "neck": (12.0, 0.0, 0.0)}, None),
        ({"l_shoulder": (-44.0, 0.0, 4.0), "r_shoulder": (-44.0, 0.0, -4.0)}, None),
    ],
    "triangle": [
        ({"spine": (0.0, 0.0, 68.0), "neck": (0.0, 0.0, -24.0)}, None),
        ({"spine": (0.0, 0.0, 38.0), "head": (0.0, -10.0, 0.0)}, None),
        ({"head": (-14.0, -20.0, 0.0), "r_shoulder": (0.0, 0.0, -150.0)}, None),
    ],
    "upward_dog": [
        ({"l_knee": (16.0, 0.0, 0.0), "r_knee": (16.0, 0.0, 0.0)}, None),
        ({"spine": (-60.0, 0.0, 0.0), "neck": (-36.0, 0.0, 0.0)}, None),
        ({"l_hip": (12.0, 0.0, 18.0), "r_hip": (12.0, 0.0, -18.0)}, None),
    ],
    "warrior2": [
        ({"l_shoulder": (0.0, 0.0, 102.0), "r_shoulder": (0.0, 0.0, -102.0)}, None),
        ({"l_hip": (0.0, 0.0, 68.0), "l_knee": (0.0, 0.0, -64.0),
          "r_hip": (0.0, 0.0, -44.0)}, (0.0, -0.24, 0.0)),
        ({"head": (0.0, 20.0, 0.0), "r_shoulder": (0.0, 0.0, -74.0)}, None),
    ],
    "warrior3": [
        ({"l_shoulder": (-168.0, 0.0, 24.0), "r_shoulder": (-168.0, 0.0, -24.0)}, None),
        ({"root": (64.0, 0.0, 0.0), "r_hip": (-64.0, 0.0, -4.0),
          "l_hip": (24.0, 0.0, 4.0)}, None),
        ({"r_knee": (22.0, 0.0, 0.0), "l_knee": (10.0, 0.0, 0.0)}, None),
    ],
}


def build_pose_library() -> list[PoseSpec]:
    """All 40 pose specs, ordered by (action_id, variant_id)."""
    specs = []
    for action_id, action in enumerate(ACTIONS):
        base_angles, base_offset = _BASES[action]
        base_full = _full(base_angles)
        specs.append(PoseSpec(action_id, 0, action, base_full, base_offset))
        for variant_id, (overrides, offset) in enumerate(_VARIANTS[action], start=1):
            specs.append(PoseSpec(
                action_id, variant_id, action,
                _merge(base_full, overrides),
                offset if offset is not None else base_offset,
            ))
    return specs


def pose_by_label(action: str, variant_id: int) -> PoseSpec:
    for spec in build_pose_library():
        if spec.action == action and spec.variant_id == variant_id:
            return spec
    raise KeyError(f"no pose {action}_{variant_id}")


def neutral_pose() -> PoseSpec:
    """Rest stance used as the animation start (not part of the library)."""
    return PoseSpec(-1, 0, "neutral", _full({}), (0.0, 0.0, 0.0))

"""Articulated capsule avatar: rest skeleton, kinematics, styled primitives.

The skeleton is a tree of 14 articulated joints plus end effectors
(hands, toes).  Joint rotations from a PoseSpec are applied as
yaw*pitch*roll in the parent frame; a joint's rotation moves its
children, so e.g. the shoulder swings the whole arm and the elbow only
the forearm.  Geometry is capsules and spheres sized for a ~1.75 m
figure, with hair/cloth/pants styled per avatar.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poses import PoseSpec

N_STYLE_COMBINATIONS = 64


@dataclass(frozen=True)
class AvatarStyle:
    """Hair, cloth and pants style indices, each 0..3."""

    hair_style: int
    cloth_style: int
    pants_style: int

    def __post_init__(self):
        for v in (self.hair_style, self.cloth_style, self.pants_style):
            if not 0 <= v <= 3:
                raise ValueError(f"style index {v} outside 0..3")

    @classmethod
    def from_index(cls, i: int) -> "AvatarStyle":
        if not 0 <= i < N_STYLE_COMBINATIONS:
            raise ValueError(f"style combination index {i} outside 0..63")
        return cls(hair_style=i // 16, cloth_style=(i // 4) % 4, pants_style=i % 4)

    @property
    def index(self) -> int:
        return self.hair_style * 16 + self.cloth_style * 4 + self.pants_style

    def to_dict(self) -> dict:
        return {"hair_style": self.hair_style, "cloth_style": self.cloth_style,
                "pants_style": self.pants_style}

    @classmethod
    def from_dict(cls, d: dict) -> "AvatarStyle":
        return cls(int(d["hair_style"]), int(d["cloth_style"]), int(d["pants_style"]))


# Pattern kinds shared by cloth and pants styles.
PATTERN_SOLID = 0
PATTERN_STRIPES = 1
PATTERN_CHECKER = 2
PATTERN_DOTS = 3


@dataclass(frozen=True)
class Material:
    """Surface pattern: two colors plus the pattern kind."""

    pattern: int
    color_a: tuple[float, float, float]
    color_b: tuple[float, float, float]


def _solid(rgb) -> Material:
    return Material(PATTERN_SOLID, rgb, rgb)


SKIN = _solid((0.94, 0.77, 0.62))
SHOE = _solid((0.30, 0.27, 0.33))

HAIR_COLORS = (
    (0.22, 0.16, 0.12),   # dark brown
    (0.88, 0.75, 0.42),   # blond
    (0.52, 0.32, 0.16),   # chestnut
    (0.62, 0.22, 0.14),   # auburn
)

# Style index -> fixed (pattern, color pair) entry.
CLOTH_STYLES = (
    Material(PATTERN_SOLID, (0.30, 0.62, 0.86), (0.30, 0.62, 0.86)),
    Material(PATTERN_STRIPES, (0.90, 0.34, 0.30), (0.97, 0.90, 0.62)),
    Material(PATTERN_CHECKER, (0.38, 0.74, 0.44), (0.94, 0.94, 0.90)),
    Material(PATTERN_DOTS, (0.88, 0.72, 0.24), (0.40, 0.28, 0.58)),
)

PANTS_STYLES = (
    Material(PATTERN_SOLID, (0.36, 0.40, 0.74), (0.36, 0.40, 0.74)),
    Material(PATTERN_STRIPES, (0.58, 0.36, 0.66), (0.90, 0.88, 0.84)),
    Material(PATTERN_CHECKER, (0.80, 0.46, 0.26), (0.32, 0.32, 0.36)),
    Material(PATTERN_DOTS, (0.46, 0.66, 0.32), (0.92, 0.90, 0.62)),
)


@dataclass(frozen=True)
class Primitive:
    """One renderable shape: 'sphere' (a=center), 'capsule' (a->b) or 'box' (a=min, b=max)."""

    kind: str
    a: np.ndarray
    b: np.ndarray
    radius: float
    material: Material


ROOT_POS = np.array([0.0, 0.95, 0.0])

# Rest-pose bone offsets in the parent joint's frame.
_PARENTS = {
    "spine": "root", "neck": "spine", "head": "neck",
    "l_shoulder": "spine", "r_shoulder": "spine",
    "l_elbow": "l_shoulder", "r_elbow": "r_shoulder",
    "l_hip": "root", "r_hip": "root",
    "l_knee": "l_hip", "r_knee": "r_hip",
    "l_ankle": "l_knee", "r_ankle": "r_knee",
}

_OFFSETS = {
    "spine": (0.0, 0.22, 0.0),
    "neck": (0.0, 0.28, 0.0),
    "head": (0.0, 0.10, 0.0),
    "l_shoulder": (0.21, 0.23, 0.0),
    "r_shoulder": (-0.21, 0.23, 0.0),
    "l_elbow": (0.055, -0.295, 0.0),
    "r_elbow": (-0.055, -0.295, 0.0),
    "l_hip": (0.10, -0.06, 0.0),
    "r_hip": (-0.10, -0.06, 0.0),
    "l_knee": (0.0, -0.42, 0.0),
    "r_knee": (0.0, -0.42, 0.0),
    "l_ankle": (0.0, -0.40, 0.0),
    "r_ankle": (0.0, -0.40, 0.0),
}

# End effectors hang off a parent joint and inherit its rotation.
_END_EFFECTORS = {
    "l_hand": ("l_elbow", (0.048, -0.276, 0.0)),
    "r_hand": ("r_elbow", (-0.048, -0.276, 0.0)),
    "l_toe": ("l_ankle", (0.0, -0.045, 0.145)),
    "r_toe": ("r_ankle", (0.0, -0.045, 0.145)),
}

# Fixed traversal order: parents before children.
_TOPO_ORDER = ("spine", "neck", "head", "l_shoulder", "r_shoulder",
               "l_elbow", "r_elbow", "l_hip", "r_hip",
               "l_knee", "r_knee", "l_ankle", "r_ankle")


def _rot_x(deg: float) -> np.ndarray:
    r = np.deg2rad(deg)
    c, s = np.cos(r), np.sin(r)
    return np.array([[1, 0, 0], [0, c, -s], [0, s, c]])


def _rot_y(deg: float) -> np.ndarray:
    r = np.deg2rad(deg)
    c, s = np.cos(r), np.sin(r)
    return np.array([[c, 0, s], [0, 1, 0], [-s, 0, c]])


def _rot_z(deg: float) -> np.ndarray:
    r = np.deg2rad(deg)
    c, s = np.cos(r), np.sin(r)
    return np.array([[c, -s, 0], [s, c, 0], [0, 0, 1]])


def joint_rotation(angles) -> np.ndarray:
    """Local rotation for (pitch_x, yaw_y, roll_z) degrees: Ry * Rx * Rz."""
    ax, ay, az = angles
    return _rot_y(ay) @ _rot_x(ax) @ _rot_z(az)


def forward_kinematics(joint_angles: dict, root_offset) -> dict[str, np.ndarray]:
    """World joint and end-effector positions for the given pose.

    ``joint_angles`` maps joint name -> (x, y, z) degrees; missing
    joints default to rest.  Returns name -> (3,) position including
    the end effectors; world rotations are stored under ``("R", name)``
    keys for geometry that must follow a joint's frame.
    """
    zero = (0.0, 0.0, 0.0)
    pos: dict = {"root": ROOT_POS + np.asarray(root_offset, dtype=np.float64)}
    rot = {"root": joint_rotation(joint_angles.get("root", zero))}
    for name in _TOPO_ORDER:
        parent = _PARENTS[name]
        pos[name] = pos[parent] + rot[parent] @ np.asarray(_OFFSETS[name])
        rot[name] = rot[parent] @ joint_rotation(joint_angles.get(name, zero))
    for name, (parent, off) in _END_EFFECTORS.items():
        pos[name] = pos[parent] + rot[parent] @ np.asarray(off)
    for name, r in rot.items():
        pos[("R", name)] = r
    return pos


def pose_joint_positions(pose: PoseSpec) -> dict[str, np.ndarray]:
    return forward_kinematics(pose.joint_angles, pose.root_offset)


def avatar_primitives(joints: dict, style: AvatarStyle) -> list[Primitive]:
    """Build the styled capsule/sphere set for posed joints."""
    cloth = CLOTH_STYLES[style.cloth_style]
    pants = PANTS_STYLES[style.pants_style]
    hair = _solid(HAIR_COLORS[style.hair_style])
    p = joints
    head_rot = p[("R", "head")]
    head_center = p["head"] + head_rot @ np.array([0.0, 0.06, 0.0])
    prims = [
        # pelvis + torso (cloth covers the trunk, pants the pelvis band)
        Primitive("capsule", p["l_hip"], p["r_hip"], 0.115, pants),
        Primitive("capsule", p["root"], p["spine"], 0.135, cloth),
        Primitive("capsule", p["spine"], p["neck"], 0.125, cloth),
        Primitive("capsule", p["neck"], p["head"], 0.045, SKIN),
        Primitive("sphere", head_center, head_center, 0.105, SKIN),
        # arms: sleeved upper, bare forearm, hand sphere
        Primitive("capsule", p["l_shoulder"], p["l_elbow"], 0.052, cloth),
        Primitive("capsule", p["r_shoulder"], p["r_elbow"], 0.052, cloth),
        Primitive("capsule", p["l_elbow"], p["l_hand"], 0.042, SKIN),
        Primitive("capsule", p["r_elbow"], p["r_hand"], 0.042, SKIN),
        Primitive("sphere", p["l_hand"], p["l_hand"], 0.05, SKIN),
        Primitive("sphere", p["r_hand"], p["r_hand"], 0.05, SKIN),
        # legs
        Primitive("capsule", p["l_hip"], p["l_knee"], 0.075, pants),
        Primitive("capsule", p["r_hip"], p["r_knee"], 0.075, pants),
        Primitive("capsule", p["l_knee"], p["l_ankle"], 0.056, pants),
        Primitive("capsule", p["r_knee"], p["r_ankle"], 0.056, pants),
        Primitive("capsule", p["l_ankle"], p["l_toe"], 0.046, SHOE),
        Primitive("capsule", p["r_ankle"], p["r_toe"], 0.046, SHOE),
    ]
    # hair: dome for everyone, plus per-style extras
    dome = head_center + head_rot @ np.array([0.0, 0.045, -0.025])
    prims.append(Primitive("sphere", dome, dome, 0.098, hair))
    if style.hair_style == 2:  # long hair down the back
        tail_top = head_center + head_rot @ np.array([0.0, 0.02, -0.10])
        tail_end = tail_top + head_rot @ np.array([0.0, -0.28, -0.02])
        prims.append(Primitive("capsule", tail_top, tail_end, 0.048, hair))
    elif style.hair_style == 3:  # top bun
        bun = head_center + head_rot @ np.array([0.0, 0.145, -0.01])
        prims.append(Primitive("sphere", bun, bun, 0.052, hair))
    return prims


def primitives_min_y(prims: list[Primitive]) -> float:
    """Lowest point of the sphere/capsule set (world y)."""
    lows = []
    for prim in prims:
        if prim.kind == "sphere":
            lows.append(float(prim.a[1]) - prim.radius)
        elif prim.kind == "capsule":
            lows.append(min(float(prim.a[1]), float(prim.b[1])) - prim.radius)
    return min(lows)


def translate_primitives(prims: list[Primitive], delta: np.ndarray) -> list[Primitive]:
    return [Primitive(p.kind, p.a + delta, p.b + delta, p.radius, p.material) for p in prims]


def primitive_centroid(prims: list[Primitive]) -> np.ndarray:
    """Frontal silhouette-area weighted centroid; used to aim the camera."""
    total_w = 0.0
    acc = np.zeros(3)
    for prim in prims:
        if prim.kind == "sphere":
            w = np.pi * prim.radius ** 2
            c = prim.a
        elif prim.kind == "capsule":
            length = float(np.linalg.norm(prim.b - prim.a))
            w = 2.0 * prim.radius * length + np.pi * prim.radius ** 2
            c = 0.5 * (prim.a + prim.b)
        else:
            continue
        acc += w * np.asarray(c)
        total_w += w
    return acc / total_w

"""Per-pixel depth-buffered renderer over analytic primitives.

Each primitive is intersected only inside its conservative screen
bounding box, against unnormalized per-pixel rays (depth compares are
per-ray, so normalization is unnecessary).  Flat Lambert shading with
one fixed directional light; cloth/pants patterns are evaluated in
capsule-local coordinates so they follow the body.  Everything is
straight-line numpy: same inputs give bit-identical frames regardless
of how clips are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .avatar import (
    Material,
    Primitive,
    PATTERN_CHECKER,
    PATTERN_DOTS,
    PATTERN_SOLID,
    PATTERN_STRIPES,
)

EPS_T = 1e-4
LIGHT_DIR = np.array([0.35, 0.75, 0.55])
LIGHT_DIR = LIGHT_DIR / np.linalg.norm(LIGHT_DIR)
AMBIENT = 0.52
DIFFUSE = 0.48

# Band sizes (meters) for the procedural patterns.
STRIPE_PERIOD = 0.055
CHECKER_PERIOD = 0.055
DOT_PERIOD = 0.07
DOT_RADIUS = 0.33

CLEAR_COLOR = np.array([0.42, 0.44, 0.47], dtype=np.float32)
SKY_TOP = np.array([0.58, 0.72, 0.90], dtype=np.float32)
SKY_BOTTOM = np.array([0.84, 0.87, 0.92], dtype=np.float32)
GROUND_A = np.array([0.56, 0.53, 0.49], dtype=np.float32)
GROUND_B = np.array([0.36, 0.35, 0.34], dtype=np.float32)
GROUND_TILE = 0.5


@dataclass(frozen=True)
class Camera:
    """Pinhole camera: position, orthonormal basis and focal length in pixels."""

    pos: np.ndarray
    right: np.ndarray
    up: np.ndarray
    forward: np.ndarray
    focal: float
    width: int
    height: int

    def project(self, point: np.ndarray) -> tuple[float, float, float]:
        """Return (col, row, depth_along_forward); depth <= 0 means behind."""
        w = point - self.pos
        z = float(w @ self.forward)
        if z <= 1e-9:
            return 0.0, 0.0, z
        col = (self.width - 1) / 2.0 + self.focal * float(w @ self.right) / z
        row = (self.height - 1) / 2.0 - self.focal * float(w @ self.up) / z
        return col, row, z


def make_camera(pos, target, zoom_pct, offset_x, offset_y, width, height,
                base_focal_fraction=0.9, subject_height=1.75, orbit_radius=4.0) -> Camera:
    """Camera at ``pos`` aimed at ``target`` then shifted in its own x/y plane.

    Focal length scales linearly with zoom; at 100% the subject height
    spans ``base_focal_fraction`` of the frame when seen from the orbit
    radius.
    """
    pos = np.asarray(pos, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    forward = target - pos
    forward = forward / np.linalg.norm(forward)
    world_up = np.array([0.0, 1.0, 0.0])
    right = np.cross(forward, world_up)
    nr = np.linalg.norm(right)
    if nr < 1e-9:  # looking straight down: pick a stable right vector
        right = np.array([1.0, 0.0, 0.0])
    else:
        right = right / nr
    up = np.cross(right, forward)
    shifted = pos + offset_x * right + offset_y * up
    focal = base_focal_fraction * height * orbit_radius / subject_height * (zoom_pct / 100.0)
    return Camera(pos=shifted, right=right, up=up, forward=forward,
                  focal=focal, width=width, height=height)


def orbit_position(target, angle_x_deg, angle_y_deg, radius=4.0) -> np.ndarray:
    """Point on the orbit sphere: y-angle is azimuth, x-angle elevation."""
    az = np.deg2rad(angle_y_deg)
    el = np.deg2rad(angle_x_deg)
    offset = radius * np.array([np.sin(az) * np.cos(el), np.sin(el), np.cos(az) * np.cos(el)])
    return np.asarray(target, dtype=np.float64) + offset


def _ray_dirs(cam: Camera) -> np.ndarray:
    """(H, W, 3) unnormalized ray directions through every pixel center."""
    cols = np.arange(cam.width, dtype=np.float64) - (cam.width - 1) / 2.0
    rows = (cam.height - 1) / 2.0 - np.arange(cam.height, dtype=np.float64)
    return (cols[None, :, None] * cam.right
            + rows[:, None, None] * cam.up
            + cam.focal * cam.forward)


def _sphere_t(origin, dirs, center, radius):
    """Smallest positive hit parameter per ray (inf on miss)."""
    m = origin - center
    a = np.einsum("...i,...i->...", dirs, dirs)
    b = dirs @ m
    c = float(m @ m) - radius * radius
    disc = b * b - a * c
    ok = disc >= 0.0
    sq = np.sqrt(np.where(ok, disc, 0.0))
    t = (-b - sq) / a
    return np.where(ok & (t > EPS_T), t, np.inf)


def _capsule_t(origin, dirs, a_pt, b_pt, radius):
    """Capsule = finite cylinder plus cap spheres; min positive t of the union."""
    v = b_pt - a_pt
    vv = float(v @ v)
    if vv < 1e-12:
        return _sphere_t(origin, dirs, a_pt, radius)
    m = origin - a_pt
    mv = float(m @ m) - (float(m @ v) ** 2) / vv - radius * radius
    dv = dirs @ v
    dd = np.einsum("...i,...i->...", dirs, dirs)
    md = dirs @ m
    aq = dd - dv * dv / vv
    bq = md - float(m @ v) * dv / vv
    disc = bq * bq - aq * mv
    ok = (disc >= 0.0) & (aq > 1e-12)
    sq = np.sqrt(np.where(ok, disc, 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        t_cyl = np.where(ok, (-bq - sq) / np.where(ok, aq, 1.0), np.inf)
        s = (float(m @ v) + np.where(ok, t_cyl, 0.0) * dv) / vv
    t_cyl = np.where(ok & (s >= 0.0) & (s <= 1.0) & (t_cyl > EPS_T), t_cyl, np.inf)
    t = np.minimum(t_cyl, _sphere_t(origin, dirs, a_pt, radius))
    return np.minimum(t, _sphere_t(origin, dirs, b_pt, radius))


def _box_t(origin, dirs, box_min, box_max):
    """Axis-aligned slab test; returns entry t (inf on miss)."""
    with np.errstate(divide="ignore", invalid="ignore"):
        inv = 1.0 / dirs
        t1 = (box_min - origin) * inv
        t2 = (box_max - origin) * inv
    tn = np.nanmax(np.minimum(t1, t2), axis=-1)
    tf = np.nanmin(np.maximum(t1, t2), axis=-1)
    hit = (tn <= tf) & (tf > EPS_T) & (tn > EPS_T)
    return np.where(hit, tn, np.inf)


def _pattern_colors(mat: Material, prim: Primitive, points: np.ndarray) -> np.ndarray:
    """Albedo per hit point; patterned materials use capsule-local (s, phi)."""
    n = points.shape[0]
    ca = np.asarray(mat.color_a, dtype=np.float64)
    if mat.pattern == PATTERN_SOLID or prim.kind != "capsule":
        return np.broadcast_to(ca, (n, 3)).copy()
    cb = np.asarray(mat.color_b, dtype=np.float64)
    v = prim.b - prim.a
    length = float(np.linalg.norm(v))
    if length < 1e-9:
        return np.broadcast_to(ca, (n, 3)).copy()
    axis = v / length
    rel = points - prim.a
    s_arc = np.clip(rel @ axis, 0.0, length)
    radial = rel - np.outer(s_arc, axis)
    ref = np.array([0.0, 1.0, 0.0]) if abs(axis[1]) < 0.9 else np.array([1.0, 0.0, 0.0])
    e1 = np.cross(axis, ref)
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(axis, e1)
    phi = np.arctan2(radial @ e2, radial @ e1)  # (-pi, pi]
    if mat.pattern == PATTERN_STRIPES:
        band = np.floor(s_arc / STRIPE_PERIOD).astype(np.int64) % 2
        pick = band == 1
    elif mat.pattern == PATTERN_CHECKER:
        iu = np.floor(s_arc / CHECKER_PERIOD).astype(np.int64)
        iv = np.floor((phi / np.pi + 1.0) * 4.0).astype(np.int64)
        pick = (iu + iv) % 2 == 1
    else:  # dots
        u = np.mod(s_arc / DOT_PERIOD, 1.0)
        w = np.mod((phi / np.pi + 1.0) * 4.0, 1.0)
        pick = (u - 0.5) ** 2 + (w - 0.5) ** 2 < DOT_RADIUS ** 2
    out = np.where(pick[:, None], cb, ca)
    return out


def _shade(albedo: np.ndarray, normals: np.ndarray) -> np.ndarray:
    lam = np.maximum(normals @ LIGHT_DIR, 0.0)
    return albedo * (AMBIENT + DIFFUSE * lam)[:, None]


def _prim_bbox(prim: Primitive, cam: Camera) -> tuple[int, int, int, int] | None:
    """Conservative integer pixel bbox (x0, x1, y0, y1), or None if empty."""
    if prim.kind == "box":
        corners = [np.array([x, y, z]) for x in (prim.a[0], prim.b[0])
                   for y in (prim.a[1], prim.b[1]) for z in (prim.a[2], prim.b[2])]
        pts = [(c, 0.0) for c in corners]
    else:
        pts = [(prim.a, prim.radius)]
        if prim.kind == "capsule":
            pts.append((prim.b, prim.radius))
    cols, rows = [], []
    for center, radius in pts:
        col, row, z = cam.project(np.asarray(center, dtype=np.float64))
        if z <= radius + 0.05:
            return 0, cam.width, 0, cam.height  # crosses the near region
        sr = cam.focal * (radius * 1.25) / max(z - radius, 0.05) + 2.0
        cols += [col - sr, col + sr]
        rows += [row - sr, row + sr]
    x0 = max(0, int(np.floor(min(cols))))
    x1 = min(cam.width, int(np.ceil(max(cols))) + 1)
    y0 = max(0, int(np.floor(min(rows))))
    y1 = min(cam.height, int(np.ceil(max(rows))) + 1)
    if x0 >= x1 or y0 >= y1:
        return None
    return x0, x1, y0, y1


def render(prims: list[Primitive], cam: Camera, static_background: bool) -> np.ndarray:
    """Render to a uint8 (H, W, 3) frame.

    Background layering: clear color, or (sky gradient + checker ground
    plane) when ``static_background``.  Dynamic distractors are ordinary
    primitives supplied by the caller.
    """
    h, w = cam.height, cam.width
    dirs = _ray_dirs(cam)
    depth = np.full((h, w), np.inf)
    color = np.empty((h, w, 3), dtype=np.float64)

    if static_background:
        g = (np.arange(h, dtype=np.float64) / max(h - 1, 1))[:, None, None]
        color[:] = SKY_TOP * (1.0 - g) + SKY_BOTTOM * g
        # ground plane y=0 with checker tiles
        dy = dirs[..., 1]
        oy = float(cam.pos[1])
        with np.errstate(divide="ignore", invalid="ignore"):
            t_pl = np.where(dy < -1e-12, -oy / dy, np.inf)
        hit = np.isfinite(t_pl)
        if hit.any():
            px = cam.pos[0] + t_pl[hit] * dirs[..., 0][hit]
            pz = cam.pos[2] + t_pl[hit] * dirs[..., 2][hit]
            parity = (np.floor(px / GROUND_TILE) + np.floor(pz / GROUND_TILE)).astype(np.int64) % 2
            albedo = np.where(parity[:, None] == 0, GROUND_A.astype(np.float64), GROUND_B.astype(np.float64))
            lam = max(float(LIGHT_DIR[1]), 0.0)
            color[hit] = albedo * (AMBIENT + DIFFUSE * lam)
            depth[hit] = t_pl[hit]
    else:
        color[:] = CLEAR_COLOR

    for prim in prims:
        bbox = _prim_bbox(prim, cam)
        if bbox is None:
            continue
        x0, x1, y0, y1 = bbox
        sub_dirs = dirs[y0:y1, x0:x1]
        if prim.kind == "sphere":
            t = _sphere_t(cam.pos, sub_dirs, prim.a, prim.radius)
        elif prim.kind == "capsule":
            t = _capsule_t(cam.pos, sub_dirs, prim.a, prim.b, prim.radius)
        else:
            t = _box_t(cam.pos, sub_dirs, prim.a, prim.b)
        sub_depth = depth[y0:y1, x0:x1]
        closer = t < sub_depth
        if not closer.any():
            continue
        tt = t[closer][:, None]
        pts = cam.pos + tt * sub_dirs[closer]
        if prim.kind == "sphere":
            normals = (pts - prim.a) / prim.radius
        elif prim.kind == "capsule":
            v = prim.b - prim.a
            vv = float(v @ v)
            if vv < 1e-12:
                normals = (pts - prim.a) / prim.radius
            else:
                s = np.clip((pts - prim.a) @ v / vv, 0.0, 1.0)
                feet = prim.a + np.outer(s, v)
                normals = (pts - feet) / prim.radius
        else:
            rel_min = np.abs(pts - prim.a)
            rel_max = np.abs(pts - prim.b)
            axis = np.argmin(np.minimum(rel_min, rel_max), axis=1)
            sign = np.where(rel_min[np.arange(len(axis)), axis]
                            < rel_max[np.arange(len(axis)), axis], -1.0, 1.0)
            normals = np.zeros_like(pts)
            normals[np.arange(len(axis)), axis] = sign
        norms = np.linalg.norm(normals, axis=1, keepdims=True)
        normals = normals / np.maximum(norms, 1e-12)
        albedo = _pattern_colors(prim.material, prim, pts)
        shaded = _shade(albedo, normals)
        sub_color = color[y0:y1, x0:x1]
        sub_color[closer] = shaded
        sub_depth[closer] = t[closer]

    return (np.clip(color, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)

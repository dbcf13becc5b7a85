import numpy as np
import pytest

from synthaction.scene.poses import (
    ACTIONS,
    JOINT_NAMES,
    build_pose_library,
    pose_distance,
)


@pytest.fixture(scope="module")
def library():
    return build_pose_library()


def test_library_has_40_specs_10_actions_4_variants(library):
    assert len(library) == 40
    pairs = {(s.action_id, s.variant_id) for s in library}
    assert len(pairs) == 40
    assert {s.action_id for s in library} == set(range(10))
    for action_id in range(10):
        variants = sorted(s.variant_id for s in library if s.action_id == action_id)
        assert variants == [0, 1, 2, 3]


def test_action_names_match_roster(library):
    assert tuple(sorted({s.action for s in library})) == tuple(sorted(ACTIONS))
    assert len(ACTIONS) == 10


def test_every_joint_present_and_finite(library):
    for spec in library:
        assert set(spec.joint_angles) == set(JOINT_NAMES)
        arr = spec.angles_array()
        assert arr.shape == (14, 3)
        assert np.isfinite(arr).all()
        assert np.isfinite(spec.root_offset).all()


def test_variants_share_action_and_differ_pairwise(library):
    childs = [s for s in library if s.action == "childs"]
    assert len(childs) == 4
    assert len({s.action_id for s in childs}) == 1
    for i, a in enumerate(childs):
        for b in childs[i + 1:]:
            assert a.joint_angles != b.joint_angles


def test_variants_differ_from_base_by_at_least_5_degrees(library):
    for spec in library:
        if spec.variant_id == 0:
            continue
        base = next(s for s in library
                    if s.action_id == spec.action_id and s.variant_id == 0)
        delta = np.abs(spec.angles_array() - base.angles_array()).max()
        assert delta >= 5.0, spec.label


def test_childs_variant_closer_than_camel(library):
    childs = {s.variant_id: s for s in library if s.action == "childs"}
    camel0 = next(s for s in library if s.action == "camel" and s.variant_id == 0)
    assert pose_distance(childs[0], childs[1]) < pose_distance(childs[0], camel0)


def test_within_action_distances_dominate(library):
    # every spec is closer to all of its siblings than to any other action's spec
    for spec in library:
        same = [pose_distance(spec, o) for o in library
                if o.action_id == spec.action_id and o is not spec]
        cross = [pose_distance(spec, o) for o in library
                 if o.action_id != spec.action_id]
        assert max(same) < min(cross), spec.label

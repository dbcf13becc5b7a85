import numpy as np
import pytest

from synthaction.features import read_fmx, read_labels_csv, write_fmx, write_labels_csv


def test_fmx_roundtrip(tmp_path, rng):
    x = rng.normal(size=(17, 9)).astype(np.float32)
    path = tmp_path / "f.fmx"
    write_fmx(path, x)
    back = read_fmx(path)
    assert back.dtype == np.float32
    assert np.array_equal(back, x)
    raw = path.read_bytes()
    assert raw[:4] == b"FMX1"
    assert int.from_bytes(raw[4:8], "little") == 17
    assert int.from_bytes(raw[8:12], "little") == 9


def test_fmx_bad_magic(tmp_path):
    path = tmp_path / "bad.fmx"
    path.write_bytes(b"NOPE" + bytes(8))
    with pytest.raises(ValueError):
        read_fmx(path)


def test_fmx_truncated(tmp_path):
    path = tmp_path / "short.fmx"
    path.write_bytes(b"FMX1" + (100).to_bytes(4, "little") + (10).to_bytes(4, "little"))
    with pytest.raises(ValueError):
        read_fmx(path)


def test_labels_roundtrip(tmp_path):
    rows = [("camel_0_s00_c00", "camel", 0), ("lotus_3_s01_c02", "lotus", 3)]
    path = tmp_path / "labels.csv"
    write_labels_csv(path, rows)
    assert read_labels_csv(path) == rows

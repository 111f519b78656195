import pytest

import sktgc


def test_build_and_verify():
    code = sktgc.build("2sktgc-c", 6)
    assert len(code) == 64
    report = sktgc.verify(code, k=2, require_complete=True)
    assert report.passed
    assert report.k_min == 2
    assert report.size2_jumps == 16


def test_listing_roundtrip():
    code = sktgc.build("ternary-c", 3)
    assert sktgc.parse_listing(sktgc.to_listing(code)) == code
    assert sktgc.predicted_size("ternary-c", 3) == 27


def test_codec():
    assert sktgc.decode_2sk("1010", 4) == 8
    assert sktgc.encode_1sk(15, 2) == "00010"
    assert sktgc.decode_1sk("11111", 2) == 5
    with pytest.raises(sktgc.NotInCode):
        sktgc.decode_1sk("00100", 2)
    with pytest.raises(sktgc.Error):
        sktgc.encode_2sk(14, 4)


def test_compress_roundtrip():
    code = sktgc.build("1sktgc-general", 0, n0=7, steps=2)
    blob = sktgc.compress(code)
    assert isinstance(blob, bytes)
    assert sktgc.decompress(blob) == code


def test_search():
    result = sktgc.search_base(4, 2, 1)
    assert result.best_size == 11
    assert result.exhausted
    assert sktgc.verify(result.best, k=1).passed


def test_bad_family():
    with pytest.raises(sktgc.Error):
        sktgc.build("nope", 4)

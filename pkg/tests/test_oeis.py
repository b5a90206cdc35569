"""Unit tests for sequence identification with a local response cache.

All tests run offline against committed fixture responses; none of them
opens a network connection.
"""

import json
from pathlib import Path

import pytest

from riordan.oeis import (
    OeisResult,
    cache_key,
    cache_path,
    oeis_lookup,
    parse_response,
    query_string,
)

FIXTURES = Path(__file__).parent / "fixtures"

CATALAN_QUERY = (1, 1, 2, 5, 14, 42)
TRANSFORMED_QUERY = (1, 3, 12, 51, 222)


class TestQueryEncoding:
    def test_query_string(self):
        assert query_string([1, -2, 3]) == "1,-2,3"

    def test_cache_key_deterministic(self):
        assert cache_key(CATALAN_QUERY) == cache_key(list(CATALAN_QUERY))
        assert cache_key(CATALAN_QUERY) != cache_key(TRANSFORMED_QUERY)

    def test_cache_path_uses_key(self):
        p = cache_path("/tmp/cache", CATALAN_QUERY)
        assert p.name == f"{cache_key(CATALAN_QUERY)}.json"
        assert p.parent == Path("/tmp/cache")


class TestParseResponse:
    def test_dict_with_results(self):
        raw = json.dumps(
            {"results": [{"number": 108, "name": "Catalan numbers"}]}
        ).encode()
        assert parse_response(raw) == (("A000108", "Catalan numbers"),)

    def test_bare_list(self):
        raw = json.dumps([{"number": 45, "name": "Fibonacci"}]).encode()
        assert parse_response(raw) == (("A000045", "Fibonacci"),)

    def test_null_results(self):
        assert parse_response(b'{"results": null}') == ()

    def test_entries_without_number_skipped(self):
        raw = json.dumps({"results": [{"name": "x"}, "junk"]}).encode()
        assert parse_response(raw) == ()


class TestOfflineLookup:
    def test_cache_hit(self):
        result = oeis_lookup(CATALAN_QUERY, mode="offline", cache_dir=FIXTURES)
        assert result.identified
        assert result.source == "cache"
        assert result.matches[0][0] == "A000108"
        assert "Catalan" in result.matches[0][1]

    def test_cache_hit_second_fixture(self):
        # the 5-term query is deliberately short; the advisory warning fires
        with pytest.warns(UserWarning, match="recommended"):
            result = oeis_lookup(
                TRANSFORMED_QUERY, mode="offline", cache_dir=FIXTURES
            )
        assert result.matches[0][0] == "A007854"

    def test_cache_miss_is_unidentified(self, tmp_path):
        result = oeis_lookup(
            (9, 9, 9, 9, 9, 9), mode="offline", cache_dir=tmp_path
        )
        assert not result.identified
        assert result.source == "none"
        assert result.to_text() == "unidentified"

    def test_offline_never_touches_network(self, tmp_path, monkeypatch):
        import riordan.oeis as oeis_mod

        def boom(*args, **kwargs):  # pragma: no cover
            raise AssertionError("network access attempted")

        monkeypatch.setattr(oeis_mod, "_fetch", boom)
        oeis_lookup((5, 5, 5, 5, 5, 5), mode="offline", cache_dir=tmp_path)

    def test_short_query_warns(self, tmp_path):
        with pytest.warns(UserWarning, match="recommended"):
            oeis_lookup((1, 2, 3), mode="offline", cache_dir=tmp_path)

    def test_unknown_mode_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            oeis_lookup(CATALAN_QUERY, mode="sideways", cache_dir=tmp_path)


class TestOnlineLookup:
    def test_failure_is_nonfatal(self, tmp_path, monkeypatch):
        import riordan.oeis as oeis_mod

        def fail(*args, **kwargs):
            raise OSError("no route to host")

        monkeypatch.setattr(oeis_mod, "_fetch", fail)
        result = oeis_lookup(
            (7, 7, 7, 7, 7, 7), mode="online", cache_dir=tmp_path
        )
        assert not result.identified
        assert result.source == "none"

    def test_success_writes_cache_byte_identical(self, tmp_path, monkeypatch):
        import riordan.oeis as oeis_mod

        raw = json.dumps(
            {"results": [{"number": 12, "name": "fixture"}]}
        ).encode()
        monkeypatch.setattr(oeis_mod, "_fetch", lambda *a, **k: raw)
        terms = (3, 1, 4, 1, 5, 9)
        first = oeis_lookup(terms, mode="online", cache_dir=tmp_path)
        assert first.source == "network"
        assert cache_path(tmp_path, terms).read_bytes() == raw
        # the second lookup must come from cache with identical matches
        monkeypatch.setattr(oeis_mod, "_fetch", None)
        second = oeis_lookup(terms, mode="online", cache_dir=tmp_path)
        assert second.source == "cache"
        assert second.matches == first.matches


class TestResultText:
    def test_match_listing(self):
        r = OeisResult((1, 2), (("A000012", "ones"),), "cache")
        text = r.to_text()
        assert "A000012: ones" in text
        assert "1 matches, from cache" in text

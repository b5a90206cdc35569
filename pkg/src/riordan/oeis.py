"""Sequence identification against the OEIS, with a local response cache.

Online lookups issue a single HTTP GET to the public search endpoint with
comma-separated terms and JSON output, and store the raw response bytes in
the cache directory keyed by a content hash of the query, so cache hits are
byte-identical to the original network responses.  Offline mode serves the
cache only and never opens a network connection.  Failures (network errors
online, cache misses offline) are non-fatal: the result simply carries no
matches.
"""

from __future__ import annotations

import hashlib
import json
import time
import warnings
from dataclasses import dataclass
from pathlib import Path

OEIS_SEARCH_URL = "https://oeis.org/search"
MIN_QUERY_TERMS = 6
RATE_LIMIT_SECONDS = 1.0

_last_request_time = 0.0


@dataclass(frozen=True)
class OeisResult:
    """Outcome of a lookup: the queried prefix and any matches found."""

    query_terms: tuple
    matches: tuple  # pairs (A-number, name)
    source: str  # "cache", "network", or "none" when nothing was found

    @property
    def identified(self) -> bool:
        return bool(self.matches)

    def to_text(self) -> str:
        if not self.matches:
            return "unidentified"
        lines = [f"{number}: {name}" for number, name in self.matches]
        lines.append(f"({len(self.matches)} matches, from {self.source})")
        return "\n".join(lines)


def query_string(terms) -> str:
    return ",".join(str(int(t)) for t in terms)


def cache_key(terms) -> str:
    return hashlib.sha256(query_string(terms).encode("ascii")).hexdigest()


def cache_path(cache_dir, terms) -> Path:
    return Path(cache_dir) / f"{cache_key(terms)}.json"


def parse_response(raw: bytes) -> tuple:
    """Extract (A-number, name) pairs from a search response body."""
    data = json.loads(raw.decode("utf-8"))
    if isinstance(data, dict):
        entries = data.get("results") or []
    elif isinstance(data, list):
        entries = data
    else:
        entries = []
    matches = []
    for entry in entries:
        if not isinstance(entry, dict) or "number" not in entry:
            continue
        matches.append(
            (f"A{int(entry['number']):06d}", str(entry.get("name", "")))
        )
    return tuple(matches)


def _rate_limit():
    global _last_request_time
    wait = _last_request_time + RATE_LIMIT_SECONDS - time.monotonic()
    if wait > 0:
        time.sleep(wait)
    _last_request_time = time.monotonic()


def _fetch(terms, timeout: float) -> bytes:
    import requests

    _rate_limit()
    response = requests.get(
        OEIS_SEARCH_URL,
        params={"q": query_string(terms), "fmt": "json"},
        timeout=timeout,
    )
    response.raise_for_status()
    return response.content


def oeis_lookup(terms, mode: str = "offline", cache_dir=".oeis-cache",
                timeout: float = 10.0) -> OeisResult:
    """Look up an integer-sequence prefix.

    mode "online" queries the network on a cache miss (rate-limited to one
    request per second); mode "offline" serves the cache only.  Either way a
    lookup that produces nothing is reported with an empty match list.
    """
    terms = tuple(int(t) for t in terms)
    if mode not in ("offline", "online"):
        raise ValueError(f"unknown mode {mode!r}")
    if len(terms) < MIN_QUERY_TERMS:
        warnings.warn(
            f"query has {len(terms)} terms; at least {MIN_QUERY_TERMS} are "
            "recommended for a meaningful match",
            stacklevel=2,
        )
    path = cache_path(cache_dir, terms)
    if path.is_file():
        return OeisResult(terms, parse_response(path.read_bytes()), "cache")
    if mode == "offline":
        return OeisResult(terms, (), "none")
    try:
        raw = _fetch(terms, timeout)
    except Exception:
        return OeisResult(terms, (), "none")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(raw)
    return OeisResult(terms, parse_response(raw), "network")

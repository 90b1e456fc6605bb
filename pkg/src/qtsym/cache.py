"""Persistent basis cache: append-only JSON lines, one record per element.

A record stores one orthogonal-basis element ("P") or its dual
normalization ("Q") together with its power-sum expansion.  Loading feeds
records into the in-memory domain caches; saving appends only elements the
file does not hold yet, so a cache file only ever grows and concurrent
readers never see a half-written prefix.  A torn final record (crash while
appending) is detected on load and the file is truncated back to the last
complete record.
"""

import json
import os

from .symfunc import SymFunc, cached_entries, install_cache_entry

CACHE_ENV = "QTSYM_CACHE"

_BASES = ("P", "Q")


def resolve_cache_path(flag_value: str | None) -> str | None:
    """Explicit flag wins, then the environment, then no cache at all."""
    if flag_value:
        return flag_value
    return os.environ.get(CACHE_ENV) or None


def _record_line(basis: str, parts, func: SymFunc) -> str:
    record = {
        "basis": basis,
        "partition": list(parts),
        "function": func.to_json(),
    }
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _parse_record(line: str):
    record = json.loads(line)
    basis = record["basis"]
    if basis not in _BASES:
        raise ValueError(f"unknown basis {basis!r}")
    parts = tuple(int(p) for p in record["partition"])
    func = SymFunc.from_json(record["function"])
    return basis, parts, func


def _scan(path: str):
    """Split the file into parsed records and the byte length of the
    longest valid prefix."""
    records = []
    good = 0
    with open(path, "rb") as handle:
        for raw in handle:
            if not raw.endswith(b"\n"):
                break
            try:
                records.append(_parse_record(raw.decode("utf-8")))
            except (ValueError, KeyError, TypeError, UnicodeDecodeError):
                break
            good += len(raw)
    return records, good


def load_cache(path: str) -> int:
    """Install every persisted element, truncating a corrupt tail."""
    if not os.path.exists(path):
        return 0
    records, good = _scan(path)
    if good < os.path.getsize(path):
        with open(path, "r+b") as handle:
            handle.truncate(good)
    for basis, parts, func in records:
        install_cache_entry(basis, parts, func)
    return len(records)


def save_cache(path: str) -> int:
    """Append in-memory elements the file does not hold; single writer."""
    held = set()
    if os.path.exists(path):
        records, _ = _scan(path)
        held = {(basis, parts) for basis, parts, _ in records}
    fresh = [
        (basis, parts, func)
        for basis, parts, func in cached_entries()
        if (basis, parts) not in held
    ]
    if fresh:
        with open(path, "a", encoding="utf-8") as handle:
            for basis, parts, func in fresh:
                handle.write(_record_line(basis, parts, func) + "\n")
    return len(fresh)


def inspect_cache(path: str) -> dict:
    """Read-only summary; reports rather than repairs a corrupt tail."""
    if not os.path.exists(path):
        return {
            "path": path,
            "exists": False,
            "records": 0,
            "bases": {"P": 0, "Q": 0},
            "max_weight": 0,
            "corrupt_tail": False,
        }
    records, good = _scan(path)
    bases = {"P": 0, "Q": 0}
    max_weight = 0
    for basis, parts, _ in records:
        bases[basis] += 1
        max_weight = max(max_weight, sum(parts))
    return {
        "path": path,
        "exists": True,
        "records": len(records),
        "bases": bases,
        "max_weight": max_weight,
        "corrupt_tail": good < os.path.getsize(path),
    }


def clear_cache(path: str) -> bool:
    """Remove the cache file; True if there was one."""
    if os.path.exists(path):
        os.remove(path)
        return True
    return False

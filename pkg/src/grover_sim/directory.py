"""Phone-directory demo: unsorted records searched through the oracle."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .engine import AUTO, RunConfig, run
from .state import MAX_QUBITS


class DirectoryError(ValueError):
    """Bad input file or lookup key; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class DirectoryRecord:
    key: str
    value: str
    index: int


def parse_directory(text: str) -> list[DirectoryRecord]:
    """Parse ``name,number`` lines; blank lines are skipped, CRLF accepted."""
    records = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if "," not in line:
            raise DirectoryError(f"expected 'name,number', got {line!r}", lineno)
        key, value = line.split(",", 1)
        records.append(DirectoryRecord(key.strip(), value.strip(), len(records)))
    if not records:
        raise DirectoryError("directory is empty")
    if len(records) > 1 << MAX_QUBITS:
        raise DirectoryError(f"at most {1 << MAX_QUBITS} records supported, got {len(records)}")
    return records


def load_directory(path: str | Path) -> list[DirectoryRecord]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise DirectoryError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data[: exc.start].count(b"\n") + 1
        raise DirectoryError("not valid UTF-8", line) from exc
    return parse_directory(text)


def qubits_for(count: int) -> int:
    """Smallest n >= 1 with 2**n >= count; indices past ``count`` stay unmarked."""
    return max(1, (count - 1).bit_length())


def find_index(records: list[DirectoryRecord], key: str) -> int:
    hits = [r.index for r in records if r.key == key]
    if not hits:
        raise DirectoryError(f"name {key!r} not in directory")
    if len(hits) > 1:
        raise DirectoryError(f"name {key!r} appears {len(hits)} times (records {hits})")
    return hits[0]


def search_directory(records: list[DirectoryRecord], key: str, seed: int = 0, retries: int = 0) -> dict:
    """Look ``key`` up with AUTO iterations and one measurement per attempt.

    A miss is reported as ``found: false``; ``retries`` extra independent
    attempts (seeds ``seed + 1``, ``seed + 2``, ...) each pay their own queries.
    """
    target = find_index(records, key)
    n = qubits_for(len(records))
    queries = 0
    attempts = 0
    for attempt in range(retries + 1):
        attempts += 1
        res = run(RunConfig(n=n, marked=target, iterations=AUTO, seed=seed + attempt, sample_count=1))
        queries += res.oracle_queries
        sampled = res.samples[0]
        if sampled == target:
            break
    found = sampled == target
    return {
        "name": key,
        "found": found,
        "number": records[target].value if found else None,
        "sampled_index": sampled,
        "success_prob": res.final_success_prob,
        "iterations": res.iterations_executed,
        "attempts": attempts,
        "oracle_queries": queries,
        "records": len(records),
        "padded_size": 1 << n,
        "classical_expected_queries": len(records) / 2,
    }

"""Resumable, seeded experiment runner with an append-only JSONL record log.

Each (osculation type, index) pair yields exactly one transversal record.
Non-transversal or degenerate samples are resampled with the next attempt
number and logged to a sidecar file together with solver errors.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np
from filelock import FileLock

from ..combinat import SchubertProblemSpec, complex_count
from ..errors import DegeneracyError, ResourceError
from ..groebner import Budgets, solve_instance
from ..schubert import OsculatingInstance, OsculationType, osculation_type
from .sampling import derive_seed, sample_instance

__all__ = [
    "ExperimentConfig",
    "InstanceRecord",
    "run_experiment",
    "read_records",
    "read_sidecar",
    "sidecar_path",
    "RECORD_KEYS",
    "MAX_ATTEMPTS",
]

log = logging.getLogger(__name__)

MAX_ATTEMPTS = 20
RECORD_KEYS = (
    "problem",
    "k",
    "n",
    "instance_index",
    "derived_seed",
    "osculation_type",
    "points",
    "num_real",
    "num_complex",
    "transversal",
    "elapsed_ms",
    "chart",
)


@dataclass(frozen=True)
class InstanceRecord:
    problem: str
    k: int
    n: int
    instance_index: int
    derived_seed: int
    osculation_type: tuple
    points: tuple  # text forms, in the problem's expanded condition order
    num_real: int
    num_complex: int
    transversal: bool
    elapsed_ms: int | None
    chart: str

    def __post_init__(self):
        if self.num_real > self.num_complex:
            raise ValueError("num_real exceeds num_complex")
        if self.transversal and (self.num_complex - self.num_real) % 2:
            raise ValueError("parity violated in a transversal record")

    def to_json(self) -> str:
        d = asdict(self)
        d["osculation_type"] = list(self.osculation_type)
        d["points"] = list(self.points)
        return json.dumps({key: d[key] for key in RECORD_KEYS}, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "InstanceRecord":
        d = json.loads(line)
        if set(d) != set(RECORD_KEYS):
            raise ValueError(f"record keys {sorted(d)} differ from {sorted(RECORD_KEYS)}")
        d["osculation_type"] = tuple(d["osculation_type"])
        d["points"] = tuple(d["points"])
        return cls(**d)

    def instance(self):
        """Rebuild the osculating instance this record describes."""
        problem = SchubertProblemSpec.parse(self.problem)
        return OsculatingInstance(problem, tuple(zip(problem.expanded(), self.points)))


@dataclass
class ExperimentConfig:
    """What to run and where to log it.

    ``timing="wall"`` stores solve times in ``elapsed_ms``; the default
    ``"off"`` stores null so that logs are a pure function of the config.
    ``types`` restricts the run to some osculation types (default: all).
    """

    problem: SchubertProblemSpec
    instances_per_type: int
    master_seed: int = 0
    point_range: int = 10
    output_path: str | os.PathLike = "records.jsonl"
    budgets: Budgets = field(default_factory=Budgets)
    workers: int = 1
    timing: str = "off"
    types: tuple | None = None
    max_attempts: int = MAX_ATTEMPTS

    def __post_init__(self):
        if isinstance(self.problem, str):
            self.problem = SchubertProblemSpec.parse(self.problem)
        if isinstance(self.budgets, dict):
            self.budgets = Budgets(**self.budgets)
        if self.instances_per_type < 1:
            raise ValueError("instances_per_type must be at least 1")
        if self.point_range < 2:
            raise ValueError("point_range must be at least 2")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be a 64-bit nonnegative integer")
        if self.timing not in ("off", "wall"):
            raise ValueError("timing must be 'off' or 'wall'")
        if self.types is not None:
            self.types = tuple(tuple(int(r) for r in t) for t in self.types)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = set(cls.__dataclass_fields__)
        extra = set(d) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**d)

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def osculation_types(self) -> list[OsculationType]:
        all_types = OsculationType.all_for(self.problem)
        if self.types is None:
            return all_types
        wanted = {tuple(t) for t in self.types}
        chosen = [t for t in all_types if t.as_tuple() in wanted]
        if len(chosen) != len(wanted):
            raise ValueError(f"inadmissible osculation types requested: {sorted(wanted)}")
        return chosen


def sidecar_path(output_path) -> Path:
    p = Path(output_path)
    return p.with_name(p.name + ".discards.jsonl")


@dataclass(frozen=True)
class _Job:
    problem_text: str
    type_counts: tuple
    index: int
    master_seed: int
    point_range: int
    budgets: Budgets
    timing: str
    expected: int
    max_attempts: int


def _run_job(job: _Job):
    """Solve until a transversal sample is found; returns (record or None, side entries)."""
    problem = SchubertProblemSpec.parse(job.problem_text)
    otype = OsculationType.of(problem, job.type_counts)
    side = []
    for attempt in range(job.max_attempts):
        seed = derive_seed(job.master_seed, otype, job.index, attempt)
        rng = np.random.default_rng(seed)
        inst = sample_instance(problem, otype, rng, job.point_range)
        points = tuple(t.to_text() for _, t in inst.assignment)
        entry = {
            "kind": "discard",
            "osculation_type": list(job.type_counts),
            "instance_index": job.index,
            "attempt": attempt,
            "derived_seed": seed,
            "points": list(points),
        }
        start = time.perf_counter()
        try:
            report = solve_instance(inst, expected=job.expected, seed=seed, budgets=job.budgets)
        except DegeneracyError as exc:
            side.append({**entry, "reason": "degenerate", "detail": str(exc)})
            continue
        except ResourceError as exc:
            side.append({**entry, "kind": "error", "reason": "resource", "detail": str(exc)})
            return None, side
        elapsed = int(round((time.perf_counter() - start) * 1000))
        if not report.transversal:
            side.append({**entry, "reason": report.reason})
            continue
        assert osculation_type(inst).as_tuple() == job.type_counts
        record = InstanceRecord(
            problem=job.problem_text,
            k=problem.k,
            n=problem.n,
            instance_index=job.index,
            derived_seed=seed,
            osculation_type=job.type_counts,
            points=points,
            num_real=report.num_real,
            num_complex=report.num_complex,
            transversal=True,
            elapsed_ms=elapsed if job.timing == "wall" else None,
            chart=report.chart_used,
        )
        return record, side
    side.append({
        "kind": "error",
        "osculation_type": list(job.type_counts),
        "instance_index": job.index,
        "reason": "resample-limit",
        "detail": f"no transversal sample in {job.max_attempts} attempts",
    })
    return None, side


def read_records(path, repair: bool = False) -> list[InstanceRecord]:
    """Parse a record log. A truncated final line is dropped (and cut off when ``repair``)."""
    path = Path(path)
    if not path.exists():
        return []
    data = path.read_bytes()
    lines = data.split(b"\n")
    good_end = 0
    records = []
    pos = 0
    for i, raw in enumerate(lines):
        end = pos + len(raw) + 1
        last = i == len(lines) - 1
        if raw.strip():
            try:
                if last:
                    raise ValueError("line without terminating newline")
                records.append(InstanceRecord.from_json(raw.decode()))
                good_end = end
            except ValueError:
                if not last:
                    raise ValueError(f"{path}: corrupt record on line {i + 1}")
                log.warning("dropping truncated final line of %s", path)
        elif not last:
            good_end = end
        pos = end
    if repair and good_end < len(data):
        with open(path, "r+b") as fh:
            fh.truncate(good_end)
    return records


def read_sidecar(path) -> list[dict]:
    p = sidecar_path(path)
    if not p.exists():
        return []
    out = []
    for line in p.read_text().splitlines():
        try:
            out.append(json.loads(line))
        except ValueError:
            continue
    return out


def _jobs(config: ExperimentConfig, done: set) -> Iterator[_Job]:
    text = config.problem.to_text()
    expected = complex_count(config.problem)
    for otype in config.osculation_types():
        for index in range(config.instances_per_type):
            key = (otype.as_tuple(), index)
            if key in done:
                continue
            yield _Job(
                text, otype.as_tuple(), index, config.master_seed, config.point_range,
                config.budgets, config.timing, expected, config.max_attempts,
            )


def run_experiment(config: ExperimentConfig, stop_after: int | None = None, progress=None) -> list[InstanceRecord]:
    """Run (or resume) an experiment and return every record in the log.

    Records are appended in a fixed order (types descending, indices
    ascending) whatever the number of workers, so logs are reproducible
    byte for byte. ``stop_after`` ends the run after that many new records
    (used to exercise resumption); ``progress`` is called with each new record.
    """
    out_path = Path(config.output_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    lock = FileLock(str(out_path) + ".lock")
    with lock:
        existing = read_records(out_path, repair=True)
    text = config.problem.to_text()
    for rec in existing:
        if rec.problem != text:
            raise ValueError(f"{out_path} holds records for {rec.problem}, not {text}")
    done = {(tuple(r.osculation_type), r.instance_index) for r in existing}
    jobs = list(_jobs(config, done))
    new = 0
    side_file = sidecar_path(out_path)

    def consume(results):
        nonlocal new
        for record, side in results:
            with lock:
                if side:
                    with open(side_file, "a") as fh:
                        for entry in side:
                            fh.write(json.dumps(entry, separators=(",", ":")) + "\n")
                if record is not None:
                    with open(out_path, "a") as fh:
                        fh.write(record.to_json() + "\n")
                        fh.flush()
                        os.fsync(fh.fileno())
            if record is not None:
                new += 1
                if progress is not None:
                    progress(record)
            if stop_after is not None and new >= stop_after:
                return

    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            consume(pool.map(_run_job, jobs))
            pool.shutdown(cancel_futures=True)
    else:
        consume(_run_job(job) for job in jobs)
    return read_records(out_path)

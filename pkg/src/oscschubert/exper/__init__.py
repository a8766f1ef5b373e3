"""Seeded experiments: sampling, the resumable runner, tables, structure checks, CLI."""

from .runner import MAX_ATTEMPTS, RECORD_KEYS, ExperimentConfig, InstanceRecord, read_records, read_sidecar, run_experiment, sidecar_path
from .sampling import derive_seed, sample_instance
from .structures import LawResult, StructureReport, check_structures, lower_bound_shape
from .tables import FORMATS, FrequencyTable, render, table_from_csv, table_from_json, tabulate

__all__ = [
    "sample_instance",
    "derive_seed",
    "ExperimentConfig",
    "InstanceRecord",
    "run_experiment",
    "read_records",
    "read_sidecar",
    "sidecar_path",
    "RECORD_KEYS",
    "MAX_ATTEMPTS",
    "FrequencyTable",
    "tabulate",
    "render",
    "table_from_csv",
    "table_from_json",
    "FORMATS",
    "LawResult",
    "StructureReport",
    "check_structures",
    "lower_bound_shape",
]

"""Osculating flags, Schubert cell charts, instance systems and Wronskians."""

from .charts import Chart, chart_matrix, flag_annihilator, flag_matrix
from .instances import (
    InstanceSystem,
    OsculatingInstance,
    OsculationType,
    choose_anchors,
    condition_equations,
    instance_system,
    osculation_type,
)
from .points import INF, Mobius, OsculationPoint
from .wronski import row_polynomials, wronskian, wronskian_symbolic

__all__ = [
    "OsculationPoint",
    "INF",
    "Mobius",
    "Chart",
    "chart_matrix",
    "flag_matrix",
    "flag_annihilator",
    "OsculatingInstance",
    "OsculationType",
    "osculation_type",
    "condition_equations",
    "choose_anchors",
    "InstanceSystem",
    "instance_system",
    "wronskian",
    "wronskian_symbolic",
    "row_polynomials",
]

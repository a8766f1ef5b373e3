"""Exact real solutions of osculating Schubert problems.

Subpackages:

* ``combinat``  partitions, tableaux, sign-imbalance, Littlewood-Richardson counts, nu(k,n,r)
* ``exactalg``  rationals, Q(i), univariate and sparse multivariate polynomials, Sturm counts
* ``schubert``  osculating flags, Schubert cell charts, instance systems, Wronskians
* ``groebner``  Buchberger bases over Q, eliminants, shape position, solution counts
* ``hookfam``   the hook family and its factorization correspondence
* ``exper``     seeded sampling, the resumable experiment runner, tables, CLI
"""

from . import combinat, exactalg, exper, groebner, hookfam, schubert
from .combinat import Partition, SchubertProblemSpec, complex_count, nu, sign_imbalance
from .errors import DegeneracyError, ResourceError
from .groebner import SolveReport, solve_instance
from .hookfam import HookInstance, predicted_real_count
from .schubert import OsculatingInstance, OsculationPoint, OsculationType

__version__ = "0.1.0"

__all__ = [
    "combinat",
    "exactalg",
    "schubert",
    "groebner",
    "hookfam",
    "exper",
    "Partition",
    "SchubertProblemSpec",
    "complex_count",
    "nu",
    "sign_imbalance",
    "OsculationPoint",
    "OsculatingInstance",
    "OsculationType",
    "SolveReport",
    "solve_instance",
    "HookInstance",
    "predicted_real_count",
    "ResourceError",
    "DegeneracyError",
]

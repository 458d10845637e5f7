"""Walkway placement and travel-time diameter.

A walkway ``[a, b]`` lets a traveller move between its endpoints at speed
``v > 1``; elsewhere travel is at unit speed.  The package computes
travel-time diameters of point sets and places walkways minimizing them,
on the line and in the plane, plus red-blue variants (escalators,
elevators).
"""

from ._backend import COMPILED
from .geometry import (
    TAU,
    DegenerateWalkwayError,
    Point2,
    RedBlueSets,
    Speed,
    Walkway1,
    Walkway2,
    euclidean_diameter,
    red_blue_partition,
    time_distance_1d,
    time_distance_2d,
)
from .line import Candidate1D, Placement1, diameter_1d, locate_1d
from .qcp import (
    ContractViolationError,
    ImplicitQcProgram,
    NormSumConstraint,
    QcConstraint,
    QcProgram,
    SolveResult,
    solve_explicit,
    solve_implicit,
    solve_small,
)
from .disks import DiskIntersection, SuffixDiskIntersections
from .plane_diameter import (
    DiameterDecisionInput,
    TravelTimeDisk,
    decision_witness,
    diameter_2d,
    diameter_decision_2d,
)
from .plane_location import (
    Placement2,
    PlacementH,
    SourceDestPair,
    UnsupportedSpeedError,
    locate_approx,
    locate_horizontal_diameter,
    locate_horizontal_pairs,
)
from .variants import (
    DominanceVector,
    ElevatorSet,
    elevator_locate,
    escalator_locate,
    k_elevator_diameter,
    unidirectional_locate,
)

__version__ = "0.1.0"

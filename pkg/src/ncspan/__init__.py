"""Non-crossing geometric spanning trees whose leaves are exactly the blue points."""
from .geometry import (ExactPoint, Segment, Violation, euclid_length, orientation,
                       properly_cross, validate_general_position)
from .instance import (Color, FeasibilityReport, GeneralPositionViolation, InfeasibleInstance,
                       Instance, Status, check_feasibility, reduce_budget, uniform_instance)
from .trees import GeoTree, initial_geo_tree, prufer_decode, prufer_encode, tree_from_degrees
from .uncross import (CaseClass, CrossingEvent, IterationCapExceeded, Solution, SwapError,
                      SwapRecord, UncrossTrace, apply_swap, component_split, find_crossing,
                      solve, uncross)
from .verify import VerifyReport, enumerate_feasible_trees, oracle_check, verify

__all__ = [name for name in dir() if not name.startswith("_")]

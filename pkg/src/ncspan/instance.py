"""Bicolored point sets with per-red-point degree budgets."""
from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .geometry import ExactPoint, check_coordinates, validate_general_position


class GeneralPositionViolation(ValueError):
    def __init__(self, violation):
        super().__init__(f"input not in general position: {violation}")
        self.violation = violation


class InfeasibleInstance(ValueError):
    def __init__(self, report: "FeasibilityReport"):
        bound = report.blue_count + report.slack
        if report.status is Status.INFEASIBLE_LOW:
            msg = f"need at least 2 blue points, got {report.blue_count}"
        else:
            msg = (f"too many blue points: |B| = {report.blue_count} exceeds "
                   f"bound sum(f - 2) + 2 = {bound}")
        super().__init__(msg)
        self.report = report


class Color(str, enum.Enum):
    RED = "R"
    BLUE = "B"


class Status(enum.Enum):
    INFEASIBLE_LOW = "InfeasibleLow"
    EQUALITY = "Equality"
    STRICTLY_FEASIBLE = "StrictlyFeasible"
    INFEASIBLE_HIGH = "InfeasibleHigh"

    @property
    def feasible(self) -> bool:
        return self in (Status.EQUALITY, Status.STRICTLY_FEASIBLE)


@dataclass(frozen=True)
class FeasibilityReport:
    blue_count: int
    slack: int
    status: Status


@dataclass(frozen=True)
class Instance:
    """Red points first, then blue points.

    ``budget[i]`` is the degree budget of red vertex ``i``; blue vertices
    carry no budget.  Construction checks coordinates, budgets and general
    position but not the |B| bound, so infeasible instances can still be
    represented and reported on.
    """

    red: tuple[ExactPoint, ...]
    blue: tuple[ExactPoint, ...]
    budget: tuple[int, ...]
    points: tuple[ExactPoint, ...] = field(init=False, repr=False)

    def __init__(self, red: Sequence, blue: Sequence, budget: Sequence[int],
                 *, check_position: bool = True):
        red = tuple(ExactPoint(int(x), int(y)) for x, y in red)
        blue = tuple(ExactPoint(int(x), int(y)) for x, y in blue)
        budget = tuple(int(k) for k in budget)
        if len(budget) != len(red):
            raise ValueError(f"{len(red)} red points but {len(budget)} budgets")
        for i, k in enumerate(budget):
            if k < 2:
                raise ValueError(f"red point {i} has budget {k} < 2")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)
        object.__setattr__(self, "budget", budget)
        object.__setattr__(self, "points", red + blue)
        check_coordinates(self.points)
        if check_position:
            v = validate_general_position(self.points)
            if v is not None:
                raise GeneralPositionViolation(v)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def n_red(self) -> int:
        return len(self.red)

    @property
    def n_blue(self) -> int:
        return len(self.blue)

    def is_red(self, v: int) -> bool:
        return v < len(self.red)

    def color(self, v: int) -> Color:
        return Color.RED if v < len(self.red) else Color.BLUE

    def colors(self) -> list[Color]:
        return [Color.RED] * self.n_red + [Color.BLUE] * self.n_blue

    def f(self, v: int) -> int:
        assert self.is_red(v), f"vertex {v} is blue and has no budget"
        return self.budget[v]


def check_feasibility(inst: Instance) -> FeasibilityReport:
    nb = inst.n_blue
    slack = sum(k - 2 for k in inst.budget) + 2 - nb
    if nb < 2:
        status = Status.INFEASIBLE_LOW
    elif slack < 0:
        status = Status.INFEASIBLE_HIGH
    elif slack == 0:
        status = Status.EQUALITY
    else:
        status = Status.STRICTLY_FEASIBLE
    return FeasibilityReport(nb, slack, status)


def reduce_budget(inst: Instance) -> list[int]:
    """Lower budgets until sum(f' - 2) + 2 == |B|.

    The largest remaining budget is decremented first, ties going to the
    lowest vertex index.  Never drops a budget below 2 on feasible input.
    """
    report = check_feasibility(inst)
    if not report.status.feasible:
        raise InfeasibleInstance(report)
    reduced = list(inst.budget)
    heap = [(-k, i) for i, k in enumerate(reduced)]
    heapq.heapify(heap)
    for _ in range(report.slack):
        _, top = heapq.heappop(heap)
        reduced[top] -= 1
        assert reduced[top] >= 2
        heapq.heappush(heap, (-reduced[top], top))
    return reduced


def uniform_instance(red: Sequence, blue: Sequence, k: int, **kw) -> Instance:
    if k < 2:
        raise ValueError(f"uniform degree bound must be >= 2, got {k}")
    return Instance(red, blue, [k] * len(red), **kw)

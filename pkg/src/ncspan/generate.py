"""Seeded random instances in general position."""
from __future__ import annotations

import random
import re

import numpy as np

from .geometry import COORD_LIMIT, validate_general_position
from .instance import Instance

MAX_REJECTIONS = 1000


class GenerationError(ValueError):
    pass


def parse_f_mode(mode: str):
    """``uniform:K``, ``random:MIN..MAX`` or ``equality``."""
    if mode == "equality":
        return ("equality",)
    if m := re.fullmatch(r"uniform:(\d+)", mode):
        k = int(m.group(1))
        if k < 2:
            raise ValueError(f"uniform degree must be >= 2, got {k}")
        return ("uniform", k)
    if m := re.fullmatch(r"random:(\d+)\.\.(\d+)", mode):
        lo, hi = int(m.group(1)), int(m.group(2))
        if not 2 <= lo <= hi:
            raise ValueError(f"random range needs 2 <= MIN <= MAX, got {lo}..{hi}")
        return ("random", lo, hi)
    raise ValueError(f"unknown f-mode {mode!r}")


def random_points(n: int, bbox: int, rng: random.Random) -> list[tuple[int, int]]:
    """``n`` integer points in ``[0, bbox]^2``, no three collinear.

    Each candidate is checked against every pair of accepted points and
    redrawn on failure; 1000 consecutive failures abort.
    """
    if not 0 < bbox <= COORD_LIMIT:
        raise GenerationError(f"bbox must be in 1..2**30, got {bbox}")
    pts: list[tuple[int, int]] = []
    acc = np.empty((0, 2), dtype=np.int64)
    for _ in range(n):
        for _attempt in range(MAX_REJECTIONS):
            p = (rng.randint(0, bbox), rng.randint(0, bbox))
            d = acc - np.asarray(p, dtype=np.int64)
            if len(d):
                if not np.all(d.any(axis=1)):
                    continue
                cross = np.outer(d[:, 0], d[:, 1]) - np.outer(d[:, 1], d[:, 0])
                if np.count_nonzero(cross == 0) > len(d):  # diagonal is always zero
                    continue
            break
        else:
            raise GenerationError(
                f"gave up after {MAX_REJECTIONS} rejections; bbox {bbox} too small for {n} points")
        pts.append(p)
        acc = np.vstack([acc, np.asarray(p, dtype=np.int64)[None]])
    assert validate_general_position(pts) is None
    return pts


def random_budgets(n_red: int, n_blue: int, mode, rng: random.Random) -> list[int]:
    if mode[0] == "uniform":
        return [mode[1]] * n_red
    if mode[0] == "random":
        return [rng.randint(mode[1], mode[2]) for _ in range(n_red)]
    # equality: hand out |B| - 2 extra degree units among the red points
    if n_red == 0:
        if n_blue != 2:
            raise GenerationError("equality mode without red points needs exactly 2 blue points")
        return []
    budget = [2] * n_red
    for _ in range(n_blue - 2):
        budget[rng.randrange(n_red)] += 1
    return budget


def generate(n_red: int, n_blue: int, f_mode: str, bbox: int, seed: int) -> Instance:
    if n_red < 0:
        raise GenerationError(f"n-red must be >= 0, got {n_red}")
    if n_blue < 2:
        raise GenerationError(f"n-blue must be >= 2, got {n_blue}")
    mode = parse_f_mode(f_mode)
    rng = random.Random(seed)
    pts = random_points(n_red + n_blue, bbox, rng)
    budget = random_budgets(n_red, n_blue, mode, rng)
    return Instance(pts[:n_red], pts[n_red:], budget, check_position=False)

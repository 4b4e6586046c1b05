"""
Seeded random instances.

Every draw comes from numpy's PCG64 bit generator seeded with cfg.seed, so a
config always produces the same instance. Items are named x0.. for X and
y0.. for Y, X's first. One attempt draws, item by item in that order,
value_to_x then value_to_y as grid indices; conditions that the raw draw
can miss are retried up to MAX_ATTEMPTS times.
"""
import logging
from fractions import Fraction

import numpy as np

from exchanges.exceptions import GenerationError
from exchanges.models import Instance, Item, PlayerId
from .models import Condition

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 10_000


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def positive_rational(rng, max_part=50):
    """Random factor num/den with both parts in 1..max_part."""
    return Fraction(int(rng.integers(1, max_part + 1)), int(rng.integers(1, max_part + 1)))


class _Grid:
    def __init__(self, cfg):
        self.lo, self.hi = cfg.value_range
        self.step = Fraction(1, cfg.value_grid)
        self.size = int((self.hi - self.lo) * cfg.value_grid) + 1

    def draw(self, rng, low_index=0):
        """Grid value with index in [low_index, size)."""
        return self.lo + self.step * int(rng.integers(low_index, self.size))

    def index_above(self, value):
        """Smallest grid index whose value is strictly greater than value."""
        if value < self.lo:
            return 0
        return int((value - self.lo) / self.step) + 1


def _names(cfg):
    return [(f"x{i}", PlayerId.X) for i in range(cfg.p)] + [(f"y{j}", PlayerId.Y) for j in range(cfg.q)]


def _draw_unconstrained(cfg, grid, rng):
    return [Item(name, owner, grid.draw(rng), grid.draw(rng)) for name, owner in _names(cfg)]


def _draw_identical(cfg, grid, rng):
    items = []
    for name, owner in _names(cfg):
        value = grid.draw(rng)
        items.append(Item(name, owner, value, value))
    return items


def _draw_dominance(cfg, grid, rng):
    """Owner gets the larger of two draws; a tie anywhere spoils the attempt."""
    items = []
    for name, owner in _names(cfg):
        a, b = grid.draw(rng), grid.draw(rng)
        if a == b:
            return None
        high, low = max(a, b), min(a, b)
        if owner == PlayerId.X:
            items.append(Item(name, owner, high, low))
        else:
            items.append(Item(name, owner, low, high))
    return items


def _draw_insufficient(cfg, grid, rng):
    """
    Y's items are drawn first; X's own items are then drawn above the sum of
    X's valuations of Y's items. The attempt fails when that sum leaves no
    grid value below hi.
    """
    if cfg.p == 0:
        raise GenerationError("Insufficient compensation needs X to own at least one item.")
    names = _names(cfg)
    y_items = [Item(name, owner, grid.draw(rng), grid.draw(rng)) for name, owner in names[cfg.p:]]
    compensation = sum((item.value_to_x for item in y_items), Fraction(0))
    low_index = grid.index_above(compensation)
    if low_index >= grid.size:
        return None
    x_items = [Item(name, owner, grid.draw(rng, low_index), grid.draw(rng)) for name, owner in names[:cfg.p]]
    return x_items + y_items


_DRAWS = {
    Condition.UNCONSTRAINED: _draw_unconstrained,
    Condition.IDENTICAL_VALUATION: _draw_identical,
    Condition.MUTUAL_DOMINANCE: _draw_dominance,
    Condition.INSUFFICIENT_COMPENSATION: _draw_insufficient,
}


def generate(cfg):
    rng = make_rng(cfg.seed)
    grid = _Grid(cfg)
    draw = _DRAWS[cfg.condition]
    for attempt in range(1, MAX_ATTEMPTS + 1):
        items = draw(cfg, grid, rng)
        if items is not None:
            if attempt > 1:
                logger.debug("Seed %d met %s after %d attempts.", cfg.seed, cfg.condition, attempt)
            return Instance(tuple(items))
    raise GenerationError(
        f"No {cfg.condition} instance with p={cfg.p}, q={cfg.q} in "
        f"{cfg.value_range[0]}..{cfg.value_range[1]} after {MAX_ATTEMPTS} attempts (seed {cfg.seed})."
    )

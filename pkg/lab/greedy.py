import logging

from exchanges.models import Exchange, PlayerId, marginal_utilities
from .models import GreedyResult, GreedyStep

logger = logging.getLogger(__name__)


def _best_swap(instance, x_holds, y_holds):
    """Profitable one-for-one swap with the largest product of per-step gains."""
    items = instance.items
    best = None
    for i in sorted(x_holds):
        for j in sorted(y_holds):
            gain_x = items[j].value_to_x - items[i].value_to_x
            gain_y = items[i].value_to_y - items[j].value_to_y
            if gain_x <= 0 or gain_y <= 0:
                continue
            # Strict comparison keeps the first swap in canonical order on ties.
            if best is None or gain_x * gain_y > best[0]:
                best = (gain_x * gain_y, i, j, gain_x, gain_y)
    return best


def greedy_one_for_one(instance):
    """
    Trade single items while both players strictly gain.

    Holdings are tracked across steps, so an item can move more than once.
    The reported point is the net exchange against the original ownership.
    Each step strictly raises both players' totals, so the loop ends.
    """
    x_holds = set(instance.indices_of(PlayerId.X))
    y_holds = set(instance.indices_of(PlayerId.Y))
    x_owned, y_owned = instance.owned_mask(PlayerId.X), instance.owned_mask(PlayerId.Y)
    trace = []
    exchange = Exchange(0, 0)

    while (swap := _best_swap(instance, x_holds, y_holds)) is not None:
        _, i, j, gain_x, gain_y = swap
        x_holds.remove(i)
        y_holds.remove(j)
        x_holds.add(j)
        y_holds.add(i)
        y_mask = sum(1 << k for k in y_holds)
        x_mask = sum(1 << k for k in x_holds)
        exchange = Exchange(give_x=x_owned & y_mask, give_y=y_owned & x_mask)
        point = marginal_utilities(instance, exchange)
        trace.append(GreedyStep(instance.items[i].name, instance.items[j].name, gain_x, gain_y, point))
        logger.debug("Greedy step %d: %s for %s, now at %s.", len(trace), instance.items[i].name, instance.items[j].name, point)

    return GreedyResult(point=marginal_utilities(instance, exchange), exchange=exchange, trace=tuple(trace))

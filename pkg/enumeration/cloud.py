import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from django.conf import settings

from exchanges.exceptions import EnumerationLimitExceeded
from exchanges.models import Exchange, OutcomePoint, PlayerId
from .models import PointCloud

logger = logging.getLogger(__name__)


def resolve_limit(limit=None):
    return settings.BARTER_LIMIT if limit is None else limit


def resolve_workers(workers=None):
    return max(1, settings.BARTER_WORKERS if workers is None else workers)


def check_limit(instance, limit=None, force=False):
    limit = resolve_limit(limit)
    if len(instance) <= limit:
        return
    if not force:
        raise EnumerationLimitExceeded(len(instance), limit)
    logger.warning("Enumerating 2^%d exchanges past the limit of %d items (forced).", len(instance), limit)


def subset_sums(values):
    """sums[mask] = sum of values[i] over the set bits of mask, built incrementally."""
    sums = [0] * (1 << len(values))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + values[low.bit_length() - 1]
    return sums


def _common_denominator(instance):
    return math.lcm(*(v.denominator for item in instance.items for v in (item.value_to_x, item.value_to_y))) if instance.items else 1


def _side_tables(instance, player, scale):
    """Subset sums of both players' valuations and the global mask, per local subset of player's items."""
    indices = instance.indices_of(player)
    items = [instance.items[i] for i in indices]
    to_x = subset_sums([int(item.value_to_x * scale) for item in items])
    to_y = subset_sums([int(item.value_to_y * scale) for item in items])
    masks = subset_sums([1 << i for i in indices])
    return to_x, to_y, masks


def _enumerate_chunk(task):
    """Partial cloud for a slice of X's subsets against every subset of Y's items."""
    x_loss, y_gain, x_masks, x_gain_all, y_loss_all, y_masks = task
    partial = {}
    for loss_x, gain_y, give_x in zip(x_loss, y_gain, x_masks):
        for gain_x, loss_y, give_y in zip(x_gain_all, y_loss_all, y_masks):
            key = (gain_x - loss_x, gain_y - loss_y)
            bucket = partial.get(key)
            if bucket is None:
                partial[key] = [(give_x, give_y)]
            else:
                bucket.append((give_x, give_y))
    return partial


def _merge_partials(target, partial):
    for key, exchanges in partial.items():
        bucket = target.get(key)
        if bucket is None:
            target[key] = exchanges
        else:
            bucket.extend(exchanges)
    return target


def enumerate_cloud(instance, limit=None, force=False, workers=None):
    """
    Evaluate all 2^(p+q) exchanges of instance and group them by outcome point.

    X's subsets are split into contiguous slices evaluated independently; the
    partial clouds are unions keyed by exact coordinates, so the result does
    not depend on the number of workers.
    """
    check_limit(instance, limit, force)
    workers = resolve_workers(workers)
    total = 1 << len(instance)
    logger.info("Enumerating %d exchanges (p=%d, q=%d) on %d worker(s).", total, instance.p, instance.q, workers)

    # Work in integers over a common denominator; convert back once per point.
    scale = _common_denominator(instance)
    x_loss, y_gain, x_masks = _side_tables(instance, PlayerId.X, scale)
    x_gain, y_loss, y_masks = _side_tables(instance, PlayerId.Y, scale)

    chunk_count = min(len(x_masks), workers * 4) if workers > 1 else 1
    step = -(-len(x_masks) // chunk_count)
    tasks = [
        (x_loss[start:start + step], y_gain[start:start + step], x_masks[start:start + step], x_gain, y_loss, y_masks)
        for start in range(0, len(x_masks), step)
    ]

    merged = {}
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for partial in executor.map(_enumerate_chunk, tasks):
                _merge_partials(merged, partial)
    else:
        for task in tasks:
            _merge_partials(merged, _enumerate_chunk(task))

    cloud = PointCloud(
        {
            OutcomePoint(Fraction(kx, scale), Fraction(ky, scale)): [Exchange(gx, gy) for gx, gy in exchanges]
            for (kx, ky), exchanges in merged.items()
        },
        total,
    )
    logger.info("%d exchanges collapse onto %d distinct points.", total, len(cloud))
    return cloud


def collapse_ratio(cloud):
    if cloud.total_exchanges == 0:
        raise ValueError("Collapse ratio of an empty cloud is undefined.")
    return Fraction(len(cloud), cloud.total_exchanges)


def point_of(cloud):
    """Map every exchange in the cloud back to its outcome point."""
    return {exchange: point for point, exchanges in cloud.exchanges.items() for exchange in exchanges}

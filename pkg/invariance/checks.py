import logging

from enumeration.cloud import enumerate_cloud, point_of
from enumeration.frontier import periphery
from exchanges.exceptions import NoTrade, PreconditionError
from exchanges.models import PlayerId, acceptable, marginal_utilities
from solvers.rules import nash_solution
from .models import ScaleInvarianceReport, TranslationFlipReport, ZeroItemReport
from .transforms import apply_scale, apply_translation

logger = logging.getLogger(__name__)


def nash_exchanges(cloud):
    try:
        return nash_solution(periphery(cloud)).exchange_set()
    except NoTrade:
        return frozenset()


def check_scale_invariance(instance, transform, limit=None, force=False, workers=None):
    """
    Enumerate the instance before and after scaling and compare exchange by exchange.

    Three things must hold: every exchange keeps its acceptability, the scaled
    player's utility is exactly factor times the original while the other
    player's is untouched, and the Nash-maximizing exchanges are the same set.
    """
    scaled = apply_scale(instance, transform)
    original_cloud = enumerate_cloud(instance, limit=limit, force=force, workers=workers)
    scaled_cloud = enumerate_cloud(scaled, limit=limit, force=force, workers=workers)
    before, after = point_of(original_cloud), point_of(scaled_cloud)

    def report(passed, failure=None, counterexample=None, **extra):
        if not passed:
            logger.error("Scale invariance failed for %s: %s", transform, failure)
        return ScaleInvarianceReport(transform, passed, len(before), failure, counterexample, **extra)

    for exchange, point in before.items():
        moved = after[exchange]
        if acceptable(point) != acceptable(moved):
            return report(False, f"acceptability changed from {point} to {moved}", exchange)
        if transform.player == PlayerId.X:
            expected = (point.u_x * transform.factor, point.u_y)
        else:
            expected = (point.u_x, point.u_y * transform.factor)
        if moved != expected:
            return report(False, f"scaled point {moved} is not {expected}", exchange)

    original_nash, scaled_nash = nash_exchanges(original_cloud), nash_exchanges(scaled_cloud)
    if original_nash != scaled_nash:
        return report(
            False, "Nash-maximizing exchanges differ", min(original_nash ^ scaled_nash),
            nash_exchanges=original_nash, scaled_nash_exchanges=scaled_nash,
        )
    return report(True, nash_exchanges=original_nash, scaled_nash_exchanges=scaled_nash)


def check_translation_flip(instance, exchange, player):
    player = PlayerId(player)
    point = marginal_utilities(instance, exchange)
    margin = point.u_x if player == PlayerId.X else point.u_y
    if margin <= 0:
        raise PreconditionError(
            f"{player.label} does not accept {exchange} (marginal utility {margin}); nothing to flip."
        )
    return TranslationFlipReport(
        exchange=exchange,
        player=player,
        received=exchange.received_by(player).bit_count(),
        given=exchange.given_by(player).bit_count(),
        margin=margin,
    )


def find_translation_counterexample(instance, limit=None, force=False, workers=None):
    """
    The mutually acceptable exchange that some translation flips soonest.

    Returns the flip report with the smallest threshold (ties go to the first
    exchange in canonical order, X before Y), or None when no accepted trade
    has a player receiving fewer items than they give.
    """
    cloud = enumerate_cloud(instance, limit=limit, force=force, workers=workers)
    best = None
    for point, exchanges in cloud.exchanges.items():
        if not acceptable(point):
            continue
        for exchange in exchanges:
            for player in (PlayerId.X, PlayerId.Y):
                margin = point.u_x if player == PlayerId.X else point.u_y
                flip = TranslationFlipReport(
                    exchange, player,
                    exchange.received_by(player).bit_count(), exchange.given_by(player).bit_count(), margin,
                )
                if not flip.flip_possible:
                    continue
                key = (flip.threshold, exchange, player != PlayerId.X)
                if best is None or key < best[0]:
                    best = (key, flip)
    if best is None:
        logger.info("No accepted exchange can be flipped by translation.")
        return None
    return best[1]


def zero_item_consistency(instance, scale, translation):
    if scale.player != translation.player:
        raise PreconditionError("Scale and translation must act on the same player.")
    player = scale.player
    zero = [i for i, item in enumerate(instance.items) if item.value_to(player) == 0]
    if not zero:
        raise PreconditionError(f"{player.label} values no item at zero.")
    scaled = apply_scale(instance, scale)
    translated = apply_translation(instance, translation)
    return ZeroItemReport(
        player=player,
        items=tuple(instance.items[i].name for i in zero),
        scaled_values=tuple(scaled.items[i].value_to(player) for i in zero),
        translated_values=tuple(translated.items[i].value_to(player) for i in zero),
    )

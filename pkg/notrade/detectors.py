import logging
from fractions import Fraction

from enumeration.cloud import enumerate_cloud, resolve_limit
from enumeration.frontier import periphery
from exchanges.exceptions import CertificateMismatch, NotApplicable
from exchanges.models import PlayerId
from .models import NoTradeCertificate, NoTradeKind

logger = logging.getLogger(__name__)


def _certificate(kind, witness):
    return NoTradeCertificate(kind=kind, witness={kind: witness}, fired=(kind,))


def detect_identical_valuation(instance):
    """Every item is worth the same to both players, so every outcome has u_x + u_y = 0."""
    if any(item.value_to_x != item.value_to_y for item in instance.items):
        return None
    return _certificate(
        NoTradeKind.IDENTICAL_VALUATION,
        [{'item': item.name, 'value': item.value_to_x} for item in instance.items],
    )


def detect_mutual_dominance(instance):
    """Every item is worth strictly more to its owner than to the other player."""
    pairs = []
    for item in instance.items:
        owner_value = item.value_to(item.owner)
        other_value = item.value_to(item.owner.other)
        if not owner_value > other_value:
            return None
        pairs.append({'item': item.name, 'owner': item.owner, 'owner_value': owner_value, 'other_value': other_value})
    return _certificate(NoTradeKind.MUTUAL_DOMINANCE, pairs)


def detect_insufficient_compensation(instance, player):
    """
    Everything the other player owns, taken together, is worth less to player
    than the cheapest item player owns; player never gives anything up.
    """
    player = PlayerId(player)
    own = [item for item in instance.items if item.owner == player]
    if not own:
        raise NotApplicable(f"{player.label} owns nothing, so there is nothing to protect.")
    compensation = sum((item.value_to(player) for item in instance.items if item.owner != player), Fraction(0))
    cheapest = min(own, key=lambda item: item.value_to(player))
    if not compensation < cheapest.value_to(player):
        return None
    kind = NoTradeKind.INSUFFICIENT_COMPENSATION_X if player == PlayerId.X else NoTradeKind.INSUFFICIENT_COMPENSATION_Y
    return _certificate(kind, {
        'player': player,
        'compensation': compensation,
        'cheapest_item': cheapest.name,
        'cheapest_value': cheapest.value_to(player),
    })


def _insufficient_or_none(player):
    def detect(instance):
        try:
            return detect_insufficient_compensation(instance, player)
        except NotApplicable:
            return None
    return detect


DETECTORS = (
    detect_identical_valuation,
    detect_mutual_dominance,
    _insufficient_or_none(PlayerId.X),
    _insufficient_or_none(PlayerId.Y),
)


def run_detectors(instance):
    fired = [certificate for certificate in (detect(instance) for detect in DETECTORS) if certificate is not None]
    if not fired:
        return NoTradeCertificate()
    witness = {}
    for certificate in fired:
        witness.update(certificate.witness)
    return NoTradeCertificate(kind=fired[0].kind, witness=witness, fired=tuple(c.kind for c in fired))


def certify_no_trade(instance, limit=None, force=False, workers=None):
    """
    Run the detectors in order, then confirm against enumeration when the
    instance is within the limit (or force is set). A detector that fires on
    an instance with a profitable exchange raises CertificateMismatch.
    """
    certificate = run_detectors(instance)
    if not force and len(instance) > resolve_limit(limit):
        logger.info("Skipping brute-force check of %d items (over the limit).", len(instance))
        return certificate

    cloud = enumerate_cloud(instance, limit=limit, force=force, workers=workers)
    per = periphery(cloud)
    if certificate.found and not per.is_empty:
        logger.error("Detector %s fired but %s is profitable.", certificate.kind, per.points[0])
        raise CertificateMismatch(
            f"{certificate.kind} certificate contradicted: {len(per)} profitable outcome(s), e.g. {per.points[0]}."
        )
    return certificate.with_check(cloud.total_exchanges, per.is_empty)

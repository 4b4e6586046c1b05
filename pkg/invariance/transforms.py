from exchanges.models import Item, PlayerId
from .models import ScaleTransform


def _transform_player(instance, player, transform):
    return instance.with_items(
        item.with_value(player, transform(item.value_to(player))) for item in instance.items
    )


def apply_scale(instance, transform):
    """Multiply the transform's player's valuation of every item, own and other's."""
    return _transform_player(instance, transform.player, transform)


def apply_translation(instance, transform, strict=False):
    """
    Shift the player's valuation of every item by the offset.

    Negative utilities are allowed unless strict is set.
    """
    translated = _transform_player(instance, transform.player, transform)
    if strict:
        negative = [item.name for item in translated.items if item.value_to(transform.player) < 0]
        if negative:
            raise ValueError(
                f"Translating {transform.player.label} by {transform.offset} makes {', '.join(negative)} negative."
            )
    return translated


def mirror(instance):
    """Swap the players' roles: owners flip and each item's two valuations trade places."""
    return instance.with_items(
        Item(item.name, item.owner.other, item.value_to_y, item.value_to_x) for item in instance.items
    )


def scale_both(instance, factor_x, factor_y):
    instance = apply_scale(instance, ScaleTransform(PlayerId.X, factor_x))
    return apply_scale(instance, ScaleTransform(PlayerId.Y, factor_y))

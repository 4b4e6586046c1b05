from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import NamedTuple

from django.db import models

from .exceptions import InvalidExchange


class PlayerId(models.TextChoices):
    X = 'X', 'Player X'
    Y = 'Y', 'Player Y'

    @property
    def other(self):
        return PlayerId.Y if self is PlayerId.X else PlayerId.X


@dataclass(frozen=True)
class Item:
    name: str
    owner: PlayerId
    value_to_x: Fraction
    value_to_y: Fraction

    def value_to(self, player):
        return self.value_to_x if player == PlayerId.X else self.value_to_y

    def with_value(self, player, value):
        if player == PlayerId.X:
            return replace(self, value_to_x=value)
        return replace(self, value_to_y=value)


class OutcomePoint(NamedTuple):
    u_x: Fraction
    u_y: Fraction

    @property
    def product(self):
        return self.u_x * self.u_y

    @property
    def total(self):
        return self.u_x + self.u_y

    def swapped(self):
        return OutcomePoint(self.u_y, self.u_x)


ORIGIN = OutcomePoint(Fraction(0), Fraction(0))


class Exchange(NamedTuple):
    """
    A pair of item subsets crossing between the players.

    Both masks are over the instance's canonical item order: bit i set in
    give_x means item i (owned by X) passes to Y.
    """
    give_x: int = 0
    give_y: int = 0

    @property
    def is_null(self):
        return self.give_x == 0 and self.give_y == 0

    def given_by(self, player):
        return self.give_x if player == PlayerId.X else self.give_y

    def received_by(self, player):
        return self.give_y if player == PlayerId.X else self.give_x

    @classmethod
    def from_names(cls, instance, give_x=(), give_y=()):
        return cls(instance.mask_of(give_x), instance.mask_of(give_y))


NULL_EXCHANGE = Exchange(0, 0)


def iter_bits(mask):
    """Yield the indices of the set bits of mask, lowest first."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


@dataclass(frozen=True)
class Instance:
    items: tuple = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'items', tuple(self.items))
        object.__setattr__(self, '_index', {item.name: i for i, item in enumerate(self.items)})

    def __len__(self):
        return len(self.items)

    @property
    def p(self):
        return sum(1 for item in self.items if item.owner == PlayerId.X)

    @property
    def q(self):
        return len(self.items) - self.p

    def indices_of(self, player):
        return [i for i, item in enumerate(self.items) if item.owner == player]

    def owned_mask(self, player):
        mask = 0
        for i in self.indices_of(player):
            mask |= 1 << i
        return mask

    def index_of(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InvalidExchange(f"Unknown item '{name}'.")

    def mask_of(self, names):
        mask = 0
        for name in names:
            mask |= 1 << self.index_of(name)
        return mask

    def names_in(self, mask):
        return [self.items[i].name for i in iter_bits(mask)]

    def with_items(self, items):
        return Instance(tuple(items))

    def validate_exchange(self, exchange):
        everything = (1 << len(self.items)) - 1
        for mask in exchange:
            if mask < 0 or mask & ~everything:
                raise InvalidExchange(
                    f"Exchange {exchange} references an item index outside the "
                    f"instance ({len(self.items)} items)."
                )
        if exchange.give_x & ~self.owned_mask(PlayerId.X):
            raise InvalidExchange(f"give_x of {exchange} contains items X does not own.")
        if exchange.give_y & ~self.owned_mask(PlayerId.Y):
            raise InvalidExchange(f"give_y of {exchange} contains items Y does not own.")

    def single_transfers(self, exchange):
        """Split an exchange into the one-item transfers composing it."""
        return [Exchange(1 << i, 0) for i in iter_bits(exchange.give_x)] + [
            Exchange(0, 1 << i) for i in iter_bits(exchange.give_y)
        ]


def marginal_utilities(instance, exchange):
    instance.validate_exchange(exchange)
    items = instance.items
    u_x = Fraction(0)
    u_y = Fraction(0)
    for i in iter_bits(exchange.give_y):
        u_x += items[i].value_to_x
        u_y -= items[i].value_to_y
    for i in iter_bits(exchange.give_x):
        u_x -= items[i].value_to_x
        u_y += items[i].value_to_y
    return OutcomePoint(u_x, u_y)


def acceptable(point):
    # Axis points never count: both players must strictly gain.
    return point.u_x > 0 and point.u_y > 0

from dataclasses import dataclass
from fractions import Fraction

from exchanges.models import PlayerId


@dataclass(frozen=True)
class ScaleTransform:
    """u' = factor * u for one player's valuation of every item."""
    player: PlayerId
    factor: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'player', PlayerId(self.player))
        object.__setattr__(self, 'factor', Fraction(self.factor))
        if self.factor <= 0:
            raise ValueError(f"Scale factor must be positive, got {self.factor}.")

    def __call__(self, value):
        return value * self.factor


@dataclass(frozen=True)
class TranslationTransform:
    """u' = u + offset for one player's valuation of every item."""
    player: PlayerId
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'player', PlayerId(self.player))
        object.__setattr__(self, 'offset', Fraction(self.offset))

    def __call__(self, value):
        return value + self.offset


@dataclass(frozen=True)
class ScaleInvarianceReport:
    transform: ScaleTransform
    passed: bool
    exchanges_checked: int
    failure: str = None
    counterexample: object = None
    nash_exchanges: frozenset = frozenset()
    scaled_nash_exchanges: frozenset = frozenset()


@dataclass(frozen=True)
class TranslationFlipReport:
    """
    How translating one player's utilities by b moves their verdict on an exchange.

    Each received item gains b and each given item loses b, so the margin
    becomes margin + (received - given) * b. A flip needs received < given;
    it happens from b = threshold on, since a zero margin is a rejection.
    """
    exchange: object
    player: PlayerId
    received: int
    given: int
    margin: Fraction

    @property
    def flip_possible(self):
        return self.received < self.given

    @property
    def threshold(self):
        if not self.flip_possible:
            return None
        return self.margin / (self.given - self.received)

    def margin_at(self, offset):
        return self.margin + (self.received - self.given) * Fraction(offset)

    def accepts_at(self, offset):
        return self.margin_at(offset) > 0


@dataclass(frozen=True)
class ZeroItemReport:
    """Values a player's zero-valued items take after each transform, in item order."""
    player: PlayerId
    items: tuple
    scaled_values: tuple
    translated_values: tuple

    @property
    def scale_keeps_zero(self):
        return all(value == 0 for value in self.scaled_values)

    @property
    def translation_keeps_zero(self):
        return all(value == 0 for value in self.translated_values)

    @property
    def witness(self):
        """First translated value that is no longer zero."""
        return next((value for value in self.translated_values if value != 0), None)

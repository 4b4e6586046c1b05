from dataclasses import dataclass, replace

from django.db import models


class NoTradeKind(models.TextChoices):
    IDENTICAL_VALUATION = 'identical-valuation', 'Identical valuation'
    MUTUAL_DOMINANCE = 'mutual-dominance', 'Mutual dominance'
    INSUFFICIENT_COMPENSATION_X = 'insufficient-compensation-X', 'Insufficient compensation for X'
    INSUFFICIENT_COMPENSATION_Y = 'insufficient-compensation-Y', 'Insufficient compensation for Y'
    NONE = 'none', 'No certificate'


@dataclass(frozen=True)
class NoTradeCertificate:
    """
    Why no mutually profitable exchange exists, if a detector can tell.

    kind names the first detector that fired and fired lists all of them.
    witness holds each firing detector's evidence keyed by kind. When the
    instance was small enough to enumerate, brute_force_verified is set and
    periphery_empty records what enumeration found.
    """
    kind: str = NoTradeKind.NONE
    witness: dict = None
    fired: tuple = ()
    brute_force_verified: bool = False
    exchanges_checked: int = 0
    periphery_empty: bool = None

    @property
    def found(self):
        return self.kind != NoTradeKind.NONE

    def with_check(self, exchanges_checked, periphery_empty):
        return replace(
            self, brute_force_verified=True, exchanges_checked=exchanges_checked, periphery_empty=periphery_empty,
        )

class BarterError(Exception):
    """Base class for domain failures raised by the barter apps."""


class InvalidExchange(BarterError):
    pass


class EnumerationLimitExceeded(BarterError):
    def __init__(self, item_count, limit):
        self.item_count = item_count
        self.limit = limit
        self.exchange_count = 2 ** item_count
        super().__init__(
            f"{item_count} items means 2^{item_count} = {self.exchange_count} exchanges, "
            f"over the limit of {limit} items; pass --force to enumerate anyway."
        )


class NoTrade(BarterError):
    """The periphery is empty: no exchange strictly improves both players."""

    def __init__(self, message="No mutually profitable exchange exists."):
        super().__init__(message)


class PreconditionError(BarterError):
    pass


class NotApplicable(BarterError):
    pass


class CertificateMismatch(BarterError):
    pass


class GenerationError(BarterError):
    pass

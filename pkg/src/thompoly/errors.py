"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class ThomError(Exception):
    code = "error"


class DomainError(ThomError, ValueError):
    """Raised for well-formed requests that have no answer (exit code 1)."""

    code = "domain_error"


class BoxOverflow(DomainError):
    code = "box_overflow"


class BoxTooSmall(DomainError):
    code = "box_too_small"


class RankMismatch(DomainError):
    code = "rank_mismatch"


class RingMismatch(DomainError):
    code = "ring_mismatch"


class InsufficientDegrees(DomainError):
    code = "insufficient_degrees"


class DegreeOverflow(DomainError):
    code = "degree_overflow"


class RankOrder(DomainError):
    code = "rank_order"


class NotSupersymmetric(DomainError):
    code = "not_supersymmetric"


class LengthOverflow(DomainError):
    code = "length_overflow"


class CorankExceedsRank(DomainError):
    code = "corank_exceeds_rank"


class NonIntegralResult(DomainError):
    code = "non_integral_result"


class UnknownBundle(DomainError):
    code = "unknown_bundle"


class ExprSyntaxError(ThomError, ValueError):
    """Parse failure; ``pos`` is the 0-based offset into the source text."""

    code = "syntax_error"

    def __init__(self, message, pos=None, source=None):
        self.pos = pos
        self.source = source
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)

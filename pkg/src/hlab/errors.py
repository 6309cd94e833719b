"""Exception types shared across the package."""


class HlabError(Exception):
    """Base class for every error raised deliberately by hlab."""


class FieldMismatchError(HlabError):
    pass


class ShapeError(HlabError):
    pass


class NotAComplexError(HlabError):
    """Consecutive differentials do not compose to zero."""


class RelationError(HlabError):
    """A relation is not homogeneous or mentions unknown arrows."""


class ResourceLimitError(HlabError):
    """A computation would exceed the configured resource ceiling."""


class InsufficientPrecisionError(HlabError):
    """The requested degree lies beyond what the truncation certifies."""


class OutsideValidityError(InsufficientPrecisionError):
    """A table was queried outside the window its entries are certified for."""


class FormatError(HlabError):
    """Malformed algebra description file."""

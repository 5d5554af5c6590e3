"""Exception types shared across pipeline stages."""


class WildpulseError(Exception):
    """Base class for all library errors."""


class InvalidName(WildpulseError):
    """A name is empty after normalization."""


class DuplicateSpecies(WildpulseError):
    """Two species records share a scientific name."""


class EditTargetNotFound(WildpulseError):
    """A graph edit references a node or edge that does not exist."""


class EmptyTaxon(WildpulseError):
    """A component with no species cannot become a query taxon."""


class QueryTooLong(WildpulseError):
    """Rendered query text exceeds the provider's length limit."""

    def __init__(self, message: str, length: int, limit: int):
        super().__init__(message)
        self.length = length
        self.limit = limit


class ProviderError(WildpulseError):
    """Non-retryable provider failure (e.g. HTTP 4xx)."""


class ParseError(WildpulseError):
    """Provider payload could not be parsed; raw payload retained."""

    def __init__(self, message: str, payload: bytes | str = b""):
        super().__init__(message)
        self.payload = payload


class EmptyCorpus(WildpulseError):
    """Corpus is empty after preprocessing."""


class SchemaMismatch(WildpulseError):
    """Score vector is not aligned with the topic schema."""


class BackendUnavailable(WildpulseError):
    """Remote classifier backend unreachable after bounded retries."""


class ExtractionFailed(WildpulseError):
    """No extractor produced a body above the minimum length."""


class FullTextUnavailable(WildpulseError):
    """Both live fetch and archive fallback failed for a URL."""


class SeriesTooShort(WildpulseError):
    """Time series too short for breakpoint detection."""


class DependencyError(WildpulseError):
    """A pipeline stage was requested before its prerequisite stage."""

    def __init__(self, message: str, missing_stage: str = ""):
        super().__init__(message)
        self.missing_stage = missing_stage

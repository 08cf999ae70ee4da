"""Errors raised by covseq.

Every error derives from :class:`CovseqError`, so callers (and the command line) can catch the
whole family at once.
"""


class CovseqError(Exception):
    pass


class SequenceFormatError(CovseqError, ValueError):
    """Raised when text cannot be read as a binary sequence, code or array."""

    def __init__(self, text, reason="only '0' and '1' are allowed"):
        self.text = text
        self.reason = reason

    @property
    def message(self):
        shown = self.text if len(self.text) <= 40 else f"{self.text[:37]}..."
        return f"Cannot read {shown!r}: {self.reason}"

    def __str__(self):
        return self.message


class UnsupportedWindowWidth(CovseqError):
    def __init__(self, width, limit=32):
        self.width = width
        self.limit = limit

    @property
    def message(self):
        return f"Window width {self.width} is not supported (1 to {self.limit} bits)"

    def __str__(self):
        return self.message


class DimensionError(CovseqError):
    def __init__(self, left, right):
        self.left = left
        self.right = right

    @property
    def message(self):
        return f"Lengths differ: {self.left} vs {self.right}"

    def __str__(self):
        return self.message


class InvalidRadius(CovseqError):
    def __init__(self, n, radius):
        self.n = n
        self.radius = radius

    @property
    def message(self):
        return f"Radius {self.radius} is outside 0..{self.n}"

    def __str__(self):
        return self.message


class ResourceLimitExceeded(CovseqError):
    """Raised when a table or a construction would exceed the configured size cap."""

    def __init__(self, what, value, limit):
        self.what = what
        self.value = value
        self.limit = limit

    @property
    def message(self):
        return f"{self.what} of {self.value} exceeds the limit of {self.limit}"

    def __str__(self):
        return self.message


class EmptyInput(CovseqError):
    pass


class PairingError(CovseqError):
    pass


class ParameterError(CovseqError, ValueError):
    pass


class IncompatibleLengths(CovseqError):
    def __init__(self, first, second):
        self.first = first
        self.second = second

    @property
    def message(self):
        return f"Lengths {self.first} and {self.second} are not coprime"

    def __str__(self):
        return self.message


class MissingRun(CovseqError):
    """Raised when a seed lacks the run of identical symbols a construction relies on."""

    def __init__(self, bit, needed, found):
        self.bit = bit
        self.needed = needed
        self.found = found

    @property
    def message(self):
        return (
            f"Seed needs a cyclic run of {self.needed} {self.bit!r} symbols, "
            f"longest is {self.found}"
        )

    def __str__(self):
        return self.message


class MalformedPolynomial(CovseqError, ValueError):
    pass


class InvalidSeed(CovseqError):
    """Raised when a seed sequence does not verify at the parameters a construction needs."""

    def __init__(self, n, radius, report=None):
        self.n = n
        self.radius = radius
        self.report = report

    @property
    def message(self):
        text = f"Seed is not an ({self.n},{self.radius}) covering sequence"
        if self.report is not None:
            text += f" ({self.report.uncovered_total} words uncovered)"
        return text

    def __str__(self):
        return self.message


class CorpusEntryNotFound(CovseqError, LookupError):
    def __init__(self, entry_id, options=None):
        self.entry_id = entry_id
        self.options = options or []

    @property
    def message(self):
        return "Could not find {!r} in the corpus\nThese entries are present: {}".format(
            self.entry_id, ", ".join(self.options)
        )

    def __str__(self):
        return self.message

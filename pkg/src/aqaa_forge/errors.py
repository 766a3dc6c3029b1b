"""Exception hierarchy shared across the package.

Everything raised on purpose derives from ForgeError so the CLI can map
domain failures to exit code 1 and leave genuine bugs loud.
"""


class ForgeError(Exception):
    """Base class for all domain errors."""


class ConfigError(ForgeError):
    """Invalid configuration value or combination."""


class OutOfVocabularyError(ForgeError):
    """Token id outside the merged vocabulary."""


class InvalidFrameError(ForgeError):
    """Frame code outside its codebook range."""


class MisalignedStreamError(ForgeError):
    """Linguistic/semantic streams violate the 2:3 block ratio."""


class ClassMismatchError(ForgeError):
    """Token id of the wrong class for the requested operation."""


class FormatError(ForgeError):
    """Malformed token stream; ``index`` is the first offending position."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DegeneratePairError(ForgeError):
    """Preference pair whose two responses are identical."""


class SequenceLengthError(ForgeError):
    """Input longer than the model's maximum sequence length."""


class NumericError(ForgeError):
    """Non-finite value where a finite one is required."""


class EmptyResponseError(ForgeError):
    """Loss mask selects no positions."""


class AlignmentError(ForgeError):
    """Per-token arrays of inconsistent lengths."""


class IncompatibleCheckpointError(ForgeError):
    """Checkpoints with differing schemas; ``tensor`` names the first mismatch."""

    def __init__(self, message: str, tensor: str | None = None):
        super().__init__(message)
        self.tensor = tensor


class DivergenceError(ForgeError):
    """Training loss became non-finite; ``step`` is the failing step."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step

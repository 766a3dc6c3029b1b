"""Merged vocabulary layout.

One flat id space carries four disjoint, contiguous ranges: text ids
first, then the 1,024-entry linguistic codebook, then the 4,096-entry
semantic codebook, and finally the two segment markers (audio_start,
audio_end). Only the text range size is configurable; everything else
is fixed by the codec.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ConfigError, OutOfVocabularyError

LINGUISTIC_CODEBOOK = 1024
SEMANTIC_CODEBOOK = 4096
AUDIO_CODE_COUNT = LINGUISTIC_CODEBOOK + SEMANTIC_CODEBOOK
MARKER_COUNT = 2


class TokenClass(Enum):
    TEXT = "text"
    LINGUISTIC = "linguistic"
    SEMANTIC = "semantic"
    MARKER = "marker"


@dataclass(frozen=True)
class TokenSpace:
    """Partition of ``[0, total_size)`` into token classes.

    Immutable; safe to share across threads.
    """

    text_size: int

    def __post_init__(self) -> None:
        if self.text_size < 1:
            raise ConfigError(f"text_size must be >= 1, got {self.text_size}")

    @property
    def linguistic_size(self) -> int:
        return LINGUISTIC_CODEBOOK

    @property
    def semantic_size(self) -> int:
        return SEMANTIC_CODEBOOK

    @property
    def linguistic_offset(self) -> int:
        return self.text_size

    @property
    def semantic_offset(self) -> int:
        return self.text_size + LINGUISTIC_CODEBOOK

    @property
    def audio_start(self) -> int:
        return self.text_size + AUDIO_CODE_COUNT

    @property
    def audio_end(self) -> int:
        return self.audio_start + 1

    @property
    def marker_ids(self) -> tuple[int, int]:
        return (self.audio_start, self.audio_end)

    @property
    def total_size(self) -> int:
        return self.text_size + AUDIO_CODE_COUNT + MARKER_COUNT

    def classify(self, token_id: int) -> TokenClass:
        if not 0 <= token_id < self.total_size:
            raise OutOfVocabularyError(
                f"token id {token_id} outside [0, {self.total_size})"
            )
        if token_id < self.text_size:
            return TokenClass.TEXT
        if token_id < self.semantic_offset:
            return TokenClass.LINGUISTIC
        if token_id < self.audio_start:
            return TokenClass.SEMANTIC
        return TokenClass.MARKER

    def is_audio(self, token_id: int) -> bool:
        """Markers count as audio, together with both codebooks."""
        return self.classify(token_id) is not TokenClass.TEXT

    def is_text(self, token_id: int) -> bool:
        return self.classify(token_id) is TokenClass.TEXT


def build_token_space(text_size: int) -> TokenSpace:
    """Construct the merged vocabulary for a given text range size."""
    return TokenSpace(text_size=text_size)

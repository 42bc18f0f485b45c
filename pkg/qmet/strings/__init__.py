from .strings import (
    DEFAULT_ALPHABET,
    BLANK,
    StringSet,
    common_prefix_length,
    prefix_pm,
)

from .alignment import (
    ScoreScheme,
    align_score,
    alignment,
    alignment_score,
    brute_force_score,
    dna_pm,
)

__all__ = [
    'DEFAULT_ALPHABET',
    'BLANK',
    'StringSet',
    'common_prefix_length',
    'prefix_pm',
    'ScoreScheme',
    'align_score',
    'alignment',
    'alignment_score',
    'brute_force_score',
    'dna_pm',
]

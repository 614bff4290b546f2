from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from gdconj_systems import Itinerary, ItineraryError

PATTERNS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class PatternCounts:
    counts: dict[tuple[int, int], int]
    total: int

    def frequency(self, pattern: tuple[int, int]) -> float:
        return self.counts.get(pattern, 0) / self.total


def pattern_counts(itinerary: Itinerary) -> PatternCounts:
    """Count the consecutive digit pairs of an itinerary."""
    digits = itinerary.digits
    if len(digits) < 2:
        raise ItineraryError("pattern counts need at least two digits")
    counted = Counter(zip(digits, digits[1:]))
    return PatternCounts(counts={p: counted.get(p, 0) for p in PATTERNS}, total=len(digits) - 1)


def pattern_frequencies(counts: PatternCounts) -> dict[str, float]:
    return {f"{a}{b}": counts.frequency((a, b)) for a, b in PATTERNS}

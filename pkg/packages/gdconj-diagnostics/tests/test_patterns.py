import random

import pytest

from gdconj_diagnostics import pattern_counts, pattern_frequencies
from gdconj_systems import Itinerary, ItineraryError


def test_fair_coin_patterns_are_uniform():
    rng = random.Random(2024)
    itinerary = Itinerary(0, tuple(rng.getrandbits(1) for _ in range(100_000)))
    frequencies = pattern_frequencies(pattern_counts(itinerary))
    assert set(frequencies) == {"00", "01", "10", "11"}
    for value in frequencies.values():
        assert abs(value - 0.25) < 0.01


def test_counts_cover_every_pair():
    counts = pattern_counts(Itinerary(1, (0, 0, 1, 1, 0)))
    assert counts.total == 4
    assert counts.counts == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}


def test_short_itinerary_is_rejected():
    with pytest.raises(ItineraryError):
        pattern_counts(Itinerary(0, (1,)))

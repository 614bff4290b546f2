from typing import Sequence


class CompatibilityError(ValueError):
    def __init__(self, label: str, violations: Sequence[str]) -> None:
        super().__init__(f"system {label or '<unnamed>'} is not compatible: {'; '.join(violations)}")
        self.label = label
        self.violations = tuple(violations)


class ItineraryError(ValueError):
    pass


class DepthLimitError(ValueError):
    pass

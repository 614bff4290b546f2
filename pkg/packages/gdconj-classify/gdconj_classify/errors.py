class ClassificationError(ValueError):
    pass


class NoTheoremApplies(RuntimeError):
    pass

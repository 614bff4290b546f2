class MapError(ValueError):
    pass


class MapDomainError(MapError):
    pass


class ExpressionSyntaxError(MapError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position

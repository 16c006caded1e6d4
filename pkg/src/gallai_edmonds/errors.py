class GraphError(ValueError):
    """Invalid graph, vertex set or matching supplied by the caller."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class MinorUndefinedError(ValueError):
    """The bipartite minor needs |S| + od(S) >= 2."""


class SizeGuardError(ValueError):
    """An exhaustive routine was asked for an instance beyond its guard."""


class InvariantError(RuntimeError):
    """Internal consistency failure; indicates a bug in the matching engine."""

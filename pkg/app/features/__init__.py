"""Features package: one click command per experiment."""

__all__: list[str] = []

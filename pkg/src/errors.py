class LieToolError(Exception):
    """
    Base error of the toolkit. ``detail`` is the message shown to the user.
    """
    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DimensionError(LieToolError, ValueError):
    pass


class JacobiError(LieToolError):
    def __init__(self, triples: list[tuple[int, int, int]], labels: tuple[str, ...] | None = None):
        self.triples = list(triples)
        first = self.triples[0]
        if labels:
            named = ", ".join(labels[k] for k in first)
            detail = f"Jacobi identity fails for triple ({named}) at indices {first}"
        else:
            detail = f"Jacobi identity fails for triple {first}"
        if len(self.triples) > 1:
            detail += f" and {len(self.triples) - 1} more"
        super().__init__(detail)


class NotDerivationError(LieToolError):
    pass


class NotIdealError(LieToolError):
    pass


class CatalogError(LieToolError):
    pass


class DocumentError(LieToolError):
    def __init__(self, detail: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {detail}" if location else detail)

"""Exception hierarchy shared by every module."""
from typing import Any, Optional


class MinorhostError(Exception):
    """Base class for all minorhost failures."""

    kind = "error"

    def to_dict(self) -> dict[str, Any]:
        return {"success": False, "kind": self.kind, "error": str(self)}


class PreconditionError(MinorhostError):
    """An operation was called outside its domain.

    ``measurements`` records the quantities that failed the check, e.g.
    ``{"longest_path": 3, "required": 9}``.
    """

    kind = "precondition"

    def __init__(self, message: str, measurements: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.measurements = dict(measurements or {})

    def to_dict(self) -> dict[str, Any]:
        data = super().to_dict()
        data["measurements"] = self.measurements
        return data


class UnsupportedFamily(PreconditionError):
    """Family name or forbidden minor not supported by the requested operation."""

    kind = "unsupported"


class SizeCapExceeded(PreconditionError):
    """Exact search refused because the input exceeds a configured size cap."""

    kind = "size_cap"


class BudgetExhausted(MinorhostError):
    """Search ran out of budget; the answer is unknown, not negative."""

    kind = "inconclusive"

    def __init__(self, operation: str, nodes: int, budget: int):
        super().__init__(f"{operation}: budget of {budget} search nodes exhausted")
        self.operation = operation
        self.nodes = nodes
        self.budget = budget

    def to_dict(self) -> dict[str, Any]:
        data = super().to_dict()
        data.update({"operation": self.operation, "nodes": self.nodes, "budget": self.budget})
        return data


class CounterexampleCandidate(MinorhostError):
    """Hypotheses of a structural construction held but its conclusion was not found."""

    kind = "counterexample_candidate"

    def __init__(self, message: str, report: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.report = dict(report or {})

    def to_dict(self) -> dict[str, Any]:
        data = super().to_dict()
        data["report"] = self.report
        return data


class CatalogLimitExceeded(MinorhostError):
    """A catalog or model enumeration hit its limits; no partial result is returned."""

    kind = "catalog_limit"

    def __init__(self, message: str, where: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.where = dict(where or {})

    def to_dict(self) -> dict[str, Any]:
        data = super().to_dict()
        data["where"] = self.where
        return data


class NotInClass(MinorhostError):
    """Guest graph contains the forbidden minor; ``model`` is the witness."""

    kind = "not_in_class"

    def __init__(self, message: str, model: Any = None):
        super().__init__(message)
        self.model = model

    def to_dict(self) -> dict[str, Any]:
        data = super().to_dict()
        if self.model is not None:
            from minorhost.minors.engine import model_to_document

            data["model"] = model_to_document(self.model).model_dump()
        return data

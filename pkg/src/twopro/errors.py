"""Exception types shared by every validator and search in the package.

Each error carries enough structured data to reproduce the failure: the
law that broke and the cells witnessing it.  Validators report the first
violation in a fixed scan order, so error payloads are deterministic.
"""


class WorkbenchError(Exception):
    """Base class; `code` is the stable identifier used in CLI reports."""

    code = "Error"

    def payload(self):
        return {"code": self.code, "message": str(self)}


class DuplicateId(WorkbenchError):
    code = "DuplicateId"

    def __init__(self, kind, ident):
        super().__init__(f"duplicate {kind} id {ident!r}")
        self.kind = kind
        self.ident = ident


class DanglingBoundary(WorkbenchError):
    code = "DanglingBoundary"

    def __init__(self, kind, ident, detail):
        super().__init__(f"{kind} {ident!r}: {detail}")
        self.kind = kind
        self.ident = ident
        self.detail = detail


class MissingCompositeEntry(WorkbenchError):
    code = "MissingCompositeEntry"

    def __init__(self, table, key):
        super().__init__(f"table {table!r} has no entry for {key!r}")
        self.table = table
        self.key = key


class AxiomViolation(WorkbenchError):
    code = "AxiomViolation"

    def __init__(self, law, witness, detail=""):
        msg = f"{law} fails at {witness!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.law = law
        self.witness = witness
        self.detail = detail


class UnknownObject(WorkbenchError):
    code = "UnknownObject"

    def __init__(self, ident):
        super().__init__(f"unknown object {ident!r}")
        self.ident = ident


class UnknownCell(WorkbenchError):
    code = "UnknownCell"

    def __init__(self, ident, detail=""):
        super().__init__(f"unknown cell {ident!r}" + (f" ({detail})" if detail else ""))
        self.ident = ident


class NotComposable(WorkbenchError):
    code = "NotComposable"

    def __init__(self, detail):
        super().__init__(detail)


class PreservationViolation(WorkbenchError):
    code = "PreservationViolation"

    def __init__(self, dimension, witness, detail=""):
        msg = f"functor does not preserve {dimension} at {witness!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.dimension = dimension
        self.witness = witness


class CoherenceViolation(WorkbenchError):
    code = "CoherenceViolation"

    def __init__(self, axiom, witness, detail=""):
        msg = f"{axiom} fails at {witness!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.axiom = axiom
        self.witness = witness


class EnumerationBudgetExceeded(WorkbenchError):
    code = "EnumerationBudgetExceeded"

    def __init__(self, limit):
        super().__init__(f"enumeration exceeded budget of {limit} candidates")
        self.limit = limit


class NotTwoFiltered(WorkbenchError):
    code = "NotTwoFiltered"

    def __init__(self, axiom, counterexample):
        super().__init__(f"index is not 2-filtered: {axiom} fails at {counterexample!r}")
        self.axiom = axiom
        self.counterexample = counterexample


class InvalidDiagram(WorkbenchError):
    code = "InvalidDiagram"

    def __init__(self, detail):
        super().__init__(detail)


class SearchExhausted(WorkbenchError):
    """A witness search failed on input that satisfied its preconditions.

    This signals an internal invariant violation, never a user error.
    """

    code = "SearchExhausted"

    def __init__(self, what):
        super().__init__(f"search exhausted without witness: {what}")
        self.what = what


class ValidationFailure(WorkbenchError):
    """A constructed-by-us structure failed its own validator (a bug)."""

    code = "ValidationFailure"

    def __init__(self, detail):
        super().__init__(detail)


class BoundaryMismatch(WorkbenchError):
    code = "BoundaryMismatch"

    def __init__(self, where, detail):
        super().__init__(f"boundary mismatch at {where}: {detail}")
        self.where = where
        self.detail = detail


class ElevatorSyntaxError(WorkbenchError):
    code = "SyntaxError"

    def __init__(self, line, column, detail):
        super().__init__(f"syntax error at {line}:{column}: {detail}")
        self.line = line
        self.column = column

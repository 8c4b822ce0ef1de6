"""Small shared helpers: deterministic ids, stable JSON, budgets."""

import json

from .errors import EnumerationBudgetExceeded

DEFAULT_BUDGET = 10 ** 6


def mkid(*parts):
    """Join string parts into one id, escaping the separator."""
    return ";".join(str(p).replace("\\", "\\\\").replace(";", "\\;") for p in parts)


def stable_json(data):
    """Canonical JSON text: sorted keys, no whitespace drift."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


class Budget:
    """A decrementing candidate counter shared across nested enumerations."""

    def __init__(self, limit=DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def charge(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise EnumerationBudgetExceeded(self.limit)

    def spawn(self):
        """A fresh counter with the same limit (for independent sub-runs)."""
        return Budget(self.limit)

"""Package-wide exception types."""


class BudgetError(Exception):
    """A computation was refused because it exceeds the supported size grid.

    Budgets are hard caps with explicit messages, never silent
    truncation; the message names the supported grid.
    """

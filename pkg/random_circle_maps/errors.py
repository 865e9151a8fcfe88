# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Random-Circle-Maps exceptions."""


class CircleMapsError(Exception):
    """Base exception of the package."""


class InvalidFamily(CircleMapsError):
    """Family parameters outside the hypothesis regime."""

    def __init__(self, violated, report=None):
        """Initialise error.

        :param violated: names of the violated constraints.
        :param report: the :class:`ValidationReport` that failed.
        """
        self.violated = tuple(violated)
        self.report = report
        super().__init__(
            f"Family violates the standing hypotheses: {', '.join(self.violated)}."
        )


class SolverBudgetExceeded(CircleMapsError):
    """Inverse branch solver could not bracket or converge."""

    def __init__(self, reason, iterations=None):
        """Initialise error."""
        self.reason = reason
        self.iterations = iterations
        msg = f"Inverse branch solver failed: {reason}"
        if iterations is not None:
            msg += f" after {iterations} bisections"
        super().__init__(msg + ".")


class BudgetExceeded(CircleMapsError):
    """A stage needs more work than the configured budget allows."""

    def __init__(self, stage, required, budget, feasible=None):
        """Initialise error.

        :param stage: name of the stage that overran.
        :param required: size the stage asked for.
        :param budget: configured limit.
        :param feasible: largest completed result (e.g. a truncated schedule).
        """
        self.stage = stage
        self.required = required
        self.budget = budget
        self.feasible = feasible
        super().__init__(
            f"Budget exceeded in {stage}: needs {required}, budget is {budget}."
        )


class EmptyGap(CircleMapsError):
    """No interval avoids every first partition element."""

    def __init__(self, delta0, k):
        """Initialise error."""
        self.delta0 = delta0
        self.k = k
        super().__init__(
            f"delta0={delta0} leaves no gap interval for degree k={k}; "
            f"need delta0 < {(1 - 1 / k) / 2}."
        )


class BoundaryAmbiguity(CircleMapsError):
    """Orbit point too close to a partition boundary to code reliably."""

    def __init__(self, index, distance, tolerance):
        """Initialise error."""
        self.index = index
        self.distance = distance
        self.tolerance = tolerance
        super().__init__(
            f"Orbit point {index} lies {distance:.3e} from a partition boundary "
            f"(tolerance {tolerance:.3e})."
        )


class InvalidStream(CircleMapsError):
    """Malformed symbol stream description."""

    def __init__(self, description):
        """Initialise error."""
        super().__init__(f"Invalid symbol stream: {description}.")


class InvalidConfig(CircleMapsError):
    """Experiment configuration rejected by the schema."""

    def __init__(self, messages):
        """Initialise error."""
        self.messages = messages
        super().__init__(f"Invalid experiment configuration: {messages}")

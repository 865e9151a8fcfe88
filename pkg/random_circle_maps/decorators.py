# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Random-Circle-Maps decorators."""

from functools import wraps

import click

from .errors import BudgetExceeded, CircleMapsError, SolverBudgetExceeded

EXIT_VALIDATION = 1
EXIT_BUDGET = 2
EXIT_IO = 3


def exit_codes(f):
    """Turn package errors raised by a command into its exit status.

    Budget overruns exit with 2, every other package error (invalid
    family or configuration, boundary ambiguity, ...) with 1 and ``OSError``
    with 3.
    """

    @wraps(f)
    def inner(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return f(*args, **kwargs)
        except (BudgetExceeded, SolverBudgetExceeded) as e:
            click.secho(str(e), fg="red", err=True)
            if getattr(e, "feasible", None) is not None:
                click.echo(f"Largest feasible result: {_describe(e.feasible)}", err=True)
            ctx.exit(EXIT_BUDGET)
        except CircleMapsError as e:
            click.secho(str(e), fg="red", err=True)
            ctx.exit(EXIT_VALIDATION)
        except OSError as e:
            name = e.filename or "<unknown>"
            click.secho(f"I/O error on {name}: {e.strerror or e}", fg="red", err=True)
            ctx.exit(EXIT_IO)

    return inner


def _describe(feasible):
    if hasattr(feasible, "to_dict"):
        data = feasible.to_dict()
        return data.get("N", data)
    return feasible

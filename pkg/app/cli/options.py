"""Shared click options, parameter callbacks and error mapping"""

from contextlib import contextmanager
from typing import Iterator, Optional
import json
import logging

import click
from pydantic import BaseModel

from app.core.errors import BudgetExceeded, LRError
from app.schemas.shapes import Partition, SkewShape
from app.services.shapes import parse_partition, parse_skew

logger = logging.getLogger(__name__)


class BudgetError(click.ClickException):
    """A cap from the settings would be exceeded; nothing has been printed yet."""
    exit_code = 3


def _partition(ctx: click.Context, param: click.Parameter, value: str) -> Partition:
    try:
        return parse_partition(value)
    except LRError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def _skew(ctx: click.Context, param: click.Parameter, value: str) -> SkewShape:
    try:
        return parse_skew(value)
    except LRError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def partition_option(*names: str, **kwargs):
    return click.option(*names, callback=_partition, metavar="P1,P2,...", **kwargs)


def triple_options(f):
    """--lambda, --mu and --nu; the empty string is the empty partition."""
    f = partition_option("--nu", "nu", required=True, help="Outer partition nu")(f)
    f = partition_option("--mu", "mu", required=True, help="Partition mu")(f)
    f = partition_option("--lambda", "lam", default="", show_default=True, help="Inner partition lambda")(f)
    return f


def skew_option(*names: str, **kwargs):
    return click.option(*names, callback=_skew, metavar="OUTER[/INNER]", **kwargs)


@contextmanager
def domain_errors(flag: Optional[str] = None) -> Iterator[None]:
    """Map domain failures to click errors: budgets exit 3, everything else is a usage error (exit 2)."""
    try:
        yield
    except BudgetExceeded as e:
        logger.debug(f"Budget exceeded: {e}")
        raise BudgetError(str(e))
    except LRError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        if flag:
            raise click.BadParameter(str(e), param_hint=f"'{flag}'")
        raise click.UsageError(str(e))


def wants_json(ctx: click.Context) -> bool:
    return bool(ctx.find_root().obj and ctx.find_root().obj.get("json"))


def echo_json(payload) -> None:
    """One compact JSON document per line."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json", by_alias=True)
    click.echo(json.dumps(payload, separators=(",", ":")))

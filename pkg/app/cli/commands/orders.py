"""List admissible orders on a shape"""

from typing import Optional

import click

from app.cli.options import domain_errors, echo_json, skew_option, wants_json
from app.schemas.shapes import SkewShape
from app.services.orders import enumerate_admissible_orders


@click.command()
@skew_option("--shape", required=True, help="Young or skew shape, e.g. 3,2 or 3,2/1")
@click.option("--limit", type=click.IntRange(min=1), default=None,
              help="Refuse shapes with more orders than this (default LRP_MAX_ORDERS)")
@click.pass_context
def orders(ctx: click.Context, shape: SkewShape, limit: Optional[int]):
    """Every admissible order on the cells of SHAPE (each cell before the cells weakly below-left of it)."""
    with domain_errors():
        found = enumerate_admissible_orders(shape.cells(), limit=limit)

    as_json = wants_json(ctx)
    for order in found:
        if as_json:
            echo_json(order)
        else:
            click.echo(str(order))
    if as_json:
        echo_json({"count": len(found)})
    else:
        click.echo(f"count: {len(found)}")

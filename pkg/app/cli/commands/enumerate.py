"""Stream LR crystal elements or admissible pictures"""

import logging

import click

from app.cli.options import domain_errors, echo_json, triple_options, wants_json
from app.schemas.shapes import Partition
from app.services.crystal import lr_crystal
from app.services.orders import resolve_order
from app.services.pictures import enumerate_pictures
from app.services.shapes import skew_shape

logger = logging.getLogger(__name__)


@click.command("enumerate")
@click.argument("kind", type=click.Choice(["crystal", "pictures"]))
@triple_options
@click.option("--order", "order_name", default="J", show_default=True,
              help="Admissible order A' on mu: J, F or @path to an order file")
@click.option("--skew-order", "skew_order_name", default="J", show_default=True,
              help="Admissible order A on nu/lambda (pictures only): J, F or @path")
@click.option("--fast", is_flag=True, help="Pictures as Psi-images of the crystal instead of brute force")
@click.pass_context
def enumerate_cmd(
    ctx: click.Context,
    kind: str,
    lam: Partition,
    mu: Partition,
    nu: Partition,
    order_name: str,
    skew_order_name: str,
    fast: bool
):
    """List B(mu)_nu^lambda[A'] or P(mu, nu/lambda; A, A'), one element per line, then a count."""
    with domain_errors("--order"):
        A_prime = resolve_order(order_name, mu.cells())
    with domain_errors("--lambda"):
        skew = skew_shape(nu, lam)

    with domain_errors():
        if kind == "crystal":
            if skew_order_name != "J" or fast:
                logger.warning("--skew-order and --fast only apply to pictures")
            elements = lr_crystal(lam, mu, nu, A_prime)
        else:
            with domain_errors("--skew-order"):
                A = resolve_order(skew_order_name, skew.cells())
            elements = enumerate_pictures(mu, skew, A, A_prime, fast=fast)

    as_json = wants_json(ctx)
    for element in elements:
        if as_json:
            echo_json(element)
        else:
            click.echo(str(element))
    if as_json:
        echo_json({"count": len(elements)})
    else:
        click.echo(f"count: {len(elements)}")

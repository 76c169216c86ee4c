"""Littlewood-Richardson coefficients by crystal, pictures or ballot fillings"""

from typing import Dict
import logging

import click

from app.cli.options import domain_errors, echo_json, triple_options, wants_json
from app.schemas.shapes import Partition
from app.services.crystal import lr_coefficient_crystal
from app.services.oracle import lr_coefficient_ballot
from app.services.pictures import enumerate_pictures
from app.services.shapes import contains, skew_shape

logger = logging.getLogger(__name__)

METHODS = ("crystal", "pictures", "ballot")


def coefficient(method: str, lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lambda,mu} by one method; 0 whenever |lambda| + |mu| != |nu| or lambda is not inside nu."""
    if lam.size + mu.size != nu.size or not contains(nu, lam):
        return 0
    if method == "crystal":
        return lr_coefficient_crystal(lam, mu, nu)
    if method == "pictures":
        return len(enumerate_pictures(mu, skew_shape(nu, lam)))
    return lr_coefficient_ballot(lam, mu, nu)


@click.command()
@triple_options
@click.option("--method", type=click.Choice(METHODS + ("all",)), default="all", show_default=True)
@click.pass_context
def coeff(ctx: click.Context, lam: Partition, mu: Partition, nu: Partition, method: str):
    """Compute c^nu_{lambda,mu}; with --method all, also report whether the methods agree."""
    methods = METHODS if method == "all" else (method,)
    values: Dict[str, int] = {}
    with domain_errors():
        for name in methods:
            values[name] = coefficient(name, lam, mu, nu)
            logger.info(f"{name}: c^({nu})_({lam}),({mu}) = {values[name]}")
    agree = len(set(values.values())) == 1

    if wants_json(ctx):
        payload = {"lambda": list(lam.parts), "mu": list(mu.parts), "nu": list(nu.parts), "coefficients": values}
        if method == "all":
            payload["agree"] = agree
        echo_json(payload)
    else:
        for name, value in values.items():
            click.echo(f"{name:<9}{value}")
        if method == "all":
            click.echo(f"{'agree':<9}{'true' if agree else 'false'}")

    if not agree:
        logger.error(f"Methods disagree for lambda=({lam}) mu=({mu}) nu=({nu}): {values}")
        ctx.exit(1)

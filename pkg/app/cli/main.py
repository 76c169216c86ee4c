"""lrpictures command-line front end"""

import logging

import click

from app.cli.commands.coeff import coeff
from app.cli.commands.enumerate import enumerate_cmd
from app.cli.commands.orders import orders
from app.cli.commands.verify import verify
from app.core.config import settings
from app.core.logging_config import setup_logging

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(settings.APP_VERSION, prog_name="lrpictures")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="Overrides LRP_LOG_LEVEL; logs go to stderr")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text")
@click.pass_context
def cli(ctx: click.Context, log_level: str, as_json: bool):
    """Admissible pictures and Littlewood-Richardson crystals."""
    setup_logging(level=log_level)
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    logger.debug(f"Starting {settings.APP_NAME} {settings.APP_VERSION}")


cli.add_command(coeff)
cli.add_command(enumerate_cmd)
cli.add_command(orders)
cli.add_command(verify)

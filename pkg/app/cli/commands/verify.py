"""Exhaustive verification sweeps"""

from collections import OrderedDict
from typing import Optional
import logging

import click

from app.cli.deps import get_verification_service, initialize_services
from app.cli.options import domain_errors, echo_json, wants_json
from app.schemas.report import SweepBudget, VerificationReport
from app.utils.formatting import render_table

logger = logging.getLogger(__name__)

SUITES = ["agreement", "bijection", "order-independence", "theorem36", "oracle", "all"]

# flag name -> SweepBudget field
BUDGET_FLAGS = OrderedDict([
    ("--max-nu", "max_nu"),
    ("--max-rows", "max_rows"),
    ("--max-mu", "max_mu"),
    ("--all-pairs-size", "all_pairs_size"),
    ("--max-entry", "max_entry"),
    ("--max-size", "max_size"),
    ("--max-oracle-mu", "max_oracle_mu"),
])


def budget_options(f):
    for flag, field in reversed(BUDGET_FLAGS.items()):
        info = SweepBudget.model_fields[field]
        f = click.option(
            flag, field, type=click.IntRange(min=1 if field in ("max_rows", "max_entry") else 0),
            default=None, help=f"{info.description} [default: {info.default}]"
        )(f)
    return f


def render_report(report: VerificationReport) -> str:
    tallies = OrderedDict()
    for check in report.checks:
        passed, failed = tallies.get(check.name, (0, 0))
        tallies[check.name] = (passed + check.passed, failed + (not check.passed))

    scope = " ".join(f"{field}={value}" for field, value in report.scope.model_dump().items())
    lines = [f"suite: {report.suite}", f"scope: {scope}", ""]
    lines.append(render_table(
        ["check", "passed", "failed"],
        [[name, passed, failed] for name, (passed, failed) in tallies.items()]
    ))
    failures = report.failures()
    if failures:
        lines.append("")
        lines.append(render_table(
            ["failed check", "context", "detail"],
            [[check.name, check.context, check.detail] for check in failures]
        ))
    summary = report.summary
    lines.append("")
    lines.append(f"total {summary['total']}  passed {summary['passed']}  failed {summary['failed']}")
    return "\n".join(lines)


@click.command()
@click.argument("suite", type=click.Choice(SUITES), default="all")
@budget_options
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Worker processes for the sweep (default LRP_WORKERS)")
@click.option("--force", is_flag=True, help="Allow budgets above the configured caps")
@click.pass_context
def verify(ctx: click.Context, suite: str, workers: Optional[int], force: bool, **budget_values):
    """Run an exhaustive sweep; exits 1 if any check fails."""
    budget = SweepBudget(**{field: value for field, value in budget_values.items() if value is not None})
    initialize_services(workers)
    service = get_verification_service()
    with domain_errors():
        service.check_budget(budget, force=force)
        report = service.run(suite, budget)

    if wants_json(ctx):
        echo_json(report)
    else:
        click.echo(render_report(report))

    if not report.ok:
        logger.error(f"{report.summary['failed']} of {report.summary['total']} checks failed")
        ctx.exit(1)

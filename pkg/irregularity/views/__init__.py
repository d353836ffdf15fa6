"""
Command-line front end
The ``cli`` group builds the application once and dispatches to the
subcommands registered below.
"""
import sys
from typing import Optional, Sequence

import click

from config.base import config as profiles
from irregularity import __version__, create_app
from irregularity.utils.error_handler import LoggerConfig
from irregularity.views.enumeration_views import enumerate_trees, spectrum, verify_all, verify_trees
from irregularity.views.family_views import family, realize_command
from irregularity.views.graph_views import compute, delta, transform


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--profile', default='default', show_default=True, type=click.Choice(sorted(profiles)),
              help='Configuration profile.')
@click.option('--log-level', default=None, type=click.Choice(sorted(LoggerConfig.LOG_LEVELS)),
              help='Override the profile log level.')
@click.option('--timing', is_flag=True, help='Add elapsed seconds to reports.')
@click.version_option(__version__, prog_name='irregularity')
@click.pass_context
def cli(ctx, profile, log_level, timing):
    """Modified Albertson index A*(G): compute, construct, enumerate, verify."""
    ctx.obj = create_app(profile, log_level)
    ctx.meta['timing'] = timing


# Register commands
for command in (
    compute,
    delta,
    transform,
    family,
    realize_command,
    enumerate_trees,
    verify_trees,
    spectrum,
    verify_all,
):
    cli.add_command(command)


def run_cli(args: Optional[Sequence[str]] = None) -> int:
    """Run one invocation and return its exit status instead of exiting."""
    try:
        result = cli.main(args=list(args) if args is not None else None,
                          prog_name='irregularity', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run_cli())

"""
The steinhc command: dispatches to one function per sub-command.
"""

import logging
import sys

from .. import utils
from ..core import *
from .stein import cz_index, cyl_hc, full_hc, pairing
from .reeb import reeb_verify
from .polar import prequant_hc, polarization_check, cross_check

__all__ = ['run', 'main', 'COMMANDS']

LOGGER = logging.getLogger(__name__)

# sub-command name -> function of the remaining arguments
COMMANDS = {
    'cz-index': cz_index,
    'cyl-hc': cyl_hc,
    'full-hc': full_hc,
    'pairing': pairing,
    'reeb-verify': reeb_verify,
    'prequant-hc': prequant_hc,
    'polarization-check': polarization_check,
    'cross-check': cross_check,
}

USAGE = """usage: steinhc <command> --input FILE [options]

commands:
  cz-index            generators, CZ indices and plane-index check (--cutoff)
  cyl-hc              cylindrical contact homology (--cutoff)
  full-hc             Poincare series of full contact homology (--cutoff)
  pairing             genus-0 descendant pairings (--m-max)
  reeb-verify         numerical CZ indices of a handle (--m-max [--max-cz]),
                      Reeb trajectories (--trajectory) or periods
                      (--return-time)
  prequant-hc         contact homology of a prequantization (--cutoff)
  polarization-check  Betti number relations of a polarization
  cross-check         Stein versus prequantization contact homology (--cutoff)

common options: --format {table,csv,json}; --input - reads stdin
"""


def run(args=None):
    """Runs one steinhc command and returns the exit code: 0 on success,
    1 when a check fails, 2 for invalid input or usage.

    Arguments::

      args : list of strings | None
         the program name followed by the command and its flags, as in
         sys.argv (used if None)
    """
    program, args = utils.script_args(args)

    if not args:
        sys.stderr.write(USAGE)
        return EXIT_INVALID

    command, flags = args[0], args[1:]
    if command in ('-h', '--help'):
        sys.stdout.write(USAGE)
        return EXIT_OK

    if command not in COMMANDS:
        sys.stderr.write(
            'steinhc: unknown command {!r}\n\n'.format(command) + USAGE
        )
        return EXIT_INVALID

    try:
        return COMMANDS[command](flags)
    except SystemExit as err:
        # argparse: --help or a usage error
        return err.code if isinstance(err.code, int) else EXIT_INVALID
    except (SteinhcError, ValueError) as err:
        LOGGER.debug('%s failed', command, exc_info=True)
        sys.stderr.write(
            'steinhc {:s}: {:s}: {!s}\n'.format(
                command, type(err).__name__, err)
        )
        return EXIT_INVALID


def main():
    """Console entry point"""
    utils.setup_logging()
    sys.exit(run())

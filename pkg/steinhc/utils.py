"""
Classes and functions of general use, mostly for the scripts
"""

import argparse
from importlib import resources
import json
import logging
import os
import sys

import jsonschema
from jsonschema.exceptions import best_match

from .core import *
from .tables import FORMATS

__all__ = (
    'script_args', 'setup_logging', 'load_schema', 'json_path',
    'validate', 'read_manifold', 'command_parser', 'read_payload', 'emit',
    'KINDS',
)

# the kinds of input file and the schema for each payload
KINDS = ('stein', 'handle', 'prequant', 'polarization')


def script_args(args):
    """
    This is a small helper method that is used at the start of the steinhc
    entry point.

    If 'args' is None on entry, it is replaced by 'sys.argv'. It is then
    assumed that the first argument is the command name or else None. The
    command name argument is removed from args, and if not None, converted to
    just the file part of the path. It is then returned along with the
    remaining list of arguments in a two element tuple, i.e. (command, args).
    """
    if args is None:
        args = sys.argv.copy()
    else:
        args = list(args)

    command = args.pop(0) if args else None
    if command is not None:
        # just keep filename part, not any path
        command = os.path.split(command)[1]

    return (command, args)


def setup_logging(stream=None):
    """Configures the root logger from the environment variable STEINHC_LOG
    (a level name such as DEBUG, or a number; default WARNING). Output goes
    to stderr without timestamps. Warnings are routed into logging."""
    value = os.environ.get(LOG_ENV, 'WARNING').strip()
    if value.isdigit():
        level = int(value)
    else:
        level = logging.getLevelName(value.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    logging.basicConfig(
        stream=sys.stderr if stream is None else stream, level=level,
        format='%(levelname)s %(name)s: %(message)s', force=True
    )
    logging.captureWarnings(True)


def load_schema(name):
    """The JSON schema `name` ('manifold' or one of KINDS) shipped with the
    package"""
    text = resources.files('steinhc').joinpath(
        'schemas', '{:s}.json'.format(name)
    ).read_text(encoding='utf-8')
    return json.loads(text)


def json_path(path, root='$'):
    """Formats a jsonschema error path as e.g. $.payload.morse.points[2].index"""
    out = root
    for item in path:
        if isinstance(item, int):
            out += '[{:d}]'.format(item)
        else:
            out += '.{:s}'.format(item)
    return out


def validate(obj, name, root='$'):
    """Validates `obj` against the schema `name`, raising :class:`SchemaError`
    with the JSON path of the most relevant violation"""
    schema = load_schema(name)
    validator = jsonschema.Draft7Validator(schema)
    error = best_match(validator.iter_errors(obj))
    if error is not None:
        raise SchemaError(json_path(error.absolute_path, root), error.message)


def read_manifold(path, stdin=None):
    """Reads and validates an input file.

    Arguments::

      path : string
         file name, or '-' for standard input

      stdin : file-like | None
         the stream read when path is '-'; sys.stdin by default

    Returns:: (kind, payload)

    Raises :class:`SchemaError` if the file is not valid JSON or does not
    match the schemas.
    """
    try:
        if path == '-':
            obj = json.load(sys.stdin if stdin is None else stdin)
        else:
            with open(path, encoding='utf-8') as fin:
                obj = json.load(fin)
    except json.JSONDecodeError as err:
        raise SchemaError('$', 'invalid JSON: {!s}'.format(err))
    except OSError as err:
        raise SchemaError('$', 'cannot read {:s}: {!s}'.format(path, err))

    validate(obj, 'manifold')
    kind = obj['kind']
    validate(obj['payload'], kind, '$.payload')
    return kind, obj['payload']


def command_parser(command, description, cutoff=False, m_max=False):
    """An argparse parser for one command with the shared flags --input
    and --format, plus the optional --cutoff and --m-max. Cutoffs have no
    defaults since every output is a truncation."""
    parser = argparse.ArgumentParser(prog='steinhc ' + command,
                                     description=description)
    parser.add_argument(
        '--input', required=True,
        help='JSON input file with "kind" and "payload"; "-" for stdin'
    )
    parser.add_argument(
        '--format', default='table', choices=FORMATS,
        help='output format (default table)'
    )
    if cutoff:
        parser.add_argument(
            '--cutoff', type=int, required=True, help='highest degree computed'
        )
    if m_max:
        parser.add_argument(
            '--m-max', type=int, required=True, dest='m_max',
            help='highest multiplicity'
        )
    return parser


def read_payload(path, kind):
    """The payload of an input file, which must be of the given kind"""
    found, payload = read_manifold(path)
    if found != kind:
        raise SchemaError(
            '$.kind', 'expected {!r}, got {!r}'.format(kind, found)
        )
    return payload


def emit(*chunks):
    """Writes rendered chunks to stdout, separated by blank lines"""
    sys.stdout.write('\n'.join(chunk for chunk in chunks if chunk))

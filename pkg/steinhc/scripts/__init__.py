"""
Scripts sub-module of steinhc contains the commands used from the
terminal. Each is implemented as a function taking the list of its flags,
returning an exit code, for automatic inclusion in the documentation and
for use from tests. They are reached through the single 'steinhc' command,
e.g. ``steinhc cyl-hc --input c3.json --cutoff 10``.
"""

from .stein import cz_index, cyl_hc, full_hc, pairing
from .reeb import reeb_verify
from .polar import prequant_hc, polarization_check, cross_check
from .run import run, main

__all__ = [
    'cross_check', 'cyl_hc', 'cz_index',
    'full_hc',
    'main',
    'pairing', 'polarization_check', 'prequant_hc',
    'reeb_verify', 'run',
]

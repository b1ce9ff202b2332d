# Licensed under a 3-clause BSD style license - see LICENSE.rst

"""steinhc - contact homology of subcritical Stein domains

:mod:`steinhc` computes contact-homology invariants of the boundary V of a
subcritical Stein domain M = M' x C from the Morse data of M': cylindrical
contact homology, the Poincare series of the full contact homology algebra,
Conley-Zehnder indices and genus-0 descendant pairings. Everything on the
topological side is exact (rationals throughout). It also carries a
numerical model of the standard contact handle (Reeb field, linearised
flow, closed orbits and a numerical Conley-Zehnder index) that checks the
index formula independently, the Morse-Bott computation for
prequantization bundles, and the Betti number relations forced on a
subcritical polarization.

Most users will want the single command ``steinhc`` (see ``pydoc
steinhc.scripts``) which reads a JSON file and writes tables, CSV or JSON.

The code is split into sub-modules, e.g. :class:`MorseComplex` lives in
``steinhc.morse``, but the contents are imported to the top level so that
``pydoc steinhc.MorseComplex`` and ``pydoc steinhc.morse.MorseComplex``
report the same thing. Example code::

  >> import steinhc as shc
  >> morse = shc.MorseComplex(4, [shc.CritPoint('p', 0)])
  >> spec = shc.SteinDomainSpec(3, morse)
  >> print(shc.cyl_hc(spec, 10))
  GradedDims({4: 1, 6: 1, 8: 1, 10: 1})
  >> print(shc.full_hc_series(spec, 8).to_list())
  [1, 0, 0, 0, 1, 0, 1, 0, 2]

which is M = C^3, whose contact boundary is the standard sphere S^5.
"""

try:
    from importlib.metadata import version as _version, PackageNotFoundError
    __version__ = _version(__name__)
except PackageNotFoundError:
    # package is not installed
    pass

from .core import *
from .group import *
from .graded_algebra import *
from .morse import *
from .stein_hc import *
from .handle_dynamics import *
from .prequant import *
from .polarization import *
from .tables import *
from . import utils
from . import scripts

__all__ = core.__all__ + group.__all__ + graded_algebra.__all__ + \
    morse.__all__ + stein_hc.__all__ + handle_dynamics.__all__ + \
    prequant.__all__ + polarization.__all__ + tables.__all__

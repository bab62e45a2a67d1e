"""Computational alcove geometry, Hecke-algebra arithmetic and cyclic-quiver
combinatorics.

The heavy lifting lives in the compiled extension ``alcove._alcove``; this
package re-exports its public surface.
"""

from ._alcove import *  # noqa: F401,F403
from ._alcove import __doc__ as _ext_doc  # noqa: F401

"""Generalized Clifford algebra presentations over exact coefficient rings.

The heavy lifting happens in the compiled extension; this package re-exports
its surface.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__  # noqa: F401
except ImportError:  # development layout: extension sits on sys.path
    from _core import *  # noqa: F401,F403

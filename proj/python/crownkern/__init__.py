"""Reflection-positive kernels on the sphere and the crown of the hyperboloid.

Thin wrapper around the pybind11 module; all numerics live in the C++ core.
"""

from _crownkern import *  # noqa: F401,F403

try:
    from _crownkern import __doc__ as _core_doc  # noqa: F401
except ImportError:  # pragma: no cover
    pass

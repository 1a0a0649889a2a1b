"""Template-based lyric-to-melody toolkit.

Thin re-export of the compiled extension. The heavy lifting lives in the
C++ core; this package keeps the import name stable for both in-tree builds
(PYTHONPATH pointing at the build directory) and installed wheels.
"""

try:
    from _telemelody import *  # noqa: F401,F403  (in-tree build layout)
    from _telemelody import __doc__ as _core_doc
except ImportError:  # installed wheel layout: telemelody/_telemelody.so
    from telemelody._telemelody import *  # noqa: F401,F403
    from telemelody._telemelody import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
__version__ = "0.1.0"

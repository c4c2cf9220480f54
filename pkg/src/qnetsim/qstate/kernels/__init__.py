"""Tableau kernel selection: compiled extension if built, numpy fallback otherwise.

``active`` is the module the stabilizer backend uses; ``available()`` lists
every importable implementation (the benchmark and cross-checking tests use it).
"""

from . import _tableau_py

try:
    from . import _tableau_cy as _compiled
except ImportError:
    _compiled = None

active = _compiled if _compiled is not None else _tableau_py


def available():
    """All importable kernel implementations, compiled first."""
    mods = []
    if _compiled is not None:
        mods.append(_compiled)
    mods.append(_tableau_py)
    return mods

"""Numerical engine for the non-product 4D Thurston geometries."""

try:
    from ._thurston4 import *  # noqa: F401,F403
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _thurston4 import *  # noqa: F401,F403

"""Exact generalized coupon-collector solver backed by the C++ core."""

try:
    from ._gccp import *  # noqa: F401,F403  (installed package layout)
    from ._gccp import __doc__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout used by ctest
    from _gccp import *  # noqa: F401,F403
    from _gccp import __doc__  # noqa: F401

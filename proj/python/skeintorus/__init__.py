"""Exact quantum-torus computations for skein coordinates of marked surfaces."""

try:
    from ._skeintorus import *  # packaged layout
    from ._skeintorus import Surface, builtin_names  # noqa: F401
except ImportError:  # pragma: no cover - in-tree test layout
    from _skeintorus import *  # noqa: F401,F403
    from _skeintorus import Surface, builtin_names  # noqa: F401

__all__ = [
    "Surface",
    "builtin_names",
    "quantum_integer",
    "quantum_binomial",
    "chebyshev_coefficient",
    "gauss_binomial",
    "root_data",
    "cheb_expand",
    "verify",
    "run_cli",
]

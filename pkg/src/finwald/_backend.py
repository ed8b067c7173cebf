"""Kernel backend selection: compiled extension when available, pure numpy
otherwise.  Both modules expose the same functions with identical results;
``benchmarks/bench_kernels.py`` compares their speed side by side.
"""

try:
    from . import _kernels_fast as kernels  # type: ignore[attr-defined]
except ImportError:  # extension not built on this platform
    from . import _kernels_pure as kernels

BACKEND = kernels.BACKEND

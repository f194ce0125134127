"""Kernel lane selection.

The compiled extension (:mod:`sigmarec._kernels`) is preferred when it
imports; the pure-Python twin (:mod:`sigmarec._pykernels`) is the
fallback and is always available.  Set the environment variable
``SIGMAREC_PURE=1`` before import to force the pure lane (useful for
benchmarking and for testing the fallback).

The compiled divisor sieve and recurrence kernels run on int64 and
carry a very conservative overflow guard; requests beyond the guard
are routed to the pure lane automatically, so results are exact on
every path.
"""

from __future__ import annotations

import os

from sigmarec import _pykernels

if os.environ.get("SIGMAREC_PURE", "") not in ("", "0"):
    kernels = _pykernels
    COMPILED = False
else:
    try:
        from sigmarec import _kernels

        kernels = _kernels
        COMPILED = True
    except ImportError:
        kernels = _pykernels
        COMPILED = False

INT64_SAFE_MAX_N = 1_000_000_000


def bounded_kernels(max_n: int):
    """Kernels for an int64-bounded computation of size ``max_n``."""
    if COMPILED and max_n > INT64_SAFE_MAX_N:
        return _pykernels
    return kernels


def get_kernels(impl: str = "auto"):
    """Fetch a kernel lane by name: ``auto``, ``compiled`` or ``python``.

    ``compiled`` raises ImportError when the extension is not built.
    """
    if impl == "auto":
        return kernels
    if impl == "python":
        return _pykernels
    if impl == "compiled":
        from sigmarec import _kernels as ext

        return ext
    raise ValueError(f"unknown implementation lane: {impl!r}")

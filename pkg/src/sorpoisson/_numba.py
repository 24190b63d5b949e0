"""Numba availability shim.

All hot kernels carry ``@njit``; set ``SORPOISSON_DISABLE_NUMBA=1`` (or
run without numba installed) to execute the same functions as plain
Python.  ``NUMBA_ENABLED`` reports which path is active.
"""

import os


def _disabled_by_env():
    v = os.environ.get("SORPOISSON_DISABLE_NUMBA", "").strip().lower()
    return v not in ("", "0", "false", "no")


NUMBA_ENABLED = False
if not _disabled_by_env():
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:
        pass

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):
        """No-op decorator standing in for numba.njit."""
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap

"""Coverage-counting kernels behind verify.

Two interchangeable backends compute, for a batch of set tuples, how many
blocks contain each tuple (counting stops at lam since only the
"fewer than lam" question matters downstream):

  - "numba": jit-compiled loops with per-tuple early exit;
  - "numpy": vectorized boolean reduction, chunked to bound memory.

Selection order: the GENCOV_BACKEND environment variable ("numba" or
"numpy") wins; otherwise numba is used when importable, else numpy.
Both backends take the same arguments and return the same counts.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import InvalidInput

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

# membership: uint8 array [n_blocks, total_points], 1 where the block
#   contains the point (points indexed globally, part-major).
# tuples_idx: int64 array [n_tuples, t] of global point indices.

_CHUNK = 4096


def counts_numpy(membership: np.ndarray, tuples_idx: np.ndarray, lam: int) -> np.ndarray:
    n_tuples = tuples_idx.shape[0]
    out = np.empty(n_tuples, dtype=np.int64)
    if tuples_idx.shape[1] == 0:
        out[:] = min(membership.shape[0], lam)
        return out
    for lo in range(0, n_tuples, _CHUNK):
        chunk = tuples_idx[lo:lo + _CHUNK]
        # [n_blocks, chunk, t] -> all points present -> [n_blocks, chunk]
        contained = membership[:, chunk].all(axis=2)
        out[lo:lo + _CHUNK] = np.minimum(contained.sum(axis=0), lam)
    return out


if HAS_NUMBA:

    @njit(cache=True, nogil=True)
    def _counts_numba(membership, tuples_idx, lam):  # pragma: no cover - jitted
        n_tuples, width = tuples_idx.shape
        n_blocks = membership.shape[0]
        out = np.zeros(n_tuples, dtype=np.int64)
        for ti in range(n_tuples):
            c = 0
            for b in range(n_blocks):
                ok = True
                for j in range(width):
                    if membership[b, tuples_idx[ti, j]] == 0:
                        ok = False
                        break
                if ok:
                    c += 1
                    if c >= lam:
                        break
            out[ti] = c
        return out

    def counts_numba(membership: np.ndarray, tuples_idx: np.ndarray, lam: int) -> np.ndarray:
        return _counts_numba(membership, tuples_idx, lam)
else:
    counts_numba = None


def active_backend() -> str:
    """Resolve the backend name, honoring GENCOV_BACKEND."""
    choice = os.environ.get("GENCOV_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAS_NUMBA:
            raise InvalidInput("GENCOV_BACKEND=numba but numba is not installed")
        return "numba"
    if choice:
        raise InvalidInput(f"unknown GENCOV_BACKEND {choice!r}; use 'numba' or 'numpy'")
    return "numba" if HAS_NUMBA else "numpy"


def coverage_counts(membership: np.ndarray, tuples_idx: np.ndarray, lam: int) -> np.ndarray:
    """Count containing blocks per tuple, capped at lam."""
    if active_backend() == "numba":
        return counts_numba(membership, tuples_idx, lam)
    return counts_numpy(membership, tuples_idx, lam)

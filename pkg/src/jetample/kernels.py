"""Backend selection for the hot kernels.

The compiled extension is used when it was built; set ``JETAMPLE_PURE_PYTHON=1``
to force the pure-Python implementation. Both backends return identical results.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py

if os.environ.get("JETAMPLE_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

# headroom for the unchecked incremental updates in the compiled box scan
_SCAN_LIMIT = 1 << 60


def backends() -> dict[str, object]:
    """Available kernel modules by name (used by tests and the benchmark)."""
    found: dict[str, object] = {"python": _kernels_py}
    if _compiled is not None:
        found["cython"] = _compiled
    return found


def integer_rank(rows: Sequence[Sequence[int]], backend: str | None = None) -> int:
    impl = _pick(backend)
    return impl.integer_rank([list(r) for r in rows])


def scan_box(
    gram: Sequence[Sequence[int]],
    lc: Sequence[int],
    bounds: Sequence[int],
    constraints: Sequence[tuple[int, int, int, int, bool]],
    backend: str | None = None,
) -> list[tuple[tuple[int, ...], int, int]]:
    impl = _pick(backend)
    if impl is not _kernels_py and not _scan_fits(gram, lc, bounds):
        impl = _kernels_py
    return impl.scan_box(gram, lc, bounds, constraints)


def _pick(backend: str | None):
    if backend is None:
        return _compiled if _compiled is not None else _kernels_py
    found = backends()
    if backend not in found:
        raise ValueError(f"kernel backend {backend!r} is not available")
    return found[backend]


def _scan_fits(gram, lc, bounds) -> bool:
    n = len(bounds)
    ga_max = max((sum(abs(gram[j][i]) * bounds[i] for i in range(n)) for j in range(n)), default=0)
    d2_max = sum(abs(gram[i][j]) * bounds[i] * bounds[j] for i in range(n) for j in range(n))
    ld_max = sum(abs(c) * b for c, b in zip(lc, bounds))
    step = max((2 * b * ga_max + b * b * abs(gram[i][i]) for i, b in enumerate(bounds)), default=0)
    return max(ga_max, d2_max, ld_max, step) + d2_max < _SCAN_LIMIT

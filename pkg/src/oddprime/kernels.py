"""Backend selection for the search and independence kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module with identical semantics takes over.
:func:`use_backend` switches explicitly (benchmarks and parity tests use it).
"""

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

MAX_ORDER = _pykernels.MAX_ORDER
FOUND = _pykernels.FOUND
EXHAUSTED = _pykernels.EXHAUSTED
BUDGET_EXCEEDED = _pykernels.BUDGET_EXCEEDED

_active = _compiled if _compiled is not None else _pykernels


def available_backends():
    return ["compiled", "python"] if _compiled is not None else ["python"]


def backend_name():
    return "compiled" if _active is _compiled else "python"


def get_backend(name):
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def use_backend(name):
    """Make ``name`` ("compiled" or "python") the active backend; returns the previous name."""
    global _active
    previous = backend_name()
    _active = get_backend(name)
    return previous


def independence_number(adj):
    return _active.independence_number(adj)


def search_labeling(adj, order, budget):
    return _active.search_labeling(adj, order, budget)

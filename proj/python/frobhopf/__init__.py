"""Exact universal (co)measuring computations for Frobenius algebras.

Thin wrapper over the compiled extension: every function takes CLI-style
algebra/field shorthand ("group:C2", "matrix:2", "k", "F5", "Q") and returns
parsed JSON.
"""

import json as _json

from frobhopf._core import (  # noqa: F401
    EngineError,
    __version__,
    reproduce_ids,
)
from frobhopf import _core


def _wrap(fn):
    def call(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


validate = _wrap(_core.validate)
build = _wrap(_core.build)
dimension = _wrap(_core.dimension)
comeasure = _wrap(_core.comeasure)
grouplikes = _wrap(_core.grouplikes)
unit_primitives = _wrap(_core.unit_primitives)
antipode = _wrap(_core.antipode)
hopf_check = _wrap(_core.hopf_check)
duality_check = _wrap(_core.duality_check)
reproduce = _wrap(_core.reproduce)

"""Exact computations with groupoid-graded algebras.

Thin wrapper over the native module: every call marshals dicts to JSON
text and back. Structured failures from the core surface as ValueError
with a "Kind: message" payload.
"""

import json

try:
    from . import _grograde as _core
except ImportError:  # built out of tree: the extension sits on sys.path
    import _grograde as _core

__version__ = "0.1.0"


def _dumps(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def validate_groupoid(groupoid):
    return json.loads(_core.validate_groupoid(_dumps(groupoid)))


def validate_ring(ring):
    return json.loads(_core.validate_ring(_dumps(ring)))


def ring_idempotents(ring):
    return json.loads(_core.ring_idempotents(_dumps(ring)))


def check_grading(algebra, groupoid=None):
    return json.loads(
        _core.check_grading(_dumps(algebra), _dumps(groupoid) if groupoid else "")
    )


def epsilons(algebra, groupoid=None):
    return json.loads(
        _core.epsilons(_dumps(algebra), _dumps(groupoid) if groupoid else "")
    )


def strong(algebra, groupoid=None):
    return json.loads(
        _core.strong(_dumps(algebra), _dumps(groupoid) if groupoid else "")
    )


def check_action(action):
    return json.loads(_core.check_action(_dumps(action)))


def build_skew(action):
    return json.loads(_core.build_skew(_dumps(action)))


def lpa_report(graph, p):
    return json.loads(_core.lpa_report(_dumps(graph), p))


def lpa_export(graph, p):
    return json.loads(_core.lpa_export(_dumps(graph), p))


def cohomology(module, degree, backend="auto", cap=1000000):
    return json.loads(_core.cohomology(_dumps(module), degree, backend, cap))


def classify(algebra, groupoid=None, sample=50, cap=1000000, seed=1):
    return json.loads(
        _core.classify(
            _dumps(algebra),
            _dumps(groupoid) if groupoid else "",
            sample,
            cap,
            seed,
        )
    )

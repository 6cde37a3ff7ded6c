"""Scattering on a symmetric double rectangular barrier.

Thin wrapper around the compiled extension: stationary transfer-matrix
amplitudes, transmission/reflection subprocess wave functions, the family of
characteristic times, and Gaussian wave-packet dynamics.
"""

import importlib

__all__ = [
    "BarrierSystem",
    "CurrentAudit",
    "GroupTimes",
    "RefDwell",
    "TotalDwell",
    "TrDwell",
    "TwoBarrierParams",
    "buttiker_dwell",
    "dwell_times",
    "find_resonances",
    "group_times",
    "packet_state",
    "packet_summary",
    "scattering_params",
    "subprocess_waves",
    "superposition_audit",
    "tau0",
    "tau_free",
    "total_wave",
]

__version__ = "1.0.0"

# installed layout keeps the extension inside the package; a build-tree
# checkout has it on sys.path instead
try:
    _ext = importlib.import_module("._dbarrier", __name__)
except ImportError:
    _ext = importlib.import_module("_dbarrier")

globals().update({_name: getattr(_ext, _name) for _name in __all__})
del importlib, _ext

"""
JSON form of distributions:

    {"breakpoints": [w1, ...],
     "pieces": ["<smooth expr>", ...],
     "deltas": [{"point": w, "coeffs": [[re, im], ...]}, ...]}
"""

import json
from typing import Any, Dict

from ..algebra import DeltaComb, Distribution, PiecewiseSmooth, make_distribution
from ..expr import format_smooth
from ..utils.config_loader import DEFAULTS, KernelSettings
from .parser import parse_smooth


def to_dict(F: Distribution) -> Dict[str, Any]:
    return {
        "breakpoints": list(F.breakpoints),
        "pieces": [format_smooth(p) for p in F.pieces],
        "deltas": [
            {"point": d.point, "coeffs": [[c.real, c.imag] for c in d.coeffs]}
            for d in F.deltas
        ],
    }


def from_dict(data: Dict[str, Any], settings: KernelSettings = DEFAULTS) -> Distribution:
    try:
        breakpoints = tuple(float(w) for w in data["breakpoints"])
        pieces = tuple(parse_smooth(text, settings) for text in data["pieces"])
        combs = [
            DeltaComb.make(
                float(d["point"]),
                (complex(re, im) for re, im in d["coeffs"]),
                settings.eps_zero,
            )
            for d in data.get("deltas", [])
        ]
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed distribution JSON: {e}") from e
    return make_distribution(PiecewiseSmooth(breakpoints, pieces), combs, settings)


def to_json(F: Distribution, indent: int = 2) -> str:
    return json.dumps(to_dict(F), indent=indent)


def from_json(text: str, settings: KernelSettings = DEFAULTS) -> Distribution:
    return from_dict(json.loads(text), settings)

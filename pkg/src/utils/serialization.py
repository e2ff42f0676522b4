#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Serialization for ZicGdof
Exact rational parsing and the JSON / CSV forms of regions and series
"""

import csv
import io
import json
import logging
from fractions import Fraction

from src.core.region import HalfPlane, Region2D, intersect
from src.core.types import AntennaConfig, Alpha, to_fraction

logger = logging.getLogger("ZicGdof.Serialization")


def format_rational(value):
    """Render a rational as "num/den" """
    value = to_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    """Parse "num/den" or a decimal string exactly

    Raises:
        ValueError: not a rational number
    """
    if not isinstance(text, str):
        return to_fraction(text)
    return to_fraction(text.strip())


def parse_alpha_grid(text):
    """Parse an alpha grid

    Accepts "start:stop:step" (stop included when hit exactly) or a comma
    separated list. Values must be non-negative and strictly increasing.

    Returns:
        list of Fraction
    """
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"Alpha grid {text!r} must look like start:stop:step")
        start, stop, step = (parse_rational(p) for p in parts)
        if step <= 0:
            raise ValueError(f"Alpha grid step must be positive, got {step}")
        values = []
        value = start
        while value <= stop:
            values.append(value)
            value += step
    else:
        values = [parse_rational(p) for p in text.split(",") if p.strip()]
    if not values:
        raise ValueError(f"Alpha grid {text!r} is empty")
    if values[0] < 0:
        raise ValueError(f"Alpha grid values must be non-negative, got {values[0]}")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"Alpha grid {text!r} is not strictly increasing")
    return values


def halfplane_to_dict(halfplane):
    return {
        "a1": format_rational(halfplane.a1),
        "a2": format_rational(halfplane.a2),
        "b": format_rational(halfplane.b),
    }


def region_to_dict(region, cfg=None, alpha=None):
    """JSON-ready dictionary {config, alpha, halfplanes, vertices}"""
    return {
        "config": list(cfg.as_tuple()) if cfg is not None else None,
        "alpha": format_rational(Alpha.of(alpha).value) if alpha is not None else None,
        "halfplanes": [halfplane_to_dict(h) for h in region.halfplanes],
        "vertices": [[format_rational(v.d1), format_rational(v.d2)] for v in region.vertices],
    }


def region_from_dict(data):
    """Rebuild a region from its half-planes

    Returns:
        tuple: (Region2D, AntennaConfig or None, Fraction or None)
    """
    planes = [
        HalfPlane(parse_rational(h["a1"]), parse_rational(h["a2"]), parse_rational(h["b"]))
        for h in data["halfplanes"]
    ]
    cfg = AntennaConfig(*data["config"]) if data.get("config") else None
    alpha = parse_rational(data["alpha"]) if data.get("alpha") is not None else None
    return intersect(planes), cfg, alpha


def region_to_json(region, cfg=None, alpha=None):
    return json.dumps(region_to_dict(region, cfg, alpha), indent=2)


def region_to_csv(region):
    """Vertices as CSV with header d1,d2"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["d1", "d2"])
    for vertex in region.vertices:
        writer.writerow([format_rational(vertex.d1), format_rational(vertex.d2)])
    return buffer.getvalue()


def series_to_dict(cfg, rows):
    kinds = list(rows[0].values) if rows else []
    return {
        "config": list(cfg.as_tuple()),
        "series": {
            kind: [[format_rational(row.alpha), format_rational(row.values[kind])] for row in rows]
            for kind in kinds
        },
    }


def series_to_csv(rows):
    """Sum-GDoF series as CSV with header alpha,<kind>,..."""
    kinds = list(rows[0].values) if rows else []
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["alpha", *kinds])
    for row in rows:
        writer.writerow([format_rational(row.alpha), *(format_rational(row.values[k]) for k in kinds)])
    return buffer.getvalue()


def slope_points_to_csv(estimate):
    """Per-ladder-point mean rates of a slope estimate"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["log2_rho", "mean_rate", "stderr"])
    for x, mean, err in zip(estimate.snr_exponents, estimate.mean_rates, estimate.point_stderrs):
        writer.writerow([repr(float(x)), repr(mean), repr(err)])
    return buffer.getvalue()


def corners_to_dict(cfg, alpha, corner_set):
    return {
        "config": list(cfg.as_tuple()),
        "alpha": format_rational(Alpha.of(alpha).value),
        "case": corner_set.case_id,
        "corners": [
            {
                "d1": format_rational(point.d1),
                "d2": format_rational(point.d2),
                "a2": format_rational(allocation.a2),
                "d_eta": format_rational(allocation.d_eta),
                "regime": allocation.regime,
                **({"a2_d2_threshold": format_rational(allocation.d2_threshold)}
                   if allocation.d2_threshold is not None else {}),
            }
            for point, allocation in corner_set.points
        ],
    }


def fraction_default(value):
    """json.dumps default hook for Fractions"""
    if isinstance(value, Fraction):
        return format_rational(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")

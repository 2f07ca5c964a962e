"""JSON wire formats.

Rationals serialize as "p/q" strings; integers as JSON numbers when they fit
53 bits, strings otherwise. Polygon input accepts JSON integers or strings
holding exact decimals or fractions ("3/7"); JSON floats are parsed from
their decimal source text so nothing is rounded.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import ValidationError
from .geom import GeneralizedPolygon, Polygon, Region, validate_generalized, validate_polygon

_MAX_SAFE = 1 << 53


def fraction_to_json(v: Fraction | int) -> int | str:
    f = Fraction(v)
    if f.denominator == 1:
        n = f.numerator
        return n if abs(n) < _MAX_SAFE else str(n)
    return f"{f.numerator}/{f.denominator}"


def loads_exact(text: str) -> Any:
    """json.loads with floats parsed exactly from their decimal text."""
    return json.loads(text, parse_float=Fraction)


def _coord(v: Any) -> Fraction:
    if isinstance(v, bool):
        raise ValidationError("coordinate must be a number or string")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"bad coordinate {v!r}") from e
    raise ValidationError(f"bad coordinate {v!r}")


def _vertex_list(obj: Any, what: str) -> list[tuple[Fraction, Fraction]]:
    if not isinstance(obj, list) or not all(
            isinstance(v, list) and len(v) == 2 for v in obj):
        raise ValidationError(f"{what} must be a list of [x, y] pairs")
    return [(_coord(v[0]), _coord(v[1])) for v in obj]


def polygon_from_json_obj(obj: Any, *, allow_degenerate: bool = False) -> Region:
    """Parse {"vertices": [[x, y], ...], "holes": [...]} into a region."""
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValidationError('polygon JSON needs a "vertices" key')
    verts = _vertex_list(obj["vertices"], "vertices")
    holes = obj.get("holes") or []
    if not isinstance(holes, list):
        raise ValidationError('"holes" must be a list of vertex lists')
    if not holes:
        return validate_polygon(verts, allow_degenerate=allow_degenerate)
    hole_lists = [_vertex_list(hv, "hole") for hv in holes]
    return validate_generalized(verts, hole_lists)


def polygon_from_json(text: str, **kw) -> Region:
    return polygon_from_json_obj(loads_exact(text), **kw)


def region_to_json_obj(region: Region) -> dict:
    return region.to_json_obj()


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)

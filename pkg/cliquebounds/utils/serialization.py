"""JSON-safe rendering of exact values: integers as decimal strings, rationals as "p/q"."""
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel

from cliquebounds.config import OUTPUT_CONFIG
from cliquebounds.errors import DomainError

import logging
logger = logging.getLogger(__name__)


def render_rational(value: Fraction) -> str:
    """Render as "p/q" in lowest terms; integers stay "p/1" so the type survives a round trip."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        numerator, denominator = text.split("/")
        return Fraction(int(numerator), int(denominator))
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"not a rational 'p/q': {text!r}") from e


def render_decimal(value: Fraction, places: Optional[int] = None) -> str:
    """Decimal rendering rounded half up, computed in integer arithmetic."""
    places = OUTPUT_CONFIG["decimal_places"] if places is None else places
    scaled = abs(value) * 10 ** places
    digits = int(scaled + Fraction(1, 2))
    sign = "-" if value < 0 and digits else ""
    whole, frac = divmod(digits, 10 ** places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def to_json_safe(value: Any) -> Any:
    """
    Convert models and exact numbers to JSON-ready data.

    Integers become decimal strings and Fractions "p/q" strings, so no value
    passes through floating point. Booleans and None are kept as they are.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return render_rational(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, BaseModel):
        # walk fields directly: model_dump() would turn a Fraction into str(Fraction)
        return {name: to_json_safe(getattr(value, name)) for name in type(value).model_fields}
    if isinstance(value, dict):
        return {str(to_json_safe(key)): to_json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_json_safe(item) for item in items]
    raise DomainError(f"cannot serialize {type(value).__name__}")

from typing import Optional, Tuple

from config import INT_LIMIT


def validate_int_vector(text: str, length: Optional[int] = None) -> Tuple[bool, str, tuple]:
    """Parse comma-separated integers such as '1,1,-2'"""
    if text is None or not text.strip():
        return False, "Vector cannot be empty", ()

    parts = [p.strip() for p in text.strip().strip("[]()").split(",")]
    values = []
    for part in parts:
        try:
            value = int(part)
        except ValueError:
            return False, f"Invalid integer '{part}' in '{text}'", ()
        if abs(value) > INT_LIMIT:
            return False, f"Integer {value} exceeds the signed 64-bit range", ()
        values.append(value)

    if length is not None and len(values) != length:
        return False, f"Expected {length} entries, got {len(values)}", ()

    return True, "", tuple(values)


def validate_dim_vector(text: str, length: Optional[int] = None) -> Tuple[bool, str, tuple]:
    """Non-negative, not identically zero"""
    ok, msg, values = validate_int_vector(text, length)
    if not ok:
        return ok, msg, values

    if any(x < 0 for x in values):
        return False, "Dimension vector entries cannot be negative", ()
    if not any(values):
        return False, "Dimension vector must be non-zero", ()

    return True, "", values


def validate_positive_int(value, name: str = "value", minimum: int = 1) -> Tuple[bool, str, int]:
    """Validate and convert an integer parameter with a lower bound"""
    try:
        number = int(value)
    except (TypeError, ValueError):
        return False, f"Invalid {name} '{value}'", 0

    if number < minimum:
        return False, f"{name} must be at least {minimum}", 0
    return True, "", number


def validate_export_path(path: str) -> Tuple[bool, str, str]:
    """Catalog exports are .csv or .xlsx"""
    if not path:
        return False, "Export path cannot be empty", ""

    suffix = path.rsplit(".", 1)[-1].lower() if "." in path else ""
    if suffix not in ("csv", "xlsx"):
        return False, "Export file must end in .csv or .xlsx", ""
    return True, "", path

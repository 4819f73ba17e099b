"""
Quiver JSON: {"n": <int>, "arrows": [[src, dst, mult], ...]} with 0-indexed vertices,
or {"matrix": [[...], ...]} with matrix[i][j] arrows i -> j.
A quiver source is either a file path or an embedded fixture written as @name.
"""
import json
import os
from typing import Optional

from modules.models import Quiver
from modules.quiver_core import arrow_list, make_quiver
from utils.constants import FIXTURE_PREFIX
from utils.exceptions import CycleError, QuiverError, QuiverFormatError
from utils.fixtures import fixture_arrows
from utils.logger import logger


def quiver_from_dict(data) -> Quiver:
    """Validate the schema and build the quiver"""
    if not isinstance(data, dict):
        raise QuiverFormatError("Quiver JSON must be an object with keys 'n' and 'arrows'")
    if 'matrix' in data:
        return _quiver_from_matrix(data)
    if 'n' not in data or 'arrows' not in data:
        raise QuiverFormatError("Quiver JSON needs both 'n' and 'arrows'")

    n = data['n']
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise QuiverFormatError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(data['arrows'], list):
        raise QuiverFormatError("'arrows' must be a list of [src, dst, mult] triples")

    arrows = []
    for entry in data['arrows']:
        if (not isinstance(entry, list) or len(entry) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)):
            raise QuiverFormatError(f"Arrow entry {entry!r} is not an integer triple [src, dst, mult]")
        arrows.append(tuple(entry))

    try:
        return make_quiver(n, arrows)
    except CycleError:
        raise
    except IndexError as e:
        raise QuiverFormatError(str(e))


def _quiver_from_matrix(data: dict) -> Quiver:
    rows = data['matrix']
    if (not isinstance(rows, list) or not rows
            or not all(isinstance(row, list) and len(row) == len(rows) for row in rows)):
        raise QuiverFormatError("'matrix' must be a non-empty square list of rows")
    if not all(isinstance(x, int) and not isinstance(x, bool) for row in rows for x in row):
        raise QuiverFormatError("'matrix' entries must be integers")
    if 'n' in data and data['n'] != len(rows):
        raise QuiverFormatError(f"'n' is {data['n']!r} but 'matrix' has {len(rows)} rows")

    try:
        return Quiver.from_matrix(rows)
    except CycleError:
        raise
    except QuiverError as e:
        raise QuiverFormatError(str(e))


def quiver_to_dict(Q: Quiver) -> dict:
    return {'n': Q.n, 'arrows': [list(arrow) for arrow in arrow_list(Q)]}


def load_quiver(source: str) -> Quiver:
    """Read a quiver from a JSON file, or from a fixture when source starts with @"""
    if source.startswith(FIXTURE_PREFIX):
        name = source[len(FIXTURE_PREFIX):]
        try:
            n, arrows = fixture_arrows(name)
        except KeyError as e:
            raise QuiverFormatError(e.args[0])
        return make_quiver(n, arrows)

    if not os.path.exists(source):
        raise QuiverFormatError(f"Quiver file not found: {source}")

    try:
        with open(source, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Malformed quiver JSON in {source}: {e}")
        raise QuiverFormatError(f"Malformed JSON in {source}: {e}")

    return quiver_from_dict(data)


def dump_quiver(Q: Quiver, path: Optional[str] = None) -> str:
    """Serialize to JSON text; also write it to path when given"""
    text = json.dumps(quiver_to_dict(Q))
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text + "\n")
        logger.info(f"Quiver written to {path}")
    return text

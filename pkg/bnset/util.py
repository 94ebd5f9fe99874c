from __future__ import annotations

import logging
import math
import re
import sys
from os import PathLike
from pathlib import Path

from bnset.exceptions import InputEncodingError

logger = logging.getLogger(__name__)

DECIMAL_PATTERN = re.compile(r"-?[0-9]+")


def read_text(path: str | PathLike) -> str:
    """Read a UTF-8 input file; ``-`` reads standard input."""
    try:
        if str(path) == "-":
            return sys.stdin.read()
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as error:
        raise InputEncodingError(f"{path} is not valid UTF-8 (byte {error.start})") from error
    logger.debug("Read %d characters from %s", len(text), path)
    return text


def strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def exact_square_roots(value: int) -> list[int]:
    """Integer roots of r*r == value in ascending order (empty if there are none)."""
    if value < 0:
        return []
    root = math.isqrt(value)
    if root * root != value:
        return []
    if root == 0:
        return [0]
    return [-root, root]

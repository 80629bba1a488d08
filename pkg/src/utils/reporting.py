"""
Report emission
JSON payloads with unit strings and CSV tables at 17 significant digits,
written atomically when a path is given
"""

import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Callable, Mapping, Optional, TextIO

import pandas as pd

CSV_FLOAT_FORMAT = "%.16e"


def _atomic_write(path: str, write: Callable[[TextIO], None]) -> None:
    """Write through a temp file in the target directory, then rename into place"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
    try:
        with os.fdopen(fd, 'w', newline='') as f:
            write(f)
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise


def write_json(payload: Mapping[str, Any], path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if path:
        _atomic_write(path, lambda f: f.write(text))
    else:
        (stream or sys.stdout).write(text)


def write_csv(frame: pd.DataFrame, path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    def emit(f: TextIO) -> None:
        frame.to_csv(f, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")

    if path:
        _atomic_write(path, emit)
    else:
        emit(stream or sys.stdout)


def with_units(values: Mapping[str, float], units: Mapping[str, str]) -> dict:
    """Pair every value with its unit string"""
    return {name: {"value": value, "unit": units[name]} for name, value in values.items()}

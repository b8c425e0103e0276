import json
import math
from typing import *
import pandas as pd

FLOAT_FORMAT = "%.15g"


def round_sig(value, digits: Optional[int] = 15):
    """Round floats (recursively inside lists/dicts) to ``digits`` significant digits."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return float("%.*g" % (digits, value))
    if isinstance(value, dict):
        return {k: round_sig(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_sig(v, digits) for v in value]
    return value


def dump_json(payload: Dict) -> str:
    return json.dumps(round_sig(payload), sort_keys=True, indent=2) + "\n"


def frame_to_csv(frame: pd.DataFrame, path: Optional[str] = None) -> str:
    """Serialize a table the one way every command does; also writes ``path`` if given."""
    text = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    return text

import shutil
import sys
from typing import *


def _format_value(val) -> str:
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, int):
        return "%d" % val
    if isinstance(val, float):
        return "%.6g" % val
    return str(val)


def result_visualizer(result: Dict[str, Any], title: Optional[str] = "Summary", stream=None):
    """
    Print a boxed key/value summary of an experiment.

    Args:
        result (:obj:`Dict[str, Any]`): ordered mapping of labels to values.
        title (:obj:`str`, optional): box title. Defaults to "Summary".
        stream (optional): file-like target. Defaults to stderr so that tables on stdout stay clean.
    """
    write = (stream or sys.stderr).write
    cols = shutil.get_terminal_size((80, 24)).columns

    rows = [(str(key), _format_value(val)) for key, val in result.items()]
    key_width = max([len(k) for k, _ in rows] + [0]) + 2
    val_width = max([len(v) for _, v in rows] + [len(title)]) + 2
    # shrink the value column first when the box does not fit
    overflow = key_width + val_width + 3 - cols
    if overflow > 0:
        val_width = max(8, val_width - overflow)
    inner = key_width + val_width + 1

    rule = "+" + "=" * inner + "+\n"
    write(rule)
    write("|" + title[:inner].center(inner) + "|\n")
    write(rule)
    for key, val in rows:
        write("| " + key[:key_width - 2].ljust(key_width - 1) + "| " + val[:val_width - 2].ljust(val_width - 1) + "|\n")
    write(rule)

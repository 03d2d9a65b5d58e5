import json

import numpy as np

from fincat.category import Verdict


EXIT_CODES = {
    None: 0,
    Verdict.HOLDS: 0,
    Verdict.FAILS: 1,
    Verdict.UNKNOWN: 3,
    Verdict.HYPOTHESES_NOT_MET: 3,
}
INPUT_ERROR = 2
FORMATS = ("text", "json")


def _plain(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _lines(value, prefix=""):
    if isinstance(value, dict):
        if not value:
            yield f"{prefix}: {{}}"
        for key in sorted(value):
            yield from _lines(value[key], f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(value, (list, tuple)) and any(isinstance(v, (dict, list, tuple)) for v in value):
        for k, item in enumerate(value):
            yield from _lines(item, f"{prefix}[{k}]")
    else:
        yield f"{prefix}: {json.dumps(value, default=_plain)}"


class Report(object):
    """Outcome of one command.

    Attributes
    ----------
    command : str
        command name
    flags : dict
        flags the command ran with, budgets included
    verdict : Verdict or None
        None for commands that compute rather than decide
    data : dict
        command-specific results (groups, homology tables, witnesses)
    """

    def __init__(self, command: str, flags: dict, verdict: Verdict = None, data: dict = None):
        self.command = command
        self.flags = {k: v for k, v in flags.items() if v is not None}
        self.verdict = verdict
        self.data = {} if data is None else dict(data)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_dict(self) -> dict:
        out = {"command": self.command, "flags": self.flags}
        if self.verdict is not None:
            out["verdict"] = self.verdict.value
        out.update(self.data)
        return out

    def render(self, fmt: str = "text") -> str:
        """Serialize as sorted JSON or as one ``path: value`` line per
        leaf of the JSON document."""
        if fmt not in FORMATS:
            raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
        if fmt == "json":
            return json.dumps(self.to_dict(), default=_plain, sort_keys=True, indent=2)
        # round trip through JSON so both renderings see the same data
        data = json.loads(json.dumps(self.to_dict(), default=_plain))
        return "\n".join(_lines(data))

"""
Writing command output and exit codes
"""
import json
import logging
import sys
from pathlib import Path
from typing import Any, Iterable, Optional

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def emit(text: str, out: Optional[Path] = None) -> None:
    """Write to --out when given, stdout otherwise; a trailing newline is added if missing"""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(text)} bytes to {out}")


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def lines(items: Iterable[str]) -> str:
    return "\n".join(items)


def status(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_FAILURE

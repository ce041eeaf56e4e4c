"""Plain-text fan files.

One ray per line as two decimal integers separated by whitespace, in
counterclockwise order.  ``#`` starts a comment; blank lines are ignored.
:func:`dump_fan` writes the canonical text, so ``dumps(loads(s)) == s`` for any
file it produced.
"""

from __future__ import annotations

import os
from typing import Iterable

from .errors import ToricError
from .fan import Fan

__all__ = ["FanParseError", "loads", "parse_rays", "dumps", "load_fan", "dump_fan"]


class FanParseError(ToricError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _rays(lines: Iterable[str]) -> list[tuple[int, int]]:
    rays = []
    for n, raw in enumerate(lines, 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise FanParseError(f"expected two integers, found {len(parts)} fields", n)
        try:
            rays.append((int(parts[0], 10), int(parts[1], 10)))
        except ValueError:
            raise FanParseError(f"not an integer pair: {body!r}", n) from None
    return rays


def loads(text: str) -> Fan:
    """Parse fan text; validation errors propagate as :class:`FanError`."""
    return Fan(tuple(_rays(text.splitlines())))


def parse_rays(text: str) -> list[tuple[int, int]]:
    """Parse without validating, for reporting on broken fans."""
    return _rays(text.splitlines())


def dumps(f: Fan) -> str:
    return "".join(f"{x} {y}\n" for x, y in f.rays)


def load_fan(path: str | os.PathLike) -> Fan:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump_fan(f: Fan, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(f))

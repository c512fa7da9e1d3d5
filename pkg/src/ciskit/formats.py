"""Text file formats for codes.

Binary codes: header ``bin <k> <n>`` followed by k rows of n characters from
{0,1} (character j = coordinate j).  Z4 matrices use the ``z4`` header and
live in ciskit.z4; classification reports in ciskit.classify.
"""

from __future__ import annotations

from typing import IO

from .codes import LinearCode
from .gf2 import BitMatrix

__all__ = ["write_code", "read_code"]


def write_code(code: LinearCode, fp: IO[str]) -> None:
    fp.write(f"bin {code.dimension} {code.length}\n")
    for s in code.generator.to_strings():
        fp.write(s + "\n")


def read_code(fp: IO[str]) -> LinearCode:
    header = fp.readline().split()
    if len(header) != 3 or header[0] != "bin":
        raise ValueError(f"bad code file header: {header!r}")
    k, n = int(header[1]), int(header[2])
    rows = []
    for _ in range(k):
        line = fp.readline().strip()
        if len(line) != n or set(line) - {"0", "1"}:
            raise ValueError(f"bad generator row: {line!r}")
        rows.append(line)
    return LinearCode(BitMatrix.from_strings(rows))

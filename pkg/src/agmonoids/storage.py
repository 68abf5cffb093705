"""Text encodings for tables, permutations and table databases.

A table of order ``n <= 9`` is encoded as its ``n*n`` row-major entries, one
decimal digit each. A database file is ASCII with ``\\n`` line endings::

    AGMON 1 n=4 kind=cm count=19
    0123112322233333
    ...
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Union

from .core import AlgebraError, CayleyTable, Permutation, StructureKind, apply_permutation, left_identities

FORMAT_VERSION = 1
MAX_ENCODABLE_ORDER = 9

_HEADER = re.compile(r"AGMON (\d+) n=(\d+) kind=(cm|ag) count=(\d+)")
_CYCLES = re.compile(r"\s*\(\s*\)\s*|(\s*\(\s*\d+(\s*,\s*\d+)*\s*\)\s*)+")


class FormatError(AlgebraError):
    """A malformed encoded table or database file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class HeaderError(FormatError):
    pass


class CountMismatchError(FormatError):
    pass


class TableLineError(FormatError):
    pass


class CycleNotationError(AlgebraError):
    pass


class MalformedCyclesError(CycleNotationError):
    pass


class RepeatedElementError(CycleNotationError):
    pass


class ElementRangeError(CycleNotationError):
    pass


@dataclass(frozen=True)
class TableDatabase:
    order: int
    kind: StructureKind
    tables: tuple[CayleyTable, ...]
    version: int = FORMAT_VERSION

    def __post_init__(self):
        for t in self.tables:
            if t.order != self.order:
                raise AlgebraError(f"table of order {t.order} in a database of order {self.order}")

    @property
    def count(self) -> int:
        return len(self.tables)


def encode_table(t: CayleyTable) -> str:
    if t.order > MAX_ENCODABLE_ORDER:
        raise FormatError(f"order {t.order} exceeds the one-digit encoding limit of {MAX_ENCODABLE_ORDER}")
    return "".join(map(str, t.flat))


def decode_table(line: str, n: int) -> CayleyTable:
    if not 1 <= n <= MAX_ENCODABLE_ORDER:
        raise FormatError(f"order {n} cannot be encoded")
    if len(line) != n * n:
        raise FormatError(f"expected {n * n} digits for order {n}, got {len(line)}")
    entries = []
    for ch in line:
        if not ("0" <= ch <= "9") or int(ch) >= n:
            raise FormatError(f"bad entry {ch!r} for order {n}")
        entries.append(int(ch))
    return CayleyTable.from_flat(entries, n)


def format_db(db: TableDatabase) -> str:
    lines = [f"AGMON {db.version} n={db.order} kind={db.kind.value} count={db.count}"]
    lines.extend(encode_table(t) for t in db.tables)
    return "\n".join(lines) + "\n"


def parse_db(text: str) -> TableDatabase:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise HeaderError("empty database", line=1)
    match = _HEADER.fullmatch(lines[0].rstrip("\r"))
    if match is None:
        raise HeaderError(f"malformed header {lines[0]!r}", line=1)
    version, n, kind, count = match.groups()
    version, n, count = int(version), int(n), int(count)
    if version != FORMAT_VERSION:
        raise HeaderError(f"unsupported format version {version}", line=1)
    if not 1 <= n <= MAX_ENCODABLE_ORDER:
        raise HeaderError(f"order {n} out of range", line=1)
    body = lines[1:]
    if len(body) != count:
        raise CountMismatchError(f"header declares {count} tables, found {len(body)}", line=len(lines))
    tables = []
    for i, line in enumerate(body, start=2):
        try:
            tables.append(decode_table(line.rstrip("\r"), n))
        except FormatError as exc:
            raise TableLineError(str(exc), line=i) from None
    return TableDatabase(n, StructureKind(kind), tuple(tables), version)


def write_db(db: TableDatabase, destination: Union[str, Path, IO[str]]) -> None:
    text = format_db(db)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_bytes(text.encode("ascii"))


def read_db(source: Union[str, Path, IO[str]]) -> TableDatabase:
    if hasattr(source, "read"):
        return parse_db(source.read())
    try:
        text = Path(source).read_bytes().decode("ascii")
    except UnicodeDecodeError as exc:
        raise FormatError(f"database is not ASCII: {exc}") from None
    return parse_db(text)


def parse_cycle_notation(text: str, n: int) -> Permutation:
    """Parse disjoint cycles such as ``"(1,5)(2,4)"``; ``"()"`` is the identity."""
    if _CYCLES.fullmatch(text) is None:
        raise MalformedCyclesError(f"malformed cycle notation {text!r}")
    images = list(range(n))
    seen: set[int] = set()
    for body in re.findall(r"\(([^)]*)\)", text):
        if not body.strip():
            continue
        cycle = [int(x) for x in body.split(",")]
        for x in cycle:
            if not 0 <= x < n:
                raise ElementRangeError(f"element {x} out of range 0..{n - 1}")
            if x in seen:
                raise RepeatedElementError(f"repeated element {x} in {text!r}")
            seen.add(x)
        for x, y in zip(cycle, cycle[1:] + cycle[:1]):
            images[x] = y
    return Permutation(images)


def format_cycle_notation(p: Permutation) -> str:
    return str(p)


def relabel_identity_to_zero(t: CayleyTable) -> tuple[CayleyTable, Permutation]:
    """Move the unique left identity of ``t`` to index 0 with a transposition."""
    idents = left_identities(t)
    if len(idents) != 1:
        raise AlgebraError(f"expected a unique left identity, found {sorted(idents)}")
    (e,) = idents
    swap = Permutation.transposition(t.order, 0, e)
    return apply_permutation(t, swap), swap


def single_table_db(t: CayleyTable, kind: StructureKind) -> TableDatabase:
    return TableDatabase(t.order, kind, (t,))

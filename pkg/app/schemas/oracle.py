"""Skew semistandard filling schema"""

from typing import Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from app.core.errors import TableauError
from app.schemas.shapes import Cell, SkewShape


class SkewFilling(BaseModel):
    """Entries on a skew shape; `rows[i-1]` fills row i from its first skew column rightwards."""

    model_config = ConfigDict(frozen=True)

    shape: SkewShape
    rows: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _semistandard(self) -> "SkewFilling":
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != outer.length:
            raise TableauError(f"expected {outer.length} rows for {self.shape}, got {len(self.rows)}")
        for i, row in enumerate(self.rows, 1):
            if len(row) != outer.part(i) - inner.part(i):
                raise TableauError(f"row {i} of {self.shape} needs {outer.part(i) - inner.part(i)} entries")
        entries = dict(self.items())
        for (i, j), value in entries.items():
            if value < 1:
                raise TableauError(f"entry {value} at ({i},{j}) is not positive")
            left = entries.get(Cell(i, j - 1))
            if left is not None and left > value:
                raise TableauError(f"row {i} decreases at column {j}")
            above = entries.get(Cell(i - 1, j))
            if above is not None and above >= value:
                raise TableauError(f"column {j} does not strictly increase at row {i}")
        return self

    def items(self) -> Iterator[Tuple[Cell, int]]:
        inner = self.shape.inner
        for i, row in enumerate(self.rows, 1):
            for offset, value in enumerate(row):
                yield Cell(i, inner.part(i) + 1 + offset), value

    def to_rows(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

"""Semistandard Young tableau schema"""

from typing import Any, Dict, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_serializer, model_validator

from app.core.errors import TableauError
from app.schemas.shapes import Cell, Partition


class Tableau(BaseModel):
    """A semistandard filling of a Young diagram, stored row by row (top row first)."""

    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...] = ()

    _shape: Partition = PrivateAttr(default_factory=Partition)

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            return {"rows": tuple(tuple(row) for row in data)}
        return data

    @field_validator("rows")
    @classmethod
    def _semistandard(cls, rows: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, ...], ...]:
        while rows and not rows[-1]:
            rows = rows[:-1]
        for i, row in enumerate(rows, 1):
            if not row:
                raise TableauError(f"row {i} is empty but a lower row is not")
            if i > 1 and len(row) > len(rows[i - 2]):
                raise TableauError(f"row {i} is longer than row {i - 1}; the shape is not a partition")
            for j, value in enumerate(row, 1):
                if value < 1:
                    raise TableauError(f"entry {value} at ({i},{j}) is not a positive integer")
                if j > 1 and row[j - 2] > value:
                    raise TableauError(f"row {i} decreases at column {j}")
                if i > 1 and rows[i - 2][j - 1] >= value:
                    raise TableauError(f"column {j} does not strictly increase at row {i}")
        return rows

    def model_post_init(self, __context: Any) -> None:
        self._shape = Partition(parts=tuple(len(row) for row in self.rows))

    @model_serializer
    def _as_rows(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_entries(cls, shape: Partition, entries: Dict[Cell, int]) -> "Tableau":
        """Build from a cell -> entry map defined exactly on the cells of `shape`."""
        if set(entries) != set(shape.cells()):
            raise TableauError(f"entries are not defined exactly on the cells of {shape}")
        return cls(rows=tuple(
            tuple(entries[Cell(i, j)] for j in range(1, shape.part(i) + 1))
            for i in range(1, shape.length + 1)
        ))

    @property
    def shape(self) -> Partition:
        return self._shape

    def entry(self, cell: Cell) -> int:
        row, col = cell
        if not (1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1])):
            raise TableauError(f"cell {Cell(row, col)} is outside the shape {self.shape}")
        return self.rows[row - 1][col - 1]

    def items(self) -> Iterator[Tuple[Cell, int]]:
        """(cell, entry) pairs in row-major order."""
        for i, row in enumerate(self.rows, 1):
            for j, value in enumerate(row, 1):
                yield Cell(i, j), value

    def entries(self) -> Dict[Cell, int]:
        return dict(self.items())

    def __str__(self) -> str:
        return " / ".join(" ".join(str(v) for v in row) for row in self.rows)

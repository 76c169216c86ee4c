"""Partition, composition, cell and skew-shape schemas"""

from typing import Annotated, Any, List, NamedTuple, Tuple

from pydantic import AfterValidator, BaseModel, ConfigDict, PrivateAttr, field_validator, model_serializer, model_validator

from app.core.errors import ShapeError


class Cell(NamedTuple):
    """A box at a 1-based (row, column) position."""
    row: int
    col: int

    @classmethod
    def of(cls, row: int, col: int) -> "Cell":
        return _check_cell(cls(int(row), int(col)))

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


def _check_cell(cell: Cell) -> Cell:
    if cell.row < 1 or cell.col < 1:
        raise ShapeError(f"cell {tuple(cell)} is outside N x N (coordinates are 1-based)")
    return cell


ValidCell = Annotated[Cell, AfterValidator(_check_cell)]


def _split_parts(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if text == "":
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ShapeError(f"cannot read parts from {text!r}; expected comma-separated integers")


class Composition(BaseModel):
    """A finite sequence of nonnegative parts; intermediate addition results live here."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, str):
            return {"parts": _split_parts(data)}
        if isinstance(data, (list, tuple)):
            return {"parts": tuple(data)}
        return data

    @field_validator("parts")
    @classmethod
    def _nonnegative(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p < 0 for p in parts):
            raise ShapeError(f"composition {parts} has a negative part")
        return parts

    @model_serializer
    def _as_list(self) -> List[int]:
        return list(self.parts)

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(parts=parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def is_partition(self) -> bool:
        parts = _strip_zeros(self.parts)
        return all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def _strip_zeros(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return tuple(parts[:end])


class Partition(BaseModel):
    """A weakly decreasing sequence of positive parts (a Young diagram, or a weight)."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, str):
            return {"parts": _split_parts(data)}
        if isinstance(data, (list, tuple)):
            return {"parts": tuple(data)}
        if isinstance(data, Composition):
            return {"parts": data.parts}
        return data

    @field_validator("parts")
    @classmethod
    def _normalize(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p < 0 for p in parts):
            raise ShapeError(f"partition {parts} has a negative part")
        parts = _strip_zeros(parts)
        if 0 in parts:
            raise ShapeError(f"partition {parts} has a zero part before a positive one")
        for k in range(len(parts) - 1):
            if parts[k] < parts[k + 1]:
                raise ShapeError(f"{parts} is not a partition: part {k + 2} exceeds part {k + 1}")
        return parts

    @model_serializer
    def _as_list(self) -> List[int]:
        return list(self.parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, k: int) -> int:
        """1-based part access; rows past the end have length 0."""
        if k < 1:
            raise ShapeError(f"row index {k} is not positive")
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def cells(self) -> List[Cell]:
        return [Cell(i, j) for i, row in enumerate(self.parts, 1) for j in range(1, row + 1)]

    def as_composition(self) -> Composition:
        return Composition(parts=self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


class SkewShape(BaseModel):
    """The cells of `outer` that are not cells of `inner`."""

    model_config = ConfigDict(frozen=True)

    outer: Partition
    inner: Partition = Partition()

    _cells: List[Cell] = PrivateAttr(default_factory=list)

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, Partition):
            return {"outer": data, "inner": Partition()}
        if isinstance(data, str):
            outer, _, inner = data.partition("/")
            return {"outer": outer, "inner": inner}
        return data

    @model_validator(mode="after")
    def _inner_inside_outer(self) -> "SkewShape":
        for k in range(1, self.inner.length + 1):
            if self.inner.part(k) > self.outer.part(k):
                raise ShapeError(
                    f"inner shape {self.inner} is not contained in outer shape {self.outer} (row {k})"
                )
        return self

    def model_post_init(self, __context: Any) -> None:
        self._cells = [
            Cell(i, j)
            for i in range(1, self.outer.length + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> List[Cell]:
        return list(self._cells)

    def __contains__(self, cell: object) -> bool:
        if not isinstance(cell, tuple) or len(cell) != 2:
            return False
        row, col = cell
        return self.inner.part(row) < col <= self.outer.part(row) if row >= 1 else False

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

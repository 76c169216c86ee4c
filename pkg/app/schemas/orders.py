"""Total orders on finite cell sets"""

from typing import Any, Dict, FrozenSet, List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_serializer, model_validator

from app.core.errors import OrderError
from app.schemas.shapes import Cell, ValidCell

OrderKind = Literal["J", "F"]


class TotalCellOrder(BaseModel):
    """A finite cell set listed from least to greatest.

    The domain is exactly the set of listed cells; positions are 1-based ranks.
    """

    model_config = ConfigDict(frozen=True)

    sequence: Tuple[ValidCell, ...] = ()

    _rank: Dict[Cell, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            return {"sequence": tuple(data)}
        return data

    @field_validator("sequence")
    @classmethod
    def _no_repeats(cls, sequence: Tuple[Cell, ...]) -> Tuple[Cell, ...]:
        seen = set()
        for cell in sequence:
            if cell in seen:
                raise OrderError(f"cell {cell} is listed twice")
            seen.add(cell)
        return sequence

    def model_post_init(self, __context: Any) -> None:
        self._rank = {cell: position for position, cell in enumerate(self.sequence, 1)}

    @model_serializer
    def _as_list(self) -> List[List[int]]:
        return [[cell.row, cell.col] for cell in self.sequence]

    @property
    def domain(self) -> FrozenSet[Cell]:
        return frozenset(self._rank)

    def pos(self, cell: Cell) -> int:
        try:
            return self._rank[cell]
        except KeyError:
            raise OrderError(f"cell {cell} is not in the domain of this order")

    def ranks(self) -> Dict[Cell, int]:
        return dict(self._rank)

    def __len__(self) -> int:
        return len(self.sequence)

    def __str__(self) -> str:
        return " ".join(str(cell) for cell in self.sequence)

"""Reading and addition-trace schemas"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.shapes import Cell, Composition, Partition, ValidCell


class Reading(BaseModel):
    """The word of a tableau read along a total order, with the cell each letter came from."""

    model_config = ConfigDict(frozen=True)

    letters: Tuple[int, ...]
    sources: Tuple[ValidCell, ...]

    @model_validator(mode="after")
    def _parallel(self) -> "Reading":
        if len(self.letters) != len(self.sources):
            raise ValueError(f"{len(self.letters)} letters but {len(self.sources)} source cells")
        return self


class AdditionStep(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    letter: int = Field(ge=1)
    destination: Cell
    shape_after: Composition = Field(alias="shape")


class AdditionTrace(BaseModel):
    """Iterated additions of letters to a start diagram, one box per letter."""

    model_config = ConfigDict(frozen=True)

    start: Partition
    steps: Tuple[AdditionStep, ...] = ()
    all_young: bool = True

    @model_validator(mode="after")
    def _consistent(self) -> "AdditionTrace":
        shape = list(self.start.parts)
        for number, step in enumerate(self.steps, 1):
            shape.extend([0] * (step.letter - len(shape)))
            shape[step.letter - 1] += 1
            if tuple(shape) != step.shape_after.parts:
                raise ValueError(f"step {number} does not add one box to row {step.letter}")
            if step.destination != (step.letter, shape[step.letter - 1]):
                raise ValueError(f"step {number} has destination {step.destination} for letter {step.letter}")
        if self.all_young != all(step.shape_after.is_partition for step in self.steps):
            raise ValueError("all_young does not match the recorded shapes")
        return self

    @property
    def final(self) -> Composition:
        return self.steps[-1].shape_after if self.steps else self.start.as_composition()

    @property
    def destinations(self) -> Tuple[Cell, ...]:
        return tuple(step.destination for step in self.steps)

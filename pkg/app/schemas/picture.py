"""Picture schema: a bijection from the cells of mu onto a skew shape"""

from typing import Any, Dict, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_serializer, model_validator

from app.core.errors import PictureError
from app.schemas.shapes import Cell, Partition, SkewShape, ValidCell


class PictureMap(BaseModel):
    """f = (f1, f2): f1 is the row and f2 the column of the image cell.

    Equality is extensional: two maps are equal iff they agree on every cell of mu.
    """

    model_config = ConfigDict(frozen=True)

    domain_shape: Partition
    codomain: SkewShape
    mapping: Tuple[Tuple[ValidCell, ValidCell], ...]

    _images: Dict[Cell, Cell] = PrivateAttr(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def _from_json(cls, data: Any) -> Any:
        if isinstance(data, dict) and "map" in data:
            return {
                "domain_shape": data["mu"],
                "codomain": {"outer": data["nu"], "inner": data.get("lambda", [])},
                "mapping": tuple((tuple(source), tuple(target)) for source, target in data["map"]),
            }
        return data

    @field_validator("mapping")
    @classmethod
    def _row_major(cls, mapping: Tuple[Tuple[Cell, Cell], ...]) -> Tuple[Tuple[Cell, Cell], ...]:
        return tuple(sorted(mapping))

    @model_validator(mode="after")
    def _bijective(self) -> "PictureMap":
        sources = [source for source, _ in self.mapping]
        targets = [target for _, target in self.mapping]
        if len(set(sources)) != len(sources):
            raise PictureError("a cell of mu is mapped twice")
        if set(sources) != set(self.domain_shape.cells()):
            raise PictureError(f"the map is not defined exactly on the cells of ({self.domain_shape})")
        if len(set(targets)) != len(targets):
            raise PictureError("two cells of mu share an image; the map is not injective")
        if set(targets) != set(self.codomain.cells()):
            raise PictureError(f"the image is not the skew shape {self.codomain}")
        return self

    def model_post_init(self, __context: Any) -> None:
        self._images = dict(self.mapping)

    @model_serializer
    def _as_json(self) -> Dict[str, Any]:
        return {
            "mu": list(self.domain_shape.parts),
            "nu": list(self.codomain.outer.parts),
            "lambda": list(self.codomain.inner.parts),
            "map": [[[s.row, s.col], [t.row, t.col]] for s, t in self.mapping],
        }

    @classmethod
    def from_images(cls, mu: Partition, codomain: SkewShape, images: Mapping[Cell, Cell]) -> "PictureMap":
        return cls(domain_shape=mu, codomain=codomain, mapping=tuple(images.items()))

    def __call__(self, cell: Cell) -> Cell:
        try:
            return self._images[Cell(*cell)]
        except KeyError:
            raise PictureError(f"cell {Cell(*cell)} is not in ({self.domain_shape})")

    def as_dict(self) -> Dict[Cell, Cell]:
        return dict(self._images)

    def inverse(self) -> Dict[Cell, Cell]:
        return {target: source for source, target in self.mapping}

    def __str__(self) -> str:
        return " ".join(f"{s}->{t}" for s, t in self.mapping)

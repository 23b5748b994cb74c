from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.services.rationals import parse_rational

FORMAT_VERSION = "1"


def _check_rational(value: str) -> str:
    parse_rational(value)
    return value


class BracketRecord(BaseModel):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    coeffs: dict[int, str]

    model_config = ConfigDict(extra="forbid")

    @field_validator("coeffs")
    @classmethod
    def validate_coeffs(cls, v: dict[int, str]):
        for key, value in v.items():
            if key < 0:
                raise ValueError(f"negative basis index {key}")
            try:
                _check_rational(value)
            except Exception as err:
                raise ValueError(f"coefficient {value!r} is not a rational string") from err
        return v

    @model_validator(mode="after")
    def validate_order(self):
        if self.i >= self.j:
            raise ValueError(f"bracket record needs i < j, got i={self.i}, j={self.j}")
        return self


class AlgebraDocument(BaseModel):
    format_version: str = FORMAT_VERSION
    name: str = ""
    dim: int = Field(ge=1)
    basis: list[str]
    brackets: list[BracketRecord] = []

    model_config = ConfigDict(extra="forbid")

    @field_validator("format_version")
    @classmethod
    def validate_version(cls, v: str):
        if v != FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {v!r}, expected {FORMAT_VERSION!r}")
        return v

    @model_validator(mode="after")
    def validate_indices(self):
        if len(self.basis) != self.dim:
            raise ValueError(f"basis has {len(self.basis)} labels for dim {self.dim}")
        if len(set(self.basis)) != self.dim:
            raise ValueError("basis labels must be distinct")
        seen = set()
        for record in self.brackets:
            if record.j >= self.dim:
                raise ValueError(f"bracket index {record.j} out of range for dim {self.dim}")
            for key in record.coeffs:
                if key >= self.dim:
                    raise ValueError(f"coefficient index {key} out of range for dim {self.dim}")
            if (record.i, record.j) in seen:
                raise ValueError(f"more than one record for ({record.i}, {record.j})")
            seen.add((record.i, record.j))
        return self


class MatrixDocument(BaseModel):
    rows: list[list[str]]

    model_config = ConfigDict(extra="forbid")

    @field_validator("rows")
    @classmethod
    def validate_rows(cls, v: list[list[str]]):
        if not v or any(len(row) != len(v[0]) for row in v):
            raise ValueError("rows must be a nonempty rectangular list")
        for row in v:
            for value in row:
                try:
                    _check_rational(value)
                except Exception as err:
                    raise ValueError(f"entry {value!r} is not a rational string") from err
        return v

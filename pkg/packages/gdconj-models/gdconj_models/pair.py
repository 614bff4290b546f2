from fractions import Fraction
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator

from gdconj_maps import parse_rational

Rational = Annotated[Fraction, PlainValidator(parse_rational), PlainSerializer(str, return_type=str)]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True, populate_by_name=True)


class AffineSpec(_Strict):
    kind: Literal["affine"]
    slope: Rational
    intercept: Rational = Fraction(0)


class LFSpec(_Strict):
    kind: Literal["lf"]
    a: Rational
    b: Rational
    c: Rational
    d: Rational


class ExprSpec(_Strict):
    kind: Literal["expr"]
    formula: str
    lip: Optional[Rational] = None


MapSpec = Annotated[Union[AffineSpec, LFSpec, ExprSpec], Field(discriminator="kind")]


class RowSpec(_Strict):
    low: MapSpec = Field(alias="0")
    high: MapSpec = Field(alias="1")


class SystemSpec(_Strict):
    row0: RowSpec = Field(alias="0")
    row1: RowSpec = Field(alias="1")

    def rows(self) -> tuple[tuple[MapSpec, MapSpec], tuple[MapSpec, MapSpec]]:
        return ((self.row0.low, self.row0.high), (self.row1.low, self.row1.high))


class RunParams(_Strict):
    vertex: Literal[0, 1] = 0
    x: Optional[Rational] = None
    tol: Optional[float] = Field(default=None, gt=0)
    depth: Optional[int] = Field(default=None, ge=1)
    grid: Optional[int] = Field(default=None, ge=2)


class PairConfig(_Strict):
    label: str = ""
    f: SystemSpec
    g: SystemSpec
    params: RunParams = Field(default_factory=RunParams)

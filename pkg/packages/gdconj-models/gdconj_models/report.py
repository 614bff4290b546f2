from typing import Any, List, Optional

from pydantic import BaseModel, Field


class Report(BaseModel):
    command: str
    label: str = ""
    ok: bool = True
    result: dict[str, Any] = Field(default_factory=dict)
    columns: Optional[List[str]] = None
    rows: Optional[List[List[Any]]] = None
    timings: Optional[dict[str, float]] = None

    @property
    def tabular(self) -> bool:
        return self.columns is not None

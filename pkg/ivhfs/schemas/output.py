"""Machine-readable command output."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class CellOut(BaseModel):
    """Cell where a check fails; element is 1-based, absent for support gaps."""
    parameter: str
    object: Optional[str] = None
    element: Optional[int] = None


class SoftSetOut(BaseModel):
    support: List[str]
    cells: Dict[str, Dict[str, List[List[str]]]]


class ViolationOut(BaseModel):
    axiom: str
    operands: List[str]
    witness: Optional[SoftSetOut] = None
    cell: Optional[CellOut] = None


class ErrorOut(BaseModel):
    kind: str
    message: str
    details: Dict[str, Any] = Field(default_factory=dict)


class CommandOutput(BaseModel):
    """Envelope for every machine-format answer; the profile is always echoed."""
    command: str
    profile: str
    result: Any = None
    witness: Optional[Any] = None
    violations: Optional[List[ViolationOut]] = None
    error: Optional[ErrorOut] = None

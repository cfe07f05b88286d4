"""Workspace document schema."""
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, Field

# ["0.3", "0.8"], or a bare "0.6" for the degenerate interval [0.6, 0.6]
IntervalSpec = Union[str, Tuple[str, str]]
HfeSpec = List[IntervalSpec]
SetSpec = Dict[str, Dict[str, HfeSpec]]


class WorkspaceDocument(BaseModel):
    """Universe, parameters, named soft sets and named topologies."""
    universe: List[str] = Field(..., min_length=1, description="Object names")
    parameters: List[str] = Field(..., min_length=1, description="Parameter names")
    sets: Dict[str, SetSpec] = Field(
        default_factory=dict,
        description="set name -> parameter -> object -> intervals; omitted parameters lie outside the support",
    )
    topologies: Dict[str, List[str]] = Field(default_factory=dict, description="topology name -> member names")

    class Config:
        extra = "forbid"

"""Pydantic schemas for workspace documents and command output."""
from ivhfs.schemas.output import CellOut, CommandOutput, ErrorOut, SoftSetOut, ViolationOut
from ivhfs.schemas.workspace import WorkspaceDocument

__all__ = [
    "CellOut",
    "CommandOutput",
    "ErrorOut",
    "SoftSetOut",
    "ViolationOut",
    "WorkspaceDocument",
]

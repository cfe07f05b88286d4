"""Text and machine renderings of command outcomes."""
import json
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple

from ivhfs.core.exceptions import IvhfsError
from ivhfs.models.interval import OrderProfile
from ivhfs.models.softset import SoftSet
from ivhfs.models.topology import SoftPoint, Violation
from ivhfs.schemas.output import CellOut, CommandOutput, ErrorOut, ViolationOut
from ivhfs.services.softset_ops import CellWitness
from ivhfs.services.workspace_service import render_soft_set


@dataclass
class Outcome:
    """What a command computed; ok decides between exit status 0 and 1."""
    command: str
    result: Any
    ok: bool = True
    witness: Any = None
    violations: Optional[Sequence[Violation]] = None
    notes: List[str] = field(default_factory=list)


def _cell_out(cell: Optional[CellWitness]) -> Optional[CellOut]:
    if cell is None:
        return None
    return CellOut(
        parameter=cell.parameter,
        object=cell.object,
        element=None if cell.position is None else cell.position + 1,
    )


def _machine_value(value: Any) -> Any:
    if isinstance(value, SoftSet):
        return render_soft_set(value).model_dump()
    if isinstance(value, SoftPoint):
        return {"at": value.at, "carrier": render_soft_set(value.carrier).model_dump()}
    if isinstance(value, CellWitness):
        return _cell_out(value).model_dump(exclude_none=True)
    if isinstance(value, (list, tuple)):
        return [_machine_value(item) for item in value]
    if isinstance(value, dict):
        return {key: _machine_value(item) for key, item in value.items()}
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


def _violation_out(violation: Violation) -> ViolationOut:
    return ViolationOut(
        axiom=violation.axiom.value,
        operands=list(violation.operands),
        witness=None if violation.witness is None else render_soft_set(violation.witness),
        cell=_cell_out(violation.cell),
    )


def render_machine(outcome: Outcome, profile: OrderProfile) -> str:
    document = CommandOutput(
        command=outcome.command,
        profile=profile.cli_name,
        result=_machine_value(outcome.result),
        witness=_machine_value(outcome.witness),
        violations=None if outcome.violations is None else [_violation_out(v) for v in outcome.violations],
    )
    return json.dumps(document.model_dump(exclude_none=True), sort_keys=True, indent=2) + "\n"


def render_error_machine(command: str, profile: OrderProfile, error: IvhfsError) -> str:
    document = CommandOutput(
        command=command,
        profile=profile.cli_name,
        error=ErrorOut(kind=error.kind, message=error.message, details=error.details),
    )
    return json.dumps(document.model_dump(exclude_none=True), sort_keys=True, indent=2, default=str) + "\n"


def soft_set_lines(soft_set: SoftSet, indent: str = "  ") -> List[str]:
    lines = []
    for parameter, obj, value in soft_set.iter_cells():
        lines.append(f"{indent}{parameter}/{obj}: {value}")
    return lines


def _text_value(value: Any) -> List[str]:
    if isinstance(value, SoftSet):
        return soft_set_lines(value)
    if isinstance(value, SoftPoint):
        return [f"point at {value.at}"] + soft_set_lines(value.carrier)
    if isinstance(value, bool):
        return ["true" if value else "false"]
    if isinstance(value, CellWitness):
        return [value.describe()]
    if isinstance(value, (list, tuple)) and all(isinstance(item, str) for item in value):
        return [", ".join(value) if value else "none"]
    if isinstance(value, list):
        lines: List[str] = []
        for item in value:
            if isinstance(item, tuple) and len(item) == 2:
                name, inner = item
                inner_lines = _text_value(inner)
                if len(inner_lines) == 1:
                    lines.append(f"{name}: {inner_lines[0]}")
                else:
                    lines.append(f"{name}:")
                    lines.extend(inner_lines)
            else:
                lines.extend(_text_value(item))
        return lines
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return [value.value]
    if value is None:
        return ["none"]
    return [str(value)]


def _violation_lines(violation: Violation) -> List[str]:
    operands = f" ({', '.join(violation.operands)})" if violation.operands else ""
    head = f"  {violation.axiom.value}{operands}"
    if violation.cell is not None:
        head += f": differs from every member at {violation.cell.describe()}"
    lines = [head]
    if violation.witness is not None:
        lines.append("    witness:")
        lines.extend(soft_set_lines(violation.witness, indent="      "))
    return lines


def render_text(outcome: Outcome, profile: OrderProfile) -> str:
    lines = [f"profile: {profile.cli_name}"]
    lines.extend(outcome.notes)
    lines.extend(_text_value(outcome.result))
    if outcome.witness is not None:
        witness_lines = _text_value(outcome.witness)
        if len(witness_lines) == 1:
            lines.append(f"witness: {witness_lines[0]}")
        else:
            lines.append("witness:")
            lines.extend(witness_lines)
    for violation in outcome.violations or ():
        lines.extend(_violation_lines(violation))
    return "\n".join(lines) + "\n"


def render(outcome: Outcome, profile: OrderProfile, output_format: str) -> str:
    if output_format == "machine":
        return render_machine(outcome, profile)
    return render_text(outcome, profile)


def describe_error(error: IvhfsError) -> Tuple[str, str]:
    details = ", ".join(f"{key}={value}" for key, value in sorted(error.details.items()))
    return error.kind, f"{error.message} ({details})" if details else error.message

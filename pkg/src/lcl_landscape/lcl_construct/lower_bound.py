"""Instances whose grid is twice the machine's running time, and the two-view certificate."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CannotBuild, InvalidParameter, Timeout
from ..local_sim import enumerate_labelings, indistinguishable
from ..turing import DEFAULT_STEP_CAP, ZERO, TuringMachine, run
from .builder import ConstructionInstance, build_instance
from .problem import STAR, lcl_problem_of


def accepting_cell(m: TuringMachine, s: int, step_cap: int = DEFAULT_STEP_CAP) -> tuple[int, int]:
    """(steps to accept on 0^(s-2), grid column where the head arrives when accepting)."""
    if s < 3:
        raise InvalidParameter(f"path length must be at least 3, got {s}")
    try:
        res = run(m, ZERO * (s - 2), step_cap)
    except Timeout as exc:
        raise CannotBuild(f"machine does not accept 0^{s - 2} within {step_cap} steps") from exc
    return res.steps, res.final.head + 1


def build_lower_bound_instance(
    m: TuringMachine, s: int, height: int | None = None, step_cap: int = DEFAULT_STEP_CAP
) -> ConstructionInstance:
    """Valid instance whose grid height defaults to twice the running time on 0^(s-2)."""
    steps, _ = accepting_cell(m, s, step_cap)
    return build_instance(s, 2 * steps if height is None else height)


@dataclass(frozen=True)
class LowerBoundCertificate:
    s: int
    steps: int
    height: int
    cells: tuple[tuple[int, int], tuple[int, int]]  # (row, column) of the pair
    pair: tuple[int, int] | None  # node indices, None if a cell lies outside the grid
    radius: int
    same_view: bool
    labelings: int
    outputs_differ: bool
    explanation: str = ""

    @property
    def passed(self) -> bool:
        return self.same_view and self.outputs_differ

    def report(self) -> str:
        (r1, c1), (r2, c2) = self.cells
        lines = [
            f"s={self.s} steps={self.steps} height={self.height}",
            f"pair=({r1},{c1})~({r2},{c2}) nodes={self.pair if self.pair else '-'} radius={self.radius}",
            f"views: {'PASS' if self.same_view else 'FAIL'}",
            f"outputs: {'PASS' if self.outputs_differ else 'FAIL'} (accepted labelings: {self.labelings})",
        ]
        if self.explanation:
            lines.append(f"note: {self.explanation}")
        lines.append("certificate: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def certify_lower_bound(
    m: TuringMachine,
    s: int,
    height: int | None = None,
    step_cap: int = DEFAULT_STEP_CAP,
    max_labelings: int = 1000,
) -> LowerBoundCertificate:
    """Check both halves of the certificate on the lower-bound instance.

    The grid cells in the accepting row and the row below it, in the column
    where the head arrives, have isomorphic id-free views at radius steps-1;
    every accepted labeling nevertheless gives them different outputs.
    """
    steps, col = accepting_cell(m, s, step_cap)
    inst = build_lower_bound_instance(m, s, height, step_cap)
    below, above = (steps, col), (steps + 1, col)
    radius = steps - 1
    notes = []
    if inst.height < steps + 1:
        notes.append(
            f"grid height {inst.height} is below the accepting row {steps + 1}; "
            "the pair does not exist"
        )
        return LowerBoundCertificate(
            s, steps, inst.height, (below, above), None, radius, False, 0, False, "; ".join(notes)
        )
    u, v = inst.cell(*below), inst.cell(*above)
    same = indistinguishable(inst.graph, u, v, radius)
    if not same:
        notes.append(f"views differ at radius {radius}: the grid top is within reach (height < {2 * steps})")
    p = lcl_problem_of(m, inst.doubly)
    count, differ = 0, True
    for lab in enumerate_labelings(p, inst.graph):
        count += 1
        if (lab[u] == STAR) == (lab[v] == STAR):
            differ = False
            notes.append(f"an accepted labeling gives both cells {lab[u]!r} / {lab[v]!r}")
            break
        if count >= max_labelings:
            differ = False
            notes.append(f"more than {max_labelings} accepted labelings; enumeration stopped")
            break
    if count == 0:
        differ = False
        notes.append("no accepted labeling exists")
    return LowerBoundCertificate(
        s, steps, inst.height, (below, above), (u, v), radius, same, count, differ, "; ".join(notes)
    )

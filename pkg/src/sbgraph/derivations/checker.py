"""Step-by-step verification of derivation scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..coloring import exists_k_coloring
from ..core import SignedBiGraph, find_isomorphism, underlying_isomorphisms
from ..hajos import OperationError, apply_step
from ..signatures import are_switch_equivalent
from .script import DerivationScript


@dataclass
class StepVerdict:
    name: str
    keyword: str
    ok: bool
    reason: str | None = None
    colorable_below_q: bool | None = None


@dataclass
class CheckReport:
    q: int
    steps: list[StepVerdict] = field(default_factory=list)
    final: SignedBiGraph | None = None
    target_ok: bool | None = None
    target_reason: str | None = None
    invariant_violation: bool = False
    graphs: dict[str, SignedBiGraph] = field(default_factory=dict, repr=False)

    @property
    def accepted(self) -> bool:
        return all(s.ok for s in self.steps) and self.target_ok is not False

    def summary(self) -> str:
        lines = []
        for s in self.steps:
            mark = "ok" if s.ok else f"error: {s.reason}"
            lines.append(f"{s.name} ({s.keyword}): {mark}")
        if self.target_ok is not None:
            lines.append("target: " + ("matched" if self.target_ok else f"mismatch: {self.target_reason}"))
        lines.append("ACCEPTED" if self.accepted else "REJECTED")
        return "\n".join(lines)


def switch_iso_witness(g: SignedBiGraph, h: SignedBiGraph):
    """``(mapping, switch set)`` with ``switch(rename(g, mapping), S) == h``, or None."""
    for mapping in underlying_isomorphisms(g, h):
        s = are_switch_equivalent(g.rename(mapping), h)
        if s is not None:
            return mapping, s
    return None


def match_target(g: SignedBiGraph, h: SignedBiGraph, mode: str) -> str | None:
    """None if ``g`` matches ``h`` under ``mode``, else the reason it does not."""
    if mode == "exact":
        return None if g == h else "graphs differ"
    if mode == "iso":
        return None if find_isomorphism(g, h) is not None else "not isomorphic"
    if mode == "switch-iso":
        return None if switch_iso_witness(g, h) is not None else "not switch-equivalent up to isomorphism"
    raise ValueError(f"unknown match mode {mode!r}")


def _not_colorable(g: SignedBiGraph, k: int) -> bool:
    if k < 1:
        return g.order() > 0
    return exists_k_coloring(g, k) is None


def check(script: DerivationScript, verify_colorability: bool = False) -> CheckReport:
    """Replay ``script``. Errors land in the report; nothing is raised.

    The (sb5) steps run with ``q - 1`` since ``(K_q,+)`` is exactly the
    smallest graph that is not ``(q-1)``-colorable. With
    ``verify_colorability`` every intermediate is confirmed not
    ``(q-1)``-colorable; a failure there means a bug, not a bad script.
    """
    report = CheckReport(script.q)
    env = report.graphs
    failed: set[str] = set()
    for name, step in script.bindings:
        bad = [src for src in step.sources if src in failed]
        if bad:
            report.steps.append(StepVerdict(name, step.keyword, False, f"depends on failed step {bad[0]!r}"))
            failed.add(name)
            continue
        try:
            g = apply_step(step, env, script.q - 1).graph
        except OperationError as exc:
            report.steps.append(StepVerdict(name, step.keyword, False, str(exc)))
            failed.add(name)
            continue
        verdict = StepVerdict(name, step.keyword, True)
        if verify_colorability:
            verdict.colorable_below_q = not _not_colorable(g, script.q - 1)
            if verdict.colorable_below_q:
                verdict.ok = False
                verdict.reason = f"intermediate is {script.q - 1}-colorable"
                report.invariant_violation = True
                failed.add(name)
        env[name] = g
        report.steps.append(verdict)

    final_name = script.target.name if script.target else (script.names[-1] if script.bindings else None)
    report.final = env.get(final_name) if final_name else None
    if script.target is not None:
        if report.final is None:
            report.target_ok, report.target_reason = False, "target step failed"
        else:
            reason = match_target(report.final, script.target.graph, script.target.mode)
            report.target_ok, report.target_reason = reason is None, reason
    return report

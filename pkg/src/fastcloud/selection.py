"""End-to-end assessment: match candidates, build profiles, score and rank.

A request names the attributes the requester cares about together with an
acceptable span per attribute. Providers qualify when, for every requested
attribute, they hold at least one agreed SLO and their actual (rate-scaled)
interval intersects the requested span. The qualified set is then scored by
the trust engine and returned with every intermediate retained for audit.

Assessments are read-only over a registry snapshot; any number may run
concurrently against the same snapshot.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import TextIO

from .consistency import ConsistencyProfile, actual_slo_interval
from .intervals import IntervalNumber
from .registry import MissingSloError, Registry
from .trust import (
    DecisionContext,
    DecisionMatrix,
    RankedProvider,
    evaluate,
    rank,
    ranking_chain,
)


class InsufficientCandidatesError(RuntimeError):
    """Fewer than two providers matched; ranking needs pairs."""

    def __init__(self, candidates: tuple[str, ...]):
        self.candidates = candidates
        if candidates:
            detail = f"only {', '.join(candidates)} matched"
        else:
            detail = "no provider matched"
        super().__init__(
            f"insufficient candidates for a ranking ({detail}); relax the requested spans"
        )


@dataclass(frozen=True)
class AssessmentRequest:
    """Requested attributes with the acceptable span for each."""

    requested: tuple[tuple[str, IntervalNumber], ...]

    def __post_init__(self) -> None:
        if not self.requested:
            raise ValueError("a request must name at least one attribute")
        names = [name for name, _ in self.requested]
        if len(set(names)) != len(names):
            raise ValueError("requested attribute names must be unique")

    @property
    def attribute_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.requested)

    def restrict(self, names: list[str]) -> "AssessmentRequest":
        """Sub-request over a subset of the requested attributes."""
        keep = {n for n in names}
        picked = tuple((n, s) for n, s in self.requested if n in keep)
        missing = keep - {n for n, _ in picked}
        if missing:
            raise ValueError(f"attributes not in the request: {', '.join(sorted(missing))}")
        return AssessmentRequest(picked)


@dataclass(frozen=True)
class AssessmentResult:
    request: AssessmentRequest
    candidates: tuple[str, ...]
    context: DecisionContext
    ranking: tuple[RankedProvider, ...]
    profiles: dict[tuple[str, str], ConsistencyProfile]
    elapsed_seconds: float

    @property
    def chain(self) -> str:
        return ranking_chain(self.ranking)


def match_candidates(registry: Registry, request: AssessmentRequest) -> tuple[str, ...]:
    """Providers whose actual interval intersects every requested span.

    Missing SLO coverage on any requested attribute excludes a provider.
    Returned sorted by id for determinism.
    """
    matched = []
    for csp_id in sorted(registry.providers):
        ok = True
        for name, span in request.requested:
            attr = registry.resolve_attribute(name)
            try:
                profile = actual_slo_interval(registry, csp_id, attr.name)
            except MissingSloError:
                ok = False
                break
            if not profile.actual_interval.intersects(span):
                ok = False
                break
        if ok:
            matched.append(csp_id)
    return tuple(matched)


def assess(registry: Registry, request: AssessmentRequest) -> AssessmentResult:
    """Full assessment pipeline over the matched candidate set."""
    started = time.perf_counter()
    candidates = match_candidates(registry, request)
    if len(candidates) < 2:
        raise InsufficientCandidatesError(candidates)
    attributes = tuple(registry.resolve_attribute(name) for name, _ in request.requested)
    profiles: dict[tuple[str, str], ConsistencyProfile] = {}
    for csp_id in candidates:
        for attr in attributes:
            profiles[(csp_id, attr.name)] = actual_slo_interval(registry, csp_id, attr.name)
    decision = DecisionMatrix(
        providers=candidates,
        attributes=attributes,
        cells=tuple(
            tuple(profiles[(csp_id, attr.name)].actual_interval for attr in attributes)
            for csp_id in candidates
        ),
    )
    context = evaluate(decision)
    ranking = rank(context)
    return AssessmentResult(
        request=request,
        candidates=candidates,
        context=context,
        ranking=ranking,
        profiles=profiles,
        elapsed_seconds=time.perf_counter() - started,
    )


# -- request file and result document ---------------------------------------

REQUEST_HEADER = ["attribute", "min", "max"]


def read_request(source: TextIO) -> AssessmentRequest:
    """Parse a request file: header ``attribute,min,max``, one line per attribute."""
    import csv

    reader = csv.DictReader(source)
    if reader.fieldnames is None:
        raise ValueError("request file is empty")
    fields = [f.strip() for f in reader.fieldnames]
    if fields != REQUEST_HEADER:
        raise ValueError(
            f"request header must be {','.join(REQUEST_HEADER)!r}, got {','.join(fields)!r}"
        )
    requested = []
    for line_no, row in enumerate(reader, start=2):
        try:
            span = IntervalNumber(float(row["min"]), float(row["max"]))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"request line {line_no}: {exc}") from exc
        name = (row["attribute"] or "").strip()
        if not name:
            raise ValueError(f"request line {line_no}: missing attribute name")
        requested.append((name, span))
    return AssessmentRequest(tuple(requested))


def result_document(result: AssessmentResult) -> dict:
    """Stable, JSON-ready rendering of a result; key order is fixed."""
    ctx = result.context
    return {
        "request": [
            {"attribute": name, "min": span.lower, "max": span.upper}
            for name, span in result.request.requested
        ],
        "candidates": list(result.candidates),
        "chain": result.chain,
        "ranking": [
            {
                "csp_id": r.csp_id,
                "ordering_score": r.ordering_score,
                "trust_level": [r.trust_level.lower, r.trust_level.upper],
                "possibility_vs_next": r.possibility_vs_next,
            }
            for r in result.ranking
        ],
        "weights": {
            attr.name: w
            for attr, w in zip(ctx.decision.attributes, ctx.weights.weights)
        },
        "possibility_matrix": [list(row) for row in ctx.possibility],
        "normalized": [
            [[cell.lower, cell.upper] for cell in row] for row in ctx.normalized.cells
        ],
        "decision": [
            [[cell.lower, cell.upper] for cell in row] for row in ctx.decision.cells
        ],
        "profiles": [
            {
                "csp_id": p.csp_id,
                "attribute": p.attribute,
                "consistency_rate": p.consistency_rate,
                "satisfied": p.satisfied_count,
                "agreed": p.agreed_count,
                "slo_span": [p.slo_span.lower, p.slo_span.upper],
                "actual_interval": [p.actual_interval.lower, p.actual_interval.upper],
            }
            for p in sorted(result.profiles.values(), key=lambda p: (p.csp_id, p.attribute))
        ],
        "elapsed_seconds": result.elapsed_seconds,
    }


def render_human(result: AssessmentResult) -> str:
    """Readable multi-line report with the one-line ranking chain first."""
    ctx = result.context
    lines = [f"ranking: {result.chain}", ""]
    lines.append(f"{'rank':<5}{'provider':<16}{'score':<10}{'trust level':<24}vs next")
    for pos, r in enumerate(result.ranking, start=1):
        vs = "-" if r.possibility_vs_next is None else f"{r.possibility_vs_next:.3f}"
        lines.append(
            f"{pos:<5}{r.csp_id:<16}{r.ordering_score:<10.4f}{str(r.trust_level):<24}{vs}"
        )
    lines.append("")
    lines.append("weights:")
    for attr, w in zip(ctx.decision.attributes, ctx.weights.weights):
        lines.append(f"  {attr.name:<16}{w:.4f} ({attr.polarity.value})")
    return "\n".join(lines)

"""Interval multi-attribute trust scoring and possibility-degree ranking.

Five stages over an interval-valued decision matrix (providers x attributes):

1. normalize      - dimensionless column ratios, reciprocal form for cost
                    attributes so that larger is always better;
2. deviation_weights - attributes on which providers differ more get more
                    weight (pairwise separation totals, normalized to sum 1);
3. trust_levels   - per-provider weighted interval aggregate;
4. possibility_matrix - pairwise "at least as good" degrees between the
                    trust intervals;
5. ordering_vector / rank - scalar priority per provider derived from the
                    possibility matrix, descending order with id tie-break.

Everything here is a stateless transform over immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intervals import IntervalNumber, add, possibility_degree, scale, separation
from .registry import Polarity, QosAttribute


@dataclass(frozen=True)
class DecisionMatrix:
    """Rectangular grid of actual service intervals, row per provider."""

    providers: tuple[str, ...]
    attributes: tuple[QosAttribute, ...]
    cells: tuple[tuple[IntervalNumber, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cells) != len(self.providers):
            raise ValueError("one cell row required per provider")
        for row in self.cells:
            if len(row) != len(self.attributes):
                raise ValueError("every row must cover every attribute")
        for k, attr in enumerate(self.attributes):
            if attr.polarity is Polarity.COST:
                for i, row in enumerate(self.cells):
                    if row[k].lower <= 0:
                        raise ValueError(
                            f"cost attribute {attr.name!r} has non-positive lower bound "
                            f"for provider {self.providers[i]!r}"
                        )

    @property
    def provider_count(self) -> int:
        return len(self.providers)

    @property
    def attribute_count(self) -> int:
        return len(self.attributes)

    def column(self, k: int) -> list[IntervalNumber]:
        return [row[k] for row in self.cells]


@dataclass(frozen=True)
class NormalizedMatrix:
    providers: tuple[str, ...]
    attributes: tuple[QosAttribute, ...]
    cells: tuple[tuple[IntervalNumber, ...], ...]

    def column(self, k: int) -> list[IntervalNumber]:
        return [row[k] for row in self.cells]


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if self.weights and abs(sum(self.weights) - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {sum(self.weights)!r}")


@dataclass(frozen=True)
class RankedProvider:
    csp_id: str
    ordering_score: float
    trust_level: IntervalNumber
    # degree to which this provider is at least the next-ranked one; None for the last
    possibility_vs_next: float | None


@dataclass(frozen=True)
class DecisionContext:
    """Every intermediate of one assessment, retained for audit."""

    decision: DecisionMatrix
    normalized: NormalizedMatrix
    weights: WeightVector
    trust_levels: tuple[IntervalNumber, ...]
    possibility: tuple[tuple[float, ...], ...]
    ordering: tuple[float, ...]


def normalize(decision: DecisionMatrix) -> NormalizedMatrix:
    """Column-wise dimensionless form of the decision matrix.

    Benefit column: lower / sum-of-uppers and upper / sum-of-lowers. Cost
    column: the same ratios on reciprocals, which flips the direction so a
    cheaper interval normalizes higher. Cost cells must be strictly positive;
    benefit columns need a positive column sum.
    """
    if decision.provider_count == 0:
        raise ValueError("decision matrix has no providers")
    columns: list[list[IntervalNumber]] = []
    for k, attr in enumerate(decision.attributes):
        col = decision.column(k)
        if attr.polarity is Polarity.BENEFIT:
            # fsum: exactly-rounded, so row order cannot perturb the ratios
            sum_upper = math.fsum(c.upper for c in col)
            sum_lower = math.fsum(c.lower for c in col)
            if sum_upper <= 0 or sum_lower <= 0:
                raise ValueError(
                    f"benefit attribute {attr.name!r} has no positive values to normalize"
                )
            columns.append([
                IntervalNumber(c.lower / sum_upper, c.upper / sum_lower) for c in col
            ])
        else:
            # construction already guarantees strictly positive cost cells
            sum_inv_lower = math.fsum(1.0 / c.lower for c in col)
            sum_inv_upper = math.fsum(1.0 / c.upper for c in col)
            columns.append([
                IntervalNumber((1.0 / c.upper) / sum_inv_lower,
                               (1.0 / c.lower) / sum_inv_upper)
                for c in col
            ])
    rows = tuple(
        tuple(columns[k][i] for k in range(decision.attribute_count))
        for i in range(decision.provider_count)
    )
    return NormalizedMatrix(decision.providers, decision.attributes, rows)


def deviation_weights(normalized: NormalizedMatrix) -> WeightVector:
    """Weights proportional to each column's total pairwise separation.

    An attribute on which all providers score alike carries no ranking
    information and gets weight near zero; if every column is like that the
    weights fall back to uniform (any weighting would produce identical
    aggregates anyway).
    """
    n_providers = len(normalized.providers)
    n_attrs = len(normalized.attributes)
    if n_providers < 2:
        raise ValueError("deviation weighting needs at least two providers")
    totals = []
    for k in range(n_attrs):
        col = normalized.column(k)
        totals.append(math.fsum(separation(a, b) for a in col for b in col))
    grand_total = math.fsum(totals)
    if grand_total == 0:
        return WeightVector(tuple(1.0 / n_attrs for _ in range(n_attrs)))
    return WeightVector(tuple(t / grand_total for t in totals))


def trust_levels(
    normalized: NormalizedMatrix, weights: WeightVector
) -> tuple[IntervalNumber, ...]:
    """Weighted interval sum per provider row."""
    if len(weights.weights) != len(normalized.attributes):
        raise ValueError(
            f"weight count {len(weights.weights)} does not match "
            f"attribute count {len(normalized.attributes)}"
        )
    levels = []
    for row in normalized.cells:
        total = IntervalNumber(0.0, 0.0)
        for cell, w in zip(row, weights.weights):
            total = add(total, scale(cell, w))
        levels.append(total)
    return tuple(levels)


def possibility_matrix(trust: tuple[IntervalNumber, ...]) -> tuple[tuple[float, ...], ...]:
    """Pairwise possibility degrees, diagonal fixed at 0.5."""
    return tuple(
        tuple(0.5 if i == e else possibility_degree(zi, ze) for e, ze in enumerate(trust))
        for i, zi in enumerate(trust)
    )


def ordering_vector(possibility: tuple[tuple[float, ...], ...]) -> tuple[float, ...]:
    """Priority score per provider; scores sum to 1.

    Row sums of the possibility matrix (diagonal included), shifted and
    scaled so the vector is a distribution over providers.
    """
    n = len(possibility)
    if n < 2:
        raise ValueError("ordering needs at least two providers")
    return tuple(
        (math.fsum(row) + n / 2.0 - 1.0) / (n * (n - 1)) for row in possibility
    )


def rank(context: DecisionContext) -> tuple[RankedProvider, ...]:
    """Providers by descending priority score, ties broken by id ascending."""
    order = sorted(
        range(len(context.decision.providers)),
        key=lambda i: (-context.ordering[i], context.decision.providers[i]),
    )
    ranked = []
    for pos, i in enumerate(order):
        nxt = order[pos + 1] if pos + 1 < len(order) else None
        ranked.append(RankedProvider(
            csp_id=context.decision.providers[i],
            ordering_score=context.ordering[i],
            trust_level=context.trust_levels[i],
            possibility_vs_next=None if nxt is None else context.possibility[i][nxt],
        ))
    return tuple(ranked)


def evaluate(decision: DecisionMatrix) -> DecisionContext:
    """Run all five stages over a decision matrix."""
    normalized = normalize(decision)
    weights = deviation_weights(normalized)
    levels = trust_levels(normalized, weights)
    possibility = possibility_matrix(levels)
    ordering = ordering_vector(possibility)
    return DecisionContext(
        decision=decision,
        normalized=normalized,
        weights=weights,
        trust_levels=levels,
        possibility=possibility,
        ordering=ordering,
    )


def ranking_chain(ranked: tuple[RankedProvider, ...]) -> str:
    """One-line summary like ``CSP4 > CSP3 > CSP1``."""
    return " > ".join(r.csp_id for r in ranked)

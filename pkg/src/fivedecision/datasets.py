"""Bundled example inputs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .stattests import GroupSummary

__all__ = ["SummaryDataset", "chickweight_summary"]


@dataclass(frozen=True)
class SummaryDataset:
    """Per-group summaries plus a provenance note, ordered as bundled."""

    note: str
    labels: tuple[str, ...]
    groups: tuple[GroupSummary, ...]

    def group(self, label: str) -> GroupSummary:
        return self.groups[self.labels.index(label)]


def chickweight_summary() -> SummaryDataset:
    """Chick weights on day 20 for protein diets 2 and 3 (summary
    statistics only; see the dataset note for provenance)."""
    raw = json.loads(
        resources.files("fivedecision.data")
        .joinpath("chickweight_summary.json")
        .read_text()
    )
    labels = tuple(g["label"] for g in raw["groups"])
    groups = tuple(
        GroupSummary(n=g["n"], mean=g["mean"], sd=g["sd"]) for g in raw["groups"]
    )
    return SummaryDataset(note=raw["note"], labels=labels, groups=groups)
